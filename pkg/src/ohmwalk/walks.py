"""Random-walk quantities on circulant graphs: closed-form first-passage,
commute, and mean-first-passage times for the complete-minus-opposite
family, an exact first-step-analysis oracle, and a seeded Monte Carlo
simulator.

The simulator's inner loop is compiled (`_walk_cy`) when the extension is
available and falls back to the pure-Python kernel otherwise; both are
bit-for-bit equivalent, so results never depend on the backend, on trial
chunking, or on execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .circulant import CirculantGraph
from .resistance import total_effective_resistance, two_point_resistance

try:
    from . import _walk_cy as _kernel

    _BACKEND = "cython"
except ImportError:  # extension not built; pure Python is ~30x slower
    from . import _walk_py as _kernel

    _BACKEND = "python"

# simulate() guards this so steps*steps stays within int64 in the kernel
_MAX_STEPS_LIMIT = 2**31

EXACT_SOLVE_LIMIT = 60  # first-step analysis switches to float LU above this


def kernel_backend() -> str:
    """Which walk kernel got selected at import: 'cython' or 'python'."""
    return _BACKEND


def fpt_closed(n: int, l: int) -> Fraction:
    """Expected steps from a vertex to one at circular distance l on the
    complete-minus-opposite graph: |E| * R(l) with |E| = n(n-3)/2."""
    return Fraction(n * (n - 3), 2) * two_point_resistance(n, l)


def commute_time_closed(n: int, l: int) -> Fraction:
    """Expected round-trip steps, 2|E|R(l); the graph is vertex-transitive
    so both one-way times are equal."""
    return 2 * fpt_closed(n, l)


def mfpt_closed(n: int, variant: str = "corrected") -> Fraction:
    """Mean first-passage time averaged over all targets (divided by n).

    variant='corrected' uses the true degree n-3 of the graph and equals
    (1/n) * sum over targets of fpt_closed.  variant='paper' reproduces
    the printed formula whose prefactor treats the degree as n-1; it
    overstates the mean by exactly (n-1)/(n-3).
    """
    if variant not in ("corrected", "paper"):
        raise ValueError(f"variant must be 'corrected' or 'paper', got {variant!r}")
    degree = (n - 3) if variant == "corrected" else (n - 1)
    return degree * total_effective_resistance(n) / n


def markov_fpt(
    g: CirculantGraph,
    target: int,
    exact: bool | None = None,
    cap: int = 2048,
) -> list[Fraction] | np.ndarray:
    """First-passage times to `target` by first-step analysis:

        h[target] = 0,    h[i] = 1 + (1/deg) * sum over neighbors j of h[j].

    Solved exactly over rationals up to EXACT_SOLVE_LIMIT vertices (the
    default route for small graphs) and by float LU beyond; `exact`
    overrides the choice.  Graphs above `cap` vertices are refused.
    """
    n = g.n
    if not 0 <= target < n:
        raise ValueError(f"target must be in [0, {n - 1}], got {target}")
    if n > cap:
        raise ValueError(f"graph has {n} vertices, above the solve cap {cap}")
    if exact is None:
        exact = n <= EXACT_SOLVE_LIMIT
    deg = g.degree
    if exact:
        return _solve_fpt_exact(g, target, deg)
    mat = np.zeros((n, n))
    rhs = np.full(n, float(deg))
    for i in range(n):
        mat[i, i] = deg
        for w in g.neighbors(i):
            mat[i, w] -= 1.0
    mat[target, :] = 0.0
    mat[target, target] = 1.0
    rhs[target] = 0.0
    return np.linalg.solve(mat, rhs)


def _solve_fpt_exact(g: CirculantGraph, target: int, deg: int) -> list[Fraction]:
    # scaled system (deg*I - A) h = deg*1, target row pinned to h = 0
    n = g.n
    aug = [[Fraction(0)] * (n + 1) for _ in range(n)]
    for i in range(n):
        if i == target:
            aug[i][i] = Fraction(1)
            continue
        aug[i][i] = Fraction(deg)
        for w in g.neighbors(i):
            aug[i][w] -= 1
        aug[i][n] = Fraction(deg)
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for r in range(col + 1, n):
            if aug[r][col] != 0:
                factor = aug[r][col] / aug[col][col]
                for c in range(col, n + 1):
                    aug[r][c] -= factor * aug[col][c]
    sol = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = aug[i][n] - sum(aug[i][j] * sol[j] for j in range(i + 1, n))
        sol[i] = acc / aug[i][i]
    return sol


@dataclass(frozen=True)
class WalkConfig:
    """Monte Carlo settings.  seed is a 64-bit value; max_steps of None
    means 100*n^2, resolved per graph at simulation time."""

    trials: int
    seed: int = 0
    max_steps: int | None = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.max_steps is not None and not 1 <= self.max_steps < _MAX_STEPS_LIMIT:
            raise ValueError(f"max_steps must be in [1, {_MAX_STEPS_LIMIT})")


@dataclass(frozen=True)
class FptEstimate:
    mean: float
    stderr: float
    trials: int
    truncated: int

    @property
    def valid(self) -> bool:
        return self.truncated == 0


def simulate_fpt(
    g: CirculantGraph,
    source: int,
    target: int,
    cfg: WalkConfig,
    trial_offset: int = 0,
) -> FptEstimate:
    """Estimate the source-to-target first-passage time by simulation.

    Deterministic given (cfg.seed, trial indices): every trial runs on its
    own substream, and the moments are reduced from exact integer sums, so
    splitting the work across calls via `trial_offset` (or any parallel
    schedule) reproduces the one-shot result bit for bit.
    """
    n = g.n
    if not (0 <= source < n and 0 <= target < n):
        raise ValueError("source and target must be vertices of the graph")
    if source == target:
        raise ValueError("source and target must differ")
    max_steps = cfg.max_steps if cfg.max_steps is not None else 100 * n * n
    max_steps = min(max_steps, _MAX_STEPS_LIMIT - 1)
    total, total_sq, truncated = _kernel.run_trials(
        n,
        g.neighbor_offsets(),
        source,
        target,
        cfg.trials,
        cfg.seed,
        max_steps,
        trial_offset,
    )
    mean = total / cfg.trials
    if cfg.trials > 1:
        var = Fraction(cfg.trials * total_sq - total * total, cfg.trials * (cfg.trials - 1))
        stderr = math.sqrt(float(var) / cfg.trials)
    else:
        stderr = float("inf")
    return FptEstimate(mean=mean, stderr=stderr, trials=cfg.trials, truncated=truncated)
