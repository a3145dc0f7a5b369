# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled walk kernel.  Must stay bit-for-bit equivalent to
`_walk_py.run_trials`; the RNG and neighbor-order contract is documented
there and locked by the parity tests."""

from libc.stdint cimport uint64_t, int64_t
from cpython.mem cimport PyMem_Malloc, PyMem_Free

cdef uint64_t GAMMA = 0x9E3779B97F4A7C15U


cdef inline uint64_t mix(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9U
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EBU
    return z ^ (z >> 31)


def run_trials(
    int n,
    offsets,
    int source,
    int target,
    long long trials,
    seed,
    long long max_steps,
    long long trial_offset=0,
):
    cdef int deg = len(offsets)
    cdef int i
    cdef int *offs = <int *>PyMem_Malloc(deg * sizeof(int))
    if offs is NULL:
        raise MemoryError()
    for i in range(deg):
        offs[i] = offsets[i]

    cdef uint64_t useed = <uint64_t>(int(seed) & ((1 << 64) - 1))
    # 2^64 mod deg, computed without overflowing 64 bits
    cdef uint64_t rem = (<uint64_t>0xFFFFFFFFFFFFFFFFU % <uint64_t>deg + 1) % <uint64_t>deg
    cdef uint64_t threshold = <uint64_t>0 - rem  # wraps to 2^64 - rem
    cdef uint64_t state, r
    cdef long long t, steps
    cdef int pos
    cdef long long truncated = 0
    total = 0      # Python ints: never overflow
    total_sq = 0
    try:
        for t in range(trial_offset, trial_offset + trials):
            state = mix(useed + (<uint64_t>(t + 1)) * GAMMA)
            pos = source
            steps = 0
            while pos != target and steps < max_steps:
                while True:
                    state = state + GAMMA
                    r = mix(state)
                    if rem == 0 or r < threshold:
                        break
                pos = (pos + offs[r % <uint64_t>deg]) % n
                steps += 1
            if pos != target:
                truncated += 1
            total += steps
            total_sq += steps * steps
    finally:
        PyMem_Free(offs)
    return total, total_sq, truncated
