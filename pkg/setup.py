from setuptools import Extension, setup

# The compiled walk kernel is optional: without Cython (or a working C
# toolchain) the package falls back to the pure-Python kernel at import.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "ohmwalk._walk_cy",
                ["src/ohmwalk/_walk_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
