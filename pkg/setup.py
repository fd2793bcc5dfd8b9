"""Build script: compiles the optional C extension for the minor-scan kernels.

The package works without the extension (a pure-Python/numpy fallback is
selected at import); the build therefore degrades gracefully when Cython or
a C compiler is unavailable.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/singres/_kernels.pyx"],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"singres: building without compiled kernels ({exc!r})")

setup(ext_modules=ext_modules)
