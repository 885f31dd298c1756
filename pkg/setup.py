"""Build script: compiles the optional search kernels when Cython and a C
compiler are available, and degrades to the pure-Python fallback otherwise."""

import warnings

from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:
    warnings.warn("Cython not found; building without the compiled search kernels.")
    cythonize = None


ext_modules = []
if cythonize is not None:
    try:
        ext_modules = cythonize(
            ["src/ufw/largeness/kernels/_ckernels.pyx"],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except Exception as exc:  # pragma: no cover - depends on toolchain
        warnings.warn("Cython build failed (%s); using the pure-Python kernels." % exc)
        ext_modules = []

setup(ext_modules=ext_modules)
