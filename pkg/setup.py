"""Build script for the optional compiled kernels.

The package is fully functional without the extension: kadec._kernels
falls back to the pure-Python implementation when the compiled module is
missing (or when Cython is unavailable at build time).
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("kadec._kernels._core", ["src/kadec/_kernels/_core.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
