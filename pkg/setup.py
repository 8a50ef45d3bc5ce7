"""Build script for the optional compiled kernel.

The package is pure Python plus one Cython extension (hyptile._kernels)
holding the hot loops.  The extension is marked optional: if Cython or a
C compiler is unavailable the build still succeeds and the package falls
back to the pure-Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hyptile._kernels",
                ["src/hyptile/_kernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
