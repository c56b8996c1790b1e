"""Build script for the optional compiled kernels.

The package works without the extension: folkman.kernels falls back to the
pure-Python implementation when folkman._kernels_c is not importable.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "folkman._kernels_c",
                ["src/folkman/_kernels_c.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
