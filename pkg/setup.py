import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SUPERSTRING_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("superstring._kernels", ["src/superstring/_kernels.pyx"])],
            language_level="3",
        )
    except ImportError:
        # No Cython at build time: install with the pure-Python kernels only.
        ext_modules = []

setup(ext_modules=ext_modules)
