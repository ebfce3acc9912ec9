"""Build script: compiles the optional element-gain kernel extension.

The package works without the extension (a numpy fallback is selected at
import time); set NFISAC_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("NFISAC_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "nfisac._kernels._core",
                    ["src/nfisac/_kernels/_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        # No Cython at build time: ship the pure-python backend only.
        ext_modules = []

setup(ext_modules=ext_modules)
