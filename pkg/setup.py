"""Build script.

The compiled kernel (ncfact.kernels._fastperm) is optional: if Cython or a C
compiler is unavailable the install still succeeds and the package falls back
to the pure-Python kernel at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernel ({exc}); "
                  "pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); "
                  "pure-Python fallback will be used")


ext_modules = []
if not os.environ.get("NCFACT_NO_EXT"):
    try:
        from Cython.Build import cythonize
        ext_modules = cythonize(
            [Extension("ncfact.kernels._fastperm",
                       ["src/ncfact/kernels/_fastperm.pyx"])],
            language_level=3,
        )
    except ImportError:
        print("warning: Cython not available; building without compiled kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
