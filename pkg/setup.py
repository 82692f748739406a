"""Build script. The compiled kernel extension is optional: if Cython or a C
compiler is unavailable the package installs pure-Python only and selects the
fallback kernels at import time."""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extension_modules():
    if os.environ.get("CUBEROW_NO_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension("cuberow._speedups", ["src/cuberow/_speedups.pyx"])
    return cythonize([ext], compiler_directives={"language_level": "3"})


class optional_build_ext(build_ext):
    """Carry on with a pure-Python install when the extension fails to build."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, header trouble, ...
            print(f"warning: skipping compiled kernels ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc})", file=sys.stderr)


setup(
    ext_modules=extension_modules(),
    cmdclass={"build_ext": optional_build_ext},
)
