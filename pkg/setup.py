"""Build script for the optional compiled sampling kernels.

The package works without the extension: when ``diskbezier._ckernels`` is
missing (no compiler, no Cython) the pure numpy kernels are selected at
import time.  Set DISKBEZIER_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Carry on with the pure-Python kernels if compilation fails."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # compiler missing, broken toolchain, ...
            print(f"warning: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print(f"warning: skipping compiled kernels ({exc})")


def extensions():
    if os.environ.get("DISKBEZIER_NO_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "diskbezier._ckernels",
        ["src/diskbezier/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
