"""Build script: compiles the optional kernel extension when Cython and a
C compiler are available, and degrades to the pure-Python package when
they are not (the package selects the backend at import time)."""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(
            f"warning: building the compiled kernels failed ({exc}); "
            "falling back to the pure-Python backend",
            file=sys.stderr,
        )


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        ["src/lunepot/_kernels_cy.pyx"],
        language_level="3",
    )
except ImportError:
    print(
        "warning: Cython not available; the pure-Python backend will be used",
        file=sys.stderr,
    )
    extensions = []

setup(
    ext_modules=extensions,
    cmdclass={"build_ext": optional_build_ext},
)
