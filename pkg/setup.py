"""Build script: compiles the optional max-flow extension core.

The package works without the extension (a pure-Python solver is selected
at import time), so a missing compiler or Cython only costs speed.
Set USCUT_NO_EXT=1 to skip the compile step entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a warning, not an install failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            print(f"warning: skipping compiled core ({exc}); using the pure-Python solver")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); using the pure-Python solver")


ext_modules = []
if os.environ.get("USCUT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "uscut._core._maxflow_cy",
                    ["src/uscut/_core/_maxflow_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython unavailable; using the pure-Python solver")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
