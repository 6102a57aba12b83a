"""Build script: compiles the optional fast kernel when Cython is available.

The package is fully functional without the extension; the pure-Python
twin of the kernel is selected at import time if the build is skipped
or fails.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"warning: skipping fast kernel build ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc})")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("lssrings._fastkernel", ["src/lssrings/_fastkernel.pyx"])],
        language_level=3,
    )
except ImportError:
    print("warning: Cython not available, installing pure-Python kernel only")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
