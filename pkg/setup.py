"""Build the optional compiled subset-census kernel.

The package works without it (a pure-Python fallback is selected at import
time), so a missing compiler or missing Cython only costs speed.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Do not fail the install when the extension cannot be compiled."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            print(f"warning: skipping compiled kernel ({exc}); "
                  f"pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  f"pure-Python fallback will be used")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension(
            "espider._subsets_c",
            ["src/espider/_subsets_c.pyx"],
            extra_compile_args=["-O2"],
        )],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("warning: Cython not available; building without the compiled kernel")
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
