"""Build script: compiles the optional matching kernel.

The extension is a pure accelerator; if Cython or a C compiler is missing
the build falls through and the package installs with the Python kernel.
"""

import numpy
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print("warning: compiled kernel skipped (%s); "
                  "falling back to the pure-Python kernel" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print("warning: %s failed to compile (%s); "
                  "falling back to the pure-Python kernel" % (ext.name, exc))


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "ifcs._kernel_cy",
        sources=["src/ifcs/_kernel_cy.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
