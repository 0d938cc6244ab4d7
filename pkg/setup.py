"""Build script: compiles the optional Ryser-permanent extension.

The package is fully functional without the extension; loqsg.kernels falls
back to the numpy implementation when the compiled module is absent.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "loqsg.kernels._ryser",
                ["src/loqsg/kernels/_ryser.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
