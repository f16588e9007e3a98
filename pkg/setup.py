"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (numpy fallback kernels are
selected at import time), so a missing compiler or Cython must not
break installation.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bpcgen.kernels._core",
                ["src/bpcgen/kernels/_core.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    print("Cython or numpy unavailable at build time; installing without compiled kernels")

setup(ext_modules=ext_modules)
