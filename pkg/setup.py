import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BERGESAT_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "bergesat._kernels_cy",
                    sources=["src/bergesat/_kernels_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install pure-Python only, the kernel
        # selector falls back automatically.
        ext_modules = []

setup(ext_modules=ext_modules)
