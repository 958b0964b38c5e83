"""Build helper: compiles the echelon-kernel extension when Cython and a C
compiler are available; the package falls back to the pure-Python kernel
otherwise, so the build never hard-fails on a missing toolchain."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/quadop/kernel/_echelon_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
