"""Build script: compiles the optional fast kernel extension when Cython
and a C compiler are available, otherwise installs pure-Python only."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/aslattice/_kernels/_fast.pyx"],
        compiler_directives={"language_level": "3", "boundscheck": False},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
