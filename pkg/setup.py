"""Builds the optional compiled eigenvalue kernel.

Without Cython the package still installs and the pure-Python kernel is
used at import.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize

    ext = Extension(
        "jonesrep._eig_cy",
        ["src/jonesrep/_eig_cy.pyx"],
        include_dirs=[np.get_include()],
    )
    ext_modules = cythonize(ext, compiler_directives={"language_level": "3"})
except ImportError:
    pass

setup(ext_modules=ext_modules)
