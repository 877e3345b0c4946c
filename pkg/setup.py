"""Build hook for the optional compiled kernel extension.

The package works without the extension (a numpy fallback is selected at
import time), so the build must not fail on machines without a C compiler
or Cython.  Everything declarative lives in pyproject.toml.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "zetacodes._kernels._ckernels",
        sources=["src/zetacodes/_kernels/_ckernels.pyx"],
        optional=True,
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
    for e in ext_modules:
        e.optional = True
except ImportError:
    pass

setup(ext_modules=ext_modules)
