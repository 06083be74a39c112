import os

from setuptools import Extension, setup

# The compiled kernel is an optimisation, not a requirement.  If Cython or a C
# compiler is unavailable the package falls back to the pure-Python kernels at
# import time, so any build failure here is deliberately non-fatal.
ext_modules = []
if os.environ.get("C2WEBS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("c2webs._kernels", ["src/c2webs/_kernels.pyx"])],
            language_level=3,
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
