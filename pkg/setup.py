from setuptools import Extension, setup

# The pair-coverage kernel is the only hot loop; everything else stays pure
# Python.  When Cython is unavailable the build simply omits the extension
# and the package falls back to the pure kernel at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("bicyclic._cover", ["src/bicyclic/_cover.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
