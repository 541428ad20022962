from setuptools import Extension, setup

# The compiled kernel is optional: if Cython (or a C compiler) is missing the
# package falls back to the pure-Python kernels at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("foxtorsion._poly_core", ["src/foxtorsion/_poly_core.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
