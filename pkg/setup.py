"""Builds the optional compiled BFS kernel.

The package works without it (pure Python fallback selected at import),
so a missing Cython or C compiler only costs speed, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("nameclust._fast", ["src/nameclust/_fast.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
