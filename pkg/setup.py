"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension: ``walllat.kernels``
falls back to numpy-based implementations when the compiled module is absent
(or when WALLLAT_PURE_PY=1 is set).  ``benchmarks/bench_kernels.py`` compares
the two backends.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - build without Cython ships no extension
    ext_modules = []
else:
    extension = Extension(
        "walllat.kernels._compiled",
        ["src/walllat/kernels/_compiled.pyx"],
        extra_compile_args=["-O3"],
    )
    extension.optional = True  # a failed compile must not break the install
    ext_modules = cythonize([extension], language_level=3)

setup(ext_modules=ext_modules)
