"""Build script for the optional compiled kernels.

The package is pure Python except for ``commensura._kernels._speedups``,
which accelerates mod-p polynomial arithmetic and finite matrix-group
closure.  If Cython (or a C compiler) is unavailable the extension is
skipped and the pure-Python kernels are used at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "commensura._kernels._speedups",
                ["src/commensura/_kernels/_speedups.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
