"""Build script for the optional compiled kernel extension.

The package is pure Python plus one Cython extension holding the hot
kernels (matching, reduction sweep, forbidden-subgraph scans).  When
Cython or a C compiler is missing the extension is skipped and the
package falls back to the pure-Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "cliquecover._kernels._ckern",
                ["src/cliquecover/_kernels/_ckern.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=extensions)
