"""Build script: compiles the optional search-kernel extension.

The package is fully functional without the extension (a pure-Python twin
of the kernels is selected at import time), so the extension is marked
optional and a missing compiler or Cython never breaks installation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "wheelkit.kernels._fast",
                ["src/wheelkit/kernels/_fast.pyx"],
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
except ImportError:
    extensions = []

setup(ext_modules=extensions)
