"""Build script: compiles the optional row-reduction kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so any failure to build it is downgraded to a warning.
"""

import sys

from setuptools import setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("skewrec: Cython not available, building without fast kernel",
              file=sys.stderr)
        return []
    try:
        return cythonize(
            ["src/skewrec/_fastkernel.pyx"],
            language_level=3,
        )
    except Exception as exc:  # pragma: no cover
        print(f"skewrec: fast kernel skipped ({exc})", file=sys.stderr)
        return []


setup(ext_modules=extensions())
