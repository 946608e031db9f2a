"""Optional compiled-kernel build.

The package is pure Python; when Cython is available the slack-scan kernel
(groupcut/_scan.py) is additionally compiled as groupcut._scan_c, which
groupcut.kernels prefers at import time.  Installing without Cython simply
skips the extension.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("groupcut._scan_c", ["src/groupcut/_scan.py"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
