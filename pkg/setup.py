import os
from setuptools import setup, Extension

# The compiled enumeration kernel is optional: the package falls back to the
# pure-Python counter at import time if the extension is absent.
ext_modules = []
if os.environ.get("K3KIT_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("k3kit._enum_core", ["src/k3kit/_enum_core.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
