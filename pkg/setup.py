"""Build script: compiles the optional accelerator extension when Cython is present.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so any build failure here degrades gracefully to
the pure-Python wheel.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "beltrami._sweeps",
                ["src/beltrami/_sweeps.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
