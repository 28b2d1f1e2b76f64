import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The scan kernel is optional: lpoly falls back to numpy when it is absent.
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "lpoly._scan",
                ["src/lpoly/_scan.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
