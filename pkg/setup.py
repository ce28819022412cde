"""Build hook for the optional compiled counting kernels.

The package is pure Python plus one small Cython extension. If Cython or a
C compiler is unavailable the extension is skipped and the package falls
back to the plain-Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "regsets._kernels._ckernels",
                ["src/regsets/_kernels/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
