import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the numpy
# backend at import time if the extension is missing. Set PULREC_PURE_PYTHON=1
# to skip compilation entirely.
ext_modules = []
if os.environ.get("PULREC_PURE_PYTHON") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "pulrec._kernels._speedups",
                    ["src/pulrec/_kernels/_speedups.pyx"],
                    include_dirs=[np.get_include()],
                    # -ffp-contract=off keeps results bit-identical with the
                    # numpy backend (no fused multiply-add reassociation).
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
