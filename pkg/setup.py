"""Build the optional compiled GL_n(F_q) kernel; the package works without it."""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:  # no toolchain: pure-Python kernel only
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension(
            "monohecke.glnq._ckernel",
            ["src/monohecke/glnq/_ckernel.pyx"],
            include_dirs=[np.get_include()],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            optional=True,
        )],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
