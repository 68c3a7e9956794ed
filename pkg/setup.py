"""Build hook for the optional compiled kernels.

When Cython or a C compiler is unavailable the package installs without the
extension and ``specchain.kernels`` falls back to the pure-Python module.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("specchain._kernels", ["src/specchain/_kernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )

setup(ext_modules=ext_modules)
