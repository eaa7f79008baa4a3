from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("tourpat._ckernels", ["src/tourpat/_ckernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
else:
    # without Cython the package still works through the pure-Python kernels
    ext_modules = []

setup(ext_modules=ext_modules)
