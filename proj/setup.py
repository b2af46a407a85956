from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

# The extension carries the whole C++ core; the pure-python layer in
# python/tenskit only re-exports it.
ext = Pybind11Extension(
    "tenskit._core",
    sorted(glob("src/*.cpp")) + ["src/python/bindings.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
