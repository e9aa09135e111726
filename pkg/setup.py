import os

from setuptools import Extension, setup

# HAMEX_NO_EXT=1 installs the pure-Python package only.
ext_modules = []
if not os.environ.get("HAMEX_NO_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hamex._core",
                ["src/hamex/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
