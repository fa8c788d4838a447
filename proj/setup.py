"""CMake-driven build of the benjamin_mtc._core extension.

The canonical build system is CMake; this shim lets `pip install` reuse it.
Use `pip install --no-build-isolation .` so the pre-installed pybind11 and
numpy are visible to the build.
"""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).parent.resolve()
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
            check=True,
        )
        built = list((build_dir / "python" / "benjamin_mtc").glob("_core.*"))
        if not built:
            raise RuntimeError("CMake did not produce the _core module")
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_bytes(built[0].read_bytes())


setup(
    ext_modules=[CMakeExtension("benjamin_mtc._core")],
    cmdclass={"build_ext": CMakeBuild},
)
