"""API for `isdc.core.objects`."""
from .abc import NumpyEncoder, ObjABC
from .dir import ObjDir
from .file import ObjFile

__all__ = ["NumpyEncoder", "ObjABC", "ObjDir", "ObjFile"]
