from .manifest import build_manifest, sha256_file, verify_manifest, write_manifest
from .plots import GnuplotScripts
from .writer import ResultWriter, format_float

__all__ = [
    "GnuplotScripts",
    "ResultWriter",
    "build_manifest",
    "format_float",
    "sha256_file",
    "verify_manifest",
    "write_manifest",
]
