"""Almost-conjugate finite subgroups of spin groups and exact volumes of homogeneous spaces."""
from importlib import metadata as _metadata

try:
    __version__ = _metadata.version("artifact")
except _metadata.PackageNotFoundError:  # pragma: no cover
    __version__ = "0+unknown"
