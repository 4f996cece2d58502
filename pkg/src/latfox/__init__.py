"""Incremental concept lattice diagrams over cross tables."""

__version__ = "0.1.0"

from .context import AttributeColumn, FormalContext  # noqa: F401
from .engine import ChangeSet, DiagramState, build_state  # noqa: F401
from .engine import insert_column, remove_column, with_seed  # noqa: F401
from .errors import LatfoxError  # noqa: F401
