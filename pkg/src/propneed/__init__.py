"""Elicit the constructor properties that items of a formal corpus need."""
from .corpus import (
    Attachment,
    ConstructorDecl,
    Diagnostic,
    Environment,
    Item,
    Kind,
    Library,
    PropertyKind,
    attach,
    detach,
    property_schema,
    validate_library,
)
from .frontend import parse_library, serialize_library

__version__ = "0.1.0"

__all__ = [
    "Attachment",
    "ConstructorDecl",
    "Diagnostic",
    "Environment",
    "Item",
    "Kind",
    "Library",
    "PropertyKind",
    "__version__",
    "attach",
    "detach",
    "parse_library",
    "property_schema",
    "serialize_library",
    "validate_library",
]
