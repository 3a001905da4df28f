from .api import ToolApi
from .catalog import ENTRIES, TOOL_NAMES, catalog_text, parameter_schemas, shipped_catalog_text

__all__ = [
    "ENTRIES",
    "TOOL_NAMES",
    "ToolApi",
    "catalog_text",
    "parameter_schemas",
    "shipped_catalog_text",
]
