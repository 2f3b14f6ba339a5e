"""cisstkit schema files package.

JSON Schema documents for graph, family and run-manifest artifacts.
Schemas are accessed via importlib.resources, not filesystem paths.
"""

__version__ = "1.0.0"
