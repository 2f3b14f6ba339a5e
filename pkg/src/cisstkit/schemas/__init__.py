"""JSON Schema validation for cisstkit documents."""

from cisstkit.schemas.validator import SchemaIssue, iter_schema_issues, validate_data

__all__ = ["SchemaIssue", "iter_schema_issues", "validate_data"]
