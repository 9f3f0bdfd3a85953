"""turanlab observability package.

Structured logging and search-effort metrics.
"""
