"""turanlab configuration package.

Centralized configuration management using Pydantic Settings.
"""
