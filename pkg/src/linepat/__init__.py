"""Exact cell structure of line patterns ``Ax + By = 1``."""

__version__ = "0.1.0"
