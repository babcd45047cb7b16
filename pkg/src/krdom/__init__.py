"""Exact k-tuple (total / restrained) domination and domatic numbers on small graphs."""

__version__ = "0.1.0"
