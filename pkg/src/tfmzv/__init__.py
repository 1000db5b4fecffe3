"""Interpolated finite multiple zeta values: exact symbolic algebra and mod-p verification."""

__version__ = "0.1.0"
