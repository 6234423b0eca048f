"""Finite-type Gauss map checks for parametrized surfaces and quadrics."""

__version__ = "0.1.0"
