"""Primitive idempotents of type-A Hecke algebras: Dipper-James and fusion constructions."""

__version__ = "0.1.0"
