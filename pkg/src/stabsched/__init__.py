"""Syndrome-extraction circuit compiler for quantum LDPC codes."""

__version__ = "0.1.0"
