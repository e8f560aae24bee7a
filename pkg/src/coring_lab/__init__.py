"""Exact finite-dimensional corings, comatrix corings and descent over Q and GF(p)."""

__version__ = "0.1.0"
