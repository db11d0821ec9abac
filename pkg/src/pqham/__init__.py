"""Vertex-transitive graphs of order a product of two primes: families,
quotients, and machine-checkable Hamilton-cycle certificates."""

__version__ = "0.1.0"
