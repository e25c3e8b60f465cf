"""Exact finite subgroups of PGL(4) acting on P^3, their invariant quartics and orbits."""

__version__ = "0.1.0"
