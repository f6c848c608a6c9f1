"""Exact invariants of finite-dimensional quiver algebras."""
