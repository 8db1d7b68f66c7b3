"""Exact conformal-block ranks on nodal curves."""
