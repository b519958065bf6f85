"""Tests for boundary_tda.manifolds."""
