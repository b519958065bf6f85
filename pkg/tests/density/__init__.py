"""Tests for boundary_tda.density."""
