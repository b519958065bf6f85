"""Tests for boundary_tda.criteria."""
