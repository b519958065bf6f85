"""Tests for boundary_tda.special_functions."""
