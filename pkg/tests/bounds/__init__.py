"""Tests for boundary_tda.bounds."""
