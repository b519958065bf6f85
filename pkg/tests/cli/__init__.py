"""Tests for boundary_tda.cli."""
