"""Tests for boundary_tda."""
