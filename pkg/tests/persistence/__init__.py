"""Tests for boundary_tda.persistence."""
