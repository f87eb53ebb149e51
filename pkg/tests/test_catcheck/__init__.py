"""Tests for enumeration and categorical checks."""
