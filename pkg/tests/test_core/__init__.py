"""Tests for the linear algebra and algebra operations."""
