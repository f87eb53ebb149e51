"""Tests for xmodalg."""
