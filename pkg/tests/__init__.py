"""Test suite for circulantlab."""
