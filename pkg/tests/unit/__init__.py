"""Unit tests for the indsub library."""
