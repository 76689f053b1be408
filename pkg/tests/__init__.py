"""Test suite for the cospec library."""
