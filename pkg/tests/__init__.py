"""Test package for the toolkit."""
