"""Tests package for liequiver."""
