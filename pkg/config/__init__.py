"""Configuration package for liequiver."""
