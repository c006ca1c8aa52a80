"""Exact probabilities that randomly drawn numbers land close together."""
