"""Command modules for hv-algebra."""
