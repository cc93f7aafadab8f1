"""Command-line surface: compute, census, generate, generate-random, verify."""
