"""Wiener polarity index of graphs, with a linear-time formula for cactus graphs."""
