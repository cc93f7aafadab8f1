"""Chain-family and random cactus generators."""

from .chains import generate
from .random_cactus import RandomCactusParams, generate_random_cactus, parse_random_params

__all__ = [
    "RandomCactusParams",
    "generate",
    "generate_random_cactus",
    "parse_random_params",
]
