"""Sub-permutations of permutations and the probability that a pattern survives in them."""

__version__ = "0.1.0"
