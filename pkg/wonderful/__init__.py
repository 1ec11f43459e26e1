"""
Wonderful Compactification Toolkit
Exact arithmetic for Frobenius pushforwards of line bundles on wonderful
compactifications: summand conditions, subdivisor counts, blocks and ranks,
Steinberg-block line bundles, fixed-point K-classes and Chern characters.
"""

__version__ = "1.0.0"
