"""
taxicab-forge - exact generation and certification of solution families
for A^3 + B^3 = C^3 + D^3 and A^4 + B^4 + C^4 + D^4 + E^4 = F^4
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
