"""Models of ambiguous and partial information over finite relation and
matrix categories, built by enriching homsets with informational monads."""

__version__ = "0.1.0"
