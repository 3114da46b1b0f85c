"""Open systems as structured and decorated cospans over finite sets and graphs."""
__version__ = "0.1.0"
