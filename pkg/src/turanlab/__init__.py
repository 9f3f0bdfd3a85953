"""turanlab - exact toolkit for Turán numbers of blow-ups.

Graph constructions, decomposition families, subgraph containment and
desk-scale extremal-number search, with verification recipes that check
finite claims about blow-ups of cycles and trees mechanically.
"""

from turanlab.version import __version__


__all__ = ["__version__"]
