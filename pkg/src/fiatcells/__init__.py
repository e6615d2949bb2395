"""fiatcells: exact verification workbench for the cell combinatorics and
projective-bimodule calculus of fiat 2-categories."""

__version__ = "0.1.0"
