"""ramseytype - Exact small-graph tools for Ramsey-type characterizations.

Builds the forbidden families of the nontrivial-vertex and vertex h-index
theorems, computes the vertex parameters they bound, and extracts induced
family members from graphs that break the bounds.
"""

__version__ = "0.1.0"
__author__ = "Chuck"
