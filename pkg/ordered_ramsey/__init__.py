"""
Ordered Ramsey Toolkit - executable ordered-graph Ramsey theory.

This package decides the arrow relation F -> (H, H') for ordered graphs,
builds and certifies explicit ordered Ramsey graphs, refutes non-Ramsey
graphs with explicit colorings and enumerates small minimal Ramsey families.
"""

__version__ = "0.1.0"
