"""
indsub - fixed-point witnesses, reductions and acceptance suites for #IndSub(Φ)
"""

__version__ = "0.3.0"
