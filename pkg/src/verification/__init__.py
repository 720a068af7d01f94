"""Acceptance suites driven by the verify command."""

from .suites import CRITERIA, EDGE_MONOTONE_BUILTINS, random_colored_graph, run_criterion, run_suites

__all__ = ["CRITERIA", "EDGE_MONOTONE_BUILTINS", "random_colored_graph", "run_criterion", "run_suites"]
