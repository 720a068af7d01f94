"""
Memoized property evaluation.
"""

import threading
from typing import Optional

from cachetools import LRUCache
from loguru import logger

from src.config.settings import settings
from src.core.errors import HypothesisError
from src.graphs.graph import Graph
from src.graphs.operations import edge_subgraph
from src.properties.spec import PropertySpec


class PropertyHandle:
    """
    A PropertySpec with a thread-safe memo of evaluations.

    Keys are labeled encodings (n, sorted edge list); answers are
    isomorphism-invariant, so a memoized value always equals fresh evaluation.
    """

    def __init__(self, spec: PropertySpec, memo_size: Optional[int] = None):
        self.spec = spec
        self._memo: LRUCache = LRUCache(maxsize=memo_size or settings.memo_size)
        self._lock = threading.Lock()
        self._monotone_verified: Optional[int] = None
        self._monotone_failure = None

    def evaluate(self, g: Graph) -> bool:
        key = g.key
        with self._lock:
            cached = self._memo.get(key)
        if cached is not None:
            return cached
        value = self.spec.holds(g)
        with self._lock:
            self._memo[key] = value
        return value

    def evaluate_subgraph(self, host: Graph, mask: int) -> bool:
        """Φ(host[S]) for the edge set S given by mask."""
        return self.evaluate(edge_subgraph(host, mask))

    def __call__(self, g: Graph) -> bool:
        return self.evaluate(g)

    @property
    def memo_size(self) -> int:
        with self._lock:
            return len(self._memo)

    def verify_edge_monotone(self, nmax: Optional[int] = None):
        """
        Exhaustively check edge-monotonicity on graphs with at most nmax vertices.

        Results are remembered per handle; a larger nmax triggers a new check.
        """
        # Local import: checks depends on this module
        from src.properties.checks import is_edge_monotone_upto

        nmax = settings.monotone_check_n if nmax is None else nmax
        if self._monotone_failure is not None and self._monotone_failure.graph.n <= nmax:
            return self._monotone_failure
        if self._monotone_verified is not None and self._monotone_verified >= nmax:
            return None
        result = is_edge_monotone_upto(self, nmax)
        if result.passed:
            self._monotone_verified = nmax
            return None
        self._monotone_failure = result
        return result

    def require_edge_monotone(self, nmax: Optional[int] = None) -> None:
        """
        Raises:
            HypothesisError: the property is not declared edge-monotone, or the
                declaration fails exhaustive verification
        """
        if not self.spec.declared_edge_monotone:
            raise HypothesisError(f"property {self.spec} is not declared edge-monotone")
        failure = self.verify_edge_monotone(nmax)
        if failure is not None:
            logger.warning(f"Edge-monotone declaration of {self.spec} failed: {failure.describe()}")
            raise HypothesisError(
                f"property {self.spec} is declared edge-monotone but {failure.describe()}"
            )

    def __str__(self) -> str:
        return str(self.spec)
