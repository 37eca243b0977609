"""Generalized Petersen graphs GP(n, k) and their double-index arithmetic.

Vertex ids are flat: outer vertex ``u_j`` is ``j`` and inner vertex ``v_j`` is
``n + j``.  Inner cycles are numbered ``1..d`` and the ``r``-th vertex of cycle
``i`` is ``v_{i-1+rk}``; the spoke at that vertex is ``s^i_r``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd


class Kind(enum.Enum):
    OUTER = "outer"
    INNER = "inner"
    SPOKE = "spoke"


@dataclass(frozen=True, order=True)
class Edge:
    """An undirected edge with ``u < v`` plus its position in the GP layout.

    For outer edges ``pos`` is ``j`` in ``u_j u_{j+1}``.  For inner edges
    ``cycle``/``pos`` give ``v^i_r v^i_{r+1}``; for spokes they give ``s^i_r``.
    """

    u: int
    v: int
    kind: Kind = field(compare=False)
    cycle: int = field(default=0, compare=False)
    pos: int = field(default=0, compare=False)
    connector: bool = field(default=False, compare=False)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)

    @property
    def category(self) -> tuple:
        if self.kind is Kind.OUTER:
            return ("Connector",) if self.connector else ("OuterCycle",)
        if self.kind is Kind.INNER:
            return ("InnerCycle", self.cycle)
        return ("Spoke", self.cycle, self.pos)

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"vertex {x} is not an endpoint of {self.endpoints}")


def norm(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def min_shift(n: int, k: int) -> int:
    """Smallest ``t >= 1`` with ``t*k = gcd(n, k) (mod n)``."""
    d = gcd(n, k)
    for t in range(1, n + 1):
        if (t * k - d) % n == 0:
            return t
    raise ArithmeticError(f"no shift for n={n}, k={k}")  # unreachable


class GPGraph:
    """Immutable GP(n, k) with ``n >= 2k``."""

    def __init__(self, n: int, k: int):
        if not isinstance(n, int) or not isinstance(k, int):
            raise TypeError("n and k must be integers")
        if k < 1:
            raise ValueError(f"GP(n, k) needs k >= 1, got k={k}")
        if n < 2 * k:
            raise ValueError(f"GP(n, k) needs n >= 2k, got n={n}, k={k}")
        if n < 3:
            # GP(2, 1) would need a doubled outer edge
            raise ValueError(f"GP(n, k) needs n >= 3 to be a simple graph, got n={n}")
        self.n = n
        self.k = k
        self.d = gcd(n, k)
        self.m = n // self.d
        self.t = min_shift(n, k)
        self.ell = (k * (self.m - 1)) % n

        edges: dict[tuple[int, int], Edge] = {}
        d, m = self.d, self.m
        for j in range(n):
            a, b = norm(j, (j + 1) % n)
            edges[(a, b)] = Edge(a, b, Kind.OUTER, pos=j, connector=(j + 1) % d == 0)
        for i in range(1, d + 1):
            for r in range(m):
                x = i - 1 + r * k
                y = x + k
                a, b = norm(n + x % n, n + y % n)
                if (a, b) not in edges:
                    edges[(a, b)] = Edge(a, b, Kind.INNER, cycle=i, pos=r)
                s = x % n
                edges[(s, n + s)] = Edge(s, n + s, Kind.SPOKE, cycle=i, pos=r)
        self.edges: tuple[Edge, ...] = tuple(sorted(edges.values()))
        self.edge_index: dict[tuple[int, int], int] = {
            e.endpoints: idx for idx, e in enumerate(self.edges)
        }
        adj: dict[int, set[int]] = {x: set() for x in range(2 * n)}
        for e in self.edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        self.adjacency: dict[int, frozenset[int]] = {x: frozenset(s) for x, s in adj.items()}

    def __repr__(self) -> str:
        return f"GPGraph(n={self.n}, k={self.k})"

    @property
    def vertices(self) -> range:
        return range(2 * self.n)

    @cached_property
    def incident(self) -> dict[int, tuple[int, ...]]:
        """Vertex -> ids of incident edges."""
        inc: dict[int, list[int]] = {x: [] for x in self.vertices}
        for idx, e in enumerate(self.edges):
            inc[e.u].append(idx)
            inc[e.v].append(idx)
        return {x: tuple(v) for x, v in inc.items()}

    def eid(self, a: int, b: int) -> int:
        try:
            return self.edge_index[norm(a, b)]
        except KeyError:
            raise KeyError(f"({a}, {b}) is not an edge of {self!r}") from None

    # --- double indices -------------------------------------------------

    def _check(self, i: int, r: int) -> None:
        if not 1 <= i <= self.d:
            raise IndexError(f"cycle index i={i} outside 1..{self.d}")
        if not 0 <= r < self.m:
            raise IndexError(f"position r={r} outside 0..{self.m - 1}")

    def outer_of(self, i: int, r: int) -> int:
        """Outer end ``u_{i-1+rk}`` of spoke ``s^i_r``."""
        self._check(i, r)
        return (i - 1 + r * self.k) % self.n

    def inner_of(self, i: int, r: int) -> int:
        """Flat id of ``v^i_r``."""
        return self.n + self.outer_of(i, r)

    def double_index(self, i: int, r: int) -> tuple[int, int]:
        return self.inner_of(i, r), self.outer_of(i, r)

    def locate(self, j: int) -> tuple[int, int]:
        """Inverse of :meth:`outer_of`: the (i, r) whose spoke ends at ``u_j``."""
        j %= self.n
        i = j % self.d + 1
        # r*k = j-(i-1) (mod n); multiply through by t/d after dividing by d
        q = (j - (i - 1)) // self.d
        return i, (q * self.t) % self.m

    # --- edge lookups ---------------------------------------------------

    def outer_edge(self, j: int) -> int:
        """Id of ``u_j u_{j+1}``."""
        j %= self.n
        return self.eid(j, (j + 1) % self.n)

    def spoke(self, i: int, r: int) -> int:
        x = self.outer_of(i, r % self.m)
        return self.eid(x, self.n + x)

    def inner_edge(self, i: int, r: int) -> int:
        """Id of ``v^i_r v^i_{r+1}``."""
        r %= self.m
        return self.eid(self.inner_of(i, r), self.inner_of(i, (r + 1) % self.m))

    def connector(self, r: int) -> int:
        """Connector ``u_{rd-1} u_{rd}``."""
        return self.outer_edge(r * self.d - 1)

    def connector_for_spoke_pair(self, r: int) -> tuple[int, int, int]:
        """Connector joining ``s^1_r`` and ``s^d_{r-t}``, with both spoke ids.

        The connector is ``u_{rk-1} u_{rk}``; it coincides with the r-th
        connector ``u_{rd-1} u_{rd}`` whenever ``k = d``.
        """
        if self.d < 2:
            raise ValueError("connectors need gcd(n, k) >= 2")
        r %= self.m
        x = self.outer_of(1, r)
        return self.outer_edge(x - 1), self.spoke(1, r), self.spoke(self.d, r - self.t)

    @cached_property
    def outer_cycle(self) -> tuple[int, ...]:
        return tuple(self.outer_edge(j) for j in range(self.n))

    @cached_property
    def spokes(self) -> tuple[int, ...]:
        return tuple(idx for idx, e in enumerate(self.edges) if e.kind is Kind.SPOKE)

    def inner_cycle(self, i: int) -> tuple[int, ...]:
        """Edges of ``C^i`` in order ``r = 0..m-1`` (one edge when m = 2)."""
        if self.m == 2:
            return (self.inner_edge(i, 0),)
        return tuple(self.inner_edge(i, r) for r in range(self.m))

    @cached_property
    def max_degree(self) -> int:
        return max(len(s) for s in self.adjacency.values())


def build_gp(n: int, k: int) -> GPGraph:
    return GPGraph(n, k)
