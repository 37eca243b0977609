"""Extending partial 3-star colorings of paths and cycles.

Everything here works on plain color sequences: position ``j`` holds the
color of edge ``e_j = x_j x_{j+1}`` or ``None``.  On a cycle of length ``n``
edge ``e_{n-1}`` closes ``x_{n-1} x_0``.  "Clockwise" means increasing index.

The public wrappers at the bottom return :class:`PartialColoring` objects over
a :class:`SimpleGraph` path or cycle for callers that want graph objects.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coloring import Palette3, PartialColoring, SimpleGraph

Seq = list  # list[int | None]


class ExtensionInfeasible(Exception):
    """A precoloring cannot be extended by the requested rule."""


class Shape(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"


class Direction(enum.IntEnum):
    CLOCKWISE = 1
    ANTICLOCKWISE = -1


# --- sequence checks ------------------------------------------------------


def windows(length: int, cyclic: bool) -> list[tuple[int, int, int, int]]:
    if cyclic:
        if length < 4:
            return []
        return [tuple((s + j) % length for j in range(4)) for s in range(length)]
    return [(s, s + 1, s + 2, s + 3) for s in range(length - 3)]


def seq_violations(seq: Sequence[int | None], cyclic: bool) -> list[tuple[int, ...]]:
    """Index tuples witnessing improper pairs or bicolored 4-windows."""
    n = len(seq)
    bad: list[tuple[int, ...]] = []
    pairs = [(j, j + 1) for j in range(n - 1)]
    if cyclic and n >= 3:
        pairs.append((n - 1, 0))
    for a, b in pairs:
        if seq[a] is not None and seq[a] == seq[b]:
            bad.append((a, b))
    for w in windows(n, cyclic):
        c = [seq[x] for x in w]
        if None not in c and c[0] == c[2] and c[1] == c[3] and c[0] != c[1]:
            bad.append(w)
    return bad


def is_star_seq(seq: Sequence[int | None], cyclic: bool) -> bool:
    return not seq_violations(seq, cyclic)


def third(palette: Sequence[int], *used: int | None) -> list[int]:
    """Palette colors not in ``used``, ascending."""
    return sorted(c for c in palette if c not in used)


def _repeat(block: Sequence[int], count: int) -> list[int]:
    """``count`` edges of ``block`` repeated (``count`` a multiple of 3)."""
    assert count % 3 == 0 and count >= 0
    return list(block) * (count // 3)


# --- two precolored 3-paths on a cycle ------------------------------------


def two_path_windows(n: int, i: int, palette: Sequence[int]) -> dict[int, int]:
    """The precoloring: ``a,b,c`` on e_0..e_2 plus the window at ``e_i``."""
    a, b, c = palette
    if i == 0:
        second = (a, b, c)
    elif i == 1:
        second = (b, c, b)
    elif i in (2, n - 2):
        second = (c, b, a)
    elif i == n - 1:
        second = (b, a, b)
    else:
        second = (a, c, b)
    pre: dict[int, int] = {0: a, 1: b, 2: c}
    for off, col in enumerate(second):
        x = (i + off) % n
        if pre.get(x, col) != col:
            raise ValueError(f"windows at e_0 and e_{i} overlap inconsistently on a {n}-cycle")
        pre[x] = col
    return pre


def _case_start(n: int, a: int, b: int, c: int) -> list[int]:
    if n % 3 == 0:
        return _repeat((a, b, c), n)
    if n % 3 == 1:
        return _repeat((a, b, c), n - 1) + [b]
    return _repeat((a, b, c), n - 5) + [a, b, a, c, b]


def _case_one_step(n: int, a: int, b: int, c: int) -> list[int]:
    if n % 3 == 0:
        return [a, b] + _repeat((c, b, a), n - 3) + [c]
    if n % 3 == 1:
        return [a, b, c, b] + _repeat((a, c, b), n - 4)
    return [a, b, c, b] + _repeat((a, c, b), n - 5) + [c]


def _case_two_step(n: int, a: int, b: int, c: int) -> list[int]:
    if n % 3 == 0:
        return [a, b] + _repeat((c, b, a), n - 3) + [c]
    if n % 3 == 1:
        return [a, b] + _repeat((c, b, a), n - 4) + [c, b]
    return [a, b] + _repeat((c, b, a), n - 5) + [c, b, c]


def _case_apart(n: int, i: int, a: int, b: int, c: int) -> list[int]:
    if i % 3 == 0:
        left = _repeat((a, b, c), i)
    elif i % 3 == 1:
        left = _repeat((a, b, c), i - 1) + [b]
    else:
        left = _repeat((a, b, c), i - 2) + [a, b]
    rest = n - i
    if rest % 3 == 0:
        right = _repeat((a, c, b), rest)
    elif rest % 3 == 1:
        right = _repeat((a, c, b), rest - 1) + [c]
    else:
        right = _repeat((a, c, b), rest - 2) + [a, c]
    return left + right


def _mirror(seq: list[int]) -> list[int]:
    """Read a solution found from e_2 backwards: out[x] = seq[(2 - x) mod n]."""
    n = len(seq)
    return [seq[(2 - x) % n] for x in range(n)]


def cycle_two_paths_seq(n: int, i: int, palette: Sequence[int]) -> list[int]:
    """3-star coloring of an ``n``-cycle through both precolored windows."""
    if n == 5:
        raise ValueError("a 5-cycle has no 3-star edge coloring")
    if n < 3:
        raise ValueError(f"cycle length must be at least 3, got {n}")
    if not 0 <= i < n:
        raise ValueError(f"window start i={i} outside 0..{n - 1}")
    a, b, c = palette
    pre = two_path_windows(n, i, palette)
    if i == 0:
        seq = _case_start(n, a, b, c)
    elif i == 1:
        seq = _case_one_step(n, a, b, c)
    elif i == n - 1:
        # reversed reading from e_2 turns b,a,b,c into c,b,a,b: the i = 1 case with a <-> c
        seq = _mirror(_case_one_step(n, c, b, a))
    elif i == 2:
        seq = _case_two_step(n, a, b, c)
    elif i == n - 2:
        seq = _mirror(_case_two_step(n, c, b, a))
    else:
        seq = _case_apart(n, i, a, b, c)
    if any(seq[x] != col for x, col in pre.items()) or not is_star_seq(seq, True):
        raise ExtensionInfeasible(f"pattern for n={n}, i={i} does not extend the windows")
    return seq


# --- filling a gap of two edges on a path ---------------------------------


def gap_feasible(n: int, left: Sequence[int], right: Sequence[int]) -> bool:
    """Whether e_2, e_3 can be filled; ``right`` colors e_4..e_{n-1}."""
    if n <= 4:
        raise ValueError(f"path length must exceed 4, got {n}")
    if n <= 5:
        return True
    if right[0] in (left[0], left[1]):
        return True
    return right[1] != left[0]


def path_gap_seq(n: int, left: Sequence[int], right: Sequence[int], palette: Sequence[int]) -> list[int]:
    """Total 3-star coloring of the path e_0..e_{n-1} with e_2, e_3 filled."""
    if len(left) != 2 or len(right) != n - 4:
        raise ValueError("left must color e_0, e_1 and right must color e_4..e_{n-1}")
    a, b = left
    if a == b or {a, b} - set(palette) or set(right) - set(palette):
        raise ValueError("precolored edges must be properly colored from the palette")
    if not gap_feasible(n, left, right):
        raise ExtensionInfeasible(f"gap cannot be closed: right side starts {right[0]},{right[1]}")
    (c,) = third(palette, a, b)
    if n == 5:
        gap = [c, b if right[0] == a else a]
    elif b in (right[0], right[1]):
        (x,) = third(palette, right[0], right[1])
        gap = [c if x == a else a, x]
    else:
        gap = [c, b]
    seq = [a, b] + gap + list(right)
    if not is_star_seq(seq, False):
        raise ExtensionInfeasible("precolored parts are not 3-star on their own")
    return seq


# --- greedy processes -----------------------------------------------------


def _nbr_colors(seq: Seq, e: int) -> set[int]:
    out = set()
    if e - 1 >= 0 and seq[e - 1] is not None:
        out.add(seq[e - 1])
    if e + 1 < len(seq) and seq[e + 1] is not None:
        out.add(seq[e + 1])
    return out


def _at(seq: Seq, x: int) -> int | None:
    return seq[x] if 0 <= x < len(seq) else None


def _run(seq: Seq, palette: Sequence[int], direction: int, rule) -> list[int | None]:
    """Fill the gaps in ``direction``, each from the colors ``rule`` admits.

    Options are tried in ascending order and a choice that leaves a defect is
    undone, so the result is the smallest run of the rule that is 3-star.
    """
    s = list(seq) if direction > 0 else list(reversed(seq))
    if not is_star_seq(s, False):
        raise ExtensionInfeasible("precolored edges already contain a defect")
    pending = [e for e in range(len(s)) if s[e] is None]

    def ok(e: int) -> bool:
        if s[e] in (_at(s, e - 1), _at(s, e + 1)):
            return False
        for start in range(e - 3, e + 1):
            w = [_at(s, x) for x in range(start, start + 4)] if start >= 0 else [None]
            if len(w) == 4 and None not in w and w[0] == w[2] and w[1] == w[3]:
                return False
        return True

    def fill(q: int) -> bool:
        if q == len(pending):
            return True
        e = pending[q]
        for c in rule(s, e, palette):
            s[e] = c
            if ok(e) and fill(q + 1):
                return True
        s[e] = None
        return False

    if not fill(0):
        raise ExtensionInfeasible("no run of the process yields a 3-star coloring")
    return s if direction > 0 else list(reversed(s))


def _rule1(s: Seq, e: int, palette) -> list[int]:
    near = _nbr_colors(s, e)
    if len(near) == 1:
        return third(palette, _at(s, e - 1), _at(s, e - 2))
    return third(palette, *near)


def _rule2(s: Seq, e: int, palette) -> list[int]:
    near = _nbr_colors(s, e)
    ahead3, ahead4 = _at(s, e + 3), _at(s, e + 4)
    if len(near) == 1 and ahead3 is None:
        return third(palette, _at(s, e - 1), _at(s, e - 2))
    if ahead3 is not None and ahead4 is not None:
        return sorted({ahead3, ahead4} - {_at(s, e - 1)})
    return third(palette, *near)


def _colored_run(seq: Seq, from_left: bool) -> int:
    order = seq if from_left else list(reversed(seq))
    count = 0
    for c in order:
        if c is None:
            break
        count += 1
    return count


def process1_seq(seq: Seq, palette: Sequence[int]) -> list[int | None]:
    """Greedy fill from the end with two colored edges toward the other end."""
    if None not in seq:
        return list(seq)
    left, right = _colored_run(seq, True), _colored_run(seq, False)
    if left >= 2 and right >= 1:
        direction = Direction.CLOCKWISE
    elif right >= 2 and left >= 1:
        direction = Direction.ANTICLOCKWISE
    else:
        raise ValueError("process 1 needs two colored edges at one end and one at the other")
    return _run(seq, palette, direction, _rule1)


def process2_seq(seq: Seq, palette: Sequence[int], direction: int = Direction.CLOCKWISE) -> list[int | None]:
    """Fill with look-ahead to colored edges three and four steps ahead."""
    if None not in seq:
        return list(seq)
    if _colored_run(seq, True) < 2 or _colored_run(seq, False) < 2:
        raise ValueError("process 2 needs two colored edges at each end")
    return _run(seq, palette, direction, _rule2)


RULES = {1: _rule1, 2: _rule2}


class Plan:
    """Ordered process applications on positions of one cycle.

    Each step is ``(positions, process, direction)`` or a callable returning
    one from the current colors.  ``run`` fills the cycle; with
    ``explore=True`` it backtracks over the colors each rule admits instead of
    always taking the smallest, which is still a run of the same processes.
    """

    def __init__(self, cyc: Seq, palette: Sequence[int]):
        self.cyc = cyc
        self.palette = palette
        self.steps: list = []
        n = len(cyc)
        self._windows: dict[int, list] = {x: [] for x in range(n)}
        for w in windows(n, True):
            for x in set(w):
                self._windows[x].append(w)

    def add(self, step) -> "Plan":
        self.steps.append(step)
        return self

    def _local_ok(self, x: int) -> bool:
        s, n = self.cyc, len(self.cyc)
        if s[x] in (s[(x - 1) % n], s[(x + 1) % n]):
            return False
        for w in self._windows[x]:
            a, b, p, q = (s[z] for z in w)
            if None not in (a, b, p, q) and a == p and b == q:
                return False
        return True

    def run(self, explore: bool = True) -> bool:
        return self._step(0, explore)

    def _step(self, k: int, explore: bool) -> bool:
        if k == len(self.steps):
            return None not in self.cyc and is_star_seq(self.cyc, True)
        step = self.steps[k]
        if callable(step):
            step = step(self.cyc)
        positions, process, direction = step
        view = list(positions) if direction > 0 else list(reversed(positions))
        pending = [x for x in view if self.cyc[x] is None]
        return self._fill(k, view, pending, 0, RULES[process], explore)

    def _fill(self, k, view, pending, j, rule, explore) -> bool:
        if j == len(pending):
            return self._step(k + 1, explore)
        x = pending[j]
        sub = [self.cyc[y] for y in view]
        options = rule(sub, view.index(x), self.palette)
        if not explore:
            options = options[:1]
        for c in options:
            self.cyc[x] = c
            if (not explore or self._local_ok(x)) and self._fill(k, view, pending, j + 1, rule, explore):
                return True
        self.cyc[x] = None
        return False


def _arc(n: int, start: int, stop: int) -> list[int]:
    """Cycle positions start, start+1, ..., stop (inclusive, mod n)."""
    out = [start % n]
    while out[-1] != stop % n:
        out.append((out[-1] + 1) % n)
    return out


# --- three precolored edges on a cycle ------------------------------------


def _normalize_three(n: int, pre: Mapping[int, int]) -> list[tuple[int, int, int]]:
    """All (start, orientation, i): colored pair at start, start+o; third at offset i."""
    keys = set(pre)
    out = []
    for o in (1, -1):
        for p in sorted(keys):
            q = (p + o) % n
            if q not in keys:
                continue
            (r,) = keys - {p, q}
            i = (r - p) % n if o == 1 else (p - r) % n
            if 2 <= i <= n - 2:
                out.append((p, o, i))
    if not out:
        raise ValueError("precoloring needs two adjacent colored edges and a third one")
    return out


def _frame(n: int, p: int, o: int):
    """Map frame edge index -> cycle edge index for start ``p`` and orientation ``o``."""
    if o == 1:
        return lambda x: (p + x) % n
    # reflection: frame e_0 = cycle e_p, frame e_1 = cycle e_{p-1}
    return lambda x: (p - x) % n


def cycle_three_edges_scripted(
    n: int, pre: Mapping[int, int], palette: Sequence[int], explore: bool = True
) -> list[int]:
    """Shorter side by process 1, then the rest by process 2."""
    if n == 5:
        raise ValueError("a 5-cycle has no 3-star edge coloring")
    if len(pre) != 3:
        raise ValueError("exactly three precolored edges are required")
    if set(pre.values()) - set(palette):
        raise ValueError("precolored edges must use palette colors")
    # any adjacent pair may play x_0 x_1 x_2; try each framing in turn
    for p, o, i in _normalize_three(n, pre):
        to_cycle = _frame(n, p, o)
        a, b = pre[to_cycle(0)], pre[to_cycle(1)]
        if a == b:
            raise ValueError("adjacent precolored edges share a color")
        try:
            seq = _three_edges_frame(n, i, a, b, pre[to_cycle(i)], palette, explore)
        except ExtensionInfeasible:
            continue
        out = [0] * n
        for x in range(n):
            out[to_cycle(x)] = seq[x]
        return out
    raise ExtensionInfeasible(f"three-edge extension failed for n={n}, precoloring {dict(pre)}")


def _three_edges_frame(n: int, i: int, a: int, b: int, fi: int, palette, explore: bool) -> list[int]:
    (c,) = third(palette, a, b)
    if n - 1 - i < i - 2:
        # reflect so that the shorter side comes first: e_x -> e_{1-x}, swapping a and b
        seq = _three_edges_frame(n, (1 - i) % n, b, a, fi, palette, explore)
        return [seq[(1 - x) % n] for x in range(n)]
    if n - 1 - i == 2 and fi == c and n in (6, 7):
        return [a, b, a, c, b, c] if n == 6 else [a, b, c, a, c, b, c]
    cyc: Seq = [None] * n
    cyc[0], cyc[1], cyc[i] = a, b, fi

    def second(s):
        # anticlockwise when x0,x1,x2,x3 came out bicolored
        direction = Direction.ANTICLOCKWISE if s[2] == a else Direction.CLOCKWISE
        # x_{i-1}, x_i, P_2, x_1, x_2: e_{i-1} round to e_1 (e_1 twice when i = 2)
        return [(i - 1 + s) % n for s in range(n - i + 3)], 2, direction

    plan = Plan(cyc, palette).add((_arc(n, 0, i), 1, Direction.CLOCKWISE)).add(second)
    if not plan.run(explore):
        raise ExtensionInfeasible(f"three-edge extension failed for n={n}, i={i}")
    return cyc


# --- five constrained edges on a cycle -------------------------------------


def cycle_five_constraints_scripted(
    n: int, i: int, j: int, first: int, palette: Sequence[int], explore: bool = True
) -> list[int]:
    """Seeded decomposition into three paths filled by processes 1 and 2."""
    if n == 5:
        raise ValueError("a 5-cycle has no 3-star edge coloring")
    if not (2 <= i < j <= n - 2):
        raise ValueError(f"need 2 <= i < j <= n-2, got i={i}, j={j}, n={n}")
    if (j - i) % 2 or j - i < 2:
        raise ValueError(f"j - i must be even and at least 2, got {j - i}")
    if first not in palette:
        raise ValueError(f"color {first} not in palette")
    a, b, c = palette
    cyc: Seq = [None] * n
    cyc[0] = first
    if j - i == 2:
        for off, col in enumerate((b, a, c, b)):
            cyc[i - 1 + off] = col
    else:
        cyc[i - 1], cyc[i] = a, b
        cyc[j - 1], cyc[j] = b, c
    if not is_star_seq(cyc, True):
        raise ExtensionInfeasible("seed colors clash with the color of e_0")
    # P1 = e_i, e_{i-1}, ..., e_0 ; P3 = e_{j-1}, ..., e_{n-1}, e_0
    p1 = list(range(i, -1, -1))
    p3 = _arc(n, j - 1, 0)
    plan = Plan(cyc, palette)
    if len(p1) <= len(p3):
        plan.add((p1, 1, Direction.CLOCKWISE))
        # the longer path takes the now colored e_1 as its second end edge
        plan.add((p3 + [1], 2, Direction.ANTICLOCKWISE))
    else:
        plan.add((p3, 1, Direction.CLOCKWISE))
        plan.add(([n - 1] + p1[::-1], 2, Direction.ANTICLOCKWISE))
    if j - i > 2:
        plan.add(lambda s: (
            list(range(i - 1, j + 1)),
            2,
            Direction.CLOCKWISE if s[j - 1] == s[j] else Direction.ANTICLOCKWISE,
        ))
    if not plan.run(explore):
        raise ExtensionInfeasible(f"five-constraint extension failed for n={n}, i={i}, j={j}")
    return cyc


# --- exhaustive completion -------------------------------------------------


def complete_seq(
    seq: Sequence[int | None],
    palette: Sequence[int],
    cyclic: bool,
    accept=None,
) -> list[int] | None:
    """Smallest (lexicographic) 3-star completion of ``seq`` or ``None``.

    ``accept`` is an optional predicate on the finished sequence.
    """
    n = len(seq)
    s = list(seq)
    free = [x for x in range(n) if s[x] is None]
    by_pos: dict[int, list[tuple[int, ...]]] = {x: [] for x in range(n)}
    for w in windows(n, cyclic):
        for x in set(w):
            by_pos[x].append(w)

    def ok(x: int) -> bool:
        c = s[x]
        for y in ((x - 1) % n if cyclic else x - 1, (x + 1) % n if cyclic else x + 1):
            if 0 <= y < n and y != x and s[y] == c:
                return False
        for w in by_pos[x]:
            a, b, p, q = (s[z] for z in w)
            if None not in (a, b, p, q) and a == p and b == q:
                return False
        return True

    if not is_star_seq(s, cyclic):
        return None

    def rec(k: int) -> bool:
        if k == len(free):
            return accept is None or accept(s)
        x = free[k]
        for c in sorted(palette):
            s[x] = c
            if ok(x) and rec(k + 1):
                return True
        s[x] = None
        return False

    return s if rec(0) else None


def cycle_three_edges_seq(
    n: int, pre: Mapping[int, int], palette: Sequence[int], strict: bool = False
) -> tuple[list[int], bool]:
    """Extend three precolored edges (two adjacent) to a 3-star ``n``-cycle.

    Returns ``(colors, scripted)``; ``scripted`` is False when the greedy
    procedure got stuck and the completion came from exhaustive search.
    """
    try:
        return cycle_three_edges_scripted(n, pre, palette), True
    except ExtensionInfeasible:
        if strict:
            raise
    out = complete_seq([pre.get(x) for x in range(n)], palette, True)
    if out is None:
        raise ExtensionInfeasible(f"no 3-star extension of {dict(pre)} on a {n}-cycle")
    return out, False


def cycle_five_constraints_seq(
    n: int, i: int, j: int, first: int, palette: Sequence[int], strict: bool = False
) -> tuple[list[int], bool]:
    """3-star ``n``-cycle with F(x_i) = {a,b}, F(x_j) = {b,c}, e_0 = ``first``.

    Some parameter sets admit no such coloring (e.g. ``i = 2`` with
    ``first = b``); those raise :class:`ExtensionInfeasible`.
    """
    try:
        return cycle_five_constraints_scripted(n, i, j, first, palette), True
    except ExtensionInfeasible:
        if strict:
            raise
    a, b, c = palette

    def accept(s):
        return {s[i - 1], s[i]} == {a, b} and {s[j - 1], s[j]} == {b, c}

    seq: list[int | None] = [None] * n
    seq[0] = first
    out = complete_seq(seq, palette, True, accept)
    if out is None:
        raise ExtensionInfeasible(f"no coloring meets the constraints for n={n}, i={i}, j={j}")
    return out, False


# --- graph-level wrappers ---------------------------------------------------


@dataclass
class SegmentInstance:
    """A path or cycle, its precoloring by edge index, and a 3-color palette."""

    shape: Shape
    length: int
    precoloring: dict[int, int] = field(default_factory=dict)
    palette: Palette3 = field(default_factory=lambda: Palette3(0, 1, 2))
    direction: Direction = Direction.CLOCKWISE

    def __post_init__(self):
        for x in self.precoloring:
            if not 0 <= x < self.length:
                raise ValueError(f"precolored edge {x} outside 0..{self.length - 1}")

    @property
    def cyclic(self) -> bool:
        return self.shape is Shape.CYCLE

    def graph(self) -> SimpleGraph:
        if self.cyclic:
            return SimpleGraph.cycle(self.length)
        return SimpleGraph.path(self.length)

    def sequence(self) -> list[int | None]:
        return [self.precoloring.get(x) for x in range(self.length)]

    def to_coloring(self, seq: Sequence[int | None]) -> PartialColoring:
        g = self.graph()
        return PartialColoring(g, {x: c for x, c in enumerate(seq) if c is not None})


def _as_palette(palette) -> tuple[int, int, int]:
    return palette.as_tuple() if isinstance(palette, Palette3) else tuple(Palette3(*palette))


def extend_cycle_two_paths(n: int, i: int, palette=(0, 1, 2)) -> PartialColoring:
    seq = cycle_two_paths_seq(n, i, _as_palette(palette))
    return SegmentInstance(Shape.CYCLE, n).to_coloring(seq)


def path_gap_extension(n: int, left: Sequence[int], right: Sequence[int], palette=(0, 1, 2)) -> PartialColoring:
    seq = path_gap_seq(n, left, right, _as_palette(palette))
    return SegmentInstance(Shape.PATH, n).to_coloring(seq)


def process1(segment: SegmentInstance) -> PartialColoring:
    pal = _as_palette(segment.palette)
    return segment.to_coloring(process1_seq(segment.sequence(), pal))


def process2(segment: SegmentInstance) -> PartialColoring:
    pal = _as_palette(segment.palette)
    return segment.to_coloring(process2_seq(segment.sequence(), pal, segment.direction))


def extend_cycle_three_edges(n: int, precoloring: Mapping[int, int], palette=(0, 1, 2)) -> PartialColoring:
    seq, _ = cycle_three_edges_seq(n, precoloring, _as_palette(palette))
    return SegmentInstance(Shape.CYCLE, n).to_coloring(seq)


def extend_cycle_five_constraints(n: int, i: int, j: int, first: int, palette=(0, 1, 2)) -> PartialColoring:
    seq, _ = cycle_five_constraints_seq(n, i, j, first, _as_palette(palette))
    return SegmentInstance(Shape.CYCLE, n).to_coloring(seq)
