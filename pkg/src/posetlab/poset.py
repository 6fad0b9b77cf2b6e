"""Finite posets, labelings and raw combinatorial enumeration.

Elements are opaque strings (integers are accepted and stringified on
construction).  Internally every element has a dense index into
``elements``; cover relations and reachability are kept index-based,
with reachability stored as per-element bitmasks.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    AlreadyComparable,
    CycleError,
    EmptyPoset,
    MissingOmega,
    UnknownElement,
)


class Poset:
    """A finite poset given by its Hasse diagram.

    ``covers`` is the transitively reduced set of index pairs (i, j)
    with element i covered by element j.  ``up[i]`` is the bitmask of
    indices j with i <= j (including i itself); ``down`` is the dual.
    Instances are immutable after construction.
    """

    __slots__ = ("elements", "covers", "up", "down", "up_covers", "down_covers",
                 "_index")

    def __init__(self, elements: Sequence[str], covers: Iterable[tuple[int, int]],
                 up: Sequence[int], down: Sequence[int]):
        self.elements = tuple(elements)
        self.covers = tuple(sorted(covers))
        self.up = tuple(up)
        self.down = tuple(down)
        up_covers = [[] for _ in self.elements]
        down_covers = [[] for _ in self.elements]
        for (i, j) in self.covers:
            up_covers[i].append(j)
            down_covers[j].append(i)
        self.up_covers = tuple(tuple(s) for s in up_covers)
        self.down_covers = tuple(tuple(s) for s in down_covers)
        self._index = {e: i for i, e in enumerate(self.elements)}

    # -- basic queries -------------------------------------------------

    @property
    def p(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        try:
            return self._index[str(element)]
        except KeyError:
            raise UnknownElement(f"unknown element {element!r}") from None

    def le_idx(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def le(self, x, y) -> bool:
        return self.le_idx(self.index(x), self.index(y))

    def comparable_idx(self, i: int, j: int) -> bool:
        return self.le_idx(i, j) or self.le_idx(j, i)

    def minimal_idx(self) -> list[int]:
        return [i for i in range(self.p) if not self.down_covers[i]]

    def maximal_idx(self) -> list[int]:
        return [i for i in range(self.p) if not self.up_covers[i]]

    def cover_names(self) -> list[tuple[str, str]]:
        return [(self.elements[i], self.elements[j]) for (i, j) in self.covers]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poset)
                and self.elements == other.elements
                and self.covers == other.covers)

    def __hash__(self) -> int:
        return hash((self.elements, self.covers))

    def __repr__(self) -> str:
        return f"Poset({list(self.elements)!r}, covers={self.cover_names()!r})"


class LabeledPoset:
    """A poset with either a vertex bijection omega or edge signs epsilon.

    ``omega`` is a tuple of labels indexed by element index (a bijection
    onto 1..p); ``epsilon`` maps cover index-pairs to +1/-1.  Exactly one
    of the two is given at construction; ``signs()`` derives epsilon from
    omega when needed.
    """

    __slots__ = ("poset", "omega", "epsilon")

    def __init__(self, poset: Poset, omega=None, epsilon=None):
        if (omega is None) == (epsilon is None):
            raise ValueError("give exactly one of omega, epsilon")
        self.poset = poset
        self.omega = tuple(omega) if omega is not None else None
        self.epsilon = dict(epsilon) if epsilon is not None else None
        if self.omega is not None and sorted(self.omega) != list(range(1, poset.p + 1)):
            raise ValueError("omega must be a bijection onto 1..p")
        if self.epsilon is not None:
            if set(self.epsilon) != set(poset.covers):
                raise ValueError("epsilon must assign a sign to every cover")
            if any(s not in (1, -1) for s in self.epsilon.values()):
                raise ValueError("signs must be +1 or -1")

    @classmethod
    def with_omega(cls, poset: Poset, omega: Mapping) -> "LabeledPoset":
        labels = [None] * poset.p
        for name, lab in omega.items():
            labels[poset.index(name)] = int(lab)
        if any(v is None for v in labels):
            raise ValueError("omega must label every element")
        return cls(poset, omega=labels)

    @classmethod
    def with_epsilon(cls, poset: Poset, epsilon) -> "LabeledPoset":
        """epsilon: mapping (x, y) -> sign or iterable of (x, y, sign)."""
        if isinstance(epsilon, Mapping):
            items = [(x, y, s) for (x, y), s in epsilon.items()]
        else:
            items = list(epsilon)
        signs = {}
        for x, y, s in items:
            signs[(poset.index(x), poset.index(y))] = int(s)
        return cls(poset, epsilon=signs)

    @property
    def has_omega(self) -> bool:
        return self.omega is not None

    def omega_map(self) -> dict[str, int]:
        if self.omega is None:
            raise MissingOmega("labeling has edge signs only")
        return {e: w for e, w in zip(self.poset.elements, self.omega)}

    def signs(self) -> dict[tuple[int, int], int]:
        """Edge signs on cover index-pairs, derived from omega if needed."""
        if self.epsilon is not None:
            return dict(self.epsilon)
        return {(i, j): (1 if self.omega[i] < self.omega[j] else -1)
                for (i, j) in self.poset.covers}

    def sign_items(self) -> list[tuple[str, str, int]]:
        els = self.poset.elements
        return sorted((els[i], els[j], s) for (i, j), s in self.signs().items())

    def __eq__(self, other) -> bool:
        return (isinstance(other, LabeledPoset) and self.poset == other.poset
                and self.omega == other.omega and self.epsilon == other.epsilon)

    def __hash__(self) -> int:
        eps = None if self.epsilon is None else tuple(sorted(self.epsilon.items()))
        return hash((self.poset, self.omega, eps))

    def __repr__(self) -> str:
        if self.omega is not None:
            return f"LabeledPoset({self.poset!r}, omega={self.omega_map()!r})"
        return f"LabeledPoset({self.poset!r}, epsilon={self.sign_items()!r})"


# -- construction ------------------------------------------------------

def _toposort(n: int, succ: Sequence[Iterable[int]]) -> list[int]:
    indeg = [0] * n
    for i in range(n):
        for j in succ[i]:
            indeg[j] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for j in succ[v]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    if len(order) != n:
        raise CycleError("cover relations contain a directed cycle")
    return order


def from_cover_relations(elements: Iterable, covers: Iterable[tuple]) -> Poset:
    """Build a poset from elements and (redundant) cover pairs.

    The input pairs may contain transitive shortcuts; the stored cover
    set is the transitive reduction of the generated order.
    """
    names = [str(e) for e in elements]
    if not names:
        raise EmptyPoset("posets must be non-empty")
    if len(set(names)) != len(names):
        raise ValueError("duplicate element identifiers")
    index = {e: i for i, e in enumerate(names)}
    n = len(names)
    succ = [set() for _ in range(n)]
    for pair in covers:
        x, y = pair
        x, y = str(x), str(y)
        if x not in index or y not in index:
            raise UnknownElement(f"cover pair {pair!r} references unknown element")
        if x == y:
            raise CycleError(f"self-loop on {x!r}")
        succ[index[x]].add(index[y])
    order = _toposort(n, succ)
    # reflexive-transitive closure as bitmasks, processed top-down
    up = [0] * n
    for v in reversed(order):
        m = 1 << v
        for j in succ[v]:
            m |= up[j]
        up[v] = m
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if up[i] >> j & 1:
                down[j] |= 1 << i
    reduced = []
    for i in range(n):
        for j in succ[i]:
            strictly_between = (up[i] & down[j]) & ~(1 << i) & ~(1 << j)
            if not strictly_between:
                reduced.append((i, j))
    return Poset(names, reduced, up, down)


def induced_subposet(poset: Poset, names: Sequence[str]) -> Poset:
    """Subposet induced on the given elements (stored order preserved)."""
    idxs = sorted(poset.index(x) for x in names)
    sub = [poset.elements[i] for i in idxs]
    pairs = [(poset.elements[i], poset.elements[j])
             for i in idxs for j in idxs
             if i != j and poset.le_idx(i, j)]
    return from_cover_relations(sub, pairs)


# -- enumeration -------------------------------------------------------

def _extensions_idx(poset: Poset) -> Iterator[tuple[int, ...]]:
    """All linear extensions as index tuples, lexicographic by index."""
    n = poset.p
    down_masks = [poset.down[i] & ~(1 << i) for i in range(n)]
    placed = 0
    seq: list[int] = []

    def rec():
        nonlocal placed
        if len(seq) == n:
            yield tuple(seq)
            return
        for v in range(n):
            if placed >> v & 1:
                continue
            if down_masks[v] & ~placed:
                continue
            placed |= 1 << v
            seq.append(v)
            yield from rec()
            seq.pop()
            placed &= ~(1 << v)

    return rec()


@lru_cache(maxsize=4096)
def _extensions_cached(poset: Poset) -> tuple[tuple[int, ...], ...]:
    return tuple(_extensions_idx(poset))


def linear_extensions(poset: Poset) -> Iterator[tuple[str, ...]]:
    """Lazily yield every linear extension as a tuple of element names."""
    for ext in _extensions_idx(poset):
        yield tuple(poset.elements[i] for i in ext)


def count_linear_extensions(poset: Poset) -> int:
    """Number of linear extensions, by removal of minimal elements (memoized)."""
    n = poset.p
    down_masks = [poset.down[i] & ~(1 << i) for i in range(n)]
    memo: dict[int, int] = {}

    def count(placed: int) -> int:
        if placed == (1 << n) - 1:
            return 1
        if placed in memo:
            return memo[placed]
        total = 0
        for v in range(n):
            if not (placed >> v & 1) and not (down_masks[v] & ~placed):
                total += count(placed | 1 << v)
        memo[placed] = total
        return total

    return count(0)


def jordan_holder_set(lp: LabeledPoset) -> Iterator[tuple[int, ...]]:
    """Label sequences of the linear extensions (requires omega)."""
    if not lp.has_omega:
        raise MissingOmega("Jordan-Holder set needs a vertex labeling")
    for ext in _extensions_idx(lp.poset):
        yield tuple(lp.omega[i] for i in ext)


def maximal_chains(poset: Poset) -> list[tuple[str, ...]]:
    """Every saturated minimal-to-maximal chain, as element-name tuples."""
    out: list[tuple[str, ...]] = []

    def climb(chain: list[int]):
        ups = poset.up_covers[chain[-1]]
        if not ups:
            out.append(tuple(poset.elements[i] for i in chain))
            return
        for j in ups:
            chain.append(j)
            climb(chain)
            chain.pop()

    for m in poset.minimal_idx():
        climb([m])
    return out


def principal_ideal(poset: Poset, y) -> Poset:
    """Induced subposet on {x : x <= y}."""
    yi = poset.index(y)
    names = [poset.elements[i] for i in range(poset.p) if poset.down[yi] >> i & 1]
    return induced_subposet(poset, names)


def dual(lp: LabeledPoset) -> LabeledPoset:
    """Order reversed, every edge sign negated.  An involution."""
    signs = lp.signs()
    dp = from_cover_relations(lp.poset.elements,
                              [(lp.poset.elements[j], lp.poset.elements[i])
                               for (i, j) in lp.poset.covers])
    eps = {}
    for (i, j), s in signs.items():
        eps[(dp.index(lp.poset.elements[j]), dp.index(lp.poset.elements[i]))] = -s
    return LabeledPoset(dp, epsilon=eps)


def dual_poset(poset: Poset) -> Poset:
    return from_cover_relations(poset.elements,
                                [(poset.elements[j], poset.elements[i])
                                 for (i, j) in poset.covers])


def extend_with_relation(poset: Poset, x, y) -> Poset:
    """Transitive closure of the order plus x < y (x, y incomparable)."""
    xi, yi = poset.index(x), poset.index(y)
    if poset.comparable_idx(xi, yi):
        raise AlreadyComparable(f"{x!r} and {y!r} are already comparable")
    pairs = [(poset.elements[i], poset.elements[j])
             for i in range(poset.p) for j in range(poset.p)
             if i != j and poset.le_idx(i, j)]
    pairs += [(poset.elements[a], poset.elements[b])
              for a in range(poset.p) if poset.le_idx(a, xi)
              for b in range(poset.p) if poset.le_idx(yi, b)]
    return from_cover_relations(poset.elements, pairs)
