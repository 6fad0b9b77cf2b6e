"""Poset generation: exhaustive up to isomorphism, and random.

Exhaustive generation inserts a new element into every smaller
representative with every compatible (ideal, filter) pair and dedups by
a canonical form of the Hasse digraph.  Per-size class counts are
checked against the known sequence 1, 2, 5, 16, 63, 318, 2045 as a
self-test in the suite harness.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product

from .errors import TooLarge, TooManyEdges
from .grading import canonical_rank01, parity_classification
from .poset import LabeledPoset, Poset, from_cover_relations

MAX_EXHAUSTIVE = 7
MAX_EPSILON_EDGES = 12


def canonical_key(poset: Poset):
    """Isomorphism-invariant key: minimal cover matrix over label maps
    that respect a structure-invariant refinement."""
    n = poset.p
    inv = [(bin(poset.down[i]).count("1"), bin(poset.up[i]).count("1"),
            len(poset.down_covers[i]), len(poset.up_covers[i]))
           for i in range(n)]
    for _ in range(2):
        inv = [(inv[i],
                tuple(sorted(inv[j] for j in poset.up_covers[i])),
                tuple(sorted(inv[j] for j in poset.down_covers[i])))
               for i in range(n)]
    order = sorted(range(n), key=lambda i: (inv[i], 0))
    blocks = []
    for i in order:
        if blocks and inv[blocks[-1][-1]] == inv[i]:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    best = None
    for perms in product(*(permutations(b) for b in blocks)):
        pos = {}
        k = 0
        for blk in perms:
            for v in blk:
                pos[v] = k
                k += 1
        code = 0
        for (i, j) in poset.covers:
            code |= 1 << (pos[i] * n + pos[j])
        if best is None or code < best:
            best = code
    return (n, best)


def _ideals_and_filters(poset: Poset):
    n = poset.p
    ideals = [mask for mask in range(1 << n)
              if all((poset.down[i] & ~(1 << i)) & ~mask == 0
                     for i in range(n) if mask >> i & 1)]
    filters = [mask for mask in range(1 << n)
               if all((poset.up[i] & ~(1 << i)) & ~mask == 0
                      for i in range(n) if mask >> i & 1)]
    return ideals, filters


def _insertions(poset: Poset):
    """All posets obtained by inserting one new element."""
    n = poset.p
    ideals, filters = _ideals_and_filters(poset)
    new = str(n)
    names = list(poset.elements) + [new]
    base = poset.cover_names()
    for ideal in ideals:
        for filt in filters:
            if ideal & filt:
                continue
            ok = all(poset.le_idx(i, f)
                     for i in range(n) if ideal >> i & 1
                     for f in range(n) if filt >> f & 1)
            if not ok:
                continue
            pairs = list(base)
            pairs += [(poset.elements[i], new) for i in range(n) if ideal >> i & 1]
            pairs += [(new, poset.elements[f]) for f in range(n) if filt >> f & 1]
            yield from_cover_relations(names, pairs)


@lru_cache(maxsize=None)
def exhaustive_posets(size: int) -> tuple[Poset, ...]:
    """One representative per isomorphism class with exactly `size` elements."""
    if size < 1:
        raise TooLarge("size must be >= 1")
    if size > MAX_EXHAUSTIVE:
        raise TooLarge(f"exhaustive generation capped at {MAX_EXHAUSTIVE} elements")
    if size == 1:
        return (from_cover_relations(["0"], []),)
    seen = {}
    for smaller in exhaustive_posets(size - 1):
        for cand in _insertions(smaller):
            key = canonical_key(cand)
            if key not in seen:
                seen[key] = cand
    return tuple(seen[k] for k in sorted(seen))


def random_posets(size: int, count: int, seed: int):
    """Deterministic pseudorandom posets via random DAG + reduction."""
    rng = random.Random(seed)
    for _ in range(count):
        perm = list(range(size))
        rng.shuffle(perm)
        pairs = [(str(perm[i]), str(perm[j]))
                 for i in range(size) for j in range(i + 1, size)
                 if rng.random() < 0.35]
        yield from_cover_relations([str(i) for i in range(size)], pairs)


def generate_posets(max_elements: int, mode: str = "exhaustive",
                    seed: int = 0, count: int = 10):
    """Stream posets of exactly max_elements elements."""
    if mode == "exhaustive":
        yield from exhaustive_posets(max_elements)
    elif mode == "random":
        yield from random_posets(max_elements, count, seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")


def all_epsilon_labelings(poset: Poset):
    """All 2^|E| edge-sign labelings, deterministic order."""
    covers = poset.covers
    if len(covers) > MAX_EPSILON_EDGES:
        raise TooManyEdges(f"more than {MAX_EPSILON_EDGES} covers")
    for signs in product((1, -1), repeat=len(covers)):
        yield LabeledPoset(poset, epsilon=dict(zip(covers, signs)))


def canonical_labelings(poset: Poset):
    """The parity-witness canonical labeling, when the poset admits one."""
    if not parity_classification(poset).parity_consistent:
        return
    rank01 = canonical_rank01(poset)
    order = sorted(range(poset.p), key=lambda i: (rank01[i], i))
    omega = [0] * poset.p
    for label, i in enumerate(order, start=1):
        omega[i] = label
    yield LabeledPoset(poset, omega=omega)


def labelings_for(poset: Poset, scope: str):
    if scope == "canonical":
        yield from canonical_labelings(poset)
    elif scope == "all_epsilon":
        yield from all_epsilon_labelings(poset)
    else:
        raise ValueError(f"unknown scope {scope!r}")
