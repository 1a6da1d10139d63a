"""Groups of monoids, small-scale isomorphism testing, and connectivity.

Two monoids are connected exactly when their kernel groups are isomorphic;
a positive verdict is certified by an explicit two-object category whose
endomorphism monoids are the two inputs, built by routing both monoids
through the shared group and gluing along it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Monoid, Subset, is_group
from .errors import GroupTooLarge
from .ideals import GroupHandle, canonical_minimal_pair, group_of_intersection
from .twocat import (
    TwoObjectCategory,
    category_from_monoid,
    compose_categories,
    groupoid_from_group,
    relabel,
    reverse,
)

ISO_BOUND = 64


@dataclass(frozen=True)
class GroupInvariantProfile:
    """Cheap isomorphism invariants used to prune the search."""

    order: int
    element_orders: tuple[int, ...]
    abelian: bool
    center_size: int


def group_of(a: Monoid) -> GroupHandle:
    """The group of a monoid: itself if a group, else ``L ∩ R`` in the kernel.

    Well-defined up to isomorphism; this function fixes the canonically
    first minimal left and right ideals.
    """
    if is_group(a):
        return GroupHandle(Subset(a.base, tuple(range(a.n))), a.identity)
    left, right = canonical_minimal_pair(a.base)
    return group_of_intersection(left, right)


def _element_order(table, e: int, g: int) -> int:
    k, x = 1, g
    while x != e:
        x = table[x][g]
        k += 1
    return k


def profile(g: GroupHandle) -> GroupInvariantProfile:
    t = g.abstract_table()
    n = len(t)
    e = g.position(g.identity)
    orders = tuple(sorted(_element_order(t, e, i) for i in range(n)))
    abelian = all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))
    center = sum(
        1 for i in range(n) if all(t[i][j] == t[j][i] for j in range(n))
    )
    return GroupInvariantProfile(n, orders, abelian, center)


def _generating_sequence(table, e: int) -> list[int]:
    n = len(table)
    closed = {e}
    gens: list[int] = []
    while len(closed) < n:
        g = min(set(range(n)) - closed)
        gens.append(g)
        frontier = True
        while frontier:
            frontier = False
            for a in list(closed | {g}):
                for b in list(closed | {g}):
                    p = table[a][b]
                    if p not in closed:
                        closed.add(p)
                        frontier = True
        closed.add(g)
    return gens


def _hom_from_generators(tg, th, eg, eh, gens, images) -> Optional[list[int]]:
    n = len(tg)
    img: list[Optional[int]] = [None] * n
    img[eg] = eh
    for g, h in zip(gens, images):
        if img[g] is not None and img[g] != h:
            return None
        img[g] = h
    known = [i for i in range(n) if img[i] is not None]
    changed = True
    while changed:
        changed = False
        for a in list(known):
            for b in list(known):
                p = tg[a][b]
                q = th[img[a]][img[b]]
                if img[p] is None:
                    img[p] = q
                    known.append(p)
                    changed = True
                elif img[p] != q:
                    return None
    if len(known) != n or len(set(img)) != n:
        return None
    for a in range(n):
        for b in range(n):
            if img[tg[a][b]] != th[img[a]][img[b]]:
                return None
    return img  # type: ignore[return-value]


def group_isomorphism(g: GroupHandle, h: GroupHandle) -> Optional[tuple[int, ...]]:
    """A position-level isomorphism witness, or None.

    Exhaustive over generator images (pruned by element orders); correct up
    to the documented bound ``ISO_BOUND``, beyond which it refuses.
    """
    if g.order > ISO_BOUND or h.order > ISO_BOUND:
        raise GroupTooLarge(max(g.order, h.order), ISO_BOUND)
    if profile(g) != profile(h):
        return None
    tg, th = g.abstract_table(), h.abstract_table()
    eg, eh = g.position(g.identity), h.position(h.identity)
    gens = _generating_sequence(tg, eg)
    if not gens:
        return (eh,)  # both groups are trivial
    orders_h: dict[int, list[int]] = {}
    for i in range(len(th)):
        orders_h.setdefault(_element_order(th, eh, i), []).append(i)
    candidate_lists = [
        orders_h.get(_element_order(tg, eg, gen), []) for gen in gens
    ]

    def assign(k: int, chosen: list[int]) -> Optional[list[int]]:
        if k == len(gens):
            return _hom_from_generators(tg, th, eg, eh, gens, chosen)
        for cand in candidate_lists[k]:
            result = assign(k + 1, chosen + [cand])
            if result is not None:
                return result
        return None

    result = assign(0, [])
    return tuple(result) if result is not None else None


def groups_isomorphic(g: GroupHandle, h: GroupHandle) -> bool:
    return group_isomorphism(g, h) is not None


def table_isomorphism(t1, t2) -> Optional[tuple[int, ...]]:
    """A relabelling making two magma tables equal, or None.

    Plain backtracking with product propagation; meant for desk-scale
    tables (semigroup isomorphism checks in tests and reports).
    """
    t1 = tuple(tuple(r) for r in t1)
    t2 = tuple(tuple(r) for r in t2)
    n = len(t1)
    if len(t2) != n:
        return None

    def keys(t):
        out = []
        for i in range(n):
            row_image = len({t[i][j] for j in range(n)})
            col_image = len({t[j][i] for j in range(n)})
            out.append((row_image, col_image, t[i][i] == i))
        return out

    k1, k2 = keys(t1), keys(t2)
    if sorted(k1) != sorted(k2):
        return None
    img: list[Optional[int]] = [None] * n
    used = [False] * n
    trail: list[int] = []

    def set_image(i0, v0) -> bool:
        queue = [(i0, v0)]
        while queue:
            i, v = queue.pop()
            if img[i] is not None:
                if img[i] != v:
                    return False
                continue
            if used[v] or k1[i] != k2[v]:
                return False
            img[i] = v
            used[v] = True
            trail.append(i)
            for j in range(n):
                if img[j] is None:
                    continue
                for (p, q) in ((t1[i][j], t2[v][img[j]]), (t1[j][i], t2[img[j]][v])):
                    if img[p] is None:
                        queue.append((p, q))
                    elif img[p] != q:
                        return False
        return True

    def backtrack(i: int) -> bool:
        while i < n and img[i] is not None:
            i += 1
        if i == n:
            return True
        for v in range(n):
            if used[v] or k2[v] != k1[i]:
                continue
            mark = len(trail)
            if set_image(i, v) and backtrack(i + 1):
                return True
            while len(trail) > mark:
                j = trail.pop()
                used[img[j]] = False
                img[j] = None
        return False

    if not backtrack(0):
        return None
    return tuple(img)  # type: ignore[arg-type]


@dataclass(frozen=True, repr=False)
class ConnectivityResult:
    connected: bool
    witness: Optional[TwoObjectCategory]
    group_map: Optional[tuple[int, ...]]

    def __bool__(self) -> bool:
        return self.connected

    def __repr__(self):
        return f"ConnectivityResult(connected={self.connected})"


def connecting_category(a: Monoid) -> TwoObjectCategory:
    """The category tying a monoid to its group: envelope or groupoid."""
    if is_group(a):
        return groupoid_from_group(a)
    return category_from_monoid(a)


def are_connected(a: Monoid, b: Monoid) -> ConnectivityResult:
    """Decide connectivity and certify positives with a witness category.

    The verdict is isomorphism of the two kernel groups.  On success the
    witness is the composite of the category of ``a`` with the reversed
    category of ``b``, the latter relabelled through the group isomorphism
    so the middle monoids agree on the nose; its end monoids equal ``a``
    and ``b`` literally.
    """
    ga, gb = group_of(a), group_of(b)
    iso = group_isomorphism(ga, gb)
    if iso is None:
        return ConnectivityResult(False, None, None)
    ca = connecting_category(a)
    dual = reverse(connecting_category(b))
    aligned = relabel(dual, {"A": iso}) if iso != tuple(range(len(iso))) else dual
    witness = compose_categories(ca, aligned)
    assert witness.comp["AA"] == a.base.table and witness.a_identity == a.identity
    assert witness.comp["GG"] == b.base.table and witness.g_identity == b.identity
    return ConnectivityResult(True, witness, iso)
