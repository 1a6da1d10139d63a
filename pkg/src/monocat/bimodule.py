"""Bimodules over finite monoids, tensor products, and orbit quotients.

The tensor product of a right ``B``-set with a left ``B``-set is the
quotient of the pair set by the equivalence *generated by*
``(x*b, y) ~ (x, b*y)``; the closure is computed with a union-find over
all pairs.  When ``B`` is a group the generated relation coincides with
the orbit relation ``(x, y) ~ (x*g⁻¹, g*y)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .check import Check, PASSED, failed
from .core import FiniteSemigroup, Monoid, is_group
from .errors import (
    ActionLawViolation,
    CommutationViolation,
    EmptyBimodule,
    FormatError,
    GSideNotGroup,
    IllDefinedAction,
    MonoidMismatch,
    NotAGroup,
    OutOfRange,
    UnitLawViolation,
)

Pair = tuple[int, int]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


@dataclass(frozen=True, repr=False)
class Bimodule:
    """A finite set with commuting left and right monoid actions.

    ``left_action[a][x]`` is ``a*x`` and ``right_action[x][b]`` is ``x*b``.
    Construction checks shapes and ranges; the action laws themselves are
    verified by :func:`validate_bimodule`, the entry point for untrusted
    tables.
    """

    left_monoid: Monoid
    right_monoid: Monoid
    size: int
    left_action: tuple[tuple[int, ...], ...]
    right_action: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.size <= 0:
            raise EmptyBimodule("bimodules are nonempty by standing assumption")
        la = tuple(tuple(row) for row in self.left_action)
        ra = tuple(tuple(row) for row in self.right_action)
        object.__setattr__(self, "left_action", la)
        object.__setattr__(self, "right_action", ra)
        if len(la) != self.left_monoid.n or any(len(r) != self.size for r in la):
            raise FormatError("left action must be |A| x |X|")
        if len(ra) != self.size or any(len(r) != self.right_monoid.n for r in ra):
            raise FormatError("right action must be |X| x |B|")
        for i, row in enumerate(la):
            for j, v in enumerate(row):
                if not 0 <= v < self.size:
                    raise OutOfRange(i, j)
        for i, row in enumerate(ra):
            for j, v in enumerate(row):
                if not 0 <= v < self.size:
                    raise OutOfRange(i, j)

    def __repr__(self):
        return f"Bimodule(|A|={self.left_monoid.n}, |X|={self.size}, |B|={self.right_monoid.n})"


def check_bimodule_laws(bm: Bimodule) -> None:
    """Raise on the first unit, associativity, or commutation failure."""
    la, ra = bm.left_action, bm.right_action
    ta, tb = bm.left_monoid.table, bm.right_monoid.table
    ea, eb = bm.left_monoid.identity, bm.right_monoid.identity
    for x in range(bm.size):
        if la[ea][x] != x:
            raise UnitLawViolation("left", x)
        if ra[x][eb] != x:
            raise UnitLawViolation("right", x)
    for a in range(bm.left_monoid.n):
        for a2 in range(bm.left_monoid.n):
            composed = la[ta[a][a2]]
            inner = la[a2]
            outer = la[a]
            for x in range(bm.size):
                if composed[x] != outer[inner[x]]:
                    raise ActionLawViolation("left", a, a2, x)
    for x in range(bm.size):
        row = ra[x]
        for b in range(bm.right_monoid.n):
            xb_row = ra[row[b]]
            tb_row = tb[b]
            for b2 in range(bm.right_monoid.n):
                if ra[x][tb_row[b2]] != xb_row[b2]:
                    raise ActionLawViolation("right", b, b2, x)
    for a in range(bm.left_monoid.n):
        act = la[a]
        for x in range(bm.size):
            ax_row = ra[act[x]]
            x_row = ra[x]
            for b in range(bm.right_monoid.n):
                if ax_row[b] != act[x_row[b]]:
                    raise CommutationViolation(a, x, b)


def validate_bimodule(left_monoid: Monoid, right_monoid: Monoid, size: int,
                      left_action, right_action) -> Bimodule:
    """Build a bimodule from untrusted tables, checking every law exhaustively."""
    bm = Bimodule(left_monoid, right_monoid, size,
                  tuple(map(tuple, left_action)), tuple(map(tuple, right_action)))
    check_bimodule_laws(bm)
    return bm


def regular_bimodule(m: Monoid) -> Bimodule:
    """A monoid acting on itself by multiplication on both sides."""
    return Bimodule(m, m, m.n, m.table, m.table)


@dataclass(frozen=True, repr=False)
class TensorSet:
    """A partition of a pair set, with the induced outer actions.

    ``classes`` lists each equivalence class as a sorted tuple of pairs;
    classes are ordered by their smallest pair, which also serves as the
    canonical representative in ``reps``.  ``bimodule`` carries the induced
    actions of the outer monoids on class indices.
    """

    classes: tuple[tuple[Pair, ...], ...]
    reps: tuple[Pair, ...]
    bimodule: Bimodule

    @cached_property
    def _index(self) -> dict[Pair, int]:
        return {pair: ci for ci, cls in enumerate(self.classes) for pair in cls}

    def class_of(self, x: int, y: int) -> int:
        return self._index[(x, y)]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def __repr__(self):
        return f"TensorSet(classes={self.class_count})"


def _partition_from_unionfind(uf: _UnionFind, nx: int, ny: int) -> tuple[tuple[Pair, ...], ...]:
    buckets: dict[int, list[Pair]] = {}
    for x in range(nx):
        base = x * ny
        for y in range(ny):
            buckets.setdefault(uf.find(base + y), []).append((x, y))
    classes = [tuple(sorted(c)) for c in buckets.values()]
    classes.sort(key=lambda c: c[0])
    return tuple(classes)


def _induced_tensor(x: Bimodule, y: Bimodule, classes) -> TensorSet:
    index = {pair: ci for ci, cls in enumerate(classes) for pair in cls}
    a, c = x.left_monoid, y.right_monoid
    left_rows = []
    for ai in range(a.n):
        act = x.left_action[ai]
        row = []
        for cls in classes:
            images = {index[(act[p], q)] for (p, q) in cls}
            if len(images) != 1:
                raise IllDefinedAction(f"left action of {ai} splits class of {cls[0]}")
            row.append(images.pop())
        left_rows.append(tuple(row))
    right_rows = []
    for cls in classes:
        row = []
        for bi in range(c.n):
            images = {index[(p, y.right_action[q][bi])] for (p, q) in cls}
            if len(images) != 1:
                raise IllDefinedAction(f"right action of {bi} splits class of {cls[0]}")
            row.append(images.pop())
        right_rows.append(tuple(row))
    bm = Bimodule(a, c, len(classes), tuple(left_rows), tuple(right_rows))
    reps = tuple(cls[0] for cls in classes)
    return TensorSet(classes, reps, bm)


def tensor(x: Bimodule, y: Bimodule) -> TensorSet:
    """Quotient ``X x Y`` by the relation generated by ``(x*b, y) ~ (x, b*y)``.

    The factors must share the middle monoid; the induced outer actions are
    computed and checked to be independent of representatives.
    """
    if x.right_monoid != y.left_monoid:
        raise MonoidMismatch("tensor factors must share the middle monoid")
    b = x.right_monoid
    nx, ny = x.size, y.size
    uf = _UnionFind(nx * ny)
    ra, la = x.right_action, y.left_action
    for p in range(nx):
        row = ra[p]
        for bi in range(b.n):
            pb_base = row[bi] * ny
            p_base = p * ny
            act = la[bi]
            for q in range(ny):
                uf.union(pb_base + q, p_base + act[q])
    classes = _partition_from_unionfind(uf, nx, ny)
    return _induced_tensor(x, y, classes)


def group_quotient(left: Bimodule, right: Bimodule, g: Monoid) -> TensorSet:
    """Quotient ``L x R`` by the orbit relation ``(x, y) ~ (x*g⁻¹, g*y)``.

    Requires ``g`` to be a group acting on the right of ``left`` and on the
    left of ``right``.  The orbit partition is checked to coincide with the
    tensor partition before returning it.
    """
    if not is_group(g):
        raise NotAGroup("the quotient is by a group action")
    if left.right_monoid != g or right.left_monoid != g:
        raise MonoidMismatch("both factors must carry the action of the same group")
    t = g.table
    inv = [next(h for h in range(g.n) if t[gi][h] == g.identity) for gi in range(g.n)]
    nx, ny = left.size, right.size
    uf = _UnionFind(nx * ny)
    for p in range(nx):
        p_base = p * ny
        for gi in range(g.n):
            pg_base = left.right_action[p][inv[gi]] * ny
            act = right.left_action[gi]
            for q in range(ny):
                uf.union(p_base + q, pg_base + act[q])
    orbit_classes = _partition_from_unionfind(uf, nx, ny)
    ts = tensor(left, right)
    assert orbit_classes == ts.classes, "orbit partition differs from the tensor partition"
    return ts


def mult_bijection_check(cat) -> Check:
    """Verify that composition induces a bijection ``L x R / G -> L*R``.

    ``cat`` is a two-object category whose G-side must be a group.  A false
    result names the first collision; on success the exact counting identity
    ``|L*R| * |G| == |L| * |R|`` is also verified.
    """
    gm = Monoid(FiniteSemigroup(cat.comp["GG"]), cat.g_identity)
    if not is_group(gm):
        raise GSideNotGroup("the bijection check needs a group on the G side")
    nl, nr, ng = len(cat.l_elems), len(cat.r_elems), gm.n
    lg, gr, lr = cat.comp["LG"], cat.comp["GR"], cat.comp["LR"]
    t = gm.table
    inv = [next(h for h in range(ng) if t[gi][h] == gm.identity) for gi in range(ng)]
    uf = _UnionFind(nl * nr)
    for x in range(nl):
        x_base = x * nr
        for gi in range(ng):
            xg_base = lg[x][inv[gi]] * nr
            act = gr[gi]
            for y in range(nr):
                uf.union(x_base + y, xg_base + act[y])
    classes = _partition_from_unionfind(uf, nl, nr)
    seen: dict[int, Pair] = {}
    for cls in classes:
        values = {lr[x][y] for (x, y) in cls}
        if len(values) != 1:
            raise AssertionError(f"composition splits the class of {cls[0]}")
        v = values.pop()
        if v in seen:
            return failed(
                f"classes of {seen[v]} and {cls[0]} both compose to {v}"
            )
        seen[v] = cls[0]
    image = {lr[x][y] for x in range(nl) for y in range(nr)}
    if len(classes) != len(image):
        return failed(f"{len(classes)} classes but {len(image)} composite values")
    if len(image) * ng != nl * nr:
        return failed(
            f"|L*R|*|G| = {len(image) * ng} differs from |L|*|R| = {nl * nr}"
        )
    return PASSED


def free_action_check(cat) -> Check:
    """Check that the G side acts freely on both bimodules of a category."""
    nl, nr, ng = len(cat.l_elems), len(cat.r_elems), len(cat.g_elems)
    lg, gr = cat.comp["LG"], cat.comp["GR"]
    for x in range(nl):
        row = lg[x]
        if len(set(row)) != ng:
            return failed(f"right action on L is not free at element {x}")
    for y in range(nr):
        col = [gr[g][y] for g in range(ng)]
        if len(set(col)) != ng:
            return failed(f"left action on R is not free at element {y}")
    return PASSED
