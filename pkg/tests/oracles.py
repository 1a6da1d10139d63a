"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately naive (full subset enumeration, permutation
search) and shares no code with the package, so a test that compares the
two is a genuine cross-check.
"""

import itertools


def assoc_violation(table):
    """First (i, j, k) with (i*j)*k != i*(j*k), scanning lexicographically."""
    n = len(table)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    return (i, j, k)
    return None


def first_nonassociative_table(n):
    """The lexicographically first non-associative n x n table."""
    for flat in itertools.product(range(n), repeat=n * n):
        table = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if assoc_violation(table) is not None:
            return table
    raise AssertionError(f"no non-associative table of size {n}")


def brute_identity(table):
    n = len(table)
    for e in range(n):
        if all(table[e][i] == i and table[i][e] == i for i in range(n)):
            return e
    return None


def has_all_inverses(table, e):
    n = len(table)
    return all(
        any(table[g][h] == e and table[h][g] == e for h in range(n))
        for g in range(n)
    )


def is_ideal(table, members, side):
    """Absorption check for an explicit member set."""
    n = len(table)
    inside = set(members)
    for a in inside:
        for s in range(n):
            if side in ("left", "two-sided") and table[s][a] not in inside:
                return False
            if side in ("right", "two-sided") and table[a][s] not in inside:
                return False
    return True


def all_nonempty_ideals(table, side):
    """Every nonempty ideal, by full subset enumeration (small tables only)."""
    n = len(table)
    assert n <= 12, "subset enumeration oracle is for small tables"
    out = []
    for bits in range(1, 1 << n):
        members = frozenset(i for i in range(n) if bits >> i & 1)
        if is_ideal(table, members, side):
            out.append(members)
    return out


def brute_minimal_ideals(table, side):
    """Minimal elements among *all* nonempty ideals, canonically sorted."""
    ideals = all_nonempty_ideals(table, side)
    minimal = [
        i for i in ideals if not any(o < i for o in ideals)
    ]
    return sorted(tuple(sorted(i)) for i in minimal)


def brute_kernel(table):
    """The least two-sided ideal, from the full enumeration."""
    minimal = brute_minimal_ideals(table, "two-sided")
    assert len(minimal) == 1
    return minimal[0]


def perm_isomorphic(t1, t2):
    """A permutation making the tables equal, by full search (n <= 7)."""
    n = len(t1)
    if len(t2) != n:
        return None
    assert n <= 7
    for perm in itertools.permutations(range(n)):
        if all(
            perm[t1[i][j]] == t2[perm[i]][perm[j]]
            for i in range(n)
            for j in range(n)
        ):
            return perm
    return None


def group_axioms_hold(table, members, identity):
    inside = set(members)
    if identity not in inside:
        return False
    for g in inside:
        if table[identity][g] != g or table[g][identity] != g:
            return False
        if any(table[g][h] not in inside for h in inside):
            return False
        if not any(table[g][h] == identity and table[h][g] == identity for h in inside):
            return False
    return True


# Hand-built reference structures (kept independent of the package's corpus).

def t2_maps():
    """Maps on two points in lexicographic order: c0, id, swap, c1."""
    return [(0, 0), (0, 1), (1, 0), (1, 1)]


def t2_table():
    """Full transformation table on two points, f*g = apply f then g."""
    maps = t2_maps()
    index = {f: i for i, f in enumerate(maps)}
    return [
        [index[(g[f[0]], g[f[1]])] for g in maps] for f in maps
    ]


T2_C0 = 0
T2_ID = 1
T2_SWAP = 2
T2_C1 = 3


def lz2_table():
    return [[0, 0], [1, 1]]


def rz2_table():
    return [[0, 1], [0, 1]]


def band22_table():
    """2x2 rectangular band, elements (i, l) in lexicographic order."""
    pairs = [(i, l) for i in range(2) for l in range(2)]
    index = {p: k for k, p in enumerate(pairs)}
    return [
        [index[(i, m)] for (j, m) in pairs] for (i, l) in pairs
    ]


def cyclic_table(m):
    return [[(i + j) % m for j in range(m)] for i in range(m)]


def klein_table():
    return [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
