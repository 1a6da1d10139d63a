import pytest

import oracles
from monocat.bimodule import (
    Bimodule,
    check_bimodule_laws,
    free_action_check,
    group_quotient,
    mult_bijection_check,
    regular_bimodule,
    tensor,
    validate_bimodule,
)
from monocat.core import Monoid, is_group, validate_semigroup
from monocat.errors import (
    CommutationViolation,
    EmptyBimodule,
    GSideNotGroup,
    IllDefinedAction,
    MonoidMismatch,
    NotAGroup,
    UnitLawViolation,
)
from monocat.twocat import category_from_monoid, groupoid_from_group, karoubi_pair, slot_bimodule


def z2():
    return Monoid(validate_semigroup(oracles.cyclic_table(2)), 0)


def z3():
    return Monoid(validate_semigroup(oracles.cyclic_table(3)), 0)


def trivial():
    return Monoid(validate_semigroup([[0]]), 0)


def t2():
    return Monoid(validate_semigroup(oracles.t2_table()), oracles.T2_ID)


def swap01_action():
    # Z2 acting on three points by swapping {0, 1}
    return ((0, 1, 2), (1, 0, 2))


class TestValidation:
    def test_monoid_as_bimodule_over_itself(self):
        bm = validate_bimodule(t2(), t2(), 4, t2().table, t2().table)
        assert bm.size == 4

    def test_minimal_left_ideal_as_bimodule(self):
        # the L slot of the category of T2 carries commuting actions by
        # construction; re-validate its raw tables from scratch
        cat = category_from_monoid(t2())
        raw = slot_bimodule(cat, "L")
        validate_bimodule(raw.left_monoid, raw.right_monoid, raw.size,
                          raw.left_action, raw.right_action)

    def test_transposed_entry_breaks_commutation(self):
        # start from commuting actions (right action trivial) and transpose
        # one row of the right action: both actions stay lawful but no
        # longer commute
        g = z2()
        left = swap01_action()
        right_ok = tuple((x, x) for x in range(3))
        validate_bimodule(g, g, 3, left, right_ok)
        right_bad = ((0, 0), (1, 2), (2, 1))
        with pytest.raises(CommutationViolation):
            validate_bimodule(g, g, 3, left, right_bad)

    def test_unit_violation(self):
        g = z2()
        bad_left = ((1, 0, 2), (0, 1, 2))
        with pytest.raises(UnitLawViolation):
            validate_bimodule(g, g, 3, bad_left, tuple((x, x) for x in range(3)))

    def test_empty_rejected(self):
        with pytest.raises(EmptyBimodule):
            Bimodule(z2(), z2(), 0, ((), ()), ())


class TestTensor:
    def test_trivial_middle_keeps_all_pairs(self):
        e = trivial()
        x = validate_bimodule(e, e, 3, ((0, 1, 2),), ((0,), (1,), (2,)))
        ts = tensor(x, x)
        assert ts.class_count == 9
        assert all(len(c) == 1 for c in ts.classes)

    def test_free_group_actions_collapse_to_group_size(self):
        reg = regular_bimodule(z2())
        ts = tensor(reg, reg)
        assert ts.class_count == 2

    def test_regular_tensor_collapses_to_products(self):
        for m in (z3(), t2()):
            reg = regular_bimodule(m)
            ts = tensor(reg, reg)
            assert ts.class_count == m.n
            for x in range(m.n):
                for y in range(m.n):
                    assert ts.class_of(x, y) == ts.class_of(m.mul(x, y), m.identity)

    def test_monoid_mismatch(self):
        with pytest.raises(MonoidMismatch):
            tensor(regular_bimodule(z2()), regular_bimodule(z3()))

    def test_lawless_input_is_caught_as_ill_defined(self):
        # a broken left action (only shape-checked here) makes the induced
        # action depend on representatives
        g = z2()
        broken = Bimodule(g, g, 2, ((0, 1), (0, 0)), g.table)
        with pytest.raises(IllDefinedAction):
            tensor(broken, regular_bimodule(g))

    def test_induced_actions_satisfy_the_laws(self, corpus_categories):
        count = 0
        for name, cat in sorted(corpus_categories.items()):
            if cat.size("L") * cat.size("R") > 40 or count >= 12:
                continue
            ts = tensor(slot_bimodule(cat, "L"), slot_bimodule(cat, "R"))
            check_bimodule_laws(ts.bimodule)
            count += 1
        assert count >= 5


class TestGroupQuotient:
    def test_trivial_group_gives_singletons(self):
        e = trivial()
        x = validate_bimodule(e, e, 2, ((0, 1),), ((0,), (1,)))
        ts = group_quotient(x, x, e)
        assert ts.class_count == 4

    def test_free_action_orbit_count(self):
        reg = regular_bimodule(z2())
        ts = group_quotient(reg, reg, z2())
        assert ts.class_count == 2
        assert all(len(c) == 2 for c in ts.classes)

    def test_non_free_action_breaks_the_count(self):
        g = z2()
        # both actions trivial: every orbit is a singleton
        left = Bimodule(g, g, 2, ((0, 1), (0, 1)), ((0, 0), (1, 1)))
        right = Bimodule(g, g, 2, ((0, 1), (0, 1)), ((0, 0), (1, 1)))
        ts = group_quotient(left, right, g)
        assert any(len(c) < g.n for c in ts.classes)
        assert ts.class_count != (left.size * right.size) // g.n
        assert ts.class_count == left.size * right.size

    def test_group_required(self):
        m = t2()
        bm = regular_bimodule(m)
        with pytest.raises(NotAGroup):
            group_quotient(bm, bm, m)

    def test_orbits_match_tensor_partition_on_categories(self, corpus, corpus_categories):
        checked = 0
        for name, m in corpus:
            cat = corpus_categories[name]
            if not is_group(cat.g_monoid) or cat.size("L") * cat.size("R") > 40:
                continue
            left = slot_bimodule(cat, "L")
            right = slot_bimodule(cat, "R")
            ts = group_quotient(left, right, cat.g_monoid)  # asserts the partitions agree
            assert ts.class_count * cat.size("G") == cat.size("L") * cat.size("R")
            checked += 1
            if checked >= 15:
                break
        assert checked >= 5


class TestMultBijection:
    def test_degenerate_singleton(self):
        cat = groupoid_from_group(trivial())
        verdict = mult_bijection_check(cat)
        assert verdict

    def test_t2_category(self):
        cat = category_from_monoid(t2())
        assert mult_bijection_check(cat)
        lr = cat.comp["LR"]
        image = {lr[x][y] for x in range(cat.size("L")) for y in range(cat.size("R"))}
        assert len(image) == 2 == (cat.size("L") * cat.size("R")) // cat.size("G")

    def test_requires_group_side(self):
        cat = karoubi_pair(t2(), oracles.T2_ID, oracles.T2_ID)
        with pytest.raises(GSideNotGroup):
            mult_bijection_check(cat)

    def test_passes_on_all_corpus_categories(self, corpus_categories):
        for name, cat in corpus_categories.items():
            assert mult_bijection_check(cat), name


class TestFreeAction:
    def test_passes_on_corpus_categories(self, corpus_categories):
        for name, cat in corpus_categories.items():
            assert free_action_check(cat), name
            assert cat.size("L") % cat.size("G") == 0, name
            assert cat.size("R") % cat.size("G") == 0, name

    def test_detects_a_stuck_action(self):
        cat = groupoid_from_group(z2())
        tables = dict(cat.comp)
        tables["LG"] = ((0, 0), (1, 1))  # right action no longer free
        from monocat.twocat import TwoObjectCategory

        broken = TwoObjectCategory(cat.a_elems, cat.l_elems, cat.r_elems, cat.g_elems,
                                   cat.a_identity, cat.g_identity, tables)
        verdict = free_action_check(broken)
        assert not verdict and "not free" in verdict.detail
