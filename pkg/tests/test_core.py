import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import matcat as mc
from matcat.core import STAR
from matcat.errors import (
    AxiomViolation,
    EliminationFailure,
    EmptyCircuit,
    GroundTooLarge,
    NotAntichain,
    UnknownElement,
)

from _oracles import (
    brute_rank,
    independence_family_circuits,
    maximal_independent_sizes,
    rank_closure,
)

F = frozenset


def test_make_matroid_adjoins_loop_circuit(u23):
    assert u23.ground == F({0, 1, 2, 3})
    assert u23.circuits == F({F({STAR}), F({1, 2, 3})})


def test_make_matroid_free(free2):
    assert free2.circuits == F({F({STAR})})
    assert free2.ground == F({0, 1, 2})


def test_make_matroid_rejects_comparable_circuits():
    with pytest.raises(NotAntichain):
        mc.make_matroid({1, 2}, [{1}, {1, 2}])


def test_make_matroid_rejects_empty_circuit():
    with pytest.raises(EmptyCircuit):
        mc.make_matroid({1, 2}, [set()])


def test_make_matroid_rejects_unknown_elements():
    with pytest.raises(UnknownElement):
        mc.make_matroid({1, 2}, [{1, 5}])


def test_make_matroid_rejects_elimination_failure():
    # circuits {1,2} and {2,3} with no circuit inside {1,3}
    with pytest.raises(EliminationFailure):
        mc.make_matroid({1, 2, 3}, [{1, 2}, {2, 3}])


def test_make_matroid_rejects_circuit_strictly_containing_star():
    with pytest.raises(NotAntichain):
        mc.make_matroid({1}, [{0, 1}])


def test_circuit_axioms_pass_on_uniform(u23):
    report = mc.check_circuit_axioms(u23.circuits)
    assert report.all_passed


def test_circuit_axioms_flag_comparability():
    report = mc.check_circuit_axioms([F({STAR}), F({1}), F({1, 2})])
    assert not report["antichain"].passed


def test_circuit_axioms_flag_pairwise_elimination():
    report = mc.check_circuit_axioms([F({STAR}), F({1, 2}), F({2, 3})])
    assert not report["elimination-pairwise"].passed
    assert "e=2" in report["elimination-pairwise"].note


def test_circuit_axioms_flag_empty_set():
    report = mc.check_circuit_axioms([F(), F({1})])
    assert not report["nonempty"].passed
    assert not report.all_passed


def test_circuit_axioms_maximality_is_vacuous(u23):
    assert mc.check_circuit_axioms(u23.circuits)["maximality"].passed


def test_closure_examples(u23, free2):
    assert u23.closure({1}) == F({0, 1})
    assert u23.closure({1, 2}) == F({0, 1, 2, 3})
    assert free2.closure(set()) == F({0})


def test_closure_always_contains_star(catalog3):
    assert all(STAR in M.closure(set()) for M in catalog3)


def test_closure_matches_rank_oracle(catalog3):
    for M in catalog3:
        for X in mc.subsets_of(M.ground):
            assert M.closure(X) == rank_closure(M, X)


def test_closure_rejects_unknown_elements(u23):
    with pytest.raises(UnknownElement):
        u23.closure({9})


def test_independence_examples(u23, catalog3):
    assert u23.is_independent({1, 2})
    assert not u23.is_independent({1, 2, 3})
    assert all(not M.is_independent({STAR}) for M in catalog3)


def test_independence_iff_no_element_spanned_by_rest(catalog3):
    for M in catalog3:
        for X in mc.subsets_of(M.ground):
            expected = all(x not in M.closure(X - {x}) for x in X)
            assert M.is_independent(X) == expected


def test_rank_examples(u23, free2, loopy):
    assert u23.rank() == 2
    assert free2.rank({1, 2}) == 2
    assert loopy.rank({1}) == 0


def test_rank_is_growth_order_invariant(catalog3):
    # every maximal independent subset of any X has the same size
    for M in catalog3:
        for X in mc.subsets_of(M.ground):
            sizes = maximal_independent_sizes(M, X)
            assert len(sizes) == 1
            assert M.rank(X) == sizes.pop() == brute_rank(M, X)


def test_loop_and_coloop(u23, free2, loopy):
    assert loopy.is_loop(1)
    assert free2.is_coloop(1)
    assert not u23.is_loop(1) and not u23.is_coloop(1)
    assert u23.is_loop(STAR) and not u23.is_coloop(STAR)


def test_closure_table_examples(u23, pair):
    table = mc.closure_table(u23)
    assert table({1, 2}) == F({0, 1, 2, 3})
    assert mc.closure_table(mc.one_point_matroid())(set()) == F({0})
    assert mc.closure_table(pair)({1}) == F({0, 1, 2})


def test_closure_table_guard():
    big = mc.free_matroid(17)
    with pytest.raises(GroundTooLarge):
        mc.closure_table(big)


def test_closure_axioms_pass_on_catalog(catalog3):
    for M in catalog3:
        assert mc.check_closure_axioms(mc.closure_table(M)).all_passed


def test_closure_axioms_flag_unpointed_identity():
    ground = {0, 1}
    table = mc.ClosureTable(ground, {X: X for X in mc.subsets_of(ground)})
    report = mc.check_closure_axioms(table)
    assert not report["pointed"].passed
    assert report["operator"].passed


def _exchange_failure_table():
    # an extensive, monotone, idempotent, pointed table that fails exchange:
    # 2 is spanned by 1 but not the other way around
    base = {
        F(): F({0}),
        F({1}): F({0, 1, 2}),
        F({2}): F({0, 2}),
        F({1, 2}): F({0, 1, 2}),
    }
    full = {}
    for X, value in base.items():
        full[X] = value
        full[X | {0}] = value
    return mc.ClosureTable({0, 1, 2}, full)


def test_closure_axioms_flag_exchange_failure():
    report = mc.check_closure_axioms(_exchange_failure_table())
    assert report["operator"].passed and report["pointed"].passed
    assert not report["exchange"].passed
    assert "x=1" in report["exchange"].note and "y=2" in report["exchange"].note


def test_circuits_from_closure_examples(u23, free2, pair):
    assert mc.circuits_from_closure(mc.closure_table(u23)) == u23.circuits
    assert mc.circuits_from_closure(mc.closure_table(free2)) == F({F({STAR})})
    assert mc.circuits_from_closure(mc.closure_table(pair)) == pair.circuits


def test_circuits_from_closure_rejects_bad_tables():
    ground = {0, 1}
    identity = mc.ClosureTable(ground, {X: X for X in mc.subsets_of(ground)})
    with pytest.raises(AxiomViolation):
        mc.circuits_from_closure(identity)
    with pytest.raises(AxiomViolation):
        mc.circuits_from_closure(_exchange_failure_table())


def test_cryptomorphism_round_trip(catalog3):
    for M in catalog3:
        table = mc.closure_table(M)
        derived = mc.circuits_from_closure(table)
        assert derived == M.circuits
        rebuilt = mc.make_matroid(M.ground, derived)
        assert mc.closure_table(rebuilt) == table


CATALOG3_COUNT = 24  # 1 + 2 + 5 + 16 matroids on 0..3 ordinary elements


def test_catalog_count_is_frozen(catalog3):
    assert len(catalog3) == CATALOG3_COUNT
    assert len({(M.ground, M.circuits) for M in catalog3}) == CATALOG3_COUNT


def test_catalog_agrees_with_independence_axiom_oracle(catalog3):
    for k in range(4):
        ground = mc.pointed(range(1, k + 1))
        ours = {M.circuits for M in catalog3 if M.ground == ground}
        assert ours == independence_family_circuits(k)


def test_catalog_members_pass_all_axioms(catalog3):
    for M in catalog3:
        assert mc.check_circuit_axioms(M.circuits).all_passed


def test_catalog_guard():
    with pytest.raises(GroundTooLarge):
        mc.catalog(9)


_subsets_123 = st.sets(
    st.sets(st.integers(min_value=1, max_value=3), min_size=1, max_size=3).map(
        frozenset
    ),
    max_size=7,
).map(frozenset)


@settings(max_examples=200, deadline=None)
@given(_subsets_123)
def test_make_matroid_accepts_or_raises_cleanly(family):
    try:
        M = mc.make_matroid({1, 2, 3}, family)
    except (NotAntichain, EliminationFailure):
        return
    assert mc.check_circuit_axioms(M.circuits).all_passed


@settings(max_examples=150, deadline=None)
@given(
    st.integers(min_value=0, max_value=CATALOG3_COUNT - 1),
    st.sets(st.integers(min_value=0, max_value=3)),
    st.sets(st.integers(min_value=0, max_value=3)),
)
def test_closure_operator_laws(index, xs, ys):
    M = mc.catalog(3)[index]
    X = frozenset(xs) & M.ground
    Y = frozenset(ys) & M.ground
    closed = M.closure(X)
    assert X <= closed
    assert closed == M.closure(closed)
    if X <= Y:
        assert closed <= M.closure(Y)


def test_immutability():
    M = mc.uniform_matroid(1, 2)
    with pytest.raises(Exception):
        M.ground = frozenset()
    table = mc.closure_table(M)
    with pytest.raises(AttributeError):
        table.ground = frozenset()
