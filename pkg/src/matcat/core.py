"""Pointed finite matroids presented by circuits, closure operators, and the
cryptomorphism between the two presentations.

Every ground set carries a distinguished loop with id 0 (rendered ``*``), so
every matroid has ``{*}`` among its circuits.  All values are immutable and
every operation is a pure function of its inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import (
    AxiomViolation,
    EliminationFailure,
    EmptyCircuit,
    GroundTooLarge,
    NotAntichain,
    UnknownElement,
)

STAR = 0

# Maximum number of ordinary (non-*) elements for any operation that
# enumerates all subsets of a ground set.
SUBSET_GUARD = 16


def pointed(ids: Iterable[int] = ()) -> frozenset[int]:
    """Ground set containing the given ids and the distinguished loop."""
    ground = frozenset(ids) | {STAR}
    bad = sorted(e for e in ground if e < 0)
    if bad:
        raise UnknownElement(f"negative element ids are not allowed: {bad}")
    return ground


def subsets_of(universe: Iterable[int]) -> Iterator[frozenset[int]]:
    """All subsets of ``universe``, smallest first, lexicographic within a size."""
    elems = sorted(universe)
    for size in range(len(elems) + 1):
        for combo in itertools.combinations(elems, size):
            yield frozenset(combo)


def sorted_family(family: Iterable[frozenset[int]]) -> tuple[tuple[int, ...], ...]:
    """Canonical rendering of a family of sets: sorted tuples, sorted."""
    return tuple(sorted(tuple(sorted(member)) for member in family))


def render_set(X: Iterable[int]) -> str:
    return "{" + ",".join("*" if e == STAR else str(e) for e in sorted(X)) + "}"


@dataclass(frozen=True)
class FiniteMatroid:
    """A finite pointed matroid presented by its circuit antichain.

    ``ground`` always contains the distinguished loop 0 and ``circuits``
    always contains ``{0}``.  Instances built through :func:`make_matroid`
    have been validated against the finite circuit axioms; the raw
    constructor performs no checks and is meant for internal use.
    """

    ground: frozenset[int]
    circuits: frozenset[frozenset[int]]

    @property
    def nonstar(self) -> frozenset[int]:
        return self.ground - {STAR}

    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.ground))

    def canonical_circuits(self) -> tuple[tuple[int, ...], ...]:
        return sorted_family(self.circuits)

    def _subset(self, X: Iterable[int]) -> frozenset[int]:
        X = frozenset(X)
        if not X <= self.ground:
            raise UnknownElement(
                f"{render_set(X - self.ground)} lies outside the ground set"
            )
        return X

    def closure(self, X: Iterable[int]) -> frozenset[int]:
        """X together with every element on a circuit inside X plus itself."""
        X = self._subset(X)
        extra = {
            e
            for e in self.ground - X
            for C in self.circuits
            if e in C and C <= X | {e}
        }
        return X | extra

    def is_independent(self, X: Iterable[int]) -> bool:
        """True when no circuit is contained in X."""
        X = self._subset(X)
        return not any(C <= X for C in self.circuits)

    def rank(self, X: Iterable[int] | None = None) -> int:
        """Size of a maximal independent subset, grown greedily in id order."""
        X = self.ground if X is None else self._subset(X)
        picked: set[int] = set()
        for e in sorted(X):
            grown = picked | {e}
            if not any(C <= grown for C in self.circuits):
                picked.add(e)
        return len(picked)

    def is_loop(self, e: int) -> bool:
        self._subset({e})
        return frozenset({e}) in self.circuits

    def is_coloop(self, e: int) -> bool:
        self._subset({e})
        return all(e not in C for C in self.circuits)

    def __repr__(self) -> str:
        circ = ",".join(render_set(c) for c in self.canonical_circuits())
        return f"FiniteMatroid({render_set(self.ground)}, [{circ}])"


def make_matroid(
    ground: Iterable[int], raw_circuits: Iterable[Iterable[int]] = ()
) -> FiniteMatroid:
    """Validate and build a pointed matroid from circuits.

    The distinguished-loop circuit ``{*}`` is adjoined automatically.
    Raises when a circuit is empty, leaves the ground set, compares under
    inclusion with another circuit, or breaks pairwise elimination.
    Comparable circuits are an error rather than being repaired silently.
    """
    ground = pointed(ground)
    circuits = {frozenset(C) for C in raw_circuits}
    for C in circuits:
        if not C:
            raise EmptyCircuit("the empty set cannot be a circuit")
        if not C <= ground:
            raise UnknownElement(
                f"circuit {render_set(C)} leaves the ground set {render_set(ground)}"
            )
    circuits.add(frozenset({STAR}))
    family = frozenset(circuits)
    offender = _antichain_violation(family)
    if offender is not None:
        a, b = offender
        raise NotAntichain(f"{render_set(a)} is contained in {render_set(b)}")
    witness = _pairwise_elimination_violation(family)
    if witness is not None:
        a, b, e = witness
        raise EliminationFailure(
            f"no circuit inside {render_set((a | b) - {e})} eliminates "
            f"{e} from {render_set(a)} and {render_set(b)}"
        )
    return FiniteMatroid(ground, family)


def _antichain_violation(family):
    ordered = sorted(family, key=lambda c: (len(c), tuple(sorted(c))))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if a < b:
                return a, b
    return None


def _pairwise_elimination_violation(family):
    ordered = sorted(family, key=lambda c: (len(c), tuple(sorted(c))))
    for a in ordered:
        for b in ordered:
            if a == b:
                continue
            for e in sorted(a & b):
                space = (a | b) - {e}
                if not any(c <= space for c in family):
                    return a, b, e
    return None


def _family_elimination_violation(family, bound: int):
    """Violation of the full elimination axiom for centers of size <= bound.

    Quantifies over a circuit C, a subset X of C, and a family picking for
    each x in X a circuit through x avoiding the rest of X; every z in C
    outside the family's union must lie on a circuit inside the union with
    C, minus X.
    """
    ordered = sorted(family, key=lambda c: (len(c), tuple(sorted(c))))
    for C in ordered:
        members = sorted(C)
        for size in range(1, min(bound, len(members)) + 1):
            for X in itertools.combinations(members, size):
                Xs = frozenset(X)
                pools = [
                    [D for D in ordered if x in D and not (D & (Xs - {x}))]
                    for x in X
                ]
                for picks in itertools.product(*pools):
                    union = frozenset().union(*picks)
                    space = (C | union) - Xs
                    for z in sorted(C - union):
                        if not any(z in D and D <= space for D in ordered):
                            return C, Xs, picks, z
    return None


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    note: str = ""

    def line(self) -> str:
        tail = f"  ({self.note})" if self.note else ""
        return f"{self.name}: {'pass' if self.passed else 'FAIL'}{tail}"


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts; violations are entries here, never exceptions."""

    subject: str
    checks: tuple[AxiomCheck, ...]
    caveat: str = ""

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = [f"axioms for {self.subject}:"]
        out.extend("  " + c.line() for c in self.checks)
        if self.caveat:
            out.append(f"  note: {self.caveat}")
        return out

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "all_passed": self.all_passed,
            "caveat": self.caveat,
            "checks": [
                {"name": c.name, "passed": c.passed, "note": c.note}
                for c in self.checks
            ],
        }


def check_circuit_axioms(
    circuits: Iterable[Iterable[int]], full_ce_bound: int = 2
) -> AxiomReport:
    """Report on the circuit axioms for an arbitrary family of sets.

    Elimination is checked twice: the classical pairwise form in full, and
    the full family form with elimination centers of size at most
    ``full_ce_bound``.  Maximality is vacuous on a finite ground set and is
    reported as such.
    """
    family = frozenset(frozenset(C) for C in circuits)
    checks = []

    empty_ok = frozenset() not in family
    checks.append(
        AxiomCheck("nonempty", empty_ok, "" if empty_ok else "empty set present")
    )

    pair = _antichain_violation(family)
    checks.append(
        AxiomCheck(
            "antichain",
            pair is None,
            "" if pair is None else f"{render_set(pair[0])} inside {render_set(pair[1])}",
        )
    )

    if empty_ok:
        witness = _pairwise_elimination_violation(family)
        note = (
            ""
            if witness is None
            else f"fails at e={witness[2]} for {render_set(witness[0])}, {render_set(witness[1])}"
        )
        checks.append(AxiomCheck("elimination-pairwise", witness is None, note))

        fam_witness = _family_elimination_violation(family, full_ce_bound)
        note = (
            f"centers up to size {full_ce_bound}"
            if fam_witness is None
            else f"fails at z={fam_witness[3]} with center {render_set(fam_witness[1])}"
        )
        checks.append(AxiomCheck("elimination-family", fam_witness is None, note))
    else:
        checks.append(
            AxiomCheck("elimination-pairwise", False, "skipped: empty set present")
        )
        checks.append(
            AxiomCheck("elimination-family", False, "skipped: empty set present")
        )

    checks.append(
        AxiomCheck(
            "maximality",
            True,
            "vacuously true: every family over a finite ground set has maximal members",
        )
    )
    return AxiomReport("circuit family", tuple(checks))


class ClosureTable:
    """An explicit set operator tabulated on every subset of a pointed ground.

    The constructor only validates the shape (total on the powerset, values
    inside the ground set); whether the table satisfies the closure axioms
    is the business of :func:`check_closure_axioms`.
    """

    __slots__ = ("ground", "_table")

    def __init__(self, ground: Iterable[int], table: Mapping) -> None:
        ground = pointed(ground)
        raw = {frozenset(k): frozenset(v) for k, v in table.items()}
        ordered: dict[frozenset[int], frozenset[int]] = {}
        for X in subsets_of(ground):
            if X not in raw:
                raise ValueError(f"table is missing the subset {render_set(X)}")
            value = raw[X]
            if not value <= ground:
                raise ValueError(
                    f"table value {render_set(value)} leaves the ground set"
                )
            ordered[X] = value
        if len(raw) != len(ordered):
            extra = set(raw) - set(ordered)
            raise ValueError(f"table has keys outside the powerset: {len(extra)}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "_table", ordered)

    def __setattr__(self, name, value):
        raise AttributeError("ClosureTable is immutable")

    def __call__(self, X: Iterable[int]) -> frozenset[int]:
        key = frozenset(X)
        try:
            return self._table[key]
        except KeyError:
            raise UnknownElement(
                f"{render_set(key - self.ground)} lies outside the ground set"
            ) from None

    def items(self):
        return self._table.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosureTable):
            return NotImplemented
        return self.ground == other.ground and self._table == other._table

    def __repr__(self) -> str:
        return f"ClosureTable(ground={render_set(self.ground)}, {len(self._table)} subsets)"


def _guard_ground(ground: frozenset[int]) -> None:
    if len(ground - {STAR}) > SUBSET_GUARD:
        raise GroundTooLarge(
            f"{len(ground - {STAR})} ordinary elements exceed the "
            f"subset-enumeration guard of {SUBSET_GUARD}"
        )


@lru_cache(maxsize=None)
def closure_table(M: FiniteMatroid) -> ClosureTable:
    """Tabulate the closure operator of ``M`` on every subset of its ground."""
    _guard_ground(M.ground)
    return ClosureTable(M.ground, {X: M.closure(X) for X in subsets_of(M.ground)})


def check_closure_axioms(cl: ClosureTable) -> AxiomReport:
    """Report on the closure axioms: operator laws, exchange, pointedness."""
    ground = cl.ground
    checks = []

    note = ""
    operator_ok = True
    for X, value in cl.items():
        if not X <= value:
            operator_ok, note = False, f"not extensive at {render_set(X)}"
            break
    if operator_ok:
        # Single-element monotonicity suffices by induction on the chain.
        for X, value in cl.items():
            for e in sorted(ground - X):
                if not value <= cl(X | {e}):
                    operator_ok = False
                    note = f"not monotone at {render_set(X)} plus {e}"
                    break
            if not operator_ok:
                break
    if operator_ok:
        for X, value in cl.items():
            if cl(value) != value:
                operator_ok, note = False, f"not idempotent at {render_set(X)}"
                break
    checks.append(AxiomCheck("operator", operator_ok, note))

    exchange_ok, note = True, ""
    for Z, closed in cl.items():
        for x in sorted(ground - closed):
            bigger = cl(Z | {x})
            for y in sorted(bigger - closed):
                if y == x:
                    continue
                if x not in cl(Z | {y}):
                    exchange_ok = False
                    note = f"fails at Z={render_set(Z)}, x={x}, y={y}"
                    break
            if not exchange_ok:
                break
        if not exchange_ok:
            break
    checks.append(AxiomCheck("exchange", exchange_ok, note))

    checks.append(
        AxiomCheck(
            "maximality",
            True,
            "vacuously true: every family over a finite ground set has maximal members",
        )
    )

    pointed_ok = STAR in cl(frozenset())
    checks.append(
        AxiomCheck(
            "pointed", pointed_ok, "" if pointed_ok else "* is not in the closure of {}"
        )
    )
    return AxiomReport("closure table", tuple(checks))


def circuits_from_closure(cl: ClosureTable) -> frozenset[frozenset[int]]:
    """The minimal dependent sets of a validated closure table.

    A set is dependent when some member lies in the closure of the rest.
    Raises when the table fails the operator, exchange, or pointedness
    checks.
    """
    report = check_closure_axioms(cl)
    for name in ("operator", "exchange", "pointed"):
        entry = report[name]
        if not entry.passed:
            raise AxiomViolation(f"closure table fails {name}: {entry.note}")

    def dependent(X: frozenset[int]) -> bool:
        return any(x in cl(X - {x}) for x in X)

    found: list[frozenset[int]] = []
    for X in subsets_of(cl.ground):
        if X and dependent(X) and not any(c < X for c in found):
            found.append(X)
    return frozenset(found)


# ---------------------------------------------------------------------------
# Stock matroids and the brute-force catalog


def free_matroid(size: int) -> FiniteMatroid:
    """Free pointed matroid on elements 1..size."""
    return make_matroid(range(1, size + 1))


def one_point_matroid() -> FiniteMatroid:
    """The zero object: the matroid whose only element is the loop ``*``."""
    return free_matroid(0)


def uniform_matroid(rank: int, size: int) -> FiniteMatroid:
    """Uniform pointed matroid of the given rank on elements 1..size.

    Circuits are the subsets of size rank + 1; for rank >= size this is the
    free matroid.
    """
    if rank < 0:
        raise ValueError("rank must be non-negative")
    elems = range(1, size + 1)
    return make_matroid(elems, itertools.combinations(elems, rank + 1))


CATALOG_GUARD = 4


@lru_cache(maxsize=None)
def catalog(max_nonstar: int = 3) -> tuple[FiniteMatroid, ...]:
    """Every pointed matroid with at most ``max_nonstar`` ordinary elements.

    Brute force: for each ground {*, 1..k} take every family of nonempty
    subsets of {1..k} and keep the ones accepted by :func:`make_matroid`.
    The order is deterministic; this is the probe universe used by the
    category-level checks.
    """
    if max_nonstar > CATALOG_GUARD:
        raise GroundTooLarge(
            f"catalog enumeration is capped at {CATALOG_GUARD} ordinary elements"
        )
    found = []
    for k in range(max_nonstar + 1):
        elems = range(1, k + 1)
        pool = [
            frozenset(c)
            for size in range(1, k + 1)
            for c in itertools.combinations(elems, size)
        ]
        for picks in itertools.product((False, True), repeat=len(pool)):
            family = [c for c, keep in zip(pool, picks) if keep]
            try:
                found.append(make_matroid(elems, family))
            except (NotAntichain, EliminationFailure):
                continue
    return tuple(found)
