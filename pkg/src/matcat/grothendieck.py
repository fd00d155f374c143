"""Grothendieck-style classes of finite matroids and the symbolic
deletion-contraction collapse over the integers.

The class of a finite matroid is the pair (rank, corank), additive along
restriction-contraction splits.  Deletion-contraction rewriting on
isomorphism-class labels, applied to a rank-r uniform family over a
countable ground set, forces the class of every such family to zero in any
ring-valued invariant; the derivation is constructed explicitly, one
logged step at a time, and cancellation can be switched off to show where
a semiring-valued invariant escapes the argument.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .core import STAR, FiniteMatroid, make_matroid, render_set
from .errors import (
    GroundTooLarge,
    LabelAbsent,
    SideConditionViolated,
    UnknownElement,
)
from .minors import contract, delete, restrict


@dataclass(frozen=True)
class KClass:
    """A rank-corank pair; addition is componentwise."""

    rank: int
    corank: int

    def __add__(self, other: "KClass") -> "KClass":
        return KClass(self.rank + other.rank, self.corank + other.corank)

    def __str__(self) -> str:
        return f"({self.rank}, {self.corank})"


def k0_class(M: FiniteMatroid) -> KClass:
    """The (rank, corank) class; the distinguished loop is not counted."""
    r = M.rank()
    return KClass(r, len(M.nonstar) - r)


def check_additivity(M: FiniteMatroid, S: Iterable[int]) -> bool:
    """Class of M equals class of the restriction plus class of the contraction."""
    S = frozenset(S)
    if not S <= M.ground:
        raise UnknownElement(f"{render_set(S - M.ground)} lies outside the ground set")
    return k0_class(M) == k0_class(restrict(M, S)) + k0_class(contract(M, S))


# ---------------------------------------------------------------------------
# Isomorphism-class labels


@dataclass(frozen=True)
class UniformOmega:
    """The rank-r uniform family on a countably infinite ground set.

    Removing one element leaves a countably infinite ground set, so
    single-element deletion fixes this label and contraction drops the
    rank by one.
    """

    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")

    def __str__(self) -> str:
        return f"U_{self.rank}(omega)"


@dataclass(frozen=True)
class FiniteClass:
    """Canonical label of a finite matroid up to isomorphism.

    ``circuits`` is the lexicographically least relabeling of the ordinary
    circuits onto {1..size}; the loop circuit is implied.
    """

    size: int
    circuits: tuple[tuple[int, ...], ...]

    def matroid(self) -> FiniteMatroid:
        return make_matroid(range(1, self.size + 1), self.circuits)

    def __str__(self) -> str:
        body = ",".join("".join(str(e) for e in C) for C in self.circuits)
        return f"M[{self.size};{body}]"


class _ZeroLabel:
    """Label of the zero object, the one-point matroid."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __str__(self) -> str:
        return "M[0;]"

    def __repr__(self) -> str:
        return "ZERO"


ZERO = _ZeroLabel()

ClassLabel = UniformOmega | FiniteClass | _ZeroLabel

_LABEL_GUARD = 8


@lru_cache(maxsize=None)
def finite_label(M: FiniteMatroid) -> ClassLabel:
    """Canonical isomorphism-class label of a finite matroid.

    All relabelings of the ordinary elements onto {1..k} are tried and the
    least circuit family wins; k is guarded since this is factorial work.
    """
    elems = sorted(M.nonstar)
    k = len(elems)
    if k == 0:
        return ZERO
    if k > _LABEL_GUARD:
        raise GroundTooLarge(
            f"canonical labeling is capped at {_LABEL_GUARD} ordinary elements"
        )
    loop_circuit = frozenset({STAR})
    best = None
    for perm in itertools.permutations(range(1, k + 1)):
        relabel = dict(zip(elems, perm))
        family = tuple(
            sorted(
                tuple(sorted(relabel[e] for e in C))
                for C in M.circuits
                if C != loop_circuit
            )
        )
        if best is None or family < best:
            best = family
    return FiniteClass(k, best)


def _label_key(label: ClassLabel) -> tuple:
    if isinstance(label, UniformOmega):
        return (0, -label.rank)
    if isinstance(label, FiniteClass):
        return (1, label.size, label.circuits)
    return (2,)


class FormalSum:
    """An integer combination of class labels; zero coefficients vanish."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ClassLabel, int] | Iterable = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ClassLabel, int] = {}
        for label, coeff in items:
            acc[label] = acc.get(label, 0) + coeff
        self._terms = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def of(cls, label: ClassLabel, coeff: int = 1) -> "FormalSum":
        return cls([(label, coeff)])

    def coefficient(self, label: ClassLabel) -> int:
        return self._terms.get(label, 0)

    def terms(self) -> tuple[tuple[ClassLabel, int], ...]:
        return tuple(sorted(self._terms.items(), key=lambda kv: _label_key(kv[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(
            list(self._terms.items())
            + [(label, -c) for label, c in other._terms.items()]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for label, coeff in self.terms():
            body = f"[{label}]" if abs(coeff) == 1 else f"{abs(coeff)}*[{label}]"
            parts.append(("- " if coeff < 0 else "+ ") + body)
        head = parts[0][2:] if parts[0].startswith("+ ") else "-" + parts[0][2:]
        return " ".join([head] + parts[1:])

    def __repr__(self) -> str:
        return f"FormalSum({self})"


def delete_contract_step(
    total: FormalSum, label: ClassLabel, e: int
) -> FormalSum:
    """Replace one occurrence of [label] by [label minus e] plus [label / e].

    The element must be neither a loop nor a coloop of the labeled matroid.
    On a countable uniform label the deletion leaves the label unchanged
    (a countable set minus a point is still countable), so the rewrite is a
    net gain of the contracted label.
    """
    if total.coefficient(label) == 0:
        raise LabelAbsent(f"[{label}] does not occur in the sum")
    if isinstance(label, UniformOmega):
        if not isinstance(e, int) or e < 1:
            raise UnknownElement("elements of the countable ground are positive integers")
        if label.rank == 0:
            raise SideConditionViolated(
                "every element of the rank-0 uniform family is a loop"
            )
        replacement = FormalSum(
            [(UniformOmega(label.rank), 1), (UniformOmega(label.rank - 1), 1)]
        )
        return total - FormalSum.of(label) + replacement
    if isinstance(label, FiniteClass):
        M = label.matroid()
        if e not in M.nonstar:
            raise UnknownElement(f"{e} is not an ordinary element of [{label}]")
        if M.is_loop(e):
            raise SideConditionViolated(f"{e} is a loop of [{label}]")
        if M.is_coloop(e):
            raise SideConditionViolated(f"{e} is a coloop of [{label}]")
        replacement = FormalSum(
            [
                (finite_label(delete(M, {e})), 1),
                (finite_label(contract(M, {e})), 1),
            ]
        )
        return total - FormalSum.of(label) + replacement
    raise SideConditionViolated("the zero label has no ordinary elements")


# ---------------------------------------------------------------------------
# The collapse derivation


@dataclass(frozen=True)
class DerivationStep:
    """One transcript step of an equation rewrite between formal sums."""

    kind: str  # rewrite | cancel | blocked | conclude
    lhs: FormalSum
    rhs: FormalSum
    label: ClassLabel | None = None
    element: int | None = None

    def line(self) -> str:
        if self.kind == "rewrite":
            return (
                f"rewrite [{self.label}] at e={self.element}: {self.lhs} = {self.rhs}"
            )
        if self.kind == "cancel":
            return f"cancel [{self.label}] on both sides: {self.lhs} = {self.rhs}"
        if self.kind == "blocked":
            return (
                f"blocked: cancelling [{self.label}] needs additive inverses, "
                "which a semiring does not have"
            )
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class Derivation:
    """A machine-checkable rewrite log ending, over a ring, in a collapse."""

    start: FormalSum
    steps: tuple[DerivationStep, ...]
    cancellation: bool

    @property
    def collapsed(self) -> bool:
        last = self.steps[-1]
        return last.kind == "conclude" and last.rhs.is_zero()

    def transcript(self) -> str:
        lines = [f"{self.start} = {self.start}"]
        lines.extend(step.line() for step in self.steps)
        return "\n".join(lines) + "\n"

    def verify(self) -> bool:
        """Replay every step: rewrites through delete_contract_step, the
        cancellation through formal subtraction, the conclusion by flip."""
        lhs, rhs = self.start, self.start
        for step in self.steps:
            if step.kind == "rewrite":
                rhs = delete_contract_step(rhs, step.label, step.element)
                if step.lhs != lhs or step.rhs != rhs:
                    return False
            elif step.kind == "cancel":
                if not self.cancellation:
                    return False
                term = FormalSum.of(step.label)
                lhs, rhs = lhs - term, rhs - term
                if step.lhs != lhs or step.rhs != rhs:
                    return False
            elif step.kind == "blocked":
                if self.cancellation:
                    return False
            elif step.kind == "conclude":
                if step.lhs != rhs or step.rhs != lhs:
                    return False
            else:
                return False
        return True


def derive_collapse(r: int, cancellation: bool = True) -> Derivation:
    """Derive that the rank-r countable uniform class is forced to zero.

    One deletion-contraction rewrite of the rank-(r+1) generator equation
    yields the generator plus the rank-r label; cancelling the generator
    from both sides, an explicit logged step, leaves the rank-r label equal
    to zero.  With ``cancellation`` off the derivation records where the
    argument is blocked instead.
    """
    if r < 0:
        raise ValueError("rank must be non-negative")
    generator = UniformOmega(r + 1)
    start = FormalSum.of(generator)
    rewritten = delete_contract_step(start, generator, 1)
    steps = [
        DerivationStep("rewrite", start, rewritten, label=generator, element=1)
    ]
    if not cancellation:
        steps.append(DerivationStep("blocked", start, rewritten, label=generator))
        return Derivation(start, tuple(steps), cancellation=False)
    term = FormalSum.of(generator)
    lhs, rhs = start - term, rewritten - term
    steps.append(DerivationStep("cancel", lhs, rhs, label=generator))
    steps.append(DerivationStep("conclude", rhs, lhs))
    return Derivation(start, tuple(steps), cancellation=True)
