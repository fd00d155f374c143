"""Pointed restriction and contraction, and their commuting composition.

Restriction keeps the circuits inside the chosen set; contraction takes the
nonempty inclusion-minimal traces of circuits off the chosen set.  Both are
pointed: restriction always keeps the distinguished loop, contraction never
collapses it.
"""

from __future__ import annotations

from typing import Iterable

from .core import STAR, FiniteMatroid, render_set
from .errors import CommutationFailure, NonDisjoint, UnknownElement


def _subset(M: FiniteMatroid, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    if not S <= M.ground:
        raise UnknownElement(f"{render_set(S - M.ground)} lies outside the ground set")
    return S


def restrict(M: FiniteMatroid, S: Iterable[int]) -> FiniteMatroid:
    """The matroid on S plus ``*`` whose circuits are those of M inside it."""
    keep = _subset(M, S) | {STAR}
    return FiniteMatroid(keep, frozenset(C for C in M.circuits if C <= keep))


def contract(M: FiniteMatroid, S: Iterable[int]) -> FiniteMatroid:
    """The matroid off S whose circuits are minimal nonempty circuit traces."""
    gone = _subset(M, S) - {STAR}
    traces = {C - gone for C in M.circuits}
    traces.discard(frozenset())
    minimal = {C for C in traces if not any(D < C for D in traces)}
    minimal.add(frozenset({STAR}))
    return FiniteMatroid(M.ground - gone, frozenset(minimal))


def delete(M: FiniteMatroid, S: Iterable[int]) -> FiniteMatroid:
    """Restriction to the complement of S."""
    return restrict(M, M.ground - _subset(M, S) - {STAR})


def minor(
    M: FiniteMatroid, restrict_to: Iterable[int], contract_by: Iterable[int]
) -> FiniteMatroid:
    """Restrict to one set and contract another, in either order.

    Both composition orders are computed and compared circuit for circuit;
    a mismatch means a bug in restrict or contract, not bad input.
    """
    S = _subset(M, restrict_to) - {STAR}
    T = _subset(M, contract_by) - {STAR}
    if S & T:
        raise NonDisjoint(
            f"restriction and contraction sets share {render_set(S & T)}"
        )
    first = contract(restrict(M, S | T), T)
    second = restrict(contract(M, T), S)
    if first != second:
        raise CommutationFailure(
            "restrict-then-contract disagrees with contract-then-restrict; "
            "this is an implementation bug"
        )
    return first
