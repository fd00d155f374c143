"""Symbolic matroids on countable ground sets, finite windows, finitization,
and desk-scale colimit and finite-presentability checks.

Infinite matroids appear only through rule-described families over the
positive integers (``OMEGA``); everything observable about them is computed
on finite prefix windows {*, 1..n}.  The finitization of a matroid keeps
exactly its finite circuits; on a corank-r co-uniform family over a
countable set that deletes every circuit, which is the interesting case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import (
    STAR,
    FiniteMatroid,
    free_matroid,
    make_matroid,
    render_set,
    subsets_of,
)
from .errors import (
    GroundMismatch,
    IncompatibleCocone,
    NotStrong,
    UnknownElement,
    UnsupportedDescriptor,
    WindowTooLarge,
)
from .strongmaps import PointedMap, StrongMap, enumerate_strong_maps, is_strong, strong_map

WINDOW_GUARD = 16


class _Omega:
    """Marker for the countably infinite ground set of positive integers."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "omega"


OMEGA = _Omega()


def _check_ground(ground) -> None:
    if ground is OMEGA:
        return
    ground = frozenset(ground)
    if any(not isinstance(e, int) or e < 1 for e in ground):
        raise UnknownElement(
            "descriptor grounds hold ordinary elements only: positive integers"
        )


@dataclass(frozen=True)
class Uniform:
    """Uniform family of the given rank: circuits are the (rank+1)-subsets."""

    rank: int
    ground: object  # frozenset of positive ints, or OMEGA

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        _check_ground(self.ground)
        if self.ground is not OMEGA:
            object.__setattr__(self, "ground", frozenset(self.ground))


@dataclass(frozen=True)
class CoUniform:
    """Co-uniform family of the given corank: circuits are the complements
    of corank-subsets; over an infinite ground every circuit is infinite."""

    corank: int
    ground: object

    def __post_init__(self):
        if self.corank < 1:
            raise ValueError("corank must be positive")
        _check_ground(self.ground)
        if self.ground is not OMEGA:
            object.__setattr__(self, "ground", frozenset(self.ground))


@dataclass(frozen=True)
class Free:
    """Free family: no circuits besides the distinguished loop."""

    ground: object

    def __post_init__(self):
        _check_ground(self.ground)
        if self.ground is not OMEGA:
            object.__setattr__(self, "ground", frozenset(self.ground))


@dataclass(frozen=True)
class Explicit:
    """A concrete finite matroid used as a descriptor."""

    matroid: FiniteMatroid


SymbolicMatroid = Uniform | CoUniform | Free | Explicit


def is_over_omega(S: SymbolicMatroid) -> bool:
    return not isinstance(S, Explicit) and S.ground is OMEGA


def descriptor_str(S: SymbolicMatroid) -> str:
    """Round-trippable rendering matching the CLI descriptor syntax."""

    def ground_str(g) -> str:
        if g is OMEGA:
            return "omega"
        if g == frozenset(range(1, len(g) + 1)):
            return str(len(g))
        return render_set(g)

    if isinstance(S, Uniform):
        return f"uniform({S.rank}, {ground_str(S.ground)})"
    if isinstance(S, CoUniform):
        return f"couniform({S.corank}, {ground_str(S.ground)})"
    if isinstance(S, Free):
        return f"free({ground_str(S.ground)})"
    return f"explicit({S.matroid!r})"


def window_ground(n: int) -> frozenset[int]:
    if n < 0:
        raise WindowTooLarge("window sizes are non-negative")
    if n > WINDOW_GUARD:
        raise WindowTooLarge(f"window {n} exceeds the guard of {WINDOW_GUARD}")
    return frozenset(range(n + 1))


def restrict_window(S: SymbolicMatroid, n: int) -> FiniteMatroid:
    """The pointed restriction of a countable family to {*, 1..n}.

    Computed in closed form: a uniform family keeps its small circuits, a
    co-uniform family over a countable ground has no circuit inside a
    finite window, and a free family stays free.
    """
    if not is_over_omega(S):
        raise UnsupportedDescriptor(
            "restrict_window needs a descriptor over the countable ground set"
        )
    ground = window_ground(n)
    if isinstance(S, Uniform):
        return make_matroid(
            ground - {STAR},
            itertools.combinations(sorted(ground - {STAR}), S.rank + 1),
        )
    return free_matroid(n)


def materialize(S: SymbolicMatroid) -> FiniteMatroid:
    """Expand a finite-ground descriptor into an explicit matroid."""
    if isinstance(S, Explicit):
        return S.matroid
    if S.ground is OMEGA:
        raise UnsupportedDescriptor(
            "a countable family has no finite circuit table; restrict a window instead"
        )
    elems = sorted(S.ground)
    if isinstance(S, Uniform):
        return make_matroid(elems, itertools.combinations(elems, S.rank + 1))
    if isinstance(S, CoUniform):
        size = len(elems) - S.corank
        return make_matroid(elems, itertools.combinations(elems, size))
    return make_matroid(elems)


def finitize(S: SymbolicMatroid) -> SymbolicMatroid:
    """Keep exactly the finite circuits.

    Only a co-uniform family over the countable ground changes: all of its
    circuits are cofinite, so none survive and the result is free.  The
    operation is idempotent.
    """
    if isinstance(S, CoUniform) and S.ground is OMEGA:
        return Free(OMEGA)
    return S


def window_closure(S: SymbolicMatroid, A: Iterable[int], n: int) -> frozenset[int]:
    """Closure inside the countable family, cut down to the window {*, 1..n}.

    Closed form per descriptor: a uniform family of rank r spans everything
    once A holds r ordinary elements; co-uniform and free families add
    nothing but the loop, since no (co)finite circuit fits in a finite set.
    """
    if not is_over_omega(S):
        raise UnsupportedDescriptor("window_closure needs a countable descriptor")
    ground = window_ground(n)
    A = frozenset(A)
    if not A <= ground:
        raise UnknownElement(f"{render_set(A - ground)} lies outside the window")
    if isinstance(S, Uniform) and len(A - {STAR}) >= S.rank:
        return ground
    return A | {STAR}


def finitize_is_strong(S: SymbolicMatroid, n: int | None = None) -> bool:
    """Check closure containment for the identity from the finitization.

    For countable descriptors the check runs over every subset of the
    window {*, 1..n}; for finite descriptors the window is irrelevant and
    the full ground set is used.
    """
    fin = finitize(S)
    if is_over_omega(S):
        if n is None:
            raise WindowTooLarge("countable descriptors need a window size")
        return all(
            window_closure(fin, A, n) <= window_closure(S, A, n)
            for A in subsets_of(window_ground(n))
        )
    M = materialize(S)
    F = materialize(fin)
    return all(F.closure(A) <= M.closure(A) for A in subsets_of(M.ground))


@dataclass(frozen=True)
class WindowedMatroid:
    """A finite prefix window standing in for a countable matroid."""

    base: SymbolicMatroid
    window: int

    def __post_init__(self):
        if not is_over_omega(self.base):
            raise UnsupportedDescriptor("windowed matroids need a countable base")
        window_ground(self.window)

    def matroid(self) -> FiniteMatroid:
        return restrict_window(self.base, self.window)


class Cocone:
    """A compatible family of strong maps out of the finite windows.

    ``legs[n]`` is a strong map from the window-n restriction of ``base``
    into ``target``; compatibility of the legs is the business of
    :func:`colimit_check`.
    """

    __slots__ = ("base", "target", "legs")

    def __init__(
        self,
        base: SymbolicMatroid,
        target: FiniteMatroid,
        legs: Mapping[int, StrongMap],
    ) -> None:
        if not is_over_omega(base):
            raise UnsupportedDescriptor("cocones are over countable descriptors")
        legs = dict(sorted(legs.items()))
        for n, leg in legs.items():
            if leg.source != restrict_window(base, n):
                raise GroundMismatch(f"leg {n} does not start at the window-{n} restriction")
            if leg.target != target:
                raise GroundMismatch(f"leg {n} does not end at the cocone target")
        self.base = base
        self.target = target
        self.legs = legs


def cocone_from_map(
    base: SymbolicMatroid,
    target: FiniteMatroid,
    alpha: PointedMap | Mapping[int, int],
    max_window: int,
) -> Cocone:
    """Build the cocone whose legs are the window restrictions of one map.

    Every restricted leg is certified strong; a failure raises NotStrong.
    """
    top_ground = window_ground(max_window)
    if not isinstance(alpha, PointedMap):
        alpha = PointedMap(top_ground, target.ground, alpha)
    if alpha.source != top_ground or alpha.target != target.ground:
        raise GroundMismatch("the assembling map must go from the top window to the target")
    legs = {}
    for n in range(max_window + 1):
        window = restrict_window(base, n)
        legs[n] = strong_map(alpha.restrict_to(window.ground), window, target)
    return Cocone(base, target, legs)


@dataclass(frozen=True)
class UniversalityReport:
    """Result of checking existence and uniqueness of the induced map."""

    window: int
    compatible: bool
    exists: bool
    unique: bool
    induced: PointedMap | None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.compatible and self.exists and self.unique

    def lines(self) -> list[str]:
        return [
            f"colimit check at window {self.window}:",
            f"  legs compatible: {str(self.compatible).lower()}",
            f"  induced map strong: {str(self.exists).lower()}",
            f"  induced map unique: {str(self.unique).lower()}",
        ] + ([f"  note: {self.note}"] if self.note else [])


def colimit_check(
    base: SymbolicMatroid, cocone: Cocone, max_window: int
) -> UniversalityReport:
    """Verify the colimit universal property of the window diagram.

    The legs up to ``max_window`` must agree on shared windows (violations
    raise IncompatibleCocone).  Their union is the induced ground map; it
    must be strong out of the finitized top window, and it must be the only
    strong map whose window restrictions reproduce the legs.  Uniqueness is
    checked against a full enumeration of strong maps, not just asserted.
    """
    if cocone.base != base:
        raise GroundMismatch("cocone belongs to a different base family")
    for n in range(max_window + 1):
        if n not in cocone.legs:
            raise IncompatibleCocone(f"no leg for window {n}")
    legs = {n: cocone.legs[n] for n in range(max_window + 1)}
    for n in range(max_window + 1):
        for m in range(n, max_window + 1):
            small, big = legs[n], legs[m]
            if any(big(e) != small(e) for e in window_ground(n)):
                raise IncompatibleCocone(
                    f"legs {m} and {n} disagree on the window-{n} prefix"
                )

    assembled: dict[int, int] = {}
    for n in range(max_window + 1):
        for e in window_ground(n):
            assembled[e] = legs[n](e)
    top = restrict_window(finitize(base), max_window)
    induced = PointedMap(top.ground, cocone.target.ground, assembled)

    exists = is_strong(induced, top, cocone.target, condition=1)

    candidates = enumerate_strong_maps(top, cocone.target, max_ground=None)
    agreeing = [
        g
        for g in candidates
        if all(
            g(e) == legs[n](e) for n in range(max_window + 1) for e in window_ground(n)
        )
    ]
    unique = len(agreeing) == 1 and agreeing[0].map == induced

    return UniversalityReport(
        window=max_window,
        compatible=True,
        exists=exists,
        unique=unique,
        induced=induced,
        note=f"{len(candidates)} strong maps enumerated from the top window",
    )


def induce_fin_map(
    f: PointedMap | Mapping[int, int],
    S: SymbolicMatroid,
    T: SymbolicMatroid,
    n: int,
) -> StrongMap:
    """Certify the same ground map between the finitizations at a window.

    The map must already be strong between the window restrictions of S
    and T; it is then re-certified between the finitized windows.  The
    underlying assignment never changes, so identities and composites are
    preserved by construction.
    """
    source = restrict_window(S, n) if is_over_omega(S) else materialize(S)
    target = restrict_window(T, n) if is_over_omega(T) else materialize(T)
    if not isinstance(f, PointedMap):
        f = PointedMap(source.ground, target.ground, f)
    if not is_strong(f, source, target, condition=1):
        raise NotStrong("the map is not strong between the window restrictions")
    fin_source = (
        restrict_window(finitize(S), n) if is_over_omega(S) else materialize(finitize(S))
    )
    fin_target = (
        restrict_window(finitize(T), n) if is_over_omega(T) else materialize(finitize(T))
    )
    return strong_map(
        PointedMap(fin_source.ground, fin_target.ground, {e: f(e) for e in fin_source.ground}),
        fin_source,
        fin_target,
    )


@dataclass(frozen=True)
class WitnessReport:
    """Whether a map into a window chain factors through a finite window."""

    found: bool
    window: int | None
    bound: int
    note: str = ""

    def lines(self) -> list[str]:
        if self.found:
            return [f"factors through window {self.window}"]
        return [f"no factorization window up to {self.bound}: {self.note}"]


def finitely_presented_witness(
    M: FiniteMatroid | WindowedMatroid,
    chain: SymbolicMatroid,
    bound: int,
    ground_map: PointedMap | Mapping[int, int] | None = None,
) -> WitnessReport:
    """Search for the least window a map into the chain factors through.

    A finite matroid always factors: its image is finite, so the least
    window containing the image works, and the factored map is re-certified
    strong.  A windowed matroid stands for the countable matroid itself
    mapping identically into its own chain; its image is unbounded, so no
    window up to the bound can contain it.
    """
    if not is_over_omega(chain):
        raise UnsupportedDescriptor("the chain must be a countable descriptor")
    if isinstance(M, WindowedMatroid):
        if ground_map is not None:
            raise GroundMismatch(
                "the identity self-map is implied for a windowed matroid"
            )
        return WitnessReport(
            found=False,
            window=None,
            bound=bound,
            note="the identity image is the whole countable ground set",
        )
    if ground_map is None:
        raise GroundMismatch("a finite matroid needs an explicit map into the chain")
    if not isinstance(ground_map, PointedMap):
        ground_map = PointedMap(M.ground, window_ground(bound), ground_map)
    if ground_map.source != M.ground:
        raise GroundMismatch("the map must start at the finite matroid")
    image = ground_map.image(M.ground) - {STAR}
    least = max(image, default=0)
    window = restrict_window(chain, least)
    factored = PointedMap(M.ground, window.ground, {e: ground_map(e) for e in M.ground})
    strong_map(factored, M, window)
    return WitnessReport(found=True, window=least, bound=bound)
