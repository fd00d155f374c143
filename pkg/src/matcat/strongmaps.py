"""Pointed ground maps, the strong-map conditions, and the admissible classes.

A strong map is a pointed map whose image of every closure lands in the
closure of the image.  Three equivalent tests are implemented: closure
containment, flat preimages, and the induced lattice map.  On top of strong
maps sit the two admissible classes: monos that are isomorphisms onto a
pointed restriction, and epis that factor as a contraction followed by an
isomorphism.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Mapping

from .core import STAR, FiniteMatroid, closure_table
from .errors import (
    GroundMismatch,
    GroundTooLarge,
    NotAdmissible,
    NotStrong,
    UnknownElement,
)
from .lattices import flats
from .minors import contract, restrict

ENUMERATION_GUARD = 1_000_000


class PointedMap:
    """A total function between pointed ground sets fixing the loop ``*``."""

    __slots__ = ("source", "target", "_assign", "_key")

    def __init__(
        self,
        source: Iterable[int],
        target: Iterable[int],
        assignment: Mapping[int, int],
    ) -> None:
        source = frozenset(source)
        target = frozenset(target)
        if STAR not in source or STAR not in target:
            raise GroundMismatch("pointed ground sets must contain *")
        assign = dict(assignment)
        assign.setdefault(STAR, STAR)
        if assign[STAR] != STAR:
            raise GroundMismatch("the distinguished loop must map to itself")
        if set(assign) != set(source):
            raise GroundMismatch("assignment must be total on the source ground")
        if not set(assign.values()) <= set(target):
            raise GroundMismatch("assignment leaves the target ground")
        self.source = source
        self.target = target
        self._assign = assign
        self._key = (source, target, tuple(sorted(assign.items())))

    def __call__(self, e: int) -> int:
        try:
            return self._assign[e]
        except KeyError:
            raise UnknownElement(f"{e} is not in the source ground") from None

    def image(self, X: Iterable[int]) -> frozenset[int]:
        return frozenset(self._assign[e] for e in X)

    def preimage(self, Y: Iterable[int]) -> frozenset[int]:
        Y = frozenset(Y)
        return frozenset(e for e, v in self._assign.items() if v in Y)

    def then(self, other: "PointedMap") -> "PointedMap":
        """Composite map: first self, then other."""
        if self.target != other.source:
            raise GroundMismatch("composition needs matching grounds")
        return PointedMap(
            self.source,
            other.target,
            {e: other._assign[v] for e, v in self._assign.items()},
        )

    def restrict_to(self, sub_source: Iterable[int]) -> "PointedMap":
        """The same assignment on a smaller pointed source."""
        sub = frozenset(sub_source) | {STAR}
        if not sub <= self.source:
            raise GroundMismatch("restriction leaves the source ground")
        return PointedMap(sub, self.target, {e: self._assign[e] for e in sub})

    def is_injective(self) -> bool:
        return len(set(self._assign.values())) == len(self._assign)

    def is_surjective(self) -> bool:
        return set(self._assign.values()) == set(self.target)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointedMap):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        body = " ".join(
            f"{e}>{v}" for e, v in sorted(self._assign.items()) if e != STAR
        )
        return f"PointedMap({body or '*'})"


def identity_pointed(ground: Iterable[int]) -> PointedMap:
    ground = frozenset(ground)
    return PointedMap(ground, ground, {e: e for e in ground})


class StrongMap:
    """A pointed map together with the matroids it is strong between.

    ``certificate`` records which of the three conditions was verified at
    construction time.  Build instances through :func:`strong_map`.
    """

    __slots__ = ("map", "source", "target", "certificate")

    def __init__(
        self,
        map: PointedMap,
        source: FiniteMatroid,
        target: FiniteMatroid,
        certificate: int,
    ) -> None:
        if map.source != source.ground or map.target != target.ground:
            raise GroundMismatch("map grounds do not match the matroids")
        self.map = map
        self.source = source
        self.target = target
        self.certificate = certificate

    def __call__(self, e: int) -> int:
        return self.map(e)

    def then(self, other: "StrongMap") -> "StrongMap":
        """Composite strong map, re-certified by closure containment."""
        if self.target != other.source:
            raise GroundMismatch("composition needs matching matroids")
        return strong_map(self.map.then(other.map), self.source, other.target)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StrongMap):
            return NotImplemented
        return (
            self.map == other.map
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self) -> int:
        return hash((self.map, self.source, self.target))

    def __repr__(self) -> str:
        return f"StrongMap({self.map!r}: {self.source!r} -> {self.target!r})"


def _check_grounds(f: PointedMap, M: FiniteMatroid, N: FiniteMatroid) -> None:
    if f.source != M.ground or f.target != N.ground:
        raise GroundMismatch("map grounds do not match the matroids")


def _strong_by_closure(f: PointedMap, M: FiniteMatroid, N: FiniteMatroid) -> bool:
    source_cl = closure_table(M)
    target_cl = closure_table(N)
    assign = f._assign
    for A, closed in source_cl.items():
        image_closed = {assign[e] for e in closed}
        if not image_closed <= target_cl(frozenset(assign[e] for e in A)):
            return False
    return True


def _strong_by_flat_preimages(f: PointedMap, M, N) -> bool:
    source_cl = closure_table(M)
    for F in flats(N):
        pre = f.preimage(F)
        if source_cl(pre) != pre:
            return False
    return True


def _strong_by_lattice(f: PointedMap, M, N) -> bool:
    """The induced map on flats behaves like a lattice morphism induced by f.

    Checked: bottom goes to bottom, the flat of each point goes to the flat
    of its image, binary joins are preserved, and atoms land on atoms or
    the bottom.  Pointwise compatibility is part of being induced by the
    ground map; without it join preservation alone is strictly weaker.
    """
    LM, LN = flats(M), flats(N)
    target_cl = closure_table(N)
    source_cl = closure_table(M)

    def sharp(F: frozenset[int]) -> frozenset[int]:
        return target_cl(f.image(F))

    if sharp(LM.bottom) != LN.bottom:
        return False
    for x in sorted(M.ground):
        if sharp(source_cl(frozenset({x}))) != target_cl(frozenset({f(x)})):
            return False
    members = sorted(LM.flats, key=lambda s: (len(s), tuple(sorted(s))))
    for i, F in enumerate(members):
        sf = sharp(F)
        for G in members[i:]:
            if sharp(LM.join(F, G)) != LN.join(sf, sharp(G)):
                return False
    for A in LM.atoms:
        image = sharp(A)
        if image != LN.bottom and image not in LN.atoms:
            return False
    return True


_CONDITIONS = {
    1: _strong_by_closure,
    2: _strong_by_flat_preimages,
    3: _strong_by_lattice,
}


def is_strong(
    f: PointedMap, M: FiniteMatroid, N: FiniteMatroid, condition: int = 1
) -> bool:
    """Exhaustively test one of the three equivalent strong-map conditions."""
    _check_grounds(f, M, N)
    try:
        test = _CONDITIONS[condition]
    except KeyError:
        raise ValueError(f"condition must be 1, 2 or 3, not {condition!r}") from None
    return test(f, M, N)


def strong_map(
    f: PointedMap | Mapping[int, int],
    M: FiniteMatroid,
    N: FiniteMatroid,
    condition: int = 1,
) -> StrongMap:
    """Certify a pointed map as strong, or raise ``NotStrong``."""
    if not isinstance(f, PointedMap):
        f = PointedMap(M.ground, N.ground, f)
    if not is_strong(f, M, N, condition):
        raise NotStrong(f"{f!r} violates strong-map condition {condition}")
    return StrongMap(f, M, N, certificate=condition)


def identity_map(M: FiniteMatroid) -> StrongMap:
    return strong_map(identity_pointed(M.ground), M, M)


def restriction_map(M: FiniteMatroid, S: Iterable[int]) -> StrongMap:
    """The inclusion of the pointed restriction to S back into M."""
    R = restrict(M, S)
    return strong_map(PointedMap(R.ground, M.ground, {e: e for e in R.ground}), R, M)


def contraction_map(M: FiniteMatroid, S: Iterable[int]) -> StrongMap:
    """The collapse-to-``*`` map from M onto the contraction by S.

    Well defined as a pointed map precisely because ``*`` is available as a
    common image for the contracted elements.
    """
    C = contract(M, S)
    gone = M.ground - C.ground
    assign = {e: STAR if e in gone else e for e in M.ground}
    return strong_map(PointedMap(M.ground, C.ground, assign), M, C)


@lru_cache(maxsize=None)
def _enumerate_strong(M: FiniteMatroid, N: FiniteMatroid) -> tuple[StrongMap, ...]:
    src = sorted(M.nonstar)
    tgt = sorted(N.ground)
    if len(tgt) ** len(src) > ENUMERATION_GUARD:
        raise GroundTooLarge(
            f"{len(tgt)}^{len(src)} pointed maps exceed the enumeration guard"
        )
    out = []
    for values in itertools.product(tgt, repeat=len(src)):
        assign = dict(zip(src, values))
        assign[STAR] = STAR
        f = PointedMap(M.ground, N.ground, assign)
        if _strong_by_closure(f, M, N):
            out.append(StrongMap(f, M, N, certificate=1))
    return tuple(out)


def enumerate_strong_maps(
    M: FiniteMatroid, N: FiniteMatroid, max_ground: int | None = 6
) -> tuple[StrongMap, ...]:
    """All strong maps from M to N, in lexicographic assignment order.

    ``max_ground`` bounds both ground sizes; pass None to rely only on the
    global guard on the number of candidate assignments.
    """
    if max_ground is not None:
        if len(M.ground) > max_ground or len(N.ground) > max_ground:
            raise GroundTooLarge(
                f"ground sets exceed the enumeration bound of {max_ground}"
            )
    return _enumerate_strong(M, N)


def is_monic(f: StrongMap) -> bool:
    """Monic in the category of pointed matroids: injective on grounds."""
    return f.map.is_injective()


def is_epic(f: StrongMap) -> bool:
    """Epic in the category of pointed matroids: surjective on grounds."""
    return f.map.is_surjective()


def transport_circuits(
    circuits: Iterable[frozenset[int]], via: PointedMap | Mapping[int, int]
) -> frozenset[frozenset[int]]:
    """Relabel a circuit family along a map (expected to be injective)."""
    lookup = via._assign if isinstance(via, PointedMap) else dict(via)
    return frozenset(frozenset(lookup[e] for e in C) for C in circuits)


def is_isomorphism(f: StrongMap) -> bool:
    """Bijective on grounds and carries circuits exactly onto circuits."""
    return (
        f.map.is_injective()
        and f.map.is_surjective()
        and transport_circuits(f.source.circuits, f.map) == f.target.circuits
    )


@lru_cache(maxsize=None)
def is_admissible_mono(f: StrongMap) -> bool:
    """Strong injection landing isomorphically on a pointed restriction."""
    if not f.map.is_injective():
        return False
    image = f.map.image(f.source.ground)
    transported = transport_circuits(f.source.circuits, f.map)
    return transported == restrict(f.target, image - {STAR}).circuits


@lru_cache(maxsize=None)
def is_admissible_epi(f: StrongMap) -> bool:
    """Strong map factoring as a contraction followed by an isomorphism.

    With S the preimage of ``*`` (off ``*`` itself), the map must induce a
    bijection from the remaining ground onto the target that carries the
    circuits of the contraction by S exactly onto the target circuits.
    """
    collapsed = f.map.preimage({STAR}) - {STAR}
    rest = f.source.ground - collapsed
    pairs = {e: f(e) for e in rest}
    if len(set(pairs.values())) != len(pairs):
        return False
    if set(pairs.values()) != set(f.target.ground):
        return False
    quotient = contract(f.source, collapsed)
    return transport_circuits(quotient.circuits, pairs) == f.target.circuits


def mono_factorization(f: StrongMap) -> tuple[StrongMap, StrongMap]:
    """Split an admissible mono as an isomorphism followed by an inclusion."""
    if not is_admissible_mono(f):
        raise NotAdmissible(f"{f!r} is not an admissible mono")
    image = f.map.image(f.source.ground)
    R = restrict(f.target, image - {STAR})
    iso = strong_map(
        PointedMap(f.source.ground, R.ground, dict(f.map._assign)), f.source, R
    )
    return iso, restriction_map(f.target, image - {STAR})


def epi_factorization(f: StrongMap) -> tuple[StrongMap, StrongMap]:
    """Split an admissible epi as a contraction followed by an isomorphism."""
    if not is_admissible_epi(f):
        raise NotAdmissible(f"{f!r} is not an admissible epi")
    collapsed = f.map.preimage({STAR}) - {STAR}
    c = contraction_map(f.source, collapsed)
    Q = c.target
    iso = strong_map(
        PointedMap(Q.ground, f.target.ground, {e: f(e) for e in Q.ground}),
        Q,
        f.target,
    )
    return c, iso
