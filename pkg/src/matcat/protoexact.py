"""Bi-Cartesian square completion and probe-based proto-exact axiom checks.

The category of pointed matroids with strong maps carries two admissible
classes: monos onto restrictions and contraction-shaped epis.  Squares of
such maps are completed here from either a cospan or a span, and their
pullback / pushout universal properties are verified relative to an
explicit probe universe.  Probe-relative verification is the only
desk-scale reading of a property quantified over a proper class; every
report states the universe it used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import STAR, AxiomCheck, AxiomReport, FiniteMatroid, one_point_matroid
from .errors import CommutationFailure, GroundMismatch, NotAdmissible, NotStrong
from .strongmaps import (
    PointedMap,
    StrongMap,
    contraction_map,
    enumerate_strong_maps,
    is_admissible_epi,
    is_admissible_mono,
    is_isomorphism,
    restriction_map,
    strong_map,
)


class Square:
    """A commuting square: monos ``i``/``iprime`` across, epis ``j``/``jprime`` down.

    Corner layout::

        M  --i-->  N
        |          |
        j          jprime
        v          v
        M' --i'--> N'
    """

    __slots__ = ("i", "j", "iprime", "jprime")

    def __init__(self, i: StrongMap, j: StrongMap, iprime: StrongMap, jprime: StrongMap):
        if i.source != j.source:
            raise GroundMismatch("i and j must share their source corner")
        if i.target != jprime.source:
            raise GroundMismatch("jprime must start at the target of i")
        if j.target != iprime.source:
            raise GroundMismatch("iprime must start at the target of j")
        if iprime.target != jprime.target:
            raise GroundMismatch("iprime and jprime must share their target corner")
        if i.map.then(jprime.map) != j.map.then(iprime.map):
            raise CommutationFailure("the square does not commute")
        self.i = i
        self.j = j
        self.iprime = iprime
        self.jprime = jprime

    @property
    def m(self) -> FiniteMatroid:
        return self.i.source

    @property
    def n(self) -> FiniteMatroid:
        return self.i.target

    @property
    def mprime(self) -> FiniteMatroid:
        return self.j.target

    @property
    def nprime(self) -> FiniteMatroid:
        return self.iprime.target

    def __repr__(self) -> str:
        return (
            f"Square({self.m!r} -> {self.n!r} over {self.mprime!r} -> {self.nprime!r})"
        )


def complete_square_from_cospan(iprime: StrongMap, jprime: StrongMap) -> Square:
    """Fill the missing corner of  M' >--i'--> N' <<--j'-- N.

    The epi is normalized to a contraction by T and the mono to its image;
    the new corner is the restriction of N to T together with the preimage
    of that image, so that contracting T there lands back on M' through the
    normalizing isomorphisms.
    """
    if iprime.target != jprime.target:
        raise GroundMismatch("cospan legs must share their target")
    if not is_admissible_mono(iprime):
        raise NotAdmissible("the mono leg is not an admissible mono")
    if not is_admissible_epi(jprime):
        raise NotAdmissible("the epi leg is not an admissible epi")
    N = jprime.source
    Mprime = iprime.source
    collapsed = jprime.map.preimage({STAR}) - {STAR}
    mono_image = iprime.map.image(Mprime.ground)
    pulled = frozenset(
        e for e in N.ground - collapsed if jprime(e) in mono_image
    )
    i = restriction_map(N, (collapsed | pulled) - {STAR})
    corner = i.source
    into_mprime = {iprime(x): x for x in Mprime.ground}
    assign = {
        e: STAR if e in collapsed else into_mprime[jprime(e)] for e in corner.ground
    }
    j = strong_map(PointedMap(corner.ground, Mprime.ground, assign), corner, Mprime)
    return Square(i=i, j=j, iprime=iprime, jprime=jprime)


def complete_square_from_span(j: StrongMap, i: StrongMap) -> Square:
    """Fill the missing corner of  M' <<--j-- M >--i--> N.

    The target corner is N contracted by the image of the collapsed set;
    the induced mono carries M' onto the corresponding restriction.
    """
    if j.source != i.source:
        raise GroundMismatch("span legs must share their source")
    if not is_admissible_epi(j):
        raise NotAdmissible("the epi leg is not an admissible epi")
    if not is_admissible_mono(i):
        raise NotAdmissible("the mono leg is not an admissible mono")
    M = j.source
    Mprime = j.target
    N = i.target
    collapsed = j.map.preimage({STAR}) - {STAR}
    jprime = contraction_map(N, i.map.image(collapsed) - {STAR})
    back = {j(x): x for x in M.ground if x not in collapsed}
    assign = {y: i(back[y]) for y in Mprime.ground}
    iprime = strong_map(
        PointedMap(Mprime.ground, jprime.target.ground, assign),
        Mprime,
        jprime.target,
    )
    return Square(i=i, j=j, iprime=iprime, jprime=jprime)


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of one universal-property check against a probe universe.

    Existence failures (no mediating map) and uniqueness failures (more
    than one) are kept apart because they diagnose different bugs.
    """

    kind: str
    probes: int
    pairs_checked: int
    existence_failures: tuple[str, ...]
    uniqueness_failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.existence_failures and not self.uniqueness_failures


def cartesian_report(sq: Square, probes: Sequence[FiniteMatroid]) -> ProbeReport:
    """Pullback check: cones over the cospan factor uniquely through M."""
    existence, uniqueness = [], []
    pairs = 0
    for P in probes:
        into_n = enumerate_strong_maps(P, sq.n, max_ground=None)
        into_mprime = enumerate_strong_maps(P, sq.mprime, max_ground=None)
        into_m = enumerate_strong_maps(P, sq.m, max_ground=None)
        jp, ip = sq.jprime.map, sq.iprime.map
        i_map, j_map = sq.i.map, sq.j.map
        for u in into_n:
            pushed = u.map.then(jp)
            for v in into_mprime:
                if pushed != v.map.then(ip):
                    continue
                pairs += 1
                mediators = [
                    w
                    for w in into_m
                    if w.map.then(i_map) == u.map and w.map.then(j_map) == v.map
                ]
                if not mediators:
                    existence.append(f"no mediator for {u.map!r}, {v.map!r} from {P!r}")
                elif len(mediators) > 1:
                    uniqueness.append(
                        f"{len(mediators)} mediators for {u.map!r}, {v.map!r} from {P!r}"
                    )
    return ProbeReport(
        "cartesian", len(probes), pairs, tuple(existence), tuple(uniqueness)
    )


def cocartesian_report(sq: Square, probes: Sequence[FiniteMatroid]) -> ProbeReport:
    """Pushout check: cocones under the span factor uniquely through N'."""
    existence, uniqueness = [], []
    pairs = 0
    for P in probes:
        from_n = enumerate_strong_maps(sq.n, P, max_ground=None)
        from_mprime = enumerate_strong_maps(sq.mprime, P, max_ground=None)
        from_nprime = enumerate_strong_maps(sq.nprime, P, max_ground=None)
        i_map, j_map = sq.i.map, sq.j.map
        jp, ip = sq.jprime.map, sq.iprime.map
        for u in from_n:
            pulled = i_map.then(u.map)
            for v in from_mprime:
                if pulled != j_map.then(v.map):
                    continue
                pairs += 1
                mediators = [
                    w
                    for w in from_nprime
                    if jp.then(w.map) == u.map and ip.then(w.map) == v.map
                ]
                if not mediators:
                    existence.append(f"no mediator for {u.map!r}, {v.map!r} into {P!r}")
                elif len(mediators) > 1:
                    uniqueness.append(
                        f"{len(mediators)} mediators for {u.map!r}, {v.map!r} into {P!r}"
                    )
    return ProbeReport(
        "cocartesian", len(probes), pairs, tuple(existence), tuple(uniqueness)
    )


def is_cartesian(sq: Square, probes: Sequence[FiniteMatroid]) -> bool:
    return cartesian_report(sq, probes).ok


def is_cocartesian(sq: Square, probes: Sequence[FiniteMatroid]) -> bool:
    return cocartesian_report(sq, probes).ok


def is_bicartesian(sq: Square, probes: Sequence[FiniteMatroid]) -> bool:
    return is_cartesian(sq, probes) and is_cocartesian(sq, probes)


Oracle = Callable[[StrongMap], bool]


def _hom_tables(universe, mono_oracle: Oracle, epi_oracle: Oracle):
    monos: dict[tuple, tuple[StrongMap, ...]] = {}
    epis: dict[tuple, tuple[StrongMap, ...]] = {}
    homs: dict[tuple, tuple[StrongMap, ...]] = {}
    for A in universe:
        for B in universe:
            maps = enumerate_strong_maps(A, B, max_ground=None)
            homs[(A, B)] = maps
            monos[(A, B)] = tuple(f for f in maps if mono_oracle(f))
            epis[(A, B)] = tuple(f for f in maps if epi_oracle(f))
    return homs, monos, epis


def _assemble_squares(universe, monos, epis):
    for M in universe:
        for N in universe:
            for i in monos[(M, N)]:
                for Mp in universe:
                    for j in epis[(M, Mp)]:
                        for Np in universe:
                            for ip in monos[(Mp, Np)]:
                                bottom = j.map.then(ip.map)
                                for jp in epis[(N, Np)]:
                                    if i.map.then(jp.map) == bottom:
                                        yield Square(i, j, ip, jp)


def check_proto_exact_axioms(
    universe: Iterable[FiniteMatroid],
    probes: Iterable[FiniteMatroid] | None = None,
    mono_oracle: Oracle | None = None,
    epi_oracle: Oracle | None = None,
) -> AxiomReport:
    """Verify the five proto-exact axioms over a finite universe of matroids.

    Axiom failures become report entries.  The membership oracles default
    to the real admissibility tests and exist so that tests can inject
    corrupted ones as negative controls.
    """
    universe = tuple(universe)
    probes = universe if probes is None else tuple(probes)
    mono_oracle = mono_oracle or is_admissible_mono
    epi_oracle = epi_oracle or is_admissible_epi
    homs, monos, epis = _hom_tables(universe, mono_oracle, epi_oracle)
    checks = []

    # Axiom 1: maps out of and into the zero object are admissible.
    zero = one_point_matroid()
    failures = []
    for M in universe:
        from_zero = strong_map(
            PointedMap(zero.ground, M.ground, {STAR: STAR}), zero, M
        )
        if not mono_oracle(from_zero):
            failures.append(f"0 -> {M!r} not an admissible mono")
        to_zero = strong_map(
            PointedMap(M.ground, zero.ground, {e: STAR for e in M.ground}), M, zero
        )
        if not epi_oracle(to_zero):
            failures.append(f"{M!r} -> 0 not an admissible epi")
    checks.append(
        AxiomCheck("zero-maps-admissible", not failures, "; ".join(failures[:3]))
    )

    # Axiom 2: both classes compose and contain every isomorphism.
    failures = []
    for A in universe:
        for B in universe:
            for f in homs[(A, B)]:
                if is_isomorphism(f):
                    if not mono_oracle(f):
                        failures.append(f"iso {f.map!r} outside the mono class")
                    if not epi_oracle(f):
                        failures.append(f"iso {f.map!r} outside the epi class")
            for C in universe:
                for f in monos[(A, B)]:
                    for g in monos[(B, C)]:
                        if not mono_oracle(f.then(g)):
                            failures.append(
                                f"mono composite {f.map!r};{g.map!r} escapes the class"
                            )
                for f in epis[(A, B)]:
                    for g in epis[(B, C)]:
                        if not epi_oracle(f.then(g)):
                            failures.append(
                                f"epi composite {f.map!r};{g.map!r} escapes the class"
                            )
    checks.append(
        AxiomCheck("classes-closed", not failures, "; ".join(failures[:3]))
    )

    # Axiom 3: admissible commuting squares are pullbacks iff pushouts.
    failures = []
    squares = 0
    for sq in _assemble_squares(universe, monos, epis):
        squares += 1
        if is_cartesian(sq, probes) != is_cocartesian(sq, probes):
            failures.append(f"cartesian/cocartesian disagree on {sq!r}")
    checks.append(
        AxiomCheck(
            "cartesian-iff-cocartesian",
            not failures,
            "; ".join(failures[:3]) or f"{squares} squares checked",
        )
    )

    # Axiom 4: every admissible cospan completes to a bi-Cartesian square.
    failures = []
    completions = 0
    for Np in universe:
        for Mp in universe:
            for ip in monos[(Mp, Np)]:
                for N in universe:
                    for jp in epis[(N, Np)]:
                        completions += 1
                        try:
                            sq = complete_square_from_cospan(ip, jp)
                        except (NotAdmissible, NotStrong) as err:
                            failures.append(
                                f"completion of {ip.map!r},{jp.map!r} failed: {err}"
                            )
                            continue
                        if not (mono_oracle(sq.i) and epi_oracle(sq.j)):
                            failures.append(f"completion of {ip.map!r},{jp.map!r} not admissible")
                        elif not is_bicartesian(sq, probes):
                            failures.append(f"completion of {ip.map!r},{jp.map!r} not bi-Cartesian")
    checks.append(
        AxiomCheck(
            "cospan-completion",
            not failures,
            "; ".join(failures[:3]) or f"{completions} cospans completed",
        )
    )

    # Axiom 5: every admissible span completes to a bi-Cartesian square.
    failures = []
    completions = 0
    for M in universe:
        for Mp in universe:
            for j in epis[(M, Mp)]:
                for N in universe:
                    for i in monos[(M, N)]:
                        completions += 1
                        try:
                            sq = complete_square_from_span(j, i)
                        except (NotAdmissible, NotStrong) as err:
                            failures.append(
                                f"completion of {j.map!r},{i.map!r} failed: {err}"
                            )
                            continue
                        if not (mono_oracle(sq.iprime) and epi_oracle(sq.jprime)):
                            failures.append(f"completion of {j.map!r},{i.map!r} not admissible")
                        elif not is_bicartesian(sq, probes):
                            failures.append(f"completion of {j.map!r},{i.map!r} not bi-Cartesian")
    checks.append(
        AxiomCheck(
            "span-completion",
            not failures,
            "; ".join(failures[:3]) or f"{completions} spans completed",
        )
    )

    return AxiomReport(
        "proto-exact structure",
        tuple(checks),
        caveat=(
            f"universal properties verified relative to a probe universe of "
            f"{len(probes)} matroids, not absolutely"
        ),
    )
