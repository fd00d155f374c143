"""The lattice of flats of a finite pointed matroid.

Flats are the closure-fixed subsets, ordered by inclusion.  Meet is
intersection, join is the closure of the union; the lattice is atomic, and
strong maps induce join-preserving maps between these lattices.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .core import (
    STAR,
    FiniteMatroid,
    _guard_ground,
    closure_table,
    render_set,
    subsets_of,
)
from .errors import NotAFlat, NotStrong


def _set_key(X: frozenset[int]) -> tuple:
    return (len(X), tuple(sorted(X)))


class FlatLattice:
    """All flats of one matroid, with lattice structure.

    ``bottom`` is the closure of the empty set (always containing ``*``),
    ``top`` is the full ground set, and ``atoms`` are the flats covering
    the bottom.
    """

    __slots__ = ("matroid", "flats", "bottom", "top", "atoms")

    def __init__(self, matroid: FiniteMatroid, flats: Iterable[frozenset[int]]):
        object.__setattr__(self, "matroid", matroid)
        object.__setattr__(self, "flats", frozenset(flats))
        cl = closure_table(matroid)
        object.__setattr__(self, "bottom", cl(frozenset()))
        object.__setattr__(self, "top", matroid.ground)
        atoms = frozenset(
            F
            for F in self.flats
            if F != self.bottom
            and not any(self.bottom < G < F for G in self.flats)
        )
        object.__setattr__(self, "atoms", atoms)

    def __setattr__(self, name, value):
        raise AttributeError("FlatLattice is immutable")

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(sorted(self.flats, key=_set_key))

    def __len__(self) -> int:
        return len(self.flats)

    def __contains__(self, X) -> bool:
        return frozenset(X) in self.flats

    def _member(self, X) -> frozenset[int]:
        X = frozenset(X)
        if X not in self.flats:
            raise NotAFlat(f"{render_set(X)} is not a flat of this matroid")
        return X

    def meet(self, F: Iterable[int], G: Iterable[int]) -> frozenset[int]:
        return self._member(F) & self._member(G)

    def join(self, F: Iterable[int], G: Iterable[int]) -> frozenset[int]:
        return self.matroid.closure(self._member(F) | self._member(G))

    def atoms_below(self, F: Iterable[int]) -> frozenset[frozenset[int]]:
        F = self._member(F)
        return frozenset(A for A in self.atoms if A <= F)

    def covers(self) -> tuple[tuple[frozenset[int], frozenset[int]], ...]:
        """Covering pairs (lower, upper) of the Hasse diagram, sorted."""
        ordered = sorted(self.flats, key=_set_key)
        out = []
        for low in ordered:
            for high in ordered:
                if low < high and not any(low < mid < high for mid in self.flats):
                    out.append((low, high))
        return tuple(out)

    def hasse_dot(self, names: Mapping[int, str] | None = None) -> str:
        """DOT source for the Hasse diagram, deterministically ordered."""

        def label(X: frozenset[int]) -> str:
            parts = []
            for e in sorted(X):
                if e == STAR:
                    parts.append("*")
                else:
                    parts.append(names[e] if names else str(e))
            return "{" + " ".join(parts) + "}"

        ordered = sorted(self.flats, key=_set_key)
        index = {F: i for i, F in enumerate(ordered)}
        lines = ["digraph flats {", "  rankdir=BT;"]
        for i, F in enumerate(ordered):
            lines.append(f'  n{i} [label="{label(F)}"];')
        for low, high in self.covers():
            lines.append(f"  n{index[low]} -> n{index[high]};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"FlatLattice({len(self.flats)} flats of {self.matroid!r})"


@lru_cache(maxsize=None)
def flats(M: FiniteMatroid) -> FlatLattice:
    """Enumerate the closure-fixed subsets of ``M`` and wrap them as a lattice."""
    _guard_ground(M.ground)
    cl = closure_table(M)
    return FlatLattice(M, (X for X in subsets_of(M.ground) if cl(X) == X))


def induced_lattice_map(f) -> dict[frozenset[int], frozenset[int]]:
    """Flat-wise image map of a strong map: F goes to the closure of f(F).

    Preserves bottom and all joins, and sends atoms to atoms or the bottom;
    those facts are consequences of strongness and are exercised by tests,
    not enforced here.
    """
    if getattr(f, "certificate", None) is None:
        raise NotStrong("induced_lattice_map needs a certified strong map")
    target_cl = closure_table(f.target)
    return {F: target_cl(f.map.image(F)) for F in flats(f.source)}
