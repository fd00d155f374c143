"""Line-oriented text formats: matroids (.mtr) and ground maps (.map).

A matroid file has one ``ground:`` line naming the ordinary elements (the
loop ``*`` is implicit) and any number of ``circuit:`` lines; ``#`` starts
a comment line.  Names are mapped to ids in first-appearance order on the
ground line.  Emission is canonical: names sorted, circuits sorted
lexicographically, so parse-emit round trips are byte-stable.

A map file has lines ``a -> b``; ``*`` may appear on either side.  Source
elements left unmentioned map to themselves when the target knows their
name.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .core import STAR, FiniteMatroid, make_matroid
from .errors import MatroidError, NotAntichain, ParseError
from .strongmaps import PointedMap


@dataclass(frozen=True)
class NamedMatroid:
    """A matroid together with the element names from its source file."""

    matroid: FiniteMatroid
    names: tuple[str, ...]  # names[i] is the name of id i + 1

    def name_of(self, e: int) -> str:
        return "*" if e == STAR else self.names[e - 1]

    def id_of(self, name: str) -> int:
        if name == "*":
            return STAR
        try:
            return self.names.index(name) + 1
        except ValueError:
            raise ParseError(f"unknown element name {name!r}") from None

    @property
    def name_to_id(self) -> dict[str, int]:
        table = {name: i + 1 for i, name in enumerate(self.names)}
        table["*"] = STAR
        return table

    def render(self, ids) -> str:
        """Space-separated names, ``*`` first, the rest sorted."""
        ids = set(ids)
        parts = ["*"] if STAR in ids else []
        parts.extend(sorted(self.name_of(e) for e in ids - {STAR}))
        return " ".join(parts)


def parse_matroid_text(text: str, origin: str = "<string>") -> NamedMatroid:
    """Parse the matroid grammar; construction errors carry file context."""
    names: list[str] = []
    seen_ground = False
    circuits: list[tuple[int, frozenset[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("ground:"):
            if seen_ground:
                raise ParseError(f"{origin}:{lineno}: duplicate ground line")
            seen_ground = True
            for token in line[len("ground:") :].split():
                if token == "*":
                    raise ParseError(
                        f"{origin}:{lineno}: * is implicit and cannot be declared"
                    )
                if token in names:
                    raise ParseError(f"{origin}:{lineno}: duplicate name {token!r}")
                names.append(token)
        elif line.startswith("circuit:"):
            if not seen_ground:
                raise ParseError(f"{origin}:{lineno}: circuit before ground line")
            tokens = line[len("circuit:") :].split()
            if not tokens:
                raise ParseError(f"{origin}:{lineno}: empty circuit line")
            ids = set()
            for token in tokens:
                if token == "*":
                    ids.add(STAR)
                elif token in names:
                    ids.add(names.index(token) + 1)
                else:
                    raise ParseError(
                        f"{origin}:{lineno}: unknown element {token!r} in circuit"
                    )
            circuits.append((lineno, frozenset(ids)))
        else:
            raise ParseError(f"{origin}:{lineno}: unrecognized line {line!r}")
    if not seen_ground:
        raise ParseError(f"{origin}: missing ground line")

    # Antichain violations are monotone, so the first offending line can be
    # pinned during a single pass; elimination only makes sense on the
    # complete family and is reported without a line.
    ground = range(1, len(names) + 1)
    accepted: list[frozenset[int]] = [frozenset({STAR})]
    for lineno, circuit in circuits:
        for prev in accepted:
            if prev != circuit and (prev <= circuit or circuit <= prev):
                raise NotAntichain(
                    f"{origin}:{lineno}: circuit is comparable with an earlier one"
                )
        if circuit not in accepted:
            accepted.append(circuit)
    try:
        matroid = make_matroid(ground, accepted)
    except MatroidError as err:
        raise type(err)(f"{origin}: {err}") from None
    return NamedMatroid(matroid, tuple(names))


def parse_matroid_file(path: str | Path) -> NamedMatroid:
    path = Path(path)
    return parse_matroid_text(path.read_text(encoding="utf-8"), origin=str(path))


def emit_matroid(nm: NamedMatroid) -> str:
    """Canonical text: sorted names, lexicographically sorted circuits."""
    lines = ["ground: " + " ".join(sorted(nm.names))]
    loop_circuit = frozenset({STAR})
    rows = sorted(
        tuple(sorted(nm.name_of(e) for e in C))
        for C in nm.matroid.circuits
        if C != loop_circuit
    )
    lines.extend("circuit: " + " ".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def parse_map_text(
    text: str,
    source: NamedMatroid,
    target: NamedMatroid,
    origin: str = "<string>",
) -> PointedMap:
    """Parse ``a -> b`` lines into a pointed map between the two grounds."""
    src_ids = source.name_to_id
    dst_ids = target.name_to_id
    assign: dict[int, int] = {STAR: STAR}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise ParseError(f"{origin}:{lineno}: expected 'name -> name'")
        left, _, right = line.partition("->")
        left, right = left.strip(), right.strip()
        if not left or not right:
            raise ParseError(f"{origin}:{lineno}: expected 'name -> name'")
        if left not in src_ids:
            raise ParseError(f"{origin}:{lineno}: unknown source element {left!r}")
        if right not in dst_ids:
            raise ParseError(f"{origin}:{lineno}: unknown target element {right!r}")
        e = src_ids[left]
        if e in assign and assign[e] != dst_ids[right]:
            raise ParseError(f"{origin}:{lineno}: conflicting image for {left!r}")
        assign[e] = dst_ids[right]
    for name, e in src_ids.items():
        if e in assign:
            continue
        if name in dst_ids:
            assign[e] = dst_ids[name]
        else:
            raise ParseError(
                f"{origin}: element {name!r} has no image and no name-matched default"
            )
    return PointedMap(source.matroid.ground, target.matroid.ground, assign)


def parse_map_file(
    path: str | Path, source: NamedMatroid, target: NamedMatroid
) -> PointedMap:
    path = Path(path)
    return parse_map_text(
        path.read_text(encoding="utf-8"), source, target, origin=str(path)
    )


def emit_map(f: PointedMap, source: NamedMatroid, target: NamedMatroid) -> str:
    """One ``a -> b`` line per ordinary source element, sorted by name."""
    rows = sorted(
        (source.name_of(e), target.name_of(f(e)))
        for e in f.source
        if e != STAR
    )
    return "\n".join(f"{a} -> {b}" for a, b in rows) + ("\n" if rows else "")
