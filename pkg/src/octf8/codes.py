"""Subsets of F8 as 8-bit masks, their translation orbits, and binary codes.

Bit b of a mask is set iff the field element with bit pattern b belongs to
the subset, so symmetric difference is ``^`` and intersection is ``&``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator

from . import gf8

EMPTY = 0
FULL = 0xFF


def members(mask: int) -> list[int]:
    return [x for x in gf8.ELEMENTS if mask >> x & 1]


def from_elements(xs: Iterable[int]) -> int:
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def size(mask: int) -> int:
    return bin(mask).count("1")


def complement(mask: int) -> int:
    return FULL ^ mask


def hex_mask(mask: int) -> str:
    return f"{mask:02x}"


def sigma_sum(mask: int) -> int:
    """Field sum of the members; 0 for the empty set."""
    s = 0
    for x in members(mask):
        s ^= x
    return s


def enumerate_H() -> list[int]:
    """All subsets of size 0, 4 or 8 (72 of them), in increasing mask order."""
    return [m for m in range(256) if size(m) in (0, 4, 8)]


def translate(mask: int, z: int) -> int:
    return from_elements(x ^ z for x in members(mask))


def stabilizer(mask: int) -> list[int]:
    return [z for z in gf8.ELEMENTS if translate(mask, z) == mask]


def lines() -> list[int]:
    """The 7 sets {0, x, y, x+y}, sorted by mask."""
    found = {from_elements((0, x, y, x ^ y)) for x, y in combinations(gf8.NONZERO, 2)}
    return sorted(found)


def lines_through(z: int) -> list[int]:
    return [L for L in lines() if L >> z & 1]


def line_label(line: int) -> str:
    """Exponents j of the nonzero points a^j of a line, e.g. "124"."""
    return "".join(str(j) for j in sorted(gf8.log_alpha(x) for x in members(line) if x))


@dataclass(frozen=True)
class Orbit:
    """A translation orbit in H.

    ``label`` is the line (as a mask) for a line-pair and the common
    sigma-sum for an outer family; ``None`` otherwise.
    """

    kind: str  # "empty" | "full" | "line-pair" | "outer"
    label: int | None
    members: tuple[int, ...]

    def __post_init__(self):
        expected = {"empty": 1, "full": 1, "line-pair": 2, "outer": 8}[self.kind]
        if len(self.members) != expected:
            raise ValueError(f"{self.kind} orbit must have {expected} members")

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def label_text(self) -> str | None:
        if self.kind == "outer":
            return gf8.label(self.label)
        if self.kind == "line-pair":
            return hex_mask(self.label)
        return None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "label": self.label_text(),
            "members": [hex_mask(m) for m in self.members],
        }


def translation_orbit(mask: int) -> tuple[int, ...]:
    return tuple(sorted({translate(mask, z) for z in gf8.ELEMENTS}))


def outer_family(x: int) -> Orbit:
    """O_x: the 8 size-4 subsets with sigma-sum x != 0."""
    if x == 0:
        raise ValueError("sigma-sum 0 gives lines and line-complements, not an outer family")
    found = tuple(m for m in range(256) if size(m) == 4 and sigma_sum(m) == x)
    return Orbit("outer", x, found)


def classify(orbit_members: tuple[int, ...]) -> Orbit:
    first = orbit_members[0]
    if orbit_members == (EMPTY,):
        return Orbit("empty", None, orbit_members)
    if orbit_members == (FULL,):
        return Orbit("full", None, orbit_members)
    if len(orbit_members) == 2:
        (line,) = [m for m in orbit_members if m & 1]
        return Orbit("line-pair", line, orbit_members)
    return Orbit("outer", sigma_sum(first), orbit_members)


class OrbitCountError(AssertionError):
    pass


def orbit_decomposition() -> list[Orbit]:
    """The 16 orbits of F8 acting on H by translation.

    Order: empty, full, line-pairs by line mask, outer families O_{a^j} for
    j = 0..6.
    """
    seen: set[int] = set()
    found = []
    for m in enumerate_H():
        if m not in seen:
            orb = translation_orbit(m)
            seen.update(orb)
            found.append(classify(orb))
    sizes = sorted(len(o) for o in found)
    if sizes != [1, 1] + [2] * 7 + [8] * 7:
        raise OrbitCountError(f"unexpected orbit sizes {sizes}")
    rank = {"empty": 0, "full": 1, "line-pair": 2, "outer": 3}

    def key(o: Orbit):
        if o.kind == "outer":
            return (3, gf8.log_alpha(o.label))
        return (rank[o.kind], o.label or 0)

    return sorted(found, key=key)


def beta(X: int, Y: int) -> int:
    """|X & Y| mod 2."""
    return size(X & Y) & 1


@dataclass(frozen=True)
class Code:
    """An F2-subspace of 2^F8, stored as its full word set."""

    words: frozenset[int]

    def __post_init__(self):
        if EMPTY not in self.words:
            raise ValueError("a code contains the empty word")
        if any(a ^ b not in self.words for a in self.words for b in self.words):
            raise ValueError("word set is not closed under symmetric difference")

    def __len__(self):
        return len(self.words)

    def __contains__(self, mask: int) -> bool:
        return mask in self.words

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.words))

    def __le__(self, other: "Code") -> bool:
        return self.words <= other.words

    @property
    def dimension(self) -> int:
        return len(self.words).bit_length() - 1

    def basis(self) -> list[int]:
        out: list[int] = []
        for w in sorted(self.words):
            if len(span_words(out)) < len(span_words(out + [w])):
                out.append(w)
        return out

    def to_json(self) -> list[str]:
        return [hex_mask(w) for w in sorted(self.words)]


def span_words(gens: Iterable[int]) -> set[int]:
    words = {EMPTY}
    for g in gens:
        if g not in words:
            words |= {w ^ g for w in words}
    return words


def span(orbit: Iterable[int]) -> Code:
    """Smallest set containing the orbit and closed under symmetric difference."""
    return Code(frozenset(span_words(orbit)))


def dual(code: Code) -> Code:
    """Orthogonal complement under beta, by scanning all 256 subsets."""
    return Code(frozenset(y for y in range(256) if all(beta(y, w) == 0 for w in code.words)))


@dataclass
class IntersectionReport:
    z: int
    pairs_checked: int
    failures: list[tuple[int, int]]
    lines_seen: set[int]

    @property
    def passed(self) -> bool:
        return not self.failures and self.lines_seen == set(lines_through(self.z))


def check_intersection_lemma(z: int) -> IntersectionReport:
    """For X != Y, Y != F8 - X in O_z: |X & Y| == 2 and X ^ Y is a line
    through z or its complement."""
    if z == 0:
        raise ValueError("z must be nonzero")
    through = set(lines_through(z))
    allowed = through | {complement(L) for L in through}
    fam = outer_family(z).members
    failures, seen, checked = [], set(), 0
    for X, Y in permutations(fam, 2):
        if Y == complement(X):
            continue
        checked += 1
        d = X ^ Y
        if size(X & Y) != 2 or d not in allowed:
            failures.append((X, Y))
        seen.add(d if d in through else complement(d))
    return IntersectionReport(z, checked, failures, seen & through)


# GL_3(F2) acting on F8 = F2^3


def gl3() -> list[tuple[int, int, int]]:
    """The 168 invertible maps, each given by the images of the bits 1, 2, 4."""
    out = []
    for c0, c1, c2 in permutations(gf8.NONZERO, 3):
        if c2 != c0 ^ c1:
            out.append((c0, c1, c2))
    return out


def apply_linear(images: tuple[int, int, int], x: int) -> int:
    y = 0
    for bit, img in enumerate(images):
        if x >> bit & 1:
            y ^= img
    return y


def map_subset(images: tuple[int, int, int], mask: int) -> int:
    return from_elements(apply_linear(images, x) for x in members(mask))
