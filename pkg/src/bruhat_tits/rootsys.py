"""Finite reduced irreducible root systems with exact coordinates.

Roots are integer vectors in the basis of simple roots; points of the
apartment are rational vectors in the basis of fundamental coweights, so the
pairing between the two is the plain dot product.  Simple roots follow the
Bourbaki numbering (0-based here: ``simple[i]`` is Bourbaki's alpha_{i+1}).
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InadmissibleTypeError, InternalError, ValidationError

FAMILIES = "ABCDEFG"

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InadmissibleTypeError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InadmissibleTypeError(f"rank must be an integer, got {self.rank!r}")
        ok = {
            "E": 6 <= self.rank <= 8,
            "F": self.rank == 4,
            "G": self.rank == 2,
        }.get(self.family, self.rank >= _MIN_RANK.get(self.family, 1))
        if not ok:
            raise InadmissibleTypeError(f"{self.family}{self.rank} is not an admissible type")

    @classmethod
    def parse(cls, text: str) -> DynkinType:
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InadmissibleTypeError(f"cannot parse Dynkin type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"

    def canonical(self) -> DynkinType:
        """Representative of the isomorphism class (D3 = A3, C2 = B2)."""
        if self.family == "D" and self.rank == 3:
            return DynkinType("A", 3)
        if self.family == "C" and self.rank == 2:
            return DynkinType("B", 2)
        return self


def admissible_types(max_rank: int, min_rank: int = 1) -> list[DynkinType]:
    """Every admissible (family, rank) with ``min_rank <= rank <= max_rank``."""
    out = []
    for family in FAMILIES:
        for rank in range(min_rank, max_rank + 1):
            try:
                out.append(DynkinType(family, rank))
            except InadmissibleTypeError:
                pass
    return out


def _diagram(t: DynkinType) -> tuple[list[int], list[tuple[int, int]]]:
    """Squared root lengths and edges of the Dynkin diagram."""
    n = t.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    if t.family == "A":
        return [2] * n, chain
    if t.family == "B":
        return [2] * (n - 1) + [1], chain
    if t.family == "C":
        return [1] * (n - 1) + [2], chain
    if t.family == "D":
        edges = [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
        return [2] * n, edges
    if t.family == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
        return [2] * n, edges
    if t.family == "F":
        return [2, 2, 1, 1], chain
    return [1, 3], chain  # G2, alpha_1 short


def _gram_matrix(t: DynkinType) -> tuple[tuple[Fraction, ...], ...]:
    lengths, edges = _diagram(t)
    n = t.rank
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = Fraction(lengths[i])
    for i, j in edges:
        gram[i][j] = gram[j][i] = -Fraction(max(lengths[i], lengths[j]), 2)
    return tuple(tuple(row) for row in gram)


def cartan_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    """``a[i][j] = <alpha_i^vee, alpha_j>``."""
    gram = _gram_matrix(t)
    return tuple(
        tuple(int(2 * gram[i][j] / gram[i][i]) for j in range(t.rank))
        for i in range(t.rank)
    )


@dataclass(frozen=True, order=True)
class Root:
    coords: tuple[int, ...]

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coords))

    def __add__(self, other: Root) -> Root:
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Root) -> Root:
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scaled(self, k: int) -> Root:
        return Root(tuple(k * c for c in self.coords))

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coords) + "]"


def root_sort_key(r: Root):
    """Positive roots by height (Bourbaki order within a height), then negatives."""
    neg = not r.is_positive
    base = -r if neg else r
    return (neg, base.height, tuple(-c for c in base.coords))


@dataclass(frozen=True)
class RootSystem:
    type: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    simple: tuple[Root, ...]
    positive: tuple[Root, ...]
    highest_root: Root
    marks: tuple[int, ...]
    gram: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    _index: dict = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def dimension(self) -> int:
        """Dimension of the simply connected group with this root system."""
        return self.rank + len(self.roots)

    def __contains__(self, r: Root) -> bool:
        return r in self._index

    def index(self, r: Root) -> int:
        return self._index[r]

    def inner(self, r: Root, s: Root) -> Fraction:
        """W-invariant inner product (long roots of simply-laced parts have length 2)."""
        g = self.gram
        total = Fraction(0)
        for i, ri in enumerate(r.coords):
            if ri:
                row = g[i]
                for j, sj in enumerate(s.coords):
                    if sj:
                        total += ri * sj * row[j]
        return total

    def coroot_pairing(self, s: Root, r: Root) -> int:
        """``<s, r^vee> = 2 (s, r) / (r, r)``, always an integer."""
        value = 2 * self.inner(s, r) / self.inner(r, r)
        if value.denominator != 1:
            raise InternalError(f"non-integral pairing <{s}, {r}^vee> = {value}")
        return int(value)

    @functools.cached_property
    def _coroots(self) -> dict:
        return {
            r: tuple(
                Fraction(2) * self.inner(r, a) / self.inner(r, r) for a in self.simple
            )
            for r in self.roots
        }

    def coroot(self, r: Root) -> tuple[Fraction, ...]:
        """The coroot of ``r`` in fundamental-coweight coordinates."""
        return self._coroots[r]


def _simple_root(rank: int, i: int) -> Root:
    return Root(tuple(1 if j == i else 0 for j in range(rank)))


def _reflection_closure(cartan: Sequence[Sequence[int]]) -> set[Root]:
    rank = len(cartan)
    simple = [_simple_root(rank, i) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                c = sum(beta.coords[j] * cartan[i][j] for j in range(rank))
                if c == 0:
                    continue
                image = beta - simple[i].scaled(c)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return seen


@functools.lru_cache(maxsize=None)
def build_root_system(t: DynkinType | str) -> RootSystem:
    """Generate all roots of ``t`` by closing the simple roots under simple reflections.

    >>> rs = build_root_system("G2")
    >>> len(rs.roots), rs.marks
    (12, (3, 2))
    """
    if isinstance(t, str):
        t = DynkinType.parse(t)
    cartan = cartan_matrix(t)
    found = _reflection_closure(cartan)
    roots = tuple(sorted(found, key=root_sort_key))
    positive = tuple(r for r in roots if r.is_positive)
    if any(any(c < 0 for c in r.coords) for r in positive) or 2 * len(positive) != len(roots):
        raise InternalError(f"reflection closure of {t} produced a mixed-sign root")
    highest = max(positive, key=lambda r: r.height)
    return RootSystem(
        type=t,
        cartan=cartan,
        roots=roots,
        simple=tuple(_simple_root(t.rank, i) for i in range(t.rank)),
        positive=positive,
        highest_root=highest,
        marks=highest.coords,
        gram=_gram_matrix(t),
        _index={r: k for k, r in enumerate(roots)},
    )


def cartan_pairing(rs: RootSystem, coweight_point, r: Root) -> Fraction:
    """Pair a point in coweight coordinates with a root in simple-root coordinates."""
    coords = getattr(coweight_point, "coords", coweight_point)
    if len(coords) != rs.rank or len(r.coords) != rs.rank:
        raise ValidationError(
            f"dimension mismatch: point has {len(coords)} coordinates, "
            f"root has {len(r.coords)}, rank is {rs.rank}"
        )
    return sum((Fraction(x) * c for x, c in zip(coords, r.coords) if c), Fraction(0))


@functools.lru_cache(maxsize=65536)
def _pairing_numerators(t: DynkinType, coords: tuple[Fraction, ...]) -> tuple[tuple[int, ...], int]:
    rs = build_root_system(t)
    den = 1
    for c in coords:
        den = den * c.denominator // math.gcd(den, c.denominator)
    scaled = [int(c * den) for c in coords]
    nums = tuple(sum(v * c for v, c in zip(scaled, r.coords)) for r in rs.roots)
    return nums, den


def pairing_numerators(rs: RootSystem, coweight_point) -> tuple[tuple[int, ...], int]:
    """``<x, r>`` for every root ``r`` (in ``rs.roots`` order) as integer
    numerators over one common denominator."""
    coords = tuple(Fraction(c) for c in getattr(coweight_point, "coords", coweight_point))
    if len(coords) != rs.rank:
        raise ValidationError(f"point has {len(coords)} coordinates, rank is {rs.rank}")
    return _pairing_numerators(rs.type, coords)


def reflect(rs: RootSystem, r: Root, s: Root) -> Root:
    """Image of the root ``s`` under the reflection in ``r``."""
    if not any(r.coords):
        raise ValidationError("cannot reflect in the zero vector")
    image = s - r.scaled(rs.coroot_pairing(s, r))
    if image not in rs:
        raise InternalError(f"reflection of {s} in {r} left the root system")
    return image


# --------------------------------------------------------------- subsystems


@dataclass(frozen=True)
class SubSystem:
    roots: tuple[Root, ...]
    simple_sub: tuple[Root, ...]
    cartan: tuple[tuple[int, ...], ...]
    components: tuple[DynkinType, ...]

    @property
    def total_rank(self) -> int:
        return len(self.simple_sub)

    @property
    def positive_count(self) -> int:
        return len(self.roots) // 2

    def label(self) -> str:
        return "x".join(str(c) for c in self.components) or "T"


def _row_signature(m, i):
    return (m[i][i], tuple(sorted(m[i][j] for j in range(len(m)) if j != i)),
            tuple(sorted(m[j][i] for j in range(len(m)) if j != i)))


def cartan_isomorphic(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """True if some relabelling of indices carries ``a`` onto ``b`` entry by entry."""
    n = len(a)
    if n != len(b):
        return False
    sig_a = [_row_signature(a, i) for i in range(n)]
    sig_b = [_row_signature(b, i) for i in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return False
    perm: list[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j] or sig_a[i] != sig_b[j]:
                continue
            if all(a[i][k] == b[j][perm[k]] and a[k][i] == b[perm[k]][j] for k in range(i)):
                used[j] = True
                perm.append(j)
                if extend(i + 1):
                    return True
                perm.pop()
                used[j] = False
        return False

    return extend(0)


def _candidates(rank: int) -> list[DynkinType]:
    out = []
    for t in admissible_types(rank, rank):
        c = t.canonical()
        if c not in out:
            out.append(c)
    return out


@functools.lru_cache(maxsize=None)
def _classify_connected(matrix: tuple[tuple[int, ...], ...]) -> DynkinType:
    for t in _candidates(len(matrix)):
        if cartan_isomorphic(matrix, cartan_matrix(t)):
            return t
    raise InternalError(f"unclassifiable Cartan matrix {matrix}")


def connected_components(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(matrix)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and (matrix[i][j] or matrix[j][i]):
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def classify_cartan(matrix: Sequence[Sequence[int]]) -> tuple[DynkinType, ...]:
    """Decompose a (possibly reducible) Cartan matrix into sorted Dynkin types."""
    types = []
    for comp in connected_components(matrix):
        sub = tuple(tuple(matrix[i][j] for j in comp) for i in comp)
        types.append(_classify_connected(sub))
    return tuple(sorted(types))


def classify_subsystem(rs: RootSystem, subset: Iterable[Root]) -> SubSystem:
    """Simple roots, Cartan matrix and Dynkin type of a closed symmetric set of roots."""
    return _classify_subsystem(rs.type, frozenset(subset))


@functools.lru_cache(maxsize=4096)
def _classify_subsystem(t: DynkinType, roots: frozenset) -> SubSystem:
    rs = build_root_system(t)
    for r in roots:
        if r not in rs:
            raise ValidationError(f"{r} is not a root of {rs.type}")
        if -r not in roots:
            raise ValidationError(f"subset is not closed under negation: {-r} missing")
    ordered = sorted(roots, key=root_sort_key)
    for a, b in itertools.combinations(ordered, 2):
        s = a + b
        if s in rs and s not in roots:
            raise ValidationError(f"subset is not closed: {a} + {b} = {s} missing")
    positive = [r for r in ordered if r.is_positive]
    pos_set = set(positive)
    sums = {a + b for a, b in itertools.combinations(positive, 2)}
    simple = tuple(r for r in positive if r not in sums)
    cartan = tuple(tuple(rs.coroot_pairing(b, a) for b in simple) for a in simple)
    if len(pos_set) * 2 != len(roots):
        raise InternalError("positive part is not half of a symmetric subset")
    return SubSystem(
        roots=tuple(ordered),
        simple_sub=simple,
        cartan=cartan,
        components=classify_cartan(cartan),
    )
