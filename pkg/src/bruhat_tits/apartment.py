"""The standard apartment, its affine roots, the fundamental alcove and its facets.

The origin v0 is the zero of the coweight lattice.  Simple affine roots are
indexed ``0 .. rank-1`` for the finite simple roots (Bourbaki order) and
``rank`` for the affine node ``1 - highest_root``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateInputError, FacetIndexError, PreconditionError, ValidationError
from .rationals import format_vector, lcm_of_denominators, parse_vector
from .rootsys import DynkinType, Root, RootSystem, build_root_system, pairing_numerators, root_sort_key


@dataclass(frozen=True)
class ApartmentPoint:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def parse(cls, text: str) -> ApartmentPoint:
        return cls(parse_vector(text))

    @classmethod
    def origin(cls, rank: int) -> ApartmentPoint:
        return cls((Fraction(0),) * rank)

    def __add__(self, other: ApartmentPoint) -> ApartmentPoint:
        return ApartmentPoint(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: ApartmentPoint) -> ApartmentPoint:
        return ApartmentPoint(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scaled(self, k) -> ApartmentPoint:
        return ApartmentPoint(tuple(k * c for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def __str__(self):
        return format_vector(self.coords)


@dataclass(frozen=True, order=True)
class AffineRoot:
    """The functional ``x -> <x - v0, vector_part> + level``."""

    vector_part: Root
    level: int

    def __neg__(self) -> AffineRoot:
        return AffineRoot(-self.vector_part, -self.level)

    def __add__(self, other: AffineRoot) -> AffineRoot:
        return AffineRoot(self.vector_part + other.vector_part, self.level + other.level)

    def __str__(self):
        return f"{self.vector_part}{self.level:+d}"


def eval_affine(a: AffineRoot, x: ApartmentPoint) -> Fraction:
    if len(x.coords) != len(a.vector_part.coords):
        raise ValidationError(
            f"dimension mismatch: point {x} vs affine root {a}"
        )
    total = Fraction(a.level)
    for xi, ri in zip(x.coords, a.vector_part.coords):
        if ri:
            total += xi * ri
    return total


def affine_sort_key(a: AffineRoot):
    return (root_sort_key(a.vector_part), a.level)


@dataclass(frozen=True)
class Alcove:
    """Simple affine roots of the fundamental alcove and their marks."""

    simple_affine: tuple[AffineRoot, ...]
    alcove_marks: tuple[int, ...]

    @property
    def affine_node(self) -> int:
        return len(self.simple_affine) - 1


def fundamental_alcove(rs: RootSystem) -> Alcove:
    simple = tuple(AffineRoot(a, 0) for a in rs.simple)
    return Alcove(
        simple_affine=simple + (AffineRoot(-rs.highest_root, 1),),
        alcove_marks=rs.marks + (1,),
    )


def simple_affine_values(rs: RootSystem, x: ApartmentPoint) -> tuple[Fraction, ...]:
    return tuple(eval_affine(a, x) for a in fundamental_alcove(rs).simple_affine)


def in_closed_alcove(rs: RootSystem, x: ApartmentPoint) -> bool:
    return all(v >= 0 for v in simple_affine_values(rs, x))


def vanishing_set(rs: RootSystem, x: ApartmentPoint) -> tuple[AffineRoot, ...]:
    """All affine roots vanishing at ``x``; at most one level per finite root."""
    nums, den = pairing_numerators(rs, x)
    return tuple(AffineRoot(r, -(v // den)) for r, v in zip(rs.roots, nums) if v % den == 0)


# ------------------------------------------------------------------- facets


@dataclass(frozen=True)
class Facet:
    """A facet of the closed fundamental alcove, encoded by its vanishing walls."""

    type: DynkinType
    vanishing: frozenset[int]
    representative: ApartmentPoint
    dimension: int

    @property
    def is_alcove(self) -> bool:
        return not self.vanishing

    def label(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.vanishing)) + "}"


def _point_from_weights(rs: RootSystem, vanishing, weights) -> ApartmentPoint:
    marks = rs.marks + (1,)
    free = [i for i in range(rs.rank + 1) if i not in vanishing]
    total = sum(marks[i] * weights[k] for k, i in enumerate(free))
    values = [Fraction(0)] * (rs.rank + 1)
    for k, i in enumerate(free):
        values[i] = Fraction(weights[k], total)
    # the finite simple roots are the coordinate functionals
    return ApartmentPoint(tuple(values[: rs.rank]))


def make_facet(rs: RootSystem, vanishing: Iterable[int]) -> Facet:
    """The facet on which exactly the simple affine roots indexed by ``vanishing`` vanish."""
    J = frozenset(vanishing)
    for i in J:
        if not isinstance(i, int) or not 0 <= i <= rs.rank:
            raise FacetIndexError(f"facet index {i!r} out of range 0..{rs.rank}")
    if len(J) == rs.rank + 1:
        raise FacetIndexError("all simple affine roots cannot vanish simultaneously")
    free = rs.rank + 1 - len(J)
    return Facet(
        type=rs.type,
        vanishing=J,
        representative=_point_from_weights(rs, J, [1] * free),
        dimension=rs.rank - len(J),
    )


def facet_sample_points(rs: RootSystem, f: Facet, count: int = 3) -> list[ApartmentPoint]:
    """``count`` points of ``f``; the first is the representative."""
    free = rs.rank + 1 - len(f.vanishing)
    pts = []
    for k in range(count):
        pt = _point_from_weights(rs, f.vanishing, [1 + k * p for p in range(free)])
        if pt not in pts:
            pts.append(pt)
    return pts


def enumerate_facets(rs: RootSystem) -> list[Facet]:
    """All ``2**(rank+1) - 1`` facets of the closed fundamental alcove.

    Ordered by dimension, then by the sorted vanishing indices.
    """
    n = rs.rank + 1
    subsets = [
        frozenset(i for i in range(n) if mask >> i & 1)
        for mask in range((1 << n) - 1)
    ]
    subsets.sort(key=lambda J: (rs.rank - len(J), sorted(J)))
    return [make_facet(rs, J) for J in subsets]


def facet_of_point(rs: RootSystem, x: ApartmentPoint) -> Facet:
    values = simple_affine_values(rs, x)
    if any(v < 0 for v in values):
        raise PreconditionError(f"point {x} is outside the closed fundamental alcove")
    return make_facet(rs, (i for i, v in enumerate(values) if v == 0))


def facet_closure_leq(s: Facet, b: Facet) -> bool:
    """True if ``s`` lies in the closure of ``b``."""
    if s.type != b.type:
        raise ValidationError(f"facets of different types {s.type} and {b.type}")
    return b.vanishing <= s.vanishing


# ------------------------------------------------------------- alcove walks


def reflect_point(rs: RootSystem, a: AffineRoot, x: ApartmentPoint) -> ApartmentPoint:
    """Reflect ``x`` in the affine hyperplane ``a = 0``."""
    value = eval_affine(a, x)
    if value == 0:
        return x
    cor = rs.coroot(a.vector_part)
    return ApartmentPoint(tuple(xi - value * ci for xi, ci in zip(x.coords, cor)))


@functools.lru_cache(maxsize=None)
def _integer_walls(t: DynkinType) -> tuple[tuple[tuple[int, ...], int, tuple[int, ...]], ...]:
    # (vector part, level, coroot) per simple affine root; coroots have
    # integral coweight coordinates
    rs = build_root_system(t)
    return tuple(
        (a.vector_part.coords, a.level, tuple(int(c) for c in rs.coroot(a.vector_part)))
        for a in fundamental_alcove(rs).simple_affine
    )


def _to_integer(x: ApartmentPoint) -> tuple[list[int], int]:
    den = lcm_of_denominators(x.coords)
    return [int(c * den) for c in x.coords], den


def _reflect_integer(v: list[int], den: int, wall) -> int:
    vec, level, cor = wall
    n = sum(a * b for a, b in zip(v, vec)) + level * den
    if n:
        for j, c in enumerate(cor):
            v[j] -= n * c
    return n


def apply_word(rs: RootSystem, word: Sequence[int], x: ApartmentPoint) -> ApartmentPoint:
    """Apply ``s_{word[0]} o ... o s_{word[-1]}`` to ``x``."""
    walls = _integer_walls(rs.type)
    v, den = _to_integer(x)
    for i in reversed(word):
        _reflect_integer(v, den, walls[i])
    return ApartmentPoint(tuple(Fraction(c, den) for c in v))


def fold_into_alcove(rs: RootSystem, x: ApartmentPoint) -> tuple[tuple[int, ...], ApartmentPoint]:
    """Reflect ``x`` across violated walls until it lies in the closed alcove.

    Returns ``(word, folded)`` with ``apply_word(rs, word, folded) == x``.
    Always reflects across the lowest-index wall with a negative value.
    """
    if len(x.coords) != rs.rank:
        raise ValidationError(f"point has {len(x.coords)} coordinates, rank is {rs.rank}")
    walls = _integer_walls(rs.type)
    v, den = _to_integer(x)
    word = []
    while True:
        bad = next(
            (i for i, (vec, level, _) in enumerate(walls)
             if sum(a * b for a, b in zip(v, vec)) + level * den < 0),
            None,
        )
        if bad is None:
            return tuple(word), ApartmentPoint(tuple(Fraction(c, den) for c in v))
        _reflect_integer(v, den, walls[bad])
        word.append(bad)


@dataclass(frozen=True)
class AlcoveWalk:
    word: tuple[int, ...]
    target: ApartmentPoint
    folded: ApartmentPoint

    def __len__(self):
        return len(self.word)


def wall_through(rs: RootSystem, x: ApartmentPoint) -> AffineRoot | None:
    """Some affine root vanishing at ``x``, preferring positive vector parts."""
    nums, den = pairing_numerators(rs, x)
    for r in rs.positive:
        v = nums[rs.index(r)]
        if v % den == 0:
            return AffineRoot(r, -(v // den))
    return None


def alcove_walk(rs: RootSystem, target: ApartmentPoint) -> AlcoveWalk:
    """A word in the simple affine reflections carrying the fundamental alcove to the
    alcove containing ``target``.  The word need not be reduced."""
    if len(target.coords) != rs.rank:
        raise ValidationError(f"point has {len(target.coords)} coordinates, rank is {rs.rank}")
    wall = wall_through(rs, target)
    if wall is not None:
        raise DegenerateInputError(f"point {target} lies on the wall of affine root {wall}")
    word, folded = fold_into_alcove(rs, target)
    return AlcoveWalk(word=word, target=target, folded=folded)


def same_alcove(rs: RootSystem, x: ApartmentPoint, y: ApartmentPoint, max_level: int = 20) -> bool:
    """Compare the signs of every affine root with ``|level| <= max_level`` at x and y."""
    def position(v: int, den: int) -> tuple[bool, int]:
        # which of the levels -max_level..max_level the value sits on or between
        exact = v % den == 0 and abs(v // den) <= max_level
        return exact, max(-max_level - 1, min(max_level, v // den))

    nx, dx = pairing_numerators(rs, x)
    ny, dy = pairing_numerators(rs, y)
    return all(position(a, dx) == position(b, dy) for a, b in zip(nx, ny))
