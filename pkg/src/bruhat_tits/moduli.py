"""Numerical invariants of moduli of parahoric torsors on a curve.

A finite-order element of the maximal torus is written ``g = exp(2 pi i theta)``
with ``theta`` a rational point of the apartment.  ``alpha(g) = 1`` exactly when
``<theta, alpha>`` is an integer.
"""
from __future__ import annotations

import functools
import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .apartment import (
    ApartmentPoint,
    Facet,
    facet_of_point,
    fold_into_alcove,
    in_closed_alcove,
)
from .errors import InternalError, PreconditionError, ValidationError
from .parahoric import reductive_quotient
from .rationals import lcm_of_denominators, solve
from .rootsys import (
    DynkinType,
    RootSystem,
    SubSystem,
    build_root_system,
    classify_subsystem,
    pairing_numerators,
)


@dataclass(frozen=True)
class TorsionElement:
    """``g = exp(2 pi i theta)``.

    ``order`` is the order of ``Ad(g)`` (least n with ``n * theta`` in the
    coweight lattice).  ``group_order`` is the order of ``g`` itself in the
    simply connected group (least n with ``n * theta`` in the coroot lattice).
    """

    theta: ApartmentPoint
    order: int
    group_order: int
    coroot_coords: tuple[Fraction, ...] = field(repr=False)


@functools.lru_cache(maxsize=None)
def _coweight_to_coroot(t: DynkinType) -> tuple[tuple[Fraction, ...], ...]:
    # theta = sum_i c_i alpha_i^vee and <alpha_i^vee, alpha_j> = cartan[i][j],
    # so c is the solution of cartan^T c = theta
    rs = build_root_system(t)
    n = rs.rank
    transpose = [[rs.cartan[i][j] for i in range(n)] for j in range(n)]
    columns = [solve(transpose, [int(i == j) for i in range(n)]) for j in range(n)]
    return tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))


def _nontrivial(rs: RootSystem, theta) -> list[bool]:
    nums, den = pairing_numerators(rs, theta)
    return [v % den != 0 for v in nums]


def _simple_k(rs: RootSystem, theta) -> int:
    flags = _nontrivial(rs, theta)
    return sum(1 for a in rs.simple if flags[rs.index(a)])


def torsion_element(rs: RootSystem, theta: ApartmentPoint | Sequence) -> TorsionElement:
    if not isinstance(theta, ApartmentPoint):
        theta = ApartmentPoint(tuple(theta))
    if len(theta.coords) != rs.rank:
        raise ValidationError(
            f"isotropy point {theta} has {len(theta.coords)} coordinates, rank of {rs.type} is {rs.rank}"
        )
    inverse = _coweight_to_coroot(rs.type)
    coroot = tuple(sum((a * x for a, x in zip(row, theta.coords) if a), Fraction(0)) for row in inverse)
    return TorsionElement(
        theta=theta,
        order=lcm_of_denominators(theta.coords),
        group_order=lcm_of_denominators(coroot),
        coroot_coords=coroot,
    )


@dataclass(frozen=True)
class RamificationDatum:
    order: int
    isotropy: TorsionElement

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise ValidationError(f"ramification order must be a positive integer, got {self.order!r}")


@dataclass(frozen=True)
class ModuliInput:
    """Group type, genus and ramification data.

    When ``facets`` is omitted, :attr:`local_facets` uses the facets of the
    closed fundamental alcove containing the isotropy points after folding
    them into the alcove.
    An empty ramification list is allowed (the unramified case).
    """

    type: DynkinType
    genus: int
    ram: tuple[RamificationDatum, ...] = ()
    facets: tuple[Facet, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValidationError(f"genus must be a nonnegative integer, got {self.genus!r}")
        object.__setattr__(self, "ram", tuple(self.ram))
        if self.facets is not None:
            object.__setattr__(self, "facets", tuple(self.facets))
            if len(self.facets) != len(self.ram):
                raise ValidationError(
                    f"{len(self.ram)} ramification data but {len(self.facets)} facets"
                )
            for f in self.facets:
                if f.type != self.type:
                    raise ValidationError(f"facet of type {f.type} in a {self.type} input")

    @functools.cached_property
    def local_facets(self) -> tuple[Facet, ...]:
        """The given facets, or those containing the folded isotropy points."""
        if self.facets is not None:
            return self.facets
        rs = self.root_system
        return tuple(facet_of_point(rs, fold_into_alcove(rs, d.isotropy.theta)[1]) for d in self.ram)

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.type)

    @property
    def m(self) -> int:
        return len(self.ram)

    @classmethod
    def from_points(cls, type, genus: int, points: Sequence[tuple[int, Sequence]] = ()) -> ModuliInput:
        """Build from ``[(n_i, theta_i), ...]`` with ``theta_i`` in coweight coordinates."""
        if isinstance(type, str):
            type = DynkinType.parse(type)
        rs = build_root_system(type)
        ram = tuple(RamificationDatum(n, torsion_element(rs, theta)) for n, theta in points)
        return cls(type=type, genus=genus, ram=ram)


def e_G(rs: RootSystem, c: TorsionElement) -> int:
    """Rank of ``Id - Ad(g)`` on the Lie algebra: the roots not trivial on ``g``."""
    return sum(_nontrivial(rs, c.theta))


def moduli_dimension(inp: ModuliInput) -> int:
    """``dim G (g_X - 1) + 1/2 sum_i e_G(C_i)``."""
    rs = inp.root_system
    total = rs.dimension * (inp.genus - 1) + Fraction(sum(e_G(rs, d.isotropy) for d in inp.ram), 2)
    if total.denominator != 1:
        raise InternalError(f"moduli dimension {total} is not an integer")
    if total <= 0:
        warnings.warn(f"moduli dimension {total} is not positive", stacklevel=2)
    return int(total)


# --------------------------------------------------------------- centralizer


@dataclass(frozen=True)
class CentralizerData:
    """Centralizer ``Z_g`` of a torsion element in the simply connected group."""

    element: TorsionElement
    y_g: SubSystem
    rank: int
    k: int
    in_closed_alcove: bool
    falsifications: tuple[str, ...] = ()

    @property
    def dim_zg(self) -> int:
        return self.rank + len(self.y_g.roots)

    @property
    def dim_zg_a(self) -> int:
        return self.rank - self.y_g.total_rank

    @property
    def dim_zg_s(self) -> int:
        return self.dim_zg - self.dim_zg_a

    @property
    def is_central(self) -> bool:
        # every root is an integral combination of simple roots
        return self.k == 0


def centralizer(rs: RootSystem, g: TorsionElement) -> CentralizerData:
    """Roots trivial on ``g``, the number ``k`` of simple roots nontrivial on ``g``,
    and the dimensions of ``Z_g`` and of its abelian and semisimple quotients.

    For ``theta`` in the closed fundamental alcove the claims ``k = dim Z_g^a``
    and ``dim Z_g^s <= dim G - 3k`` are checked; failures are recorded in
    ``falsifications`` rather than raised.
    """
    theta = g.theta
    flags = _nontrivial(rs, theta)
    y = [r for r, bad in zip(rs.roots, flags) if not bad]
    k = _simple_k(rs, theta)
    data = CentralizerData(
        element=g,
        y_g=classify_subsystem(rs, y),
        rank=rs.rank,
        k=k,
        in_closed_alcove=in_closed_alcove(rs, theta),
    )
    bad = []
    if data.in_closed_alcove:
        if data.k != data.dim_zg_a:
            bad.append(f"k = {data.k} differs from dim Z_g^a = {data.dim_zg_a} at theta = {theta}")
        if data.dim_zg_s > rs.dimension - 3 * data.k:
            bad.append(
                f"dim Z_g^s = {data.dim_zg_s} exceeds dim G - 3k = {rs.dimension - 3 * data.k} at theta = {theta}"
            )
    return replace(data, falsifications=tuple(bad))


# ------------------------------------------------------------- codimensions


@dataclass(frozen=True)
class CodimBound:
    value: Fraction
    k: int
    genus: int
    m: int

    @property
    def at_least_two(self) -> bool:
        return self.value >= 2

    @property
    def at_least_four(self) -> bool:
        return self.value >= 4


def codim_lower_bound(k: int, genus: int, m: int) -> Fraction:
    """``k (2 (g_X - 1) + m / 2)``."""
    return k * (2 * (genus - 1) + Fraction(m, 2))


def rs_codim_bound(inp: ModuliInput, g: TorsionElement) -> CodimBound:
    """Lower bound for the codimension of stable torsors with an extra automorphism ``g``."""
    rs = inp.root_system
    k = _simple_k(rs, g.theta)
    if k == 0:
        raise PreconditionError(f"element exp(2 pi i {g.theta}) is central")
    return CodimBound(value=codim_lower_bound(k, inp.genus, inp.m), k=k, genus=inp.genus, m=inp.m)


def unstable_codim_bound(inp: ModuliInput) -> int:
    """Weakest case of the codimension bound for non-stable torsors: ``g_X - 1``."""
    return inp.genus - 1


def hecke_fiber_dimension(inp: ModuliInput) -> int:
    """Dimension of the product of full flag varieties of the reductive quotients."""
    rs = inp.root_system
    return sum(reductive_quotient(rs, f).positive_count for f in inp.local_facets)


@dataclass(frozen=True)
class FuchsianReport:
    generators: int
    euler_characteristic: Fraction
    orders: tuple[int, ...]


def fuchsian_check(inp: ModuliInput) -> FuchsianReport:
    """Check ``Ad(rho(C_i))^{n_i} = 1`` for every ramification point.

    Raises :class:`ValidationError` naming the first offending index.
    """
    for i, d in enumerate(inp.ram):
        if d.order % d.isotropy.order:
            raise ValidationError(
                f"ramification point {i}: isotropy {d.isotropy.theta} has order "
                f"{d.isotropy.order}, which does not divide n = {d.order}"
            )
    chi = 2 - 2 * inp.genus - sum((1 - Fraction(1, d.order) for d in inp.ram), Fraction(0))
    return FuchsianReport(
        generators=2 * inp.genus + inp.m,
        euler_characteristic=chi,
        orders=tuple(d.order for d in inp.ram),
    )
