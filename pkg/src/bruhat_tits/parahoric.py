"""Filtration data of parahoric subgroups attached to facets of the fundamental alcove.

For a root ``r`` and a point ``p`` of a facet, the parahoric is generated by
``T(A)`` and the root groups ``u_r(t^{m_r} A)`` with ``m_r = -floor(<p, r>)``;
its pro-unipotent radical by ``T(1 + tA)`` and ``u_r(t^{1 - ceil(<p, r>)} A)``.
These values do not depend on the chosen point of the facet.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Union

from .apartment import (
    AffineRoot,
    ApartmentPoint,
    Facet,
    affine_sort_key,
    enumerate_facets,
    eval_affine,
    facet_closure_leq,
    facet_sample_points,
    fundamental_alcove,
    vanishing_set,
)
from .errors import InternalError, PreconditionError
from .rootsys import (
    DynkinType,
    Root,
    RootSystem,
    SubSystem,
    cartan_pairing,
    classify_cartan,
    classify_subsystem,
    pairing_numerators,
)

TORUS_PART = "T(A)"
PROUNIPOTENT_TORUS_PART = "T(1+tA)"

Locus = Union[Facet, ApartmentPoint]


def _point_of(locus: Locus) -> ApartmentPoint:
    return locus.representative if isinstance(locus, Facet) else locus


@dataclass(frozen=True)
class ParahoricData:
    locus: Locus
    exponents: Mapping[Root, int]
    prounipotent_exponents: Mapping[Root, int]
    torus_part: str = TORUS_PART
    prounipotent_torus_part: str = PROUNIPOTENT_TORUS_PART

    @property
    def is_iwahori(self) -> bool:
        return isinstance(self.locus, Facet) and self.locus.is_alcove


def _exponents_at(rs: RootSystem, p: ApartmentPoint) -> tuple[dict, dict]:
    m, mu = {}, {}
    nums, den = pairing_numerators(rs, p)
    for r, v in zip(rs.roots, nums):
        m[r] = -(v // den)
        mu[r] = 1 + (-v // den)
    return m, mu


def parahoric_exponents(rs: RootSystem, locus: Locus, audit: bool = False) -> ParahoricData:
    """Root-group exponents of the parahoric and of its pro-unipotent radical.

    ``locus`` is a facet (evaluated at its representative) or a single point.
    With ``audit=True`` the exponents of a facet are recomputed at two more
    points of the facet and any disagreement raises :class:`InternalError`.
    """
    m, mu = _exponents_at(rs, _point_of(locus))
    if audit and isinstance(locus, Facet):
        for p in facet_sample_points(rs, locus, 3)[1:]:
            if _exponents_at(rs, p) != (m, mu):
                raise InternalError(f"exponents differ inside facet {locus.label()} at {p}")
    return ParahoricData(
        locus=locus,
        exponents=MappingProxyType(m),
        prounipotent_exponents=MappingProxyType(mu),
    )


@dataclass(frozen=True)
class ReductiveQuotient:
    """Reductive quotient of the special fiber of a parahoric group scheme."""

    vanishing: tuple[AffineRoot, ...]
    subsystem: SubSystem
    torus_rank: int

    @property
    def semisimple_dim(self) -> int:
        return len(self.subsystem.roots) + self.subsystem.total_rank

    @property
    def group_dim(self) -> int:
        return self.torus_rank + len(self.subsystem.roots)

    @property
    def positive_count(self) -> int:
        return len(self.subsystem.roots) // 2

    @property
    def components(self) -> tuple[DynkinType, ...]:
        return self.subsystem.components


def reductive_quotient(rs: RootSystem, locus: Locus) -> ReductiveQuotient:
    ys = vanishing_set(rs, _point_of(locus))
    sub = classify_subsystem(rs, (a.vector_part for a in ys))
    return ReductiveQuotient(vanishing=ys, subsystem=sub, torus_rank=rs.rank)


# ---------------------------------------------------------------- parabolics


@dataclass(frozen=True)
class ParabolicSet:
    s: Facet
    b: Facet
    roots: tuple[AffineRoot, ...]
    levi_part: tuple[AffineRoot, ...]
    unipotent_part: tuple[AffineRoot, ...]


def parabolic_set(rs: RootSystem, s: Facet, b: Facet) -> ParabolicSet:
    """Affine roots vanishing on ``s`` that are nonnegative on ``b``.

    Those vanishing on ``b`` form the Levi part, the strictly positive ones the
    unipotent radical of the parabolic.
    """
    if not facet_closure_leq(s, b):
        raise PreconditionError(f"facet {s.label()} is not in the closure of {b.label()}")
    levi, unip = [], []
    for a in vanishing_set(rs, s.representative):
        v = eval_affine(a, b.representative)
        if v == 0:
            levi.append(a)
        elif v > 0:
            unip.append(a)
    roots = tuple(sorted(levi + unip, key=affine_sort_key))
    return ParabolicSet(s=s, b=b, roots=roots, levi_part=tuple(levi), unipotent_part=tuple(unip))


def parabolic_violations(rs: RootSystem, ps: ParabolicSet) -> list[str]:
    """Check the structural properties a parabolic subset must have."""
    out = []
    ys = set(vanishing_set(rs, ps.s.representative))
    roots = set(ps.roots)
    levi, unip = set(ps.levi_part), set(ps.unipotent_part)
    if levi & unip or levi | unip != roots:
        out.append("levi and unipotent parts do not partition the parabolic")
    if any(-a not in levi for a in levi):
        out.append("levi part is not closed under negation")
    if any(-a in unip for a in unip):
        out.append("unipotent part meets its negative")
    if roots | {-a for a in roots} != ys:
        out.append("parabolic and its negative do not cover Y_s")
    for a in roots:
        for c in roots:
            d = a + c
            if d in ys and d not in roots:
                out.append(f"not addition-closed: {a} + {c}")
    return out


@dataclass(frozen=True)
class FloorCeilingReport:
    s: Facet
    b: Facet
    equality_roots: tuple[Root, ...]
    counterexamples: tuple[Root, ...]
    parabolic_roots: tuple[Root, ...]

    @property
    def matches_parabolic(self) -> bool:
        return set(self.equality_roots) == set(self.parabolic_roots)

    @property
    def falsifications(self) -> list[str]:
        out = [f"floor(b,r) = ceil(s,r) with (s,r) non-integral for r={r}" for r in self.counterexamples]
        if not self.matches_parabolic:
            out.append("roots with floor(b,r) = ceil(s,r) differ from the parabolic G_{s,b}")
        return out


def verify_floor_ceiling_lemma(rs: RootSystem, s: Facet, b: Facet) -> FloorCeilingReport:
    """Roots generating ``P_b / P_s^u`` from floors and ceilings, checked against
    :func:`parabolic_set` computed from vanishing sets and signs."""
    if not facet_closure_leq(s, b):
        raise PreconditionError(f"facet {s.label()} is not in the closure of {b.label()}")
    equality, bad = [], []
    for r in rs.roots:
        vs = cartan_pairing(rs, s.representative, r)
        vb = cartan_pairing(rs, b.representative, r)
        if math.floor(vb) == math.ceil(vs):
            equality.append(r)
            if vs.denominator != 1:
                bad.append(r)
    ps = parabolic_set(rs, s, b)
    return FloorCeilingReport(
        s=s,
        b=b,
        equality_roots=tuple(equality),
        counterexamples=tuple(bad),
        parabolic_roots=tuple(a.vector_part for a in ps.roots),
    )


def filtration_chain_violations(rs: RootSystem, s: Facet, b: Facet) -> list[str]:
    """``P_s^u < P_b^u < P_b < P_s`` read off as exponent inequalities."""
    if not facet_closure_leq(s, b):
        raise PreconditionError(f"facet {s.label()} is not in the closure of {b.label()}")
    ds, db = parahoric_exponents(rs, s), parahoric_exponents(rs, b)
    out = []
    for r in rs.roots:
        chain = (
            ds.prounipotent_exponents[r],
            db.prounipotent_exponents[r],
            db.exponents[r],
            ds.exponents[r],
        )
        if not chain[0] >= chain[1] >= chain[2] >= chain[3]:
            out.append(f"root {r}: exponents {chain} are not decreasing")
    return out


def closure_pairs(facets: list[Facet]):
    for s in facets:
        for b in facets:
            if facet_closure_leq(s, b):
                yield s, b


# ----------------------------------------------------------- node deletion


def affine_cartan_matrix(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of the untwisted affine diagram, affine node last."""
    vectors = [a.vector_part for a in fundamental_alcove(rs).simple_affine]
    return tuple(tuple(rs.coroot_pairing(b, a) for b in vectors) for a in vectors)


def diagram_type(rs: RootSystem, f: Facet) -> tuple[DynkinType, ...]:
    """Type of the sub-diagram of the affine diagram on the nodes vanishing on ``f``."""
    full = affine_cartan_matrix(rs)
    nodes = sorted(f.vanishing)
    return classify_cartan(tuple(tuple(full[i][j] for j in nodes) for i in nodes))


@dataclass(frozen=True)
class NodeDeletionReport:
    type: DynkinType
    rows: tuple[tuple[Facet, tuple[DynkinType, ...], tuple[DynkinType, ...]], ...] = field(repr=False)

    @property
    def mismatches(self) -> list[Facet]:
        return [f for f, via_roots, via_diagram in self.rows if via_roots != via_diagram]


def node_deletion_crosscheck(rs: RootSystem) -> NodeDeletionReport:
    rows = []
    for f in enumerate_facets(rs):
        rows.append((f, reductive_quotient(rs, f).components, diagram_type(rs, f)))
    return NodeDeletionReport(type=rs.type, rows=tuple(rows))

