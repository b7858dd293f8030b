"""Exhaustive verification sweeps.

Each sweep returns a :class:`SweepResult` with the number of cases examined
and the falsifications found.  Sweeps are deterministic; the random
dimension sweep uses a fixed seed.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .apartment import (
    ApartmentPoint,
    alcove_walk,
    apply_word,
    enumerate_facets,
    eval_affine,
    facet_sample_points,
    fundamental_alcove,
    same_alcove,
    vanishing_set,
    wall_through,
)
from .moduli import (
    ModuliInput,
    RamificationDatum,
    centralizer,
    codim_lower_bound,
    e_G,
    moduli_dimension,
    torsion_element,
    unstable_codim_bound,
)
from .parahoric import (
    closure_pairs,
    filtration_chain_violations,
    node_deletion_crosscheck,
    parabolic_set,
    parabolic_violations,
    parahoric_exponents,
    reductive_quotient,
    verify_floor_ceiling_lemma,
)
from .rootsys import (
    DynkinType,
    RootSystem,
    admissible_types,
    build_root_system,
    classify_subsystem,
    reflect,
)

DIMENSION_SWEEP_SEED = 20240101


@dataclass
class SweepResult:
    check: str
    type: DynkinType
    cases: int = 0
    falsifications: list[str] = field(default_factory=list)

    def fail(self, detail: str) -> None:
        self.falsifications.append(detail)


def classical_root_count(t: DynkinType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(n, 0),
        "F": 48,
        "G": 12,
    }[t.family]


def simple_group_dimension(t: DynkinType) -> int:
    n = t.rank
    return {
        "A": n * (n + 2),
        "B": n * (2 * n + 1),
        "C": n * (2 * n + 1),
        "D": n * (2 * n - 1),
        "E": {6: 78, 7: 133, 8: 248}.get(n, 0),
        "F": 52,
        "G": 14,
    }[t.family]


def farey(max_den: int, lo: Fraction = Fraction(0), hi: Fraction = Fraction(1)) -> list[Fraction]:
    values = {Fraction(p, q) for q in range(1, max_den + 1)
              for p in range(int(lo * q) - 1, int(hi * q) + 2)}
    return sorted(v for v in values if lo <= v <= hi)


def closed_alcove_grid(rs: RootSystem, max_den: int) -> list[ApartmentPoint]:
    """Points of the closed alcove whose coordinates have denominators <= ``max_den``."""
    axes = [farey(max_den, Fraction(0), Fraction(1, m)) for m in rs.marks]
    out = []
    for coords in itertools.product(*axes):
        if sum(m * c for m, c in zip(rs.marks, coords)) <= 1:
            out.append(ApartmentPoint(coords))
    return out


# ------------------------------------------------------------------- sweeps


def sweep_root_count(rs: RootSystem) -> SweepResult:
    res = SweepResult("root_count", rs.type, cases=1)
    if len(rs.roots) != classical_root_count(rs.type):
        res.fail(f"{len(rs.roots)} roots, expected {classical_root_count(rs.type)}")
    doubles = [r for r in rs.roots if r.scaled(2) in rs]
    if doubles:
        res.fail(f"non-reduced: 2*{doubles[0]} is a root")
    if classify_subsystem(rs, rs.roots).components != (rs.type.canonical(),):
        res.fail("full root system does not classify as its own type")
    for a in rs.simple:
        if sorted(reflect(rs, a, r) for r in rs.roots) != sorted(rs.roots):
            res.fail(f"reflection in {a} does not permute the roots")
    return res


def sweep_facets(rs: RootSystem) -> SweepResult:
    res = SweepResult("facet_census", rs.type)
    facets = enumerate_facets(rs)
    if len(facets) != 2 ** (rs.rank + 1) - 1:
        res.fail(f"{len(facets)} facets, expected {2 ** (rs.rank + 1) - 1}")
    walls = fundamental_alcove(rs).simple_affine
    for f in facets:
        res.cases += 1
        for i, a in enumerate(walls):
            v = eval_affine(a, f.representative)
            if (i in f.vanishing and v != 0) or (i not in f.vanishing and v <= 0):
                res.fail(f"facet {f.label()}: wrong sign of wall {i} at representative")
        if f.dimension >= 1:
            sizes = {len(vanishing_set(rs, p)) for p in facet_sample_points(rs, f, 3)}
            if len(sizes) != 1:
                res.fail(f"facet {f.label()}: |Y_x| not constant on the facet")
    return res


def sweep_floor_ceiling(rs: RootSystem) -> SweepResult:
    res = SweepResult("floor_ceiling", rs.type)
    for s, b in closure_pairs(enumerate_facets(rs)):
        res.cases += 1
        for msg in verify_floor_ceiling_lemma(rs, s, b).falsifications:
            res.fail(f"s={s.label()} b={b.label()}: {msg}")
    return res


def sweep_filtration(rs: RootSystem) -> SweepResult:
    res = SweepResult("filtration_chain", rs.type)
    for s, b in closure_pairs(enumerate_facets(rs)):
        res.cases += 1
        for msg in filtration_chain_violations(rs, s, b):
            res.fail(f"s={s.label()} b={b.label()}: {msg}")
    return res


def sweep_node_deletion(rs: RootSystem) -> SweepResult:
    report = node_deletion_crosscheck(rs)
    res = SweepResult("node_deletion", rs.type, cases=len(report.rows))
    for f, via_roots, via_diagram in report.rows:
        if via_roots != via_diagram:
            res.fail(f"facet {f.label()}: {via_roots} from roots, {via_diagram} from diagram")
    return res


def sweep_parabolic(rs: RootSystem) -> SweepResult:
    res = SweepResult("parabolic", rs.type)
    facets = enumerate_facets(rs)
    interior = facets[-1]
    for s, b in closure_pairs(facets):
        res.cases += 1
        ps = parabolic_set(rs, s, b)
        for msg in parabolic_violations(rs, ps):
            res.fail(f"s={s.label()} b={b.label()}: {msg}")
        if b is interior:
            ys = vanishing_set(rs, s.representative)
            if 2 * len(ps.unipotent_part) != len(ys):
                res.fail(f"s={s.label()}: Borel unipotent part has {len(ps.unipotent_part)} of {len(ys)} roots")
    return res


def sweep_iwahori(rs: RootSystem) -> SweepResult:
    res = SweepResult("iwahori", rs.type, cases=1)
    facets = enumerate_facets(rs)
    data = parahoric_exponents(rs, facets[-1], audit=True)
    for r, m in data.exponents.items():
        if m != (0 if r.is_positive else 1):
            res.fail(f"interior facet: m_{r} = {m}")
    if reductive_quotient(rs, facets[-1]).group_dim != rs.rank:
        res.fail("reductive quotient of the alcove is not a torus")
    origin = next(f for f in facets if f.vanishing == frozenset(range(rs.rank)))
    if reductive_quotient(rs, origin).components != (rs.type.canonical(),):
        res.fail("reductive quotient at v0 is not G")
    return res


def sweep_centralizer(rs: RootSystem, max_den: int = 6) -> SweepResult:
    """e_G = dim G - dim Z_g on a box of torsion elements, and the fundamental
    domain claims on the closed alcove grid."""
    res = SweepResult("centralizer", rs.type)
    for theta in closed_alcove_grid(rs, max_den):
        res.cases += 1
        data = centralizer(rs, torsion_element(rs, theta))
        for msg in data.falsifications:
            res.fail(msg)
    box = farey(max_den, Fraction(-1), Fraction(1))
    step = max(1, len(box) ** rs.rank // 2000)
    for idx, coords in enumerate(itertools.product(box, repeat=rs.rank)):
        if idx % step:
            continue
        res.cases += 1
        g = torsion_element(rs, coords)
        z = centralizer(rs, g)
        # dim Z_g from the component types, independent of counting roots
        dim_zg = rs.rank + sum(simple_group_dimension(c) - c.rank for c in z.y_g.components)
        if e_G(rs, g) != rs.dimension - dim_zg:
            res.fail(f"e_G = {e_G(rs, g)} but dim G - dim Z_g = {rs.dimension - dim_zg} at {g.theta}")
        if z.dim_zg != dim_zg or z.dim_zg_a < 0 or z.k < 0:
            res.fail(f"inconsistent centralizer dimensions at {g.theta}")
    return res


def random_moduli_input(rs: RootSystem, rng: random.Random) -> ModuliInput:
    genus = rng.randrange(0, 8)
    ram = []
    for _ in range(rng.randrange(0, 6)):
        theta = [Fraction(rng.randrange(-12, 13), rng.randrange(1, 7)) for _ in range(rs.rank)]
        g = torsion_element(rs, theta)
        ram.append(RamificationDatum(g.order * rng.randrange(1, 4), g))
    return ModuliInput(type=rs.type, genus=genus, ram=tuple(ram))


def sweep_dimension(rs: RootSystem, samples: int = 1000) -> SweepResult:
    import warnings

    res = SweepResult("dimension", rs.type)
    rng = random.Random(f"{DIMENSION_SWEEP_SEED}-{rs.type}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for _ in range(samples):
            res.cases += 1
            inp = random_moduli_input(rs, rng)
            for d in inp.ram:
                if e_G(rs, d.isotropy) % 2:
                    res.fail(f"odd e_G at {d.isotropy.theta}")
            try:
                moduli_dimension(inp)
            except Exception as exc:
                res.fail(f"genus {inp.genus}: {exc}")
    return res


def sweep_codim(rs: RootSystem) -> SweepResult:
    res = SweepResult("codim", rs.type)
    for genus in range(3, 11):
        inp = ModuliInput(type=rs.type, genus=genus)
        res.cases += 1
        if unstable_codim_bound(inp) < 2:
            res.fail(f"unstable codimension bound {unstable_codim_bound(inp)} < 2 at g_X = {genus}")
        for m in range(0, 11):
            for k in range(1, rs.rank + 1):
                res.cases += 1
                if codim_lower_bound(k, genus, m) < 4:
                    res.fail(f"codimension bound < 4 at g_X={genus}, m={m}, k={k}")
    return res


def sweep_alcove_walk(rs: RootSystem, samples: int = 400) -> SweepResult:
    res = SweepResult("alcove_walk", rs.type)
    rep = enumerate_facets(rs)[-1].representative
    rng = random.Random(f"{DIMENSION_SWEEP_SEED}-walk-{rs.type}")
    while res.cases < samples:
        target = ApartmentPoint(tuple(
            Fraction(rng.randrange(-40, 41), rng.choice((7, 11, 13))) for _ in range(rs.rank)
        ))
        if wall_through(rs, target) is not None:
            continue
        res.cases += 1
        walk = alcove_walk(rs, target)
        if not same_alcove(rs, apply_word(rs, walk.word, rep), target):
            res.fail(f"walk {walk.word} misses the alcove of {target}")
    return res


SWEEPS: dict[str, tuple[int, Callable[[RootSystem], SweepResult]]] = {
    # name: (largest rank swept, sweep)
    "root_count": (8, sweep_root_count),
    "facet_census": (6, sweep_facets),
    "node_deletion": (6, sweep_node_deletion),
    "floor_ceiling": (4, sweep_floor_ceiling),
    "filtration_chain": (4, sweep_filtration),
    "parabolic": (4, sweep_parabolic),
    "iwahori": (6, sweep_iwahori),
    "centralizer": (4, sweep_centralizer),
    "dimension": (8, sweep_dimension),
    "codim": (8, sweep_codim),
    "alcove_walk": (4, sweep_alcove_walk),
}


def run_sweeps(types: list[DynkinType], checks: list[str] | None = None) -> list[SweepResult]:
    out = []
    for name, (cap, sweep) in SWEEPS.items():
        if checks is not None and name not in checks:
            continue
        for t in types:
            if t.rank <= cap:
                out.append(sweep(build_root_system(t)))
    return out


def all_types(max_rank: int) -> list[DynkinType]:
    return admissible_types(max_rank)
