"""Independent reference computations used by the tests.

Nothing here imports the package.  Root systems come from their explicit
Euclidean models, marks from the standard tables, and type A centralizers
from eigenvalue multiplicities of diagonal matrices.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

HALF = Fraction(1, 2)

# coefficients of the highest root, Bourbaki numbering
MARKS = {
    "E6": (1, 2, 2, 3, 2, 1),
    "E7": (2, 2, 3, 4, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
    "F4": (2, 3, 4, 2),
    "G2": (3, 2),
}


def marks(family: str, n: int) -> tuple[int, ...]:
    if family == "A":
        return (1,) * n
    if family == "B":
        return (1,) + (2,) * (n - 1)
    if family == "C":
        return (2,) * (n - 1) + (1,)
    if family == "D":
        return (1,) + (2,) * (n - 3) + (1, 1)
    return MARKS[f"{family}{n}"]


def group_dimension(family: str, n: int) -> int:
    return {
        "A": n * (n + 2), "B": n * (2 * n + 1), "C": n * (2 * n + 1), "D": n * (2 * n - 1),
        "E": {6: 78, 7: 133, 8: 248}.get(n), "F": 52, "G": 14,
    }[family]


def _e(i: int, dim: int, c=1) -> tuple:
    v = [Fraction(0)] * dim
    v[i] = Fraction(c)
    return tuple(v)


def _add(*vs):
    return tuple(sum(xs, Fraction(0)) for xs in zip(*vs))


def _neg(v):
    return tuple(-x for x in v)


def euclidean_model(family: str, n: int) -> tuple[list[tuple], list[tuple]]:
    """(simple roots, all roots) as Euclidean vectors."""
    if family == "A":
        d = n + 1
        simple = [_add(_e(i, d), _e(i + 1, d, -1)) for i in range(n)]
        roots = [_add(_e(i, d), _e(j, d, -1)) for i in range(d) for j in range(d) if i != j]
        return simple, roots
    if family == "G":
        d = 3
        simple = [_add(_e(0, d), _e(1, d, -1)), _add(_e(0, d, -2), _e(1, d), _e(2, d))]
        short = [_add(_e(i, d), _e(j, d, -1)) for i in range(d) for j in range(d) if i != j]
        long = []
        for i in range(d):
            v = _add(_e(i, d, 3), (Fraction(-1),) * d)
            long += [v, _neg(v)]
        return simple, short + long
    if family == "F":
        d = 4
        simple = [
            _add(_e(1, d), _e(2, d, -1)),
            _add(_e(2, d), _e(3, d, -1)),
            _e(3, d),
            (HALF, -HALF, -HALF, -HALF),
        ]
        roots = [_e(i, d, s) for i in range(d) for s in (1, -1)]
        roots += [_add(_e(i, d, s), _e(j, d, t)) for i, j in itertools.combinations(range(d), 2)
                  for s in (1, -1) for t in (1, -1)]
        roots += [tuple(HALF * s for s in signs) for signs in itertools.product((1, -1), repeat=d)]
        return simple, roots
    if family == "E" and n == 8:
        d = 8
        simple = [(HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF), _add(_e(0, d), _e(1, d))]
        simple += [_add(_e(i, d), _e(i - 1, d, -1)) for i in range(1, 7)]
        roots = [_add(_e(i, d, s), _e(j, d, t)) for i, j in itertools.combinations(range(d), 2)
                 for s in (1, -1) for t in (1, -1)]
        roots += [tuple(HALF * s for s in signs) for signs in itertools.product((1, -1), repeat=d)
                  if signs.count(-1) % 2 == 0]
        return simple, roots
    # B, C, D share the +-e_i +- e_j roots
    d = n
    simple = [_add(_e(i, d), _e(i + 1, d, -1)) for i in range(n - 1)]
    roots = [_add(_e(i, d, s), _e(j, d, t)) for i, j in itertools.combinations(range(d), 2)
             for s in (1, -1) for t in (1, -1)]
    if family == "B":
        simple.append(_e(n - 1, d))
        roots += [_e(i, d, s) for i in range(d) for s in (1, -1)]
    elif family == "C":
        simple.append(_e(n - 1, d, 2))
        roots += [_e(i, d, 2 * s) for i in range(d) for s in (1, -1)]
    elif family == "D":
        simple.append(_add(_e(n - 2, d), _e(n - 1, d)))
    else:
        raise ValueError(f"no Euclidean model for {family}{n}")
    return simple, roots


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _solve(a, b):
    n = len(a)
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def simple_coordinates(family: str, n: int) -> set[tuple[int, ...]]:
    """All roots of the Euclidean model written in the simple-root basis."""
    simple, roots = euclidean_model(family, n)
    gram = [[_dot(a, b) for b in simple] for a in simple]
    out = set()
    for r in roots:
        c = _solve(gram, [_dot(a, r) for a in simple])
        assert all(x.denominator == 1 for x in c), (family, n, r, c)
        out.add(tuple(int(x) for x in c))
    return out


def euclidean_cartan(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    """``a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``."""
    simple, _ = euclidean_model(family, n)
    return tuple(
        tuple(int(2 * _dot(a, b) / _dot(a, a)) for b in simple) for a in simple
    )


# ----------------------------------------------------------- pairings, floors


def pairing(theta, root) -> Fraction:
    """Coweight coordinates against simple-root coordinates."""
    return sum((Fraction(t) * c for t, c in zip(theta, root)), Fraction(0))


def floor_exponent(theta, root) -> int:
    return -math.floor(pairing(theta, root))


def ceil_exponent(theta, root) -> int:
    return 1 - math.ceil(pairing(theta, root))


# ------------------------------------------------------- type A centralizers


def sl_eigenvalue_angles(theta) -> list[Fraction]:
    """Diagonal entries ``a`` (``g = diag(exp 2 pi i a)``) of ``sum theta_i omega_i^vee`` in SL(n+1)."""
    n = len(theta)
    d = n + 1
    out = [Fraction(0)] * d
    for i, t in enumerate(theta):
        t = Fraction(t)
        for k in range(d):
            out[k] += t * ((1 if k <= i else 0) - Fraction(i + 1, d))
    return out


def sl_centralizer(theta) -> dict[str, int]:
    """Centralizer data of ``g`` in SL(n+1) from eigenvalue multiplicities."""
    a = sl_eigenvalue_angles(theta)
    classes: dict[Fraction, int] = {}
    for x in a:
        key = x - math.floor(x)
        classes[key] = classes.get(key, 0) + 1
    dim_zg = sum(m * m for m in classes.values()) - 1
    dim = (len(a)) ** 2 - 1
    return {
        "dim_zg": dim_zg,
        "dim_zg_a": len(classes) - 1,
        "e_G": dim - dim_zg,
        "k": sum(1 for i in range(len(a) - 1) if (a[i] - a[i + 1]).denominator != 1),
    }
