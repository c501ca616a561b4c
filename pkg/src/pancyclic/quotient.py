"""Equitable partitions, quotient matrices and their characteristic polynomials."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .spectral import Kind


class NonEquitablePartition(ValueError):
    def __init__(self, vertex: int, cell: int, target_cell: int, expected: int, found: int):
        super().__init__(
            f"vertex {vertex} in cell {cell} has {found} neighbors in cell {target_cell}, "
            f"other vertices of its cell have {expected}"
        )
        self.vertex = vertex
        self.cell = cell
        self.target_cell = target_cell


@dataclass(frozen=True)
class QuotientMatrix:
    matrix: tuple[tuple[int, ...], ...]
    cell_sizes: tuple[int, ...]
    kind: Kind

    @property
    def k(self) -> int:
        return len(self.matrix)


def quotient_matrix(g: Graph, partition: Sequence[Sequence[int]], kind: Kind = Kind.ADJACENCY) -> QuotientMatrix:
    kind = Kind(kind)
    seen = [False] * g.n
    masks = []
    for cell in partition:
        if not cell:
            raise ValueError("empty cell in partition")
        mask = 0
        for v in cell:
            if not 0 <= v < g.n or seen[v]:
                raise ValueError(f"vertex {v} is out of range or appears twice")
            seen[v] = True
            mask |= 1 << v
        masks.append(mask)
    if not all(seen):
        raise ValueError(f"partition misses vertex {seen.index(False)}")

    rows = []
    for i, cell in enumerate(partition):
        first = cell[0]
        row = [(g.adj[first] & mask).bit_count() for mask in masks]
        for v in cell[1:]:
            for j, mask in enumerate(masks):
                found = (g.adj[v] & mask).bit_count()
                if found != row[j]:
                    raise NonEquitablePartition(v, i, j, row[j], found)
        if kind is Kind.SIGNLESS_LAPLACIAN:
            row[i] += g.degrees[first]
        rows.append(tuple(row))
    return QuotientMatrix(tuple(rows), tuple(len(c) for c in partition), kind)


def degree_partition(g: Graph) -> list[list[int]]:
    """Vertices grouped by degree, cells in ascending degree order."""
    cells: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees):
        cells.setdefault(d, []).append(v)
    return [cells[d] for d in sorted(cells)]


def equitable_refinement(g: Graph, partition: Sequence[Sequence[int]] | None = None) -> list[list[int]]:
    """Coarsest equitable partition refining ``partition`` (default: by degree).

    Classic colour refinement: split cells by the multiset of neighbour colours
    until nothing changes. Cells keep the order of the cells they came from.
    """
    if partition is None:
        partition = degree_partition(g)
    color = [0] * g.n
    for i, cell in enumerate(partition):
        for v in cell:
            color[v] = i
    while True:
        ncolors = len(set(color))
        sig = [
            (color[v], tuple(sorted(color[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        color = [ranks[s] for s in sig]
        if len(ranks) == ncolors:
            break
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def char_poly(q: QuotientMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Exact coefficients of ``det(xI - M)``, highest degree first.

    Faddeev-LeVerrier in rational arithmetic; for an integer matrix every
    coefficient comes out integral.
    """
    mat = q.matrix if isinstance(q, QuotientMatrix) else q
    k = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * k for _ in range(k)]
    for step in range(1, k + 1):
        # M_step = A M_{step-1} + c_{step-1} I
        prod = [[sum(a[i][t] * mk[t][j] for t in range(k)) for j in range(k)] for i in range(k)]
        for i in range(k):
            prod[i][i] += coeffs[-1]
        mk = prod
        am = [[sum(a[i][t] * mk[t][j] for t in range(k)) for j in range(k)] for i in range(k)]
        coeffs.append(-sum(am[i][i] for i in range(k)) / step)
    return [int(c) if c.denominator == 1 else c for c in coeffs]


def poly_to_text(coeffs: Sequence) -> str:
    deg = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        p = deg - i
        mag = abs(c)
        body = "" if (mag == 1 and p > 0) else str(mag)
        if p > 0:
            body += "x" if p == 1 else f"x^{p}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _horner(coeffs, x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _refine(coeffs, deriv, lo: float, hi: float, flo: float) -> float:
    """Root of ``coeffs`` in [lo, hi] given a sign change; Newton inside bisection."""
    x = 0.5 * (lo + hi)
    for _ in range(200):
        fx = _horner(coeffs, x)
        if fx == 0:
            return x
        if (fx < 0) == (flo < 0):
            lo, flo = x, fx
        else:
            hi = x
        if hi - lo <= 4e-16 * max(1.0, abs(x)):
            break
        d = _horner(deriv, x)
        step = x - fx / d if d else None
        x = step if step is not None and lo < step < hi else 0.5 * (lo + hi)
    return x


def _touches_zero(coeffs, x: float) -> bool:
    # |p(x)| within the rounding bound of Horner evaluation
    size = 0.0
    for c in coeffs:
        size = size * abs(x) + abs(c)
    return abs(_horner(coeffs, x)) <= 1e-12 * size


def _real_roots(coeffs: list[float]) -> list[float]:
    deg = len(coeffs) - 1
    if deg == 1:
        return [-coeffs[1] / coeffs[0]]
    deriv = [c * (deg - i) for i, c in enumerate(coeffs[:-1])]
    bound = 1.0 + max(abs(c / coeffs[0]) for c in coeffs[1:])
    points = [-bound] + _real_roots(deriv) + [bound]
    roots = []
    for lo, hi in zip(points, points[1:]):
        if _touches_zero(coeffs, lo):
            if not roots or roots[-1] != lo:
                roots.append(lo)
            continue
        flo, fhi = _horner(coeffs, lo), _horner(coeffs, hi)
        if (flo < 0) != (fhi < 0):
            roots.append(_refine(coeffs, deriv, lo, hi, flo))
    if _touches_zero(coeffs, points[-1]) and (not roots or roots[-1] != points[-1]):
        roots.append(points[-1])
    return roots


def largest_real_root(coeffs: Sequence) -> float:
    """Largest real root of a polynomial given highest-degree coefficient first.

    Real roots are isolated between consecutive critical points (found
    recursively from the derivative) inside the Cauchy bound, then refined.
    """
    coeffs = [float(c) for c in coeffs]
    if len(coeffs) < 2:
        raise ValueError("polynomial must have degree at least 1")
    if coeffs[0] == 0:
        raise ValueError("leading coefficient must be nonzero")
    roots = _real_roots(coeffs)
    if not roots:
        raise ValueError("polynomial has no real root")
    return max(roots)
