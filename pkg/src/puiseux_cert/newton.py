"""Newton-polygon expansion of branches of a plane curve q(t, Y) = 0.

The curve is first moved so that the point of interest is the origin:
``Q(s, y) = q(center + s, y0 + y)``. The support of Q is drawn in the plane
with the Y-exponent ``b`` on the horizontal axis and the s-exponent ``a`` on
the vertical axis. An edge of the lower convex hull with slope ``-g``
(g > 0) yields candidate leading terms ``c * s^g`` of roots ``y(s)``, where
``c`` ranges over the nonzero roots of the edge polynomial.

s-exponents are kept as Fractions, so ramified branches are expanded
directly in fractional powers instead of through an explicit ``s = u^e``
substitution; the two are equivalent.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, isqrt, lcm

from .poly import MultiPoly, UniPoly, as_rational
from .puiseux import INF, OrderValue, PuiseuxPoly, substitution_order

log = logging.getLogger(__name__)

EXACT = "exact"
TRUNCATED = "truncated"
OBSTRUCTED = "irrational-obstruction"

@dataclass(frozen=True)
class SparseQ:
    """A nonzero constant multiple of Q(s, y) as {(A, b): int}, s-exponent A / den."""

    den: int
    terms: dict

    def strip_y(self) -> "SparseQ":
        k = min(b for _, b in self.terms)
        if not k:
            return self
        return SparseQ(self.den, {(a, b - k): c for (a, b), c in self.terms.items()})


class ExpansionDepthError(RuntimeError):
    pass


class SingularPointError(ValueError):
    pass


@dataclass(frozen=True)
class ExpansionConfig:
    depth_limit: int = 64


@dataclass(frozen=True)
class NewtonEdge:
    exponent: Fraction  # g: leading exponent of the roots this edge describes
    edge_poly: UniPoly  # in c, lowest power corresponds to the left endpoint
    left: tuple  # (b, a)
    right: tuple  # (b, a)

    @property
    def slope(self) -> Fraction:
        return -self.exponent

    @property
    def length(self) -> int:
        return self.right[0] - self.left[0]


@dataclass(frozen=True)
class Branch:
    expansion: PuiseuxPoly
    attained_precision: Fraction
    status: str
    multiplicity: int = 1
    residual_order: OrderValue = field(default=INF, compare=False)

    @property
    def ramification(self) -> int:
        return lcm(1, *(e.denominator for e in self.expansion.exponents()))

    def to_dict(self) -> dict:
        from .puiseux import format_order

        return {
            "expansion": self.expansion.to_dict(),
            "attained_precision": str(self.attained_precision),
            "status": self.status,
            "multiplicity": self.multiplicity,
            "ramification": self.ramification,
            "residual_order": format_order(self.residual_order),
        }


def _to_sparse(q: MultiPoly, center, y0) -> SparseQ:
    if q.nvars != 2:
        raise ValueError("expected a bivariate polynomial q(t, Y)")
    shifted = q.shift([center, y0])
    scale = lcm(1, *(c.denominator for c in shifted.terms.values()))
    return SparseQ(1, {(i, j): int(c * scale) for (i, j), c in shifted.terms.items()})


def _lower_edges(Q: SparseQ) -> list[NewtonEdge]:
    """Negative-slope edges of the lower hull, left to right."""
    lowest: dict[int, int] = {}
    for a, b in Q.terms:
        if b not in lowest or a < lowest[b]:
            lowest[b] = a
    pts = sorted(lowest.items())
    hull: list[tuple] = []
    for p in pts:
        while len(hull) >= 2:
            (b1, a1), (b2, a2) = hull[-2], hull[-1]
            # drop hull[-1] unless it lies strictly below segment hull[-2] -> p
            if (a2 - a1) * (p[0] - b1) >= (p[1] - a1) * (b2 - b1):
                hull.pop()
            else:
                break
        hull.append(p)
    edges = []
    den = Q.den
    for (b1, a1), (b2, a2) in zip(hull, hull[1:]):
        if a2 >= a1:
            break
        # points on the edge satisfy a*(b2 - b1) + b*(a1 - a2) == level
        level = a1 * (b2 - b1) + b1 * (a1 - a2)
        coeffs = [0] * (b2 - b1 + 1)
        for (a, b), c in Q.terms.items():
            if b1 <= b <= b2 and a * (b2 - b1) + b * (a1 - a2) == level:
                coeffs[b - b1] += c
        edges.append(
            NewtonEdge(
                Fraction(a1 - a2, (b2 - b1) * den),
                UniPoly([Fraction(c) for c in coeffs]),
                (b1, Fraction(a1, den)),
                (b2, Fraction(a2, den)),
            )
        )
    return edges


def newton_polygon_edges(q: MultiPoly, center, y0=0) -> list[NewtonEdge]:
    """Edges of the Newton polygon of ``q(center + s, y0 + y)``.

    Only edges with positive exponent ``g`` are returned, i.e. those that
    describe roots ``y(s)`` vanishing at ``s = 0``. If ``y`` divides the
    shifted polynomial, that factor (the branch ``Y = y0``) is removed
    before the hull is taken.
    """
    if q.is_zero():
        raise ValueError("the zero polynomial has no Newton polygon")
    return _lower_edges(_to_sparse(q, as_rational(center), as_rational(y0)).strip_y())


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: UniPoly) -> list[tuple[Fraction, int]]:
    """Nonzero rational roots of ``p`` with their multiplicities, ascending."""
    if not p:
        raise ValueError("zero polynomial has every number as a root")
    cs = list(p.coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
    if len(cs) <= 1:
        return []
    sq = UniPoly(cs)
    sq = sq.exact_div(sq.gcd(sq.derivative()))
    den = lcm(*(c.denominator for c in sq.coeffs))
    ints = [int(c * den) for c in sq.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    candidates: set[Fraction] = set()
    if len(ints) == 2:
        candidates.add(Fraction(-ints[0], ints[1]))
    elif len(ints) == 3:
        c0, c1, c2 = ints
        disc = c1 * c1 - 4 * c2 * c0
        if disc >= 0 and isqrt(disc) ** 2 == disc:
            r = isqrt(disc)
            candidates.update({Fraction(-c1 + r, 2 * c2), Fraction(-c1 - r, 2 * c2)})
    else:
        for num in _divisors(ints[0]):
            for den_ in _divisors(ints[-1]):
                candidates.update({Fraction(num, den_), Fraction(-num, den_)})
    full = UniPoly(cs)
    out = []
    from .poly import root_multiplicity

    for c in sorted(candidates):
        if c and not sq(c):
            out.append((c, root_multiplicity(full, c)))
    return out


def _shift_y(Q: SparseQ, c: Fraction, g: Fraction) -> SparseQ:
    """A constant multiple of Q(s, c s^g + y)."""
    den = lcm(Q.den, g.denominator)
    k, step = den // Q.den, int(g * den)
    p, r = c.numerator, c.denominator
    top = max(b for _, b in Q.terms)
    # (p/r)^(b-j) times r^top keeps everything integral
    ppow = [p**i for i in range(top + 1)]
    rpow = [r**i for i in range(top + 1)]
    out: dict = {}
    for (a, b), coeff in Q.terms.items():
        base = a * k
        for j in range(b + 1):
            key = (base + (b - j) * step, j)
            out[key] = out.get(key, 0) + coeff * comb(b, j) * ppow[b - j] * rpow[top - b + j]
    out = {key: v for key, v in out.items() if v}
    content = 0
    for v in out.values():
        content = gcd(content, v)
    if content > 1:
        out = {key: v // content for key, v in out.items()}
    return SparseQ(den, out)


def expand_branches(
    q: MultiPoly,
    center,
    y0,
    precision,
    config: ExpansionConfig = ExpansionConfig(),
) -> list[Branch]:
    """Expand every Puiseux root of ``q(t, Y)`` passing through ``(center, y0)``.

    Each returned branch carries all of its terms with exponent at most
    ``precision`` (more when needed to separate roots). Roots that are not
    yet separated at that point share one Branch whose ``multiplicity``
    counts them. A root whose next coefficient is irrational is reported
    with status ``irrational-obstruction`` and its rational prefix.
    """
    center, y0, precision = as_rational(center), as_rational(y0), as_rational(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if q.nvars != 2 or q.is_zero():
        raise ValueError("expected a nonzero bivariate polynomial")
    if q.evaluate([center, y0]) != 0:
        raise ValueError("the point does not lie on the curve")
    Q = _to_sparse(q, center, y0)
    # a power of (t - center) dividing q is a vertical line, not a branch
    vert = min(a for a, _ in Q.terms)
    if vert:
        log.info("removing vertical factor (t - %s)^%s", center, vert)
        Q = SparseQ(1, {(a - vert, b): c for (a, b), c in Q.terms.items()})
    if (0, 0) in Q.terms:
        raise ValueError("the point lies only on the vertical line t = center")

    prefix0 = [(Fraction(0), y0)]
    raw: list[tuple[list, Fraction, str, int]] = []
    _recurse(Q, prefix0, Fraction(0), precision, 0, config, raw)
    branches = []
    for terms, attained, status, mult in raw:
        expansion = PuiseuxPoly(center, terms)
        residual = substitution_order(q, [PuiseuxPoly.identity(center), expansion])
        branches.append(Branch(expansion, attained, status, mult, residual))
    return branches


def _recurse(Q, prefix, last, precision, depth, config, out) -> None:
    if depth > config.depth_limit:
        raise ExpansionDepthError(
            f"branch expansion went through {config.depth_limit} multiple-root steps; q may not be squarefree"
        )
    k = min(b for _, b in Q.terms)
    if k:
        out.append((prefix, precision, EXACT, k))
        Q = Q.strip_y()
    edges = [e for e in _lower_edges(Q) if e.exponent > last]
    far = sum(e.length for e in edges if e.exponent > precision)
    if far:
        out.append((prefix, precision, TRUNCATED, far))
    for edge in edges:
        if edge.exponent > precision:
            continue
        found = 0
        for c, r in rational_roots(edge.edge_poly):
            Q1 = _shift_y(Q, c, edge.exponent)
            # only unresolved multiple roots count toward the depth cap
            _recurse(Q1, prefix + [(edge.exponent, c)], edge.exponent, precision, depth + (r > 1), config, out)
            found += r
        missing = edge.length - found
        if missing:
            out.append((prefix, last, OBSTRUCTED, missing))


def regular_lift(q: MultiPoly, center, y0, k: int) -> PuiseuxPoly:
    """Power-series root through a regular point, truncated at degree ``k``.

    Uses Newton-Hensel iteration, doubling the number of correct
    coefficients each round.
    """
    center, y0 = as_rational(center), as_rational(y0)
    if k < 0:
        raise ValueError("truncation degree must be nonnegative")
    if q.evaluate([center, y0]) != 0:
        raise ValueError("the point does not lie on the curve")
    dq = q.partial(1)
    if dq.evaluate([center, y0]) == 0:
        raise SingularPointError("dq/dY vanishes at the point; no unique regular lift")
    # F(s, Y) = q(center + s, Y), as coefficient series in s per power of Y
    shifted = q.shift([center, 0])
    rows: dict[int, list[Fraction]] = {}
    for (i, j), c in shifted.terms.items():
        row = rows.setdefault(j, [])
        if len(row) <= i:
            row.extend([Fraction(0)] * (i + 1 - len(row)))
        row[i] += c
    drows = {j - 1: [c * j for c in row] for j, row in rows.items() if j}

    y = [y0]
    n = 1
    while n < k + 1:
        n = min(2 * n, k + 1)
        y = y + [Fraction(0)] * (n - len(y))
        fval = _horner(rows, y, n)
        dval = _horner(drows, y, n)
        step = _series_mul(fval, _series_inv(dval, n), n)
        y = [a - b for a, b in zip(y, step)]
    return PuiseuxPoly(center, [(i, c) for i, c in enumerate(y[: k + 1])])


def _series_mul(a: list, b: list, n: int) -> list:
    # integer convolution over one denominator per operand
    a, b = a[:n], b[:n]
    da = lcm(1, *(x.denominator for x in a))
    db = lcm(1, *(y.denominator for y in b))
    ia = [x.numerator * (da // x.denominator) for x in a]
    ib = [y.numerator * (db // y.denominator) for y in b]
    out = [0] * n
    for i, x in enumerate(ia):
        if x:
            for j, y in enumerate(ib[: n - i]):
                out[i + j] += x * y
    den = da * db
    return [Fraction(c, den) for c in out]


def _series_inv(a: list, n: int) -> list:
    inv = [1 / a[0]]
    for m in range(1, n):
        acc = sum((a[j] * inv[m - j] for j in range(1, min(m, len(a) - 1) + 1)), Fraction(0))
        inv.append(-acc / a[0])
    return inv


def _horner(rows: dict, y: list, n: int) -> list:
    if not rows:
        return [Fraction(0)] * n
    top = max(rows)
    acc = [Fraction(0)] * n
    for j in range(top, -1, -1):
        acc = _series_mul(acc, y, n)
        for i, c in enumerate(rows.get(j, [])[:n]):
            acc[i] += c
    return acc
