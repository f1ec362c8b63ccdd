"""Resultants and gcds of bivariate polynomials.

A bivariate ``MultiPoly`` in (X1, X2) is viewed as a polynomial in X2 whose
coefficients are ``UniPoly`` objects in X1. Lists of such coefficients are
ordered lowest X2-degree first.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .poly import MultiPoly, UniPoly

YPoly = list  # list[UniPoly], lowest X2-degree first


def _check_bivariate(*polys: MultiPoly) -> None:
    for f in polys:
        if f.nvars != 2:
            raise ValueError(f"expected a bivariate polynomial, got {f.nvars} variables")
        if f.is_zero():
            raise ValueError("zero polynomial input")


def y_coefficients(f: MultiPoly) -> YPoly:
    """Coefficients of ``f`` as a polynomial in X2, each a UniPoly in X1."""
    if f.is_zero():
        return []
    dy = f.degree_in(1)
    rows: list[list[Fraction]] = [[] for _ in range(dy + 1)]
    for (i, j), c in f.terms.items():
        row = rows[j]
        if len(row) <= i:
            row.extend([Fraction(0)] * (i + 1 - len(row)))
        row[i] += c
    return [UniPoly(r) for r in rows]


def from_y_coefficients(coeffs: YPoly) -> MultiPoly:
    terms = {}
    for j, u in enumerate(coeffs):
        for i, c in enumerate(u.coeffs):
            if c:
                terms[(i, j)] = c
    return MultiPoly(2, terms)


def _trim(a: YPoly) -> YPoly:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _deg(a: YPoly) -> int:
    return len(a) - 1


def _scale(a: YPoly, u: UniPoly) -> YPoly:
    return _trim([c * u for c in a])


def _prem(a: YPoly, b: YPoly) -> YPoly:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    db = _deg(b)
    lb = b[-1]
    r = list(a)
    steps = _deg(a) - db + 1
    for _ in range(steps):
        if _deg(r) < db:
            r = _scale(r, lb)
            continue
        lr = r[-1]
        shift = _deg(r) - db
        r = [c * lb for c in r]
        for k, bc in enumerate(b):
            r[k + shift] = r[k + shift] - lr * bc
        r = _trim(r)
    return r


def _content(a: YPoly) -> UniPoly:
    g = UniPoly()
    for c in a:
        g = g.gcd(c)
        if g.degree == 0:
            break
    return g


def _exact_div_all(a: YPoly, u: UniPoly) -> YPoly:
    return [c.exact_div(u) for c in a]


def resultant_y(f: MultiPoly, g: MultiPoly) -> UniPoly:
    """Res_{X2}(f, g) in Q[X1] by the subresultant remainder sequence."""
    _check_bivariate(f, g)
    if f.degree_in(1) == 0 or g.degree_in(1) == 0:
        raise ValueError("both polynomials need positive degree in X2")
    return _subresultant(y_coefficients(f), y_coefficients(g))


def _subresultant(a: YPoly, b: YPoly) -> UniPoly:
    s = 1
    if _deg(a) < _deg(b):
        a, b = b, a
        if _deg(a) % 2 and _deg(b) % 2:
            s = -s
    # content management: pull out the X1-contents first
    ca, cb = _content(a), _content(b)
    a, b = _exact_div_all(a, ca), _exact_div_all(b, cb)
    t = ca ** _deg(b) * cb ** _deg(a)
    g = UniPoly([1])
    h = UniPoly([1])
    while _deg(b) > 0:
        delta = _deg(a) - _deg(b)
        if _deg(a) % 2 and _deg(b) % 2:
            s = -s
        r = _prem(a, b)
        a = b
        if not r:
            return UniPoly()
        b = _exact_div_all(r, g * h**delta)
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g**delta).exact_div(h ** (delta - 1))
    # b is now a nonzero constant in X2
    da = _deg(a)
    lb = b[-1]
    if da == 0:
        h = UniPoly([1])
    elif da == 1:
        h = lb
    else:
        h = (lb**da).exact_div(h ** (da - 1))
    return t * h * s


def sylvester_matrix(f: MultiPoly, g: MultiPoly) -> list[list[UniPoly]]:
    a, b = y_coefficients(f), y_coefficients(g)
    m, n = _deg(a), _deg(b)
    size = m + n
    zero = UniPoly()
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(a)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(b)):
            row[i + k] = c
        rows.append(row)
    return rows


def sylvester_resultant(f: MultiPoly, g: MultiPoly) -> UniPoly:
    """Res_{X2}(f, g) as a fraction-free (Bareiss) Sylvester determinant."""
    _check_bivariate(f, g)
    if f.degree_in(1) == 0 or g.degree_in(1) == 0:
        raise ValueError("both polynomials need positive degree in X2")
    return bareiss_determinant(sylvester_matrix(f, g))


def _ipoly_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _ipoly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _ipoly_sub(a: list, b: list) -> list:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return _ipoly_trim(out)


def _ipoly_exact_div(a: list, b: list) -> list:
    a = list(a)
    if not a:
        return []
    q = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(q) - 1, -1, -1):
        num = a[k + len(b) - 1]
        if num % lead:
            raise ArithmeticError("inexact division in the Bareiss elimination")
        q[k] = num // lead
        if q[k]:
            for i, y in enumerate(b):
                a[k + i] -= q[k] * y
    if any(a):
        raise ArithmeticError("inexact division in the Bareiss elimination")
    return _ipoly_trim(q)


def bareiss_determinant(matrix: list[list[UniPoly]]) -> UniPoly:
    n = len(matrix)
    if n == 0:
        return UniPoly([1])
    # clear denominators row by row, then eliminate over Z[x]
    scale = Fraction(1)
    m = []
    for row in matrix:
        den = lcm(1, *(c.denominator for p in row for c in p.coeffs))
        scale /= den
        m.append([_ipoly_trim([int(c * den) for c in p.coeffs]) for p in row])
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return UniPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _ipoly_sub(_ipoly_mul(m[k][k], m[i][j]), _ipoly_mul(m[i][k], m[k][j]))
                m[i][j] = _ipoly_exact_div(num, prev)
        prev = m[k][k]
    return UniPoly([Fraction(c) * scale * sign for c in m[n - 1][n - 1]])


def _primitive_prs_gcd(a: YPoly, b: YPoly) -> YPoly:
    # a, b primitive with respect to X1
    if _deg(a) < _deg(b):
        a, b = b, a
    while b:
        if _deg(b) == 0:
            return [UniPoly([1])]
        r = _prem(a, b)
        a = b
        if not r:
            break
        b = _exact_div_all(r, _content(r))
    return a


def normalize_integer(f: MultiPoly) -> MultiPoly:
    """Primitive integer multiple with positive leading coefficient in lex X2 > X1."""
    if f.is_zero():
        return f
    den = 1
    for c in f.terms.values():
        den = lcm(den, c.denominator)
    num = 0
    for c in f.terms.values():
        num = gcd(num, (c * den).numerator)
    lead_key = max(f.terms, key=lambda e: tuple(reversed(e)))
    scale = Fraction(den, num)
    if f.terms[lead_key] < 0:
        scale = -scale
    return f * scale


def gcd_bivariate(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """gcd in Q[X1, X2], normalized by :func:`normalize_integer`."""
    _check_bivariate(f, g)
    a, b = y_coefficients(f), y_coefficients(g)
    ca, cb = _content(a), _content(b)
    pa, pb = _exact_div_all(a, ca), _exact_div_all(b, cb)
    content = ca.gcd(cb)
    core = _primitive_prs_gcd(pa, pb)
    return normalize_integer(from_y_coefficients([c * content for c in core]))


def exact_quotient(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """f / g for bivariate polynomials when g divides f exactly."""
    _check_bivariate(f, g)
    num = y_coefficients(f)
    den = y_coefficients(g)
    dq = _deg(num) - _deg(den)
    if dq < 0:
        raise ArithmeticError("divisor has larger X2-degree")
    quot = [UniPoly() for _ in range(dq + 1)]
    rem = list(num)
    for k in range(dq, -1, -1):
        top = rem[k + _deg(den)] if k + _deg(den) < len(rem) else UniPoly()
        q, r = top.divmod(den[-1])
        if r:
            raise ArithmeticError("not an exact division")
        quot[k] = q
        for j, c in enumerate(den):
            rem[k + j] = rem[k + j] - q * c
    if any(rem):
        raise ArithmeticError("not an exact division")
    return from_y_coefficients(quot)
