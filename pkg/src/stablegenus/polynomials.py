"""Dense univariate polynomials over Q with Sturm-sequence root isolation.

A polynomial is a tuple of coefficients in ascending degree order; entries are
``int`` or ``Fraction``.  The zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

Poly = tuple


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Poly) -> int:
    return len(trim(p)) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p: Poly, c) -> Poly:
    return trim(c * a for a in p)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(p)]
    dq = len(q) - 1
    lead = Fraction(q[-1])
    quo = [Fraction(0)] * max(len(r) - dq, 1)
    while len(r) - 1 >= dq and r:
        shift = len(r) - 1 - dq
        c = r[-1] / lead
        quo[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        r = list(trim(r))
    return _normalize(quo), _normalize(r)


def _normalize(p: Sequence) -> Poly:
    """Turn integral Fractions back into ints."""
    out = []
    for c in trim(p):
        c = Fraction(c)
        out.append(int(c) if c.denominator == 1 else c)
    return tuple(out)


def primitive(p: Poly) -> Poly:
    """Integer polynomial with coprime coefficients and positive leading term."""
    p = trim(p)
    if not p:
        return ()
    den = 1
    for c in p:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    sign = 1 if ints[-1] > 0 else -1
    return tuple(sign * c // g for c in ints)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    p, q = trim(p), trim(q)
    while q:
        _, r = divmod_poly(p, q)
        p, q = q, r
    return primitive(p)


def derivative(p: Poly) -> Poly:
    return trim(i * p[i] for i in range(1, len(p)))


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree(p: Poly) -> Poly:
    p = primitive(p)
    g = poly_gcd(p, derivative(p))
    if degree(g) <= 0:
        return p
    q, _ = divmod_poly(p, g)
    return primitive(q)


def exact_divide(p: Poly, q: Poly) -> Poly | None:
    quo, rem = divmod_poly(p, q)
    return None if rem else quo


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial, built by dividing t^n - 1 by Phi_d, d | n, d < n."""
    p: Poly = (-1,) + (0,) * (n - 1) + (1,)
    for d in range(1, n):
        if n % d == 0:
            p, _ = divmod_poly(p, cyclotomic(d))
    return tuple(int(c) for c in p)


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        _, r = divmod_poly(seq[-2], seq[-1])
        seq.append(neg(r))
    return [s for s in seq if s]


def _sign_changes(seq: list[Poly], x) -> int:
    signs = []
    for s in seq:
        v = evaluate(s, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: list[Poly], lo, hi) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


@lru_cache(maxsize=256)
def _sturm_cached(p: Poly) -> list[Poly]:
    return sturm_sequence(p)


def count_open(p: Poly, lo, hi) -> int:
    """Distinct roots of squarefree ``p`` strictly inside (lo, hi)."""
    n = count_roots(_sturm_cached(p), lo, hi)
    return n - 1 if evaluate(p, hi) == 0 else n


def isolate_real_roots(p: Poly, lo, hi) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for the distinct roots of ``p`` in the open interval (lo, hi).

    Each result is either ``(a, a)`` for an exact rational root or ``(a, b)``
    with ``a < b`` holding exactly one root in its open interior.  Sorted ascending.
    """
    p = squarefree(p)
    if degree(p) < 1:
        return []
    found: list[tuple[Fraction, Fraction]] = []
    stack = [(Fraction(lo), Fraction(hi))]
    while stack:
        a, b = stack.pop()
        n = count_open(p, a, b)
        if n == 0:
            continue
        if n == 1:
            found.append((a, b))
            continue
        m = (a + b) / 2
        if evaluate(p, m) == 0:
            found.append((m, m))
        stack.append((a, m))
        stack.append((m, b))
    return sorted(found)


def refine_root(p: Poly, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """Halve an isolating interval (a, b) of a squarefree polynomial."""
    if a == b:
        return a, b
    m = (a + b) / 2
    if evaluate(p, m) == 0:
        return m, m
    if count_open(p, a, m):
        return a, m
    return m, b


def laurent_to_z(coeffs: Sequence[int]) -> Poly:
    """Rewrite a palindromic polynomial sum c_k t^k of even degree 2g as Q(z), z = t + 1/t.

    The palindrome divided by t^g equals c_g + sum_k c_{g+k} (t^k + t^-k), and
    t^k + t^-k is expressed through the recurrence P_{k+1} = z P_k - P_{k-1}.
    """
    coeffs = list(coeffs)
    n = len(coeffs) - 1
    if n % 2:
        raise ValueError("palindromic polynomial must have even degree")
    g = n // 2
    if any(coeffs[i] != coeffs[n - i] for i in range(n + 1)):
        raise ValueError("polynomial is not palindromic")
    prev, cur = (2,), (0, 1)  # P_0 = 2, P_1 = z
    q: Poly = (coeffs[g],)
    for k in range(1, g + 1):
        q = add(q, scale(cur, coeffs[g + k]))
        prev, cur = cur, sub(mul((0, 1), cur), prev)
    return q
