"""Brute-force ground truth in finitely many variables.

M_alpha and F_alpha are expanded as honest polynomials in x_1..x_n with
N~ exponents and multiplied monomial by monomial.  Nothing here calls the
quasi-shuffle or the basis-change code; the only shared pieces are the N~
addition table and e-decomposition of a composition's entries.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Mapping

from .lincomb import LinComb
from .monoid import EPS, entry_key, format_entry, nt_add


class TruncSeries:
    """Polynomial in n variables with N~ exponent vectors and integer coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        clean: dict = {}
        for k, c in (terms or {}).items():
            if len(k) != n:
                raise ValueError(f"exponent vector {k!r} does not have length {n}")
            if c:
                clean[k] = clean.get(k, 0) + c
                if not clean[k]:
                    del clean[k]
        self.terms = clean

    @classmethod
    def one(cls, n: int) -> "TruncSeries":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, n: int, exps: Mapping[int, object], coeff: int = 1) -> "TruncSeries":
        """``exps`` maps 1-based variable index -> exponent."""
        vec = [0] * n
        for i, a in exps.items():
            vec[i - 1] = a
        return cls(n, {tuple(vec): coeff})

    def _check(self, other: "TruncSeries"):
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TruncSeries(self.n, out)

    def __neg__(self):
        return TruncSeries(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "TruncSeries":
        return TruncSeries(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        return mul_series(self, other)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def coeff(self, exps: tuple) -> int:
        return self.terms.get(tuple(exps), 0)

    def __repr__(self):
        return format_series(self)


def mul_series(u: TruncSeries, v: TruncSeries) -> TruncSeries:
    """Convolution with exponents added in N~: x^f x^g = x^(f+g)."""
    u._check(v)
    out: dict = {}
    for f, cf in u.terms.items():
        for g, cg in v.terms.items():
            h = tuple(nt_add(a, b) for a, b in zip(f, g))
            out[h] = out.get(h, 0) + cf * cg
    return TruncSeries(u.n, out)


def expand_m(alpha: tuple, n: int) -> TruncSeries:
    """Sum over i_1 < ... < i_k in [1, n] of x_{i_1}^{alpha_1} ... x_{i_k}^{alpha_k}."""
    out: dict = {}
    for idx in itertools.combinations(range(n), len(alpha)):
        vec = [0] * n
        for i, a in zip(idx, alpha):
            vec[i] = a
        key = tuple(vec)
        out[key] = out.get(key, 0) + 1
    return TruncSeries(n, out)


def _slot_pattern(alpha: tuple) -> tuple[list, set]:
    """Slot exponents and strict positions of the weakly increasing index string.

    Every e is one slot with exponent e, every positive s is s slots with
    exponent 1; strictness n_l < n_{l+1} is imposed where l closes a
    positive entry.
    """
    slots: list = []
    strict: set = set()
    for a in alpha:
        if a is EPS:
            slots.append(EPS)
        else:
            slots.extend([1] * a)
            strict.add(len(slots))
    return slots, strict


def expand_f(alpha: tuple, n: int) -> TruncSeries:
    slots, strict = _slot_pattern(tuple(alpha))
    out: dict = {}
    for idx in itertools.combinations_with_replacement(range(n), len(slots)):
        if any(idx[l - 1] == idx[l] for l in strict if l < len(slots)):
            continue
        vec = [0] * n
        for i, a in zip(idx, slots):
            vec[i] = nt_add(vec[i], a)
        key = tuple(vec)
        out[key] = out.get(key, 0) + 1
    return TruncSeries(n, out)


def expand(u: LinComb, n: int) -> TruncSeries:
    """Expand an M- or F-basis combination at n variables."""
    if u.basis not in ("M", "F", None):
        raise ValueError(f"cannot expand basis {u.basis}")
    fn = expand_f if u.basis == "F" else expand_m
    acc = TruncSeries(n)
    for alpha, c in u.items():
        acc = acc + fn(alpha, n).scale(c)
    return acc


def is_quasi_symmetric(series: TruncSeries) -> bool:
    """Coefficients depend only on the sequence of nonzero exponents, not on where they sit."""
    seen: dict = {}
    for vec, c in series.terms.items():
        comp = tuple(a for a in vec if a != 0 or a is EPS)
        if seen.setdefault(comp, c) != c:
            return False
    for comp, c in seen.items():
        for idx in itertools.combinations(range(series.n), len(comp)):
            vec = [0] * series.n
            for i, a in zip(idx, comp):
                vec[i] = a
            if series.coeff(tuple(vec)) != c:
                return False
    return True


def oracle_product_check(alpha: tuple, beta: tuple, n: int | None = None, product=None) -> bool:
    """expand(M_alpha) * expand(M_beta) == expand(M_alpha M_beta) at n variables."""
    if product is None:
        from .hopf import M, product as hopf_product
        product = lambda a, b: hopf_product(M(a), M(b))
    if n is None:
        n = len(alpha) + len(beta)
    lhs = mul_series(expand_m(alpha, n), expand_m(beta, n))
    return lhs == expand(product(alpha, beta), n)


def format_series(s: TruncSeries) -> str:
    if not s.terms:
        return "0"

    def key(vec):
        # graded by number of variables present, then variable order
        return (sum(1 for a in vec if a != 0 or a is EPS), tuple(-entry_key(a) for a in vec))

    parts = []
    for vec in sorted(s.terms, key=key):
        c = s.terms[vec]
        mono = "*".join(
            f"x{i + 1}" if a == 1 else f"x{i + 1}^{format_entry(a)}"
            for i, a in enumerate(vec) if a is EPS or a != 0
        )
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- Waring's identity --------------------------------------------------------

def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for a, ca in p.items():
        for b, cb in q.items():
            k = tuple(x + y for x, y in zip(a, b))
            out[k] = out.get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _poly_add(p: dict, q: dict, scale=1) -> dict:
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, 0) + scale * c
    return {k: c for k, c in out.items() if c}


def power_sum(k: int, m: int) -> dict:
    out: dict = {}
    for i in range(m):
        vec = [0] * m
        vec[i] = k
        out[tuple(vec)] = out.get(tuple(vec), 0) + 1
    return out


def elementary(n: int, m: int) -> dict:
    """e_n(x_1..x_m); zero when m < n."""
    out: dict = {}
    for idx in itertools.combinations(range(m), n):
        vec = [0] * m
        for i in idx:
            vec[i] = 1
        out[tuple(vec)] = 1
    return out


def waring_sides(m: int, K: int) -> tuple[list, list]:
    """Both sides of exp(-sum_k (-1)^k t^k p_k / k) = sum_n e_n t^n, mod t^(K+1).

    Each side is a list indexed by the power of t of polynomials in m
    variables with Fraction coefficients.
    """
    # f = -sum (-1)^k p_k / k t^k
    f = [dict() for _ in range(K + 1)]
    for k in range(1, K + 1):
        f[k] = {e: Fraction(-((-1) ** k) * c, k) for e, c in power_sum(k, m).items()}
    # exp(f) = sum_j f^j / j!, and f^j has no t-degree below j
    lhs = [dict() for _ in range(K + 1)]
    lhs[0] = {(0,) * m: Fraction(1)}
    power = [dict(lhs[0])] + [dict() for _ in range(K)]
    for j in range(1, K + 1):
        nxt = [dict() for _ in range(K + 1)]
        for a in range(K + 1):
            if not power[a]:
                continue
            for b in range(1, K + 1 - a):
                if f[b]:
                    nxt[a + b] = _poly_add(nxt[a + b], _poly_mul(power[a], f[b]))
        power = nxt
        for d in range(K + 1):
            if power[d]:
                lhs[d] = _poly_add(lhs[d], power[d], Fraction(1, factorial(j)))
    rhs = [{k: Fraction(c) for k, c in elementary(d, m).items()} for d in range(K + 1)]
    return lhs, rhs


def waring_check(m: int, K: int) -> bool:
    lhs, rhs = waring_sides(m, K)
    return all(a == b for a, b in zip(lhs, rhs))
