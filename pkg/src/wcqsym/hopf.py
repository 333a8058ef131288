"""Hopf algebra of weak composition quasi-symmetric functions.

Elements are ``LinComb`` values over compositions, tagged "M" (monomial) or
"F" (fundamental).  Classical QSym is the span of the e-free compositions;
the same functions serve both.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from itertools import product as cartesian

from .compositions import (
    Composition,
    coarsen,
    eps_block_decomposition,
    eps_entry_decomposition,
    integer_compositions,
    refinements,
    assemble,
    precedes_wc,
    _align,
)
from .lincomb import LinComb
from .monoid import NTILDE, Monoid
from .quasishuffle import qshuffle, qshuffle_ntilde


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n, with C(-1, -1) = 1."""
    if n == -1 and k == -1:
        return 1
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def M(alpha: Composition = (), coeff: int = 1) -> LinComb:
    return LinComb.basis_element(tuple(alpha), "M", coeff)


def F(alpha: Composition = (), coeff: int = 1) -> LinComb:
    return LinComb.basis_element(tuple(alpha), "F", coeff)


def one() -> LinComb:
    return M(())


def _require(u: LinComb, basis: str) -> None:
    if u.basis not in (None, basis):
        raise ValueError(f"expected an {basis}-basis element, got basis {u.basis}")


# -- algebra ------------------------------------------------------------------

def product_basis(alpha: Composition, beta: Composition, monoid: Monoid = NTILDE) -> LinComb:
    if monoid is NTILDE:
        return qshuffle_ntilde(tuple(alpha), tuple(beta))
    return qshuffle(alpha, beta, 1, monoid, "M")


def product(u: LinComb, v: LinComb, monoid: Monoid = NTILDE) -> LinComb:
    """M_a M_b = M_{a * b}, extended bilinearly."""
    _require(u, "M")
    _require(v, "M")
    acc: dict = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for g, c in product_basis(a, b, monoid).items():
                acc[g] = acc.get(g, 0) + ca * cb * c
    return LinComb(acc, "M")


def coproduct_basis(alpha: Composition) -> LinComb:
    alpha = tuple(alpha)
    return LinComb(((alpha[:i], alpha[i:]), 1) for i in range(len(alpha) + 1))


def coproduct(u: LinComb) -> LinComb:
    """Deconcatenation coproduct; values are combinations of (left, right) pairs."""
    _require(u, "M")
    return u.apply_linear(coproduct_basis, basis="M")


def counit(u: LinComb) -> int:
    _require(u, "M")
    return u.coeff(())


# -- antipode -----------------------------------------------------------------

@lru_cache(maxsize=None)
def antipode_basis(alpha: Composition, monoid: Monoid = NTILDE) -> LinComb:
    """(-1)^len(alpha) * sum over J |= len(alpha) of M_{J o reverse(alpha)}.

    Distinct J with equal images are counted with multiplicity.
    """
    alpha = tuple(alpha)
    rev = alpha[::-1]
    sign = -1 if len(alpha) % 2 else 1
    acc: dict = {}
    for J in integer_compositions(len(alpha)):
        key = coarsen(J, rev, monoid.add)
        acc[key] = acc.get(key, 0) + sign
    return LinComb(acc, "M")


def antipode(u: LinComb, monoid: Monoid = NTILDE) -> LinComb:
    _require(u, "M")
    return u.apply_linear(lambda a: antipode_basis(a, monoid), basis="M")


def _coarsening_of(target: tuple, source: tuple):
    """The unique L with target = L o source for N-compositions, else None."""
    L, i = [], 0
    for t in target:
        acc, start = 0, i
        while acc < t and i < len(source):
            acc += source[i]
            i += 1
        if acc != t:
            return None
        L.append(i - start)
    if i != len(source):
        return None
    return tuple(L)


def antipode_coefficient(alpha: Composition, beta: Composition) -> int:
    """Closed-form coefficient of M_beta in S(M_alpha) over N~.

    Counts the ways of inserting '+' or ',' between the e's around each part
    of beta, after the positive parts of reverse(alpha) are grouped by the
    unique coarsening L.  Independent of ``antipode_basis``.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    sign = -1 if len(alpha) % 2 else 1
    runs_a, pos_a = eps_entry_decomposition(alpha)
    runs_b, pos_b = eps_entry_decomposition(beta)
    k, p = len(pos_a), len(pos_b)
    if k == 0 or p == 0:
        if k != p:
            return 0
        # alpha = e^i, beta = e^j: j groups out of i e's in a row.
        i, j = runs_a[0], runs_b[0]
        if i == 0 or j == 0:
            return sign * int(i == j)
        return sign * binom(i - 1, j - 1)
    L = _coarsening_of(pos_b, pos_a[::-1])
    if L is None:
        return 0
    # b_t = l_p + ... + l_t + 1 indexes the e-run of alpha that lands before part t.
    b = [sum(L[t:]) + 1 for t in range(p)] + [1]
    coeff = binom(runs_a[b[0] - 1], runs_b[0])
    for t in range(1, p):
        coeff *= binom(runs_a[b[t] - 1] + 1, runs_b[t] + 1)
    coeff *= binom(runs_a[b[p] - 1], runs_b[p])
    return sign * coeff


# -- fundamental basis --------------------------------------------------------

def c_coefficient(alpha: Composition, beta: Composition) -> int:
    """c_{alpha, beta} with F_alpha = sum over beta <= alpha of c_{alpha,beta} M_beta."""
    aligned = _align(tuple(beta), tuple(alpha))
    if aligned is None or not precedes_wc(tuple(beta), tuple(alpha)):
        return 0
    runs_b, _, runs_a, _ = aligned
    c = 1
    for i, j in zip(runs_a[:-1], runs_b[:-1]):
        c *= binom(i, j)
    return c * binom(runs_a[-1] - 1, runs_b[-1] - 1)


def lower_set(alpha: Composition):
    """Yield (beta, c_{alpha,beta}) for every beta <= alpha, generated directly."""
    runs, blocks = eps_block_decomposition(tuple(alpha))
    lead = [range(i + 1) for i in runs[:-1]]
    last = runs[-1]
    trail = range(1, last + 1) if last else range(0, 1)
    block_choices = [refinements(blk) for blk in blocks]
    for js in cartesian(*lead):
        base = 1
        for i, j in zip(runs[:-1], js):
            base *= binom(i, j)
        for jt in trail:
            c = base * binom(last - 1, jt - 1)
            for refined in cartesian(*block_choices):
                yield assemble((*js, jt), refined), c


def f_to_m(u: LinComb) -> LinComb:
    _require(u, "F")
    acc: dict = {}
    for alpha, ca in u.items():
        for beta, c in lower_set(alpha):
            acc[beta] = acc.get(beta, 0) + ca * c
    return LinComb(acc, "M")


def m_to_f(u: LinComb) -> LinComb:
    _require(u, "M")
    acc: dict = {}
    for alpha, ca in u.items():
        for beta, c in lower_set(alpha):
            s = -1 if (len(beta) - len(alpha)) % 2 else 1
            acc[beta] = acc.get(beta, 0) + ca * s * c
    return LinComb(acc, "F")


# -- tensor helpers -----------------------------------------------------------

def tensor_product(x: LinComb, y: LinComb, monoid: Monoid = NTILDE) -> LinComb:
    """Componentwise product on combinations of pairs: (a (x) b)(c (x) d) = ac (x) bd."""
    acc: dict = {}
    for (a, b), cx in x.items():
        for (c, d), cy in y.items():
            left = product_basis(a, c, monoid)
            right = product_basis(b, d, monoid)
            for l, cl in left.items():
                for r, cr in right.items():
                    acc[(l, r)] = acc.get((l, r), 0) + cx * cy * cl * cr
    return LinComb(acc, "M")


def convolution_left(u: LinComb, monoid: Monoid = NTILDE) -> LinComb:
    """m (S (x) id) Delta applied to u."""
    acc = LinComb({}, "M")
    for (a, b), c in coproduct(u).items():
        acc = acc + product(antipode_basis(a, monoid), M(b), monoid).scale(c)
    return acc


def convolution_right(u: LinComb, monoid: Monoid = NTILDE) -> LinComb:
    """m (id (x) S) Delta applied to u."""
    acc = LinComb({}, "M")
    for (a, b), c in coproduct(u).items():
        acc = acc + product(M(a), antipode_basis(b, monoid), monoid).scale(c)
    return acc


def bialgebra_defect(alpha: Composition, beta: Composition) -> LinComb:
    """Delta(M_a M_b) - Delta(M_a) Delta(M_b); zero exactly when compatibility holds."""
    alpha, beta = tuple(alpha), tuple(beta)
    d: dict = {}
    for g, c in qshuffle_ntilde(alpha, beta).items():
        for i in range(len(g) + 1):
            k = (g[:i], g[i:])
            d[k] = d.get(k, 0) + c
    for i in range(len(alpha) + 1):
        for j in range(len(beta) + 1):
            right = qshuffle_ntilde(alpha[i:], beta[j:]).items()
            for l, cl in qshuffle_ntilde(alpha[:i], beta[:j]).items():
                for r, cr in right:
                    k = (l, r)
                    d[k] = d.get(k, 0) - cl * cr
    return LinComb(d, "M")
