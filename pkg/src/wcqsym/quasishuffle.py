"""The weight-lambda quasi-shuffle (mixable shuffle) product on words."""
from __future__ import annotations

from functools import lru_cache

from .lincomb import LinComb
from .monoid import NTILDE, Monoid


def qshuffle_terms(alpha: tuple, beta: tuple, lam: int = 1, monoid: Monoid = NTILDE) -> dict:
    """Raw term dict of alpha * beta.

    Uses the recursion
        (a, u) * (b, v) = (a, u * (b, v)) + (b, (a, u) * v) + lam (a + b, u * v)
    with the empty word as unit, memoized on suffix positions.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    m, n = len(alpha), len(beta)
    add = monoid.add
    memo: dict = {}

    def rec(i: int, j: int) -> dict:
        if i == m:
            return {beta[j:]: 1}
        if j == n:
            return {alpha[i:]: 1}
        hit = memo.get((i, j))
        if hit is not None:
            return hit
        out: dict = {}
        a, b = alpha[i], beta[j]
        for w, c in rec(i + 1, j).items():
            key = (a,) + w
            out[key] = out.get(key, 0) + c
        for w, c in rec(i, j + 1).items():
            key = (b,) + w
            out[key] = out.get(key, 0) + c
        if lam:
            ab = add(a, b)
            for w, c in rec(i + 1, j + 1).items():
                key = (ab,) + w
                out[key] = out.get(key, 0) + lam * c
        memo[(i, j)] = out
        return out

    return rec(0, 0)


def qshuffle(alpha: tuple, beta: tuple, lam: int = 1, monoid: Monoid = NTILDE,
             basis: str | None = None) -> LinComb:
    return LinComb(qshuffle_terms(alpha, beta, lam, monoid), basis)


@lru_cache(maxsize=200_000)
def qshuffle_ntilde(alpha: tuple, beta: tuple) -> LinComb:
    """Cached alpha * beta over N~ at weight 1; the WCQSym structure constants."""
    return qshuffle(alpha, beta, 1, NTILDE, "M")
