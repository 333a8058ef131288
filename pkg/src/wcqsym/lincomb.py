"""Finite formal linear combinations with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Hashable, Iterable, Iterator, Mapping

from .compositions import sort_key


class LinComb(Mapping):
    """Immutable finitely supported map key -> nonzero coefficient.

    ``basis`` is a free-form tag ("M", "F", "T", ...).  Arithmetic between
    combinations with different tags is refused so that M- and F-expansions
    cannot be mixed by accident.
    """

    __slots__ = ("_terms", "basis")

    def __init__(self, terms: Mapping | Iterable | None = None, basis: str | None = None):
        clean: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                if c:
                    clean[k] = clean.get(k, 0) + c
                    if not clean[k]:
                        del clean[k]
        self._terms = clean
        self.basis = basis

    @classmethod
    def basis_element(cls, key: Hashable, basis: str | None = None, coeff=1) -> "LinComb":
        return cls({key: coeff}, basis)

    @classmethod
    def _wrap(cls, terms: dict, basis):
        out = cls.__new__(cls)
        out._terms = terms
        out.basis = basis
        return out

    # Mapping protocol
    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, key):
        return self._terms.get(key, 0)

    def sorted_items(self, key: Callable = sort_key) -> list:
        return sorted(self._terms.items(), key=lambda kv: key(kv[0]))

    def _basis_with(self, other: "LinComb"):
        if self.basis is None:
            return other.basis
        if other.basis is not None and other.basis != self.basis:
            raise ValueError(f"cannot combine {self.basis}-basis with {other.basis}-basis values")
        return self.basis

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        basis = self._basis_with(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LinComb._wrap(out, basis)

    def __neg__(self) -> "LinComb":
        return LinComb._wrap({k: -c for k, c in self._terms.items()}, self.basis)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def scale(self, c) -> "LinComb":
        if not c:
            return LinComb._wrap({}, self.basis)
        return LinComb._wrap({k: c * v for k, v in self._terms.items()}, self.basis)

    def __mul__(self, c):
        if isinstance(c, LinComb):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == LinComb(other)._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def map_keys(self, f: Callable, basis: str | None = None) -> "LinComb":
        """Apply f to every key, merging collisions."""
        out: dict = {}
        for k, c in self._terms.items():
            nk = f(k)
            out[nk] = out.get(nk, 0) + c
        return LinComb(out, basis if basis is not None else self.basis)

    def apply_linear(self, f: Callable[..., "LinComb"], basis: str | None = None) -> "LinComb":
        """Extend f: key -> LinComb linearly."""
        acc: dict = {}
        for k, c in self._terms.items():
            for k2, c2 in f(k).items():
                acc[k2] = acc.get(k2, 0) + c * c2
        return LinComb(acc, basis if basis is not None else self.basis)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = [f"{c}*{k!r}" for k, c in self.sorted_items()]
        return " + ".join(parts)


def bilinear_extend(f: Callable, basis: str | None = None) -> Callable:
    """Turn f(key, key) -> LinComb into a bilinear map on LinComb values."""

    def extended(u: LinComb, v: LinComb) -> LinComb:
        acc: dict = {}
        for a, ca in u.items():
            for b, cb in v.items():
                for k, c in f(a, b).items():
                    acc[k] = acc.get(k, 0) + ca * cb * c
        return LinComb(acc, basis if basis is not None else u.basis or v.basis)

    return extended


def tensor(u: LinComb, v: LinComb, basis: str | None = None) -> LinComb:
    """u (x) v as a combination of key pairs."""
    acc: dict = {}
    for a, ca in u.items():
        for b, cb in v.items():
            acc[(a, b)] = acc.get((a, b), 0) + ca * cb
    return LinComb(acc, basis if basis is not None else u.basis)


def _integer_rows(matrix) -> list[list[int]]:
    rows = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in row])
    return rows


def exact_rank(matrix) -> int:
    """Rank by fraction-free (Bareiss) elimination over the integers."""
    rows = _integer_rows(matrix)
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix is not rectangular")
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            rows[r] = [(p * rows[r][c] - f * rows[rank][c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def exact_kernel_dim(matrix, ncols: int | None = None) -> int:
    """Dimension of the null space of the linear map x -> matrix @ x."""
    rows = list(matrix)
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    return ncols - exact_rank(rows)
