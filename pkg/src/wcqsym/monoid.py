"""Exponent monoids.

Two instances ship: the naturals and N~ = N u {e}, where e is absorbed by
every positive integer and e + e = e.  Elements of N~ are plain Python ints
together with the singleton ``EPS``; this keeps compositions as ordinary
tuples and lets the naturals embed without conversion.
"""
from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from typing import Any, Callable, Iterable


class _Epsilon:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "e"

    def __reduce__(self):
        return (_Epsilon, ())

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


EPS = _Epsilon()


def is_ntilde(a) -> bool:
    if a is EPS:
        return True
    return isinstance(a, int) and not isinstance(a, bool) and a >= 0


def nt_add(a, b):
    """Addition in N~: 0 is the identity, e + e = e and e + n = n for n >= 1."""
    if a is EPS:
        if b is EPS or b == 0:
            return EPS
        return b
    if b is EPS:
        return EPS if a == 0 else a
    return a + b


def entry_key(a) -> int:
    """Sort rank realising 0 < e < 1 < 2 < ..."""
    if a is EPS:
        return 1
    return 0 if a == 0 else a + 1


def theta(a) -> int:
    """The bijection N~ minus {0} -> N sending e to 0."""
    if a is EPS:
        return 0
    if not is_ntilde(a) or a == 0:
        raise ValueError(f"theta is undefined at {a!r}")
    return a


def theta_inv(n: int):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"theta_inv expects a nonnegative integer, got {n!r}")
    return EPS if n == 0 else n


def parse_entry(text: str):
    """Parse ``0``, ``e`` or a decimal positive integer."""
    text = text.strip()
    if text == "e":
        return EPS
    if text.isdigit() and text.isascii():
        if len(text) > 1 and text[0] == "0":
            raise ValueError(f"leading zero in {text!r}")
        return int(text)
    raise ValueError(f"not an N~ element: {text!r}")


def format_entry(a) -> str:
    return "e" if a is EPS else str(a)


@dataclass(frozen=True)
class Monoid:
    """A commutative monoid with zero, used as the exponent set of compositions.

    Only ``zero``, ``add`` and ``key`` are needed; ``key`` is a sort key used for
    canonical term ordering and never for algebra.
    """

    name: str
    zero: Any
    add: Callable[[Any, Any], Any]
    key: Callable[[Any], Any]

    def is_zero(self, a) -> bool:
        return a is self.zero or (a == self.zero and type(a) is type(self.zero))

    def compare(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sum(self, items: Iterable):
        total = self.zero
        for a in items:
            total = self.add(total, a)
        return total

    def validate(self, sample: Iterable) -> None:
        """Check the monoid axioms on a finite sample.

        Raises ValueError on the first violation.  Zero divisors are rejected:
        the nonzero elements must form a subsemigroup.
        """
        elems = list(sample)
        for a in elems:
            if self.add(self.zero, a) != a or self.add(a, self.zero) != a:
                raise ValueError(f"{self.name}: zero is not an identity at {a!r}")
        for a, b in itertools.product(elems, repeat=2):
            if self.add(a, b) != self.add(b, a):
                raise ValueError(f"{self.name}: not commutative at {a!r}, {b!r}")
            if not self.is_zero(a) and not self.is_zero(b) and self.is_zero(self.add(a, b)):
                raise ValueError(f"{self.name}: zero divisors {a!r} + {b!r} = 0")
        for a, b, c in itertools.product(elems, repeat=3):
            if self.add(a, self.add(b, c)) != self.add(self.add(a, b), c):
                raise ValueError(f"{self.name}: not associative at {a!r}, {b!r}, {c!r}")


NATURALS = Monoid("N", 0, operator.add, lambda a: a)
NTILDE = Monoid("N~", 0, nt_add, entry_key)


def ntilde_elements(max_entry: int) -> list:
    """0, e, 1, ..., max_entry in canonical order."""
    return [0, EPS, *range(1, max_entry + 1)]
