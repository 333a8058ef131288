"""Compositions over N~ and the combinatorics around them.

A composition is a plain tuple of nonzero N~ entries (``EPS`` or positive
ints); the empty tuple is the empty composition.  Weak compositions are
tuples of nonnegative ints and correspond entrywise under theta.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .monoid import EPS, NTILDE, Monoid, entry_key, format_entry, nt_add, theta, theta_inv

Composition = tuple


class CompositionSyntaxError(ValueError):
    """Malformed composition literal; ``pos`` is the 0-based offending column."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}\n    {text}\n    {' ' * pos}^")


def make_composition(entries: Sequence) -> Composition:
    comp = tuple(entries)
    for a in comp:
        if a is EPS:
            continue
        if isinstance(a, bool) or not isinstance(a, int) or a <= 0:
            raise ValueError(f"composition entries must be e or positive integers, got {a!r}")
    return comp


# -- statistics ---------------------------------------------------------------

def weight(alpha: Composition, monoid: Monoid = NTILDE):
    return monoid.sum(alpha)


def eps_count(alpha: Composition) -> int:
    return sum(1 for a in alpha if a is EPS)


def reverse(alpha: Composition) -> Composition:
    return tuple(reversed(alpha))


def concat(alpha: Composition, beta: Composition) -> Composition:
    return tuple(alpha) + tuple(beta)


def bar(alpha: Composition) -> Composition:
    """Drop every e entry."""
    return tuple(a for a in alpha if a is not EPS)


def is_classical(alpha: Composition) -> bool:
    return all(a is not EPS for a in alpha)


def theta_seq(alpha: Composition) -> tuple:
    return tuple(theta(a) for a in alpha)


def theta_seq_inv(w: Sequence[int]) -> Composition:
    return tuple(theta_inv(n) for n in w)


# -- classical compositions and refinement ------------------------------------

def descent_set(alpha: Composition) -> frozenset:
    if not is_classical(alpha):
        raise ValueError(f"descent sets need an N-composition, got {format_composition(alpha)}")
    partial = list(itertools.accumulate(alpha))
    return frozenset(partial[:-1])


def refines(alpha: Composition, beta: Composition) -> bool:
    """alpha refines beta (both N-compositions): set(beta) is inside set(alpha)."""
    if sum(alpha) != sum(beta):
        return False
    return descent_set(beta) <= descent_set(alpha)


@lru_cache(maxsize=None)
def integer_compositions(n: int) -> tuple:
    """All compositions of n, ordered by length and then lexicographically."""
    if n == 0:
        return ((),)
    out = []
    for cuts in range(n):
        for pos in itertools.combinations(range(1, n), cuts):
            bounds = (0, *pos, n)
            out.append(tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1)))
    out.sort(key=lambda c: (len(c), c))
    return tuple(out)


@lru_cache(maxsize=None)
def refinements(alpha: Composition) -> tuple:
    """All N-compositions refining alpha."""
    return tuple(
        tuple(itertools.chain.from_iterable(parts))
        for parts in itertools.product(*(integer_compositions(s) for s in alpha))
    )


def coarsen(J: Sequence[int], alpha: Composition, add=nt_add) -> Composition:
    """Sum consecutive blocks of alpha with block sizes J."""
    if sum(J) != len(alpha) or any(j <= 0 for j in J):
        raise ValueError(f"{tuple(J)} is not a composition of len(alpha) = {len(alpha)}")
    out = []
    i = 0
    for j in J:
        acc = alpha[i]
        for a in alpha[i + 1:i + j]:
            acc = add(acc, a)
        out.append(acc)
        i += j
    return tuple(out)


# -- e-decompositions ---------------------------------------------------------

class EpsEntryDecomposition(NamedTuple):
    runs: tuple        # (i_1, ..., i_{k+1})
    positives: tuple   # (s_1, ..., s_k)


class EpsBlockDecomposition(NamedTuple):
    runs: tuple        # (i_1, ..., i_{k+1}); interior runs are >= 1
    blocks: tuple      # (alpha_1, ..., alpha_k), nonempty N-compositions


def eps_entry_decomposition(alpha: Composition) -> EpsEntryDecomposition:
    runs, positives = [], []
    run = 0
    for a in alpha:
        if a is EPS:
            run += 1
        else:
            runs.append(run)
            positives.append(a)
            run = 0
    runs.append(run)
    return EpsEntryDecomposition(tuple(runs), tuple(positives))


def eps_block_decomposition(alpha: Composition) -> EpsBlockDecomposition:
    runs, blocks = [], []
    run, block = 0, []
    for a in alpha:
        if a is EPS:
            if block:
                blocks.append(tuple(block))
                block = []
            run += 1
        else:
            if not block:
                runs.append(run)
                run = 0
            block.append(a)
    if block:
        blocks.append(tuple(block))
    runs.append(run)
    return EpsBlockDecomposition(tuple(runs), tuple(blocks))


def assemble(runs: Sequence[int], blocks: Sequence[Composition]) -> Composition:
    out: list = []
    for i, blk in zip(runs, blocks):
        out.extend([EPS] * i)
        out.extend(blk)
    out.extend([EPS] * runs[-1])
    return tuple(out)


def set_alpha_wc(alpha: Composition) -> frozenset:
    """Strict positions a_j = i_1 + s_1 + ... + i_j + s_j of the fundamental expansion.

    Each e occupies one slot and each positive entry s occupies s slots.
    """
    runs, positives = eps_entry_decomposition(alpha)
    out, acc = [], 0
    for i, s in zip(runs, positives):
        acc += i + s
        out.append(acc)
    return frozenset(out)


def _align(smaller: Composition, larger: Composition):
    """Match ``smaller`` against the maximal decomposition of ``larger``.

    Returns (runs_small, blocks_small, runs_large, blocks_large) when the
    positive entries of ``smaller`` split into consecutive e-free groups with
    the block weights of ``larger``; otherwise None.  No order test is done.
    """
    runs_l, blocks_l = eps_block_decomposition(larger)
    runs_s, groups = [], []
    pos, n = 0, len(smaller)
    for blk in blocks_l:
        run = 0
        while pos < n and smaller[pos] is EPS:
            run += 1
            pos += 1
        target, acc, group = sum(blk), 0, []
        while acc < target:
            if pos >= n or smaller[pos] is EPS:
                return None
            acc += smaller[pos]
            group.append(smaller[pos])
            pos += 1
        if acc != target:
            return None
        runs_s.append(run)
        groups.append(tuple(group))
    tail = n - pos
    if any(a is not EPS for a in smaller[pos:]):
        return None
    runs_s.append(tail)
    return tuple(runs_s), tuple(groups), runs_l, blocks_l


def precedes_wc(alpha: Composition, beta: Composition) -> bool:
    """The extended refinement order alpha <= beta on N~-compositions."""
    aligned = _align(alpha, beta)
    if aligned is None:
        return False
    runs_a, blocks_a, runs_b, blocks_b = aligned
    if any(i > j for i, j in zip(runs_a, runs_b)):
        return False
    if (runs_a[-1] == 0) != (runs_b[-1] == 0):
        return False
    return all(refines(a, b) for a, b in zip(blocks_a, blocks_b))


# -- enumeration and ordering -------------------------------------------------

def sort_key(obj):
    """Canonical order: length first, then lexicographic with 0 < e < 1 < 2 < ...

    Works recursively on nested tuples (pairs of compositions, pure tensors).
    """
    if isinstance(obj, tuple):
        return (len(obj), tuple(sort_key(x) for x in obj))
    return entry_key(obj)


def enumerate_compositions(max_len: int, max_entry: int) -> list:
    alphabet = [EPS, *range(1, max_entry + 1)]
    out = []
    for n in range(max_len + 1):
        out.extend(itertools.product(alphabet, repeat=n))
    return out


def iter_classical(max_len: int, max_entry: int) -> Iterator[Composition]:
    for n in range(max_len + 1):
        yield from itertools.product(range(1, max_entry + 1), repeat=n)


# -- literals -----------------------------------------------------------------

def parse_composition(text: str) -> Composition:
    """Parse ``()``, ``(e,2,e)`` or ``(e^3,1)`` into a composition."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s.startswith("("):
        raise CompositionSyntaxError("expected '('", text, offset)
    if not s.endswith(")"):
        raise CompositionSyntaxError("expected ')'", text, offset + len(s))
    body = s[1:-1]
    if body == "":
        return ()
    out: list = []
    start = offset + 1
    for tok in body.split(","):
        pos = start
        start += len(tok) + 1
        if tok.startswith("e^"):
            rep = tok[2:]
            if not rep.isdigit() or not rep.isascii() or int(rep) == 0 or rep[0] == "0":
                raise CompositionSyntaxError("bad run length", text, pos + 2)
            out.extend([EPS] * int(rep))
        elif tok == "e":
            out.append(EPS)
        elif tok.isdigit() and tok.isascii() and tok[0] != "0":
            out.append(int(tok))
        else:
            raise CompositionSyntaxError(f"bad entry {tok!r}", text, pos)
    return tuple(out)


def format_composition(alpha: Composition) -> str:
    return "(" + ",".join(format_entry(a) for a in alpha) + ")"


def parse_weak(text: str) -> tuple:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise CompositionSyntaxError("expected '[...]'", text, 0)
    body = s[1:-1]
    if body == "":
        return ()
    out = []
    start = 1
    for tok in body.split(","):
        if not tok.isdigit() or not tok.isascii() or (len(tok) > 1 and tok[0] == "0"):
            raise CompositionSyntaxError(f"bad entry {tok!r}", text, start)
        out.append(int(tok))
        start += len(tok) + 1
    return tuple(out)


def format_weak(w: Sequence[int]) -> str:
    return "[" + ",".join(str(n) for n in w) + "]"
