"""The free commutative unitary Rota-Baxter algebra of weight 1 on one generator x.

A basis element x^a0 (x) x^w1 (x) ... (x) x^wk is a ``PureTensor`` with a
polynomial head ``a0`` and a weak-composition tail ``(w1, ..., wk)``.  The
head multiplies like a polynomial; tails combine by the mixable shuffle,
computed by transporting the N~ quasi-shuffle along theta.
"""
from __future__ import annotations

import itertools
import random
from math import comb
from typing import NamedTuple

from . import hopf
from .compositions import coarsen, integer_compositions, theta_seq, theta_seq_inv
from .lincomb import LinComb
from .monoid import NATURALS, theta
from .quasishuffle import qshuffle_terms


class PureTensor(NamedTuple):
    head: int = 0
    tail: tuple = ()

    @property
    def length(self) -> int:
        return len(self.tail)


UNIT = PureTensor(0, ())


class TensorSyntaxError(ValueError):
    pass


def sha(*terms) -> LinComb:
    """Build an element from (coeff, head, tail) triples or PureTensors."""
    acc = []
    for t in terms:
        if isinstance(t, PureTensor):
            acc.append((t, 1))
        else:
            c, h, tail = t
            acc.append((PureTensor(h, tuple(tail)), c))
    return LinComb(acc, "T")


def basis(t: PureTensor, coeff: int = 1) -> LinComb:
    return LinComb.basis_element(t, "T", coeff)


# -- products -----------------------------------------------------------------

def mixable_shuffle_transport(a: tuple, b: tuple, lam: int = 1) -> dict:
    """Mixable shuffle of weak compositions via the N~ quasi-shuffle and theta."""
    terms = qshuffle_terms(theta_seq_inv(a), theta_seq_inv(b), lam)
    out: dict = {}
    for w, c in terms.items():
        key = theta_seq(w)
        out[key] = out.get(key, 0) + c
    return out


def mixable_shuffle(a: tuple, b: tuple, lam: int = 1, add=NATURALS.add) -> dict:
    """Mixable shuffle by direct enumeration.

    Each term is a pair of order-preserving placements of a and b into r
    slots that jointly cover every slot; a slot hit by both merges the two
    letters and costs one factor of lam.  No recursion is shared with
    ``qshuffle_terms``.
    """
    m, n = len(a), len(b)
    out: dict = {}
    for r in range(max(m, n), m + n + 1):
        overlap = m + n - r
        if overlap and not lam:
            continue
        weight = lam ** overlap
        for pa in itertools.combinations(range(r), m):
            rest = [s for s in range(r) if s not in pa]
            # b must cover every slot a misses, plus `overlap` slots shared with a
            for shared in itertools.combinations(pa, overlap):
                pb = sorted(rest + list(shared))
                word: list = [None] * r
                for s, x in zip(pa, a):
                    word[s] = x
                for s, y in zip(pb, b):
                    word[s] = y if word[s] is None else add(word[s], y)
                key = tuple(word)
                out[key] = out.get(key, 0) + weight
    return {k: c for k, c in out.items() if c}


def diamond_basis(s: PureTensor, t: PureTensor, lam: int = 1) -> LinComb:
    head = s.head + t.head
    if not s.tail or not t.tail:
        return basis(PureTensor(head, s.tail or t.tail))
    return LinComb(
        ((PureTensor(head, w), c) for w, c in mixable_shuffle_transport(s.tail, t.tail, lam).items()),
        "T",
    )


def diamond(u: LinComb, v: LinComb, lam: int = 1) -> LinComb:
    """The augmented mixable shuffle product."""
    acc: dict = {}
    for s, cs in u.items():
        for t, ct in v.items():
            for w, c in diamond_basis(s, t, lam).items():
                acc[w] = acc.get(w, 0) + cs * ct * c
    return LinComb(acc, "T")


def rb_operator(u: LinComb) -> LinComb:
    """P(a0 (x) tail) = 1 (x) a0 (x) tail."""
    return u.map_keys(lambda t: PureTensor(0, (t.head,) + t.tail), basis="T")


def rb_identity_sides(u: LinComb, v: LinComb, lam: int = 1) -> tuple[LinComb, LinComb]:
    P = rb_operator
    lhs = diamond(P(u), P(v), lam)
    rhs = (P(diamond(u, P(v), lam)) + P(diamond(P(u), v, lam))
           + P(diamond(u, v, lam)).scale(lam))
    return lhs, rhs


def rb_identity_check(u: LinComb, v: LinComb, lam: int = 1) -> bool:
    """P(u)P(v) == P(u P(v)) + P(P(u) v) + lam P(u v), exactly."""
    lhs, rhs = rb_identity_sides(u, v, lam)
    return lhs == rhs


def random_tensor(rng: random.Random, max_head: int, max_len: int, max_entry: int) -> PureTensor:
    k = rng.randint(0, max_len)
    return PureTensor(rng.randint(0, max_head), tuple(rng.randint(0, max_entry) for _ in range(k)))


def random_element(rng: random.Random, max_head: int, max_len: int, max_entry: int,
                   max_terms: int = 2) -> LinComb:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        terms.append((random_tensor(rng, max_head, max_len, max_entry), rng.choice([-2, -1, 1, 2, 3])))
    return LinComb(terms, "T")


def rb_check(trials: int = 200, seed: int = 0, max_head: int = 3, max_len: int = 2,
             max_entry: int = 3, lam: int = 1) -> tuple[int, list]:
    """Seeded random trials of the Rota-Baxter identity; returns (passed, failures)."""
    rng = random.Random(seed)
    passed, failures = 0, []
    for _ in range(trials):
        u = random_element(rng, max_head, max_len, max_entry)
        v = random_element(rng, max_head, max_len, max_entry)
        if rb_identity_check(u, v, lam):
            passed += 1
        else:
            failures.append((u, v))
    return passed, failures


# -- links with WCQSym --------------------------------------------------------

def rho(alpha: tuple) -> tuple:
    """Composition -> tail x^(theta alpha)."""
    return theta_seq(alpha)


def psi(u: LinComb) -> LinComb:
    """WCQSym -> 1 (x) Sha^+(x), M_alpha -> 1 (x) x^(theta alpha)."""
    if u.basis not in (None, "M"):
        raise ValueError("psi expects an M-basis element")
    return u.map_keys(lambda a: PureTensor(0, theta_seq(a)), basis="T")


def psi_inverse(u: LinComb) -> LinComb:
    """Inverse of psi on head-0 tensors."""
    def back(t: PureTensor):
        if t.head:
            raise ValueError(f"{t} is not in the image of psi")
        return theta_seq_inv(t.tail)
    return u.map_keys(back, basis="M")


def bar_realize(a0, alpha: tuple) -> PureTensor:
    """The basis element x_0^a0 M_alpha of the barred algebra as a pure tensor."""
    return PureTensor(theta(a0), theta_seq(alpha))


# -- Hopf structure -----------------------------------------------------------

def pair_basis(s: PureTensor, t: PureTensor, coeff: int = 1) -> LinComb:
    return LinComb.basis_element((s, t), "T", coeff)


def sha_coproduct_basis(t: PureTensor) -> LinComb:
    a, w = t.head, t.tail
    terms = []
    for i in range(len(w) + 1):
        for p in range(a + 1):
            terms.append(((PureTensor(p, w[:i]), PureTensor(a - p, w[i:])), comb(a, p)))
    return LinComb(terms, "T")


def sha_coproduct(u: LinComb) -> LinComb:
    return u.apply_linear(sha_coproduct_basis, basis="T")


def sha_counit(u: LinComb) -> int:
    return u.coeff(UNIT)


def sha_antipode_basis(t: PureTensor) -> LinComb:
    """(-1)^(a+k) x^a (x) sum over J |= k of x^(J o reversed tail)."""
    a, w = t.head, t.tail
    sign = -1 if (a + len(w)) % 2 else 1
    rev = w[::-1]
    acc: dict = {}
    for J in integer_compositions(len(w)):
        key = PureTensor(a, coarsen(J, rev, NATURALS.add))
        acc[key] = acc.get(key, 0) + sign
    return LinComb(acc, "T")


def sha_antipode(u: LinComb) -> LinComb:
    return u.apply_linear(sha_antipode_basis, basis="T")


def sha_antipode_from_factors(t: PureTensor) -> LinComb:
    """S(x^a) (x) S(tail) in k[x] (x) Sha^+(x), with the tail antipode taken in WCQSym."""
    sign = -1 if t.head % 2 else 1
    tail_image = psi(hopf.antipode(hopf.M(theta_seq_inv(t.tail))))
    return tail_image.map_keys(lambda s: PureTensor(t.head, s.tail)).scale(sign)


def sha_convolution_left(u: LinComb) -> LinComb:
    """m (S (x) id) Delta."""
    acc = LinComb({}, "T")
    for (s, t), c in sha_coproduct(u).items():
        acc = acc + diamond(sha_antipode_basis(s), basis(t)).scale(c)
    return acc


def sha_convolution_right(u: LinComb) -> LinComb:
    acc = LinComb({}, "T")
    for (s, t), c in sha_coproduct(u).items():
        acc = acc + diamond(basis(s), sha_antipode_basis(t)).scale(c)
    return acc


def psi_pairs(x: LinComb) -> LinComb:
    """(psi (x) psi) on combinations of composition pairs."""
    return x.map_keys(lambda ab: (PureTensor(0, theta_seq(ab[0])), PureTensor(0, theta_seq(ab[1]))),
                      basis="T")


# -- literals -----------------------------------------------------------------

def _nonneg(tok: str, text: str) -> int:
    if not tok.isdigit() or not tok.isascii() or (len(tok) > 1 and tok[0] == "0"):
        raise TensorSyntaxError(f"bad exponent {tok!r} in {text!r}")
    return int(tok)


def parse_tensor(text: str) -> PureTensor:
    """Parse ``1``, ``x``, ``x^2`` or ``x^2|0|3`` (x^2 (x) 1 (x) x^3)."""
    s = text.strip()
    if s == "1":
        return UNIT
    parts = s.split("|")
    head_tok = parts[0]
    if head_tok == "1":
        head = 0
    elif head_tok == "x":
        head = 1
    elif head_tok.startswith("x^"):
        head = _nonneg(head_tok[2:], text)
    else:
        raise TensorSyntaxError(f"bad head {head_tok!r} in {text!r}")
    return PureTensor(head, tuple(_nonneg(tok, text) for tok in parts[1:]))


def format_tensor(t: PureTensor) -> str:
    if t == UNIT:
        return "1"
    return "|".join([f"x^{t.head}", *(str(w) for w in t.tail)])


def tensor_sort_key(t):
    if isinstance(t, PureTensor):
        return (len(t.tail), t.head, t.tail)
    return tuple(tensor_sort_key(x) for x in t)
