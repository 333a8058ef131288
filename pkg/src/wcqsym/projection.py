"""The projection phi: WCQSym -> QSym and its kernel."""
from __future__ import annotations

from dataclasses import dataclass

from .compositions import bar, enumerate_compositions, eps_count, is_classical, sort_key
from .lincomb import LinComb, exact_rank
from .monoid import EPS


def phi_basis(alpha: tuple) -> LinComb:
    if alpha and alpha[0] is EPS:
        return LinComb({}, "M")
    sign = -1 if eps_count(alpha) % 2 else 1
    return LinComb.basis_element(bar(alpha), "M", sign)


def phi(u: LinComb) -> LinComb:
    """Kill compositions that start with e; otherwise drop the e's with sign (-1)^#e."""
    return u.apply_linear(phi_basis, basis="M")


def kernel_basis(max_len: int, max_entry: int) -> list[LinComb]:
    """Kernel elements indexed by compositions inside the bounds.

    M_alpha for alpha starting with e, and M_alpha + (-1)^(#e + 1) M_bar(alpha)
    for alpha starting with a positive entry but containing some e.
    """
    out = []
    for alpha in enumerate_compositions(max_len, max_entry):
        if not alpha:
            continue
        if alpha[0] is EPS:
            out.append(LinComb.basis_element(alpha, "M"))
        elif not is_classical(alpha):
            sign = 1 if eps_count(alpha) % 2 else -1
            out.append(LinComb({alpha: 1, bar(alpha): sign}, "M"))
    return out


@dataclass
class KernelReport:
    max_len: int
    max_entry: int
    span_dim: int
    rank: int
    kernel_dim: int
    basis_count: int
    all_annihilated: bool

    @property
    def passed(self) -> bool:
        return self.all_annihilated and self.kernel_dim == self.basis_count

    def as_dict(self) -> dict:
        return {
            "max_len": self.max_len,
            "max_entry": self.max_entry,
            "span_dim": self.span_dim,
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "basis_count": self.basis_count,
            "all_annihilated": self.all_annihilated,
            "passed": self.passed,
        }


def verify_kernel_truncation(max_len: int, max_entry: int) -> KernelReport:
    """Compare dim ker(phi) on the bounded span with the kernel-basis count there."""
    domain = enumerate_compositions(max_len, max_entry)
    images = [phi_basis(alpha) for alpha in domain]
    codomain = sorted({k for img in images for k in img}, key=sort_key)
    index = {k: i for i, k in enumerate(codomain)}
    # rows = codomain coordinates, columns = domain basis elements
    matrix = [[0] * len(domain) for _ in codomain]
    for col, img in enumerate(images):
        for k, c in img.items():
            matrix[index[k]][col] = c
    rank = exact_rank(matrix)
    basis = kernel_basis(max_len, max_entry)
    annihilated = all(not phi(v) for v in basis)
    return KernelReport(
        max_len=max_len,
        max_entry=max_entry,
        span_dim=len(domain),
        rank=rank,
        kernel_dim=len(domain) - rank,
        basis_count=len(basis),
        all_annihilated=annihilated,
    )
