"""Conductor exponents attached to subgroup filtrations.

For a filtration G_0 >= G_1 >= ... >= 1 and characters tau, sigma of G_0
the building blocks are, per level i,

    nonfixed_dim  = dim tau - dim tau^{G_i}
    tensor_excess = dim (tau x sigma)^{G_i} - dim tau^{G_i} * dim sigma^{G_i}

and the conductor exponent is the sum of nonfixed_dim / [G_0 : G_i] over
all levels.  Everything is an exact rational; denominators divide |G_0|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .chars import ClassFunction, fixed_dim, is_rational_charpoly, is_symplectic
from .errors import (NotPGroupError, NotRationalError, NotSymplecticError,
                     PreconditionError)
from .groups import Filtration


def nonfixed_dim(tau: ClassFunction, filt: Filtration, i: int) -> int:
    """Codimension of the G_i-fixed subspace in tau."""
    if not 0 <= i < len(filt):
        raise IndexError(f"filtration level {i} out of range")
    return tau.dim - fixed_dim(tau, filt[i])


def tensor_fixed_excess(tau: ClassFunction, sigma: ClassFunction,
                        filt: Filtration, i: int) -> int:
    """Growth of the fixed space under tensor product at level i."""
    if not 0 <= i < len(filt):
        raise IndexError(f"filtration level {i} out of range")
    H = filt[i]
    return fixed_dim(tau * sigma, H) - fixed_dim(tau, H) * fixed_dim(sigma, H)


@dataclass(frozen=True)
class ConductorReport:
    """Per-level terms and the exact total for one (or a pair of) characters."""

    level_terms: Tuple[int, ...]
    indices: Tuple[int, ...]
    total: Fraction
    excess_terms: Optional[Tuple[int, ...]] = None
    excess_total: Optional[Fraction] = None

    def __post_init__(self):
        assert all(a >= b for a, b in zip(self.level_terms, self.level_terms[1:])), \
            "conductor terms must be weakly decreasing"
        assert all(t >= 0 for t in self.level_terms)
        assert self.total == sum(Fraction(t, d) for t, d in
                                 zip(self.level_terms, self.indices))
        if self.excess_terms is not None:
            assert all(t >= 0 for t in self.excess_terms)

    def to_json(self) -> dict:
        doc = {"level_terms": list(self.level_terms),
               "indices": list(self.indices),
               "total": str(self.total)}
        if self.excess_terms is not None:
            doc["excess_terms"] = list(self.excess_terms)
            doc["excess_total"] = str(self.excess_total)
        return doc


def conductor(tau: ClassFunction, filt: Filtration,
              sigma: Optional[ClassFunction] = None) -> ConductorReport:
    """Exact conductor exponent of tau over the filtration.

    With a second character the tensor-excess terms and their weighted
    total are reported as well.
    """
    terms = tuple(nonfixed_dim(tau, filt, i) for i in range(len(filt)))
    total = sum((Fraction(t, d) for t, d in zip(terms, filt.indices)), Fraction(0))
    excess_terms = excess_total = None
    if sigma is not None:
        excess_terms = tuple(tensor_fixed_excess(tau, sigma, filt, i)
                             for i in range(len(filt)))
        excess_total = sum((Fraction(t, d) for t, d in zip(excess_terms, filt.indices)),
                           Fraction(0))
    return ConductorReport(terms, filt.indices, total, excess_terms, excess_total)


def conductor_exponent(tau: ClassFunction, filt: Filtration) -> Fraction:
    return conductor(tau, filt).total


def tensor_excess_total(tau: ClassFunction, sigma: ClassFunction,
                        filt: Filtration) -> Fraction:
    return conductor(tau, filt, sigma).excess_total


def tensor_level_identity(tau1: ClassFunction, tau2: ClassFunction,
                          filt: Filtration, i: int) -> Tuple[int, int]:
    """Both sides of the per-level tensor identity.

    lhs = |t1| a_i(t2) + |t2| a_i(t1) - a_i(t1 x t2)
    rhs = a_i(t1) a_i(t2) + excess_i(t1, t2)

    The two are equal; returning both lets the test suites compare them
    through entirely separate character averages.
    """
    a1 = nonfixed_dim(tau1, filt, i)
    a2 = nonfixed_dim(tau2, filt, i)
    a12 = nonfixed_dim(tau1 * tau2, filt, i)
    lhs = tau1.dim * a2 + tau2.dim * a1 - a12
    rhs = a1 * a2 + tensor_fixed_excess(tau1, tau2, filt, i)
    return lhs, rhs


def min_sum_bound(M: Fraction, a: Sequence[Fraction], b: Sequence[Fraction],
                  d: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
    """Both sides of the weighted min bound for gap sequences.

    For decreasing sequences with values in {0} or [M, inf) and positive
    weights d:  sum a_i b_i / d_i  >=  M * min(sum a_i/d_i, sum b_i/d_i).
    """
    M = Fraction(M)
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    d = [Fraction(x) for x in d]
    if not (len(a) == len(b) == len(d)):
        raise PreconditionError("sequences must share one length")
    if M <= 0:
        raise PreconditionError("threshold M must be positive")
    if any(x <= 0 for x in d):
        raise PreconditionError("weights must be positive")
    for seq in (a, b):
        if any(x > y for x, y in zip(seq[1:], seq)):
            raise PreconditionError("sequences must be weakly decreasing")
        if any(0 < x < M for x in seq):
            raise PreconditionError(f"sequence values must be 0 or >= {M}")
    lhs = sum((x * y / w for x, y, w in zip(a, b, d)), Fraction(0))
    rhs = M * min(sum((x / w for x, w in zip(a, d)), Fraction(0)),
                  sum((y / w for y, w in zip(b, d)), Fraction(0)))
    return lhs, rhs


def symplectic_tensor_bound(tau1: ClassFunction, tau2: ClassFunction,
                            filt: Filtration) -> Tuple[Fraction, Fraction]:
    """Conductor bound for a tensor product of two symplectic characters.

    lhs = a(t1 x t2), rhs = |t1| a(t2) + |t2| a(t1) - 2 min(a(t1), a(t2))
    - excess(t1, t2); the contract is lhs <= rhs.
    """
    for t in (tau1, tau2):
        if not is_symplectic(t):
            raise NotSymplecticError("both inputs must be symplectic characters")
    return _tensor_bound(tau1, tau2, filt, Fraction(2))


def pgroup_tensor_bound(tau1: ClassFunction, tau2: ClassFunction,
                        filt: Filtration, p: int) -> Tuple[Fraction, Fraction]:
    """Conductor bound when G_0 is a p-group and both characters have
    rational characteristic polynomials; the min coefficient becomes p-1."""
    if not filt.parent.is_pgroup(p):
        raise NotPGroupError(f"{filt.parent.name} is not a {p}-group")
    for t in (tau1, tau2):
        if not is_rational_charpoly(t):
            raise NotRationalError("both inputs must have rational characteristic polynomials")
    return _tensor_bound(tau1, tau2, filt, Fraction(p - 1))


def _tensor_bound(tau1, tau2, filt, coeff):
    rep = conductor(tau1, filt, tau2)
    a1 = rep.total
    a2 = conductor_exponent(tau2, filt)
    lhs = conductor_exponent(tau1 * tau2, filt)
    rhs = tau1.dim * a2 + tau2.dim * a1 - coeff * min(a1, a2) - rep.excess_total
    return lhs, rhs
