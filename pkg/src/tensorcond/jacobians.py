"""The family of Jacobians of y^2 = x^p - alpha over Q_p, p odd.

For a unit a with a^(p-1) != 1 mod p^2 the pair (J_a, J_p) realises every
tensor-conductor bound in this package with equality.  Swan exponents come
from an exact integer resultant (no p-adic truncation); the compositum is
handled by per-character Swan slopes with the ultrametric product rule
instead of an explicit ramification chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .chars import ClassFunction, fixed_dim, inner_product
from .errors import InvalidUnitError, PreconditionError
from .groups import (FiniteGroup, Filtration, Subgroup, affine, is_prime,
                     whole_group, trivial_subgroup)
from .weildeligne import InertiaModel, WDRep


@dataclass(frozen=True)
class FamilyParams:
    """An odd prime p and a unit representative a with a^(p-1) != 1 mod p^2."""

    p: int
    a: int


def validate_params(p: int, a: int) -> FamilyParams:
    if not is_prime(p) or p == 2:
        raise InvalidUnitError(f"p={p} must be an odd prime")
    if a % p == 0:
        raise InvalidUnitError(f"a={a} is not a unit mod {p}")
    if pow(a, p - 1, p * p) == 1:
        raise InvalidUnitError(f"a={a} satisfies a^(p-1) = 1 mod {p}^2")
    return FamilyParams(p, a)


def smallest_valid_unit(p: int) -> int:
    a = 2
    while True:
        try:
            validate_params(p, a)
            return a
        except InvalidUnitError:
            a += 1
            if a > p * p:
                raise


# -- discriminant route -------------------------------------------------------


def _bareiss_det(m: List[List[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [row[:] for row in m]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_resultant(f: List[int], g: List[int]) -> int:
    """Resultant of two integer polynomials (ascending coefficients)."""
    while f and f[-1] == 0:
        f = f[:-1]
    while g and g[-1] == 0:
        g = g[:-1]
    n, m = len(f) - 1, len(g) - 1
    if n < 0 or m < 0:
        raise ValueError("resultant of the zero polynomial")
    size = n + m
    if size == 0:
        return 1
    fd = f[::-1]
    gd = g[::-1]
    rows = []
    for i in range(m):
        rows.append([0] * i + fd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (size - m - 1 - i))
    return _bareiss_det(rows)


def _p_valuation(p: int, n: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def disc_valuation(p: int, alpha: int) -> int:
    """v_p of the discriminant of x^p - alpha, by exact resultant."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    f = [-alpha] + [0] * (p - 1) + [1]
    df = [i * f[i] for i in range(1, p + 1)]
    res = sylvester_resultant(f, df)
    return _p_valuation(p, res)


def swan_jacobian(p: int, alpha: int) -> int:
    """Swan exponent of J_alpha: v(disc) - degree + residue degree.

    Both x^p - p and the shifted polynomial for a unit alpha are Eisenstein,
    so the degree-p extension is totally ramified with residue degree 1.
    """
    if alpha != p:
        validate_params(p, alpha)
    return disc_valuation(p, alpha) - p + 1


# -- filtration route ---------------------------------------------------------


@dataclass(frozen=True)
class JacobianLocalData:
    """Inertia model of one J_alpha plus its (p-1)-dimensional character."""

    model: InertiaModel
    character: ClassFunction

    @property
    def rho(self) -> WDRep:
        return WDRep(self.model, [(self.character, 1)])


def _standard_character(G: FiniteGroup, p: int) -> ClassFunction:
    """The (p-1)-dimensional irreducible of the affine group: the natural
    permutation character on F_p minus the trivial one."""
    vals = []
    for rep in G.class_reps:
        a = rep // p + 1
        fixed_points = p if rep == 0 else (0 if a == 1 else 1)
        vals.append(fixed_points - 1)
    chi = ClassFunction(G, vals)
    assert inner_product(chi, chi) == 1
    return chi


def jacobian_inertia_model(p: int, alpha: int) -> JacobianLocalData:
    """Lower-numbering model: G_0 the affine group of order p(p-1), then
    Sw(J_alpha) copies of the order-p translation subgroup, then 1."""
    u = swan_jacobian(p, alpha)
    G = affine(p)
    translations = Subgroup(G, range(p))
    chain = [whole_group(G)] + [translations] * u + [trivial_subgroup(G)]
    model = InertiaModel(G, Filtration(G, chain), p)
    return JacobianLocalData(model, _standard_character(G, p))


# -- break (Swan slope) route ---------------------------------------------------


@dataclass(frozen=True)
class BreakRep:
    """Characters of an elementary abelian wild group with Swan slopes.

    Each entry is (exponent vector mod p, break).  Trivial characters carry
    break 0 and are omitted; the Swan conductor is the sum of the breaks.
    """

    p: int
    rank: int
    characters: Tuple[Tuple[Tuple[int, ...], Fraction], ...]

    def __post_init__(self):
        for vec, brk in self.characters:
            if len(vec) != self.rank:
                raise ValueError("exponent vector of the wrong rank")
            if all(x % self.p == 0 for x in vec):
                raise ValueError("trivial characters must be omitted")
            if brk <= 0:
                raise ValueError("breaks must be positive")
        lines = {}
        for vec, brk in self.characters:
            lines.setdefault(_line_of(vec, self.p), set()).add(brk)
        for line, brks in lines.items():
            if len(brks) != 1:
                raise ValueError(f"break not constant on the direction {line}")

    def swan(self) -> Fraction:
        return sum((brk for _, brk in self.characters), Fraction(0))

    def dim(self) -> int:
        return len(self.characters)


def _line_of(vec: Tuple[int, ...], p: int) -> Tuple[int, ...]:
    """Canonical representative of the F_p-line spanned by vec."""
    lead = next(x % p for x in vec if x % p)
    inv = pow(lead, -1, p)
    return tuple(x * inv % p for x in vec)


def joint_break_model(params: FamilyParams) -> Tuple[BreakRep, BreakRep]:
    """Both Jacobian representations on the joint wild group C_p x C_p.

    The p-1 characters of each factor share one slope, pinned by the
    requirement that the slope sum reproduce the Swan exponents 1 and p:
    1/(p-1) for the unit branch and p/(p-1) for the p branch.
    """
    p = params.p
    slope_a = Fraction(1, p - 1)
    slope_p = Fraction(p, p - 1)
    rep_a = BreakRep(p, 2, tuple(((i, 0), slope_a) for i in range(1, p)))
    rep_p = BreakRep(p, 2, tuple(((0, j), slope_p) for j in range(1, p)))
    return rep_a, rep_p


def tensor_break_rep(r1: BreakRep, r2: BreakRep) -> BreakRep:
    """Product rule: break(chi psi) = max of the breaks when they differ.

    Equal breaks on a nontrivial product are ambiguous (the slope can only
    drop) and are rejected rather than guessed.
    """
    if r1.p != r2.p or r1.rank != r2.rank:
        raise PreconditionError("break representations live on different wild groups")
    p = r1.p
    chars = []
    for v1, b1 in r1.characters:
        for v2, b2 in r2.characters:
            vec = tuple((x + y) % p for x, y in zip(v1, v2))
            if all(x == 0 for x in vec):
                continue  # trivial: break 0, contributes nothing
            if b1 == b2:
                raise PreconditionError("equal slopes: product break is not determined")
            chars.append((vec, max(b1, b2)))
    return BreakRep(p, r1.rank, tuple(chars))


def swan_break(rep: BreakRep) -> Fraction:
    return rep.swan()


# -- full sharpness verification -------------------------------------------------


@dataclass(frozen=True)
class SharpnessReport:
    p: int
    a: int
    sw_a: int
    sw_p: int
    sw_a_filtration: Fraction
    sw_p_filtration: Fraction
    artin_a: Fraction
    artin_p: Fraction
    deg_a: int
    deg_p: int
    sw_tensor: Fraction
    swan_rhs: Fraction
    a_tensor: Fraction
    conductor_rhs: Fraction
    improvement_constant: int
    equal: bool

    def to_json(self) -> dict:
        return {
            "p": self.p, "a": self.a,
            "sw_a": self.sw_a, "sw_p": self.sw_p,
            "sw_a_filtration": str(self.sw_a_filtration),
            "sw_p_filtration": str(self.sw_p_filtration),
            "artin_a": str(self.artin_a), "artin_p": str(self.artin_p),
            "deg_a": self.deg_a, "deg_p": self.deg_p,
            "sw_tensor": str(self.sw_tensor), "swan_rhs": str(self.swan_rhs),
            "a_tensor": str(self.a_tensor), "conductor_rhs": str(self.conductor_rhs),
            "c_p": self.improvement_constant,
            "equal": self.equal,
        }


def verify_sharpness(params: FamilyParams) -> SharpnessReport:
    """Check that both tensor-conductor bounds are met with equality.

    Swan exponents are computed twice (discriminant resultant and the
    filtration model) and must agree; the tensor Swan comes from the break
    calculus; the tensor Artin adds the tame part, which is the full
    dimension because neither inertia level has fixed vectors.
    """
    p, a = params.p, params.a
    dim = p - 1

    sw_a = swan_jacobian(p, a)
    sw_p = swan_jacobian(p, p)

    data_a = jacobian_inertia_model(p, a)
    data_p = jacobian_inertia_model(p, p)
    sw_a_filt = data_a.rho.swan_conductor()
    sw_p_filt = data_p.rho.swan_conductor()
    artin_a = data_a.rho.artin_conductor()
    artin_p = data_p.rho.artin_conductor()
    deg_a = data_a.rho.degree()
    deg_p = data_p.rho.degree()
    wild_fixed = [fixed_dim(d.character, d.model.filtration[1])
                  for d in (data_a, data_p)]

    rep_a, rep_p = joint_break_model(params)
    prod = tensor_break_rep(rep_a, rep_p)
    sw_tensor = prod.swan()
    swan_rhs = dim * sw_p_filt + dim * sw_a_filt \
        - max(2, p - 1) * min(sw_a_filt, sw_p_filt)

    # the wild group fixes nothing in the product (every exponent vector is
    # nonzero), so neither does inertia: the tame part is the full dim^2
    wild_invariants = dim * dim - len(prod.characters)
    tensor_deg = wild_invariants  # = 0; inertia-fixed <= wild-fixed
    a_tensor = dim * dim - tensor_deg + sw_tensor
    c_p = min(max(2, p - 1), dim - deg_a, dim - deg_p)
    conductor_rhs = dim * artin_p + dim * artin_a \
        - c_p * min(artin_a, artin_p) - (tensor_deg - deg_a * deg_p)

    equal = (
        sw_a_filt == sw_a and sw_p_filt == sw_p
        and rep_a.swan() == sw_a and rep_p.swan() == sw_p
        and artin_a == dim + sw_a and artin_p == dim + sw_p
        and deg_a == 0 and deg_p == 0 and wild_fixed == [0, 0]
        and sw_tensor == swan_rhs
        and a_tensor == conductor_rhs
    )
    return SharpnessReport(p, a, sw_a, sw_p, sw_a_filt, sw_p_filt,
                           artin_a, artin_p, deg_a, deg_p,
                           sw_tensor, swan_rhs, a_tensor, conductor_rhs,
                           c_p, equal)
