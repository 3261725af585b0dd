"""Class functions, characters, and character tables over exact cyclotomics.

Representations are modelled by their characters only; every quantity the
package computes (conductor terms, degrees, fixed spaces) is a character
average.  Tables are found with the class-multiplication-coefficient method:
simultaneous eigenvectors of the integer class algebra over a finite field
F_q with q = 1 mod exponent(G), lifted to exact cyclotomic values through a
fixed root-of-unity correspondence and normalised by orthogonality.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .cyclo import CycloNum
from .errors import NonCharacterError, TableComputationError
from .groups import FiniteGroup, Subgroup, is_prime

Rational = Fraction


class ClassFunction:
    """A function on conjugacy classes with exact cyclotomic values."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values: Sequence):
        if len(values) != len(group.classes):
            raise ValueError("one value per conjugacy class required")
        vals = []
        for v in values:
            if isinstance(v, CycloNum):
                vals.append(v)
            else:
                vals.append(CycloNum.from_rational(Fraction(v)))
        self.group = group
        self.values = tuple(vals)

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def trivial(group: FiniteGroup) -> "ClassFunction":
        return ClassFunction(group, [1] * len(group.classes))

    @staticmethod
    def zero(group: FiniteGroup) -> "ClassFunction":
        return ClassFunction(group, [0] * len(group.classes))

    @staticmethod
    def regular(group: FiniteGroup) -> "ClassFunction":
        vals = [0] * len(group.classes)
        vals[group.class_of[group.identity]] = group.order
        return ClassFunction(group, vals)

    # -- algebra ---------------------------------------------------------------

    def _same_group(self, other: "ClassFunction"):
        if self.group is not other.group:
            raise ValueError("class functions live on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(self.group,
                             [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(self.group,
                             [a * b for a, b in zip(self.values, other.values)])

    def scale(self, n: int) -> "ClassFunction":
        return ClassFunction(self.group, [v.scale(n) for v in self.values])

    def dual(self) -> "ClassFunction":
        """The contragredient: value at g is the value at g^-1."""
        G = self.group
        return ClassFunction(G, [self.values[G.inverse_class[c]]
                                 for c in range(len(G.classes))])

    @property
    def dim(self) -> int:
        v = self.values[self.group.class_of[self.group.identity]]
        return v.integer_value()

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and all(
            a == b for a, b in zip(self.values, other.values))

    __hash__ = None

    def key(self) -> tuple:
        """Deterministic sort key: values promoted to a common conductor."""
        e = self.group.exponent
        return tuple(v.promote(_lcm(e, v.N)).coeffs for v in self.values)

    def to_json(self) -> dict:
        return {"values": [v.to_json() for v in self.values]}

    def __repr__(self):
        return f"ClassFunction({[str(v) for v in self.values]})"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def dsum(chi: ClassFunction, psi: ClassFunction) -> ClassFunction:
    return chi + psi


def tensor(chi: ClassFunction, psi: ClassFunction) -> ClassFunction:
    return chi * psi


def dual(chi: ClassFunction) -> ClassFunction:
    return chi.dual()


def inner_product(chi: ClassFunction, psi: ClassFunction,
                  subgroup: Optional[Subgroup] = None) -> Fraction:
    """<chi, psi> averaged over a subgroup (default: the whole group)."""
    chi._same_group(psi)
    G = chi.group
    if subgroup is None:
        counts = G.class_sizes
        size = G.order
    else:
        if subgroup.parent is not G:
            raise ValueError("subgroup of a different group")
        counts = subgroup.class_counts
        size = subgroup.size
    total = CycloNum.zero()
    for c, cnt in enumerate(counts):
        if cnt:
            total = total + (chi.values[c] * psi.values[c].conjugate()).scale(cnt)
    return total.rational_value() / size


def fixed_dim(chi: ClassFunction, subgroup: Subgroup) -> int:
    """Dimension of the subgroup-fixed subspace, <Res chi, 1>."""
    G = chi.group
    if subgroup.parent is not G:
        raise ValueError("subgroup of a different group")
    total = CycloNum.zero()
    for c, cnt in enumerate(subgroup.class_counts):
        if cnt:
            total = total + chi.values[c].scale(cnt)
    if not total.is_rational():
        raise NonCharacterError("fixed-space average is not rational")
    avg = total.rational_value() / subgroup.size
    if avg.denominator != 1 or avg < 0:
        raise NonCharacterError(f"fixed-space average {avg} is not a nonnegative integer")
    return avg.numerator


def restrict(chi: ClassFunction, subgroup: Subgroup) -> ClassFunction:
    """Restriction, re-indexed to the subgroup's own conjugacy classes."""
    G = chi.group
    if subgroup.parent is not G:
        raise ValueError("subgroup of a different group")
    S, embed = subgroup.as_group()
    vals = [chi.values[G.class_of[embed[rep]]] for rep in S.class_reps]
    return ClassFunction(S, vals)


# -- character table ---------------------------------------------------------


class CharacterTable:
    """The irreducible characters of a finite group, in a fixed order."""

    __slots__ = ("group", "irreducibles", "degrees", "modulus",
                 "_dual_index", "_fs", "_orbits")

    def __init__(self, group: FiniteGroup, irreducibles: Sequence[ClassFunction],
                 modulus: int):
        self.group = group
        self.irreducibles = tuple(irreducibles)
        self.degrees = tuple(ch.dim for ch in irreducibles)
        self.modulus = modulus
        self._dual_index = None
        self._fs = None
        self._orbits = None

    def __len__(self):
        return len(self.irreducibles)

    def multiplicities(self, chi: ClassFunction) -> Tuple[int, ...]:
        """Decompose a character; error on negative or fractional parts."""
        out = []
        for psi in self.irreducibles:
            m = inner_product(chi, psi)
            if m.denominator != 1 or m < 0:
                raise NonCharacterError(f"multiplicity {m} is not a nonnegative integer")
            out.append(m.numerator)
        return tuple(out)

    def assemble(self, mults: Sequence[int]) -> ClassFunction:
        if len(mults) != len(self.irreducibles):
            raise ValueError("one multiplicity per irreducible required")
        out = ClassFunction.zero(self.group)
        for m, psi in zip(mults, self.irreducibles):
            if m:
                out = out + psi.scale(m)
        return out

    @property
    def dual_index(self) -> Tuple[int, ...]:
        if self._dual_index is None:
            idx = []
            for psi in self.irreducibles:
                d = psi.dual()
                idx.append(next(i for i, ch in enumerate(self.irreducibles) if ch == d))
            self._dual_index = tuple(idx)
        return self._dual_index

    @property
    def fs_indicators(self) -> Tuple[int, ...]:
        if self._fs is None:
            self._fs = tuple(frobenius_schur(psi) for psi in self.irreducibles)
        return self._fs

    @property
    def galois_orbits(self) -> Tuple[Tuple[int, ...], ...]:
        """Partition of irreducible indices under value-field conjugation."""
        if self._orbits is None:
            G = self.group
            e = G.exponent
            seen = set()
            orbits = []
            for i in range(len(self.irreducibles)):
                if i in seen:
                    continue
                orbit = {i}
                for k in range(1, e + 1):
                    if gcd(k, e) != 1:
                        continue
                    vals = [self.irreducibles[i].values[G.class_power(c, k)]
                            for c in range(len(G.classes))]
                    twisted = ClassFunction(G, vals)
                    j = next(t for t, ch in enumerate(self.irreducibles) if ch == twisted)
                    orbit.add(j)
                seen |= orbit
                orbits.append(tuple(sorted(orbit)))
            self._orbits = tuple(orbits)
        return self._orbits

    def index_of_trivial(self) -> int:
        triv = ClassFunction.trivial(self.group)
        return next(i for i, ch in enumerate(self.irreducibles) if ch == triv)


# modular linear algebra helpers, all over F_q for a prime q


def _mat_vec(m, v, q):
    return [sum(a * b for a, b in zip(row, v)) % q for row in m]


def _rref(rows, q):
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % q), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, q)
        rows[rank] = [x * inv % q for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % q:
                f = rows[i][col]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def _charpoly(mat, q):
    """Monic characteristic polynomial mod q, ascending coefficients."""
    n = len(mat)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    N = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        M = [[sum(mat[i][t] * N[t][j] for t in range(n)) % q for j in range(n)]
             for i in range(n)]
        tr = sum(M[i][i] for i in range(n)) % q
        ck = (-tr * pow(k, -1, q)) % q
        coeffs[n - k] = ck
        N = [[(M[i][j] + (ck if i == j else 0)) % q for j in range(n)]
             for i in range(n)]
    return coeffs


def _poly_roots_mod(coeffs, q):
    roots = []
    for lam in range(q):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * lam + c) % q
        if acc == 0:
            roots.append(lam)
    return roots


def _kernel(mat, q):
    """Basis of the kernel of a square matrix mod q."""
    n = len(mat)
    rows, pivots = _rref(mat, q)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-rows[r][fc]) % q
        basis.append(vec)
    return basis


def _smallest_table_prime(group: FiniteGroup) -> int:
    q = group.order + 1
    e = group.exponent
    q += (-(q - 1)) % e  # smallest q > |G| with q = 1 mod e
    while not is_prime(q):
        q += e
    return q


def _next_table_prime(q: int, e: int) -> int:
    q += e
    while not is_prime(q):
        q += e
    return q


def _primitive_root_of_unity(e: int, q: int) -> int:
    """Smallest primitive e-th root of unity in F_q (requires e | q-1)."""
    if e == 1:
        return 1
    prime_divs = [p for p in range(2, e + 1) if e % p == 0 and is_prime(p)]
    for w in range(2, q):
        if pow(w, e, q) == 1 and all(pow(w, e // p, q) != 1 for p in prime_divs):
            return w
    raise TableComputationError(f"no primitive {e}-th root of unity mod {q}")


def _class_matrices(group: FiniteGroup):
    """Integer class algebra matrices: (M_i)[j][k] counts products landing in class k."""
    r = len(group.classes)
    cnt = [[[0] * r for _ in range(r)] for _ in range(r)]
    cls = group.class_of
    table = group.table
    for x in range(group.order):
        cx = cls[x]
        row = table[x]
        for y in range(group.order):
            cnt[cx][cls[y]][cls[row[y]]] += 1
    sizes = group.class_sizes
    mats = []
    for i in range(r):
        mat = [[cnt[i][j][k] // sizes[k] for k in range(r)] for j in range(r)]
        mats.append(mat)
    return mats


def _joint_eigenvectors(mats, r, q):
    """Split F_q^r into the common one-dimensional eigenspaces of the class
    matrices.  Returns r vectors normalised to have first coordinate 1."""
    identity = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    spaces = [_rref(identity, q)[0]]
    for mat in mats[1:]:
        if all(len(b) == 1 for b in spaces):
            break
        next_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                next_spaces.append(basis)
                continue
            rows, pivots = _rref(basis, q)
            k = len(rows)
            images = [_mat_vec(mat, b, q) for b in rows]
            # coordinates w.r.t. an RREF basis are read off at the pivots
            R = [[images[t][pivots[s]] % q for t in range(k)] for s in range(k)]
            covered = 0
            for lam in _poly_roots_mod(_charpoly(R, q), q):
                shifted = [[(R[i][j] - (lam if i == j else 0)) % q for j in range(k)]
                           for i in range(k)]
                sub = []
                for kv in _kernel(shifted, q):
                    vec = [0] * r
                    for t, mu in enumerate(kv):
                        if mu:
                            for j in range(r):
                                vec[j] = (vec[j] + mu * rows[t][j]) % q
                    sub.append(vec)
                if sub:
                    covered += len(sub)
                    next_spaces.append(_rref(sub, q)[0])
            if covered != k:
                raise TableComputationError("class matrix is not split semisimple mod q")
        spaces = next_spaces
    vectors = []
    for basis in spaces:
        if len(basis) != 1:
            raise TableComputationError("class algebra did not split into lines")
        v = basis[0]
        if v[0] % q == 0:
            raise TableComputationError("eigenvector with vanishing identity coordinate")
        inv = pow(v[0], -1, q)
        vectors.append([x * inv % q for x in v])
    if len(vectors) != r:
        raise TableComputationError(f"found {len(vectors)} lines, expected {r}")
    return vectors


def _lift_table(group: FiniteGroup, vectors, q) -> List[List[CycloNum]]:
    """Recover exact character values from the mod-q central characters."""
    r = len(group.classes)
    e = group.exponent
    sizes = group.class_sizes
    inv_class = group.inverse_class
    w = _primitive_root_of_unity(e, q)
    rows = []
    for v in vectors:
        s = 0
        for i in range(r):
            s = (s + v[i] * v[inv_class[i]] * pow(sizes[i], -1, q)) % q
        target = group.order * pow(s, -1, q) % q
        deg = next((d for d in range(1, group.order + 1)
                    if d * d % q == target and d * d <= group.order), None)
        if deg is None:
            raise TableComputationError("no admissible degree for an eigenvector")
        # character values mod q
        x = [deg * v[i] * pow(sizes[i], -1, q) % q for i in range(r)]
        vals: List[CycloNum] = []
        for c in range(r):
            n = group.element_orders[group.class_reps[c]]
            z = pow(w, e // n, q)
            zinv = pow(z, -1, q)
            ninv = pow(n, -1, q)
            mults = []
            for j in range(n):
                m = 0
                for k in range(n):
                    m = (m + x[group.class_power(c, k)] * pow(zinv, j * k, q)) % q
                m = m * ninv % q
                if m > deg:
                    raise TableComputationError("eigenvalue multiplicity out of range")
                mults.append(m)
            if sum(mults) != deg:
                raise TableComputationError("eigenvalue multiplicities do not sum to the degree")
            val = CycloNum.zero(1)
            for j, m in enumerate(mults):
                if m:
                    val = val + CycloNum.root_of_unity(n, j).scale(m)
            vals.append(val)
        rows.append((deg, tuple(v), vals))
    rows.sort(key=lambda t: (t[0], t[1]))
    return [row[2] for row in rows]


def _validate_table(group: FiniteGroup, chars: Sequence[ClassFunction]) -> None:
    n = sum(ch.dim ** 2 for ch in chars)
    if n != group.order:
        raise TableComputationError(f"degree squares sum to {n}, not {group.order}")
    for i, chi in enumerate(chars):
        for j in range(i, len(chars)):
            ip = inner_product(chi, chars[j])
            if ip != (1 if i == j else 0):
                raise TableComputationError(f"orthogonality fails at ({i},{j}): {ip}")


def character_table(group: FiniteGroup) -> CharacterTable:
    """Complete irreducible character table (cached on the group)."""
    if group._char_table is not None:
        return group._char_table
    r = len(group.classes)
    mats = _class_matrices(group)
    q = _smallest_table_prime(group)
    last_err = None
    for _ in range(4):
        try:
            vectors = _joint_eigenvectors(mats, r, q)
            value_rows = _lift_table(group, vectors, q)
            chars = [ClassFunction(group, row) for row in value_rows]
            _validate_table(group, chars)
            table = CharacterTable(group, chars, q)
            group._char_table = table
            return table
        except TableComputationError as err:
            last_err = err
            q = _next_table_prime(q, group.exponent)
    raise TableComputationError(f"table computation failed: {last_err}")


# -- predicates ----------------------------------------------------------------


def frobenius_schur(psi: ClassFunction) -> int:
    """Indicator (1/|G|) sum psi(g^2); requires an irreducible input."""
    G = psi.group
    if inner_product(psi, psi) != 1:
        raise NonCharacterError("Frobenius-Schur indicator needs an irreducible character")
    total = CycloNum.zero()
    for c, size in enumerate(G.class_sizes):
        total = total + psi.values[G.class_power(c, 2)].scale(size)
    ind = total.rational_value() / G.order
    assert ind in (-1, 0, 1)
    return int(ind)


def is_symplectic(chi: ClassFunction) -> bool:
    """Whether chi carries an invariant non-degenerate alternating form.

    Multiplicity criterion: orthogonal-type irreducibles must occur with
    even multiplicity, complex-type ones with the same multiplicity as
    their dual; quaternionic-type ones are unconstrained.
    """
    T = character_table(chi.group)
    try:
        mults = T.multiplicities(chi)
    except NonCharacterError:
        return False
    fs = T.fs_indicators
    dual_ix = T.dual_index
    for i, m in enumerate(mults):
        if fs[i] == 1 and m % 2:
            return False
        if fs[i] == 0 and m != mults[dual_ix[i]]:
            return False
    return True


def is_rational_charpoly(chi: ClassFunction) -> bool:
    """True iff chi(g^k) = chi(g) for all g and k coprime to ord(g).

    For characters this says every tau(g) has rational characteristic
    polynomial: the power sums of the eigenvalue multiset are the values
    chi(g^j), and Newton's identities in characteristic 0 make all power
    sums rational exactly when all elementary symmetric functions are.
    """
    G = chi.group
    for c in range(len(G.classes)):
        n = G.element_orders[G.class_reps[c]]
        base = chi.values[c]
        for k in range(2, n):
            if gcd(k, n) == 1 and chi.values[G.class_power(c, k)] != base:
                return False
    return True


# -- seeded generators ----------------------------------------------------------


def _rng(tag: str, seed) -> random.Random:
    return random.Random(f"{tag}:{seed}")


def gen_character(group: FiniteGroup, seed, budget: int) -> ClassFunction:
    """Random nonnegative integer combination of irreducibles, dim <= budget."""
    T = character_table(group)
    rng = _rng("char", seed)
    mults = [0] * len(T)
    dim = 0
    for _ in range(rng.randint(0, budget)):
        cands = [i for i, d in enumerate(T.degrees) if dim + d <= budget]
        if not cands:
            break
        i = rng.choice(cands)
        mults[i] += 1
        dim += T.degrees[i]
    return T.assemble(mults)


def symplectic_atoms(T: CharacterTable) -> List[Tuple[Tuple[int, ...], int]]:
    """Minimal symplectic building blocks as (multiplicity vector, dim)."""
    atoms = []
    fs = T.fs_indicators
    dual_ix = T.dual_index
    r = len(T)
    for i in range(r):
        vec = [0] * r
        if fs[i] == -1:
            vec[i] = 1
            atoms.append((tuple(vec), T.degrees[i]))
        elif fs[i] == 1:
            vec[i] = 2
            atoms.append((tuple(vec), 2 * T.degrees[i]))
        elif i <= dual_ix[i]:
            vec[i] += 1
            vec[dual_ix[i]] += 1
            atoms.append((tuple(vec), 2 * T.degrees[i]))
    return atoms


def rational_atoms(T: CharacterTable) -> List[Tuple[Tuple[int, ...], int]]:
    """Galois-orbit sums: the minimal characters with all-rational values."""
    atoms = []
    r = len(T)
    for orbit in T.galois_orbits:
        vec = [0] * r
        for i in orbit:
            vec[i] = 1
        atoms.append((tuple(vec), sum(T.degrees[i] for i in orbit)))
    return atoms


def _combine_atoms(T: CharacterTable, atoms, rng: random.Random,
                   budget: int, ensure_nonzero: bool) -> ClassFunction:
    mults = [0] * len(T)
    dim = 0
    for _ in range(rng.randint(0, max(budget, 1))):
        cands = [a for a in atoms if dim + a[1] <= budget]
        if not cands:
            break
        vec, d = rng.choice(cands)
        mults = [m + v for m, v in zip(mults, vec)]
        dim += d
    if dim == 0 and ensure_nonzero:
        vec, d = min(atoms, key=lambda a: a[1])
        mults = [m + v for m, v in zip(mults, vec)]
    return T.assemble(mults)


def gen_symplectic(group: FiniteGroup, seed, budget: int) -> ClassFunction:
    """Seeded random symplectic character of total dimension <= budget."""
    if budget < 2:
        raise ValueError("symplectic characters need budget >= 2")
    T = character_table(group)
    chi = _combine_atoms(T, symplectic_atoms(T), _rng("symp", seed), budget, True)
    assert is_symplectic(chi)
    return chi


def gen_rational(group: FiniteGroup, seed, budget: int) -> ClassFunction:
    """Seeded random character with rational characteristic polynomials."""
    if budget < 1:
        raise ValueError("rational characters need budget >= 1")
    T = character_table(group)
    chi = _combine_atoms(T, rational_atoms(T), _rng("rat", seed), budget, True)
    assert is_rational_charpoly(chi)
    return chi
