"""Closed-form spectral data for the ordered Hamming scheme.

The depth-one scheme (n = 1) has explicit Kronecker-product adjacency
matrices and primitive idempotents; everything at depth n is obtained by
symmetrized lifting. Eigenmatrices at depth n are coefficient tables of a
product generating function (multivariate Krawtchouk polynomials).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from .exact_linalg import RatMatrix, kron_all
from .scheme import (
    SchemeParams,
    Shape,
    enumerate_shapes,
    relation_matrices,
    require_within_bound,
)
from .symtensor import lifted_sum, multinomial


class InternalMismatch(AssertionError):
    """Two independent constructions of the same object disagree."""


def factor_identity(qj: int) -> RatMatrix:
    return RatMatrix.identity(qj)

def factor_ones(qj: int) -> RatMatrix:
    return RatMatrix.ones(qj)

def factor_ones_normalized(qj: int) -> RatMatrix:
    return RatMatrix.ones(qj).scale(Fraction(1, qj))

def factor_zero_unit(qj: int) -> RatMatrix:
    """Matrix unit at (0, 0)."""
    m = RatMatrix.zeros(qj).rows
    grid = [list(row) for row in m]
    grid[0][0] = Fraction(1)
    return RatMatrix(grid)


@dataclass(frozen=True)
class BaseSpectralData:
    """Adjacency matrices, idempotents, valencies, multiplicities, eigenmatrices at n = 1."""

    params: SchemeParams
    A: tuple[RatMatrix, ...]
    E: tuple[RatMatrix, ...]
    k: tuple[int, ...]
    mult: tuple[int, ...]
    P: RatMatrix
    Q: RatMatrix


def base_valencies(params: SchemeParams) -> tuple[int, ...]:
    q = params.q
    out = [1]
    for j in range(1, params.m + 1):
        out.append((q[j - 1] - 1) * math.prod(q[: j - 1]))
    return tuple(out)


def base_multiplicities(params: SchemeParams) -> tuple[int, ...]:
    q = params.q
    m = params.m
    out = [1]
    for j in range(1, m + 1):
        out.append((q[m - j] - 1) * math.prod(q[m - j + 1 :]))
    return tuple(out)


def base_adjacency(params: SchemeParams) -> tuple[RatMatrix, ...]:
    """A_0 = identity; A_j flips coordinate j and frees everything before it."""
    q = params.q
    m = params.m
    I = [factor_identity(qj) for qj in q]
    J = [factor_ones(qj) for qj in q]
    mats = [kron_all(I)]
    for j in range(1, m + 1):
        factors = J[: j - 1] + [J[j - 1] - I[j - 1]] + I[j:]
        mats.append(kron_all(factors))
    return tuple(mats)


def base_idempotents(params: SchemeParams) -> tuple[RatMatrix, ...]:
    """E_0 is the normalized all-ones product; E_j peels factors from the right."""
    q = params.q
    m = params.m
    I = [factor_identity(qj) for qj in q]
    Jt = [factor_ones_normalized(qj) for qj in q]
    mats = [kron_all(Jt)]
    for j in range(1, m + 1):
        pos = m - j  # 0-based index of the (I - Jt) factor
        factors = Jt[:pos] + [I[pos] - Jt[pos]] + I[pos + 1 :]
        mats.append(kron_all(factors))
    return tuple(mats)


def base_eigenmatrix_P(params: SchemeParams) -> RatMatrix:
    q = params.q
    m = params.m
    k = base_valencies(params)
    rows = []
    for i in range(m + 1):
        row = []
        for j in range(m + 1):
            if i + j < m + 1:
                row.append(Fraction(k[j]))
            elif i + j == m + 1:
                row.append(Fraction(-k[j], q[j - 1] - 1))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return RatMatrix(rows)


def base_eigenmatrix_Q(params: SchemeParams) -> RatMatrix:
    q = params.q
    m = params.m
    mult = base_multiplicities(params)
    rows = []
    for i in range(m + 1):
        row = []
        for j in range(m + 1):
            if i + j < m + 1:
                row.append(Fraction(mult[j]))
            elif i + j == m + 1:
                row.append(Fraction(-mult[j], q[m - j] - 1))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return RatMatrix(rows)


def base_spectral(params: SchemeParams) -> BaseSpectralData:
    """Assemble depth-one spectral data, cross-checking the closed forms.

    Valencies must match adjacency row sums and multiplicities must match
    idempotent traces, both exactly; any disagreement raises
    InternalMismatch.
    """
    A = base_adjacency(params)
    E = base_idempotents(params)
    k = base_valencies(params)
    mult = base_multiplicities(params)
    for j, (aj, kj) in enumerate(zip(A, k)):
        sums = set(aj.row_sums())
        if sums != {Fraction(kj)}:
            raise InternalMismatch(f"row sums of adjacency {j} disagree with valency {kj}")
    for j, (ej, mj) in enumerate(zip(E, mult)):
        if ej.trace() != mj:
            raise InternalMismatch(f"trace of idempotent {j} disagrees with multiplicity {mj}")
    return BaseSpectralData(
        params=params,
        A=A,
        E=E,
        k=k,
        mult=mult,
        P=base_eigenmatrix_P(params),
        Q=base_eigenmatrix_Q(params),
    )


@dataclass(frozen=True)
class DualityReport:
    p_equals_reversed_q: bool
    q_equals_reversed_p: bool
    valencies_swap_with_multiplicities: bool
    pq_product_is_size_identity: bool
    self_dual: bool | None  # None when q is not palindromic

    @property
    def all_pass(self) -> bool:
        checks = [
            self.p_equals_reversed_q,
            self.q_equals_reversed_p,
            self.valencies_swap_with_multiplicities,
            self.pq_product_is_size_identity,
        ]
        if self.self_dual is not None:
            checks.append(self.self_dual)
        return all(checks)

    def to_json(self) -> dict:
        return {
            "p_equals_reversed_q": self.p_equals_reversed_q,
            "q_equals_reversed_p": self.q_equals_reversed_p,
            "valencies_swap_with_multiplicities": self.valencies_swap_with_multiplicities,
            "pq_product_is_size_identity": self.pq_product_is_size_identity,
            "self_dual": self.self_dual,
            "all_pass": self.all_pass,
        }


def verify_base_duality(params: SchemeParams) -> DualityReport:
    """Reversing the alphabet order swaps the two eigenmatrices."""
    rev = params.reversed()
    P, Q = base_eigenmatrix_P(params), base_eigenmatrix_Q(params)
    Pr, Qr = base_eigenmatrix_P(rev), base_eigenmatrix_Q(rev)
    k, mult = base_valencies(params), base_multiplicities(params)
    kr = base_valencies(rev)
    palindromic = params.q == rev.q
    size = params.base_size
    return DualityReport(
        p_equals_reversed_q=(Pr == Q),
        q_equals_reversed_p=(Qr == P),
        valencies_swap_with_multiplicities=(kr == mult and base_multiplicities(rev) == k),
        pq_product_is_size_identity=(P * Q == RatMatrix.identity(params.m + 1).scale(size)),
        self_dual=(P == Q) if palindromic else None,
    )


# ---------------------------------------------------------------------------
# Multivariate Krawtchouk tables via generating-function expansion.
# ---------------------------------------------------------------------------

Monomial = tuple[int, ...]


def _poly_mul(a: dict[Monomial, Fraction], b: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(e, Fraction(0)) + ca * cb
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def krawchouk_table(
    params: SchemeParams, reversed_q: bool = False
) -> dict[tuple[Shape, Shape], Fraction]:
    """Coefficient table K[(mu, lam)] of the product generating function.

    For each shape lam, expand prod_j (sum_i P[j][i] z_i)^lam_j and read the
    z^mu coefficient; with reversed_q the base eigenmatrix of the reversed
    alphabet sequence is used instead.
    """
    m = params.m
    P = base_eigenmatrix_P(params.reversed() if reversed_q else params)
    shapes = enumerate_shapes(params)
    zero_exp = tuple([0] * (m + 1))
    linear = []
    for j in range(m + 1):
        poly: dict[Monomial, Fraction] = {}
        for i in range(m + 1):
            c = P[j, i]
            if c:
                e = tuple(int(t == i) for t in range(m + 1))
                poly[e] = c
        linear.append(poly)
    table: dict[tuple[Shape, Shape], Fraction] = {}
    for lam in shapes:
        expansion: dict[Monomial, Fraction] = {zero_exp: Fraction(1)}
        for j, lam_j in enumerate(lam):
            for _ in range(lam_j):
                expansion = _poly_mul(expansion, linear[j])
        for mu in shapes:
            table[(mu, lam)] = expansion.get(mu, Fraction(0))
    return table


def valency_n(lam: Shape, params: SchemeParams) -> int:
    k = base_valencies(params)
    return multinomial(lam) * math.prod(kj**c for kj, c in zip(k, lam))


def multiplicity_n(lam: Shape, params: SchemeParams) -> int:
    mult = base_multiplicities(params)
    return multinomial(lam) * math.prod(mj**c for mj, c in zip(mult, lam))


def adjacency_n(lam: Shape, params: SchemeParams, max_points: int | None = None) -> RatMatrix:
    """Adjacency matrix of the depth-n relation `lam`, by symmetrized lifting."""
    require_within_bound(params, max_points)
    A = base_adjacency(params)
    return lifted_sum(list(zip(A, lam)))


def idempotent_n(lam: Shape, params: SchemeParams, max_points: int | None = None) -> RatMatrix:
    """Primitive idempotent of the depth-n scheme indexed by `lam`."""
    require_within_bound(params, max_points)
    E = base_idempotents(params)
    return lifted_sum(list(zip(E, lam)))


def eigen_n(params: SchemeParams) -> tuple[RatMatrix, RatMatrix]:
    """First and second eigenmatrices at depth n, rows and columns in shape order."""
    shapes = enumerate_shapes(params)
    kt = krawchouk_table(params, reversed_q=False)
    kt_rev = krawchouk_table(params, reversed_q=True)
    P = RatMatrix([[kt[(mu, lam)] for mu in shapes] for lam in shapes])
    Q = RatMatrix([[kt_rev[(mu, lam)] for mu in shapes] for lam in shapes])
    return P, Q


@dataclass(frozen=True)
class SpectralReport:
    eigenvalue_equations: bool
    hadamard_equations: bool
    valencies_match_row_sums: bool
    multiplicities_match_traces: bool
    lifted_matches_bruteforce: bool
    idempotents_resolve_identity: bool
    pq_product_is_size_identity: bool

    @property
    def all_pass(self) -> bool:
        return all(
            [
                self.eigenvalue_equations,
                self.hadamard_equations,
                self.valencies_match_row_sums,
                self.multiplicities_match_traces,
                self.lifted_matches_bruteforce,
                self.idempotents_resolve_identity,
                self.pq_product_is_size_identity,
            ]
        )

    def to_json(self) -> dict:
        return {
            "eigenvalue_equations": self.eigenvalue_equations,
            "hadamard_equations": self.hadamard_equations,
            "valencies_match_row_sums": self.valencies_match_row_sums,
            "multiplicities_match_traces": self.multiplicities_match_traces,
            "lifted_matches_bruteforce": self.lifted_matches_bruteforce,
            "idempotents_resolve_identity": self.idempotents_resolve_identity,
            "pq_product_is_size_identity": self.pq_product_is_size_identity,
            "all_pass": self.all_pass,
        }


def verify_spectral_n(params: SchemeParams, max_points: int | None = None) -> SpectralReport:
    """Exact spectral verification at depth n.

    Checks, for all shape pairs: the eigenvalue equations
    A_mu E_lam = P[lam][mu] E_lam, the Hadamard counterparts
    E_mu o A_lam = |X^n|^-1 Q[lam][mu] A_lam, the closed-form valency and
    multiplicity values, and that lifted adjacency matrices equal the
    brute-force relation matrices.
    """
    require_within_bound(params, max_points)
    shapes = enumerate_shapes(params)
    adj = {lam: adjacency_n(lam, params, max_points) for lam in shapes}
    idem = {lam: idempotent_n(lam, params, max_points) for lam in shapes}
    P, Q = eigen_n(params)
    npts = params.num_points
    inv_size = Fraction(1, npts)

    eig_ok = True
    had_ok = True
    for li, lam in enumerate(shapes):
        for mi, mu in enumerate(shapes):
            if adj[mu] * idem[lam] != idem[lam].scale(P[li, mi]):
                eig_ok = False
            if idem[mu].hadamard(adj[lam]) != adj[lam].scale(inv_size * Q[li, mi]):
                had_ok = False

    val_ok = all(
        set(adj[lam].row_sums()) == {Fraction(valency_n(lam, params))} for lam in shapes
    )
    mult_ok = all(idem[lam].trace() == multiplicity_n(lam, params) for lam in shapes)

    brute = relation_matrices(params, max_points)
    lift_ok = all(adj[lam] == brute[lam] for lam in shapes)

    total = None
    for lam in shapes:
        total = idem[lam] if total is None else total + idem[lam]
    resolve_ok = total == RatMatrix.identity(npts)

    pq_ok = P * Q == RatMatrix.identity(len(shapes)).scale(npts)

    return SpectralReport(
        eigenvalue_equations=eig_ok,
        hadamard_equations=had_ok,
        valencies_match_row_sums=val_ok,
        multiplicities_match_traces=mult_ok,
        lifted_matches_bruteforce=lift_ok,
        idempotents_resolve_identity=resolve_ok,
        pq_product_is_size_identity=pq_ok,
    )
