"""Terwilliger algebra of the ordered Hamming scheme at the all-zeros base point.

Builds the dual idempotents and the two split families living inside the
algebra (the F family spanning the primary part and the G family carrying
the commutative remainder), verifies the full identity suite relating
them, and measures algebra dimensions with the exact closure engine. The
closure oracle is the ground truth here: printed dimension formulas are
treated as predictions to compare against, never as answers to hard-code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .exact_linalg import (
    MatrixSubspace,
    RatMatrix,
    algebra_closure,
    center_dimension,
    kron_all,
    span_basis,
)
from .scheme import (
    SchemeParams,
    Shape,
    compositions,
    enumerate_shapes,
    relation_matrix,
    require_within_bound,
)
from .spectral import (
    InternalMismatch,
    adjacency_n,
    base_adjacency,
    base_idempotents,
    base_multiplicities,
    base_spectral,
    base_valencies,
    factor_identity,
    factor_ones_normalized,
    factor_zero_unit,
    idempotent_n,
    valency_n,
)
from .symtensor import lifted_sum, lifted_sum_grid, sym_product_spanset


# ---------------------------------------------------------------------------
# Factor-level building blocks (one alphabet position at a time).
# ---------------------------------------------------------------------------


def factor_h(qj: int) -> RatMatrix:
    """Rank-one idempotent supported away from the uniform vector."""
    I = factor_identity(qj)
    jt = factor_ones_normalized(qj)
    d = factor_zero_unit(qj)
    core = (I - jt) * d * (I - jt)
    return core.scale(Fraction(qj, qj - 1))


def factor_h_star(qj: int) -> RatMatrix:
    """Rank-one idempotent supported away from the base letter."""
    I = factor_identity(qj)
    jt = factor_ones_normalized(qj)
    d = factor_zero_unit(qj)
    core = (I - d) * jt * (I - d)
    return core.scale(Fraction(qj, qj - 1))


def factor_z(qj: int) -> RatMatrix:
    """Residual idempotent I - Jt - H; zero exactly when qj = 2."""
    return factor_identity(qj) - factor_ones_normalized(qj) - factor_h(qj)


@dataclass(frozen=True)
class TerwBasisSet:
    """Dual idempotents and the split F/G families of the depth-one scheme."""

    params: SchemeParams
    Estar: tuple[RatMatrix, ...]
    F: tuple[RatMatrix, ...]
    Fstar: tuple[RatMatrix, ...]
    G: tuple[RatMatrix, ...]  # indices 1..m stored at 0..m-1
    Gstar: tuple[RatMatrix, ...]
    Fnat: RatMatrix
    Gnat: RatMatrix
    H: tuple[RatMatrix, ...]
    Hstar: tuple[RatMatrix, ...]


def base_dual_idempotents(params: SchemeParams) -> tuple[RatMatrix, ...]:
    """Diagonal indicators of the depth-one relation classes seen from 0."""
    q = params.q
    m = params.m
    I = [factor_identity(qj) for qj in q]
    D = [factor_zero_unit(qj) for qj in q]
    mats = [kron_all(D)]
    for j in range(1, m + 1):
        factors = I[: j - 1] + [I[j - 1] - D[j - 1]] + D[j:]
        mats.append(kron_all(factors))
    return tuple(mats)


def terw_basis(params: SchemeParams) -> TerwBasisSet:
    """Construct every depth-one ingredient, cross-checking each closed form.

    Dual idempotents are built twice (Kronecker formula vs. diagonal of the
    brute-force relation matrix at the base point) and the F families are
    built twice (normalized sandwich products vs. Kronecker closed forms);
    a mismatch raises InternalMismatch.
    """
    q = params.q
    m = params.m
    size = params.base_size
    base_params = SchemeParams(q, 1)

    E = base_idempotents(params)
    A = base_adjacency(params)
    k = base_valencies(params)
    mult = base_multiplicities(params)

    estar = base_dual_idempotents(params)
    # diagonal-of-relation cross-check
    shapes1 = compositions(1, m + 1)
    for j, lam in enumerate(shapes1):
        rel = relation_matrix(lam, base_params, max_points=size)
        diag = RatMatrix.diagonal([rel[0, y] for y in range(size)])
        if diag != estar[j]:
            raise InternalMismatch(f"dual idempotent {j} disagrees with relation diagonal")

    jt = [factor_ones_normalized(qj) for qj in q]
    dd = [factor_zero_unit(qj) for qj in q]
    hh = tuple(factor_h(qj) for qj in q)
    hs = tuple(factor_h_star(qj) for qj in q)

    F = [E[0]]
    Fstar = [estar[0]]
    for j in range(1, m + 1):
        F.append((E[j] * estar[0] * E[j]).scale(Fraction(size, mult[j])))
        Fstar.append((estar[j] * E[0] * estar[j]).scale(Fraction(size, k[j])))

    # closed forms: F_j mirrors the idempotent index pattern, F*_j the dual one
    for j in range(1, m + 1):
        pos = m - j  # 0-based slot of the interesting factor in F_j
        closed = kron_all(jt[:pos] + [hh[pos]] + dd[pos + 1 :])
        if closed != F[j]:
            raise InternalMismatch(f"closed form for F_{j} disagrees with its sandwich")
        closed_star = kron_all(jt[: j - 1] + [hs[j - 1]] + dd[j:])
        if closed_star != Fstar[j]:
            raise InternalMismatch(f"closed form for F*_{j} disagrees with its sandwich")

    G = tuple(E[j] - F[j] for j in range(1, m + 1))
    Gstar = tuple(estar[j] - Fstar[j] for j in range(1, m + 1))
    fnat = F[0]
    for fj in F[1:]:
        fnat = fnat + fj
    gnat = RatMatrix.identity(size) - fnat
    return TerwBasisSet(
        params=params,
        Estar=tuple(estar),
        F=tuple(F),
        Fstar=tuple(Fstar),
        G=G,
        Gstar=Gstar,
        Fnat=fnat,
        Gnat=gnat,
        H=hh,
        Hstar=hs,
    )


def dual_idempotent_n(lam: Shape, params: SchemeParams, max_points: int | None = None) -> RatMatrix:
    """Depth-n dual idempotent: diagonal indicator of points of shape `lam`."""
    require_within_bound(params, max_points)
    estar = base_dual_idempotents(params)
    return lifted_sum(list(zip(estar, lam)))


# ---------------------------------------------------------------------------
# Index-pair combinatorics for the commutative part.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LambdaSet:
    """Pairs (i, j) whose G-family product survives, plus the >=3 alphabet count."""

    pairs: frozenset[tuple[int, int]]
    epsilon: int

    @property
    def size(self) -> int:
        return len(self.pairs)


def lambda_set(params: SchemeParams) -> LambdaSet:
    m = params.m
    q = params.q
    pairs = set()
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i + j > m + 1 or (i + j == m + 1 and q[i - 1] >= 3):
                pairs.add((i, j))
    eps = sum(1 for qi in q if qi >= 3)
    return LambdaSet(pairs=frozenset(pairs), epsilon=eps)


def _lambda_pairs(q: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    return lambda_set(SchemeParams(q, 1)).pairs


def _theta_enumerate(
    lam: Shape, mu: Shape, q: tuple[int, ...]
) -> list[tuple[tuple[int, ...], ...]]:
    m = len(q)
    allowed = _lambda_pairs(q)
    out: list[tuple[tuple[int, ...], ...]] = []
    grid = [[0] * m for _ in range(m)]
    col_left = list(mu)

    def fill(i: int, j: int, row_left: int) -> None:
        if j == m:
            if row_left == 0:
                if i + 1 == m:
                    if all(c == 0 for c in col_left):
                        out.append(tuple(tuple(r) for r in grid))
                else:
                    fill(i + 1, 0, lam[i + 1])
            return
        hi = min(row_left, col_left[j]) if (i + 1, j + 1) in allowed else 0
        for v in range(hi + 1):
            grid[i][j] = v
            col_left[j] -= v
            fill(i, j + 1, row_left - v)
            col_left[j] += v
            grid[i][j] = 0

    fill(0, 0, lam[0])
    return out


def theta_enumerate(
    lam: Shape, mu: Shape, params: SchemeParams
) -> list[tuple[tuple[int, ...], ...]]:
    """All non-negative m-by-m grids supported on the surviving pairs with
    row sums `lam` and column sums `mu`, lexicographic by flattened grid."""
    _validate_inner_shape(lam, params)
    _validate_inner_shape(mu, params)
    return _theta_enumerate(lam, mu, params.q)


def _validate_inner_shape(lam: Shape, params: SchemeParams) -> None:
    if len(lam) != params.m or any(c < 0 for c in lam) or sum(lam) != params.n:
        raise ValueError(f"{lam} is not an m-tuple of non-negatives summing to n")


def _theta_feasible(lam: Shape, mu: Shape, q: tuple[int, ...]) -> bool:
    m = len(q)
    allowed = _lambda_pairs(q)
    total = sum(lam)
    for imask in product((False, True), repeat=m):
        rows = {i + 1 for i in range(m) if imask[i]}
        for jmask in product((False, True), repeat=m):
            cols = {j + 1 for j in range(m) if jmask[j]}
            if any((i, j) in allowed for i in rows for j in cols):
                continue
            supply = sum(lam[i - 1] for i in rows)
            reachable = total - sum(mu[j - 1] for j in cols)
            first = supply <= reachable
            second = sum(mu[j - 1] for j in cols) <= total - supply
            if first != second:
                raise InternalMismatch(
                    "the two margin inequalities disagree; they are complementary"
                )
            if not first:
                return False
    return True


def theta_feasible(lam: Shape, mu: Shape, params: SchemeParams) -> bool:
    """Margin test for non-emptiness of the grid family, over all 4^m set pairs."""
    _validate_inner_shape(lam, params)
    _validate_inner_shape(mu, params)
    return _theta_feasible(lam, mu, params.q)


def _omega_pairs(q: tuple[int, ...], n: int) -> list[tuple[Shape, Shape]]:
    inner = compositions(n, len(q))
    return [
        (lam, mu) for lam in inner for mu in inner if _theta_feasible(lam, mu, q)
    ]


def omega_set(params: SchemeParams) -> list[tuple[Shape, Shape]]:
    """All feasible (row-sum, column-sum) pairs, in shape-enumeration order."""
    return _omega_pairs(params.q, params.n)


# ---------------------------------------------------------------------------
# Identity suite.
# ---------------------------------------------------------------------------


def verify_terw_identities(
    params: SchemeParams, max_points: int | None = None
) -> dict[str, bool | None]:
    """Exact checks of every structural identity tying E, E*, F, F*, G, G* together.

    Returns named booleans; identities about the G families are reported as
    None (vacuous) in the single binary case where those families vanish.
    """
    require_within_bound(params, max_points)
    q = params.q
    m = params.m
    n = params.n
    size = params.base_size
    data = base_spectral(params)
    tw = terw_basis(params)
    E, A, k, mult = data.E, data.A, data.k, data.mult
    estar, F, Fstar = tw.Estar, tw.F, tw.Fstar
    G = (None,) + tw.G  # 1-based access
    Gstar = (None,) + tw.Gstar
    degenerate = m == 1 and q[0] == 2
    zero = RatMatrix.zeros(size)
    checks: dict[str, bool | None] = {}

    checks["idempotent_sandwich_scalars"] = all(
        E[0] * estar[i] * E[0] == E[0].scale(Fraction(k[i], size)) for i in range(m + 1)
    )
    checks["dual_sandwich_scalars"] = all(
        estar[0] * E[i] * estar[0] == estar[0].scale(Fraction(mult[i], size))
        for i in range(m + 1)
    )
    checks["corner_shift"] = all(
        E[0] * estar[i] == E[0] * estar[0] * A[i] for i in range(m + 1)
    )

    checks["f_zero_matches_e_zero"] = F[0] == E[0] and Fstar[0] == estar[0]
    checks["f_sandwich_reduction"] = all(
        Fstar[i] * F[0] * Fstar[j] == estar[i] * E[0] * estar[j]
        for i in range(m + 1)
        for j in range(m + 1)
    )
    checks["f_dual_sandwich_reduction"] = all(
        F[i] * Fstar[0] * F[j] == E[i] * estar[0] * E[j]
        for i in range(m + 1)
        for j in range(m + 1)
    )
    checks["f_orthogonal_idempotents"] = all(
        F[i] * F[j] == (F[i] if i == j else zero)
        for i in range(m + 1)
        for j in range(m + 1)
    )
    checks["fstar_orthogonal_idempotents"] = all(
        Fstar[i] * Fstar[j] == (Fstar[i] if i == j else zero)
        for i in range(m + 1)
        for j in range(m + 1)
    )
    fsum = F[0]
    for fj in F[1:]:
        fsum = fsum + fj
    fssum = Fstar[0]
    for fj in Fstar[1:]:
        fssum = fssum + fj
    checks["f_natural_identity"] = fsum == fssum == tw.Fnat

    checks["g_orthogonal_idempotents"] = all(
        G[i] * G[j] == (G[i] if i == j else zero)
        for i in range(1, m + 1)
        for j in range(1, m + 1)
    )
    checks["gstar_orthogonal_idempotents"] = all(
        Gstar[i] * Gstar[j] == (Gstar[i] if i == j else zero)
        for i in range(1, m + 1)
        for j in range(1, m + 1)
    )
    checks["g_annihilates_f"] = all(
        (G[i] * F[h]).is_zero() and (F[h] * G[i]).is_zero()
        for i in range(1, m + 1)
        for h in range(m + 1)
    )
    checks["g_annihilates_fstar"] = all(
        (G[i] * Fstar[h]).is_zero() and (Fstar[h] * G[i]).is_zero()
        for i in range(1, m + 1)
        for h in range(m + 1)
    )
    checks["gstar_annihilates_f"] = all(
        (Gstar[i] * F[h]).is_zero() and (F[h] * Gstar[i]).is_zero()
        for i in range(1, m + 1)
        for h in range(m + 1)
    )
    checks["gstar_annihilates_fstar"] = all(
        (Gstar[i] * Fstar[h]).is_zero() and (Fstar[h] * Gstar[i]).is_zero()
        for i in range(1, m + 1)
        for h in range(m + 1)
    )
    checks["g_product_difference"] = all(
        G[i] * Gstar[j] == E[i] * estar[j] - F[i] * Fstar[j]
        for i in range(1, m + 1)
        for j in range(1, m + 1)
    )
    checks["gstar_product_difference"] = all(
        Gstar[i] * G[j] == estar[i] * E[j] - Fstar[i] * F[j]
        for i in range(1, m + 1)
        for j in range(1, m + 1)
    )
    gsum = None
    gssum = None
    for j in range(1, m + 1):
        gsum = G[j] if gsum is None else gsum + G[j]
        gssum = Gstar[j] if gssum is None else gssum + Gstar[j]
    checks["g_natural_sum"] = gsum == gssum == tw.Gnat

    checks["factor_identities"] = _factor_identities_hold(q, tw)

    mixed_low = True
    mixed_high = True
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i + j < m + 1 or (i + j == m + 1 and q[i - 1] == 2):
                if E[j] * estar[i] != F[j] * Fstar[i]:
                    mixed_low = False
                if estar[i] * E[j] != Fstar[i] * F[j]:
                    mixed_low = False
            elif i + j > m + 1:
                if not (F[j] * Fstar[i]).is_zero() or not (Fstar[i] * F[j]).is_zero():
                    mixed_high = False
    checks["mixed_products_low"] = mixed_low
    checks["mixed_products_high"] = mixed_high

    if degenerate:
        checks["g_products_by_regime"] = None
        checks["g_natural_lifted"] = None
        checks["lifted_g_products"] = None
    else:
        checks["g_products_by_regime"] = _g_product_regimes_hold(params, tw)
        inner = compositions(n, m)
        glist = list(tw.G)
        gslist = list(tw.Gstar)
        lifted_g = {tau: lifted_sum(list(zip(glist, tau))) for tau in inner}
        lifted_gs = {tau: lifted_sum(list(zip(gslist, tau))) for tau in inner}
        gn_sum = None
        gns_sum = None
        for tau in inner:
            gn_sum = lifted_g[tau] if gn_sum is None else gn_sum + lifted_g[tau]
            gns_sum = lifted_gs[tau] if gns_sum is None else gns_sum + lifted_gs[tau]
        gnat_power = kron_all([tw.Gnat] * n)
        checks["g_natural_lifted"] = gn_sum == gns_sum == gnat_power
        checks["lifted_g_products"] = _lifted_g_products_hold(
            params, tw, lifted_g, lifted_gs
        )

    f_matches = all(F[j] == E[j] for j in range(1, m + 1)) and all(
        Fstar[j] == estar[j] for j in range(1, m + 1)
    )
    checks["f_equals_e_only_in_binary_single_case"] = f_matches == degenerate
    return checks


def _factor_identities_hold(q: tuple[int, ...], tw: TerwBasisSet) -> bool:
    for qj, h, hstar in zip(q, tw.H, tw.Hstar):
        I = factor_identity(qj)
        jt = factor_ones_normalized(qj)
        d = factor_zero_unit(qj)
        z = I - jt - h
        ok = (
            (jt * h).is_zero()
            and (h * jt).is_zero()
            and (d * hstar).is_zero()
            and (hstar * d).is_zero()
            and d * (I - jt) == d * h
            and (I - jt) * d == h * d
            and jt * (I - d) == jt * hstar
            and (I - d) * jt == hstar * jt
            and (I - jt) * (I - d) - h * hstar == z
            and (I - d) * (I - jt) - hstar * h == z
            and I - d - hstar == z
            and z.trace() == qj - 2
            and (z.is_zero() if qj == 2 else not z.is_zero())
        )
        if not ok:
            return False
    return True


def _g_product_regimes_hold(params: SchemeParams, tw: TerwBasisSet) -> bool:
    q = params.q
    m = params.m
    I = [factor_identity(qj) for qj in q]
    jt = [factor_ones_normalized(qj) for qj in q]
    dd = [factor_zero_unit(qj) for qj in q]
    G = (None,) + tw.G
    Gstar = (None,) + tw.Gstar
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            lhs = G[j] * Gstar[i]
            if lhs != Gstar[i] * G[j]:
                return False
            if i + j < m + 1 or (i + j == m + 1 and q[i - 1] == 2):
                if not lhs.is_zero():
                    return False
            elif i + j == m + 1:
                expected = kron_all(jt[: i - 1] + [factor_z(q[i - 1])] + dd[i:])
                if lhs != expected:
                    return False
            else:
                pos = m - j  # 0-based slot of the (I - Jt) factor
                factors = (
                    jt[:pos]
                    + [I[pos] - jt[pos]]
                    + I[pos + 1 : i - 1]
                    + [I[i - 1] - dd[i - 1]]
                    + dd[i:]
                )
                if lhs != kron_all(factors):
                    return False
    return True


def _lifted_g_products_hold(
    params: SchemeParams,
    tw: TerwBasisSet,
    lifted_g: dict[Shape, RatMatrix],
    lifted_gs: dict[Shape, RatMatrix],
) -> bool:
    m = params.m
    grid = [[tw.G[j] * tw.Gstar[i] for j in range(m)] for i in range(m)]
    inner = compositions(params.n, m)
    for lam in inner:
        for mu in inner:
            left = lifted_g[mu] * lifted_gs[lam]
            if left != lifted_gs[lam] * lifted_g[mu]:
                return False
            grids = _theta_enumerate(lam, mu, params.q)
            feasible = _theta_feasible(lam, mu, params.q)
            if feasible != bool(grids):
                return False
            if not grids:
                if not left.is_zero():
                    return False
                continue
            expected = None
            for c in grids:
                term = lifted_sum_grid(grid, c)
                expected = term if expected is None else expected + term
            if left != expected or left.is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# Subspace measurements.
# ---------------------------------------------------------------------------


def primary_subalgebra(
    params: SchemeParams, max_points: int | None = None
) -> tuple[MatrixSubspace, dict[str, bool]]:
    """Span of the sandwiches E*_lam E_0^(n) E*_mu, with its structure checks.

    The report verifies the rational multiplication law
    B(lam,mu) B(nu,rho) = delta(mu,nu) |X^n|^-1 k_mu B(lam,rho) and that the
    dual sandwiches E_lam E*_0^(n) E_mu span the same subspace.
    """
    require_within_bound(params, max_points)
    shapes = enumerate_shapes(params)
    npts = params.num_points
    e0n = idempotent_n(shapes[0], params, max_points)
    duals = {lam: dual_idempotent_n(lam, params, max_points) for lam in shapes}
    sandwich = {
        (lam, mu): duals[lam] * e0n * duals[mu] for lam in shapes for mu in shapes
    }
    sub = span_basis([sandwich[(lam, mu)] for lam in shapes for mu in shapes])
    dim_ok = sub.dimension == params.class_count**2

    law_ok = True
    for mu in shapes:
        for nu in shapes:
            if mu == nu:
                continue
            if not (duals[mu] * duals[nu]).is_zero():
                law_ok = False
    for lam in shapes:
        for mu in shapes:
            for rho in shapes:
                left = sandwich[(lam, mu)] * sandwich[(mu, rho)]
                right = sandwich[(lam, rho)].scale(Fraction(valency_n(mu, params), npts))
                if left != right:
                    law_ok = False

    dual0n = duals[shapes[0]]
    idems = {lam: idempotent_n(lam, params, max_points) for lam in shapes}
    dual_span = span_basis(
        [idems[lam] * dual0n * idems[mu] for lam in shapes for mu in shapes]
    )
    report = {
        "dimension_is_class_count_squared": dim_ok,
        "multiplication_law": law_ok,
        "dual_span_matches": dual_span == sub,
    }
    return sub, report


def terwilliger_closure(
    params: SchemeParams,
    generators: str = "bm",
    max_points: int | None = None,
) -> MatrixSubspace:
    """Unital closure of the adjacency (or idempotent) family plus the dual idempotents."""
    require_within_bound(params, max_points)
    shapes = enumerate_shapes(params)
    if generators == "bm":
        first = [adjacency_n(lam, params, max_points) for lam in shapes]
    elif generators == "idem":
        first = [idempotent_n(lam, params, max_points) for lam in shapes]
    else:
        raise ValueError("generators must be 'bm' or 'idem'")
    duals = [dual_idempotent_n(lam, params, max_points) for lam in shapes]
    return algebra_closure(first + duals, unital=True)


@dataclass(frozen=True)
class ComponentInfo:
    d: int
    dim: int
    commutative: bool

    def to_json(self) -> dict:
        return {"d": self.d, "dim": self.dim, "commutative": self.commutative}


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[ComponentInfo, ...]
    pairwise_annihilating: bool
    sums_match_total: bool
    dim_T: int


def component_dims(
    params: SchemeParams,
    max_points: int | None = None,
    dim_total: int | None = None,
) -> ComponentDecomposition:
    """Dimensions of the closure-generated pieces graded by G-degree d.

    For each d the spanning set is the symmetric interleaving of a lifted
    F-family basis (n - d factors) with a lifted G-family basis (d factors),
    together with the starred twin; the piece is the non-unital closure of
    that set. Cross products between distinct degrees must vanish and the
    dimensions must add up to the full closure dimension.
    """
    require_within_bound(params, max_points)
    m = params.m
    n = params.n
    if m == 1 and params.q[0] == 2:
        raise ValueError("component split is vacuous when the G families vanish")
    tw = terw_basis(params)
    size = params.base_size
    flist = list(tw.F)
    fslist = list(tw.Fstar)
    glist = list(tw.G)
    gslist = list(tw.Gstar)

    def spanning(fam: list[RatMatrix], gfam: list[RatMatrix], d: int) -> list[RatMatrix]:
        us = (
            [lifted_sum(list(zip(fam, sigma))) for sigma in compositions(n - d, m + 1)]
            if n - d
            else []
        )
        ws = (
            [lifted_sum(list(zip(gfam, tau))) for tau in compositions(d, m)]
            if d
            else []
        )
        if not ws:
            return us
        if not us:
            return ws
        return sym_product_spanset(us, n - d, ws, d, size)

    infos = []
    spaces: list[MatrixSubspace | None] = []
    for d in range(n + 1):
        gens = spanning(flist, glist, d) + spanning(fslist, gslist, d)
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            infos.append(ComponentInfo(d=d, dim=0, commutative=True))
            spaces.append(None)
            continue
        comp = algebra_closure(gens, unital=False)
        basis = comp.basis_matrices()
        commutative = all(
            basis[i].commutes_with(basis[j])
            for i in range(len(basis))
            for j in range(i + 1, len(basis))
        )
        infos.append(ComponentInfo(d=d, dim=comp.dimension, commutative=commutative))
        spaces.append(comp)

    annihilating = True
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            if spaces[a] is None or spaces[b] is None:
                continue
            for x in spaces[a].basis_matrices():
                for y in spaces[b].basis_matrices():
                    if not (x * y).is_zero() or not (y * x).is_zero():
                        annihilating = False

    if dim_total is None:
        dim_total = terwilliger_closure(params, "bm", max_points).dimension
    sums_match = sum(info.dim for info in infos) == dim_total
    return ComponentDecomposition(
        components=tuple(infos),
        pairwise_annihilating=annihilating,
        sums_match_total=sums_match,
        dim_T=dim_total,
    )


# ---------------------------------------------------------------------------
# Structure report.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Prediction:
    source: str
    value: int
    agrees: bool

    def to_json(self) -> dict:
        return {"source": self.source, "value": self.value, "agrees": self.agrees}


@dataclass(frozen=True)
class StructureReport:
    params: SchemeParams
    dim_T: int
    dim_primary: int
    components: tuple[ComponentInfo, ...]
    center_dim: int
    predictions: tuple[Prediction, ...]
    identity_suite: dict[str, bool | None]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def all_checks_pass(self) -> bool:
        return all(self.checks.values())

    @property
    def all_predictions_agree(self) -> bool:
        return all(p.agrees for p in self.predictions)

    def to_json(self) -> dict:
        return {
            "params": {"q": list(self.params.q), "n": self.params.n},
            "dim_T": self.dim_T,
            "dim_primary": self.dim_primary,
            "components": [c.to_json() for c in self.components],
            "center_dim": self.center_dim,
            "predictions": [p.to_json() for p in self.predictions],
            "identity_suite": dict(self.identity_suite),
        }


def structure_report(
    params: SchemeParams, max_points: int | None = None
) -> StructureReport:
    """Measure the Terwilliger algebra and compare every printed formula against it.

    Every prediction row carries an agrees flag set by measurement; the
    report records which formulas match the closure oracle and which do
    not, without deciding which printed form was intended.
    """
    require_within_bound(params, max_points)
    m = params.m
    n = params.n
    q = params.q
    degenerate = m == 1 and q[0] == 2

    closure_bm = terwilliger_closure(params, "bm", max_points)
    closure_idem = terwilliger_closure(params, "idem", max_points)
    dim_t = closure_bm.dimension
    primary_sub, primary_report = primary_subalgebra(params, max_points)
    identity_suite = verify_terw_identities(params, max_points)
    center = center_dimension(closure_bm)

    checks: dict[str, bool] = {
        "generator_sets_agree": closure_bm == closure_idem,
        "primary_dimension_is_class_count_squared": primary_report[
            "dimension_is_class_count_squared"
        ],
        "primary_multiplication_law": primary_report["multiplication_law"],
        "primary_dual_span_matches": primary_report["dual_span_matches"],
        "identities_all_pass": all(v for v in identity_suite.values() if v is not None),
    }

    components: tuple[ComponentInfo, ...] = ()
    omega_n = len(_omega_pairs(q, n))
    if not degenerate:
        decomp = component_dims(params, max_points, dim_total=dim_t)
        components = decomp.components
        checks["components_pairwise_annihilating"] = decomp.pairwise_annihilating
        checks["components_sum_to_total"] = decomp.sums_match_total
        top = components[-1]
        checks["top_component_commutative"] = top.commutative
        checks["top_component_dim_is_feasible_pair_count"] = top.dim == omega_n

    lam_info = lambda_set(params)
    lam_size = lam_info.size
    binom = math.comb(lam_size + n - 1, n)
    inner = compositions(n, m)
    theta_total = sum(
        len(_theta_enumerate(lam, mu, q)) for lam in inner for mu in inner
    )

    predictions: list[Prediction] = []

    def add(source: str, value: int, measured: int) -> None:
        predictions.append(Prediction(source=source, value=value, agrees=value == measured))

    def block(d: int) -> int:
        return math.comb(m + n - d, n - d) ** 2

    if degenerate:
        add(
            "dim_T: chain of full blocks of shrinking size",
            sum((n - d + 1) ** 2 for d in range(n + 1)),
            dim_t,
        )
        add("dim_T: primary subalgebra only", params.class_count**2, dim_t)
    else:
        add(
            "dim_T: block total with uniform feasible-pair exponent",
            sum(block(d) for d in range(n + 1)) * omega_n,
            dim_t,
        )
        add(
            "dim_T: block total with per-degree feasible-pair exponent",
            sum(block(d) * len(_omega_pairs(q, d)) for d in range(n + 1)),
            dim_t,
        )
        if m == 1 or m == 2 or (m == 3 and q[1] == 2) or n == 1:
            add(
                "dim_T: block total with multiset-count exponent",
                sum(block(d) * math.comb(lam_size + d - 1, d) for d in range(n + 1)),
                dim_t,
            )

    depth_one_dim = (
        dim_t if n == 1 else terwilliger_closure(SchemeParams(q, 1), "bm", max_points).dimension
    )
    add(
        "dim_T: symmetric power of the measured depth-one dimension",
        math.comb(depth_one_dim + n - 1, n),
        dim_t,
    )
    if n == 1:
        add(
            "dim_T: full block plus one loop per surviving pair",
            (m + 1) ** 2 + m * (m - 1) // 2 + lam_info.epsilon,
            dim_t,
        )

    add("support-grid count: multiset binomial", binom, theta_total)
    add("feasible-pair count: multiset binomial", binom, omega_n)

    if components:
        d0 = components[0].dim
        add("depth-zero component: class count squared", params.class_count**2, d0)
        add(
            "depth-zero component: symmetric power of the base primary dimension",
            math.comb((m + 1) ** 2 + n - 1, n),
            d0,
        )

    return StructureReport(
        params=params,
        dim_T=dim_t,
        dim_primary=primary_sub.dimension,
        components=components,
        center_dim=center,
        predictions=tuple(predictions),
        identity_suite=identity_suite,
        checks=checks,
    )
