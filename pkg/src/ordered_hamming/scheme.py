"""Ordered Hamming scheme built from first principles.

Points of X^n are n blocks of mixed-radix coordinates; the relation of a
pair (x, y) is the shape of x - y, taken blockwise mod q_j. Adjacency
matrices here come straight from that definition, with no spectral input,
so they can serve as an independent cross-check for the lifted
constructions elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .exact_linalg import RatMatrix

DEFAULT_MAX_POINTS = 256

Shape = tuple[int, ...]
Point = tuple[tuple[int, ...], ...]


class SizeBound(ValueError):
    """|X^n| exceeds the configured bound for matrix-producing operations."""


class AxiomViolation(ValueError):
    """A quantity that must be relation-constant is not."""


@dataclass(frozen=True)
class SchemeParams:
    """Alphabet sizes q_1..q_m (each >= 2) and word length n >= 1."""

    q: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))
        if not self.q:
            raise ValueError("need at least one alphabet")
        if any(x < 2 for x in self.q):
            raise ValueError("alphabet sizes must be at least 2")
        if self.n < 1:
            raise ValueError("word length must be at least 1")

    @property
    def m(self) -> int:
        return len(self.q)

    @property
    def base_size(self) -> int:
        return math.prod(self.q)

    @property
    def num_points(self) -> int:
        return self.base_size**self.n

    @property
    def class_count(self) -> int:
        return math.comb(self.m + self.n, self.n)

    def reversed(self) -> SchemeParams:
        return SchemeParams(tuple(reversed(self.q)), self.n)

    def label(self) -> str:
        return f"X({self.m},{self.n};{','.join(map(str, self.q))})"


def require_within_bound(params: SchemeParams, max_points: int | None) -> None:
    bound = DEFAULT_MAX_POINTS if max_points is None else max_points
    if params.num_points > bound:
        raise SizeBound(
            f"{params.label()} has {params.num_points} points, over the bound "
            f"{bound}; raise --max-points to allow it"
        )


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    """All tuples of `parts` non-negative integers summing to `total`.

    Ordered lexicographically decreasing, so (total, 0, ..., 0) comes first.
    """
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_shapes(params: SchemeParams) -> list[Shape]:
    """All shapes of points in X^n; count is C(m+n, n)."""
    return list(compositions(params.n, params.m + 1))


def iter_points(params: SchemeParams) -> list[Point]:
    """Every point of X^n in flat-index order (last coordinate fastest)."""
    blocks = [tuple(b) for b in product(*(range(qj) for qj in params.q))]
    return [tuple(p) for p in product(blocks, repeat=params.n)]


def point_index(x: Point, params: SchemeParams) -> int:
    idx = 0
    for block in x:
        b = 0
        for coord, qj in zip(block, params.q):
            b = b * qj + coord
        idx = idx * params.base_size + b
    return idx


def point_sub(x: Point, y: Point, params: SchemeParams) -> Point:
    return tuple(
        tuple((a - b) % qj for a, b, qj in zip(bx, by, params.q))
        for bx, by in zip(x, y)
    )


def shape_of(x: Point, params: SchemeParams) -> Shape:
    """Shape of a point: entry j counts blocks whose last nonzero coordinate sits at j."""
    m = params.m
    lam = [0] * (m + 1)
    for block in x:
        last = 0
        for j in range(m, 0, -1):
            if block[j - 1] != 0:
                last = j
                break
        lam[last] += 1
    return tuple(lam)


def relation_matrix(
    lam: Shape, params: SchemeParams, max_points: int | None = None
) -> RatMatrix:
    """0/1 matrix of the relation indexed by shape `lam`, by brute force."""
    if lam not in set(compositions(params.n, params.m + 1)):
        raise ValueError(f"{lam} is not a shape for {params.label()}")
    require_within_bound(params, max_points)
    pts = iter_points(params)
    rows = []
    for x in pts:
        rows.append([int(shape_of(point_sub(x, y, params), params) == lam) for y in pts])
    return RatMatrix(rows)


def relation_matrices(
    params: SchemeParams, max_points: int | None = None
) -> dict[Shape, RatMatrix]:
    """All relation matrices keyed by shape, built in one sweep over pairs."""
    require_within_bound(params, max_points)
    pts = iter_points(params)
    npts = len(pts)
    shapes = enumerate_shapes(params)
    grids = {lam: [[0] * npts for _ in range(npts)] for lam in shapes}
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            grids[shape_of(point_sub(x, y, params), params)][i][j] = 1
    return {lam: RatMatrix(grids[lam]) for lam in shapes}


@dataclass(frozen=True)
class AxiomReport:
    """One flag per defining axiom of a symmetric association scheme."""

    diagonal_relation: bool
    partition: bool
    symmetric: bool
    constants_well_defined: bool
    constants_commute: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.diagonal_relation
            and self.partition
            and self.symmetric
            and self.constants_well_defined
            and self.constants_commute
        )

    def to_json(self) -> dict:
        return {
            "R1_diagonal_relation": self.diagonal_relation,
            "R2_partition": self.partition,
            "R3_symmetric": self.symmetric,
            "R4_constants_well_defined": self.constants_well_defined,
            "R5_constants_commute": self.constants_commute,
            "all_pass": self.all_pass,
        }


def _decompose_product(
    mats: dict[Shape, RatMatrix], i: Shape, j: Shape
) -> dict[Shape, int] | None:
    """Write A_i A_j as a relation-constant combination, or None if impossible."""
    prod = mats[i] * mats[j]
    coeffs: dict[Shape, int] = {}
    recon = None
    for k, ak in mats.items():
        # sample the first pair in relation k
        sample = None
        for r, row in enumerate(ak.rows):
            for c, v in enumerate(row):
                if v:
                    sample = (r, c)
                    break
            if sample:
                break
        if sample is None:
            continue
        p = prod[sample]
        if p.denominator != 1:
            return None
        coeffs[k] = int(p)
        if p:
            term = ak.scale(p)
            recon = term if recon is None else recon + term
    if recon is None:
        recon = RatMatrix.zeros(prod.nrows)
    if recon != prod:
        return None
    return coeffs


def verify_axioms(params: SchemeParams, max_points: int | None = None) -> AxiomReport:
    """Exhaustively check the five association-scheme axioms."""
    mats = relation_matrices(params, max_points)
    shapes = enumerate_shapes(params)
    npts = params.num_points
    diag = mats[shapes[0]] == RatMatrix.identity(npts)
    total = None
    for lam in shapes:
        total = mats[lam] if total is None else total + mats[lam]
    partition = total == RatMatrix.ones(npts) and all(
        mats[lam].is_zero_one() for lam in shapes
    )
    symmetric = all(mats[lam].is_symmetric() for lam in shapes)
    well_defined = True
    commute = True
    tables: dict[tuple[Shape, Shape], dict[Shape, int]] = {}
    for i in shapes:
        for j in shapes:
            coeffs = _decompose_product(mats, i, j)
            if coeffs is None:
                well_defined = False
            else:
                tables[(i, j)] = coeffs
    if well_defined:
        commute = all(tables[(i, j)] == tables[(j, i)] for i in shapes for j in shapes)
    return AxiomReport(diag, partition, symmetric, well_defined, commute)


def intersection_numbers(
    params: SchemeParams, max_points: int | None = None
) -> dict[tuple[Shape, Shape, Shape], int]:
    """Table of p^k_{ij}, sampled per relation and verified against A_i A_j."""
    mats = relation_matrices(params, max_points)
    shapes = enumerate_shapes(params)
    table: dict[tuple[Shape, Shape, Shape], int] = {}
    for i in shapes:
        for j in shapes:
            coeffs = _decompose_product(mats, i, j)
            if coeffs is None:
                raise AxiomViolation(
                    f"A_{i} A_{j} is not relation-constant on {params.label()}"
                )
            for k, p in coeffs.items():
                table[(i, j, k)] = p
    return table


def intersection_table_json(table: dict[tuple[Shape, Shape, Shape], int]) -> list[dict]:
    return [
        {"i": list(i), "j": list(j), "k": list(k), "p": p}
        for (i, j, k), p in table.items()
    ]
