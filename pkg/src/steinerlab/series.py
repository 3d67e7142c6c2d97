"""Polynomial spaces on the line and the plane, linear series, products,
filling ratios, and the sumset combinatorics behind them.

Line polynomials are stored dehomogenized in one affine coordinate u, so
the space of degree <= a polynomials has dimension a + 1.  Plane forms
are dense coefficient vectors over the degree-d monomials in x, y, z in
graded-lex order.  All series live over a prime field; see linalg.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .linalg import DEFAULT_PRIME, FieldMatrix, RandomSource, GenericityError, random_matrix

# exhaustive-search bounds: subsets of {0..a-1} are enumerated, so these
# keep runs at seconds scale while covering every case of interest
MAX_EXHAUSTIVE_A = 14
MAX_MONOMIAL_A = 12


@dataclass(frozen=True)
class PolySpace:
    """The full space of polynomials of a given degree on P^1 or P^2.

    variables is 1 (affine coordinate u) or 3 (plane forms in x, y, z).
    """

    variables: int
    degree: int

    def __post_init__(self):
        if self.variables not in (1, 3):
            raise ValueError("variables must be 1 (line) or 3 (plane)")
        if self.degree < -1:
            raise ValueError("degree must be >= -1")

    @property
    def dim(self) -> int:
        if self.degree < 0:
            return 0
        if self.variables == 1:
            return self.degree + 1
        return (self.degree + 1) * (self.degree + 2) // 2


def line_space(degree: int) -> PolySpace:
    return PolySpace(1, degree)


def plane_space(degree: int) -> PolySpace:
    return PolySpace(3, degree)


@lru_cache(maxsize=None)
def plane_monomials(degree: int) -> tuple[tuple[int, int], ...]:
    """(i, j) exponents of x^i y^j z^(d-i-j), graded-lex with x > y > z."""
    return tuple(
        (i, j) for i in range(degree, -1, -1) for j in range(degree - i, -1, -1)
    )


@lru_cache(maxsize=None)
def plane_monomial_index(degree: int) -> dict[tuple[int, int], int]:
    return {m: k for k, m in enumerate(plane_monomials(degree))}


def multiply_coeffs(space_f: PolySpace, f, space_g: PolySpace, g, p: int) -> list[int]:
    """Coefficient vector of the product f*g in the degree-sum space."""
    if space_f.variables != space_g.variables:
        raise ValueError("mixed variable sets")
    out_deg = space_f.degree + space_g.degree
    if space_f.variables == 1:
        out = [0] * (out_deg + 1)
        for i, fi in enumerate(f):
            if fi == 0:
                continue
            for j, gj in enumerate(g):
                if gj:
                    out[i + j] = (out[i + j] + fi * gj) % p
        return out
    idx = plane_monomial_index(out_deg)
    mons_f = plane_monomials(space_f.degree)
    mons_g = plane_monomials(space_g.degree)
    out = [0] * len(plane_monomials(out_deg))
    for (i1, j1), fi in zip(mons_f, f):
        if fi == 0:
            continue
        for (i2, j2), gj in zip(mons_g, g):
            if gj:
                k = idx[(i1 + i2, j1 + j2)]
                out[k] = (out[k] + fi * gj) % p
    return out


def multiplication_matrix(space_f: PolySpace, f, in_degree: int, p: int) -> np.ndarray:
    """Matrix of multiplication by f from degree in_degree into the sum degree.

    Columns are indexed by the monomial basis of the input space, rows by
    the output space, so the matrix applied to a coefficient vector of g
    gives the coefficients of f*g.
    """
    in_space = PolySpace(space_f.variables, in_degree)
    out_space = PolySpace(space_f.variables, space_f.degree + in_degree)
    mat = np.zeros((out_space.dim, in_space.dim), dtype=np.int64)
    if in_degree < 0:
        return mat
    if space_f.variables == 1:
        col = np.arange(in_space.dim)
        for e, fe in enumerate(f):
            if fe:
                mat[col + e, col] = fe % p
        return mat
    idx = plane_monomial_index(out_space.degree)
    mons_f = plane_monomials(space_f.degree)
    mons_in = plane_monomials(in_degree)
    for (i1, j1), fe in zip(mons_f, f):
        if fe == 0:
            continue
        for c, (i2, j2) in enumerate(mons_in):
            mat[idx[(i1 + i2, j1 + j2)], c] = fe % p
    return mat


def evaluate_coeffs(space: PolySpace, coeffs, point: tuple[int, ...], p: int) -> int:
    """Value of the polynomial at a point (affine u, or projective x:y:z)."""
    if space.variables == 1:
        (u,) = point
        acc = 0
        for e in range(space.degree, -1, -1):
            acc = (acc * u + coeffs[e]) % p
        return acc
    x, y, z = point
    d = space.degree
    xs = [1] * (d + 1)
    ys = [1] * (d + 1)
    zs = [1] * (d + 1)
    for e in range(1, d + 1):
        xs[e] = xs[e - 1] * x % p
        ys[e] = ys[e - 1] * y % p
        zs[e] = zs[e - 1] * z % p
    acc = 0
    for (i, j), c in zip(plane_monomials(d), coeffs):
        if c:
            acc = (acc + c * xs[i] % p * ys[j] % p * zs[d - i - j]) % p
    return acc


class LinearSeries:
    """A subspace of a polynomial space, given by an independent basis."""

    def __init__(self, ambient: PolySpace, basis: FieldMatrix):
        if basis.cols != ambient.dim:
            raise ValueError("basis vector length must match the ambient dimension")
        if basis.rank() != basis.rows:
            raise ValueError("basis vectors must be linearly independent")
        self.ambient = ambient
        self.basis = basis

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def p(self) -> int:
        return self.basis.p

    @classmethod
    def spanned_by(cls, ambient: PolySpace, rows, p: int = DEFAULT_PRIME) -> "LinearSeries":
        """Series spanned by the given (possibly dependent) vectors."""
        mat = FieldMatrix(rows, p, cols=ambient.dim)
        return cls(ambient, mat.row_space_basis())

    @classmethod
    def full(cls, ambient: PolySpace, p: int = DEFAULT_PRIME) -> "LinearSeries":
        return cls(ambient, FieldMatrix.identity(ambient.dim, p))

    @classmethod
    def monomial_span(cls, ambient: PolySpace, exponents, p: int = DEFAULT_PRIME) -> "LinearSeries":
        """Line series spanned by the monomials u^e for e in exponents."""
        if ambient.variables != 1:
            raise ValueError("monomial spans are supported on the line")
        exps = sorted(set(exponents))
        if exps and (exps[0] < 0 or exps[-1] > ambient.degree):
            raise ValueError("exponent outside the ambient degree range")
        mat = np.zeros((len(exps), ambient.dim), dtype=np.int64)
        for r, e in enumerate(exps):
            mat[r, e] = 1
        return cls(ambient, FieldMatrix(mat, p))

    def monomial_exponents(self) -> list[int]:
        """Exponent set when every basis vector is a single monomial."""
        exps = []
        for i in range(self.dim):
            row = self.basis.array[i]
            nz = np.nonzero(row)[0]
            if nz.size != 1:
                raise ValueError("series is not spanned by monomials")
            exps.append(int(nz[0]))
        return sorted(exps)

    @property
    def eta(self) -> Fraction:
        """Fraction of the ambient space that the series fills."""
        return Fraction(self.dim, self.ambient.dim)

    def dilate(self, d: int) -> "LinearSeries":
        """Exponent dilation u -> u^d; a line series of degree a*d results."""
        if self.ambient.variables != 1:
            raise ValueError("dilation is defined for line series")
        if d < 1:
            raise ValueError("dilation factor must be >= 1")
        out = PolySpace(1, self.ambient.degree * d)
        mat = np.zeros((self.dim, out.dim), dtype=np.int64)
        mat[:, ::d] = self.basis.array
        return LinearSeries(out, FieldMatrix(mat, self.p))

    def __repr__(self):
        return f"LinearSeries(dim={self.dim} in {self.ambient})"


def product_series(v: LinearSeries, w: LinearSeries) -> LinearSeries:
    """The span of all pairwise products of elements of v and w."""
    if v.ambient.variables != w.ambient.variables:
        raise ValueError("mixed variable sets")
    if v.dim == 0 or w.dim == 0:
        raise ValueError("empty series have no product")
    if v.p != w.p:
        raise ValueError("mixed moduli")
    out_space = PolySpace(v.ambient.variables, v.ambient.degree + w.ambient.degree)
    rows = []
    for i in range(v.dim):
        f = v.basis.row(i)
        for j in range(w.dim):
            rows.append(multiply_coeffs(v.ambient, f, w.ambient, w.basis.row(j), v.p))
    return LinearSeries.spanned_by(out_space, rows, v.p)


def product_dim(v: LinearSeries, w: LinearSeries) -> int:
    """Dimension of the span of pairwise products."""
    return product_series(v, w).dim


def filling_ratio(v: LinearSeries, w: LinearSeries) -> Fraction:
    """dim(v*w) / dim(w), exactly."""
    return Fraction(product_dim(v, w), w.dim)


# ---------------------------------------------------------------------------
# sumset combinatorics


@dataclass(frozen=True)
class SumsetInstance:
    """Sumset form of a filling-ratio question for a monomial net.

    For a < b <= 2a the net {1, u^c, u^(b-a)} with c = a mod (b-a) acts on
    a monomial subspace with exponent set S by S + {0, c, b-a}.
    """

    a: int
    b: int
    subset: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if not (0 < self.a < self.b <= 2 * self.a):
            raise ValueError("need a < b <= 2a")
        if any(s < 0 or s >= self.a for s in self.subset):
            raise ValueError("subset must lie in {0..a-1}")

    @property
    def c(self) -> int:
        return self.a % (self.b - self.a)

    @property
    def shifts(self) -> tuple[int, ...]:
        return tuple(sorted({0, self.c, self.b - self.a}))


def sumset_mu(inst: SumsetInstance) -> Fraction:
    """|S + {0, c, b-a}| / |S| for the instance's subset S."""
    if not inst.subset:
        raise ValueError("subset must be nonempty")
    image = {s + t for s in inst.subset for t in inst.shifts}
    return Fraction(len(image), len(inst.subset))


def _min_shift_ratio(a: int, shifts) -> tuple[Fraction, tuple[int, ...]]:
    """Minimum of |S + shifts| / |S| over nonempty S in {0..a-1}, by bitmask."""
    shifts = sorted(set(shifts))
    best: Fraction | None = None
    best_mask = 0
    for mask in range(1, 1 << a):
        image = 0
        for t in shifts:
            image |= mask << t
        ratio = Fraction(image.bit_count(), mask.bit_count())
        if best is None or ratio < best:
            best = ratio
            best_mask = mask
    witness = tuple(i for i in range(a) if best_mask >> i & 1)
    return best, witness


def verify_lemma_ba2(a: int, b: int, max_a: int = MAX_EXHAUSTIVE_A) -> tuple[Fraction, tuple[int, ...]]:
    """Exhaustive minimum of the sumset ratio over all nonempty subsets.

    For 1 < b/a <= 2 the minimum is always >= b/a; callers assert that.
    Returns (minimum, witness subset).
    """
    if not (0 < a < b <= 2 * a):
        raise ValueError("need 1 < b/a <= 2")
    if a > max_a:
        raise ValueError(f"a = {a} exceeds the exhaustive bound {max_a}")
    inst = SumsetInstance(a, b)
    return _min_shift_ratio(a, inst.shifts)


def monomial_series(a: int, b: int, n_dim: int, p: int = DEFAULT_PRIME) -> LinearSeries:
    """An explicit monomial series of dimension <= N whose products fill.

    Valid for 1 < b/a <= N-1.  Writing b - a = q*a + r with remainder in
    (0, a], the series is {1, u^a, ..., u^((q-1)a)} plus u^(qa) times the
    three-monomial net for the pair (a, a + r).
    """
    if a < 1 or not a < b or Fraction(b, a) > n_dim - 1:
        raise ValueError("need 1 < b/a <= N-1")
    d = b - a
    q = (d - 1) // a
    r = d - q * a  # 0 < r <= a
    base = {0, a % r, r}
    exps = {i * a for i in range(q)} | {q * a + e for e in base}
    series = LinearSeries.monomial_span(line_space(d), exps, p)
    if series.dim > n_dim:
        raise AssertionError("constructed series exceeds the dimension bound")
    return series


def reduction_step(a: int, b: int, n_dim: int) -> tuple[int, int]:
    """The descent (a, b) -> (N*a - b, a), defined for N-1 < b/a <= N."""
    ratio = Fraction(b, a)
    if not n_dim - 1 < ratio <= n_dim:
        raise ValueError("need N-1 < b/a <= N")
    return n_dim * a - b, a


def random_series(ambient: PolySpace, dim: int, rng: RandomSource, p: int = DEFAULT_PRIME) -> LinearSeries:
    """A uniformly random subspace of the given dimension; redraws the
    basis matrix on the (measure ~ dim/p) event of rank deficiency."""
    if dim > ambient.dim or dim < 0:
        raise ValueError("series dimension exceeds the ambient space")
    for attempt in range(100):
        mat = random_matrix(dim, ambient.dim, rng if attempt == 0 else rng.derive(attempt), p)
        if mat.rank() == dim:
            return LinearSeries(ambient, mat)
    raise GenericityError("random series kept hitting rank-deficient draws")


def min_filling_monomial(v: LinearSeries, a: int, max_a: int = MAX_MONOMIAL_A) -> tuple[Fraction, tuple[int, ...]]:
    """Exact minimum of the filling ratio of v over all nonempty monomial
    subspaces of the degree a-1 space, with the exponent-set witness.

    Only valid as a global minimum over all subspaces when v itself is
    spanned by monomials (leading terms only improve the ratio).
    """
    if a > max_a:
        raise ValueError(f"a = {a} exceeds the exhaustive bound {max_a}")
    if a < 1:
        raise ValueError("need a >= 1")
    exps = v.monomial_exponents()
    return _min_shift_ratio(a, exps)


def witness_low_filling(
    v: LinearSeries, a: int, b: int, rng: RandomSource
) -> tuple[Fraction, LinearSeries]:
    """Heuristic search for a subspace with small filling ratio under v.

    Draws one random a x b matrix with entries in v, computes the kernel
    of the induced map on coefficient blocks, and spans a subspace by the
    entries of the kernel vectors.  Best effort only: when the kernel is
    empty the full space (ratio b/a at most) is returned.
    """
    if v.ambient.variables != 1 or v.ambient.degree != b - a:
        raise ValueError("series must consist of degree b-a line polynomials")
    if a < 1:
        raise ValueError("need a >= 1")
    p = v.p
    entries = [[random_element(v, rng) for _ in range(b)] for _ in range(a)]
    big = np.zeros((a * b, b * a), dtype=np.int64)
    for i in range(a):
        for j in range(b):
            block = multiplication_matrix(v.ambient, entries[i][j], a - 1, p)
            big[i * b : (i + 1) * b, j * a : (j + 1) * a] = block
    kernel = FieldMatrix(big, p).kernel_basis()
    w_space = line_space(a - 1)
    if not kernel:
        w = LinearSeries.full(w_space, p)
        return filling_ratio(v, w), w
    rows = []
    for vec in kernel:
        for j in range(b):
            rows.append(vec[j * a : (j + 1) * a])
    w = LinearSeries.spanned_by(w_space, rows, p)
    return filling_ratio(v, w), w


def random_element(v: LinearSeries, rng: RandomSource) -> list[int]:
    """A random element of the series (uniform coefficient vector)."""
    coeffs = rng.integers(v.dim, v.p)
    out = np.zeros(v.ambient.dim, dtype=np.int64)
    for c, i in zip(coeffs, range(v.dim)):
        out = (out + c * v.basis.array[i]) % v.p
    return [int(x) for x in out]
