"""Cohomology of compact duals and the image/kernel of the Matsushima map.

``SpDualRing(g)`` is ``Q[u_1..u_g] / ((1 + u_1 + ... + u_g)(1 - u_1 + ... + (-1)^g u_g) - 1)``
with ``weight(u_i) = i`` (cohomological degree ``2i``). Normal forms come from
exhaustive elimination: in each weight the ideal is spanned by all monomial
multiples of the homogeneous relation components, its reduced echelon form
is computed exactly, and the monomials that are not pivots form the basis
of the quotient.

The SL side is purely combinatorial: the Matsushima image is an exterior
algebra on odd-indexed Borel classes ``cbar_i`` of degree ``2i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .exactalg import Echelon, Generator, GradedPoly, Ring, nullspace, square_free_monomials

MAX_G = 8


class RingConstructionError(RuntimeError):
    pass


class SpDualRing:
    """Truncation-free presentation of H*(Sp(g)/U(g); Q), built once and then read-only."""

    def __init__(self, g: int, max_weight: int | None = None):
        if not 1 <= g <= MAX_G:
            raise ValueError(f"g must be in 1..{MAX_G}, got {g}")
        self.g = g
        self.ring = Ring.even(*((f"u{i}", i) for i in range(1, g + 1)))
        self.top_weight = g * (g + 1) // 2
        self.relations = self._relation_components()
        self._monomials = {}
        self._ideal = {}
        self._standard = {}
        self.max_weight = self.top_weight if max_weight is None else max(max_weight, self.top_weight)
        for d in range(self.max_weight + 1):
            self._build_weight(d)

    def _relation_components(self) -> dict:
        R = self.ring
        plus = R.one()
        minus = R.one()
        for i in range(1, self.g + 1):
            u = R.gen(f"u{i}")
            plus = plus + u
            minus = minus + u * (-1) ** i
        rel = plus * minus - 1
        comps = {}
        for d in sorted(rel.weights()):
            comps[d] = rel.component(d)
        return comps

    def _build_weight(self, d: int):
        monos = self.ring.monomials_of_weight(d)
        # Pivot on the latest monomial in canonical order so that the standard
        # monomials (non-pivots) are the earliest ones.
        ech = Echelon(order={m: -i for i, m in enumerate(monos)})
        # I_d = sum_i u_i * I_(d - i) + (relation component of weight d)
        for i, gen in enumerate(self.ring.generators):
            w = gen.weight
            if d - w < 0 or (d - w) not in self._ideal:
                continue
            shift = [0] * len(self.ring)
            shift[i] = 1
            for row in self._ideal[d - w].basis():
                if ech.rank == len(monos):
                    break
                ech.add({tuple(a + b for a, b in zip(m, shift)): c for m, c in row.items()})
        if d in self.relations:
            ech.add(self.relations[d].terms)
        self._monomials[d] = monos
        self._ideal[d] = ech
        self._standard[d] = [m for m in monos if m not in ech.rows]

    # -- queries ------------------------------------------------------------

    def graded_dims(self) -> list:
        return [len(self._standard[d]) for d in range(self.top_weight + 1)]

    @property
    def total_dim(self) -> int:
        return sum(self.graded_dims())

    def quotient_dim(self, d: int) -> int:
        """Dimension in weight ``d``; weights beyond ``max_weight`` build a larger ring."""
        if d < 0:
            return 0
        if d <= self.max_weight:
            return len(self._standard[d])
        return SpDualRing(self.g, max_weight=d).quotient_dim(d)

    def standard_monomials(self, d: int) -> list:
        return list(self._standard.get(d, []))

    def normal_form(self, poly: GradedPoly) -> GradedPoly:
        """Reduce ``poly`` modulo the ideal; the result uses only standard monomials."""
        if poly.ring != self.ring:
            raise ValueError("polynomial is not in this ring")
        out = self.ring.zero()
        for d in sorted(poly.weights()):
            if d > self.max_weight:
                continue
            reduced = self._ideal[d].reduce(poly.component(d).terms)
            out = out + GradedPoly(self.ring, reduced)
        return out

    def coordinates(self, poly: GradedPoly, d: int) -> tuple:
        """Coordinates of the weight-``d`` part of ``poly`` in the standard basis."""
        nf = self.normal_form(poly.component(d))
        return tuple(nf.coeff(m) for m in self._standard.get(d, []))

    def is_zero(self, poly: GradedPoly) -> bool:
        return self.normal_form(poly).is_zero()

    def u(self, i: int) -> GradedPoly:
        return self.ring.gen(f"u{i}")

    def monomial(self, exps: dict) -> GradedPoly:
        return self.ring.monomial(exps)

    def socle_generator(self) -> GradedPoly:
        """Normal form of ``u_1 u_2 ... u_g``."""
        prod = self.ring.one()
        for i in range(1, self.g + 1):
            prod = prod * self.u(i)
        return self.normal_form(prod)

    def pairing(self, a: GradedPoly, b: GradedPoly) -> Fraction:
        """Top-weight coefficient of ``a*b`` relative to ``u_1...u_g``."""
        top = self.top_weight
        (s_mono,) = self._standard[top]
        scale = self.socle_generator().coeff(s_mono)
        if scale == 0:
            raise RingConstructionError("u_1...u_g vanishes in the quotient")
        prod = self.normal_form((a * b).component(top))
        return prod.coeff(s_mono) / scale

    def pairing_matrix(self, d: int) -> list:
        """Pairings between standard bases of weights ``d`` and ``top - d``."""
        left = [GradedPoly(self.ring, {m: 1}) for m in self._standard[d]]
        right = [GradedPoly(self.ring, {m: 1}) for m in self._standard[self.top_weight - d]]
        return [[self.pairing(a, b) for b in right] for a in left]


@lru_cache(maxsize=None)
def sp_dual_ring(g: int) -> SpDualRing:
    return SpDualRing(g)


def _as_ring(g_or_ring) -> SpDualRing:
    return g_or_ring if isinstance(g_or_ring, SpDualRing) else sp_dual_ring(g_or_ring)


def _matrix_rank(rows) -> int:
    ech = Echelon()
    for r in rows:
        ech.add({i: c for i, c in enumerate(r) if c})
    return ech.rank


def is_invertible(matrix) -> bool:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        return False
    return _matrix_rank(matrix) == n


@dataclass(frozen=True)
class TautBasis:
    monomials: tuple  # GradedPoly monomials
    coordinates: tuple  # (weight, coordinate tuple) per monomial

    def __len__(self):
        return len(self.monomials)


@dataclass(frozen=True)
class KernelSpan:
    monomials: tuple
    normal_forms: tuple
    dim: int


def _square_free(R: SpDualRing, names) -> list:
    return [GradedPoly(R.ring, {m: 1}) for m in square_free_monomials(R.ring, names)]


def _independent(R: SpDualRing, polys) -> int:
    """Rank of a list of quotient elements (weight by weight)."""
    by_weight: dict = {}
    for p in polys:
        for d in p.weights():
            by_weight.setdefault(d, []).append(R.coordinates(p, d))
    total = 0
    for d, rows in by_weight.items():
        total += _matrix_rank(rows)
    return total


def vdg_basis(g) -> TautBasis:
    """Square-free monomials in ``u_1..u_(g-1)``, checked independent in the quotient."""
    R = _as_ring(g)
    monos = _square_free(R, [f"u{i}" for i in range(1, R.g)])
    coords = tuple((m.weight(), R.coordinates(m, m.weight())) for m in monos)
    # each monomial is homogeneous, so independence is a per-weight rank check
    if _independent(R, monos) != len(monos):
        raise RingConstructionError("square-free monomials are dependent in the quotient")
    return TautBasis(tuple(monos), coords)


def matsushima_kernel_sp(g) -> KernelSpan:
    """Span of the square-free monomials divisible by ``u_g``."""
    R = _as_ring(g)
    monos = [m * R.u(R.g) for m in _square_free(R, [f"u{i}" for i in range(1, R.g)])]
    nfs = tuple(R.normal_form(m) for m in monos)
    return KernelSpan(tuple(monos), nfs, _independent(R, nfs))


def poincare_pairing(g, a: GradedPoly, b: GradedPoly) -> Fraction:
    return _as_ring(g).pairing(a, b)


def gorenstein_check(g) -> bool:
    """Every complementary pairing matrix is square and invertible."""
    R = _as_ring(g)
    return all(is_invertible(R.pairing_matrix(d)) for d in range(R.top_weight + 1))


def orthogonal_complement_of_ideal(R: SpDualRing, generator: GradedPoly, d: int) -> list:
    """Basis (coordinate vectors) of ``{a in Q_d : <a, generator*b> = 0 for all b}``."""
    top = R.top_weight
    w = generator.weight()
    std_d = R.standard_monomials(d)
    partners = []
    e = top - d - w
    if e >= 0:
        for m in R.standard_monomials(e):
            partners.append(R.normal_form(generator * GradedPoly(R.ring, {m: 1})))
    basis_d = [GradedPoly(R.ring, {m: 1}) for m in std_d]
    rows = []
    for y in partners:
        row = {i: R.pairing(x, y) for i, x in enumerate(basis_d)}
        rows.append({i: c for i, c in row.items() if c})
    return nullspace(rows, len(std_d))


def kernel_orthogonality_check(g) -> bool:
    """The kernel span equals the orthogonal complement of ``(u_g)``, weight by weight."""
    R = _as_ring(g)
    kernel = matsushima_kernel_sp(R)
    for d in range(R.top_weight + 1):
        complement = orthogonal_complement_of_ideal(R, R.u(R.g), d)
        ker_rows = [R.coordinates(nf, d) for nf in kernel.normal_forms if d in nf.weights()]
        ker_rank = _matrix_rank(ker_rows)
        if ker_rank != len(complement):
            return False
        if _matrix_rank(ker_rows + complement) != ker_rank:
            return False
    return True


def odd_generator_dims(max_weight: int) -> list:
    """Graded dimensions of a free polynomial algebra on generators of weight 1, 3, 5, ..."""
    dims = [1] + [0] * max_weight
    for w in range(1, max_weight + 1, 2):
        for d in range(w, max_weight + 1):
            dims[d] += dims[d - w]
    return dims


def sp_stable_series_check(g: int, max_weight: int) -> bool:
    R = sp_dual_ring(g)
    free = odd_generator_dims(max_weight)
    return all(R.quotient_dim(d) == free[d] for d in range(max_weight + 1))


def stable_range(g: int, limit: int | None = None) -> int:
    """Largest ``w`` with ``sp_stable_series_check(g, w)`` true (searched up to ``limit``)."""
    R = sp_dual_ring(g)
    limit = R.top_weight if limit is None else limit
    free = odd_generator_dims(limit)
    w = -1
    for d in range(limit + 1):
        if R.quotient_dim(d) != free[d]:
            break
        w = d
    return w


# -- SL ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SLImageAlgebra:
    n: int
    indices: tuple  # odd i with 3 <= i <= bound(n)

    @property
    def degrees(self) -> tuple:
        return tuple(2 * i - 1 for i in self.indices)

    @property
    def ring(self) -> Ring:
        return Ring(Generator(f"cbar{i}", 2 * i - 1, odd=True) for i in self.indices)

    def poincare_polynomial(self) -> list:
        """Coefficients of ``prod (1 + s^deg)``."""
        coeffs = [1]
        for deg in self.degrees:
            new = coeffs + [0] * deg
            for d, c in enumerate(coeffs):
                new[d + deg] += c
            coeffs = new
        return coeffs

    def dim_in_degree(self, d: int) -> int:
        pp = self.poincare_polynomial()
        return pp[d] if 0 <= d < len(pp) else 0

    def is_nonzero_in_degree(self, d: int) -> bool:
        return self.dim_in_degree(d) > 0

    def has_generator_degree(self, d: int) -> bool:
        return d in self.degrees

    def product_class(self, indices) -> GradedPoly:
        """Product of the named Borel classes in the exterior algebra (zero if any is absent)."""
        R = self.ring
        if not all(i in self.indices for i in indices):
            return R.zero()
        out = R.one()
        for i in indices:
            out = out * R.gen(f"cbar{i}")
        return out


def sl_generator_bound(n: int) -> int:
    return n - 1 if n % 2 else n - 3


def sl_image(n: int) -> SLImageAlgebra:
    if n < 2:
        raise ValueError("n must be at least 2")
    bound = sl_generator_bound(n)
    return SLImageAlgebra(n, tuple(i for i in range(3, bound + 1, 2)))


def exterior_dims_by_subsets(degrees, max_degree: int) -> list:
    """Count square-free subsets of ``degrees`` by degree sum (brute force)."""
    counts = [0] * (max_degree + 1)
    for r in range(len(degrees) + 1):
        for combo in combinations(degrees, r):
            s = sum(combo)
            if s <= max_degree:
                counts[s] += 1
    return counts
