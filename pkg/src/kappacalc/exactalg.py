"""Exact sparse graded polynomials over the rationals.

A :class:`Ring` is an ordered list of weighted generators, each either even
(commuting) or odd (anticommuting, squares to zero). A :class:`GradedPoly`
is a sparse map from exponent tuples to :class:`fractions.Fraction`
coefficients. Zero coefficients are never stored, so two polynomials are
equal exactly when their term maps agree.

Odd generators follow the Koszul sign rule with monomials written in
generator declaration order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]
Monomial = tuple  # exponent tuple, one entry per ring generator


class RingMismatchError(ValueError):
    pass


class HomogeneityError(ValueError):
    pass


class SubstitutionError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    weight: int
    odd: bool = False

    def __post_init__(self):
        if not self.name.isidentifier():
            raise ValueError(f"generator name must be an identifier: {self.name!r}")
        if self.weight < 1:
            raise ValueError(f"generator weight must be positive: {self.name}")


class Ring:
    """An ordered set of generators; polynomials over it are :class:`GradedPoly`."""

    __slots__ = ("generators", "_index")

    def __init__(self, generators: Iterable[Generator]):
        gens = tuple(generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self.generators = gens
        self._index = {g.name: i for i, g in enumerate(gens)}

    @classmethod
    def even(cls, *spec: tuple) -> "Ring":
        """Shorthand: ``Ring.even(("p1", 1), ("p2", 2))``."""
        return cls(Generator(name, weight) for name, weight in spec)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        inner = ", ".join(f"{g.name}:{g.weight}{'*' if g.odd else ''}" for g in self.generators)
        return f"Ring({inner})"

    def __len__(self):
        return len(self.generators)

    @property
    def names(self) -> tuple:
        return tuple(g.name for g in self.generators)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a generator of {self!r}") from None

    def weight(self, mono: Monomial) -> int:
        return sum(e * g.weight for e, g in zip(mono, self.generators))

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def zero(self) -> "GradedPoly":
        return GradedPoly(self, {})

    def one(self) -> "GradedPoly":
        return self.const(1)

    def const(self, c: Scalar) -> "GradedPoly":
        return GradedPoly(self, {self.unit_monomial(): Fraction(c)})

    def gen(self, name: str) -> "GradedPoly":
        exps = [0] * len(self.generators)
        exps[self.index(name)] = 1
        return GradedPoly(self, {tuple(exps): Fraction(1)})

    def gens(self) -> tuple:
        return tuple(self.gen(n) for n in self.names)

    def monomial(self, exponents: Mapping[str, int], coeff: Scalar = 1) -> "GradedPoly":
        exps = [0] * len(self.generators)
        for name, e in exponents.items():
            exps[self.index(name)] = e
        mono = tuple(exps)
        self._check_monomial(mono)
        return GradedPoly(self, {mono: Fraction(coeff)})

    def _check_monomial(self, mono: Monomial):
        if len(mono) != len(self.generators):
            raise ValueError(f"monomial {mono} has wrong length for {self!r}")
        for e, g in zip(mono, self.generators):
            if e < 0 or (g.odd and e > 1):
                raise ValueError(f"invalid exponent {e} for generator {g.name}")

    def monomials_of_weight(self, d: int) -> list:
        """All valid exponent tuples of total weight ``d``, in canonical order."""
        out = []
        gens = self.generators

        def rec(i, remaining, acc):
            if i == len(gens):
                if remaining == 0:
                    out.append(tuple(acc))
                return
            g = gens[i]
            top = remaining // g.weight
            if g.odd:
                top = min(top, 1)
            for e in range(top, -1, -1):
                acc.append(e)
                rec(i + 1, remaining - e * g.weight, acc)
                acc.pop()

        if d >= 0:
            rec(0, d, [])
        out.sort(key=self.sort_key)
        return out

    def sort_key(self, mono: Monomial) -> tuple:
        # weight first, then lexicographic in declaration order, larger exponents first
        return (self.weight(mono), tuple(-e for e in mono))

    def mono_to_text(self, mono: Monomial, names: Mapping[str, str] | None = None) -> str:
        parts = []
        for e, g in zip(mono, self.generators):
            if e == 0:
                continue
            name = names.get(g.name, g.name) if names else g.name
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def mono_from_dict(self, exponents: Mapping[str, int]) -> Monomial:
        exps = [0] * len(self.generators)
        for name, e in exponents.items():
            exps[self.index(name)] = int(e)
        mono = tuple(exps)
        self._check_monomial(mono)
        return mono

    def mono_to_dict(self, mono: Monomial) -> dict:
        return {g.name: e for e, g in zip(mono, self.generators) if e}


def _koszul_product(ring: Ring, m1: Monomial, m2: Monomial):
    """Return ``(sign, monomial)`` for ``m1*m2``; sign 0 if an odd generator repeats."""
    sign = 1
    odd_seen_later = 0  # number of odd generators of m1 strictly after the current index
    gens = ring.generators
    # Moving each odd factor of m2 leftwards past the odd factors of m1 that follow it.
    for i in range(len(gens) - 1, -1, -1):
        if not gens[i].odd:
            continue
        if m2[i]:
            if m1[i]:
                return 0, None
            if odd_seen_later % 2:
                sign = -sign
        if m1[i]:
            odd_seen_later += 1
    return sign, tuple(a + b for a, b in zip(m1, m2))


class GradedPoly:
    """Immutable sparse polynomial over a :class:`Ring` with rational coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(mono)] = c
        self.ring = ring
        self._terms = {m: clean[m] for m in sorted(clean, key=ring.sort_key)}
        self._hash = None

    # -- access -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator:
        return iter(self._terms.items())

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, mono: Union[Monomial, Mapping[str, int]]) -> Fraction:
        if isinstance(mono, Mapping):
            mono = self.ring.mono_from_dict(mono)
        return self._terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(self.ring.unit_monomial(), Fraction(0))

    def weights(self) -> set:
        return {self.ring.weight(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def weight(self):
        """Weight of a homogeneous polynomial; ``None`` for zero."""
        ws = self.weights()
        if not ws:
            return None
        if len(ws) > 1:
            raise HomogeneityError(f"polynomial is not homogeneous: weights {sorted(ws)}")
        return ws.pop()

    def generators_used(self) -> set:
        used = set()
        for mono in self._terms:
            used.update(g.name for e, g in zip(mono, self.ring.generators) if e)
        return used

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GradedPoly(self.ring, {m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        has_odd = any(g.odd for g in ring.generators)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                if has_odd:
                    sign, m = _koszul_product(ring, m1, m2)
                    if not sign:
                        continue
                    c = c1 * c2 if sign > 0 else -c1 * c2
                else:
                    m = tuple(a + b for a, b in zip(m1, m2))
                    c = c1 * c2
                out[m] = out.get(m, 0) + c
        return GradedPoly(ring, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(self._terms.items())))
        return self._hash

    # -- graded structure -------------------------------------------------

    def component(self, d: int) -> "GradedPoly":
        w = self.ring.weight
        return GradedPoly(self.ring, {m: c for m, c in self._terms.items() if w(m) == d})

    def truncate(self, max_weight: int) -> "GradedPoly":
        w = self.ring.weight
        return GradedPoly(self.ring, {m: c for m, c in self._terms.items() if w(m) <= max_weight})

    def substitute(self, assignment: Mapping[str, "GradedPoly"], target: Ring | None = None) -> "GradedPoly":
        return substitute(self, assignment, target)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at rational values; odd generators are not allowed."""
        total = Fraction(0)
        gens = self.ring.generators
        for mono, c in self._terms.items():
            term = c
            for e, g in zip(mono, gens):
                if e:
                    if g.odd:
                        raise ValueError("cannot evaluate odd generators at scalars")
                    term *= Fraction(values[g.name]) ** e
            total += term
        return total

    # -- serialization ----------------------------------------------------

    def to_text(self, names: Mapping[str, str] | None = None) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (mono, c) in enumerate(self._terms.items()):
            mono_s = self.ring.mono_to_text(mono, names)
            mag = abs(c)
            if mono_s == "1":
                body = _frac_text(mag)
            elif mag == 1:
                body = mono_s
            else:
                body = f"{_frac_text(mag)}*{mono_s}"
            if i == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"GradedPoly({self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "generators": [
                {"name": g.name, "weight": g.weight, "parity": "odd" if g.odd else "even"}
                for g in self.ring.generators
            ],
            "terms": [
                {"monomial": self.ring.mono_to_dict(m), "num": str(c.numerator), "den": str(c.denominator)}
                for m, c in self._terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Union[str, Mapping]) -> "GradedPoly":
        if isinstance(data, str):
            data = json.loads(data)
        ring = Ring(
            Generator(g["name"], int(g["weight"]), g.get("parity", "even") == "odd")
            for g in data["generators"]
        )
        terms = {}
        for t in data["terms"]:
            mono = ring.mono_from_dict(t["monomial"])
            terms[mono] = terms.get(mono, 0) + Fraction(int(t["num"]), int(t["den"]))
        return cls(ring, terms)


def _frac_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def frac_text(c: Scalar) -> str:
    """Canonical ``num/den`` text for a rational (``num`` alone if integral)."""
    c = Fraction(c)
    return f"-{_frac_text(-c)}" if c < 0 else _frac_text(c)


# -- operations in functional form -------------------------------------------

def poly_add(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring!r} vs {b.ring!r}")
    return a + b


def poly_mul(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring!r} vs {b.ring!r}")
    return a * b


def graded_component(a: GradedPoly, d: int) -> GradedPoly:
    return a.component(d)


def substitute(a: GradedPoly, assignment: Mapping[str, GradedPoly], target: Ring | None = None) -> GradedPoly:
    """Replace generators of ``a`` by polynomials and expand.

    Every generator occurring in ``a`` must be assigned. Each image must be
    homogeneous, and all nonzero images must rescale weights by one common
    factor, so that homogeneous input gives homogeneous output. The zero
    polynomial is accepted as an image of any weight.
    """
    images = {}
    ring_out = target
    scale = None
    for name, img in assignment.items():
        if name not in a.ring.names:
            raise SubstitutionError(f"{name!r} is not a generator of {a.ring!r}")
        if isinstance(img, (int, Fraction)):
            if img != 0:
                raise SubstitutionError(f"nonzero scalar image for {name!r}")
            images[name] = None
            continue
        if ring_out is None:
            ring_out = img.ring
        elif img.ring != ring_out:
            raise RingMismatchError(f"images live in different rings: {img.ring!r} vs {ring_out!r}")
        if img.is_zero():
            images[name] = img
            continue
        if not img.is_homogeneous():
            raise SubstitutionError(f"image of {name!r} is not weight-homogeneous")
        ratio = Fraction(img.weight(), a.ring.generators[a.ring.index(name)].weight)
        if scale is None:
            scale = ratio
        elif ratio != scale:
            raise SubstitutionError(
                f"image of {name!r} rescales weight by {ratio}, others by {scale}"
            )
        images[name] = img
    missing = a.generators_used() - set(images)
    if missing:
        raise SubstitutionError(f"unassigned generators: {sorted(missing)}")
    if ring_out is None:
        raise SubstitutionError("cannot infer the target ring; pass target=")
    zero = ring_out.zero()
    images = {k: (zero if v is None else v) for k, v in images.items()}

    # cache powers of each image
    powers: dict = {}

    def power(name, e):
        key = (name, e)
        if key not in powers:
            powers[key] = images[name] ** e
        return powers[key]

    result = zero
    gens = a.ring.generators
    for mono, c in a.items():
        term = ring_out.const(c)
        for e, g in zip(mono, gens):
            if e:
                term = term * power(g.name, e)
                if term.is_zero():
                    break
        result = result + term
    return result


# -- exact linear algebra -------------------------------------------------------

class Echelon:
    """Incrementally built, fully reduced row echelon form over the rationals.

    Rows are sparse dicts ``column -> Fraction``. ``order`` maps every column
    that may occur to a sort rank; the pivot of a new row is its nonzero column
    of smallest rank. Each pivot is normalized to 1 and eliminated from every
    other row, so the stored rows form the unique reduced echelon basis of the
    span for the given column order.
    """

    def __init__(self, order: Mapping | None = None):
        self._order = order
        self.rows: dict = {}  # pivot column -> row

    def _rank_of(self, col):
        return col if self._order is None else self._order[col]

    def reduce(self, vec: Mapping) -> dict:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        rows = self.rows
        # Stored rows carry no pivot column but their own, so subtracting them
        # never creates new pivot entries; one pass over v's support suffices.
        for piv in [k for k in v if k in rows]:
            c = v.get(piv)
            if c:
                for k, rc in rows[piv].items():
                    nv = v.get(k, 0) - c * rc
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        return v

    def add(self, vec: Mapping) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v, key=self._rank_of)
        inv = 1 / v[piv]
        v = {k: c * inv for k, c in v.items()}
        for row in self.rows.values():
            c = row.get(piv)
            if c:
                for k, vc in v.items():
                    nv = row.get(k, 0) - c * vc
                    if nv:
                        row[k] = nv
                    else:
                        del row[k]
        self.rows[piv] = v
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows, key=self._rank_of)

    def basis(self) -> list:
        return [dict(self.rows[p]) for p in self.pivots()]

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def rank(rows: Iterable[Mapping]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows: Sequence[Mapping], ncols: int) -> list:
    """Basis of ``{x in Q^ncols : row . x = 0 for all rows}``, as dense lists."""
    ech = Echelon()
    for r in rows:
        ech.add(r)
    pivots = set(ech.rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for piv, row in ech.rows.items():
            x[piv] = -row.get(f, Fraction(0))
        basis.append(x)
    return basis


@dataclass(frozen=True)
class SpanReduction:
    """Reduced basis of a span together with the coordinates of each input in it."""

    basis: tuple
    coordinates: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def span_reduce(vectors: Sequence[GradedPoly], degree: int, ring: Ring | None = None) -> SpanReduction:
    """Reduced echelon basis for the span of homogeneous polynomials of one weight.

    Columns are monomials in canonical order and the first nonzero column is
    the pivot. Because the basis is fully reduced with unit pivots, the
    coordinates of a vector in the span are its coefficients at the pivots.
    """
    vectors = list(vectors)
    if not vectors:
        return SpanReduction((), ())
    ring = ring or vectors[0].ring
    for v in vectors:
        if v.ring != ring:
            raise RingMismatchError(f"{v.ring!r} vs {ring!r}")
        if not v.is_zero() and v.weights() != {degree}:
            raise HomogeneityError(f"{v} is not homogeneous of weight {degree}")
    ech = Echelon(order={m: i for i, m in enumerate(ring.monomials_of_weight(degree))})
    for v in vectors:
        ech.add(v.terms)
    pivots = ech.pivots()
    basis = tuple(GradedPoly(ring, ech.rows[p]) for p in pivots)
    coords = tuple(tuple(v.coeff(p) for p in pivots) for v in vectors)
    return SpanReduction(basis, coords)


def graded_ring_monomials(ring: Ring, max_weight: int) -> dict:
    return {d: ring.monomials_of_weight(d) for d in range(max_weight + 1)}


def square_free_monomials(ring: Ring, names: Sequence[str]) -> list:
    """All products of distinct generators from ``names`` (including 1), canonical order."""
    out = []
    for bits in _cartesian((0, 1), repeat=len(names)):
        exps = {n: 1 for n, b in zip(names, bits) if b}
        out.append(ring.mono_from_dict(exps))
    out.sort(key=ring.sort_key)
    return out
