"""Franke injectivity ranges for arithmetic subgroups of SO(p,q), Sp(2n) and SL(n).

The Matsushima homomorphism is injective in degrees up to the minimum,
over maximal parabolic subgroups R, of dim N_R (the unipotent radical).
Maximal parabolics are stabilizers of a single isotropic subspace (SO, Sp)
or of a single proper subspace (SL) of dimension k, and the closed forms

    SO(p,q):  k (p + q - 2k) + k (k - 1) / 2      1 <= k <= p
    Sp(2n):   2k (n - k) + k + k (k - 1) / 2      1 <= k <= n
    SL(n):    k (n - k)                           1 <= k <= n - 1

are checked against a nullspace computation on the Lie algebra of N_k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .exactalg import GradedPoly, Ring, nullspace
from .genera import ph_component

MAX_ORACLE_SIZE = 30

PLUS_RING = Ring.even(("p1_plus", 1))


class GroupSpecError(ValueError):
    pass


class OracleSizeError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    family: str  # "so", "sp" or "sl"
    params: tuple

    def __post_init__(self):
        fam = self.family.lower()
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        if fam == "so":
            if len(self.params) != 2:
                raise GroupSpecError("SO needs two parameters p,q")
            p, q = self.params
            if not 1 <= p <= q:
                raise GroupSpecError(f"SO(p,q) needs 1 <= p <= q, got p={p}, q={q}")
        elif fam in ("sp", "sl"):
            if len(self.params) != 1:
                raise GroupSpecError(f"{fam.upper()} needs one parameter n")
            if self.params[0] < 1:
                raise GroupSpecError(f"n must be positive, got {self.params[0]}")
        else:
            raise GroupSpecError(f"unknown group family {self.family!r}")

    @classmethod
    def so(cls, p: int, q: int) -> "GroupSpec":
        return cls("so", (p, q))

    @classmethod
    def sp(cls, n: int) -> "GroupSpec":
        return cls("sp", (n,))

    @classmethod
    def sl(cls, n: int) -> "GroupSpec":
        return cls("sl", (n,))

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``so:p,q``, ``sp:n`` or ``sl:n``."""
        m = re.fullmatch(r"\s*(so|sp|sl)\s*:\s*(\d+)\s*(?:,\s*(\d+)\s*)?", text, re.IGNORECASE)
        if not m:
            raise GroupSpecError(f"cannot parse group spec {text!r}; expected so:p,q | sp:n | sl:n")
        fam = m.group(1).lower()
        nums = [int(g) for g in m.groups()[1:] if g is not None]
        return cls(fam, tuple(nums))

    def __str__(self):
        return f"{self.family}:{','.join(map(str, self.params))}"

    @property
    def dimension(self) -> int:
        """Size of the defining matrices."""
        if self.family == "so":
            return sum(self.params)
        if self.family == "sp":
            return 2 * self.params[0]
        return self.params[0]

    def k_range(self) -> range:
        if self.family == "so":
            return range(1, self.params[0] + 1)
        if self.family == "sp":
            return range(1, self.params[0] + 1)
        return range(1, self.params[0])

    def gram_matrix(self):
        """``diag(I_p, -I_q)`` for SO, ``J_n`` for Sp, ``None`` for SL."""
        N = self.dimension
        if self.family == "so":
            p = self.params[0]
            return [[(1 if i < p else -1) if i == j else 0 for j in range(N)] for i in range(N)]
        if self.family == "sp":
            n = self.params[0]
            J = [[0] * N for _ in range(N)]
            for i in range(n):
                J[i][n + i] = 1
                J[n + i][i] = -1
            return J
        return None


@dataclass(frozen=True)
class ParabolicInfo:
    k: int
    dim_N: int


@dataclass(frozen=True)
class FrankeBound:
    bound: int
    argmin_k: int
    table: tuple  # ParabolicInfo for every admissible k


def _check_k(spec: GroupSpec, k: int):
    if k not in spec.k_range():
        r = spec.k_range()
        raise ValueError(f"k={k} out of range {r.start}..{r.stop - 1} for {spec}")


def unipotent_dim(spec: GroupSpec, k: int) -> int:
    _check_k(spec, k)
    if spec.family == "so":
        p, q = spec.params
        return k * (p + q - 2 * k) + k * (k - 1) // 2
    if spec.family == "sp":
        n = spec.params[0]
        return 2 * k * (n - k) + k + k * (k - 1) // 2
    n = spec.params[0]
    return k * (n - k)


def franke_bound(spec: GroupSpec) -> FrankeBound:
    """Minimum of ``unipotent_dim`` over admissible k (ties go to the smallest k)."""
    table = tuple(ParabolicInfo(k, unipotent_dim(spec, k)) for k in spec.k_range())
    if not table:
        raise ValueError(f"{spec} has no proper parabolic subgroups")
    best = min(table, key=lambda info: (info.dim_N, info.k))
    return FrankeBound(best.dim_N, best.k, table)


# -- nullspace oracle ------------------------------------------------------------

def _adapted_basis(spec: GroupSpec, k: int):
    """Columns of the change-of-basis matrix and the block sizes of the flag."""
    N = spec.dimension

    def unit(i, s=1):
        v = [0] * N
        v[i] = s
        return v

    def add(a, b):
        return [x + y for x, y in zip(a, b)]

    if spec.family == "so":
        p, q = spec.params
        e = lambda i: unit(i - 1)          # e_1..e_p
        f = lambda i: unit(p + i - 1)      # f_1..f_q
        u = lambda i: add(e(i), f(i))
        v = lambda i: add(e(i), unit(p + i - 1, -1))
        cols = (
            [u(i) for i in range(1, k + 1)]
            + [u(i) for i in range(k + 1, p + 1)]
            + [f(i) for i in range(p + 1, q + 1)]
            + [v(i) for i in range(k + 1, p + 1)]
            + [v(i) for i in range(1, k + 1)]
        )
        return cols, (k, N - 2 * k, k)
    if spec.family == "sp":
        n = spec.params[0]
        e = lambda i: unit(i - 1)
        f = lambda i: unit(n + i - 1)
        cols = (
            [e(i) for i in range(1, k + 1)]
            + [e(i) for i in range(k + 1, n + 1)]
            + [f(i) for i in range(k + 1, n + 1)]
            + [f(i) for i in range(1, k + 1)]
        )
        return cols, (k, N - 2 * k, k)
    return [unit(i) for i in range(N)], (k, N - k)


def oracle_unipotent_dim(spec: GroupSpec, k: int) -> int:
    """dim N_k as the nullspace dimension of the linearized defining equations.

    Unknowns are the entries of X above the block diagonal of the flag
    (X acts trivially on each graded quotient). For SO and Sp the equations
    are ``X^T G + G X = 0`` with G the form in the adapted basis; for SL the
    trace condition is vacuous on strictly block-upper matrices.
    """
    _check_k(spec, k)
    N = spec.dimension
    if N > MAX_ORACLE_SIZE:
        raise OracleSizeError(f"{spec} gives {N}x{N} matrices; the oracle stops at {MAX_ORACLE_SIZE}")
    cols, blocks = _adapted_basis(spec, k)
    block_of = []
    for b, size in enumerate(blocks):
        block_of.extend([b] * size)
    unknowns = [(r, c) for r in range(N) for c in range(N) if block_of[r] < block_of[c]]
    index = {rc: n for n, rc in enumerate(unknowns)}

    form = spec.gram_matrix()
    if form is None:
        return len(unknowns)
    # Gram matrix of the adapted basis: G[a][b] = col_a^T form col_b
    G = [
        [sum(ca[i] * form[i][j] * cb[j] for i in range(N) for j in range(N)) for cb in cols]
        for ca in cols
    ]
    equations = []
    for i in range(N):
        for j in range(i, N):
            # (X^T G + G X)[i][j] = sum_r X[r][i] G[r][j] + sum_c G[i][c] X[c][j]
            row: dict = {}
            for r in range(N):
                n = index.get((r, i))
                if n is not None and G[r][j]:
                    row[n] = row.get(n, 0) + G[r][j]
            for c in range(N):
                n = index.get((c, j))
                if n is not None and G[i][c]:
                    row[n] = row.get(n, 0) + G[i][c]
            if any(row.values()):
                equations.append(row)
    return len(nullspace(equations, len(unknowns)))


# -- x classes -------------------------------------------------------------------

def x_class(i: int) -> GradedPoly:
    """``x_4i = 2 ph_4i(eta_+)`` where eta_+ is the rank-3 summand.

    A rank-3 bundle has only ``p_1``, so all higher ``p_j`` are set to zero.
    """
    if i < 1:
        raise ValueError("x classes start at i = 1")
    ph = ph_component(i, n_classes=i)
    assignment = {name: PLUS_RING.zero() for name in ph.ring.names}
    assignment["p1"] = PLUS_RING.gen("p1_plus")
    return ph.substitute(assignment, target=PLUS_RING) * 2
