"""Hom-Lie and Hom-associative algebras, Yau twists, and the operator ``B_alpha``.

Algebras are given by structure constants on a fixed basis ``x_0..x_{d-1}``:
``[x_i, x_j] = sum_k c[k][i][j] x_k`` (likewise ``mu``).  ``L' = k + L`` uses
the basis ``u_0 = (1, 0)`` followed by ``u_{i+1} = (0, x_i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hybe import HomModule, HybeCandidate, NotInvertibleError
from .linalg import (Matrix, ShapeError, SingularMatrixError, Tensor3, first_difference, invert,
                     kron, permutation_tau, unflatten)
from .report import InvariantError, Report
from .scalar import ONE, ZERO, format_scalar, inverse, lam

__all__ = [
    "HomModule", "HomLieAlgebra", "HomAssociativeAlgebra",
    "check_skew_symmetry", "check_multiplicativity", "check_hom_jacobi", "check_hom_associativity",
    "check_hom_lie", "check_hom_assoc", "yau_twist_lie", "yau_twist_associative",
    "commutator_hom_lie", "lie_prime", "build_B_alpha", "invert_B_alpha",
    "sl2", "sl2_lambda", "alpha_lambda", "gl2", "matrix_algebra", "abelian", "upper_triangular",
    "dual_numbers",
]


@dataclass(frozen=True)
class HomLieAlgebra:
    """Bracket structure constants plus a twisting map.

    Construction only validates shapes; :func:`check_hom_lie` verifies the
    axioms and :meth:`require_valid` turns a failing report into an error.
    """

    bracket: Tensor3
    alpha: Matrix
    basis: tuple[str, ...] | None = None

    def __post_init__(self):
        d = self.bracket.out_dim
        if self.bracket.shape != (d, d, d):
            raise ShapeError(f"bracket must be d x d x d, got {self.bracket.shape}")
        if self.alpha.shape != (d, d):
            raise ShapeError(f"alpha must be {d}x{d}, got {self.alpha.shape}")
        if self.basis is not None and len(self.basis) != d:
            raise ShapeError("one basis name per dimension")

    @property
    def dim(self) -> int:
        return self.bracket.out_dim

    def bracket_matrix(self) -> Matrix:
        return self.bracket.as_matrix()

    def require_valid(self) -> "HomLieAlgebra":
        report = check_hom_lie(self)
        if not report.passed:
            raise InvariantError("not a Hom-Lie algebra", report)
        return self


@dataclass(frozen=True)
class HomAssociativeAlgebra:
    mu: Tensor3
    alpha: Matrix
    basis: tuple[str, ...] | None = None

    def __post_init__(self):
        d = self.mu.out_dim
        if self.mu.shape != (d, d, d):
            raise ShapeError(f"mu must be d x d x d, got {self.mu.shape}")
        if self.alpha.shape != (d, d):
            raise ShapeError(f"alpha must be {d}x{d}, got {self.alpha.shape}")
        if self.basis is not None and len(self.basis) != d:
            raise ShapeError("one basis name per dimension")

    @property
    def dim(self) -> int:
        return self.mu.out_dim

    def require_valid(self) -> "HomAssociativeAlgebra":
        report = check_hom_assoc(self)
        if not report.passed:
            raise InvariantError("not a Hom-associative algebra", report)
        return self


def _pair_witness(lhs: Matrix, rhs: Matrix, d: int, n: int):
    diff = first_difference(lhs, rhs)
    if diff is None:
        return None
    return {"basis": list(unflatten(diff[1], d, n)),
            "lhs": [format_scalar(x) for x in lhs.column_vector(diff[1])],
            "rhs": [format_scalar(x) for x in rhs.column_vector(diff[1])]}


def _product(structure) -> Tensor3:
    return structure.bracket if isinstance(structure, HomLieAlgebra) else structure.mu


def check_skew_symmetry(L: HomLieAlgebra) -> Report:
    m = L.bracket_matrix()
    flipped = m @ permutation_tau(L.dim)
    return Report().add("skew-symmetry", m == -flipped, _pair_witness(m, -flipped, L.dim, 2))


def check_multiplicativity(structure) -> Report:
    """``alpha(x y) == alpha(x) alpha(y)`` on all basis pairs."""
    m = _product(structure).as_matrix()
    a = structure.alpha
    lhs = a @ m
    rhs = m @ kron(a, a)
    return Report().add("multiplicativity", lhs == rhs, _pair_witness(lhs, rhs, structure.dim, 2))


def check_hom_jacobi(L: HomLieAlgebra) -> Report:
    """Cyclic sum ``[[x,y],a z] + [[z,x],a y] + [[y,z],a x]`` on every basis triple."""
    d = L.dim
    c = L.bracket.entries
    a = L.alpha
    alpha_cols = [[(r, a[r, i]) for r in range(d) if a[r, i]] for i in range(d)]
    # nonzero parts of [x_i, x_j]
    br = [[[(k, c[k][i][j]) for k in range(d) if c[k][i][j]] for j in range(d)] for i in range(d)]

    def outer(i, j, k):
        out = [ZERO] * d
        for p, x in br[i][j]:
            for q, y in alpha_cols[k]:
                for r, z in br[p][q]:
                    out[r] = out[r] + x * y * z
        return out

    for i in range(d):
        for j in range(d):
            for k in range(d):
                total = [u + v + w for u, v, w in zip(outer(i, j, k), outer(k, i, j), outer(j, k, i))]
                if any(total):
                    return Report().add("hom-jacobi", False, {
                        "basis": [i, j, k], "value": [format_scalar(x) for x in total]})
    return Report().add("hom-jacobi", True)


def check_hom_associativity(A: HomAssociativeAlgebra) -> Report:
    """``mu(a x, mu(y, z)) == mu(mu(x, y), a z)`` on every basis triple."""
    m = A.mu.as_matrix()
    lhs = m @ kron(A.alpha, m)
    rhs = m @ kron(m, A.alpha)
    return Report().add("hom-associativity", lhs == rhs, _pair_witness(lhs, rhs, A.dim, 3))


def check_hom_lie(L: HomLieAlgebra) -> Report:
    return check_skew_symmetry(L).extend(check_multiplicativity(L)).extend(check_hom_jacobi(L))


def check_hom_assoc(A: HomAssociativeAlgebra) -> Report:
    return check_multiplicativity(A).extend(check_hom_associativity(A))


def _require_identity(alpha: Matrix, what: str):
    if alpha != Matrix.identity(alpha.rows):
        raise InvariantError(f"{what} must be untwisted (alpha = Id)")


def _endomorphism_report(product: Tensor3, alpha: Matrix) -> Report:
    m = product.as_matrix()
    lhs = alpha @ m
    rhs = m @ kron(alpha, alpha)
    return Report().add("endomorphism", lhs == rhs, _pair_witness(lhs, rhs, product.out_dim, 2))


def yau_twist_lie(L: HomLieAlgebra, alpha: Matrix) -> HomLieAlgebra:
    """Twist a Lie algebra along an endomorphism: ``[x, y]_a = a[x, y]``."""
    _require_identity(L.alpha, "Yau twist input")
    if alpha.shape != (L.dim, L.dim):
        raise ShapeError(f"alpha must be {L.dim}x{L.dim}")
    report = _endomorphism_report(L.bracket, alpha)
    if not report.passed:
        raise InvariantError("alpha is not a Lie algebra endomorphism", report)
    twisted = Tensor3.from_matrix(alpha @ L.bracket_matrix(), L.dim, L.dim)
    return HomLieAlgebra(twisted, alpha, L.basis)


def yau_twist_associative(A: HomAssociativeAlgebra, alpha: Matrix) -> HomAssociativeAlgebra:
    """Twist an associative algebra along an endomorphism: ``mu_a = a o mu``."""
    _require_identity(A.alpha, "Yau twist input")
    if alpha.shape != (A.dim, A.dim):
        raise ShapeError(f"alpha must be {A.dim}x{A.dim}")
    report = _endomorphism_report(A.mu, alpha)
    if not report.passed:
        raise InvariantError("alpha is not an algebra endomorphism", report)
    twisted = Tensor3.from_matrix(alpha @ A.mu.as_matrix(), A.dim, A.dim)
    return HomAssociativeAlgebra(twisted, alpha, A.basis)


def commutator_hom_lie(A: HomAssociativeAlgebra) -> HomLieAlgebra:
    A.require_valid()
    m = A.mu.as_matrix()
    bracket = m - m @ permutation_tau(A.dim)
    return HomLieAlgebra(Tensor3.from_matrix(bracket, A.dim, A.dim), A.alpha, A.basis)


# -- L' = k + L and B_alpha ------------------------------------------------------

def _inclusion(d: int) -> Matrix:
    """``L -> L'``, ``x -> (0, x)``."""
    return Matrix.from_entries(d + 1, d, {(i + 1, i): ONE for i in range(d)})


def _extend(alpha: Matrix) -> Matrix:
    d = alpha.rows
    entries = {(0, 0): ONE}
    for i in range(d):
        for j in range(d):
            if alpha[i, j]:
                entries[(i + 1, j + 1)] = alpha[i, j]
    return Matrix.from_entries(d + 1, d + 1, entries)


def lie_prime(L: HomLieAlgebra) -> HomModule:
    labels = None if L.basis is None else ("1",) + tuple(L.basis)
    return HomModule(L.dim + 1, _extend(L.alpha), labels)


def build_B_alpha(L: HomLieAlgebra, *, check: bool = True) -> HybeCandidate:
    """``(a,x) (x) (b,y) -> (b, a y) (x) (a, a x) + (1,0) (x) (0, [x,y])`` on ``L' (x) L'``."""
    if check:
        L.require_valid()
    d = L.dim
    a1 = _extend(L.alpha)
    inc = _inclusion(d)
    proj = inc.T
    u0 = Matrix.column([ONE] + [ZERO] * d)
    swap = permutation_tau(d + 1) @ kron(a1, a1)
    bracket_term = kron(u0, inc) @ L.bracket_matrix() @ kron(proj, proj)
    return HybeCandidate(swap + bracket_term, a1)


def invert_B_alpha(L: HomLieAlgebra, *, check: bool = True) -> HybeCandidate:
    """Closed-form inverse ``(b, a^-1 y) (x) (a, a^-1 x) + (0, a^-2 [x,y]) (x) (1,0)``,
    paired with the extension of ``alpha^-1``."""
    if check:
        L.require_valid()
    try:
        a_inv = invert(L.alpha)
    except SingularMatrixError as exc:
        raise NotInvertibleError("alpha", exc.rank, exc.size) from None
    d = L.dim
    a1_inv = _extend(a_inv)
    inc = _inclusion(d)
    proj = inc.T
    u0 = Matrix.column([ONE] + [ZERO] * d)
    swap = permutation_tau(d + 1) @ kron(a1_inv, a1_inv)
    bracket_term = kron(inc, u0) @ a_inv @ a_inv @ L.bracket_matrix() @ kron(proj, proj)
    return HybeCandidate(swap + bracket_term, a1_inv)


# -- fixtures ------------------------------------------------------------------

def _lie_from_brackets(d: int, brackets: dict, basis=None, alpha: Matrix | None = None) -> HomLieAlgebra:
    """``brackets[(i, j)] = {k: c}`` for ``i < j``; skew partners are filled in."""
    c = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for (i, j), terms in brackets.items():
        for k, v in terms.items():
            c[k][i][j] = c[k][i][j] + v
            c[k][j][i] = c[k][j][i] - v
    return HomLieAlgebra(Tensor3(c), alpha if alpha is not None else Matrix.identity(d),
                         tuple(basis) if basis else None)


def sl2() -> HomLieAlgebra:
    """Classical sl(2) on the basis (h, e, f)."""
    return _lie_from_brackets(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}, "hef")


def alpha_lambda(value=None) -> Matrix:
    """``h -> h, e -> l e, f -> l^-1 f``; symbolic in ``l`` unless a value is given."""
    t = lam() if value is None else Fraction(value)
    if not t:
        raise ValueError("alpha_lambda needs a nonzero parameter")
    return Matrix.diag([ONE, t, inverse(t)])


def sl2_lambda(value=None) -> HomLieAlgebra:
    """The Yau twist of sl(2) along ``alpha_lambda``, over Q(l) by default."""
    return yau_twist_lie(sl2(), alpha_lambda(value))


def matrix_algebra(n: int = 2) -> HomAssociativeAlgebra:
    """Full ``n x n`` matrix algebra on the basis ``E_ij`` (row-major)."""
    d = n * n
    mu = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                # E_ab E_bc = E_ac
                mu[a * n + c][a * n + b][b * n + c] = ONE
    names = tuple(f"E{a+1}{b+1}" for a in range(n) for b in range(n))
    return HomAssociativeAlgebra(Tensor3(mu), Matrix.identity(d), names)


def gl2() -> HomLieAlgebra:
    return commutator_hom_lie(matrix_algebra(2))


def abelian(d: int, alpha: Matrix | None = None) -> HomLieAlgebra:
    return HomLieAlgebra(Tensor3.zeros(d, d, d), alpha if alpha is not None else Matrix.identity(d))


def upper_triangular() -> HomAssociativeAlgebra:
    """Upper-triangular 2x2 matrices on the basis (E11, E12, E22)."""
    mu = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]
    mu[0][0][0] = ONE  # E11 E11
    mu[1][0][1] = ONE  # E11 E12
    mu[1][1][2] = ONE  # E12 E22
    mu[2][2][2] = ONE  # E22 E22
    return HomAssociativeAlgebra(Tensor3(mu), Matrix.identity(3), ("E11", "E12", "E22"))


def dual_numbers() -> HomAssociativeAlgebra:
    """``Q[x]/(x^2)`` on the basis (1, x)."""
    mu = [[[ZERO] * 2 for _ in range(2)] for _ in range(2)]
    mu[0][0][0] = ONE
    mu[1][0][1] = ONE
    mu[1][1][0] = ONE
    return HomAssociativeAlgebra(Tensor3(mu), Matrix.identity(2), ("1", "x"))
