"""Finite-dimensional bialgebras with (dual) quasi-triangular structures.

Conventions on a basis ``x_0..x_{d-1}``:

* ``mu`` is a :class:`Tensor3` with ``x_i x_j = sum_k mu[k][i][j] x_k``;
* ``delta`` is a ``d^2 x d`` matrix whose column ``i`` is ``Delta(x_i)``;
* ``unit`` and ``counit`` are length-``d`` vectors;
* a QT element ``R`` is a length ``d^2`` vector in ``H (x) H``;
* a dual QT form ``R`` is a ``d x d`` matrix, ``R[a, b] = R(x_a (x) x_b)``;
* a module action is a :class:`Tensor3` ``act[k][p][i]`` (``x_p . m_i``);
* a comodule structure map is a ``(d*m) x m`` matrix, column ``u`` is ``rho(m_u)``.

Sweedler sums are evaluated as tensor contractions: first apply the
coproducts with ``kron``, then reorder factors with a permutation matrix,
then contract with ``mu``/``R``.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Sequence

from .hybe import HybeCandidate
from .linalg import (Matrix, ShapeError, SingularMatrixError, Tensor3, apply, first_difference, invert,
                     kron, permutation_tau, tensor_permutation, unflatten)
from .report import InvariantError, Report
from .scalar import ONE, ZERO, as_scalar, format_scalar


@dataclass(frozen=True)
class Bialgebra:
    mu: Tensor3
    unit: tuple
    delta: Matrix
    counit: tuple
    basis: tuple[str, ...] | None = None

    def __post_init__(self):
        d = self.mu.out_dim
        if self.mu.shape != (d, d, d):
            raise ShapeError(f"mu must be d x d x d, got {self.mu.shape}")
        if len(self.unit) != d or len(self.counit) != d:
            raise ShapeError("unit and counit must have length dim")
        if self.delta.shape != (d * d, d):
            raise ShapeError(f"delta must be {d*d}x{d}, got {self.delta.shape}")
        object.__setattr__(self, "unit", tuple(as_scalar(x) for x in self.unit))
        object.__setattr__(self, "counit", tuple(as_scalar(x) for x in self.counit))

    @property
    def dim(self) -> int:
        return self.mu.out_dim

    @cached_property
    def mu_matrix(self) -> Matrix:
        return self.mu.as_matrix()

    @cached_property
    def unit_matrix(self) -> Matrix:
        return Matrix.column(self.unit)

    @cached_property
    def counit_matrix(self) -> Matrix:
        return Matrix.row(self.counit)

    def one(self, n: int = 1) -> tuple:
        """``1 (x) ... (x) 1`` in ``H^(x)n``."""
        return kron(*([self.unit_matrix] * n)).column_vector(0)

    def tensor_product_matrix(self, n: int) -> Matrix:
        """Multiplication of ``H^(x)n`` as a ``d^n x d^(2n)`` matrix."""
        d = self.dim
        perm = [p for i in range(n) for p in (i, n + i)]
        return kron(*([self.mu_matrix] * n)) @ tensor_permutation([d] * (2 * n), perm)

    @cached_property
    def _products(self) -> dict:
        d = self.dim
        return {(i, j): [(k, self.mu[k, i, j]) for k in range(d) if self.mu[k, i, j]]
                for i in range(d) for j in range(d)}

    def _multiply2(self, n: int, u: Sequence, v: Sequence) -> list:
        d, table = self.dim, self._products
        out = [ZERO] * (d ** n)
        vs = [(unflatten(j, d, n), y) for j, y in enumerate(v) if y]
        for i, x in enumerate(u):
            if not x:
                continue
            a = unflatten(i, d, n)
            for b, y in vs:
                terms = [(0, x * y)]
                for p, q in zip(a, b):
                    terms = [(idx * d + k, c * z) for idx, c in terms for k, z in table[p, q]]
                for idx, c in terms:
                    out[idx] += c
        return out

    def multiply(self, n: int, *factors: Sequence) -> tuple:
        """Product in the algebra ``H^(x)n`` of vectors of length ``d^n``."""
        acc = list(factors[0])
        for f in factors[1:]:
            acc = self._multiply2(n, acc, f)
        return tuple(acc)


def _kron_vec(u: Sequence, v: Sequence) -> list:
    return [x * y for x in u for y in v]


def _witness(lhs: Matrix, rhs: Matrix, d: int, n: int):
    diff = first_difference(lhs, rhs)
    if diff is None:
        return None
    col = diff[1]
    return {"basis": list(unflatten(col, d, n)) if n else [],
            "lhs": [format_scalar(x) for x in lhs.column_vector(col)],
            "rhs": [format_scalar(x) for x in rhs.column_vector(col)]}


def check_bialgebra(H: Bialgebra) -> Report:
    d = H.dim
    I = Matrix.identity(d)
    mu, eta, delta, eps = H.mu_matrix, H.unit_matrix, H.delta, H.counit_matrix
    r = Report()

    lhs, rhs = mu @ kron(mu, I), mu @ kron(I, mu)
    r.add("associativity", lhs == rhs, _witness(lhs, rhs, d, 3))
    left, right = mu @ kron(eta, I), mu @ kron(I, eta)
    r.add("unit", left == I and right == I, _witness(left, I, d, 1) or _witness(right, I, d, 1))

    lhs, rhs = kron(delta, I) @ delta, kron(I, delta) @ delta
    r.add("coassociativity", lhs == rhs, _witness(lhs, rhs, d, 1))
    left, right = kron(eps, I) @ delta, kron(I, eps) @ delta
    r.add("counit", left == I and right == I, _witness(left, I, d, 1) or _witness(right, I, d, 1))

    lhs = delta @ mu
    rhs = H.tensor_product_matrix(2) @ kron(delta, delta)
    r.add("delta-multiplicative", lhs == rhs, _witness(lhs, rhs, d, 2))
    lhs, rhs = delta @ eta, kron(eta, eta)
    r.add("delta-unital", lhs == rhs, _witness(lhs, rhs, d, 0))
    lhs, rhs = eps @ mu, kron(eps, eps)
    r.add("counit-multiplicative", lhs == rhs, _witness(lhs, rhs, d, 2))
    value = (eps @ eta)[0, 0]
    r.add("counit-unital", value == 1, {"value": format_scalar(value)})
    return r


# -- quasi-triangular structures -------------------------------------------------

@dataclass(frozen=True)
class QTStructure:
    R: tuple
    R_inv: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "R", tuple(as_scalar(x) for x in self.R))
        if self.R_inv is not None:
            object.__setattr__(self, "R_inv", tuple(as_scalar(x) for x in self.R_inv))


def _left_multiplication(H: Bialgebra, n: int, r: Sequence) -> Matrix:
    """``s -> r s`` on ``H^(x)n``."""
    return H.tensor_product_matrix(n) @ kron(Matrix.column(r), Matrix.identity(H.dim ** n))


def qt_inverse(H: Bialgebra, R: Sequence) -> tuple:
    """Solve ``R X = 1 (x) 1`` in ``H (x) H``; raises :class:`SingularMatrixError`."""
    left = _left_multiplication(H, 2, R)
    return apply(invert(left), H.one(2))


def with_inverse(H: Bialgebra, qt: QTStructure) -> QTStructure:
    if qt.R_inv is not None:
        return qt
    return replace(qt, R_inv=qt_inverse(H, qt.R))


def leg(H: Bialgebra, R: Sequence, legs: tuple[int, int]) -> tuple:
    """``R_12``, ``R_13`` or ``R_23`` in ``H^(x)3``."""
    d = H.dim
    with_one = _kron_vec(R, H.unit)  # s (x) t (x) 1
    perm = {(0, 1): [0, 1, 2], (0, 2): [0, 2, 1], (1, 2): [2, 0, 1]}[legs]
    return apply(tensor_permutation([d, d, d], perm), with_one)


def check_qt(H: Bialgebra, qt: QTStructure) -> Report:
    d = H.dim
    r = Report()
    if len(qt.R) != d * d:
        raise ShapeError(f"R must have length {d*d}")
    R = qt.R
    one2 = H.one(2)
    R_inv = qt.R_inv
    if R_inv is None:
        try:
            R_inv = qt_inverse(H, R)
        except SingularMatrixError as exc:
            r.add("invertible", False, {"reason": str(exc)})
    if R_inv is not None:
        a = H.multiply(2, R, R_inv)
        b = H.multiply(2, R_inv, R)
        r.add("invertible", a == one2 and b == one2,
              {"R*R_inv": [format_scalar(x) for x in a], "R_inv*R": [format_scalar(x) for x in b]})

    tau = permutation_tau(d)
    bad = None
    for i in range(d):
        dx = H.delta.column_vector(i)
        lhs = H.multiply(2, apply(tau, dx), R)
        rhs = H.multiply(2, R, dx)
        if lhs != rhs:
            bad = {"basis": [i], "lhs": [format_scalar(x) for x in lhs],
                   "rhs": [format_scalar(x) for x in rhs]}
            break
    r.add("almost-cocommutative", bad is None, bad)

    I = Matrix.identity(d)
    r13, r23, r12 = leg(H, R, (0, 2)), leg(H, R, (1, 2)), leg(H, R, (0, 1))
    lhs = apply(kron(H.delta, I), R)
    rhs = H.multiply(3, r13, r23)
    r.add("hexagon-(delta x id)", lhs == rhs, _vec_witness(lhs, rhs))
    lhs = apply(kron(I, H.delta), R)
    rhs = H.multiply(3, r13, r12)
    r.add("hexagon-(id x delta)", lhs == rhs, _vec_witness(lhs, rhs))
    return r


def _vec_witness(lhs, rhs):
    return {"lhs": [format_scalar(x) for x in lhs], "rhs": [format_scalar(x) for x in rhs]}


def check_qybe(H: Bialgebra, R: Sequence) -> Report:
    """``R12 R13 R23 == R23 R13 R12``, plus the factor-reversed form as a cross-check."""
    d = H.dim
    R = tuple(as_scalar(x) for x in R)
    if len(R) != d * d:
        raise ShapeError(f"R must have length {d*d}")
    r12, r13, r23 = leg(H, R, (0, 1)), leg(H, R, (0, 2)), leg(H, R, (1, 2))
    lhs = H.multiply(3, r12, r13, r23)
    rhs = H.multiply(3, r23, r13, r12)
    report = Report().add("qybe", lhs == rhs, _vec_witness(lhs, rhs))

    # sum t_j t_i (x) t_k s_i (x) s_k s_j  vs  sum t_k t_j (x) s_k t_i (x) s_j s_i,
    # with R = sum_i s_i (x) t_i read off term by term
    mu = H.mu_matrix
    terms = [(p, [ZERO] * q + [R[p * d + q]] + [ZERO] * (d - q - 1)) for p in range(d) for q in range(d)
             if R[p * d + q]]
    basis = [[ONE if k == p else ZERO for k in range(d)] for p in range(d)]

    def prod(u, v):
        return apply(mu, _kron_vec(u, v))

    def add_triple(acc, a, b, c):
        for idx, x in enumerate(_kron_vec(_kron_vec(a, b), c)):
            if x:
                acc[idx] = acc[idx] + x

    left = [ZERO] * d ** 3
    right = [ZERO] * d ** 3
    for si, ti in terms:
        for sj, tj in terms:
            for sk, tk in terms:
                s_i, s_j, s_k = basis[si], basis[sj], basis[sk]
                add_triple(left, prod(tj, ti), prod(tk, s_i), prod(s_k, s_j))
                add_triple(right, prod(tk, tj), prod(s_k, ti), prod(s_j, s_i))
    flipped_expected = apply(tensor_permutation([d, d, d], [2, 1, 0]), lhs)
    report.add("qybe-flipped", left == right, _vec_witness(left, right))
    report.add("qybe-flipped-consistent", tuple(left) == tuple(flipped_expected),
               _vec_witness(left, flipped_expected))
    return report


# -- modules -------------------------------------------------------------------

@dataclass(frozen=True)
class HModule:
    action: Tensor3
    alpha: Matrix | None = None

    def __post_init__(self):
        m = self.action.out_dim
        if self.action.in2_dim != m:
            raise ShapeError("action must map H (x) M -> M")
        if self.alpha is not None and self.alpha.shape != (m, m):
            raise ShapeError(f"alpha must be {m}x{m}")

    @property
    def dim(self) -> int:
        return self.action.out_dim

    def rep(self, p: int) -> Matrix:
        """Action of the basis element ``x_p`` as an ``m x m`` matrix."""
        e = self.action.entries
        return Matrix([[e[k][p][i] for i in range(self.dim)] for k in range(self.dim)])

    def act(self, h: Sequence) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for p, c in enumerate(h):
            if c:
                out = out + self.rep(p).scale(c)
        return out

    def act2(self, r: Sequence, d: int) -> Matrix:
        """Action of ``r`` in ``H (x) H`` on ``M (x) M``."""
        reps = [self.rep(p) for p in range(d)]
        out = Matrix.zeros(self.dim ** 2, self.dim ** 2)
        for idx, c in enumerate(r):
            if c:
                p, q = divmod(idx, d)
                out = out + kron(reps[p], reps[q]).scale(c)
        return out


def check_module(H: Bialgebra, M: HModule) -> Report:
    if M.action.in1_dim != H.dim:
        raise ShapeError("module action does not match the bialgebra dimension")
    r = Report()
    one = M.act(H.unit)
    r.add("unit-acts-trivially", one == Matrix.identity(M.dim))
    bad = None
    for p in range(H.dim):
        for q in range(H.dim):
            prod = [H.mu[k, p, q] for k in range(H.dim)]
            if M.act(prod) != M.rep(p) @ M.rep(q):
                bad = {"basis": [p, q]}
                break
        if bad:
            break
    r.add("module-associativity", bad is None, bad)
    return r


def check_module_morphism(H: Bialgebra, M: HModule, alpha: Matrix | None = None) -> Report:
    alpha = alpha if alpha is not None else M.alpha
    if alpha is None or alpha.shape != (M.dim, M.dim):
        raise ShapeError("module morphism needs an m x m alpha")
    bad = next(({"basis": [p]} for p in range(H.dim)
                if alpha @ M.rep(p) != M.rep(p) @ alpha), None)
    return Report().add("module-morphism", bad is None, bad)


def build_B_R(H: Bialgebra, qt: QTStructure, M: HModule, alpha: Matrix | None = None) -> HybeCandidate:
    """``u (x) v -> tau(R . (u (x) v))``."""
    alpha = alpha if alpha is not None else (M.alpha if M.alpha is not None else Matrix.identity(M.dim))
    report = (check_bialgebra(H).extend(check_qt(H, qt)).extend(check_module(H, M))
              .extend(check_module_morphism(H, M, alpha)))
    if not report.passed:
        raise InvariantError("B_R preconditions", report)
    return HybeCandidate(permutation_tau(M.dim) @ M.act2(qt.R, H.dim), alpha)


def B_R_inverse(H: Bialgebra, qt: QTStructure, M: HModule) -> Matrix:
    """``(R^-1 .) o tau``, the two-sided inverse of ``B_R``."""
    qt = with_inverse(H, qt)
    return M.act2(qt.R_inv, H.dim) @ permutation_tau(M.dim)


# -- dual quasi-triangular structures -------------------------------------------

@dataclass(frozen=True)
class DualQTStructure:
    R: Matrix
    R_inv: Matrix | None = None


def _form_row(R: Matrix) -> Matrix:
    return Matrix.row([x for row in R.tolist() for x in row])


def _swap_middle(d: int) -> Matrix:
    """``(x', x'', y', y'') -> (x', y', x'', y'')``."""
    return tensor_permutation([d] * 4, [0, 2, 1, 3])


def dual_qt_inverse(H: Bialgebra, R: Matrix) -> Matrix:
    """Solve ``sum R(x' y') S(x'' y'') = eps(x) eps(y)`` for the form ``S``."""
    d = H.dim
    system = kron(_form_row(R), Matrix.identity(d * d)) @ _swap_middle(d) @ kron(H.delta, H.delta)
    s = Matrix.row(kron(H.counit_matrix, H.counit_matrix).row_tuple(0)) @ invert(system)
    flat = s.row_tuple(0)
    return Matrix([flat[a * d:(a + 1) * d] for a in range(d)])


def check_dual_qt(H: Bialgebra, dqt: DualQTStructure) -> Report:
    d = H.dim
    if dqt.R.shape != (d, d):
        raise ShapeError(f"dual R must be {d}x{d}")
    r = Report()
    R_inv = dqt.R_inv
    if R_inv is None:
        try:
            R_inv = dual_qt_inverse(H, dqt.R)
        except SingularMatrixError as exc:
            r.add("convolution-invertible", False, {"reason": str(exc)})
    row = _form_row(dqt.R)
    dd = kron(H.delta, H.delta)
    sw = _swap_middle(d)
    ee = kron(H.counit_matrix, H.counit_matrix)
    if R_inv is not None:
        inv_row = _form_row(R_inv)
        a = kron(row, inv_row) @ sw @ dd
        b = kron(inv_row, row) @ sw @ dd
        r.add("convolution-invertible", a == ee and b == ee, _witness(a, ee, d, 2) or _witness(b, ee, d, 2))

    # sum y' x' R(x'' y'')  vs  sum R(x' y') x'' y''
    lhs = kron(H.mu_matrix, row) @ tensor_permutation([d] * 4, [2, 0, 1, 3]) @ dd
    rhs = kron(row, H.mu_matrix) @ sw @ dd
    r.add("almost-commutative", lhs == rhs, _witness(lhs, rhs, d, 2))

    I = Matrix.identity(d)
    lhs = row @ kron(H.mu_matrix, I)
    rhs = kron(row, row) @ tensor_permutation([d] * 4, [0, 2, 1, 3]) @ kron(I, I, H.delta)
    r.add("R(xy,z)", lhs == rhs, _witness(lhs, rhs, d, 3))
    lhs = row @ kron(I, H.mu_matrix)
    # (x', x'', y, z) -> (x', z, x'', y)
    rhs = kron(row, row) @ tensor_permutation([d] * 4, [0, 3, 1, 2]) @ kron(H.delta, I, I)
    r.add("R(x,yz)", lhs == rhs, _witness(lhs, rhs, d, 3))
    return r


@dataclass(frozen=True)
class HComodule:
    rho: Matrix
    alpha: Matrix | None = None

    def __post_init__(self):
        m = self.rho.cols
        if self.rho.rows % max(m, 1):
            raise ShapeError("rho must map M -> H (x) M")
        if self.alpha is not None and self.alpha.shape != (m, m):
            raise ShapeError(f"alpha must be {m}x{m}")

    @property
    def dim(self) -> int:
        return self.rho.cols

    @property
    def coalgebra_dim(self) -> int:
        return self.rho.rows // self.rho.cols


def check_comodule(H: Bialgebra, C: HComodule) -> Report:
    if C.coalgebra_dim != H.dim:
        raise ShapeError("comodule structure map does not match the bialgebra dimension")
    I_h, I_m = Matrix.identity(H.dim), Matrix.identity(C.dim)
    r = Report()
    lhs = kron(I_h, C.rho) @ C.rho
    rhs = kron(H.delta, I_m) @ C.rho
    r.add("coassociativity", lhs == rhs, _witness(lhs, rhs, C.dim, 1))
    counit = kron(H.counit_matrix, I_m) @ C.rho
    r.add("comodule-counit", counit == I_m, _witness(counit, I_m, C.dim, 1))
    return r


def check_comodule_morphism(H: Bialgebra, C: HComodule, alpha: Matrix | None = None) -> Report:
    alpha = alpha if alpha is not None else C.alpha
    if alpha is None or alpha.shape != (C.dim, C.dim):
        raise ShapeError("comodule morphism needs an m x m alpha")
    lhs = kron(Matrix.identity(H.dim), alpha) @ C.rho
    rhs = C.rho @ alpha
    return Report().add("comodule-morphism", lhs == rhs, _witness(lhs, rhs, C.dim, 1))


def build_B_dual_R(H: Bialgebra, dqt: DualQTStructure, C: HComodule,
                   alpha: Matrix | None = None) -> HybeCandidate:
    """``u (x) v -> sum R(v_H (x) u_H) v_M (x) u_M``."""
    alpha = alpha if alpha is not None else (C.alpha if C.alpha is not None else Matrix.identity(C.dim))
    report = (check_bialgebra(H).extend(check_dual_qt(H, dqt)).extend(check_comodule(H, C))
              .extend(check_comodule_morphism(H, C, alpha)))
    if not report.passed:
        raise InvariantError("B^R preconditions", report)
    d, m = H.dim, C.dim
    # (u_H, u_M, v_H, v_M) -> (v_H, u_H, v_M, u_M), then contract the H legs with R
    reorder = tensor_permutation([d, m, d, m], [2, 0, 3, 1])
    B = kron(_form_row(dqt.R), Matrix.identity(m * m)) @ reorder @ kron(C.rho, C.rho)
    return HybeCandidate(B, alpha)


# -- fixtures ------------------------------------------------------------------

def group_algebra_z2() -> Bialgebra:
    """``Q[Z/2]`` on the basis (1, g), ``Delta(g) = g (x) g``."""
    mu = [[[ONE, ZERO], [ZERO, ONE]], [[ZERO, ONE], [ONE, ZERO]]]
    delta = Matrix.from_entries(4, 2, {(0, 0): ONE, (3, 1): ONE})
    return Bialgebra(Tensor3(mu), (ONE, ZERO), delta, (ONE, ONE), ("1", "g"))


def z2_trivial_R() -> QTStructure:
    return QTStructure((ONE, ZERO, ZERO, ZERO))


def z2_R(gg=-1) -> QTStructure:
    """``1/2 (1 (x) 1 + 1 (x) g + g (x) 1 + gg * g (x) g)``; ``gg = -1`` is the QT structure."""
    h = as_scalar(1) / 2
    return QTStructure((h, h, h, h * as_scalar(gg)))


def z2_sign_module(alpha: Matrix | None = None) -> HModule:
    """``Q^2`` with ``g`` acting as ``diag(1, -1)``."""
    act = [[[ONE, ZERO], [ONE, ZERO]], [[ZERO, ONE], [ZERO, -ONE]]]
    return HModule(Tensor3(act), alpha if alpha is not None else Matrix.identity(2))


def z2_dual_R() -> DualQTStructure:
    """``R(g^a (x) g^b) = (-1)^(ab)``."""
    return DualQTStructure(Matrix([[1, 1], [1, -1]]))


def counit_form(H: Bialgebra) -> DualQTStructure:
    """The trivial form ``eps (x) eps``."""
    e = H.counit
    return DualQTStructure(Matrix([[a * b for b in e] for a in e]))


def z2_comodule(alpha: Matrix | None = None) -> HComodule:
    """``Q^2`` with ``rho(m_a) = g^a (x) m_a``."""
    rho = Matrix.from_entries(4, 2, {(0, 0): ONE, (3, 1): ONE})
    return HComodule(rho, alpha if alpha is not None else Matrix.identity(2))


def sweedler() -> Bialgebra:
    """Sweedler's 4-dimensional algebra on (1, g, x, gx): ``g^2 = 1``, ``x^2 = 0``,
    ``xg = -gx``, ``Delta(g) = g (x) g``, ``Delta(x) = x (x) 1 + g (x) x``."""
    d = 4
    mu = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for e in range(2):
                    if b + e >= 2:
                        continue
                    # g^a x^b g^c x^e = (-1)^(bc) g^(a+c) x^(b+e)
                    sign = -ONE if b * c else ONE
                    mu[(a + c) % 2 + 2 * (b + e)][a + 2 * b][c + 2 * e] = sign
    delta = Matrix.from_entries(16, 4, {
        (0 * 4 + 0, 0): ONE,                        # 1 -> 1 (x) 1
        (1 * 4 + 1, 1): ONE,                        # g -> g (x) g
        (2 * 4 + 0, 2): ONE, (1 * 4 + 2, 2): ONE,   # x -> x (x) 1 + g (x) x
        (3 * 4 + 1, 3): ONE, (0 * 4 + 3, 3): ONE,   # gx -> gx (x) g + 1 (x) gx
    })
    return Bialgebra(Tensor3(mu), (ONE, ZERO, ZERO, ZERO), delta, (ONE, ONE, ZERO, ZERO),
                     ("1", "g", "x", "gx"))


def sweedler_R(a=0) -> QTStructure:
    """``R_a = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) + a/2 (x(x)x - x(x)gx + gx(x)gx + gx(x)x)``.

    Signs match the coproduct ``Delta(x) = x (x) 1 + g (x) x`` used by :func:`sweedler`.
    """
    h = as_scalar(1) / 2
    t = as_scalar(a) / 2
    R = [ZERO] * 16
    for (p, q), c in {(0, 0): h, (0, 1): h, (1, 0): h, (1, 1): -h,
                      (2, 2): t, (2, 3): -t, (3, 3): t, (3, 2): t}.items():
        R[p * 4 + q] = c
    return QTStructure(tuple(R))


def regular_module(H: Bialgebra, alpha: Matrix | None = None) -> HModule:
    """``H`` acting on itself by left multiplication."""
    return HModule(H.mu, alpha if alpha is not None else Matrix.identity(H.dim))


def right_multiplication(H: Bialgebra, h: Sequence) -> Matrix:
    """``y -> y h``; commutes with the left regular action."""
    cols = [apply(H.mu_matrix, _kron_vec([ONE if k == i else ZERO for k in range(H.dim)], h))
            for i in range(H.dim)]
    return Matrix(list(zip(*cols)))
