"""Hom-modules, the Hom-Yang-Baxter equation and its elementary solutions.

A candidate is a pair ``(B, alpha)`` with ``B`` acting on ``M (x) M`` and
``alpha`` on ``M``.  The HYBE asks that

    (alpha (x) B)(B (x) alpha)(alpha (x) B) = (B (x) alpha)(alpha (x) B)(B (x) alpha)

on ``M (x) M (x) M``, and is only posed when ``B`` commutes with
``alpha (x) alpha``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .linalg import (Matrix, ShapeError, SingularMatrixError, chain, first_difference, invert,
                     kron, permutation_tau, unflatten)
from .report import InvariantError, Report
from .scalar import ZERO, as_scalar, format_scalar


class NotInvertibleError(ArithmeticError):
    def __init__(self, which: str, rank: int, size: int):
        super().__init__(f"{which} singular (rank {rank} < {size})")
        self.which = which
        self.rank = rank


@dataclass(frozen=True)
class HomModule:
    """A vector space ``k^dim`` with a linear self-map ``alpha``."""

    dim: int
    alpha: Matrix
    basis_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.alpha.shape != (self.dim, self.dim):
            raise ShapeError(f"alpha must be {self.dim}x{self.dim}, got {self.alpha.shape}")
        if self.basis_labels is not None and len(self.basis_labels) != self.dim:
            raise ShapeError("one basis label per dimension")


@dataclass(frozen=True)
class HybeCandidate:
    B: Matrix
    alpha: Matrix

    def __post_init__(self):
        m = self.alpha.rows
        if not self.alpha.is_square:
            raise ShapeError(f"alpha must be square, got {self.alpha.shape}")
        if self.B.shape != (m * m, m * m):
            raise ShapeError(f"B must be {m*m}x{m*m} for dim {m}, got {self.B.shape}")

    @property
    def dim(self) -> int:
        return self.alpha.rows

    @property
    def module(self) -> HomModule:
        return HomModule(self.dim, self.alpha)

    def has_parameter(self) -> bool:
        return self.B.has_parameter() or self.alpha.has_parameter()


def _sparse(v: Sequence, m: int, n: int) -> list:
    return [[list(unflatten(i, m, n)), format_scalar(x)] for i, x in enumerate(v) if x]


def _column_witness(lhs: Matrix, rhs: Matrix, m: int, n: int) -> dict | None:
    diff = first_difference(lhs, rhs)
    if diff is None:
        return None
    row, col = diff
    return {
        "basis": list(unflatten(col, m, n)),
        "entry": [row, col],
        "lhs": _sparse(lhs.column_vector(col), m, n),
        "rhs": _sparse(rhs.column_vector(col), m, n),
    }


def check_morphism(c: HybeCandidate) -> Report:
    """``B (alpha (x) alpha) == (alpha (x) alpha) B``."""
    aa = kron(c.alpha, c.alpha)
    lhs = c.B @ aa
    rhs = aa @ c.B
    return Report().add("morphism", lhs == rhs, _column_witness(lhs, rhs, c.dim, 2))


def hybe_sides(c: HybeCandidate) -> tuple[Matrix, Matrix]:
    a_b = kron(c.alpha, c.B)
    b_a = kron(c.B, c.alpha)
    return chain(a_b, b_a, a_b), chain(b_a, a_b, b_a)


def check_hybe(c: HybeCandidate) -> Report:
    report = check_morphism(c)
    if not report.passed:
        return report.add("hybe", False, {"reason": "B does not commute with alpha (x) alpha"})
    lhs, rhs = hybe_sides(c)
    return report.add("hybe", lhs == rhs, _column_witness(lhs, rhs, c.dim, 3))


def check_ybe(B: Matrix) -> Report:
    """The classical braid form ``(1 (x) B)(B (x) 1)(1 (x) B) = (B (x) 1)(1 (x) B)(B (x) 1)``."""
    m = _sqrt_dim(B)
    one = Matrix.identity(m)
    i_b = kron(one, B)
    b_i = kron(B, one)
    lhs = chain(i_b, b_i, i_b)
    rhs = chain(b_i, i_b, b_i)
    return Report().add("ybe", lhs == rhs, _column_witness(lhs, rhs, m, 3))


def _sqrt_dim(B: Matrix) -> int:
    m = round(B.rows ** 0.5)
    if m * m != B.rows or not B.is_square:
        raise ShapeError(f"{B.shape} is not an operator on M (x) M")
    return m


def tau_alpha(module: HomModule | Matrix) -> HybeCandidate:
    """``u (x) v -> alpha(v) (x) alpha(u)``."""
    alpha = module.alpha if isinstance(module, HomModule) else module
    return HybeCandidate(permutation_tau(alpha.rows) @ kron(alpha, alpha), alpha)


def scale_solution(c: HybeCandidate, k, *, check: bool = True) -> HybeCandidate:
    if check:
        report = check_hybe(c)
        if not report.passed:
            raise InvariantError("can only rescale a HYBE solution", report)
    return HybeCandidate(c.B.scale(as_scalar(k)), c.alpha)


def invert_solution(c: HybeCandidate, *, check: bool = True) -> HybeCandidate:
    """``(B^-1, alpha^-1)``; a solution again whenever ``(B, alpha)`` is one."""
    try:
        alpha_inv = invert(c.alpha)
    except SingularMatrixError as exc:
        raise NotInvertibleError("alpha", exc.rank, exc.size) from None
    try:
        b_inv = invert(c.B)
    except SingularMatrixError as exc:
        raise NotInvertibleError("B", exc.rank, exc.size) from None
    if check:
        report = check_hybe(c)
        if not report.passed:
            raise InvariantError("can only invert a HYBE solution", report)
    return HybeCandidate(b_inv, alpha_inv)


# -- element-wise evaluation ---------------------------------------------------
#
# Independent of the Kronecker/matmul route: operators are given as functions
# on basis elements and applied term by term to sparse tensors.

ApplyB = Callable[[int, int], Mapping[tuple[int, int], object]]
ApplyAlpha = Callable[[int], Mapping[int, object]]


def operator_from_matrix(B: Matrix, m: int) -> ApplyB:
    def apply_b(i: int, j: int):
        col = i * m + j
        return {divmod(r, m): B[r, col] for r in range(m * m) if B[r, col]}
    return apply_b


def map_from_matrix(alpha: Matrix) -> ApplyAlpha:
    def apply_alpha(i: int):
        return {r: alpha[r, i] for r in range(alpha.rows) if alpha[r, i]}
    return apply_alpha


def _accumulate(out: dict, key, value):
    total = out.get(key, ZERO) + value
    if total:
        out[key] = total
    else:
        out.pop(key, None)


def _step(state: dict, apply_b: ApplyB, apply_alpha: ApplyAlpha, b_first: bool) -> dict:
    out: dict = {}
    for (i, j, k), x in state.items():
        if b_first:
            for (p, q), y in apply_b(i, j).items():
                for r, z in apply_alpha(k).items():
                    _accumulate(out, (p, q, r), x * y * z)
        else:
            for p, y in apply_alpha(i).items():
                for (q, r), z in apply_b(j, k).items():
                    _accumulate(out, (p, q, r), x * y * z)
    return out


def check_hybe_elementwise(m: int, apply_b: ApplyB, apply_alpha: ApplyAlpha) -> Report:
    """Brute-force HYBE check over all ``m**3`` basis triples."""
    report = Report()
    bad = None
    for i in range(m):
        for j in range(m):
            lhs: dict = {}
            for (p, q), x in apply_b(i, j).items():
                for r, y in apply_alpha(p).items():
                    for s, z in apply_alpha(q).items():
                        _accumulate(lhs, (r, s), x * y * z)
            rhs: dict = {}
            for p, y in apply_alpha(i).items():
                for q, z in apply_alpha(j).items():
                    for rs, x in apply_b(p, q).items():
                        _accumulate(rhs, rs, x * y * z)
            if lhs != rhs and bad is None:
                bad = {"basis": [i, j]}
    report.add("morphism", bad is None, bad)
    if bad is not None:
        return report.add("hybe", False, {"reason": "B does not commute with alpha (x) alpha"})
    for i in range(m):
        for j in range(m):
            for k in range(m):
                start = {(i, j, k): as_scalar(1)}
                left = _step(_step(_step(start, apply_b, apply_alpha, False),
                                   apply_b, apply_alpha, True), apply_b, apply_alpha, False)
                right = _step(_step(_step(start, apply_b, apply_alpha, True),
                                    apply_b, apply_alpha, False), apply_b, apply_alpha, True)
                if left != right:
                    return report.add("hybe", False, {
                        "basis": [i, j, k],
                        "lhs": [[list(t), format_scalar(v)] for t, v in sorted(left.items())],
                        "rhs": [[list(t), format_scalar(v)] for t, v in sorted(right.items())],
                    })
    return report.add("hybe", True)
