"""Formula-level evaluators, independent of the kron/matmul construction path.

Each ``*_operator`` returns ``(m, apply_b, apply_alpha)`` for
:func:`hombraid.hybe.check_hybe_elementwise`.  ``apply_b(i, j)`` is the image
of ``e_i (x) e_j`` as ``{(p, q): coeff}``, written straight from the defining
formula of the operator.
"""
from __future__ import annotations

from hombraid.linalg import Matrix
from hombraid.scalar import ZERO


def _add(out: dict, key, value):
    if value:
        total = out.get(key, ZERO) + value
        if total:
            out[key] = total
        else:
            out.pop(key, None)


def _column(alpha: Matrix, i: int) -> dict:
    return {r: alpha[r, i] for r in range(alpha.rows) if alpha[r, i]}


def tau_alpha_operator(alpha: Matrix):
    """``u (x) v -> alpha(v) (x) alpha(u)``."""
    def apply_b(i, j):
        out = {}
        for p, x in _column(alpha, j).items():
            for q, y in _column(alpha, i).items():
                _add(out, (p, q), x * y)
        return out
    return alpha.rows, apply_b, lambda i: _column(alpha, i)


def b_alpha_operator(L):
    """On ``k (+) L``: ``x (x) y -> alpha'(y) (x) alpha'(x) + 1 (x) [x, y]``,
    where ``alpha'`` fixes ``1`` and the bracket vanishes on ``1``."""
    d = L.dim

    def alpha_prime(i):
        if i == 0:
            return {0: 1}
        return {r + 1: L.alpha[r, i - 1] for r in range(d) if L.alpha[r, i - 1]}

    def apply_b(i, j):
        out = {}
        for p, x in alpha_prime(j).items():
            for q, y in alpha_prime(i).items():
                _add(out, (p, q), x * y)
        if i and j:
            for k in range(d):
                _add(out, (0, k + 1), L.bracket[k, i - 1, j - 1])
        return out
    return d + 1, apply_b, alpha_prime


def b_r_operator(H, R, M, alpha: Matrix):
    """``u (x) v -> sum_{p,q} R_pq (x_q . v) (x) (x_p . u)``."""
    d, m = H.dim, M.dim
    act = M.action

    def apply_b(i, j):
        out = {}
        for p in range(d):
            for q in range(d):
                r = R[p * d + q]
                if not r:
                    continue
                for k in range(m):
                    for l in range(m):
                        _add(out, (k, l), r * act[k, q, j] * act[l, p, i])
        return out
    return m, apply_b, lambda i: _column(alpha, i)


def b_dual_r_operator(R: Matrix, C, alpha: Matrix):
    """``u (x) v -> sum R(v_H, u_H) v_M (x) u_M`` with ``rho(m) = sum m_H (x) m_M``."""
    m = C.dim
    d = C.rho.rows // m

    def coaction(u):
        return [(divmod(r, m), C.rho[r, u]) for r in range(d * m) if C.rho[r, u]]

    def apply_b(i, j):
        out = {}
        for (a, k), x in coaction(i):
            for (b, l), y in coaction(j):
                _add(out, (l, k), R[b, a] * x * y)
        return out
    return m, apply_b, lambda i: _column(alpha, i)


def diagonal_operator(diag_b, diag_alpha):
    m = len(diag_alpha)

    def apply_b(i, j):
        x = diag_b[i * m + j]
        return {(i, j): x} if x else {}
    return m, apply_b, lambda i: {i: diag_alpha[i]} if diag_alpha[i] else {}


def operator_matrix(m: int, apply_b) -> Matrix:
    """Materialize ``apply_b`` so it can be compared with a built candidate."""
    entries = {}
    for i in range(m):
        for j in range(m):
            for (p, q), x in apply_b(i, j).items():
                entries[(p * m + q, i * m + j)] = x
    return Matrix.from_entries(m * m, m * m, entries)
