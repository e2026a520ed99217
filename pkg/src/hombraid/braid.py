"""Braid group operators built from a HYBE solution.

For a solution ``(B, alpha)`` on ``M`` and ``n`` strands,

    B_i = alpha^(x)(i-1) (x) B (x) alpha^(x)(n-i-1),   1 <= i <= n-1,

acting on ``M^(x)n``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .hybe import HybeCandidate, check_hybe
from .linalg import Matrix, ShapeError, SingularMatrixError, invert, kron, kron_power
from .report import InvariantError, Report
from .scalar import eval_at

DEFAULT_CAP = 10_000


class DimensionCapError(ValueError):
    pass


class MissingInverseError(ValueError):
    pass


def default_cap() -> int:
    value = os.environ.get("HOMBRAID_CAP")
    return int(value) if value else DEFAULT_CAP


@dataclass(frozen=True)
class BraidWord:
    """Letters ``+i`` for ``sigma_i`` and ``-i`` for its inverse."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n < 2:
            raise ValueError("braid words need at least 2 strands")
        for x in self.letters:
            if not 1 <= abs(x) <= self.n - 1:
                raise ValueError(f"letter {x} out of range for {self.n} strands")

    @classmethod
    def parse(cls, n: int, text: str) -> "BraidWord":
        return cls(n, tuple(int(tok) for tok in text.split()))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ValueError("strand mismatch")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))


@dataclass(frozen=True)
class BraidRep:
    n: int
    m: int
    generators: tuple[Matrix, ...]
    inverses: tuple[Matrix, ...] | None = None
    note: str | None = None

    def __post_init__(self):
        if len(self.generators) != self.n - 1:
            raise ShapeError(f"{self.n} strands need {self.n - 1} generators")
        if self.inverses is not None and len(self.inverses) != self.n - 1:
            raise ShapeError("one inverse per generator")

    @property
    def size(self) -> int:
        return self.m ** self.n


def _generator(B: Matrix, alpha: Matrix, n: int, i: int) -> Matrix:
    return kron(kron_power(alpha, i - 1), B, kron_power(alpha, n - i - 1))


def build_braid_generators(c: HybeCandidate, n: int, *, cap: int | None = None,
                           check: bool = True) -> BraidRep:
    if n < 2:
        raise ValueError("need at least 2 strands")
    cap = default_cap() if cap is None else cap
    size = c.dim ** n
    if size > cap:
        raise DimensionCapError(f"dim M^n = {c.dim}^{n} = {size} exceeds the cap {cap}")
    if check:
        report = check_hybe(c)
        if not report.passed:
            raise InvariantError("candidate is not a HYBE solution", report)
    gens = tuple(_generator(c.B, c.alpha, n, i) for i in range(1, n))
    inverses, note = None, None
    try:
        a_inv, b_inv = invert(c.alpha), invert(c.B)
        inverses = tuple(_generator(b_inv, a_inv, n, i) for i in range(1, n))
    except SingularMatrixError as exc:
        note = f"generators not invertible: {exc}"
    return BraidRep(n, c.dim, gens, inverses, note)


def check_braid_relations(rep: BraidRep) -> Report:
    report = Report()
    g = rep.generators
    for i in range(len(g)):
        for j in range(i + 2, len(g)):
            ok = g[i] @ g[j] == g[j] @ g[i]
            report.add(f"far-commutation({i+1},{j+1})", ok, {"generators": [i + 1, j + 1]})
    for i in range(len(g) - 1):
        ok = g[i] @ g[i + 1] @ g[i] == g[i + 1] @ g[i] @ g[i + 1]
        report.add(f"braid({i+1},{i+2})", ok, {"generators": [i + 1, i + 2]})
    if rep.inverses is not None:
        one = Matrix.identity(rep.size)
        bad = next((i + 1 for i, (a, b) in enumerate(zip(g, rep.inverses))
                    if a @ b != one or b @ a != one), None)
        report.add("inverses", bad is None, {"generator": bad})
    return report


def evaluate_braid_word(rep: BraidRep, word: BraidWord | Sequence[int]) -> Matrix:
    """Left-to-right product of generator images; no free reduction."""
    if not isinstance(word, BraidWord):
        word = BraidWord(rep.n, tuple(word))
    if word.n != rep.n:
        raise ValueError(f"word on {word.n} strands, representation on {rep.n}")
    if any(x < 0 for x in word.letters) and rep.inverses is None:
        raise MissingInverseError("negative letters need invertible generators"
                                  + (f" ({rep.note})" if rep.note else ""))
    out = Matrix.identity(rep.size)
    for x in word.letters:
        out = out @ (rep.generators[x - 1] if x > 0 else rep.inverses[-x - 1])
    return out


def specialize_matrix(a: Matrix, value) -> Matrix:
    return a.map(lambda x: eval_at(x, value))


def specialize_candidate(c: HybeCandidate, value) -> HybeCandidate:
    return HybeCandidate(specialize_matrix(c.B, value), specialize_matrix(c.alpha, value))


def specialize_rep(rep: BraidRep, value) -> BraidRep:
    """Substitute ``l = value``; the parameter must be nonzero."""
    value = Fraction(value)
    if not value:
        raise ValueError("the parameter must be a nonzero scalar")
    gens = tuple(specialize_matrix(g, value) for g in rep.generators)
    inverses = None
    if rep.inverses is not None:
        inverses = tuple(specialize_matrix(g, value) for g in rep.inverses)
    return BraidRep(rep.n, rep.m, gens, inverses, rep.note)
