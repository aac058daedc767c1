"""Dual decomposition of 3-dimensional algebras into (n, a, b).

A skew bracket in dimension 3 is equivalent to a symmetric matrix n (two
upper indices) and a covector a via

    c[i][j][k] = n[i][l] eps_{jkl} - delta_ij a_k + delta_ik a_j,

and a skew 2-form is equivalent to a vector b via omega_ij = eps_ijk b^k.
The validity defect collapses to the single vector

    t = 4 n a + 2 b,

so a bracket admits exactly one compatible omega: the one with b = -2 n a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra_core import AlgebraSpec, _require_skew
from .tensor_core import Matrix, levi_civita


@dataclass(frozen=True)
class NabTriple:
    """(n, a, b) data of one 3-dimensional algebra.

    n: symmetric Matrix (upper indices), a: covector, b: vector.  The triple
    comes from a valid algebra iff b = -2 n a, equivalently t_vector == 0.
    """

    n: Matrix
    a: tuple
    b: tuple

    def __post_init__(self):
        if self.n.dim != 3 or len(self.a) != 3 or len(self.b) != 3:
            raise ValueError("NabTriple is strictly 3-dimensional")
        if not self.n.is_symmetric():
            raise ValueError("n must be symmetric")
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))

    @property
    def satisfies_forced_b(self) -> bool:
        return all(x == y for x, y in zip(self.b, forced_b(self.n, self.a)))


def dual_c(c) -> Matrix:
    """Dual matrix of a 3d skew bracket: c^{il} = (1/2) c[i][j][k] eps^{jkl}."""
    if len(c) != 3:
        raise ValueError("dual_c requires a 3-dimensional bracket")
    half = Fraction(1, 2)
    return Matrix(tuple(
        tuple(half * sum(c[i][j][k] * levi_civita(j + 1, k + 1, l + 1)
                         for j in range(3) for k in range(3))
              for l in range(3))
        for i in range(3)))


def decompose(spec: AlgebraSpec) -> NabTriple:
    """Extract (n, a, b): n the symmetric part and a the skew part of the dual
    matrix, b^k = (1/2) eps^{ijk} omega_ij."""
    if spec.dim != 3:
        raise ValueError("decompose requires dim 3")
    _require_skew(spec)
    cm = dual_c(spec.c)
    half = Fraction(1, 2)
    n = Matrix(tuple(tuple(half * (cm[i][l] + cm[l][i]) for l in range(3)) for i in range(3)))
    a = tuple(half * sum(levi_civita(m + 1, i + 1, l + 1) * cm[i][l]
                         for i in range(3) for l in range(3))
              for m in range(3))
    b = tuple(half * sum(levi_civita(i + 1, j + 1, k + 1) * spec.omega[i][j]
                         for i in range(3) for j in range(3))
              for k in range(3))
    return NabTriple(n, a, b)


def reconstruct(t: NabTriple) -> AlgebraSpec:
    """Inverse of decompose: assemble the AlgebraSpec with this (n, a, b)."""
    n, a, b = t.n, t.a, t.b
    c = tuple(
        tuple(
            tuple(
                sum(n[i][l] * levi_civita(j + 1, k + 1, l + 1) for l in range(3))
                - (a[k] if i == j else 0) + (a[j] if i == k else 0)
                for k in range(3))
            for j in range(3))
        for i in range(3))
    om = tuple(
        tuple(sum(levi_civita(i + 1, j + 1, k + 1) * b[k] for k in range(3)) for j in range(3))
        for i in range(3))
    return AlgebraSpec(3, c, om)


def forced_b(n: Matrix, a: Sequence) -> tuple:
    """The unique b compatible with the bracket data: b = -2 n a."""
    if n.dim != 3 or len(a) != 3:
        raise ValueError("forced_b requires 3-dimensional data")
    return tuple(-2 * x for x in n.apply(a))


def t_vector(t: NabTriple) -> tuple:
    """Validity defect t = 4 n a + 2 b; zero iff the triple is a valid algebra."""
    na = t.n.apply(t.a)
    return tuple(4 * x + 2 * y for x, y in zip(na, t.b))


def forced_omega(c) -> tuple:
    """The unique compatible 2-form of a 3d skew bracket, as a full matrix."""
    spec_c = tuple(tuple(tuple(row) for row in plane) for plane in c)
    probe = AlgebraSpec(3, spec_c, AlgebraSpec.zero(3).omega)
    trip = decompose(probe)
    b = forced_b(trip.n, trip.a)
    return reconstruct(NabTriple(trip.n, trip.a, b)).omega
