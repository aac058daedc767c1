"""Omega-deformed Lie algebras in any finite dimension.

An algebra is a skew bracket plus a skew 2-form omega.  The bracket is stored
as structure constants ``c[k][i][j]`` (0-based nested tuples): the e_{k+1}
component of [e_{i+1}, e_{j+1}].  Validity means the deformed Jacobi identity

    [A,[B,C]] + [C,[A,B]] + [B,[C,A]] = omega(B,C) A + omega(A,B) C + omega(C,A) B

holds; ``residual`` packages its component form (the antisymmetrized
quadratic constraint, weight 1/3!) so that validity is ``residual(spec).is_zero``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .tensor_core import Matrix, invert, rational


class SkewViolation(NamedTuple):
    tensor: str          # "c" or "omega"
    indices: tuple       # 1-based; ("c", (k, i, j)) or ("omega", (i, j))


class SkewViolationError(ValueError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__(f"bracket/omega not skew: {self.violations}")


@dataclass(frozen=True)
class AlgebraSpec:
    """Structure constants and 2-form of one algebra, dimension ``dim``."""

    dim: int
    c: tuple      # c[k][i][j], 0-based
    omega: tuple  # omega[i][j], 0-based

    def __post_init__(self):
        n = self.dim
        if not isinstance(n, int) or n < 1:
            raise ValueError("dim must be a positive integer")
        c = tuple(tuple(tuple(plane) for plane in mat) for mat in self.c)
        om = tuple(tuple(row) for row in self.omega)
        if len(c) != n or any(len(m) != n or any(len(r) != n for r in m) for m in c):
            raise ValueError("c must have shape dim x dim x dim")
        if len(om) != n or any(len(r) != n for r in om):
            raise ValueError("omega must have shape dim x dim")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "omega", om)

    @classmethod
    def zero(cls, dim: int) -> "AlgebraSpec":
        z = tuple(tuple((0,) * dim for _ in range(dim)) for _ in range(dim))
        return cls(dim, z, tuple((0,) * dim for _ in range(dim)))

    @classmethod
    def from_entries(cls, dim, c_entries=(), omega_entries=()) -> "AlgebraSpec":
        """Build a spec from sparse 1-based entries with implicit skew completion.

        ``c_entries``: iterable of (i, j, k, value) meaning the e_k component of
        [e_i, e_j], with i < j.  ``omega_entries``: (i, j, value) with i < j.
        """
        c = [[[rational(0)] * dim for _ in range(dim)] for _ in range(dim)]
        om = [[rational(0)] * dim for _ in range(dim)]
        seen_c, seen_om = set(), set()
        for (i, j, k, value) in c_entries:
            if not (1 <= i < j <= dim and 1 <= k <= dim):
                raise ValueError(f"c entry ({i},{j},{k}) out of range for dim {dim}")
            if (i, j, k) in seen_c:
                raise ValueError(f"duplicate c entry ({i},{j},{k})")
            seen_c.add((i, j, k))
            v = rational(value)
            c[k - 1][i - 1][j - 1] = v
            c[k - 1][j - 1][i - 1] = -v
        for (i, j, value) in omega_entries:
            if not (1 <= i < j <= dim):
                raise ValueError(f"omega entry ({i},{j}) out of range for dim {dim}")
            if (i, j) in seen_om:
                raise ValueError(f"duplicate omega entry ({i},{j})")
            seen_om.add((i, j))
            v = rational(value)
            om[i - 1][j - 1] = v
            om[j - 1][i - 1] = -v
        return cls(dim, tuple(map(tuple, (map(tuple, m) for m in c))), tuple(map(tuple, om)))

    def c_at(self, k: int, i: int, j: int):
        """1-based accessor: the e_k component of [e_i, e_j]."""
        return self.c[k - 1][i - 1][j - 1]

    def omega_at(self, i: int, j: int):
        return self.omega[i - 1][j - 1]

    def basis(self) -> tuple:
        return tuple(tuple(1 if i == j else 0 for j in range(self.dim)) for i in range(self.dim))

    def astype_float(self) -> "AlgebraSpec":
        c = tuple(tuple(tuple(float(x) for x in r) for r in m) for m in self.c)
        om = tuple(tuple(float(x) for x in r) for r in self.omega)
        return AlgebraSpec(self.dim, c, om)


def validate_skew(spec: AlgebraSpec) -> tuple[SkewViolation, ...]:
    """Every index pair violating skewness of c or omega; empty means valid."""
    out = []
    n = spec.dim
    for k in range(n):
        for i in range(n):
            for j in range(i, n):
                if spec.c[k][i][j] != -spec.c[k][j][i]:
                    out.append(SkewViolation("c", (k + 1, i + 1, j + 1)))
    for i in range(n):
        for j in range(i, n):
            if spec.omega[i][j] != -spec.omega[j][i]:
                out.append(SkewViolation("omega", (i + 1, j + 1)))
    return tuple(out)


def _require_skew(spec: AlgebraSpec):
    violations = validate_skew(spec)
    if violations:
        raise SkewViolationError(violations)


def _check_vec(spec, vec):
    if len(vec) != spec.dim:
        raise ValueError(f"vector length {len(vec)} does not match dim {spec.dim}")


def bracket(spec: AlgebraSpec, x: Sequence, y: Sequence) -> tuple:
    """[x, y] componentwise: result_k = sum_ij c[k][i][j] x_i y_j."""
    _check_vec(spec, x)
    _check_vec(spec, y)
    n = spec.dim
    return tuple(
        sum(spec.c[k][i][j] * x[i] * y[j] for i in range(n) for j in range(n) if spec.c[k][i][j])
        for k in range(n))


def omega_value(spec: AlgebraSpec, x: Sequence, y: Sequence):
    """omega(x, y)."""
    _check_vec(spec, x)
    _check_vec(spec, y)
    n = spec.dim
    return sum(spec.omega[i][j] * x[i] * y[j] for i in range(n) for j in range(n) if spec.omega[i][j])


def jacobiator(spec: AlgebraSpec, a: Sequence, b: Sequence, c: Sequence) -> tuple:
    """[a,[b,c]] + [c,[a,b]] + [b,[c,a]]; identically zero exactly for Lie brackets."""
    first = bracket(spec, a, bracket(spec, b, c))
    second = bracket(spec, c, bracket(spec, a, b))
    third = bracket(spec, b, bracket(spec, c, a))
    return tuple(p + q + r for p, q, r in zip(first, second, third))


def omega_rhs(spec: AlgebraSpec, a: Sequence, b: Sequence, c: Sequence) -> tuple:
    """omega(b,c) a + omega(a,b) c + omega(c,a) b, the deformation side."""
    wbc = omega_value(spec, b, c)
    wab = omega_value(spec, a, b)
    wca = omega_value(spec, c, a)
    return tuple(wbc * a[m] + wab * c[m] + wca * b[m] for m in range(spec.dim))


# The six permutations of three slots with their signs, for weight-1/3!
# antisymmetrization.
_PERM3 = (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
          ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1))


@dataclass(frozen=True)
class ResidualTensor:
    """Antisymmetrized validity defect; zero iff the spec is a valid algebra.

    Component (m, l, j, k) is the weight-1/3! antisymmetrization over
    (l, j, k) of  sum_i c[m][i][l] c[i][j][k] + delta(m,l) omega[j][k].
    On basis triples, jacobiator minus omega_rhs equals -3 times this.
    """

    dim: int
    components: tuple  # [m][l][j][k], 0-based

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for m in self.components for l in m for j in l for x in j)

    def nonzero_components(self):
        """Yield ((m, l, j, k) 1-based, value) for every nonzero component."""
        n = self.dim
        for m in range(n):
            for l in range(n):
                for j in range(n):
                    for k in range(n):
                        v = self.components[m][l][j][k]
                        if v != 0:
                            yield (m + 1, l + 1, j + 1, k + 1), v


def residual(spec: AlgebraSpec) -> ResidualTensor:
    """The validity defect tensor; ``residual(spec).is_zero`` decides validity."""
    _require_skew(spec)
    n = spec.dim
    c, om = spec.c, spec.omega

    def t_comp(m, l, j, k):
        acc = sum(c[m][i][l] * c[i][j][k] for i in range(n))
        if m == l:
            acc += om[j][k]
        return acc

    six = rational(6)  # weight 1/3!; keeps Fractions exact, floats stay floats
    # The antisymmetrization makes the result totally antisymmetric in
    # (l, j, k), so only l < j < k is computed; the rest is sign bookkeeping.
    comps = [[[[0] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for m in range(n):
        for l in range(n):
            for j in range(l + 1, n):
                for k in range(j + 1, n):
                    val = sum(
                        sign * t_comp(m, (l, j, k)[p0], (l, j, k)[p1], (l, j, k)[p2])
                        for (p0, p1, p2), sign in _PERM3) / six
                    for (p0, p1, p2), sign in _PERM3:
                        comps[m][(l, j, k)[p0]][(l, j, k)[p1]][(l, j, k)[p2]] = sign * val
    return ResidualTensor(n, tuple(
        tuple(tuple(tuple(row) for row in plane) for plane in block)
        for block in comps))


def transport(spec: AlgebraSpec, p: Matrix) -> AlgebraSpec:
    """Change of basis e'_j = p[q][j] e_q (new basis vectors are columns of p).

    c'[i][j][k] = inv(p)[i][q] c[q][r][s] p[r][j] p[s][k];
    omega'[i][j] = p[w][i] p[v][j] omega[w][v].
    """
    n = spec.dim
    if p.dim != n:
        raise ValueError("transform dimension does not match spec")
    pinv = invert(p)
    c = spec.c
    # half-transformed bracket: u[q][j][k] = c[q][r][s] p[r][j] p[s][k]
    u = [[[sum(c[q][r][s] * p[r][j] * p[s][k] for r in range(n) for s in range(n))
           for k in range(n)] for j in range(n)] for q in range(n)]
    c_new = tuple(
        tuple(tuple(sum(pinv[i][q] * u[q][j][k] for q in range(n)) for k in range(n))
              for j in range(n))
        for i in range(n))
    om = spec.omega
    om_new = tuple(
        tuple(sum(p[w][i] * p[v][j] * om[w][v] for w in range(n) for v in range(n))
              for j in range(n))
        for i in range(n))
    return AlgebraSpec(n, c_new, om_new)


def omega_rhs_is_identically_zero(omega) -> bool:
    """Whether the deformation side vanishes on all basis triples.

    In dimension 2 this holds for every skew omega (no deformation is ever
    visible); in dimension != 2 it forces omega = 0.  Decided by brute
    evaluation, not by the dimension shortcut.
    """
    om = tuple(tuple(row) for row in omega)
    n = len(om)
    if any(len(r) != n for r in om):
        raise ValueError("omega must be square")
    if any(om[i][j] != -om[j][i] for i in range(n) for j in range(i, n)):
        raise ValueError("omega must be skew")
    for l in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    val = om[j][k] * (1 if m == l else 0) \
                        + om[l][j] * (1 if m == k else 0) \
                        + om[k][l] * (1 if m == j else 0)
                    if val != 0:
                        return False
    return True
