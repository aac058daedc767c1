"""Bianchi-style classification of 3-dimensional omega-deformed Lie algebras.

Every valid spec lands on exactly one row of the two normal-form tables (the
undeformed a = 0 family and the thirteen a != 0 rows).  Labels, certificates
and the continuous parameters are decided in exact rational arithmetic:

* inertia of n, invariant up to a (p, q) swap because a basis change of
  determinant D carries n to D * congruence(n);
* the kernel test n a = 0 and the quadratic form q = a^T n a;
* for rank-3 n the fully invariant ratio q / det(n);
* for rank-2 n with a in its kernel the ratio (a x a) / adjugate(n), which
  is invariant because the adjugate transforms by plain congruence.

Floats enter only when building the canonical basis transform (square roots
for the +-1 normalization, rotations and boosts) and the reported parameter.

Canonical commutation relations of every table row (b = -2 n a throughout):

    [e1,e2] = n3 e3 - a2 e1 + a1 e2       omega(e1,e2) = -2 n3 a3
    [e3,e1] = n2 e2 - a1 e3 + a3 e1       omega(e3,e1) = -2 n2 a2
    [e2,e3] = n1 e1 - a3 e2 + a2 e3       omega(e2,e3) = -2 n1 a1
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra_core import AlgebraSpec, transport
from .decomp3d import NabTriple, decompose, forced_b, reconstruct, t_vector
from .tensor_core import (Inertia, Matrix, adjugate, congruence_diagonalize,
                          inertia, invert, rational)


class NotAnAlgebraError(ValueError):
    """The supplied omega is incompatible with the bracket."""

    def __init__(self, t):
        self.t = tuple(t)
        ts = ", ".join(str(x) for x in self.t)
        super().__init__(
            f"omega does not satisfy the deformed Jacobi identity: t = 4 n a + 2 b = ({ts}); "
            "the unique compatible choice is b = -2 n a")


# label -> (n diagonal, a pattern, has continuous parameter)
# Parametric labels scale the a pattern by the parameter.
_TABLE = {
    # a = 0 family
    "I":       ((0, 0, 0),  (0, 0, 0), False),
    "II":      ((1, 0, 0),  (0, 0, 0), False),
    "VI0":     ((1, -1, 0), (0, 0, 0), False),
    "VII0":    ((1, 1, 0),  (0, 0, 0), False),
    "VIII":    ((1, 1, -1), (0, 0, 0), False),
    "IX":      ((1, 1, 1),  (0, 0, 0), False),
    # a != 0 family
    "V":       ((0, 0, 0),  (0, 0, 1), False),
    "IV":      ((1, 0, 0),  (0, 0, 1), False),
    "IV_x":    ((1, 0, 0),  (1, 0, 0), False),
    "VI_a":    ((1, -1, 0), (0, 0, 1), True),
    "VI_x":    ((1, -1, 0), (1, 0, 0), False),
    "VI_y":    ((1, -1, 0), (0, 1, 0), False),
    "VI_n":    ((1, -1, 0), (1, 1, 0), False),
    "VII_a":   ((1, 1, 0),  (0, 0, 1), True),
    "VII_x":   ((1, 1, 0),  (1, 0, 0), False),
    "VIII_a":  ((1, 1, -1), (0, 0, 1), True),
    "VIII_xa": ((1, 1, -1), (1, 0, 0), True),
    "VIII_na": ((1, 1, -1), (1, 0, 1), True),
    "IX_a":    ((1, 1, 1),  (0, 0, 1), True),
}

FIRST_TABLE_ORDER = ("I", "II", "VI0", "VII0", "VIII", "IX")
SECOND_TABLE_ORDER = ("V", "IV", "IV_x", "VI_a", "VI_x", "VI_y", "VI_n",
                      "VII_a", "VII_x", "VIII_a", "VIII_xa", "VIII_na", "IX_a")
PARAMETRIC_LABELS = frozenset(l for l, (_, _, p) in _TABLE.items() if p)

_VI_COLLAPSE_NOTE = (
    "VI_x and VI_y lie on one orbit: the basis swap e1 <-> e2 (determinant -1) "
    "preserves n = diag(1, -1, 0) and exchanges their a data; VI_x is the "
    "canonical representative reported here.")
_NULL_PARAM_NOTE = (
    "the null-family parameter is pipeline-determined and may not separate "
    "orbits (boosts rescale null covectors); only the label and the null "
    "certificate are certified.")


@dataclass(frozen=True)
class BianchiLabel:
    """A table row name plus its continuous parameter when the row has one."""

    name: str
    parameter: Optional[float] = None

    def __post_init__(self):
        if self.name not in _TABLE:
            raise ValueError(f"unknown label {self.name!r}")
        if self.parameter is not None and not self.parameter > 0:
            raise ValueError("parameter must be positive")

    def __str__(self):
        if self.parameter is None:
            return self.name
        return f"{self.name}({self.parameter:.12g})"


@dataclass(frozen=True)
class ExactCertificates:
    """Rational-arithmetic invariants backing a classification."""

    n_inertia: Inertia     # canonical orientation: positive >= negative
    a_is_zero: bool
    causal: str            # zero / kernel-only / spacelike / timelike / null


@dataclass(frozen=True)
class NormalForm:
    """Classification outcome: label, canonical float spec and basis transform."""

    label: BianchiLabel
    canonical: AlgebraSpec
    transform: Matrix          # float; transport(input, transform) ~ canonical
    certificates: ExactCertificates
    notes: tuple
    transform_error: float     # max deviation of the transform check

    @property
    def parameter(self):
        return self.label.parameter


@dataclass(frozen=True)
class ScalingGroup:
    """Diagonal basis scalings preserving a normalized diagonal n.

    A scaling diag(l1, l2, l3) preserves n_i exactly when (l_j l_k - l_i)
    n_i = 0 for each cyclic (i, j, k), so each nonzero n_i activates one
    constraint.  With all three active the group is the finite four-element
    sign group; otherwise continuous factors remain.
    """

    n_diag: tuple
    active: tuple  # active[i] <-> constraint l_j l_k = l_i is in force

    @property
    def dimension(self) -> int:
        return (3, 2, 1, 0)[sum(self.active)]

    @property
    def is_finite(self) -> bool:
        return self.dimension == 0

    def finite_solutions(self) -> tuple:
        if not self.is_finite:
            raise ValueError("the admissible set has continuous factors")
        return ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))

    def is_admissible(self, lam: Sequence) -> bool:
        if len(lam) != 3 or any(x == 0 for x in lam):
            return False
        l1, l2, l3 = lam
        checks = (l2 * l3 == l1, l3 * l1 == l2, l1 * l2 == l3)
        return all(c for c, act in zip(checks, self.active) if act)

    def sample(self, rng: random.Random) -> tuple:
        """A pseudorandom admissible scaling with small rational entries."""
        def nz():
            v = 0
            while v == 0:
                v = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            return v

        count = sum(self.active)
        if count == 0:
            lam = (nz(), nz(), nz())
        elif count == 1:
            i = self.active.index(True)
            lam = [None, None, None]
            lam[(i + 1) % 3] = nz()
            lam[(i + 2) % 3] = nz()
            lam[i] = lam[(i + 1) % 3] * lam[(i + 2) % 3]
            lam = tuple(lam)
        elif count == 2:
            k = self.active.index(False)
            i, j = (k + 1) % 3, (k + 2) % 3
            s = rng.choice((1, -1))
            t = nz()
            lam = [None, None, None]
            lam[k], lam[i], lam[j] = s, t, t * s
            lam = tuple(lam)
        else:
            lam = rng.choice(self.finite_solutions())
        assert self.is_admissible(lam)
        return lam


def _check_normalized_diag(n_diag):
    nd = tuple(n_diag)
    if len(nd) != 3 or any(x not in (-1, 0, 1) for x in nd):
        raise ValueError("n must be a normalized diagonal with entries in {-1, 0, 1}")
    return nd


def residual_scalings(n_diag) -> ScalingGroup:
    """Admissible diagonal scalings of a normalized diagonal n."""
    nd = _check_normalized_diag(n_diag)
    return ScalingGroup(nd, tuple(x != 0 for x in nd))


def causal_character(n_diag, a) -> str:
    """Causal type of the covector a against a normalized diagonal n.

    Returns one of zero, kernel-only, mixed, spacelike, timelike, null:
    a splits into its range part (components on nonzero n_i) and kernel
    part; "mixed" flags a nonzero kernel part next to a nonzero range part,
    otherwise the sign of q = sum n_i a_i^2 decides.
    """
    nd = _check_normalized_diag(n_diag)
    classes = [0 if x > 0 else (1 if x < 0 else 2) for x in nd]
    if classes != sorted(classes) or nd.count(1) < nd.count(-1):
        raise ValueError("n must be ordered positives, negatives, zeros "
                         "with positive count >= negative count")
    av = tuple(a)
    if len(av) != 3:
        raise ValueError("a must have three components")
    if all(x == 0 for x in av):
        return "zero"
    range_part = any(av[i] != 0 for i in range(3) if nd[i] != 0)
    kernel_part = any(av[i] != 0 for i in range(3) if nd[i] == 0)
    if not range_part:
        return "kernel-only"
    if kernel_part:
        return "mixed"
    q = sum(nd[i] * av[i] * av[i] for i in range(3))
    if q > 0:
        return "spacelike"
    if q < 0:
        return "timelike"
    return "null"


def table_row(label: str) -> tuple:
    """(n diagonal, a pattern, parametric flag) of one table row."""
    if label not in _TABLE:
        raise ValueError(f"unknown label {label!r}; known: {', '.join(sorted(_TABLE))}")
    return _TABLE[label]


def generate(label: str, param=None) -> AlgebraSpec:
    """The exact canonical spec of one table row.

    Parametric rows (VI_a, VII_a, VIII_a, VIII_xa, VIII_na, IX_a) require a
    positive rational parameter; all others refuse one.
    """
    if label not in _TABLE:
        raise ValueError(f"unknown label {label!r}; known: {', '.join(sorted(_TABLE))}")
    nd, apat, parametric = _TABLE[label]
    if parametric:
        if param is None:
            raise ValueError(f"label {label} requires a positive parameter")
        p = rational(param)
        if p <= 0:
            raise ValueError(f"parameter for {label} must be positive, got {param}")
    else:
        if param is not None:
            raise ValueError(f"label {label} does not take a parameter")
        p = Fraction(1)
    n = Matrix.diagonal(tuple(rational(x) for x in nd))
    a = tuple(rational(x) * p for x in apat)
    return reconstruct(NabTriple(n, a, forced_b(n, a)))


def orbit_sample(label: str, param=None, *, seed: int) -> AlgebraSpec:
    """A pseudorandom point on the orbit of generate(label, param).

    Transports the canonical spec by an invertible rational matrix whose
    entries come from a generator seeded with ``seed``; deterministic per
    seed, resampling on singular draws.
    """
    base = generate(label, param)
    rng = random.Random(seed)
    while True:
        p = Matrix(tuple(
            tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(3))
            for _ in range(3)))
        if p.det() != 0:
            return transport(base, p)


# ---------------------------------------------------------------------------
# exact discrete classification


def _adjugate_ratio(n: Matrix, a) -> Fraction:
    # For rank-2 n and a in its kernel, a x a = rho * adjugate(n); rho is a
    # full orbit invariant (both sides transform by plain congruence).
    adj = adjugate(n)
    best = max(((i, j) for i in range(3) for j in range(3)),
               key=lambda ij: abs(adj[ij[0]][ij[1]]))
    i, j = best
    if adj[i][j] == 0:
        raise ValueError("adjugate vanished; n does not have rank 2")
    return Fraction(a[i] * a[j]) / adj[i][j]


_AZERO_LABELS = {(0, 0, 3): "I", (1, 0, 2): "II", (1, 1, 1): "VI0",
                 (2, 0, 1): "VII0", (2, 1, 0): "VIII", (3, 0, 0): "IX"}


def _discrete_classify(n: Matrix, a):
    """Label, squared-parameter invariant, and exact certificates of (n, a)."""
    inert = inertia(n)
    praw, qraw = inert.positive, inert.negative
    canon = Inertia(max(praw, qraw), min(praw, qraw), inert.zero)
    rank = canon.rank
    a_zero = all(x == 0 for x in a)
    na = n.apply(a)
    kernel_only = (not a_zero) and all(x == 0 for x in na)
    qf = sum(x * y for x, y in zip(a, na))
    if a_zero:
        causal = "zero"
    elif kernel_only:
        causal = "kernel-only"
    else:
        if rank == 3:
            flip = praw < qraw
        elif rank == 2:
            flip = (qf < 0) if praw == qraw else (praw == 0)
        else:
            flip = praw == 0
        qc = -qf if flip else qf
        causal = "spacelike" if qc > 0 else ("timelike" if qc < 0 else "null")

    param2 = None
    if a_zero:
        label = _AZERO_LABELS[canon.as_tuple()]
    elif rank == 0:
        label = "V"
    elif rank == 1:
        label = "IV" if kernel_only else "IV_x"
    elif rank == 2:
        if kernel_only:
            rho = _adjugate_ratio(n, a)
            if canon.as_tuple() == (1, 1, 1):
                label, param2 = "VI_a", -rho
            else:
                label, param2 = "VII_a", rho
        elif canon.as_tuple() == (1, 1, 1):
            label = "VI_n" if qf == 0 else "VI_x"
        else:
            label = "VII_x"
    else:
        r = Fraction(qf) / n.det()
        if canon.as_tuple() == (3, 0, 0):
            label, param2 = "IX_a", r
        elif r > 0:
            label, param2 = "VIII_a", r
        elif r < 0:
            label, param2 = "VIII_xa", -r
        else:
            label = "VIII_na"
    if param2 is not None and param2 <= 0:
        raise AssertionError(f"parameter invariant lost positivity for {label}: {param2}")
    return label, param2, ExactCertificates(canon, a_zero, causal)


# ---------------------------------------------------------------------------
# canonical basis transform


def _act_nab(n: Matrix, a, p: Matrix):
    # how (n, a) respond to the transport e'_j = p[q][j] e_q:
    # n picks up det(p) (it is a weight-one density), a is a plain covector
    pinv = invert(p)
    n2 = (pinv @ n @ pinv.transpose()).scale(p.det())
    return n2, p.transpose().apply(a)


def _permutation_det1(order):
    # column j picks basis vector order[j]; odd permutations get the last
    # column negated so det = +1 and diagonal n entries just permute
    cols = [[0] * 3 for _ in range(3)]
    parity = Matrix(tuple(tuple(1 if q == order[j] else 0 for j in range(3))
                          for q in range(3))).det()
    for j in range(3):
        cols[order[j]][j] = 1
    if parity < 0:
        for q in range(3):
            cols[q][2] = -cols[q][2]
    return Matrix(cols)


def _rotation12(c, s):
    return Matrix(((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0)))


def _reduce(n: Matrix, a, label: str):
    """Float basis transform carrying (n, a) onto its canonical table data.

    Exact stages run first: congruence diagonalization, sign-class sorting,
    the global sign flip enforcing positives >= negatives, shears killing
    mixed kernel components, gauge swaps and finite sign scalings.  Floats
    appear afterwards for the +-1 normalization of n and the rotation /
    boost / rescale stages; boost magnitudes are computed from exact
    discriminants so their domain constraints cannot be lost to rounding.
    """
    state_n, state_a = n, tuple(a)
    p_acc = Matrix.identity(3)

    def apply(p):
        nonlocal state_n, state_a, p_acc
        p_acc = p_acc @ p
        state_n, state_a = _act_nab(state_n, state_a, p)

    s, _ = congruence_diagonalize(state_n)
    apply(invert(s))

    def diag_vals():
        return tuple(state_n[i][i] for i in range(3))

    def sort_stage():
        d = diag_vals()
        order = sorted(range(3), key=lambda i: (0 if d[i] > 0 else (1 if d[i] < 0 else 2)))
        if order != [0, 1, 2]:
            apply(_permutation_det1(order))

    sort_stage()
    d = diag_vals()
    if sum(1 for x in d if x > 0) < sum(1 for x in d if x < 0):
        apply(Matrix.diagonal((1, 1, -1)))  # determinant -1 flips every sign of n
        sort_stage()

    # exact per-label reductions
    if label == "V":
        av = state_a
        i0 = max(range(3), key=lambda i: abs(av[i]))
        rows = []
        for j in range(3):
            if j != i0:
                row = [Fraction(0)] * 3
                row[j], row[i0] = Fraction(1), -Fraction(av[j]) / av[i0]
                rows.append(row)
        last = [Fraction(0)] * 3
        last[i0] = 1 / Fraction(av[i0])
        rows.append(last)
        apply(Matrix(rows).transpose())  # a -> (0, 0, 1); n = 0 is unconstrained
    elif label == "IV":
        a2, a3 = state_a[1], state_a[2]
        if a3 != 0:
            bt = ((Fraction(a3), Fraction(-a2)), (Fraction(0), 1 / Fraction(a3)))
        else:
            bt = ((Fraction(0), Fraction(-a2)), (1 / Fraction(a2), Fraction(0)))
        apply(Matrix((
            (1, 0, 0),
            (0, bt[0][0], bt[1][0]),
            (0, bt[0][1], bt[1][1]),
        )))  # unimodular on the kernel plane: (a2, a3) -> (0, 1)
    elif label == "IV_x":
        a1, a2, a3 = state_a
        apply(Matrix(((1, -Fraction(a2) / a1, -Fraction(a3) / a1), (0, 1, 0), (0, 0, 1))))
        a1 = state_a[0]
        apply(Matrix.diagonal((1 / Fraction(a1), 1 / Fraction(a1), Fraction(1))))
    elif label in ("VI_a", "VII_a"):
        if state_a[2] < 0:
            apply(Matrix.diagonal((1, -1, -1)))
    elif label in ("VI_x", "VI_n", "VII_x"):
        a1, a2, a3 = state_a
        if a3 != 0:  # shear the kernel component away along the larger entry
            if abs(a1) >= abs(a2):
                apply(Matrix(((1, 0, -Fraction(a3) / a1), (0, 1, 0), (0, 0, 1))))
            else:
                apply(Matrix(((1, 0, 0), (0, 1, -Fraction(a3) / a2), (0, 0, 1))))
        if label == "VI_x":
            dd, av = diag_vals(), state_a
            if sum(dd[i] * av[i] * av[i] for i in range(3)) < 0:
                apply(Matrix(((0, 1, 0), (1, 0, 0), (0, 0, 1))))  # VI_y -> VI_x gauge
        if label == "VI_n" and state_a[0] * state_a[1] < 0:
            apply(Matrix.diagonal((1, -1, -1)))
    elif label in ("VIII_a", "VIII_na") and state_a[2] < 0:
        apply(Matrix.diagonal((1, -1, -1)))

    d_exact = diag_vals()
    a_exact = state_a

    # normalize n to signs: mu_i = sqrt(|d_i|)/g with g = prod sqrt(|d_i|)
    g2 = Fraction(1)
    for x in d_exact:
        if x != 0:
            g2 *= abs(x)
    g = math.sqrt(g2)
    mu = tuple((math.sqrt(abs(x)) if x != 0 else 1.0) / g for x in d_exact)
    # exact squares of the normalized a components, for boost discriminants
    asq = tuple(Fraction(a_exact[i]) ** 2 * (abs(d_exact[i]) if d_exact[i] != 0 else 1) / g2
                for i in range(3))

    state_n = state_n.astype_float()
    state_a = tuple(float(x) for x in state_a)
    p_acc = p_acc.astype_float()
    apply(Matrix.diagonal(mu))

    pipeline_param = None
    if label == "IV":
        r = state_a[2]
        apply(Matrix.diagonal((1.0 / r, 1.0, 1.0 / r)))
    elif label == "VI_n":
        t = 1.0 / state_a[0]
        apply(Matrix.diagonal((t, t, 1.0)))
    elif label == "VI_x":
        tau2 = asq[1] / asq[0]  # < 1 exactly: the gauge swap made q positive
        if tau2 != 0:
            sign = -1.0 if state_a[0] * state_a[1] > 0 else 1.0
            tau = sign * math.sqrt(float(tau2))
            ch = 1.0 / math.sqrt(float(1 - tau2))
            sh = tau * ch
            apply(Matrix(((ch, sh, 0.0), (sh, ch, 0.0), (0.0, 0.0, 1.0))))
        t = 1.0 / state_a[0]
        apply(Matrix.diagonal((t, t, 1.0)))
    elif label == "VII_x":
        a1, a2 = state_a[0], state_a[1]
        rho = math.hypot(a1, a2)
        apply(_rotation12(a1 / rho, a2 / rho))
        t = 1.0 / state_a[0]
        apply(Matrix.diagonal((t, t, 1.0)))
    elif label in ("VIII_a", "VIII_xa", "VIII_na"):
        a1, a2 = state_a[0], state_a[1]
        if a1 != 0.0 or a2 != 0.0:
            rho = math.hypot(a1, a2)
            apply(_rotation12(a1 / rho, a2 / rho))
        if label == "VIII_a":
            tau2 = (asq[0] + asq[1]) / asq[2]
            if tau2 != 0:
                tau = -math.sqrt(float(tau2))  # rotation left a1 >= 0, flip left a3 > 0
                ch = 1.0 / math.sqrt(float(1 - tau2))
                apply(Matrix(((ch, 0.0, tau * ch), (0.0, 1.0, 0.0), (tau * ch, 0.0, ch))))
        elif label == "VIII_xa":
            tau2 = asq[2] / (asq[0] + asq[1])
            if tau2 != 0:
                sign = -1.0 if state_a[2] > 0 else 1.0
                tau = sign * math.sqrt(float(tau2))
                ch = 1.0 / math.sqrt(float(1 - tau2))
                apply(Matrix(((ch, 0.0, tau * ch), (0.0, 1.0, 0.0), (tau * ch, 0.0, ch))))
        else:
            pipeline_param = state_a[0]
    elif label == "IX_a":
        av = state_a
        norm = math.sqrt(sum(x * x for x in av))
        w = tuple(x / norm for x in av)
        m = min(range(3), key=lambda i: abs(w[i]))
        seed_vec = [0.0, 0.0, 0.0]
        seed_vec[m] = 1.0
        dot = sum(seed_vec[i] * w[i] for i in range(3))
        u = [seed_vec[i] - dot * w[i] for i in range(3)]
        un = math.sqrt(sum(x * x for x in u))
        u = [x / un for x in u]
        v = (w[1] * u[2] - w[2] * u[1], w[2] * u[0] - w[0] * u[2], w[0] * u[1] - w[1] * u[0])
        apply(Matrix((tuple(u), v, w)).transpose())  # rows (u, v, w) are SO(3)

    return p_acc, state_n, state_a, pipeline_param


def _canonical_spec(label: str, parameter) -> AlgebraSpec:
    nd, apat, parametric = _TABLE[label]
    p = float(parameter) if parametric else 1.0
    nmat = Matrix.diagonal(tuple(float(x) for x in nd))
    a = tuple(float(x) * p for x in apat)
    return reconstruct(NabTriple(nmat, a, forced_b(nmat, a)))


def _max_deviation(s1: AlgebraSpec, s2: AlgebraSpec) -> float:
    err = 0.0
    for m1, m2 in zip(s1.c, s2.c):
        for r1, r2 in zip(m1, m2):
            for x, y in zip(r1, r2):
                err = max(err, abs(x - y))
    for r1, r2 in zip(s1.omega, s2.omega):
        for x, y in zip(r1, r2):
            err = max(err, abs(x - y))
    return err


def classify(spec: AlgebraSpec, *, float_tol: float = 1e-9) -> NormalForm:
    """Classify a valid 3-dimensional spec onto its normal-form table row.

    Raises NotAnAlgebraError (reporting t = 4 n a + 2 b) when the supplied
    omega is not the forced one, and ValueError for non-rational or
    non-3-dimensional input.
    """
    if spec.dim != 3:
        raise ValueError("classify requires dim 3")
    if not _spec_is_rational(spec):
        raise TypeError("classify requires exact rational entries")
    trip = decompose(spec)
    t = t_vector(trip)
    if any(x != 0 for x in t):
        raise NotAnAlgebraError(t)

    label, param2, certs = _discrete_classify(trip.n, trip.a)
    p_total, _, _, pipeline_param = _reduce(trip.n, trip.a, label)

    if param2 is not None:
        parameter = math.sqrt(param2)
    elif label == "VIII_na":
        parameter = pipeline_param
    else:
        parameter = None

    canonical = _canonical_spec(label, parameter)
    err = _max_deviation(transport(spec.astype_float(), p_total), canonical)

    notes = []
    if label == "VI_x":
        notes.append(_VI_COLLAPSE_NOTE)
    if label == "VIII_na":
        notes.append(_NULL_PARAM_NOTE)
    if err > float_tol:
        notes.append(f"canonical transform check exceeded tolerance: max deviation {err:.3e}")

    return NormalForm(BianchiLabel(label, parameter), canonical, p_total,
                      certs, tuple(notes), err)


def _spec_is_rational(spec: AlgebraSpec) -> bool:
    def ok(v):
        return isinstance(v, (int, Fraction)) and not isinstance(v, bool)
    return (all(ok(x) for m in spec.c for r in m for x in r)
            and all(ok(x) for r in spec.omega for x in r))
