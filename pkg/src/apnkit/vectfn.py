"""Vectorial Boolean function (S-box) analysis.

Components, difference distribution tables, APN and weak-APN tests, degree
statistics, derivative Fourier sums, and the structural checks consumed by
the verification suites. The dimension is capped at 8: full component scans
are quadratic in the table size.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _bits, boolfn, linalg
from .boolfn import BoolFn, ShapeProfile
from .errors import SboxFormatError, TheoremContradiction

MIN_DIM = 2
MAX_DIM = 8


class VectFn:
    """F: {0,1}^m -> {0,1}^m as a lookup table of 2^m values."""

    __slots__ = ("m", "table")

    def __init__(self, table):
        entries = tuple(int(v) for v in table)
        m = len(entries).bit_length() - 1
        if len(entries) != 1 << m or not MIN_DIM <= m <= MAX_DIM:
            raise ValueError(
                f"table length {len(entries)} must be 2^m with {MIN_DIM} <= m <= {MAX_DIM}"
            )
        bad = [v for v in entries if not 0 <= v < (1 << m)]
        if bad:
            raise ValueError(f"table entries out of range [0, 2^{m}): {bad[:4]}")
        self.m = m
        self.table = entries

    def __eq__(self, other):
        return isinstance(other, VectFn) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"VectFn(m={self.m}, {list(self.table)!r})"


@dataclass(frozen=True)
class Ddt:
    """counts[a][b] = number of x with F(x^a) ^ F(x) = b."""

    m: int
    counts: np.ndarray
    delta: int

    @property
    def is_apn(self) -> bool:
        return self.delta == 2


@dataclass(frozen=True)
class WeakUniformity:
    delta_bar: int
    weakly_apn: bool
    image_sizes: tuple[int, ...]  # |Im(D_a F)| for a = 1 .. 2^m-1


@dataclass(frozen=True)
class DegreeStats:
    n: tuple[int, ...]  # n[i] = number of nonzero components of degree i
    max_degree: int
    pure_quadratic: bool
    pure_cubic: bool
    n_hat: int


@dataclass(frozen=True)
class ComponentProfile:
    lam: int
    degree: int
    gamma_count: int
    shape: ShapeProfile
    fourier_of_derivatives: tuple[int, ...] | None = None


@dataclass(frozen=True)
class StructuralFlags:
    apn: bool
    weakly_apn: bool
    permutation: bool
    n2_zero: bool
    no_partially_bent_component: bool
    ea_inequivalent_to_permutation: bool


# ---------------------------------------------------------------------------
# components and derivatives


def component(f: VectFn, lam: int) -> BoolFn:
    """The single-bit function x -> parity(lam AND F(x)); lam must be nonzero."""
    if not 0 < lam < (1 << f.m):
        raise ValueError(f"component index must be a nonzero m-bit mask, got {lam}")
    bits = 0
    for x, v in enumerate(f.table):
        bits |= ((lam & v).bit_count() & 1) << x
    return BoolFn(f.m, bits)


def derivative_table(f: VectFn, a: int) -> tuple[int, ...]:
    """Lookup table of D_a F: x -> F(x^a) ^ F(x)."""
    if not 0 <= a < (1 << f.m):
        raise ValueError(f"direction {a} out of range for m={f.m}")
    t = f.table
    return tuple(t[x ^ a] ^ t[x] for x in range(len(t)))


def is_permutation(f: VectFn) -> bool:
    return len(set(f.table)) == len(f.table)


# ---------------------------------------------------------------------------
# differential tables


def ddt(f: VectFn) -> Ddt:
    n = 1 << f.m
    tbl = np.array(f.table, dtype=np.int64)
    idx = np.arange(n)
    counts = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        counts[a] = np.bincount(tbl[idx ^ a] ^ tbl, minlength=n)
    counts.flags.writeable = False
    delta = int(counts[1:].max()) if n > 1 else 0
    return Ddt(f.m, counts, delta)


def is_apn(f: VectFn) -> bool:
    return ddt(f).is_apn


def weak_differential_uniformity(f: VectFn) -> WeakUniformity:
    """delta_bar = max over a != 0 of the least d with |Im(D_a F)| > 2^(m-1)/d."""
    half = 1 << (f.m - 1)
    sizes = []
    worst = 1
    for a in range(1, 1 << f.m):
        im = len(set(derivative_table(f, a)))
        sizes.append(im)
        worst = max(worst, half // im + 1)
    return WeakUniformity(worst, worst == 2, tuple(sizes))


# ---------------------------------------------------------------------------
# per-direction Fourier machinery
#
# For a fixed direction the signs matrix S[lam, x] = (-1)^(lam . D_aF(x))
# yields every F(D_a F_lam) as a row sum; everything below reads it.


def _derivative_sign_rows(f: VectFn, a: int) -> np.ndarray:
    n = 1 << f.m
    d = np.array(derivative_table(f, a), dtype=np.int64)
    lams = np.arange(n, dtype=np.int64)
    parity = _bits.PARITY8[lams[:, None] & d[None, :]]
    return (1 - 2 * parity.astype(np.int64)).sum(axis=1)


def nyberg_sum(f: VectFn, a: int) -> int:
    """Sum over all lam (including 0) of F(D_a F_lam)^2; >= 2^(2m+1), with
    equality at every nonzero a exactly for APN functions."""
    if a == 0:
        raise ValueError("direction must be nonzero")
    if not 0 < a < (1 << f.m):
        raise ValueError(f"direction {a} out of range for m={f.m}")
    rows = _derivative_sign_rows(f, a)
    return int((rows**2).sum())


def nonzero_fourier_components(f: VectFn, a: int) -> frozenset:
    """The set of nonzero lam with F(D_a F_lam) != 0."""
    if not 0 < a < (1 << f.m):
        raise ValueError(f"direction {a} must be nonzero and in range for m={f.m}")
    rows = _derivative_sign_rows(f, a)
    return frozenset(int(lam) for lam in np.nonzero(rows)[0] if lam)


def constant_derivative_pairs(f: VectFn) -> list[tuple[int, int, int]]:
    """All (a, lam, constant) with a, lam nonzero and D_a F_lam constant."""
    n = 1 << f.m
    out = []
    for a in range(1, n):
        d = np.array(derivative_table(f, a), dtype=np.int64)
        lams = np.arange(n, dtype=np.int64)
        parity = _bits.PARITY8[lams[:, None] & d[None, :]]
        sums = parity.sum(axis=1)
        for lam in range(1, n):
            s = int(sums[lam])
            if s == 0:
                out.append((a, lam, 0))
            elif s == n:
                out.append((a, lam, 1))
    return out


# ---------------------------------------------------------------------------
# aggregate statistics


def degree_stats(f: VectFn) -> DegreeStats:
    n = 1 << f.m
    counts = [0] * (f.m + 1)
    max_deg = 0
    for lam in range(1, n):
        d = boolfn.degree(component(f, lam))
        counts[d] += 1
        max_deg = max(max_deg, d)
    per_a = {}
    for a, _lam, _c in constant_derivative_pairs(f):
        per_a[a] = per_a.get(a, 0) + 1
    n_hat = max(per_a.values(), default=0)
    return DegreeStats(
        n=tuple(counts),
        max_degree=max_deg,
        pure_quadratic=counts[2] == n - 1,
        pure_cubic=counts[3] == n - 1,
        n_hat=n_hat,
    )


def component_profiles(f: VectFn, with_derivative_fourier: bool = False) -> list[ComponentProfile]:
    """One profile per nonzero component mask."""
    n = 1 << f.m
    fourier_rows = None
    if with_derivative_fourier:
        fourier_rows = np.stack(
            [_derivative_sign_rows(f, a) for a in range(1, n)], axis=0
        )  # shape (a, lam)
    out = []
    for lam in range(1, n):
        comp = component(f, lam)
        deg = boolfn.degree(comp)
        _gamma, count = boolfn.balanced_derivatives(comp)
        shape = boolfn.shape_profile(comp)
        per_a = None
        if fourier_rows is not None:
            per_a = tuple(int(v) for v in fourier_rows[:, lam])
        out.append(ComponentProfile(lam, deg, count, shape, per_a))
    return out


def has_partially_bent_component(f: VectFn) -> bool:
    for lam in range(1, 1 << f.m):
        if boolfn.shape_profile(component(f, lam)).partially_bent:
            return True
    return False


def structural_flags(f: VectFn) -> StructuralFlags:
    """Convenience aggregation of the headline predicates.

    For an APN permutation in even dimension the absence of quadratic and of
    partially bent components is a theorem; observing either here means the
    implementation is broken, so that case raises TheoremContradiction
    rather than returning data.
    """
    apn = is_apn(f)
    weakly = weak_differential_uniformity(f).weakly_apn
    perm = is_permutation(f)
    stats = degree_stats(f)
    n2_zero = stats.n[2] == 0
    has_pb = has_partially_bent_component(f)
    if apn and perm and f.m % 2 == 0 and (not n2_zero or has_pb):
        raise TheoremContradiction(
            "APN permutation in even dimension shows a quadratic or partially "
            f"bent component (n2={stats.n[2]}, partially_bent={has_pb}); "
            "this indicates a computation bug"
        )
    return StructuralFlags(
        apn=apn,
        weakly_apn=weakly,
        permutation=perm,
        n2_zero=n2_zero,
        no_partially_bent_component=not has_pb,
        ea_inequivalent_to_permutation=bool(f.m % 2 == 0 and apn and has_pb),
    )


# ---------------------------------------------------------------------------
# extended-affine transformation


def ea_transform(f: VectFn, a1_rows, b1: int, a2_rows, b2: int, lin=None) -> VectFn:
    """F'(x) = A1 F(A2 x + b2) + b1 + L(x), L an optional affine map (rows, const).

    A1 and A2 must be invertible; L need not be. Preserves the APN flag, the
    differential uniformity, degrees >= 2, and the existence of partially
    bent components; preserves bijectivity only when L is absent.
    """
    m = f.m
    if not linalg.is_invertible(a1_rows, m):
        raise ValueError("output matrix is singular over GF(2)")
    if not linalg.is_invertible(a2_rows, m):
        raise ValueError("input matrix is singular over GF(2)")
    l_rows, l_const = (None, 0) if lin is None else lin
    out = []
    for x in range(1 << m):
        y = f.table[linalg.mat_vec(a2_rows, x) ^ b2]
        v = linalg.mat_vec(a1_rows, y) ^ b1
        if l_rows is not None:
            v ^= linalg.mat_vec(l_rows, x) ^ l_const
        out.append(v)
    return VectFn(out)


# ---------------------------------------------------------------------------
# text format shared with the CLI
#
# Optional '#' comment lines, then 2^m integers (decimal or 0x-hex) separated
# by whitespace and/or commas, index order x = 0 .. 2^m - 1.


def parse_sbox(text: str) -> VectFn:
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        for token in body.replace(",", " ").split():
            try:
                values.append(int(token, 16) if token.lower().startswith("0x") else int(token, 10))
            except ValueError:
                raise SboxFormatError(f"bad table entry {token!r}", line=lineno) from None
    if not values:
        raise SboxFormatError("no table entries found")
    m = len(values).bit_length() - 1
    if len(values) != 1 << m:
        raise SboxFormatError(f"table length {len(values)} is not a power of two")
    try:
        return VectFn(values)
    except ValueError as exc:
        raise SboxFormatError(str(exc)) from None


def format_sbox(f: VectFn, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    width = 1 << max(f.m - 2, 2)
    for start in range(0, len(f.table), width):
        lines.append(" ".join(str(v) for v in f.table[start : start + width]))
    return "\n".join(lines) + "\n"
