"""Scalar Boolean-function core: truth tables, transforms, derivatives,
spectra, and structural classification.

Conventions used package-wide: a function on m variables is a truth table of
length 2^m; variable x_{j+1} is bit j of the integer index (LSB-first); ANF
monomials are indexed by the same masks, so coefficient u covers the product
of the variables in u.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _bits, linalg

MIN_VARS = 2
MAX_VARS = 20

BALANCED = "balanced"
LOW_WEIGHT = "low_weight"
HIGH_WEIGHT = "high_weight"


class BoolFn:
    """Boolean function f: {0,1}^m -> {0,1} as a bit-packed truth table."""

    __slots__ = ("m", "bits")

    def __init__(self, m: int, bits: int):
        if not MIN_VARS <= m <= MAX_VARS:
            raise ValueError(f"variable count must be in [{MIN_VARS}, {MAX_VARS}], got {m}")
        if not 0 <= bits <= _bits.full_mask(m):
            raise ValueError("packed table has bits beyond 2^m entries")
        self.m = m
        self.bits = bits

    @classmethod
    def from_table(cls, table) -> "BoolFn":
        """Build from an iterable of 0/1 entries; length must be a power of two."""
        entries = list(table)
        m = len(entries).bit_length() - 1
        if len(entries) != 1 << m:
            raise ValueError(f"table length {len(entries)} is not a power of two")
        bits = 0
        for x, v in enumerate(entries):
            if v not in (0, 1):
                raise ValueError(f"table entry at {x} is {v!r}, expected 0 or 1")
            bits |= v << x
        return cls(m, bits)

    @classmethod
    def zero(cls, m: int) -> "BoolFn":
        return cls(m, 0)

    def value(self, x: int) -> int:
        return self.bits >> x & 1

    def table(self) -> list[int]:
        return [self.bits >> x & 1 for x in range(1 << self.m)]

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_balanced(self) -> bool:
        return 2 * self.weight() == 1 << self.m

    def __eq__(self, other):
        return isinstance(other, BoolFn) and (self.m, self.bits) == (other.m, other.bits)

    def __hash__(self):
        return hash((self.m, self.bits))

    def __repr__(self):
        return f"BoolFn(m={self.m}, bits={self.bits:#x})"


class Anf:
    """Algebraic normal form: one coefficient bit per monomial mask."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: int):
        if not MIN_VARS <= m <= MAX_VARS:
            raise ValueError(f"variable count must be in [{MIN_VARS}, {MAX_VARS}], got {m}")
        if not 0 <= coeffs <= _bits.full_mask(m):
            raise ValueError("coefficient mask has bits beyond 2^m monomials")
        self.m = m
        self.coeffs = coeffs

    def monomials(self) -> list[int]:
        """Masks of the monomials with coefficient 1."""
        out, c = [], self.coeffs
        while c:
            low = c & -c
            out.append(low.bit_length() - 1)
            c ^= low
        return out

    def degree(self) -> int:
        d = 0
        c = self.coeffs
        while c:
            low = c & -c
            d = max(d, (low.bit_length() - 1).bit_count())
            c ^= low
        return d

    def __eq__(self, other):
        return isinstance(other, Anf) and (self.m, self.coeffs) == (other.m, other.coeffs)

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        return f"Anf(m={self.m}, coeffs={self.coeffs:#x})"


@dataclass(frozen=True)
class WalshSpectrum:
    """All 2^m correlations with linear functions: values[u] = sum_x (-1)^(f(x)+u.x)."""

    m: int
    values: np.ndarray

    def parseval_sum(self) -> int:
        return int(np.sum(self.values.astype(np.int64) ** 2))


@dataclass(frozen=True)
class LinearStructureSpace:
    """The subspace V(f) of directions with constant derivative."""

    m: int
    basis: tuple[int, ...]
    k: int
    constants: dict  # nonzero member a -> the constant value of D_a f

    def members(self) -> frozenset:
        span = {0}
        for b in self.basis:
            span |= {v ^ b for v in span}
        return frozenset(span)


@dataclass(frozen=True)
class ShapeProfile:
    bent: bool
    plateaued: bool
    mu: int | None  # common nonzero spectrum magnitude when plateaued
    partially_bent: bool
    k: int


@dataclass(frozen=True)
class QuadCanonicalForm:
    """Affine-equivalence invariants of a quadratic function."""

    l: int
    kind: str  # one of BALANCED / LOW_WEIGHT / HIGH_WEIGHT
    k: int


# ---------------------------------------------------------------------------
# basic transforms


def fourier_value(f: BoolFn) -> int:
    """2^m - 2*weight(f); zero exactly for balanced f."""
    return (1 << f.m) - 2 * f.weight()


def derivative(f: BoolFn, a: int) -> BoolFn:
    """Directional derivative x -> f(x^a) ^ f(x)."""
    if not 0 <= a < (1 << f.m):
        raise ValueError(f"direction {a} out of range for m={f.m}")
    return BoolFn(f.m, _bits.derivative_bits(f.bits, f.m, a))


def to_anf(f: BoolFn) -> Anf:
    return Anf(f.m, _bits.mobius(f.bits, f.m))


def from_anf(p: Anf) -> BoolFn:
    return BoolFn(p.m, _bits.mobius(p.coeffs, p.m))


def degree(f: BoolFn) -> int:
    """Algebraic degree; 0 for constants including the zero function."""
    return to_anf(f).degree()


def degree_slice(p: Anf, i: int) -> frozenset:
    """Monomial masks of weight i with coefficient 1 (the degree-i part)."""
    if not 0 <= i <= p.m:
        raise ValueError(f"slice degree {i} out of range for m={p.m}")
    return frozenset(u for u in p.monomials() if u.bit_count() == i)


def walsh_spectrum(f: BoolFn) -> WalshSpectrum:
    """Fast Walsh-Hadamard transform of (-1)^f, O(m 2^m)."""
    signs = 1 - 2 * _bits.unpack(f.bits, f.m).astype(np.int64)
    v = signs
    h = 1
    n = v.shape[0]
    while h < n:
        v3 = v.reshape(-1, 2, h)
        top = v3[:, 0, :] + v3[:, 1, :]
        bot = v3[:, 0, :] - v3[:, 1, :]
        v3[:, 0, :] = top
        v3[:, 1, :] = bot
        h <<= 1
    v.flags.writeable = False
    return WalshSpectrum(f.m, v)


# ---------------------------------------------------------------------------
# derivative-based structure


def _classify_derivatives(f: BoolFn):
    """One pass over all directions: (balanced set, constant->value map)."""
    n = 1 << f.m
    half = n >> 1
    full = _bits.full_mask(f.m)
    balanced = set()
    constant = {0: 0}
    for a in range(1, n):
        d = _bits.derivative_bits(f.bits, f.m, a)
        if d == 0:
            constant[a] = 0
        elif d == full:
            constant[a] = 1
        elif d.bit_count() == half:
            balanced.add(a)
    return balanced, constant


def balanced_derivatives(f: BoolFn) -> tuple[frozenset, int]:
    """The set of directions with balanced derivative, and its size."""
    balanced, _ = _classify_derivatives(f)
    return frozenset(balanced), len(balanced)


def linear_structures(f: BoolFn) -> LinearStructureSpace:
    _, constant = _classify_derivatives(f)
    members = sorted(constant)
    if len(members).bit_count() != 1:
        raise AssertionError("linear structures do not form a subspace; internal bug")
    k = len(members).bit_length() - 1
    basis = []
    span = {0}
    for a in members:
        if a and a not in span:
            basis.append(a)
            span |= {v ^ a for v in span}
    constants = {a: v for a, v in constant.items() if a}
    return LinearStructureSpace(f.m, tuple(basis), k, constants)


def shape_profile(f: BoolFn) -> ShapeProfile:
    """Bent / plateaued / partially-bent flags plus dim V(f).

    Bent and partially bent use the derivative characterization (every
    nonzero derivative balanced; every derivative balanced or constant);
    plateaued reads the spectrum support.
    """
    n = 1 << f.m
    balanced, constant = _classify_derivatives(f)
    k = len(constant).bit_length() - 1
    bent = len(balanced) == n - 1
    partially_bent = len(balanced) + len(constant) == n
    mags = np.unique(np.abs(walsh_spectrum(f).values))
    nonzero = mags[mags > 0]
    plateaued = len(nonzero) == 1
    mu = int(nonzero[0]) if plateaued else None
    return ShapeProfile(bent, plateaued, mu, partially_bent, k)


def partially_bent_subspace_oracle(f: BoolFn) -> bool:
    """Definition-based partially-bent test; exponential, kept to m <= 4.

    Looks for a complement U of V(f) on which f is bent and against which f
    splits as f(y+z) = f(y) + f(z) + f(0). Cross-checks the derivative
    characterization used by shape_profile.
    """
    if f.m > 4:
        raise ValueError("subspace oracle is limited to m <= 4")
    m = f.m
    v_members = sorted(linear_structures(f).members())
    d = m - (len(v_members).bit_length() - 1)
    f0 = f.value(0)
    for u_space in _subspaces(m, d):
        if len(u_space & set(v_members)) != 1:  # intersect only at 0
            continue
        u_list = sorted(u_space)
        split = all(
            f.value(y ^ z) == f.value(y) ^ f.value(z) ^ f0
            for y in u_list
            for z in v_members
        )
        if not split:
            continue
        if _bent_on(f, u_list):
            return True
    return False


def _subspaces(m: int, d: int):
    """All d-dimensional subspaces of GF(2)^m (tiny m only)."""
    if d == 0:
        yield {0}
        return
    seen = set()
    nonzero = range(1, 1 << m)
    for basis in combinations(nonzero, d):
        span = {0}
        for b in basis:
            span |= {v ^ b for v in span}
        if len(span) != 1 << d:
            continue
        key = frozenset(span)
        if key not in seen:
            seen.add(key)
            yield span


def _bent_on(f: BoolFn, u_list) -> bool:
    # Restriction to the subspace is bent iff all its nonzero derivatives
    # are balanced; a 0-dimensional restriction is vacuously bent.
    size = len(u_list)
    if size == 1:
        return True
    for u in u_list:
        if u == 0:
            continue
        acc = sum(1 - 2 * (f.value(y ^ u) ^ f.value(y)) for y in u_list)
        if acc != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# quadratic canonical data


def quad_canonical(f: BoolFn) -> QuadCanonicalForm:
    """Invariants (l, kind, k) of a quadratic under affine equivalence.

    l comes from the rank m - k of the associated bilinear form; kind from
    the sign of the Fourier value.
    """
    if degree(f) != 2:
        raise ValueError("quad_canonical requires a function of degree exactly 2")
    k = linear_structures(f).k
    if (f.m - k) % 2:
        raise AssertionError("bilinear form rank is odd; internal bug")
    l = (f.m - k) // 2
    fv = fourier_value(f)
    if fv == 0:
        kind = BALANCED
    elif fv > 0:
        kind = LOW_WEIGHT
    else:
        kind = HIGH_WEIGHT
    return QuadCanonicalForm(l, kind, k)


def canonical_quadratic(m: int, l: int, kind: str) -> BoolFn:
    """Build the canonical quadratic x1x2 + ... + x_{2l-1}x_{2l} (+ x_{2l+1} | + 1)."""
    if l < 1:
        raise ValueError("canonical quadratic needs l >= 1")
    if kind == BALANCED:
        if 2 * l > m - 1:
            raise ValueError("balanced form needs 2l <= m - 1")
    elif kind in (LOW_WEIGHT, HIGH_WEIGHT):
        if 2 * l > m:
            raise ValueError("non-balanced form needs 2l <= m")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    coeffs = 0
    for i in range(l):
        coeffs |= 1 << ((1 << (2 * i)) | (1 << (2 * i + 1)))
    if kind == BALANCED:
        coeffs |= 1 << (1 << (2 * l))
    if kind == HIGH_WEIGHT:
        coeffs |= 1  # constant monomial
    return from_anf(Anf(m, coeffs))


# ---------------------------------------------------------------------------
# affine change of variables


def affine_transform(f: BoolFn, a_rows, b: int = 0, c: int = 0, d: int = 0) -> BoolFn:
    """g(x) = f(Ax + b) + c.x + d for an invertible matrix A (rows as masks)."""
    m = f.m
    if not linalg.is_invertible(a_rows, m):
        raise ValueError("matrix is singular over GF(2)")
    bits = 0
    for x in range(1 << m):
        y = linalg.mat_vec(a_rows, x) ^ b
        v = f.value(y) ^ ((c & x).bit_count() & 1) ^ d
        bits |= v << x
    return BoolFn(m, bits)


# ---------------------------------------------------------------------------
# text form


def parse_truth_table(line: str) -> BoolFn:
    """One line of '0'/'1' characters, index order x = 0 .. 2^m - 1."""
    s = line.strip()
    if not s or set(s) - {"0", "1"}:
        raise ValueError("truth table text must be a nonempty string of 0/1")
    return BoolFn.from_table(int(ch) for ch in s)


def format_truth_table(f: BoolFn) -> str:
    return "".join(str(f.value(x)) for x in range(1 << f.m))
