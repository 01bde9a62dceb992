"""Finite-field machinery and generators for the concrete study functions.

GF(2^m) elements are integers in [0, 2^m) read as polynomial coefficient
vectors; a context fixes the reduction polynomial and precomputes log and
antilog tables from a primitive element. Generators cover power maps (Gold
exponents), the two trace-based APN families, and the bundled literature
fixtures with self-validation on load.
"""

from __future__ import annotations

import math
from importlib import resources

from . import boolfn, vectfn
from .errors import CorruptedFixture
from .vectfn import VectFn

MIN_DIM = 2
MAX_DIM = 8

FIXTURE_NAMES = ("dillon6", "apn4_quadratic", "apn4_cubic")


def _poly_degree(mask: int) -> int:
    return mask.bit_length() - 1


def _poly_mulmod(a: int, b: int, reduction: int, m: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= reduction
    return r


def _poly_mod(a: int, b: int) -> int:
    db = _poly_degree(b)
    while _poly_degree(a) >= db and a:
        a ^= b << (_poly_degree(a) - db)
    return a


def is_irreducible(mask: int, m: int) -> bool:
    """Trial division by every polynomial of degree 1 .. m//2."""
    if _poly_degree(mask) != m or not mask & 1:
        return False
    for g in range(2, 1 << (m // 2 + 1)):
        if _poly_degree(g) >= 1 and _poly_mod(mask, g) == 0:
            return False
    return True


def default_reduction(m: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree m."""
    for mask in range((1 << m) + 1, 1 << (m + 1), 2):
        if is_irreducible(mask, m):
            return mask
    raise AssertionError(f"no irreducible polynomial of degree {m} found")


class GfContext:
    """GF(2^m) with log/antilog tables built from a primitive element."""

    __slots__ = ("m", "reduction", "exp", "log")

    def __init__(self, m: int, reduction: int | None = None):
        if not MIN_DIM <= m <= MAX_DIM:
            raise ValueError(f"extension degree must be in [{MIN_DIM}, {MAX_DIM}], got {m}")
        if reduction is None:
            reduction = default_reduction(m)
        elif not is_irreducible(reduction, m):
            raise ValueError(f"reduction polynomial {reduction:#x} is not irreducible of degree {m}")
        self.m = m
        self.reduction = reduction
        order = (1 << m) - 1
        for g in range(2, 1 << m):
            exp = [1]
            v = 1
            for _ in range(order - 1):
                v = _poly_mulmod(v, g, reduction, m)
                if v == 1:
                    break
                exp.append(v)
            if len(exp) == order:
                break
        else:
            raise AssertionError("no primitive element found; internal bug")
        log = [0] * (1 << m)
        for i, v in enumerate(exp):
            log[v] = i
        self.exp = tuple(exp)
        self.log = tuple(log)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        order = (1 << self.m) - 1
        return self.exp[(self.log[a] + self.log[b]) % order]

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponents are not supported")
        if x == 0:
            return 0 if e else 1
        order = (1 << self.m) - 1
        return self.exp[(self.log[x] * e) % order]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        order = (1 << self.m) - 1
        return self.exp[(-self.log[x]) % order]

    def trace(self, x: int) -> int:
        t, y = 0, x
        for _ in range(self.m):
            t ^= y
            y = self.mul(y, y)
        if t not in (0, 1):
            raise AssertionError("trace left the prime field; internal bug")
        return t

    def __repr__(self):
        return f"GfContext(m={self.m}, reduction={self.reduction:#x})"


def gf_context(m: int, reduction: int | None = None) -> GfContext:
    return GfContext(m, reduction)


# ---------------------------------------------------------------------------
# generators


def power_map(ctx: GfContext, e: int) -> VectFn:
    """x -> x^e as a lookup table; e = 2^i + 1 gives the Gold functions."""
    if e < 1:
        raise ValueError("exponent must be >= 1")
    return VectFn([ctx.pow(x, e) for x in range(1 << ctx.m)])


def family_bc1(ctx: GfContext, i: int) -> VectFn:
    """x^(2^i+1) + (x^(2^i) + x + 1) Tr(x^(2^i+1)); needs m even, gcd(m, i) = 1."""
    if ctx.m % 2:
        raise ValueError("family needs even dimension")
    if i < 1 or math.gcd(ctx.m, i) != 1:
        raise ValueError(f"family needs gcd(m, i) = 1 with i >= 1, got m={ctx.m}, i={i}")
    e = (1 << i) + 1
    out = []
    for x in range(1 << ctx.m):
        v = ctx.pow(x, e)
        if ctx.trace(v):
            v ^= ctx.pow(x, 1 << i) ^ x ^ 1
        out.append(v)
    return VectFn(out)


def family_bc2(ctx: GfContext) -> VectFn:
    """x^3 + Tr(x^9) + (x^2 + x + 1) Tr(x^3); needs m even."""
    if ctx.m % 2:
        raise ValueError("family needs even dimension")
    out = []
    for x in range(1 << ctx.m):
        v = ctx.pow(x, 3) ^ ctx.trace(ctx.pow(x, 9))
        if ctx.trace(ctx.pow(x, 3)):
            v ^= ctx.pow(x, 2) ^ x ^ 1
        out.append(v)
    return VectFn(out)


# ---------------------------------------------------------------------------
# bundled fixtures


def _validate_dillon6(f: VectFn):
    if f.m != 6:
        raise CorruptedFixture("dillon6 must have dimension 6")
    if not vectfn.is_permutation(f):
        raise CorruptedFixture("dillon6 must be a permutation")
    if not vectfn.is_apn(f):
        raise CorruptedFixture("dillon6 must be APN")
    degs = {boolfn.degree(vectfn.component(f, lam)) for lam in range(1, 64)}
    if not degs <= {3, 4}:
        raise CorruptedFixture(f"dillon6 component degrees must lie in {{3,4}}, got {sorted(degs)}")


def _validate_apn4(f: VectFn, want_degree: int):
    if f.m != 4:
        raise CorruptedFixture("fixture must have dimension 4")
    if not vectfn.is_apn(f):
        raise CorruptedFixture("fixture must be APN")
    max_deg = max(boolfn.degree(vectfn.component(f, lam)) for lam in range(1, 16))
    if max_deg != want_degree:
        raise CorruptedFixture(f"fixture must have max degree {want_degree}, got {max_deg}")


def load_fixture(name: str) -> VectFn:
    """Load a bundled table and re-run its self-validation contract."""
    if name not in FIXTURE_NAMES:
        raise ValueError(f"unknown fixture {name!r}; available: {FIXTURE_NAMES}")
    text = resources.files(__package__).joinpath("fixtures", f"{name}.sbox").read_text()
    f = vectfn.parse_sbox(text)
    if name == "dillon6":
        _validate_dillon6(f)
    elif name == "apn4_quadratic":
        _validate_apn4(f, 2)
    else:
        _validate_apn4(f, 3)
    return f
