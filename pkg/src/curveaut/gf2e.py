"""Exact arithmetic in GF(2^n) with a designated subfield GF(2^e).

Field elements are plain Python ints whose binary digits are the
polynomial-basis coordinates (little-endian: bit i is the coefficient of
t^i).  All arithmetic is mediated by a FieldCtx, which fixes the extension
degree n, the irreducible modulus, and the subfield degree e.  Zero and one
are always represented by the ints 0 and 1, and addition is xor, so hot
loops can work on raw ints; the FieldElem wrapper exists for readability in
non-critical code.

Default moduli are the lexicographically smallest irreducible polynomial of
each degree (as integers), so element encodings are reproducible across
implementations:

    n=2 : x^2 + x + 1          -> 0b111
    n=3 : x^3 + x + 1          -> 0b1011
    n=4 : x^4 + x + 1          -> 0b10011
    ...
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class FieldError(ValueError):
    """Base class for field construction/arithmetic errors."""


class ReducibleModulus(FieldError):
    """The requested modulus factors over GF(2)."""


class BadSubfield(FieldError):
    """A subfield degree that does not divide the ambient degree."""


class DivisionByZero(FieldError, ZeroDivisionError):
    """Inversion of the zero element."""


# Smallest irreducible polynomial of each degree, as an integer bit-vector.
# Verified irreducible at import time (see _check_default_moduli below).
DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000000011,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000000001001,
}

# Largest n for which log/exp tables are built eagerly.
_TABLE_LIMIT = 16


# ----------------------------------------------------------------------
# GF(2)[x] on int bit-vectors (used for modulus validation only)
# ----------------------------------------------------------------------

def bits_degree(p: int) -> int:
    """Degree of a GF(2)[x] polynomial encoded as an int (-1 for zero)."""
    return p.bit_length() - 1


def bits_mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def bits_mod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[x]."""
    dm = bits_degree(m)
    da = bits_degree(a)
    while a and da >= dm:
        a ^= m << (da - dm)
        da = bits_degree(a)
    return a


def bits_gcd(a: int, b: int) -> int:
    while b:
        if bits_degree(a) < bits_degree(b):
            a, b = b, a
            continue
        a, b = b, bits_mod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_gf2(p: int) -> bool:
    """Test irreducibility of a GF(2)[x] polynomial given as an int.

    Uses the Frobenius criterion: p of degree n is irreducible iff
    x^(2^n) = x mod p and gcd(x^(2^(n/r)) - x, p) = 1 for every prime r | n.
    """
    n = bits_degree(p)
    if n <= 0:
        return False
    if n == 1:
        return True

    def pow_x(k: int) -> int:
        r = 2  # the polynomial x
        for _ in range(k):
            r = bits_mod(bits_mul(r, r), p)
        return r

    if pow_x(n) != 2:
        return False
    for r in _prime_factors(n):
        if bits_gcd(pow_x(n // r) ^ 2, p) != 1:
            return False
    return True


def _check_default_moduli() -> None:
    for n, m in DEFAULT_MODULI.items():
        if bits_degree(m) != n or not is_irreducible_gf2(m):
            raise ReducibleModulus(f"default modulus table broken at n={n}")


_check_default_moduli()


# ----------------------------------------------------------------------
# Field context
# ----------------------------------------------------------------------

class FieldCtx:
    """Ambient field GF(2^n) with designated subfield GF(2^e), e | n.

    Immutable after construction; element operations are pure functions on
    ints, so a context can be shared freely across workers.
    """

    def __init__(self, n: int, modulus: int | None = None, subfield_e: int = 1):
        if n < 1:
            raise FieldError(f"extension degree must be positive, got {n}")
        if subfield_e < 1 or n % subfield_e != 0:
            raise BadSubfield(f"subfield degree {subfield_e} does not divide {n}")
        if modulus is None:
            if n not in DEFAULT_MODULI:
                raise FieldError(f"no default modulus for n={n}; pass one explicitly")
            modulus = DEFAULT_MODULI[n]
        if bits_degree(modulus) != n:
            raise FieldError(
                f"modulus degree {bits_degree(modulus)} does not match n={n}")
        if not is_irreducible_gf2(modulus):
            raise ReducibleModulus(f"modulus {bin(modulus)} factors over GF(2)")
        self.n = n
        self.modulus = modulus
        self.e = subfield_e
        self.order = 1 << n
        self.q = 1 << subfield_e

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if n <= _TABLE_LIMIT:
            self._build_tables()
        self._np_cache: dict[str, object] = {}

    # -- construction helpers ------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        p = 0
        top = 1 << self.n
        mod = self.modulus
        while b:
            if b & 1:
                p ^= a
            a <<= 1
            if a & top:
                a ^= mod
            b >>= 1
        return p

    def _build_tables(self) -> None:
        order = self.order
        # Find a multiplicative generator by trial; x (=2) usually works.
        group = order - 1
        factors = _prime_factors(group) if group > 1 else []

        def is_generator(g: int) -> bool:
            return all(self._pow_raw(g, group // r) != 1 for r in factors)

        g = 2 % order
        if order == 2:
            g = 1
        else:
            while not is_generator(g):
                g += 1
        exp = [0] * (2 * group if group else 1)
        log = [0] * order
        v = 1
        for i in range(group):
            exp[i] = v
            log[v] = i
            v = self._mul_raw(v, g)
        for i in range(group, len(exp)):
            exp[i] = exp[i - group]
        self._exp = exp
        self._log = log
        self.generator = g

    def _pow_raw(self, a: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            k >>= 1
        return r

    # -- element operations --------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._exp is not None:
            if a == 1:
                return 1
            return self._exp[self.order - 1 - self._log[a]]
        return self._pow_raw(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if a == 0:
            return 0 if k else 1
        if self._log is not None:
            group = self.order - 1
            return self._exp[(self._log[a] * k) % group]
        return self._pow_raw(a, k)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def sqrt(self, a: int) -> int:
        """The unique square root; squaring is bijective in characteristic 2."""
        r = a
        for _ in range(self.n - 1):
            r = self.mul(r, r)
        return r

    def frob(self, a: int, k: int = 1) -> int:
        """k-fold Frobenius a -> a^(2^k)."""
        r = a
        for _ in range(k % self.n if a else 0):
            r = self.mul(r, r)
        return r

    def in_subfield(self, a: int, d: int) -> bool:
        """True iff a lies in GF(2^d); requires d | n."""
        if d < 1 or self.n % d != 0:
            raise BadSubfield(f"degree {d} does not divide n={self.n}")
        return self.frob(a, d) == a

    def subfield_elements(self, d: int) -> list[int]:
        """All elements of the subfield GF(2^d), in increasing int order."""
        if d < 1 or self.n % d != 0:
            raise BadSubfield(f"degree {d} does not divide n={self.n}")
        return [a for a in range(self.order) if self.frob(a, d) == a]

    def elements(self) -> range:
        return range(self.order)

    # -- numpy views ----------------------------------------------------

    def np_tables(self):
        """(exp, log) as numpy arrays for vectorized multiplication."""
        if "tables" not in self._np_cache:
            import numpy as np
            if self._exp is None:
                raise FieldError(f"n={self.n} too large for table-based kernels")
            self._np_cache["tables"] = (
                np.asarray(self._exp, dtype=np.int64),
                np.asarray(self._log, dtype=np.int64),
            )
        return self._np_cache["tables"]

    def np_inv_table(self):
        if "inv" not in self._np_cache:
            import numpy as np
            inv = [0] + [self.inv(a) for a in range(1, self.order)]
            self._np_cache["inv"] = np.asarray(inv, dtype=np.int64)
        return self._np_cache["inv"]

    # -- misc -------------------------------------------------------------

    def elem(self, value: int) -> "FieldElem":
        return FieldElem(self, value & (self.order - 1))

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldCtx) and self.n == other.n
                and self.modulus == other.modulus and self.e == other.e)

    def __hash__(self) -> int:
        return hash((self.n, self.modulus, self.e))

    def __repr__(self) -> str:
        return f"FieldCtx(n={self.n}, modulus={bin(self.modulus)}, e={self.e})"

    # -- JSON encoding ----------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "modulus": hex(self.modulus), "e": self.e}

    @staticmethod
    def from_json(obj: dict) -> "FieldCtx":
        return FieldCtx(int(obj["n"]), int(obj["modulus"], 16), int(obj["e"]))


@dataclass(frozen=True)
class FieldElem:
    """A GF(2^n) element bound to its context; arithmetic sugar over ints."""

    ctx: FieldCtx
    val: int

    def __add__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(self.ctx, self.val ^ other.val)

    __sub__ = __add__

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.mul(self.val, other.val))

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.div(self.val, other.val))

    def __pow__(self, k: int) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.pow(self.val, k))

    def inv(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.val))

    def sqrt(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.sqrt(self.val))

    def in_subfield(self, d: int) -> bool:
        return self.ctx.in_subfield(self.val, d)

    def __bool__(self) -> bool:
        return self.val != 0

    def __repr__(self) -> str:
        return f"<{elem_to_json(self.val)} in GF(2^{self.ctx.n})>"


# ----------------------------------------------------------------------
# Spec-level operation surface
# ----------------------------------------------------------------------

def field_create(n: int, modulus: int | None = None, subfield_e: int = 1) -> FieldCtx:
    """Create the ambient field GF(2^n) containing F_q = GF(2^subfield_e)."""
    return FieldCtx(n, modulus, subfield_e)


def field_arith(a: FieldElem, b: FieldElem | None, op: str, k: int = 0) -> FieldElem:
    """Dispatch add/mul/inv/pow on wrapped elements (op in that set)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "pow":
        return a ** k
    raise FieldError(f"unknown op {op!r}")


def field_sqrt(a: FieldElem) -> FieldElem:
    return a.sqrt()


def subfield_test(a: FieldElem, d: int) -> bool:
    return a.in_subfield(d)


# ----------------------------------------------------------------------
# JSON element encoding (hex of the bit-vector)
# ----------------------------------------------------------------------

def elem_to_json(value: int) -> str:
    return hex(value)


def elem_from_json(s: str, ctx: FieldCtx | None = None) -> int:
    v = int(s, 16)
    if ctx is not None and not 0 <= v < ctx.order:
        raise FieldError(f"element {s} out of range for GF(2^{ctx.n})")
    return v


@lru_cache(maxsize=None)
def default_ctx(n: int, subfield_e: int = 1) -> FieldCtx:
    """Cached context with the default modulus (contexts are immutable)."""
    return FieldCtx(n, None, subfield_e)


def subfield_embedding(small: FieldCtx, big: FieldCtx) -> list[int]:
    """Embedding table GF(2^m) -> GF(2^n) for m | n.

    The image of the small field's polynomial generator is the smallest root
    (as an int) of the small modulus inside the big field, which makes the
    embedding deterministic.  Returns a table indexed by small-field ints.
    """
    if big.n % small.n != 0:
        raise BadSubfield(f"GF(2^{small.n}) does not embed in GF(2^{big.n})")
    if small.n == big.n and small.modulus == big.modulus:
        return list(range(small.order))
    # Roots of the small modulus (a GF(2) polynomial) in the big field, by
    # direct scan over the subfield of size 2^small.n inside big.
    candidates = []
    mod_bits = [int(b) for b in bin(small.modulus)[2:][::-1]]
    for a in big.subfield_elements(small.n):
        acc = 0
        for bit in reversed(mod_bits):
            acc = big.mul(acc, a) ^ bit
        if acc == 0:
            candidates.append(a)
    if not candidates:
        raise FieldError("modulus has no root in the big field")
    root = min(candidates)
    powers = [1]
    for _ in range(small.n - 1):
        powers.append(big.mul(powers[-1], root))
    table = []
    for a in range(small.order):
        acc = 0
        for i in range(small.n):
            if a >> i & 1:
                acc ^= powers[i]
        table.append(acc)
    return table
