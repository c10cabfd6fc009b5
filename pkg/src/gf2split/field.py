"""GF(2^m) construction and element arithmetic.

Elements are plain ``int`` bit patterns in the polynomial basis: bit i is
the coefficient of x^i.  The canonical order on elements is integer order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

# Smallest irreducible polynomial of each degree, degree bit included.
DEFAULT_MODULI = {
    1: 0x2,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
}

MAX_DEGREE = 16


class FieldError(ValueError):
    pass


def _deg(p: int) -> int:
    return p.bit_length() - 1


def _clmod(a: int, b: int) -> int:
    db = _deg(b)
    while a and _deg(a) >= db:
        a ^= b << (_deg(a) - db)
    return a


def is_irreducible(p: int) -> bool:
    """Trial division of a GF(2)[x] bit pattern by every polynomial of degree <= deg/2."""
    m = _deg(p)
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if _clmod(p, g) == 0:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    m: int
    modulus: int

    @property
    def q(self) -> int:
        return 1 << self.m

    @property
    def args(self) -> tuple[int, int]:
        """(modulus, m), the form the kernels take."""
        return self.modulus, self.m

    def designation(self) -> str:
        return f"gf(2^{self.m})[modulus={self.modulus:#x}]"

    def __repr__(self) -> str:
        return f"FieldSpec({self.designation()})"

    def elements(self) -> range:
        return range(self.q)

    def check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise FieldError(f"{x!r} is not an element of {self.designation()}")
        return x

    @property
    def generator(self) -> int:
        """The class of x; for GF(4) this is the root a of a^2 + a + 1."""
        return 0b10 if self.m > 1 else 1


def make_field(m: int, modulus: int | None = None) -> FieldSpec:
    if not isinstance(m, int) or m < 1:
        raise FieldError("invalid degree")
    if modulus is None:
        if m > MAX_DEGREE:
            raise FieldError("invalid degree")
        return FieldSpec(m, DEFAULT_MODULI[m])
    if _deg(modulus) != m or not is_irreducible(modulus):
        raise FieldError("invalid modulus")
    return FieldSpec(m, modulus)


_DESIGNATION = re.compile(r"^\s*gf\(2\^(\d+)\)(?:\[modulus=(0x[0-9a-fA-F]+)\])?\s*$", re.IGNORECASE)


def parse_field(text: str) -> FieldSpec:
    """Parse ``gf(2^m)[modulus=0xHH]``; the modulus part is optional."""
    match = _DESIGNATION.match(text)
    if not match:
        raise FieldError(f"bad field designation {text!r}")
    m = int(match.group(1))
    modulus = int(match.group(2), 16) if match.group(2) else None
    return make_field(m, modulus)


def fe_add(x: int, y: int, ctx: FieldSpec | None = None) -> int:
    return x ^ y


def fe_mul(x: int, y: int, ctx: FieldSpec) -> int:
    top = 1 << ctx.m
    r = 0
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if x & top:
            x ^= ctx.modulus
    return r


def fe_pow(x: int, e: int, ctx: FieldSpec) -> int:
    if e < 0:
        return fe_pow(fe_inv(x, ctx), -e, ctx)
    r = 1
    while e:
        if e & 1:
            r = fe_mul(r, x, ctx)
        x = fe_mul(x, x, ctx)
        e >>= 1
    return r


def fe_inv(x: int, ctx: FieldSpec) -> int:
    if x == 0:
        raise ZeroDivisionError("division by zero")
    return fe_pow(x, ctx.q - 2, ctx)


def fe_div(x: int, y: int, ctx: FieldSpec) -> int:
    return fe_mul(x, fe_inv(y, ctx), ctx)


def fe_sqrt(x: int, ctx: FieldSpec) -> int:
    """The unique y with y^2 = x, namely x^(2^(m-1))."""
    for _ in range(ctx.m - 1):
        x = fe_mul(x, x, ctx)
    return x


def fe_in_subfield(x: int, d: int, ctx: FieldSpec) -> bool:
    if d < 1 or ctx.m % d:
        raise FieldError("not a subfield")
    y = x
    for _ in range(d):
        y = fe_mul(y, y, ctx)
    return y == x


def subfield_elements(d: int, ctx: FieldSpec) -> list[int]:
    """Elements of the subfield with 2^d elements, in canonical order."""
    return [x for x in ctx.elements() if fe_in_subfield(x, d, ctx)]
