"""Dense univariate polynomials over GF(2^m).

Text format: comma-separated hexadecimal coefficients, lowest degree first,
so ``1,0,0,1,1`` is x^4 + x^3 + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .field import FieldError, FieldSpec, fe_inv, fe_mul

SCAN_LIMIT = 1 << 16


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...]
    field: FieldSpec

    def __init__(self, coeffs, field: FieldSpec):
        object.__setattr__(self, "coeffs", _trim(coeffs))
        object.__setattr__(self, "field", field)
        for c in self.coeffs:
            field.check(c)

    @classmethod
    def from_array(cls, arr: np.ndarray, field: FieldSpec) -> "Poly":
        return cls(arr.tolist(), field)

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls((1,), field)

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls((0, 1), field)

    @classmethod
    def from_roots(cls, roots, field: FieldSpec) -> "Poly":
        f = cls.one(field)
        for r in roots:
            f = p_mul(f, cls((r, 1), field))
        return f

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def __add__(self, other: "Poly") -> "Poly":
        return p_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        return p_mul(self, other)

    def __divmod__(self, other: "Poly"):
        return p_divrem(self, other)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r}, {self.field.designation()})"


def _same_field(f: Poly, g: Poly) -> FieldSpec:
    if f.field != g.field:
        raise FieldError("field mismatch")
    return f.field


def p_add(f: Poly, g: Poly) -> Poly:
    ctx = _same_field(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    return Poly([f.coeff(i) ^ g.coeff(i) for i in range(n)], ctx)


def p_mul(f: Poly, g: Poly) -> Poly:
    ctx = _same_field(f, g)
    return Poly.from_array(kernels.poly_mul(f.array(), g.array(), *ctx.args), ctx)


def p_scale(c: int, f: Poly) -> Poly:
    return Poly([fe_mul(c, x, f.field) for x in f.coeffs], f.field)


def p_divrem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    ctx = _same_field(f, g)
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    q, r = kernels.poly_divrem(f.array(), g.array(), *ctx.args)
    return Poly.from_array(q, ctx), Poly.from_array(r, ctx)


def p_monic(f: Poly) -> Poly:
    if f.is_zero():
        return f
    return p_scale(fe_inv(f.coeffs[-1], f.field), f)


def p_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    _same_field(f, g)
    while not g.is_zero():
        f, g = g, p_divrem(f, g)[1]
    return p_monic(f)


def p_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return Poly((), f.field)
    return p_monic(p_divrem(p_mul(f, g), p_gcd(f, g))[0])


def p_divides(g: Poly, f: Poly) -> bool:
    return p_divrem(f, g)[1].is_zero()


def p_eval(f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = fe_mul(acc, x, f.field) ^ c
    return acc


def p_deriv(f: Poly) -> Poly:
    """Formal derivative.  In characteristic 2 it kills every even-degree term,
    so f' = 0 for any square (f = g^2) and is useless as a squarefree test there."""
    return Poly([c if i % 2 else 0 for i, c in enumerate(f.coeffs[1:], start=1)], f.field)


def p_shift(f: Poly, b: int) -> Poly:
    """f(x + b)."""
    ctx = f.field
    out = Poly((), ctx)
    lin = Poly((b, 1), ctx)
    for c in reversed(f.coeffs):
        out = p_add(p_mul(out, lin), Poly((c,), ctx))
    return out


def p_pow(f: Poly, e: int) -> Poly:
    out = Poly.one(f.field)
    base = f
    while e:
        if e & 1:
            out = p_mul(out, base)
        base = p_mul(base, base)
        e >>= 1
    return out


def splits_distinct(f: Poly) -> bool:
    """True iff f divides x^q - x, i.e. f is squarefree with all roots in the field."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return True
    ctx = f.field
    fx = kernels.poly_frobenius_x(f.array(), *ctx.args)
    x_mod_f = p_divrem(Poly.x(ctx), f)[1]
    return Poly.from_array(fx, ctx) == x_mod_f


def p_roots(f: Poly) -> list[tuple[int, int]]:
    """Roots in the field with multiplicities, in canonical element order."""
    ctx = f.field
    if f.is_zero():
        raise ValueError("zero polynomial")
    if ctx.q > SCAN_LIMIT:
        raise ValueError("field scan limit")
    values = kernels.poly_eval_all(f.array(), *ctx.args)
    out = []
    for r in np.nonzero(values == 0)[0].tolist():
        lin = Poly((r, 1), ctx)
        g, mult = f, 0
        while True:
            q, rem = p_divrem(g, lin)
            if not rem.is_zero():
                break
            g, mult = q, mult + 1
        out.append((r, mult))
    return out


def format_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    return ",".join(f"{c:x}" for c in f.coeffs)


def parse_poly(text: str, field: FieldSpec) -> Poly:
    parts = [p.strip() for p in text.strip().split(",")]
    try:
        coeffs = [int(p, 16) for p in parts]
    except ValueError as exc:
        raise ValueError(f"bad polynomial {text!r}") from exc
    return Poly(coeffs, field)
