"""Acceptance suite: the checkable claims reproduced on seeded random and
exhaustive inputs.  Every criterion reports one pass/fail line.

Randomness is drawn from numpy Generators seeded by (seed, criterion), so a
given seed always produces the same report.  ``scale`` shrinks the random
sample sizes for quick runs; the acceptance run uses scale 1.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .canonical import companion_of, rcf
from .field import fe_mul, fe_sqrt, make_field, subfield_elements
from .matrix import Mat, m_direct_sum, m_inv, m_mul, m_pow, random_invertible, random_matrix
from .poly import Poly, p_divides, p_roots
from .splitter import SplitError, split_any, split_block, split_f2, split_subfield
from .verify import brute_force_exists, charpoly_hessenberg, check_certificate

GF2 = make_field(1)
GF4 = make_field(2)
GF8 = make_field(3)
GF16 = make_field(4)
SPLIT_FIELDS = (GF4, GF8, GF16)
SPLIT_ORDERS = range(1, 13)

# two 4x4 GF(2) matrices with no idempotent + cube-zero split
OBSTRUCTION_A = ((0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1))
OBSTRUCTION_B = ((0, 0, 0, 1), (1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1))
QUARTIC_N = ((1, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 1), (0, 0, 0, 0))
QUARTIC_D = ((1, 1, 0, 1), (0, 1, 0, 0), (0, 1, 0, 1), (0, 0, 1, 1))


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"criterion {self.number}: {'PASS' if self.passed else 'FAIL'} {self.title} ({self.detail})"


def _rng(seed: int, number: int) -> np.random.Generator:
    return np.random.default_rng([seed, number])


def _count(n: int, scale: float) -> int:
    return max(1, int(round(n * scale)))


def _random_monic(n: int, ctx, rng, **fixed) -> Poly:
    """Random monic polynomial of degree n; fixed={"i": value} pins coefficient i."""
    coeffs = rng.integers(0, ctx.q, size=n).tolist()
    for i, v in fixed.items():
        coeffs[int(i)] = v
    return Poly([*coeffs, 1], ctx)


# 1 and 2 share their instances


@lru_cache(maxsize=4)
def _diag_suite(seed: int, scale: float) -> tuple[int, list[str], list[str], float]:
    rng = _rng(seed, 1)
    count = _count(1000, scale)
    total = 0
    bad_split, bad_potency = [], []
    start = time.perf_counter()
    for ctx in SPLIT_FIELDS:
        for n in SPLIT_ORDERS:
            for i in range(count):
                A = random_matrix(n, ctx, rng)
                total += 1
                where = f"q={ctx.q} n={n} #{i}"
                try:
                    report = check_certificate(A, split_any(A))
                except Exception as exc:  # any exception is a failed instance
                    bad_split.append(f"{where}: {exc}")
                    bad_potency.append(where)
                    continue
                if not (report.sum_ok and report.square_zero_ok and report.diagonalizable_ok):
                    bad_split.append(f"{where}: {report.failures}")
                if not report.potency_ok:
                    bad_potency.append(where)
    return total, bad_split, bad_potency, time.perf_counter() - start


def criterion_1(seed: int, scale: float) -> CriterionResult:
    total, bad, _, seconds = _diag_suite(seed, scale)
    in_time = seconds < 300
    ok = not bad and in_time
    detail = f"{total - len(bad)}/{total} certificates with A = N + D, N^2 = 0, D diagonalizable"
    if not in_time:
        detail += "; over the 5 minute budget"
    if bad:
        detail += f"; first failure {bad[0]}"
    return CriterionResult(1, "square-zero + diagonalizable split over GF(4), GF(8), GF(16)", ok, detail, seconds)


def criterion_2(seed: int, scale: float) -> CriterionResult:
    total, _, bad, seconds = _diag_suite(seed, scale)
    detail = f"{total - len(bad)}/{total} with D^q = D"
    if bad:
        detail += f"; first failure {bad[0]}"
    return CriterionResult(2, "D^q = D on the same instances", not bad, detail, 0.0)


def criterion_3(seed: int, scale: float) -> CriterionResult:
    rng = _rng(seed, 3)
    count = _count(1000, scale)
    total, bad = 0, []
    for n in range(1, 17):
        for i in range(count):
            A = random_matrix(n, GF2, rng)
            total += 1
            try:
                cert = split_f2(A)
            except Exception as exc:
                bad.append(f"n={n} #{i}: {exc}")
                continue
            in_f2 = cert.N.field == GF2 and cert.D.field == GF2 and cert.N.a.max(initial=0) <= 1 and cert.D.a.max(initial=0) <= 1
            ok = in_f2 and m_mul(cert.N, cert.N).is_zero() and m_pow(cert.D, 4) == cert.D and (cert.N + cert.D) == A
            if not ok:
                bad.append(f"n={n} #{i}")
    detail = f"{total - len(bad)}/{total} with N^2 = 0, D^4 = D, entries in GF(2)"
    if bad:
        detail += f"; first failure {bad[0]}"
    return CriterionResult(3, "square-zero + 4-potent split over GF(2)", not bad, detail)


def criterion_4(seed: int, scale: float) -> CriterionResult:
    misses = []

    # (i) companion of x^4 + x^3 + 1
    cert = split_f2(Mat(OBSTRUCTION_A, GF2))
    if cert.N != Mat(QUARTIC_N, GF2) or cert.D != Mat(QUARTIC_D, GF2):
        misses.append("x^4 + x^3 + 1 over GF(2)")

    # (ii) order-3 companions over GF(2), all coefficient triples
    for u0 in (0, 1):
        for u1 in (0, 1):
            for u2 in (0, 1):
                C = companion_of(Poly([u0, u1, u2, 1], GF2))
                cert = split_f2(C)
                D = Mat([[0, 0, u2 ^ 1], [1, 0, u2], [0, 1, u2]], GF2)
                N = Mat([[0, 0, u2 ^ 1 ^ u0], [0, 0, u2 ^ u1], [0, 0, 0]], GF2)
                if cert.N != N or cert.D != D:
                    misses.append(f"order 3 ({u0},{u1},{u2})")

    # (iii) order 2, both trace cases, every coefficient pair over GF(4)
    for u0 in GF4.elements():
        for u1 in GF4.elements():
            cert = split_block(companion_of(Poly([u0, u1, 1], GF4)))
            if u1:
                N = Mat([[0, u0], [0, 0]], GF4)
                D = Mat([[0, 0], [1, u1]], GF4)
            else:
                v = fe_sqrt(u0, GF4)
                N = Mat([[v, u0], [1, v]], GF4)
                D = Mat([[v, 0], [0, v]], GF4)
            if cert.N != N or cert.D != D:
                misses.append(f"order 2 over GF(4) ({u0:x},{u1:x})")
    cert = split_f2(companion_of(Poly([1, 1, 1], GF2)))
    if cert.N != Mat([[0, 1], [0, 0]], GF2) or cert.D != Mat([[0, 0], [1, 1]], GF2) or m_mul(cert.D, cert.D) != cert.D:
        misses.append("x^2 + x + 1 over GF(2)")

    # (iv) trace-0 order 2 with D^3 = D
    for u in GF16.elements():
        A = Mat([[0, u], [1, 0]], GF16)
        cert = split_subfield(A, 2)
        N = Mat([[0, u ^ 1], [0, 0]], GF16)
        D = Mat([[0, 1], [1, 0]], GF16)
        if cert.N != N or cert.D != D or not m_mul(N, N).is_zero() or m_pow(D, 3) != D:
            misses.append(f"trace-0 order 2 u={u:x}")

    detail = "all closed-form decompositions reproduced" if not misses else "mismatch: " + ", ".join(misses[:5])
    return CriterionResult(4, "golden decompositions", not misses, detail)


def criterion_5(seed: int, scale: float) -> CriterionResult:
    problems, times = [], []
    for name, rows in (("A", OBSTRUCTION_A), ("B", OBSTRUCTION_B)):
        M = Mat(rows, GF2)
        start = time.perf_counter()
        idem, _ = brute_force_exists(M, 3, 2)
        potent, witness = brute_force_exists(M, 2, 4)
        elapsed = time.perf_counter() - start
        times.append(elapsed)
        if idem:
            problems.append(f"{name} has an idempotent + N^3 = 0 split")
        if not potent or m_pow(witness, 4) != witness or not m_mul(M + witness, M + witness).is_zero():
            problems.append(f"{name} has no 4-potent + square-zero split")
        if elapsed >= 60:
            problems.append(f"{name} search over one minute")
    detail = "A and B: no E^2 = E with (A-E)^3 = 0; E^4 = E with (A-E)^2 = 0 exists" if not problems else "; ".join(problems)
    return CriterionResult(5, "no idempotent + cube-zero split, by exhaustive search", not problems, detail, sum(times))


# stated eigenvalue sets for criterion 6, written out per case


def _stated(cls: str, f: Poly, a: int, ctx) -> set[int]:
    u = list(f.coeffs[:-1])
    n = len(u)
    c = u[-1]

    def mul(x, y):
        return fe_mul(x, y, ctx)

    if cls == "order1":
        return {u[0]}
    if cls == "order2-trace":
        return {0, u[1]}
    if cls == "order2-root":
        return {fe_sqrt(u[0], ctx)}
    if cls == "order3":
        return {a, a ^ 1, u[2] ^ 1}
    if cls == "order4-a":
        return {0, a, u[3] ^ a}
    if cls in ("order4-b", "4k-b"):
        return {0, 1, a, a ^ 1}
    if cls in ("4k-a", "4k+2-a"):
        return {0, c, mul(c, a), mul(c, a ^ 1)}
    if cls in ("4k+1", "4k+3"):
        return {c, c ^ 1, c ^ a, c ^ a ^ 1}
    if cls == "4k+2-b":
        b = fe_sqrt(u[n - 2] ^ mul(a, a) ^ a ^ 1, ctx)
        return {b, b ^ 1, b ^ a, b ^ a ^ 1}
    raise ValueError(cls)


# class -> (orders to draw from, trace constraint)
EIGEN_CLASSES = {
    "order1": ((1,), None),
    "order2-trace": ((2,), "nonzero"),
    "order2-root": ((2,), "zero"),
    "order3": ((3,), None),
    "order4-a": ((4,), "nonzero"),
    "order4-b": ((4,), "zero"),
    "4k-a": ((8, 12), "nonzero"),
    "4k-b": ((8, 12), "zero"),
    "4k+1": ((5, 9), None),
    "4k+2-a": ((6, 10), "nonzero"),
    "4k+2-b": ((6, 10), "zero"),
    "4k+3": ((7, 11), None),
}


def _forbidden(cls: str, f: Poly) -> set[int]:
    u = f.coeffs
    if cls == "order3":
        return {u[2], u[2] ^ 1}
    if cls == "order4-a":
        return {0, u[3]}
    return {0, 1}


def criterion_6(seed: int, scale: float) -> CriterionResult:
    rng = _rng(seed, 6)
    count = _count(200, scale)
    failures: dict[str, int] = {}
    total = 0
    for ctx in (GF4, GF8):
        for cls, (orders, trace) in EIGEN_CLASSES.items():
            for _ in range(count):
                n = int(rng.choice(orders))
                fixed = {}
                if trace == "zero":
                    fixed[str(n - 1)] = 0
                elif trace == "nonzero":
                    fixed[str(n - 1)] = int(rng.integers(1, ctx.q))
                f = _random_monic(n, ctx, rng, **fixed)
                total += 1
                key = f"{cls} over GF({ctx.q})"
                try:
                    cert = split_block(companion_of(f))
                    a = cert.blocks[0].a
                    if n >= 3 and a in _forbidden(cls, f):
                        raise ValueError("inadmissible a")
                    roots = p_roots(charpoly_hessenberg(cert.D))
                    ok = sum(k for _, k in roots) == n and {r for r, _ in roots} == _stated(cls, f, a, ctx)
                except Exception:
                    ok = False
                if not ok:
                    failures[key] = failures.get(key, 0) + 1
    if failures:
        detail = f"{total - sum(failures.values())}/{total} exact; mismatches: " + ", ".join(f"{k} {v}/{count}" for k, v in failures.items())
    else:
        detail = f"{total}/{total} blocks with the stated eigenvalue set"
    return CriterionResult(6, "eigenvalue sets per residue class over GF(4), GF(8)", not failures, detail)


def _subfield_instance(case: str, ctx, K: list[int], rng, violate: bool = False) -> Mat:
    """Random non-derogatory matrix P C P^-1 for one case of the subfield split.
    With violate=True the coefficient that must lie in K is taken outside K."""
    outside = [x for x in ctx.elements() if x not in K]
    pool = outside if violate else K
    if case == "i":
        n = 2
        f = _random_monic(n, ctx, rng, **{"1": 0})
    elif case == "ii":
        n = int(rng.choice((6, 10)))
        f = _random_monic(n, ctx, rng, **{str(n - 1): 0, str(n - 2): int(rng.choice(pool))})
    else:
        n = int(rng.integers(2, 13))
        if n % 4 == 2:
            pool = [x for x in pool if x]  # trace 0 at these orders is case i or ii
        f = _random_monic(n, ctx, rng, **{str(n - 1): int(rng.choice(pool))})
    P = random_invertible(n, ctx, rng)
    return m_mul(m_mul(P, companion_of(f)), m_inv(P))


def criterion_7(seed: int, scale: float) -> CriterionResult:
    rng = _rng(seed, 7)
    count = _count(200, scale)
    ctx, d = GF16, 2
    K = subfield_elements(d, ctx)
    parts, ok = [], True
    for case in ("i", "ii", "iii"):
        d4 = ds = 0
        for _ in range(count):
            A = _subfield_instance(case, ctx, K, rng)
            try:
                cert = split_subfield(A, d)
            except Exception:
                continue
            if not check_certificate(A, cert).ok:
                continue
            ds += m_pow(cert.D, cert.potency_s) == cert.D
            d4 += m_pow(cert.D, 4) == cert.D
        ok &= d4 == count
        note = "" if case != "i" else f", D^3 = D {ds}/{count}"
        parts.append(f"case {case}: D^4 = D {d4}/{count}{note}")
    for case in ("ii", "iii"):
        refused = 0
        for _ in range(count):
            A = _subfield_instance(case, ctx, K, rng, violate=True)
            try:
                split_subfield(A, d)
            except SplitError as exc:
                refused += "subfield hypothesis violated" in str(exc)
        ok &= refused == count
        parts.append(f"case {case} violating: refused {refused}/{count}")
    derogatory = Mat.scalar(3, 5, ctx)
    try:
        split_subfield(derogatory, d)
        ok = False
        parts.append("derogatory input accepted")
    except SplitError:
        pass
    return CriterionResult(7, "subfield potency over GF(16) with K = GF(4)", bool(ok), "; ".join(parts))


def criterion_8(seed: int, scale: float) -> CriterionResult:
    bad = []
    inputs = []
    for idx in range(1 << 9):
        bits = [(idx >> (8 - t)) & 1 for t in range(9)]
        inputs.append(Mat(np.array(bits).reshape(3, 3), GF2))
    for code in range(16):
        inputs.append(companion_of(Poly([(code >> i) & 1 for i in range(4)] + [1], GF2)))
    for A in inputs:
        exists, _ = brute_force_exists(A, 2, 4)
        try:
            cert = split_f2(A)
            success = check_certificate(A, cert).ok
        except Exception:
            success = False
        if success != exists or not success:
            bad.append(A)
    detail = f"{len(inputs) - len(bad)}/{len(inputs)} agree with the exhaustive oracle and pass verification"
    return CriterionResult(8, "splitter vs exhaustive oracle over GF(2)", not bad, detail)


def criterion_9(seed: int, scale: float) -> CriterionResult:
    rng = _rng(seed, 9)
    count = _count(500, scale)
    total, bad = 0, []
    for ctx in SPLIT_FIELDS:
        for n in SPLIT_ORDERS:
            for i in range(count):
                A = random_matrix(n, ctx, rng)
                total += 1
                try:
                    r = rcf(A)
                    P = r.basis
                    ok = m_mul(m_inv(P), m_mul(A, P)) == m_direct_sum(*(companion_of(f) for f in r.factors))
                    ok &= all(p_divides(f, g) for f, g in zip(r.factors, r.factors[1:]))
                    prod = Poly.one(ctx)
                    for f in r.factors:
                        prod = prod * f
                    ok &= prod == charpoly_hessenberg(A)
                except Exception:
                    ok = False
                if not ok:
                    bad.append(f"q={ctx.q} n={n} #{i}")
    detail = f"{total - len(bad)}/{total} with P invertible, P^-1 A P block companion, divisibility chain, product = charpoly"
    if bad:
        detail += f"; first failure {bad[0]}"
    return CriterionResult(9, "rational canonical form contract", not bad, detail)


CRITERIA: dict[int, Callable[[int, float], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


def run_criterion(number: int, seed: int = 0, scale: float = 1.0) -> CriterionResult:
    start = time.perf_counter()
    res = CRITERIA[number](seed, scale)
    if not res.seconds:
        res.seconds = time.perf_counter() - start
    return res


def run_selftest(seed: int = 0, scale: float = 1.0, only=None, report: Callable[[str], None] | None = None) -> list[CriterionResult]:
    out = []
    for number in sorted(CRITERIA):
        if only and number not in only:
            continue
        res = run_criterion(number, seed, scale)
        if report is not None:
            report(res.line())
        out.append(res)
    return out
