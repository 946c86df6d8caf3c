"""Self-checks of every route against the brute-force oracle.

Each check yields a :class:`CheckReport`; a failing report carries the first
failing tuple with the disagreeing values side by side.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .errors import BracketMomentsError
from .hydrogen import (
    METHODS,
    Method,
    MomentQuery,
    example2_paper,
    g_integral_form_a,
    g_integral_form_b,
    moment_direct_sum,
    moment_hahn,
)
from .oracle import oracle_g, oracle_moment
from .special import laguerre, laguerre_square_rhs

__all__ = ["CheckReport", "run_all", "CHECKS"]


@dataclass
class CheckReport:
    name: str
    passed: bool
    count: int = 0
    detail: str = ""
    expected_discrepancy: bool = False

    def line(self) -> str:
        if self.expected_discrepancy:
            return f"EXPECTED-DISCREPANCY {self.name}: {self.detail}"
        if self.passed:
            return f"PASS {self.name} ({self.count} cases)"
        return f"FAIL {self.name}: {self.detail}"


def _values(q: MomentQuery, methods) -> dict[str, object]:
    out = {}
    for m in methods:
        try:
            out[m.value] = METHODS[m](q).value
        except BracketMomentsError as exc:
            out[m.value] = f"error: {exc}"
    return out


def _grid(n_max: int, k_lo: Callable[[int], int], k_hi: int) -> Iterator[tuple[int, int, int]]:
    for n in range(1, n_max + 1):
        for l in range(n):
            for k in range(k_lo(l), k_hi + 1):
                yield n, l, k


def _compare(name: str, cases) -> CheckReport:
    """``cases`` yields ``(label, {method: value})``; all values must coincide."""
    count = 0
    for label, vals in cases:
        count += 1
        if len({str(v) for v in vals.values()}) != 1:
            side = ", ".join(f"{m}={v}" for m, v in vals.items())
            return CheckReport(name, False, count, f"{label}: {side}")
    return CheckReport(name, True, count)


def check_normalization(n_max: int, **_) -> CheckReport:
    def cases():
        for mu in (Fraction(1, 2), Fraction(1), Fraction(3)):
            for n in range(1, n_max + 1):
                for l in range(n):
                    vals = _values(MomentQuery(n, l, 0, mu), list(Method))
                    vals["expected"] = Fraction(1)
                    yield (n, l, 0, str(mu)), vals
    return _compare("normalization", cases())


def check_cross_method(n_max: int, **_) -> CheckReport:
    def cases():
        for n, l, k in _grid(n_max, lambda l: -2 * l - 2, 6):
            q = MomentQuery(n, l, k, 1)
            methods = [m for m in Method if m is not Method.HAHN_ROUTE]
            vals = _values(q, methods)
            vals["hahn_route"] = moment_hahn(q).value
            yield (n, l, k, 1), vals
    return _compare("cross-method grid", cases())


def check_g_forms(n_max: int, **_) -> CheckReport:
    def cases():
        for mu in (Fraction(1, 2), Fraction(1)):
            for l in range(min(n_max, 5)):
                for s in range(2 * n_max - 1):
                    for k in range(-2 * l - 2, 5):
                        vals = {"form_a": g_integral_form_a(l, k, s, mu), "form_b": g_integral_form_b(l, k, s, mu),
                                "oracle": oracle_g(l, k, s, mu)}
                        yield (l, k, s, str(mu)), vals
    return _compare("G forms", cases())


def check_laguerre_square(n_max: int, **_) -> CheckReport:
    def cases():
        for m in range(n_max + 1):
            for a in (Fraction(1), Fraction(2), Fraction(3), Fraction(5, 2)):
                lhs = laguerre(m, a) * laguerre(m, a)
                yield (m, str(a)), {"square": lhs.coeffs, "expansion": laguerre_square_rhs(m, a).coeffs}
    return _compare("Laguerre square", cases())


def check_physics(n_max: int, **_) -> CheckReport:
    def cases():
        for mu in (Fraction(1, 2), Fraction(1)):
            for n in range(1, n_max + 1):
                for l in range(n):
                    r = lambda k: oracle_moment(n, l, k, mu)
                    yield ("<r>", n, l, str(mu)), {"oracle": r(1), "closed": Fraction(3 * n * n - l * (l + 1), 2 * n) / mu}
                    yield ("<1/r>", n, l, str(mu)), {"oracle": r(-1), "closed": mu / n}
                    yield ("<1/r^2>", n, l, str(mu)), {"oracle": r(-2), "closed": mu * mu / (n * (l + Fraction(1, 2)))}
                    for k in range(1, 6):
                        lhs = ((k + 1) * r(k) - n * (2 * k + 1) / mu * r(k - 1)
                               + Fraction(k, 4) / (mu * mu) * ((2 * l + 1) ** 2 - k * k) * r(k - 2))
                        yield ("kramers", n, l, k, str(mu)), {"lhs": lhs, "zero": Fraction(0)}
    return _compare("physics identities", cases())


def check_random(n_max: int, seed: int = 0, samples: int = 25, **_) -> CheckReport:
    """Random rational scales: direct sum against the oracle, and the mu^k scaling law."""
    rng = random.Random(seed)

    def cases():
        for _ in range(samples):
            n = rng.randint(1, n_max)
            l = rng.randint(0, n - 1)
            k = rng.randint(-2 * l - 2, 6)
            mu = Fraction(rng.randint(1, 20), rng.randint(1, 20))
            yield (n, l, k, str(mu)), {"direct_sum": moment_direct_sum(n, l, k, mu).value,
                                       "oracle": oracle_moment(n, l, k, mu)}
            yield ("scaling", n, l, k, str(mu)), {"mu^k": oracle_moment(n, l, k, mu) * mu ** k,
                                                  "mu=1": oracle_moment(n, l, k, 1)}
    return _compare(f"randomized (seed {seed})", cases())


def check_example2(strict: bool = False, **_) -> CheckReport:
    """The printed ``l = n-2`` closed form against normalization at ``(2, 0, 0, 1)``."""
    paper = example2_paper(2, 0, 1)
    truth = oracle_moment(2, 0, 0, 1)
    detail = f"(2,0,0,1): paper {paper} vs oracle {truth}"
    if paper == truth:
        return CheckReport("example 2 erratum", True, 1)
    if strict:
        return CheckReport("example 2 erratum", False, 1, detail)
    return CheckReport("example 2 erratum", True, 1, detail, expected_discrepancy=True)


CHECKS = [
    check_normalization,
    check_cross_method,
    check_g_forms,
    check_laguerre_square,
    check_physics,
    check_random,
    check_example2,
]


def run_all(n_max: int = 5, seed: int = 0, strict: bool = False) -> list[CheckReport]:
    return [check(n_max=n_max, seed=seed, strict=strict) for check in CHECKS]
