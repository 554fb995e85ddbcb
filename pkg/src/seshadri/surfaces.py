"""Divisor classes on blown-up surfaces and closed-form Seshadri constants.

Two marked surfaces are supported:

* ``P2`` blown up in ``r`` points, basis H, E_1..E_r with H^2 = 1, E_i^2 = -1;
* ``Prod``, a product of two curves blown up in ``r`` points, basis
  F_1, F_2 (fiber classes), E_1..E_r with F_1.F_2 = 1, F_i^2 = 0, E_i^2 = -1.

All other pairings vanish.  Coefficients are exact rationals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

P2 = "P2"
PROD = "Prod"

POSITION_CAVEAT = (
    "valid for blown-up points with no two on a common horizontal or vertical fiber, "
    "and for y off the fibers through them; positions are not checked"
)


class SurfaceMismatchError(ValueError):
    pass


class HypothesisViolatedError(ValueError):
    def __init__(self, inequality: str, detail: str) -> None:
        super().__init__(f"hypothesis {inequality} violated: {detail}")
        self.inequality = inequality


@dataclass(frozen=True)
class DivisorClass:
    """``base`` holds (h,) on P2 and (a, b) on Prod; ``exc`` the E_i coefficients.

    The class is ``h*H - sum e_i E_i`` or ``a*F1 + b*F2 - sum e_i E_i``.
    """

    surface: str
    base: tuple[Fraction, ...]
    exc: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.surface not in (P2, PROD):
            raise ValueError(f"unknown surface {self.surface!r}")
        want = 1 if self.surface == P2 else 2
        if len(self.base) != want:
            raise ValueError(f"{self.surface} needs {want} base coefficient(s)")
        object.__setattr__(self, "base", tuple(Fraction(x) for x in self.base))
        object.__setattr__(self, "exc", tuple(Fraction(x) for x in self.exc))

    @property
    def r(self) -> int:
        return len(self.exc)

    @classmethod
    def plane(cls, h, exc: Sequence = ()) -> "DivisorClass":
        return cls(P2, (h,), tuple(exc))

    @classmethod
    def product(cls, a, b, exc: Sequence = ()) -> "DivisorClass":
        return cls(PROD, (a, b), tuple(exc))

    def _check(self, other: "DivisorClass") -> None:
        if self.surface != other.surface or self.r != other.r:
            raise SurfaceMismatchError(
                f"{self.surface}[r={self.r}] vs {other.surface}[r={other.r}]"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(
            self.surface,
            tuple(x + y for x, y in zip(self.base, other.base)),
            tuple(x + y for x, y in zip(self.exc, other.exc)),
        )

    def __rmul__(self, c) -> "DivisorClass":
        c = Fraction(c)
        return DivisorClass(self.surface, tuple(c * x for x in self.base), tuple(c * x for x in self.exc))

    def __neg__(self) -> "DivisorClass":
        return -1 * self

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __matmul__(self, other: "DivisorClass") -> Fraction:
        return intersect(self, other)

    def text(self) -> str:
        if self.surface == P2:
            terms = [(self.base[0], "H")]
        else:
            terms = [(self.base[0], "F1"), (self.base[1], "F2")]
        terms += [(-e, f"E{i}") for i, e in enumerate(self.exc, start=1)]
        out = ""
        for coef, gen in terms:
            if coef == 0:
                continue
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            body = gen if mag == 1 else (f"{mag}{gen}" if mag.denominator == 1 else f"{mag}*{gen}")
            out += (sign if out or sign == "-" else "") + body
        return f"{self.surface}[r={self.r}]: {out or '0'}"


def intersect(d1: DivisorClass, d2: DivisorClass) -> Fraction:
    d1._check(d2)
    if d1.surface == P2:
        base = d1.base[0] * d2.base[0]
    else:
        base = d1.base[0] * d2.base[1] + d1.base[1] * d2.base[0]
    return base - sum((x * y for x, y in zip(d1.exc, d2.exc)), Fraction(0))


def self_intersection(d: DivisorClass) -> Fraction:
    return intersect(d, d)


def uniform_class(r: int, eps) -> DivisorClass:
    """H - eps*(E_1 + ... + E_r) on the plane blown up in r points."""
    eps = Fraction(eps)
    return DivisorClass.plane(1, [eps] * r)


def nef_square_check(r: int, eps) -> bool:
    """Necessary condition for nefness of H - eps*sum E_i: non-negative square.

    Equivalent to eps^2 * r <= 1; no square roots are taken.
    """
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("eps must be >= 0")
    return self_intersection(uniform_class(r, eps)) >= 0


@dataclass(frozen=True)
class ProductPolarization:
    a: int
    b: int
    m: tuple[int, ...] = ()


@dataclass(frozen=True)
class SeshadriValue:
    value: int
    caveat: str = ""

    def __int__(self) -> int:
        return self.value


def seshadri_product(a: int, b: int) -> int:
    """Seshadri constant of a*F1 + b*F2 on C1 x C2, at any point."""
    if a <= 0 or b <= 0:
        raise ValueError(f"degrees must be positive, got a={a}, b={b}")
    return min(a, b)


def check_blowup_hypotheses(p: ProductPolarization) -> None:
    if p.a <= 0 or p.b <= 0:
        raise HypothesisViolatedError("a > 0, b > 0", f"a={p.a}, b={p.b}")
    lo = min(p.a, p.b)
    for i, mi in enumerate(p.m, start=1):
        if not 0 < mi < lo:
            raise HypothesisViolatedError(
                "0 < m_i < min(a,b)", f"m_{i} = {mi}, min(a,b) = {lo}"
            )
    total, hi = sum(p.m), max(p.a, p.b)
    if total > hi:
        raise HypothesisViolatedError("Σ m_i ≤ max(a,b)", f"Σ m_i = {total} > {hi}")


def seshadri_blownup_product(p: ProductPolarization) -> SeshadriValue:
    """Seshadri constant of pi^*L - sum m_i E_i at a point y in general position."""
    check_blowup_hypotheses(p)
    return SeshadriValue(min(p.a, p.b), POSITION_CAVEAT)


def fiber_test_curves(r: int, point: int) -> tuple[DivisorClass, DivisorClass]:
    """Strict transforms F1 - E_point and F2 - E_point of the two fibers through a point."""
    exc = [0] * r
    exc[point - 1] = 1
    return DivisorClass.product(1, 0, exc), DivisorClass.product(0, 1, exc)


_HEADER = re.compile(r"^\s*(P2|Prod)\s*\[\s*r\s*=\s*(\d+)\s*\]\s*:\s*(.*)$")
_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*"
    r"(?:(?P<gen>H|F1|F2|E\d+)|\((?P<group>[^)]*)\))"
)
_RANGE = re.compile(r"^\s*E(\d+)\s*\.\.\s*E(\d+)\s*$")


def parse_divisor(text: str) -> DivisorClass:
    """Parse e.g. ``"P2[r=10]: 1H - 2/7*(E1..E10)"`` or ``"Prod[r=3]: 3F1+4F2-2E1-2E2-2E3"``."""
    head = _HEADER.match(text)
    if head is None:
        raise ValueError(f"expected 'P2[r=N]: ...' or 'Prod[r=N]: ...', got {text!r}")
    surface, r, body = head.group(1), int(head.group(2)), head.group(3)
    base = [Fraction(0)] * (1 if surface == P2 else 2)
    exc = [Fraction(0)] * r

    def add_exc(idx: int, coef: Fraction) -> None:
        if not 1 <= idx <= r:
            raise ValueError(f"E{idx} out of range for r={r}")
        exc[idx - 1] -= coef

    pos = 0
    body = body.rstrip()
    if body.strip() == "0":
        body = ""
    while pos < len(body):
        term = _TERM.match(body, pos)
        if term is None or term.end() == pos:
            raise ValueError(f"cannot parse divisor at position {pos}: {body[pos:]!r}")
        coef = Fraction(term.group("coef")) if term.group("coef") else Fraction(1)
        if term.group("sign") == "-":
            coef = -coef
        gen, group = term.group("gen"), term.group("group")
        if gen == "H" and surface == P2:
            base[0] += coef
        elif gen in ("F1", "F2") and surface == PROD:
            base[int(gen[1]) - 1] += coef
        elif gen and gen.startswith("E"):
            add_exc(int(gen[1:]), coef)
        elif group is not None:
            rng = _RANGE.match(group)
            if rng:
                idxs = range(int(rng.group(1)), int(rng.group(2)) + 1)
            else:
                idxs = []
                for part in re.split(r"\s*\+\s*", group.strip()):
                    if not re.fullmatch(r"E\d+", part):
                        raise ValueError(f"bad group member {part!r}")
                    idxs.append(int(part[1:]))
            for i in idxs:
                add_exc(i, coef)
        else:
            raise ValueError(f"generator {gen} not on surface {surface}")
        pos = term.end()
    return DivisorClass(surface, tuple(base), tuple(exc))
