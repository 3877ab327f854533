"""Dense univariate polynomials with integer coefficients."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Optional


class IntPolynomial:
    """Coefficients stored low degree first; trailing zeros are stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divide_linear(self, r: int) -> tuple:
        """Quotient and remainder of division by ``t - r`` (synthetic division)."""
        if not self.coeffs:
            return IntPolynomial(), 0
        q = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * r + c
            q.append(acc)
        rem = q.pop()
        return IntPolynomial(reversed(q)), rem

    def divide_by_t_power(self, r: int) -> "IntPolynomial":
        if r == 0:
            return self
        if any(self.coeffs[:r]):
            raise ArithmeticError(f"{self} is not divisible by t^{r}")
        return IntPolynomial(self.coeffs[r:])

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if d == 0:
                body = str(a)
            else:
                mono = var if d == 1 else f"{var}^{d}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _lift(x) -> IntPolynomial:
    return x if isinstance(x, IntPolynomial) else IntPolynomial([x])


def integer_roots(p: IntPolynomial) -> Counter:
    """Integer roots of ``p`` with multiplicity."""
    roots: Counter = Counter()
    if not p.coeffs:
        raise ValueError("the zero polynomial has every integer as a root")
    while p.degree > 0 and p.coeffs[0] == 0:
        roots[0] += 1
        p = IntPolynomial(p.coeffs[1:])
    if p.degree <= 0:
        return roots
    c0 = abs(p.coeffs[0])
    cands = [d for d in range(1, c0 + 1) if c0 % d == 0] if c0 <= 10**6 else _small_divisors(c0)
    for d in cands:
        for r in (d, -d):
            while p.degree > 0:
                q, rem = p.divide_linear(r)
                if rem:
                    break
                roots[r] += 1
                p = q
    return roots


def _small_divisors(c: int) -> list:
    out, d = set(), 1
    while d * d <= c:
        if c % d == 0:
            out.update((d, c // d))
        d += 1
    return sorted(out)


def terao_check(p: IntPolynomial) -> Optional[list]:
    """Exponents if ``p`` is a product of ``t - e`` with integers ``e >= 0``, else None."""
    if p.degree < 0 or p.leading != 1:
        return None
    roots = integer_roots(p)
    if sum(roots.values()) != p.degree or any(r < 0 for r in roots):
        return None
    return sorted(roots.elements())


def factored_form(exponents, var: str = "t") -> str:
    parts = []
    for e, k in sorted(Counter(exponents).items()):
        base = var if e == 0 else f"({var} - {e})"
        parts.append(base if k == 1 else f"{base}^{k}")
    return "".join(parts) if parts else "1"
