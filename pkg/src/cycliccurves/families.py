"""Concrete curve families with a large cyclic automorphism group.

Five families are modeled, each a curve of genus g >= 2 carrying a
cyclic automorphism group of order N >= 2g + 1:

  * Kummer        y^N = x^r (1-x)^s           N coprime to char, tame
  * Hyperelliptic y^2 = (x^(g+1)-1)(x^(g+1)-lambda),  N = 2g + 2, tame
  * ASPower       y^p - y = a(x^m - b)        N = p*m, wild
  * ASRational    b*y^p + c*y = a*x + 1/x     N = 2p,  wild
  * Homma         y^p - y = x^2               N = p,   wild

Models are field-agnostic value objects: parameters are either plain
integers (read in the prime subfield) or strings standing for symbolic
parameters.  Root-of-unity symbols in automorphism descriptors stay
symbolic here; they are bound to concrete field elements only by the
verification engine in `fforacle`.

Constructors reject parameter choices that degenerate to genus < 2.
"""

from dataclasses import dataclass
from math import gcd

from .intmath import is_prime
from .ramification import Signature

Param = int | str


class NotPrimitive(ValueError):
    """(r, s) is not a primitive exponent pair for the given N."""


class DegenerateModel(ValueError):
    """Parameters produce a curve of genus < 2 or a singular family."""


@dataclass(frozen=True)
class PrimitivePair:
    """Exponent pair (r, s) for y^n = x^r (1-x)^s.

    Requires r, s >= 1, r + s <= n - 1 and gcd(r, s, n) = 1.
    """

    n: int
    r: int
    s: int

    def __post_init__(self):
        n, r, s = self.n, self.r, self.s
        if n < 2:
            raise NotPrimitive(f"n must be >= 2, got {n}")
        if r < 1 or s < 1 or r + s > n - 1:
            raise NotPrimitive(f"(r, s)=({r}, {s}) outside range for n={n}")
        if gcd(gcd(r, s), n) != 1:
            raise NotPrimitive(f"gcd(r, s, n) != 1 for ({r}, {s}) mod {n}")


def kummer_genus(n: int, r: int, s: int) -> int:
    """Genus of y^n = x^r (1-x)^s for a primitive pair:
    (n + 2 - gcd(n,r) - gcd(n,s) - gcd(n,r+s)) / 2."""
    PrimitivePair(n, r, s)
    total = n + 2 - gcd(n, r) - gcd(n, s) - gcd(n, r + s)
    assert total % 2 == 0, (n, r, s)
    return total // 2


def kummer_signature(n: int, r: int, s: int) -> Signature:
    """Ramification signature of y^n = x^r (1-x)^s: genus-0 quotient,
    branched over x = 0, 1, infinity with indices n/gcd."""
    PrimitivePair(n, r, s)
    return Signature(0, (n // gcd(n, r), n // gcd(n, s), n // gcd(n, r + s)))


@dataclass(frozen=True)
class AutomorphismDescriptor:
    """Symbolic description of a cyclic generator on a curve model.

    `order` is the order of the automorphism; `zeta_order` records the
    multiplicative order that the root-of-unity symbol in the action
    must have once bound to a field (None when no root of unity is
    involved).
    """

    order: int
    action: str
    zeta_order: int | None = None


def identity_descriptor() -> AutomorphismDescriptor:
    return AutomorphismDescriptor(1, "(x, y) -> (x, y)", None)


class CurveModel:
    """Base class for the tagged union of curve families."""

    def genus(self) -> int:
        raise NotImplementedError

    def cyclic_order(self) -> int:
        raise NotImplementedError

    def generator(self) -> AutomorphismDescriptor:
        raise NotImplementedError

    def is_concrete(self) -> bool:
        """True when every parameter is a plain integer."""
        return True


def _concrete(*params) -> bool:
    return all(isinstance(v, int) for v in params)


@dataclass(frozen=True)
class Kummer(CurveModel):
    """y^n = x^r (1-x)^s with (r, s) a primitive pair."""

    pair: PrimitivePair

    def __post_init__(self):
        if self.genus() < 2:
            raise DegenerateModel(
                f"Kummer pair {self.pair} has genus {self.genus()} < 2")

    @classmethod
    def of(cls, n, r, s):
        return cls(PrimitivePair(n, r, s))

    def genus(self):
        p = self.pair
        t = p.n + 2 - gcd(p.n, p.r) - gcd(p.n, p.s) - gcd(p.n, p.r + p.s)
        return t // 2

    def cyclic_order(self):
        return self.pair.n

    def generator(self):
        return AutomorphismDescriptor(
            self.pair.n, "(x, y) -> (x, zeta*y)", zeta_order=self.pair.n)


@dataclass(frozen=True)
class Hyperelliptic(CurveModel):
    """y^2 = (x^(g+1) - 1)(x^(g+1) - lam), g even, lam outside {0, 1}."""

    g: int
    lam: Param

    def __post_init__(self):
        if self.g < 2 or self.g % 2:
            raise DegenerateModel(f"genus must be even and >= 2, got {self.g}")
        if isinstance(self.lam, int) and self.lam in (0, 1):
            raise DegenerateModel(f"lambda={self.lam} degenerates the family")

    def genus(self):
        return self.g

    def cyclic_order(self):
        return 2 * self.g + 2

    def generator(self):
        return AutomorphismDescriptor(
            2 * self.g + 2, "(x, y) -> (zeta*x, -y)", zeta_order=self.g + 1)

    def is_concrete(self):
        return _concrete(self.lam)


@dataclass(frozen=True)
class ASPower(CurveModel):
    """y^p - y = a(x^m - b) with m > 1 coprime to p and a nonzero."""

    p: int
    m: int
    a: Param
    b: Param

    def __post_init__(self):
        if self.p < 5 or not is_prime(self.p):
            raise DegenerateModel(f"odd prime p != 3 required, got {self.p}")
        if self.m < 2 or gcd(self.m, self.p) != 1:
            raise DegenerateModel(
                f"m={self.m} must be > 1 and coprime to p={self.p}")
        if isinstance(self.a, int) and self.a % self.p == 0:
            raise DegenerateModel("coefficient a must be nonzero")

    def genus(self):
        return (self.p - 1) * (self.m - 1) // 2

    def cyclic_order(self):
        return self.p * self.m

    def generator(self):
        return AutomorphismDescriptor(
            self.p * self.m, "(x, y) -> (zeta*x, y + 1)", zeta_order=self.m)

    def is_concrete(self):
        return _concrete(self.a, self.b)


@dataclass(frozen=True)
class ASRational(CurveModel):
    """b*y^p + c*y = a*x + 1/x with a, b, c nonzero."""

    p: int
    a: Param
    b: Param
    c: Param

    def __post_init__(self):
        if self.p < 5 or not is_prime(self.p):
            raise DegenerateModel(f"odd prime p != 3 required, got {self.p}")
        for name, v in (("a", self.a), ("b", self.b), ("c", self.c)):
            if isinstance(v, int) and v % self.p == 0:
                raise DegenerateModel(f"coefficient {name} must be nonzero")

    def genus(self):
        return self.p - 1

    def cyclic_order(self):
        return 2 * self.p

    def generator(self):
        return AutomorphismDescriptor(
            2 * self.p, "(x, y) -> (1/(a*x), y + gamma)", zeta_order=None)

    def is_concrete(self):
        return _concrete(self.a, self.b, self.c)


@dataclass(frozen=True)
class Homma(CurveModel):
    """y^p - y = x^2, carrying a cyclic group of order exactly p."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise DegenerateModel(f"odd prime required, got {self.p}")
        if self.p < 5:
            raise DegenerateModel(f"p={self.p} gives genus < 2")

    def genus(self):
        return (self.p - 1) // 2

    def cyclic_order(self):
        return self.p

    def generator(self):
        return AutomorphismDescriptor(
            self.p, "(x, y) -> (x, y + 1)", zeta_order=None)


def genus(model: CurveModel) -> int:
    """Genus of a curve model; always >= 2 for constructible models."""
    return model.genus()


def cyclic_order(model: CurveModel) -> int:
    """Order of the distinguished cyclic automorphism group."""
    return model.cyclic_order()


def generator(model: CurveModel) -> AutomorphismDescriptor:
    """Symbolic generator of the distinguished cyclic group."""
    return model.generator()
