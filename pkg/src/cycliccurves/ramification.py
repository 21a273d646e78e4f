"""Exact Riemann-Hurwitz arithmetic for cyclic covers.

The objects here are the raw combinatorial data of a cyclic cover of
curves: ramification signatures (quotient genus plus a multiset of
ramification indices), higher-ramification filtrations at wildly
ramified points (stored as the list of subgroup orders |G_P^(i)|), and
orbit data pairing a filtration with the number of points sharing it.

All operations are pure functions of their inputs, return exact Python
integers, and raise rather than silently round when the genus formula
cannot be satisfied: a parity failure of 2g - 2 is a meaningful
arithmetic contradiction, not a rounding issue.

Group orders are capped at 2**32; this library targets desk-scale
enumeration, not asymptotics.
"""

from dataclasses import dataclass

from .intmath import is_power_of, is_prime

N_CAP = 2**32


class InvalidFiltration(ValueError):
    """A ramification filtration violates a structural invariant."""


class Inconsistent(ValueError):
    """Riemann-Hurwitz data admits no non-negative integer genus."""


class NotADivisor(ValueError):
    """A divisibility precondition fails."""


def _check_group_order(n):
    if not 1 <= n <= N_CAP:
        raise Inconsistent(f"group order {n} outside [1, 2**32]")


@dataclass(frozen=True)
class Signature:
    """Ramification type (g0; e_1, ..., e_n) of a cyclic cover.

    g0 is the genus of the quotient curve; indices is the multiset of
    ramification indices, kept in canonical non-decreasing order so
    equality is multiset equality.
    """

    g0: int
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        if self.g0 < 0:
            raise ValueError(f"quotient genus must be >= 0, got {self.g0}")
        indices = tuple(sorted(self.indices))
        for e in indices:
            if e < 2:
                raise ValueError(f"ramification index must be >= 2, got {e}")
        object.__setattr__(self, "indices", indices)

    @property
    def n(self) -> int:
        return len(self.indices)

    def __str__(self):
        inner = ",".join(str(e) for e in self.indices)
        return f"({self.g0}; {inner})"


@dataclass(frozen=True)
class FiltrationProfile:
    """Orders |G_P^(0)| >= |G_P^(1)| >= ... at a ramified point.

    Trailing 1s are normalized away, so equality compares only the
    nontrivial levels; orders beyond the stored list are implicitly 1.
    Structural invariants of cyclic stabilizers in characteristic p are
    enforced at construction:

      * the order at level 1 is the p-part of the order at level 0,
      * every order at level >= 1 is a power of p,
      * all jump indices >= 1 are congruent modulo p.
    """

    p: int
    orders: tuple[int, ...]

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise InvalidFiltration(f"odd prime expected, got p={self.p}")
        orders = tuple(self.orders)
        if any(o < 1 for o in orders):
            raise InvalidFiltration(f"orders must be positive: {orders}")
        while orders and orders[-1] == 1:
            orders = orders[:-1]
        if any(orders[i] < orders[i + 1] for i in range(len(orders) - 1)):
            raise InvalidFiltration(f"orders must be non-increasing: {orders}")
        o0 = orders[0] if orders else 1
        _check_group_order(o0)
        o1 = orders[1] if len(orders) > 1 else 1
        if not is_power_of(o1, self.p):
            raise InvalidFiltration(
                f"level-1 order {o1} is not a power of p={self.p}")
        for o in orders[2:]:
            if not is_power_of(o, self.p):
                raise InvalidFiltration(
                    f"order {o} at level >= 1 is not a power of p={self.p}")
        if o0 % o1 != 0 or (o0 // o1) % self.p == 0:
            raise InvalidFiltration(
                f"level-0 order {o0} must be (prime-to-p) * {o1}")
        object.__setattr__(self, "orders", orders)
        jumps = self.jumps()
        if any((i - jumps[0]) % self.p for i in jumps[1:]):
            raise InvalidFiltration(
                f"jump indices {jumps} not congruent modulo p={self.p}")

    @property
    def o0(self) -> int:
        """Order of the full stabilizer (1 for a trivial profile)."""
        return self.orders[0] if self.orders else 1

    @property
    def is_tame(self) -> bool:
        return len(self.orders) <= 1

    def jumps(self) -> tuple[int, ...]:
        """Indices i >= 1 where the order drops from level i to i+1."""
        orders = tuple(self.orders) + (1,)
        return tuple(i for i in range(1, len(orders) - 1)
                     if orders[i] > orders[i + 1])


def validate_filtration(p: int, orders) -> FiltrationProfile:
    """Normalize and validate raw filtration orders.

    Returns the canonical FiltrationProfile, or raises InvalidFiltration.
    """
    return FiltrationProfile(p, tuple(orders))


@dataclass(frozen=True)
class OrbitDatum:
    """A filtration together with the number of points sharing it."""

    filtration: FiltrationProfile
    orbit_size: int

    def __post_init__(self):
        if self.orbit_size < 1:
            raise ValueError(f"orbit size must be >= 1, got {self.orbit_size}")


def different_exponent(profile: FiltrationProfile) -> int:
    """Local different exponent: the sum of (order - 1) over all levels."""
    return sum(o - 1 for o in profile.orders)


def _solve_genus(rhs):
    # rhs = 2g - 2; reject odd or negative-genus outcomes loudly.
    if rhs % 2:
        raise Inconsistent(f"2g - 2 = {rhs} is odd")
    g = (rhs + 2) // 2
    if g < 0:
        raise Inconsistent(f"2g - 2 = {rhs} gives negative genus")
    return g


def rh_genus_tame(group_order: int, g0: int, sig) -> int:
    """Genus of a degree-N tame cyclic cover from its signature.

    2g - 2 = N(2*g0 - 2) + sum over indices of (N/e)(e - 1).

    `sig` may be a Signature (its g0 must agree with the g0 argument) or
    a bare iterable of ramification indices.
    """
    _check_group_order(group_order)
    if g0 < 0:
        raise Inconsistent(f"quotient genus {g0} < 0")
    if isinstance(sig, Signature):
        if sig.g0 != g0:
            raise Inconsistent(f"signature g0={sig.g0} disagrees with g0={g0}")
        indices = sig.indices
    else:
        indices = tuple(sig)
    rhs = group_order * (2 * g0 - 2)
    for e in indices:
        if e < 2:
            raise Inconsistent(f"ramification index {e} < 2")
        if group_order % e:
            raise NotADivisor(f"index {e} does not divide N={group_order}")
        rhs += (group_order // e) * (e - 1)
    return _solve_genus(rhs)


def rh_genus_wild(group_order: int, g0: int, orbits) -> int:
    """Genus of a degree-N cyclic cover from per-orbit filtration data.

    2g - 2 = N(2*g0 - 2) + sum over orbits of size * different_exponent.
    Each orbit must satisfy orbit_size * o0 = N.
    """
    _check_group_order(group_order)
    if g0 < 0:
        raise Inconsistent(f"quotient genus {g0} < 0")
    rhs = group_order * (2 * g0 - 2)
    for orbit in orbits:
        if orbit.orbit_size * orbit.filtration.o0 != group_order:
            raise Inconsistent(
                f"orbit size {orbit.orbit_size} x stabilizer "
                f"{orbit.filtration.o0} != N={group_order}")
        rhs += orbit.orbit_size * different_exponent(orbit.filtration)
    return _solve_genus(rhs)


def quotient_is_branched(e_p: int, d: int, group_order: int) -> bool:
    """Whether the degree-N/d quotient cover is branched under a point
    of ramification index e_p: true iff e_p does not divide d."""
    _check_group_order(group_order)
    for value, name in ((e_p, "e_p"), (d, "d")):
        if value < 1 or group_order % value:
            raise NotADivisor(f"{name}={value} does not divide N={group_order}")
    return d % e_p != 0


def kummer_branch_valid(n: int, orders_at_points) -> bool:
    """Validity of order data for a degree-n Kummer extension.

    `orders_at_points` maps point labels to integer orders of the
    defining function (finitely many nonzero).  Valid iff the orders
    sum to zero (a principal divisor) and the number of points where n
    does not divide the order -- the branch points -- is not exactly 1.
    """
    _check_group_order(n)
    if hasattr(orders_at_points, "values"):
        ords = list(orders_at_points.values())
    else:
        ords = [v for _, v in orders_at_points]
    if sum(ords) != 0:
        return False
    return sum(1 for v in ords if v % n) != 1
