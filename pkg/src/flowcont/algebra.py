"""Integer primitives and finitely generated abelian groups.

Everything here uses Python's arbitrary-precision integers, so there is no
overflow at any input size.  A group is a free rank plus a tuple of cyclic
orders; an element is a plain tuple of ints, one per factor, with residues
held in ``[0, order)``.  The trivial group is ``Group(0, ())``.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

GroupElement = tuple[int, ...]


class GroupSyntaxError(ValueError):
    """Unparseable group description."""


@dataclass(frozen=True)
class Group:
    """Finitely generated abelian group: Z^free_rank x prod Z_orders[i].

    Orders need not be prime powers or pairwise coprime; only the exponent
    matters to the decision procedures, so inputs are kept as given.
    """

    free_rank: int = 0
    orders: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        if self.free_rank < 0:
            raise GroupSyntaxError("free rank must be nonnegative")
        for n in self.orders:
            if n < 1:
                raise GroupSyntaxError(f"cyclic order must be >= 1, got {n}")

    @property
    def num_factors(self) -> int:
        return self.free_rank + len(self.orders)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        """Number of elements, or None when the group is infinite."""
        if not self.is_finite:
            return None
        return math.prod(self.orders)

    def zero(self) -> GroupElement:
        return (0,) * self.num_factors

    def element(self, value) -> GroupElement:
        """Coerce an int (single-factor groups only) or an int sequence.

        Residue coordinates are reduced into [0, order).
        """
        if isinstance(value, int):
            if self.num_factors != 1:
                raise ValueError(f"plain int element needs a single-factor group, got {self}")
            value = (value,)
        coords = tuple(int(c) for c in value)
        if len(coords) != self.num_factors:
            raise ValueError(f"element needs {self.num_factors} coordinates, got {len(coords)}")
        free = coords[: self.free_rank]
        cyclic = tuple(c % n for c, n in zip(coords[self.free_rank :], self.orders))
        return free + cyclic

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.element(x + y for x, y in zip(a, b, strict=True))

    def neg(self, a: GroupElement) -> GroupElement:
        return self.element(-x for x in a)

    def scale(self, k: int, a: GroupElement) -> GroupElement:
        """Integer multiple k*a."""
        return self.element(k * x for x in a)

    def is_zero(self, a: GroupElement) -> bool:
        return all(x == 0 for x in a)

    def elements(self) -> Iterator[GroupElement]:
        """All elements of a finite group, lexicographic in the residue tuple."""
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")
        return itertools.product(*(range(n) for n in self.orders))

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z{n}" for n in self.orders]
        return "x".join(parts) if parts else "Z1"


INTEGERS = Group(free_rank=1)
TRIVIAL = Group()


def direct_product(a: Group, b: Group) -> Group:
    return Group(a.free_rank + b.free_rank, a.orders + b.orders)


def parse_group(text: str) -> Group:
    """Parse "Z", "Z<k>", products joined by "x", or a bare integer.

    Examples: "Z2xZ3", "Z", "ZxZ4", "6" (shorthand for Z6).
    """
    text = text.strip()
    if not text:
        raise GroupSyntaxError("empty group description")
    free_rank = 0
    orders: list[int] = []
    for part in text.split("x"):
        part = part.strip()
        if part in ("Z", "z"):
            free_rank += 1
            continue
        if part and part[0] in "Zz":
            digits = part[1:]
        else:
            digits = part
        if not digits.isdigit():
            raise GroupSyntaxError(f"bad group factor {part!r} in {text!r}")
        n = int(digits)
        if n == 0:
            raise GroupSyntaxError(f"cyclic order 0 in {text!r}")
        orders.append(n)
    return Group(free_rank, tuple(orders))


def exponent(m: Group) -> int | None:
    """Largest order of a group element: lcm of the cyclic orders, or
    None (infinite) when there is a free factor."""
    if m.free_rank > 0:
        return None
    return math.lcm(*m.orders)


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def cone_member(target: int, generators: Iterable[int]) -> bool:
    """Is target a nonnegative integer combination of the generators?

    Reachability DP over 0..target; O(target * len(generators)).
    """
    if target < 0:
        raise ValueError(f"cone target must be nonnegative, got {target}")
    gens = sorted(set(int(s) for s in generators))
    if any(s < 1 for s in gens):
        raise ValueError("cone generators must be positive")
    reachable = [False] * (target + 1)
    reachable[0] = True
    for s in gens:
        for v in range(s, target + 1):
            if reachable[v - s]:
                reachable[v] = True
    return reachable[target]


def next_prime_above(x: int) -> int:
    """Smallest prime strictly greater than x >= 1, by trial division."""
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    candidate = x + 1
    while not _is_prime(candidate):
        candidate += 1
    return candidate


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def gcd_all(values: Iterable[int]) -> int:
    """gcd of absolute values; 0 for an empty or all-zero collection."""
    return math.gcd(*(int(v) for v in values))
