"""
Binomial arithmetic and the threshold ``t(k, r)``.

``t = t(k, r)`` is the largest integer with ``C(t-1, r-1) <= k``; equivalently the
unique integer with ``C(t-1, r-1) <= k < C(t, r-1)``. It is the size of the
complete core shared by the extremal families.
"""

from dataclasses import dataclass
from math import comb

from .errors import BinomialOverflowError, GuardError, HypergraphError

MAX_VERTICES = 64  # Desk-scale ceiling; edge bitmasks fit in one machine word.
INT64_MAX = 2**63 - 1


def binom(n: int, k: int) -> int:
    """
    Exact binomial coefficient with the convention ``C(n, k) = 0`` when ``k > n``.

    :param n: Size of the ground set (>= 0).
    :type n: int
    :param k: Size of the chosen subsets (>= 0).
    :type k: int
    :return: The binomial coefficient, as an unbounded Python integer.
    :rtype: int
    """
    if n < 0 or k < 0:
        raise HypergraphError(f"binom expects non-negative arguments, got ({n}, {k})")
    if k > n:
        return 0
    return comb(n, k)


def checked_int64(value: int, what: str = "value") -> int:
    """
    Returns ``value`` unchanged if it fits in a signed 64-bit integer.

    Used wherever a quantity is stored in a fixed-width container (numpy arrays,
    edge bitmasks), so overflow is reported instead of wrapping silently.

    :raises BinomialOverflowError: If the value does not fit.
    """
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise BinomialOverflowError(f"{what} = {value} does not fit in 64 bits")
    return value


def threshold_t(k: int, r: int) -> int:
    """
    Computes ``t(k, r)`` by a linear scan from ``t = r``.

    :param k: Connectivity parameter (>= 1).
    :type k: int
    :param r: Uniformity (>= 2).
    :type r: int
    :return: The unique ``t`` with ``C(t-1, r-1) <= k < C(t, r-1)``.
    :rtype: int
    """
    if k < 1 or r < 2:
        raise GuardError(f"threshold_t needs k >= 1 and r >= 2, got k={k}, r={r}")

    t = r  # C(r-1, r-1) = 1 <= k
    while binom(t, r - 1) <= k:
        t += 1
    return t


def crossing_count_complete(n: int, n1: int, r: int) -> int:
    """
    Number of ``r``-subsets of an ``n``-set meeting both a fixed ``n1``-subset and
    its complement.

    Evaluated as the sum over the number ``s`` of vertices taken from the first
    side; it always equals ``C(n, r) - C(n1, r) - C(n - n1, r)``.
    """
    if not 0 <= n1 <= n:
        raise HypergraphError(f"split size n1={n1} outside [0, {n}]")
    n2 = n - n1
    return sum(binom(n1, s) * binom(n2, r - s) for s in range(1, r))


def order_condition_holds(n: int, k: int, r: int) -> bool:
    """
    Order condition under which maximal hypergraphs are k-edge-connected and the upper-bound family exists:
    ``n >= t`` when ``C(t-1, r-1) = k`` and ``n >= t + 1`` when ``C(t-1, r-1) < k``.
    """
    t = threshold_t(k, r)
    if binom(t - 1, r - 1) == k:
        return n >= t
    return n >= t + 1


@dataclass(frozen=True)
class Params:
    """
    Parameter triple ``(n, k, r)`` together with the derived threshold ``t``.

    Build it with :meth:`create`, which validates the ranges and derives ``t``.
    """

    n: int
    k: int
    r: int
    t: int

    @classmethod
    def create(cls, n: int, k: int, r: int) -> "Params":
        if n < 0:
            raise GuardError(f"n must be non-negative, got {n}")
        if n > MAX_VERTICES:
            raise GuardError(f"n={n} exceeds MAX_VERTICES={MAX_VERTICES}")
        return cls(n=n, k=k, r=r, t=threshold_t(k, r))

    @property
    def tight(self) -> bool:
        """True when ``C(t-1, r-1) = k`` exactly."""
        return binom(self.t - 1, self.r - 1) == self.k

    @property
    def order_condition(self) -> bool:
        return order_condition_holds(self.n, self.k, self.r)

    def __str__(self) -> str:
        return f"n={self.n}, k={self.k}, r={self.r}, t={self.t}"
