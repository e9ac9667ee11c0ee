"""The unit index m(n) = [U(O_K) : U(Z + n*O_K)].

m(n) is the least k >= 1 with u^k in the order of index n, u the fundamental
unit.  The exponents k with u^k in the order form a subgroup of Z, so m(n)
divides L(n, d) and it suffices to test divisors of L in ascending order;
m is multiplicative-by-lcm over the prime powers of n.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm

from .arith import InternalConsistencyError, divisors_sorted, factorize
from .lfun import l_prime_power
from .pell import FundamentalUnit
from .quadfield import FieldContext, ModQuadInt, mod_mul, mod_pow, reduce_mod


@lru_cache(maxsize=None)
def min_power_prime_power(F: FieldContext, U: FundamentalUnit, p: int, a: int) -> int:
    """Least k with u^k in Z + p^a * O_K, searched over the divisors of L(p^a, d)."""
    q = p**a
    L = l_prime_power(p, a, F.d)
    base = reduce_mod(U.u, q)
    powers: dict[int, ModQuadInt] = {}
    for k in divisors_sorted(L):
        if k == 1:
            w = base
        elif k % 2 == 0 and k // 2 in powers:
            half = powers[k // 2]
            w = mod_mul(F, half, half)
        else:
            w = mod_pow(F, base, k, q)
        powers[k] = w
        if w.b == 0:
            return k
    raise InternalConsistencyError(
        f"no divisor of L({p}^{a}, {F.d}) = {L} brings u^k into the order"
    )


def min_power(F: FieldContext, U: FundamentalUnit, n: int) -> int:
    """Least k with u^k in Z + n*O_K: the lcm of the prime-power values."""
    if n < 1:
        raise ValueError(f"min_power requires n >= 1, got {n}")
    out = 1
    for p, a in factorize(n):
        out = lcm(out, min_power_prime_power(F, U, p, a))
    return out
