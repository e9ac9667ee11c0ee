"""Classification of the order R = Z + n*O_K inside K = Q(sqrt(d)).

The finite criteria used here:
  ideal-preserving   every prime dividing n is inert in O_K;
  locally associated m(n) = L(n, d);
  associated         both of the above;
  |Cl(R)|            h * L / m  (m divides L);
  half-factorial     h <= 2, and for n > 1 additionally R associated and
                     n a prime or twice an odd prime.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import InternalConsistencyError, factorize, is_squarefree
from .classgroup import class_number
from .lfun import l_value
from .pell import fundamental_unit
from .quadfield import SplitKind, make_field, splitting_kind
from .unitindex import min_power


@dataclass(frozen=True, slots=True)
class OrderSpec:
    """The order of index n in the maximal order of Q(sqrt(d))."""

    d: int
    n: int

    def __post_init__(self) -> None:
        if self.d in (0, 1) or not is_squarefree(self.d):
            raise ValueError(f"d={self.d} does not define a quadratic field")
        if self.n < 1:
            raise ValueError(f"order index must be >= 1, got {self.n}")


@dataclass(frozen=True, slots=True)
class ClassificationRecord:
    d: int
    n: int
    D: int
    m: int
    L: int
    ideal_preserving: bool
    locally_associated: bool
    associated: bool
    h_maximal: int
    h_order: int
    hfd: bool


def is_ideal_preserving(spec: OrderSpec) -> bool:
    F = make_field(spec.d)
    return all(
        splitting_kind(F, p) is SplitKind.INERT for p, _ in factorize(spec.n)
    )


def is_locally_associated(spec: OrderSpec) -> bool:
    F = make_field(spec.d)
    U = fundamental_unit(F)
    return min_power(F, U, spec.n) == l_value(spec.n, spec.d)


def is_associated(spec: OrderSpec) -> bool:
    return is_ideal_preserving(spec) and is_locally_associated(spec)


def order_class_number(spec: OrderSpec, m: int, L: int, h_maximal: int) -> int:
    """|Cl(R)| = h * L / m."""
    if L % m:
        raise InternalConsistencyError(
            f"m={m} does not divide L={L} for d={spec.d}, n={spec.n}"
        )
    return h_maximal * (L // m)


def index_is_prime_or_twice_odd_prime(n: int) -> bool:
    fac = factorize(n)
    if len(fac) == 1 and fac[0][1] == 1:
        return True
    return len(fac) == 2 and fac[0] == (2, 1) and fac[1][1] == 1


def is_hfd(spec: OrderSpec, associated: bool, h_maximal: int) -> bool:
    if h_maximal > 2:
        return False
    if spec.n == 1:
        return True
    return associated and index_is_prime_or_twice_odd_prime(spec.n)


def classify_order(spec: OrderSpec) -> ClassificationRecord:
    F = make_field(spec.d)
    U = fundamental_unit(F)
    C = class_number(F, U)
    m = min_power(F, U, spec.n)
    L = l_value(spec.n, spec.d)
    ip = is_ideal_preserving(spec)
    la = m == L
    assoc = ip and la
    return ClassificationRecord(
        d=spec.d,
        n=spec.n,
        D=F.D,
        m=m,
        L=L,
        ideal_preserving=ip,
        locally_associated=la,
        associated=assoc,
        h_maximal=C.h,
        h_order=order_class_number(spec, m, L, C.h),
        hfd=is_hfd(spec, assoc, C.h),
    )
