"""Exact rational arithmetic extended with a point at +infinity.

Thresholds of identically-zero data and Arnold multiplicities of smooth
points are genuinely infinite, so the value space here is Q union {+inf}
rather than floats.  Finite values are stored as ``fractions.Fraction``
(arbitrary precision, always in lowest terms with positive denominator);
infinity is an explicit variant, not a sentinel float.

Conventions, fixed once for the whole package:

* ``finite + inf == inf`` and ``inf + inf == inf``;
* ``reciprocal(0) == inf`` and ``reciprocal(inf) == 0``;
* ``0 * inf == 0`` (scaling by an empty factor wins, which is the right
  reading for scaled multiplicities).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import InvalidInputError

_INF_TOKENS = frozenset({"inf", "+inf", "infinity", "+infinity", "oo"})

RationalLike = Union["ExtRational", Fraction, int, str]


class ExtRational:
    """An exact rational or +infinity.  Immutable and totally ordered."""

    __slots__ = ("_value",)

    _value: Fraction | None  # None encodes +infinity

    def __init__(self, value: RationalLike = 0):
        if isinstance(value, ExtRational):
            object.__setattr__(self, "_value", value._value)
            return
        if isinstance(value, str):
            token = value.strip().lower()
            if token in _INF_TOKENS:
                object.__setattr__(self, "_value", None)
                return
            try:
                object.__setattr__(self, "_value", Fraction(value))
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidInputError(f"not a rational literal: {value!r}") from exc
            return
        if isinstance(value, (int, Fraction)):
            object.__setattr__(self, "_value", Fraction(value))
            return
        raise InvalidInputError(
            f"cannot build an exact rational from {type(value).__name__}"
        )

    def __setattr__(self, name, val):  # pragma: no cover - defensive
        raise AttributeError("ExtRational is immutable")

    @classmethod
    def infinity(cls) -> "ExtRational":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_value", None)
        return obj

    # -- predicates and accessors -------------------------------------

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    def as_fraction(self) -> Fraction:
        if self._value is None:
            raise InvalidInputError("value is infinite, no finite fraction exists")
        return self._value

    @property
    def numerator(self) -> int:
        return self.as_fraction().numerator

    @property
    def denominator(self) -> int:
        return self.as_fraction().denominator

    # -- arithmetic ----------------------------------------------------

    def reciprocal(self) -> "ExtRational":
        """1/x with reciprocal(0) = inf and reciprocal(inf) = 0."""
        if self._value is None:
            return ExtRational(0)
        if self._value == 0:
            return ExtRational.infinity()
        if self._value < 0:
            raise InvalidInputError("reciprocal of a negative value is not used here")
        return ExtRational(Fraction(1) / self._value)

    def __add__(self, other: RationalLike) -> "ExtRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._value is None or other._value is None:
            return ExtRational.infinity()
        return ExtRational(self._value + other._value)

    __radd__ = __add__

    def __mul__(self, other: RationalLike) -> "ExtRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._value is None or other._value is None:
            finite = other._value if other._value is not None else self._value
            if finite is not None and finite < 0:
                raise InvalidInputError("negative multiples of infinity are undefined")
            # 0 * inf == 0 by convention; any positive multiple stays infinite.
            if finite == 0:
                return ExtRational(0)
            return ExtRational.infinity()
        return ExtRational(self._value * other._value)

    __rmul__ = __mul__

    # -- order ----------------------------------------------------------

    def _cmp_key(self) -> tuple[int, Fraction]:
        if self._value is None:
            return (1, Fraction(0))
        return (0, self._value)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp_key() < other._cmp_key()

    def __le__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._cmp_key() <= other._cmp_key()

    def __gt__(self, other) -> bool:
        result = self.__le__(other)
        return NotImplemented if result is NotImplemented else not result

    def __ge__(self, other) -> bool:
        result = self.__lt__(other)
        return NotImplemented if result is NotImplemented else not result

    def __hash__(self) -> int:
        return hash(self._value)  # None hashes fine and only equals itself

    # -- rendering -------------------------------------------------------

    def __float__(self) -> float:
        if self._value is None:
            return float("inf")
        return float(self._value)

    def __str__(self) -> str:
        if self._value is None:
            return "inf"
        return str(self._value)

    def __repr__(self) -> str:
        return f"ExtRational({str(self)!r})"


def _coerce(value) -> "ExtRational":
    if isinstance(value, ExtRational):
        return value
    if isinstance(value, (int, Fraction)):
        return ExtRational(value)
    return NotImplemented


#: Shared +infinity constant.
INFINITY = ExtRational.infinity()
