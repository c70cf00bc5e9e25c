"""Sparse Hilbert-Poincare series with exact nonnegative integer coefficients.

A GradedSeries is a polynomial in t recording homology dimensions per
degree.  Coefficients are arbitrary-precision (subset sums over 2^m terms
can overflow machine words) and the representation is sparse (degrees are
small but scattered).  Whether a given series is reduced or unreduced is a
fact about where it came from, not recorded on the value.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class GradedSeries:
    """Finitely supported map degree -> positive integer coefficient.

    >>> s = GradedSeries({4: 1}) + GradedSeries({6: 1})
    >>> str(s)
    't^4+t^6'
    >>> str(s * GradedSeries.monomial(2))
    't^6+t^8'
    >>> str(GradedSeries({0: 1, 3: 2}))
    '1+2t^3'
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        clean: dict[int, int] = {}
        for d, c in (coeffs or {}).items():
            if not isinstance(d, int) or isinstance(d, bool):
                raise ValueError(f"series degree must be an int, got {d!r}")
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"series coefficient must be an int, got {c!r}")
            if c == 0:
                continue
            if d < 0:
                raise ValueError(f"series degree must be >= 0, got {d}")
            if c < 0:
                raise ValueError(f"series coefficient must be >= 0, got {c} at t^{d}")
            clean[d] = c
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "GradedSeries":
        return cls()

    @classmethod
    def one(cls) -> "GradedSeries":
        return cls({0: 1})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "GradedSeries":
        return cls({degree: coeff})

    def coefficient(self, degree: int) -> int:
        return self._coeffs.get(degree, 0)

    def items(self) -> list[tuple[int, int]]:
        """(degree, coefficient) pairs in ascending degree."""
        return sorted(self._coeffs.items())

    def degrees(self) -> list[int]:
        return sorted(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def total(self) -> int:
        """Sum of all coefficients (total dimension)."""
        return sum(self._coeffs.values())

    def euler(self) -> int:
        """Alternating coefficient sum."""
        return sum(c if d % 2 == 0 else -c for d, c in self._coeffs.items())

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        if not isinstance(other, GradedSeries):
            return NotImplemented
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, 0) + c
        return GradedSeries(out)

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        if not isinstance(other, GradedSeries):
            return NotImplemented
        out: dict[int, int] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                d = d1 + d2
                out[d] = out.get(d, 0) + c1 * c2
        return GradedSeries(out)

    def shift(self, degree: int) -> "GradedSeries":
        """Multiply by t^degree (suspension)."""
        if degree < 0:
            raise ValueError(f"shift degree must be >= 0, got {degree}")
        return GradedSeries({d + degree: c for d, c in self._coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"GradedSeries({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in self.items():
            if d == 0:
                parts.append(str(c))
            else:
                base = "t" if d == 1 else f"t^{d}"
                parts.append(base if c == 1 else f"{c}{base}")
        return "+".join(parts)

    def to_json(self) -> dict:
        """JSON form {"coeffs": {"<degree>": "<coefficient>"}}, ascending degree."""
        return {"coeffs": {str(d): str(c) for d, c in self.items()}}

    @classmethod
    def from_json(cls, obj: object) -> "GradedSeries":
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError('series JSON must be an object with a "coeffs" key')
        return cls.from_coeff_map(obj["coeffs"])

    @classmethod
    def from_coeff_map(cls, raw: object) -> "GradedSeries":
        """Parse a {degree: coefficient} mapping with string or int entries."""
        if not isinstance(raw, Mapping):
            raise ValueError(f"coefficient map must be an object, got {type(raw).__name__}")
        coeffs: dict[int, int] = {}
        for k, v in raw.items():
            try:
                d = int(k)
            except (TypeError, ValueError):
                raise ValueError(f"bad series degree {k!r}") from None
            if isinstance(v, bool) or not isinstance(v, (int, str)):
                raise ValueError(f"bad series coefficient {v!r} at degree {k}")
            try:
                c = int(v)
            except ValueError:
                raise ValueError(f"bad series coefficient {v!r} at degree {k}") from None
            if d in coeffs:
                raise ValueError(f"duplicate series degree {d}")
            coeffs[d] = c
        return cls(coeffs)


def from_betti(betti: object) -> GradedSeries:
    """Series of a Betti vector supported in degrees >= 0.

    A nonzero entry in degree -1 (the empty space) is rejected here: that
    case is owned by the join-factor convention in the engine.
    """
    dims = getattr(betti, "dims", betti)
    if not isinstance(dims, Mapping):
        raise ValueError("from_betti expects a BettiVector or a degree->dim mapping")
    if dims.get(-1, 0):
        raise ValueError("Betti vector has support in degree -1 (empty space); "
                         "only the join-factor path may consume it")
    return GradedSeries({d: c for d, c in dims.items() if d >= 0})


def sum_series(terms: Iterable[GradedSeries]) -> GradedSeries:
    out = GradedSeries.zero()
    for s in terms:
        out = out + s
    return out


def prod_series(terms: Iterable[GradedSeries]) -> GradedSeries:
    out = GradedSeries.one()
    for s in terms:
        out = out * s
    return out
