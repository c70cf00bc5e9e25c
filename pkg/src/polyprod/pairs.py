"""Homology data of a CW pair (X, A) over a field, and its reduction to a
wedge-decomposable model.

A pointed pair of path-connected finite complexes is described, per
degree q >= 1, by dim H~_q(A), dim H~_q(X), and the rank of the map
induced by the inclusion A -> X.  Over a field that data splits the pair,
up to homology, into three wedge summands:

    common   = image of the inclusion (lives in both X and A),
    cokernel = classes of X not hit by A,
    kernel   = classes of A that die in X.

The model's subspace is (common v kernel), the ambient space is
(common v cokernel), with the kernel part mapping trivially; this is all
the Cartan engine needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .series import GradedSeries


def _parse_int_map(raw: object, what: str) -> dict[int, int]:
    """Parse a JSON {degree: count} mapping, keeping explicit zeros."""
    if not isinstance(raw, Mapping):
        raise ValueError(f"{what} must be an object, got {type(raw).__name__}")
    out: dict[int, int] = {}
    for k, v in raw.items():
        try:
            q = int(k)
        except (TypeError, ValueError):
            raise ValueError(f"{what}: bad degree {k!r}") from None
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise ValueError(f"{what}: bad count {v!r} at degree {k}")
        try:
            d = int(v)
        except ValueError:
            raise ValueError(f"{what}: bad count {v!r} at degree {k}") from None
        if q in out:
            raise ValueError(f"{what}: duplicate degree {q}")
        out[q] = d
    return out


def _clean_dims(raw: Mapping[int, int], what: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for q, d in raw.items():
        if not isinstance(q, int) or isinstance(q, bool):
            raise ValueError(f"{what}: degree must be an int, got {q!r}")
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise ValueError(f"{what}: dimension at degree {q} must be an int >= 0, got {d!r}")
        if d == 0:
            continue
        if q < 1:
            raise ValueError(
                f"{what}: degree {q} is < 1; reduced homology of a path-connected "
                f"space is supported in degrees >= 1"
            )
        out[q] = d
    return out


@dataclass(frozen=True)
class PairHomology:
    """Per-degree reduced homology dims of (X, A) and the inclusion ranks.

    inc_rank is mandatory wherever both spaces have homology: a missing
    rank is an error, never assumed maximal.
    """

    a_dims: Mapping[int, int]
    x_dims: Mapping[int, int]
    inc_rank: Mapping[int, int]

    def __post_init__(self) -> None:
        a = _clean_dims(self.a_dims, "a_dims")
        x = _clean_dims(self.x_dims, "x_dims")
        raw_rank = dict(self.inc_rank)
        rank: dict[int, int] = {}
        for q, r in raw_rank.items():
            if not isinstance(q, int) or isinstance(q, bool):
                raise ValueError(f"inc_rank: degree must be an int, got {q!r}")
            if not isinstance(r, int) or isinstance(r, bool) or r < 0:
                raise ValueError(f"inc_rank at degree {q} must be an int >= 0, got {r!r}")
            cap = min(a.get(q, 0), x.get(q, 0))
            if r > cap:
                raise ValueError(
                    f"inc_rank at degree {q} is {r}, exceeding "
                    f"min(a_dims, x_dims) = {cap}"
                )
            if r:
                rank[q] = r
        for q in set(a) & set(x):
            if q not in raw_rank:
                raise ValueError(
                    f"inc_rank missing at degree {q} where both a_dims and "
                    f"x_dims are nonzero; the rank is required data"
                )
        object.__setattr__(self, "a_dims", a)
        object.__setattr__(self, "x_dims", x)
        object.__setattr__(self, "inc_rank", rank)

    def a_series(self) -> GradedSeries:
        return GradedSeries(dict(self.a_dims))

    def x_series(self) -> GradedSeries:
        return GradedSeries(dict(self.x_dims))

    @classmethod
    def from_json(cls, obj: Mapping) -> "PairHomology":
        for key in ("a_dims", "x_dims", "inc_rank"):
            if key not in obj:
                raise ValueError(f'homology pair descriptor is missing "{key}"')
        # Parsed by hand rather than through GradedSeries: an explicit rank
        # of 0 is meaningful (it satisfies the mandatory-rank rule) and must
        # not be normalized away before validation sees it.
        return cls(
            _parse_int_map(obj["a_dims"], "a_dims"),
            _parse_int_map(obj["x_dims"], "x_dims"),
            _parse_int_map(obj["inc_rank"], "inc_rank"),
        )


@dataclass(frozen=True)
class WedgeModel:
    """Reduced series of the three wedge summands of a decomposable pair."""

    common: GradedSeries
    cokernel: GradedSeries
    kernel: GradedSeries

    def __post_init__(self) -> None:
        for name in ("common", "cokernel", "kernel"):
            s: GradedSeries = getattr(self, name)
            if not isinstance(s, GradedSeries):
                raise ValueError(f"{name} must be a GradedSeries")
            if s.coefficient(0):
                raise ValueError(
                    f"{name} series has a degree-0 term; wedge summands of "
                    f"path-connected spaces have support in degrees >= 1"
                )

    def pair_homology(self) -> PairHomology:
        """The homology data this model realizes (for round-trip checks)."""
        a = self.common + self.kernel
        x = self.common + self.cokernel
        # rank entries are mandatory wherever both spaces have homology,
        # including explicit zeros, so spell them all out
        rank = {q: self.common.coefficient(q)
                for q in set(a.degrees()) & set(x.degrees())}
        return PairHomology(dict(a.items()), dict(x.items()), rank)

    def x_series(self) -> GradedSeries:
        return self.common + self.cokernel

    def a_series(self) -> GradedSeries:
        return self.common + self.kernel

    @classmethod
    def from_json(cls, obj: Mapping) -> "WedgeModel":
        for key in ("b", "c", "e"):
            if key not in obj:
                raise ValueError(f'model pair descriptor is missing "{key}"')
        return cls(
            common=GradedSeries.from_coeff_map(obj["b"]),
            cokernel=GradedSeries.from_coeff_map(obj["c"]),
            kernel=GradedSeries.from_coeff_map(obj["e"]),
        )

    def to_json(self) -> dict:
        return {
            "type": "model",
            "b": self.common.to_json()["coeffs"],
            "c": self.cokernel.to_json()["coeffs"],
            "e": self.kernel.to_json()["coeffs"],
        }


def wedge_model(p: PairHomology) -> WedgeModel:
    """Split pair homology into (common, cokernel, kernel) series.

    Per degree: common = rank of the inclusion, kernel = a - rank,
    cokernel = x - rank.  Reconstruction identities (common + cokernel =
    x-series, common + kernel = a-series) hold by construction.
    """
    degrees = set(p.a_dims) | set(p.x_dims)
    b: dict[int, int] = {}
    c: dict[int, int] = {}
    e: dict[int, int] = {}
    for q in degrees:
        r = p.inc_rank.get(q, 0)
        b[q] = r
        e[q] = p.a_dims.get(q, 0) - r
        c[q] = p.x_dims.get(q, 0) - r
    return WedgeModel(GradedSeries(b), GradedSeries(c), GradedSeries(e))


def model_from_series(
    b: GradedSeries, c: GradedSeries, e: GradedSeries
) -> WedgeModel:
    """Directly specify a wedge-decomposable model; degree-0 terms rejected."""
    return WedgeModel(common=b, cokernel=c, kernel=e)
