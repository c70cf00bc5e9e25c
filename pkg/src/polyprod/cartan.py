"""Poincare series of polyhedral products via the Cartan-type expansion.

For a simplicial complex K on [m] and one wedge-decomposable model per
vertex (common/cokernel/kernel series, see pairs.py), the reduced series
of the smash polyhedral product is the double sum

    smash(K) = sum over I <= [m], sum over faces sigma of K_I of
        join_factor(lk_sigma(K_I))
        * prod_{i in sigma} cokernel_i * prod_{i in I - sigma} kernel_i
        * prod_{j in [m] - I} common_j

where join_factor(L) is t * (reduced series of |L|), with the convention
that the empty complex contributes 1.  Each (I, sigma) term is one wedge
summand of the decomposition; the engine exposes the structured list as
well as the total.

The unreduced series of the full polyhedral product follows from the
stable splitting over full subcomplexes:

    product(K) = 1 + sum over nonempty J <= [m] of smash(K_J).

Ghost vertices need no special cases: a ghost inside I always sits in
I - sigma (kernel factor), a ghost outside I contributes its common
factor, and restriction keeps labels so the models stay aligned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .linalg import Field
from .pairs import WedgeModel
from .series import GradedSeries, from_betti, prod_series
from .simplicial import (
    DEFAULT_MAX_VERTICES,
    SimplicialComplex,
    check_vertex_guard,
    labels_of,
    mask_of,
    submasks_ascending,
)


@dataclass(frozen=True)
class WedgeSummand:
    """One (I, sigma) term of the wedge decomposition.

    series = join_series * block_series * outside_series, where
    join_series covers the link, block_series the cokernel/kernel smash
    over I, and outside_series the common factors over [m] - I.
    """

    subset: tuple[int, ...]
    face: tuple[int, ...]
    link: SimplicialComplex
    join_series: GradedSeries
    block_series: GradedSeries
    outside_series: GradedSeries
    series: GradedSeries

    def to_json(self) -> dict:
        return {
            "I": list(self.subset),
            "sigma": list(self.face),
            "series": self.series.to_json(),
        }


def _check_models(K: SimplicialComplex, models: Mapping[int, WedgeModel]) -> None:
    missing = [v for v in K.vertex_labels if v not in models]
    if missing:
        raise ValueError(f"no wedge model for vertex label(s) {missing}")
    for v, model in models.items():
        if not isinstance(model, WedgeModel):
            raise ValueError(f"model for vertex {v} is not a WedgeModel")


def smash_block_series(
    subset: tuple[int, ...] | frozenset[int],
    face: tuple[int, ...] | frozenset[int],
    models: Mapping[int, WedgeModel],
) -> GradedSeries:
    """Series of the smash block over I: cokernel on sigma, kernel on I - sigma.

    The empty I gives the series 1 (the block degenerates to the sphere S^0).
    """
    iset = set(subset)
    sset = set(face)
    if not sset <= iset:
        raise ValueError(f"face {sorted(sset)} is not contained in subset {sorted(iset)}")
    missing = sorted(i for i in iset if i not in models)
    if missing:
        raise ValueError(f"no wedge model for vertex label(s) {missing}")
    return prod_series(
        models[i].cokernel if i in sset else models[i].kernel for i in sorted(iset)
    )


def _block_series_masks(
    imask: int, smask: int, models: Mapping[int, WedgeModel]
) -> GradedSeries:
    return prod_series(
        models[i].cokernel if (1 << (i - 1)) & smask else models[i].kernel
        for i in labels_of(imask)
    )


def join_factor(link: SimplicialComplex, field: Field) -> GradedSeries:
    """t * (reduced series of |link|), with the empty complex giving 1.

    The join of a space with the empty space is the space itself; the
    shift by one degree accounts for the join suspension in all other
    cases, and the degree balances exactly because the empty complex has
    its one reduced dimension in degree -1.
    """
    if link.is_empty_complex():
        return GradedSeries.one()
    return from_betti(link.reduced_betti(field)).shift(1)


def _summand_masks(
    K: SimplicialComplex,
    imask: int,
    smask: int,
    models: Mapping[int, WedgeModel],
    field: Field,
) -> WedgeSummand:
    sub = K.restrict_mask(imask)
    link = sub.link_mask(smask)  # raises if sigma is not a face of K_I
    join = join_factor(link, field)
    block = _block_series_masks(imask, smask, models)
    outside = prod_series(models[j].common for j in labels_of(K.universe & ~imask))
    return WedgeSummand(
        subset=labels_of(imask),
        face=labels_of(smask),
        link=link,
        join_series=join,
        block_series=block,
        outside_series=outside,
        series=join * block * outside,
    )


def summand(
    K: SimplicialComplex,
    subset: tuple[int, ...] | frozenset[int],
    face: tuple[int, ...] | frozenset[int],
    models: Mapping[int, WedgeModel],
    field: Field,
) -> WedgeSummand:
    """The single wedge summand indexed by (I, sigma), sigma a face of K_I."""
    _check_models(K, models)
    imask = mask_of(subset, K.universe)
    smask = mask_of(face, K.universe)
    if smask & ~imask:
        raise ValueError(
            f"face {labels_of(smask)} is not contained in subset {labels_of(imask)}"
        )
    return _summand_masks(K, imask, smask, models, field)


def wedge_summands(
    K: SimplicialComplex,
    models: Mapping[int, WedgeModel],
    field: Field,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> list[WedgeSummand]:
    """All wedge summands, I in ascending bitmask order, sigma in length-lex
    order within K_I.  Their series sum to smash_series(K)."""
    _check_models(K, models)
    check_vertex_guard(K.n_vertices, max_vertices)
    out: list[WedgeSummand] = []
    for imask in submasks_ascending(K.universe):
        sub = K.restrict_mask(imask)
        for smask in sub.ordered_face_masks():
            out.append(_summand_masks(K, imask, smask, models, field))
    return out


def smash_series(
    K: SimplicialComplex,
    models: Mapping[int, WedgeModel],
    field: Field,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> GradedSeries:
    """Reduced Poincare series of the smash polyhedral product of K with
    the given per-vertex models."""
    _check_models(K, models)
    check_vertex_guard(K.n_vertices, max_vertices)
    total = GradedSeries.zero()
    for imask in submasks_ascending(K.universe):
        sub = K.restrict_mask(imask)
        outside = prod_series(models[j].common for j in labels_of(K.universe & ~imask))
        if outside.is_zero():
            continue
        for smask in sub.face_masks:
            link = sub.link_mask(smask)
            term = join_factor(link, field) * _block_series_masks(imask, smask, models)
            total = total + term * outside
    return total


def product_series(
    K: SimplicialComplex,
    models: Mapping[int, WedgeModel],
    field: Field,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> GradedSeries:
    """Unreduced Poincare series of the full polyhedral product.

    Stable splitting over full subcomplexes; the empty J contributes the
    constant 1 (the basepoint component's S^0)."""
    _check_models(K, models)
    check_vertex_guard(K.n_vertices, max_vertices)
    total = GradedSeries.one()
    for jmask in submasks_ascending(K.universe):
        if jmask == 0:
            continue
        total = total + smash_series(
            K.restrict_mask(jmask), models, field, max_vertices
        )
    return total


def trivial_kernel_series(
    K: SimplicialComplex,
    models: Mapping[int, WedgeModel],
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> GradedSeries:
    """Fast path for models whose kernel series are all zero.

    With no kernel classes, the smash block over I vanishes unless
    sigma = I (every vertex of I - sigma contributes the zero kernel
    series), and sigma = I is a face of K_I exactly when I is a face of
    K.  The double sum therefore collapses to faces of K, with link
    factor 1, and needs no homology at all:

        sum over faces F of K of
            prod_{i in F} cokernel_i * prod_{j not in F} common_j

    Subsets I that are not faces only ever contribute zero terms, so they
    are skipped rather than evaluated.  Agreement with the full engine is
    covered by the property suite.
    """
    _check_models(K, models)
    check_vertex_guard(K.n_vertices, max_vertices)
    bad = [v for v in K.vertex_labels if not models[v].kernel.is_zero()]
    if bad:
        raise ValueError(
            f"trivial_kernel_series requires zero kernel series; vertex "
            f"label(s) {bad} have nonzero kernels"
        )
    total = GradedSeries.zero()
    for fmask in K.face_masks:
        inside = prod_series(models[i].cokernel for i in labels_of(fmask))
        outside = prod_series(
            models[j].common for j in labels_of(K.universe & ~fmask)
        )
        total = total + inside * outside
    return total
