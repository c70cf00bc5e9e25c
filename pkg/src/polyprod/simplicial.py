"""Simplicial complexes on a labeled vertex set.

Faces are stored as bitmasks: bit (v-1) set means vertex label v is in the
face.  A complex also carries a universe mask, the set of vertex labels it
lives on; labels survive restriction unchanged, so faces of a full
subcomplex or a link compare directly against faces of the parent.  A
label in the universe whose singleton is not a face is a ghost vertex;
ghosts are legal and matter (they contribute subspace factors to
polyhedral products) but are invisible to geometric realization.

The empty complex {_} (only the empty face; realization is the empty
space) is legal and distinct from "no complex"; its reduced homology is
one dimension in degree -1, which downstream code relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .linalg import Field, matrix_rank

# Subset enumerations are 2^n in the universe size n; refuse past this
# unless the caller raises the limit explicitly.
DEFAULT_MAX_VERTICES = 20


def check_vertex_guard(n_vertices: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> None:
    if n_vertices > max_vertices:
        raise ValueError(
            f"complex has {n_vertices} vertices; subset enumeration is capped at "
            f"{max_vertices} (raise max_vertices / --max-m to override)"
        )


def mask_of(labels: Iterable[int], universe: int) -> int:
    """Bitmask of a collection of vertex labels, validated against universe."""
    mask = 0
    for v in labels:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"vertex label must be a positive integer, got {v!r}")
        bit = 1 << (v - 1)
        if not universe & bit:
            raise ValueError(f"vertex label {v} is outside the vertex set")
        mask |= bit
    return mask


def labels_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def submasks_ascending(mask: int) -> Iterator[int]:
    """All submasks of mask in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex, downward closed, with the empty face.

    universe: bitmask of available vertex labels (ghosts included).
    face_masks: frozenset of face bitmasks; 0 (the empty face) is always in.
    """

    universe: int
    face_masks: frozenset[int]

    def __post_init__(self) -> None:
        if self.universe < 0:
            raise ValueError("universe mask must be nonnegative")
        if 0 not in self.face_masks:
            raise ValueError("a simplicial complex must contain the empty face")
        for f in self.face_masks:
            if f & ~self.universe:
                raise ValueError(
                    f"face {labels_of(f)} uses labels outside the vertex set"
                )
            # downward closure: removing any one vertex stays inside
            rest = f
            while rest:
                bit = rest & -rest
                if (f ^ bit) not in self.face_masks:
                    raise ValueError(
                        f"not downward closed: {labels_of(f ^ bit)} missing "
                        f"under {labels_of(f)}"
                    )
                rest ^= bit

    # -- basic queries -------------------------------------------------

    @property
    def vertex_labels(self) -> tuple[int, ...]:
        """All labels of the vertex set, ghosts included."""
        return labels_of(self.universe)

    @property
    def n_vertices(self) -> int:
        return bin(self.universe).count("1")

    def faces(self) -> list[tuple[int, ...]]:
        """All faces as sorted label tuples, in length-lex order."""
        return [labels_of(f) for f in self.ordered_face_masks()]

    def has_face(self, labels: Iterable[int]) -> bool:
        try:
            return mask_of(labels, self.universe) in self.face_masks
        except ValueError:
            return False

    def is_empty_complex(self) -> bool:
        """True when the only face is the empty face (realization = empty space)."""
        return len(self.face_masks) == 1

    def dim(self) -> int:
        """Dimension of the complex; -1 for the empty complex."""
        return max(bin(f).count("1") for f in self.face_masks) - 1

    # -- constructions of the theory ------------------------------------

    def full_subcomplex(self, labels: Iterable[int]) -> "SimplicialComplex":
        """Faces contained in the given label set; labels are kept, not renumbered."""
        return self.restrict_mask(mask_of(labels, self.universe))

    def restrict_mask(self, jmask: int) -> "SimplicialComplex":
        return SimplicialComplex(
            jmask, frozenset(f for f in self.face_masks if not f & ~jmask)
        )

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        """Link of a face: {tau : tau cap sigma = empty, tau cup sigma in K}."""
        return self.link_mask(mask_of(face, self.universe))

    def link_mask(self, smask: int) -> "SimplicialComplex":
        if smask not in self.face_masks:
            raise ValueError(f"{labels_of(smask)} is not a face of the complex")
        return SimplicialComplex(
            self.universe & ~smask,
            frozenset(f & ~smask for f in self.face_masks if f & smask == smask),
        )

    # -- length-lex order and filtration --------------------------------

    def ordered_face_masks(self) -> list[int]:
        """Face masks sorted by length, ties left-lexicographically by labels."""
        return sorted(self.face_masks, key=lambda f: (bin(f).count("1"), labels_of(f)))

    def length_lex_order(self) -> list[tuple[int, ...]]:
        """The total order on faces: shorter first, then lexicographic.

        >>> K = new_complex(3, [[1, 3], [2, 3]])
        >>> K.length_lex_order()
        [(), (1,), (2,), (3,), (1, 3), (2, 3)]
        """
        return self.faces()

    def face_rank_in_simplex(self, face: Iterable[int]) -> int:
        """Position of a face in the length-lex order of the full simplex
        on this complex's vertex set."""
        return self._simplex_rank(mask_of(face, self.universe))

    def _simplex_rank(self, fmask: int) -> int:
        # position = (count of shorter faces) + (lex rank among same-size faces)
        verts = self.vertex_labels
        pos = {v: i + 1 for i, v in enumerate(verts)}  # relabel to 1..n
        n = len(verts)
        members = [pos[v] for v in labels_of(fmask)]
        k = len(members)
        rank = sum(math.comb(n, j) for j in range(k))
        prev = 0
        for i, a in enumerate(members):
            for v in range(prev + 1, a):
                rank += math.comb(n - v, k - i - 1)
            prev = a
        return rank

    def filtration(self, t: int) -> "SimplicialComplex":
        """Faces whose position in the full simplex's length-lex order is <= t.

        t = 0 keeps only the empty face; the largest legal t (2^n - 1 for n
        vertices) returns the whole complex.
        """
        last = (1 << self.n_vertices) - 1
        if not 0 <= t <= last:
            raise ValueError(f"filtration index {t} out of range [0, {last}]")
        return SimplicialComplex(
            self.universe,
            frozenset(f for f in self.face_masks if self._simplex_rank(f) <= t),
        )

    # -- homology --------------------------------------------------------

    def reduced_betti(self, field: Field) -> "BettiVector":
        """Reduced Betti numbers of the realization over the field.

        Ghost vertices are ignored (they carry no simplices).  The empty
        complex gets one dimension in degree -1: the augmented chain
        complex keeps the empty face as a generator, which realizes the
        reduced homology of the empty space.
        """
        return _reduced_betti_cached(self, field)

    def euler_characteristic(self) -> int:
        """Unreduced Euler characteristic: sum over nonempty faces of (-1)^dim."""
        return sum(-(-1) ** (bin(f).count("1")) for f in self.face_masks if f)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers over a field, finitely supported, degrees >= -1."""

    field: Field
    entries: tuple[tuple[int, int], ...]  # (degree, dim), ascending, no zeros

    @property
    def dims(self) -> dict[int, int]:
        return dict(self.entries)

    def get(self, q: int) -> int:
        return dict(self.entries).get(q, 0)

    def reduced_euler(self) -> int:
        return sum(d * (-1) ** q for q, d in self.entries)


def new_complex(m: int, generators: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of a generator list on vertex set {1..m}.

    >>> sorted(new_complex(3, [[1, 2], [1, 3]]).faces())
    [(), (1,), (1, 2), (1, 3), (2,), (3,)]
    >>> new_complex(1, []).faces()
    [()]
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"vertex count must be a positive integer, got {m!r}")
    universe = (1 << m) - 1
    faces = {0}
    for gen in generators:
        gmask = mask_of(gen, universe)
        for sub in submasks_ascending(gmask):
            faces.add(sub)
    return SimplicialComplex(universe, frozenset(faces))


def _alternating_boundary_rows(
    q_faces: list[int], prev_index: dict[int, int], n_prev: int
) -> list[list[int]]:
    # Row per q-face: alternating sum over dropping the i-th smallest vertex.
    rows = []
    for f in q_faces:
        row = [0] * n_prev
        for i, v in enumerate(labels_of(f)):
            sub = f ^ (1 << (v - 1))
            row[prev_index[sub]] += (-1) ** i
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def _reduced_betti_cached(K: SimplicialComplex, field: Field) -> BettiVector:
    # Augmented simplicial chain complex: C_{-1} is spanned by the empty
    # face, and the boundary of a vertex is the empty face.  This makes
    # reduced homology (including the empty complex) one uniform rank
    # computation.
    by_dim: dict[int, list[int]] = {}
    for f in K.face_masks:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort(key=lambda f: labels_of(f))
    top = max(by_dim)
    ranks: dict[int, int] = {}  # rank of boundary C_q -> C_{q-1}
    for q in range(0, top + 1):
        q_faces = by_dim.get(q, [])
        prev_faces = by_dim.get(q - 1, [])
        if not q_faces or not prev_faces:
            ranks[q] = 0
            continue
        prev_index = {f: i for i, f in enumerate(prev_faces)}
        rows = _alternating_boundary_rows(q_faces, prev_index, len(prev_faces))
        ranks[q] = matrix_rank(rows, field)
    dims: dict[int, int] = {}
    for q in range(-1, top + 1):
        n_q = len(by_dim.get(q, []))
        b = n_q - ranks.get(q, 0) - ranks.get(q + 1, 0)
        if b:
            dims[q] = b
    return BettiVector(field, tuple(sorted(dims.items())))
