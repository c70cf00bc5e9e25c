"""Chain-level oracle for polyhedral products.

Everything the Cartan engine computes by formula is recomputed here from
first principles: each vertex gets an explicit cellular chain model of its
pair (X, A), the polyhedral product is realized as the subcomplex of the
tensor product spanned by basis tensors whose "outside A" support is a
face of K, and homology dimensions come from boundary-matrix ranks over
the field.  The smash variant drops basepoint cells from every factor and
deletes boundary terms that land on a basepoint (the collapsed wedge
axes).

Cell models are honest pairs: a_cells is a boundary-closed subset of the
cells containing the basepoint 0-cell, so A -> X is a cellular inclusion.
Models where that fails are rejected at load, not interpreted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .linalg import RATIONALS, Field, left_kernel_basis, matrix_rank
from .pairs import PairHomology
from .series import GradedSeries
from .simplicial import DEFAULT_MAX_VERTICES, SimplicialComplex, check_vertex_guard, labels_of


@dataclass(frozen=True)
class CellPair:
    """A finite pointed CW pair as cellular chain data.

    cells: dimension -> cell names; boundary: dimension q -> integer matrix
    (row i = boundary of the i-th q-cell, column j = coefficient on the
    j-th (q-1)-cell; omitted matrices are zero); basepoint: a 0-cell in
    a_cells; a_cells: the subcomplex A.
    """

    cells: Mapping[int, Sequence[str]]
    boundary: Mapping[int, Sequence[Sequence[int]]]
    basepoint: str
    a_cells: frozenset[str]

    def __post_init__(self) -> None:
        cells: dict[int, tuple[str, ...]] = {}
        seen: set[str] = set()
        for q, names in self.cells.items():
            if not isinstance(q, int) or isinstance(q, bool) or q < 0:
                raise ValueError(f"cell dimension must be an int >= 0, got {q!r}")
            names = tuple(names)
            for name in names:
                if not isinstance(name, str) or not name:
                    raise ValueError(f"cell name must be a nonempty string, got {name!r}")
                if name in seen:
                    raise ValueError(f"duplicate cell name {name!r}")
                seen.add(name)
            if names:
                cells[q] = names
        if not cells.get(0):
            raise ValueError("a cell pair needs at least one 0-cell")
        boundary: dict[int, tuple[tuple[int, ...], ...]] = {}
        for q, mat in self.boundary.items():
            q = int(q)
            rows = tuple(tuple(int(x) for x in row) for row in mat)
            if not rows or all(not any(row) for row in rows):
                continue  # zero matrices are represented by absence
            n_q = len(cells.get(q, ()))
            n_prev = len(cells.get(q - 1, ()))
            if len(rows) != n_q or any(len(r) != n_prev for r in rows):
                raise ValueError(
                    f"boundary matrix at dimension {q} must be {n_q} x {n_prev}"
                )
            boundary[q] = rows
        a_set = frozenset(self.a_cells)
        unknown = sorted(a_set - seen)
        if unknown:
            raise ValueError(f"a_cells mentions unknown cell(s) {unknown}")
        if self.basepoint not in cells.get(0, ()):
            raise ValueError(f"basepoint {self.basepoint!r} is not a 0-cell")
        if self.basepoint not in a_set:
            raise ValueError("basepoint must belong to a_cells")
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "boundary", boundary)
        object.__setattr__(self, "a_cells", a_set)
        self._validate_dd_zero()
        self._validate_a_closed()
        self._validate_connected()

    # -- validation helpers ---------------------------------------------

    def _matrix(self, q: int) -> list[list[int]]:
        """Boundary matrix at dimension q, zero-filled when absent."""
        n_q = len(self.cells.get(q, ()))
        n_prev = len(self.cells.get(q - 1, ()))
        mat = self.boundary.get(q)
        if mat is None:
            return [[0] * n_prev for _ in range(n_q)]
        return [list(r) for r in mat]

    def _validate_dd_zero(self) -> None:
        for q in self.boundary:
            if q - 1 not in self.boundary:
                continue
            upper = self.boundary[q]
            lower = self.boundary[q - 1]
            n_out = len(self.cells.get(q - 2, ()))
            for i, row in enumerate(upper):
                acc = [0] * n_out
                for j, coeff in enumerate(row):
                    if coeff:
                        for k_, low in enumerate(lower[j]):
                            acc[k_] += coeff * low
                if any(acc):
                    raise ValueError(
                        f"dd != 0 at cell {self.cells[q][i]!r} (dimension {q})"
                    )

    def _validate_a_closed(self) -> None:
        for q, mat in self.boundary.items():
            prev = self.cells.get(q - 1, ())
            for i, name in enumerate(self.cells.get(q, ())):
                if name not in self.a_cells:
                    continue
                for j, coeff in enumerate(mat[i]):
                    if coeff and prev[j] not in self.a_cells:
                        raise ValueError(
                            f"a_cells not boundary-closed: boundary of {name!r} "
                            f"hits {prev[j]!r} outside A"
                        )

    def _validate_connected(self) -> None:
        # Path-connectedness of X and of A, checked as dim H_0 = 1 over Q.
        zero_cells = self.cells[0]
        if len(zero_cells) - matrix_rank(self._matrix(1), RATIONALS) != 1:
            raise ValueError("the pair's ambient space X is not connected")
        a0 = [i for i, n in enumerate(zero_cells) if n in self.a_cells]
        a1_rows = self._a_matrix(1)
        if len(a0) - matrix_rank(a1_rows, RATIONALS) != 1:
            raise ValueError("the pair's subspace A is not connected")

    def _a_indices(self, q: int) -> list[int]:
        return [i for i, n in enumerate(self.cells.get(q, ())) if n in self.a_cells]

    def _a_matrix(self, q: int) -> list[list[int]]:
        """Boundary matrix of the subcomplex A at dimension q."""
        rows_idx = self._a_indices(q)
        cols_idx = self._a_indices(q - 1)
        full = self._matrix(q)
        return [[full[i][j] for j in cols_idx] for i in rows_idx]

    # -- queries ----------------------------------------------------------

    @property
    def max_dim(self) -> int:
        return max(self.cells)

    def dim_of(self, name: str) -> int:
        for q, names in self.cells.items():
            if name in names:
                return q
        raise KeyError(name)

    def boundary_of(self, name: str) -> tuple[tuple[str, int], ...]:
        """Boundary of one cell as (target cell, coefficient) pairs."""
        q = self.dim_of(name)
        mat = self.boundary.get(q)
        if mat is None:
            return ()
        i = self.cells[q].index(name)
        prev = self.cells.get(q - 1, ())
        return tuple(
            (prev[j], coeff) for j, coeff in enumerate(mat[i]) if coeff
        )

    def to_json(self) -> dict:
        return {
            "type": "cells",
            "cells": {str(q): list(names) for q, names in sorted(self.cells.items())},
            "boundary": {
                str(q): [list(r) for r in mat] for q, mat in sorted(self.boundary.items())
            },
            "basepoint": self.basepoint,
            "a_cells": sorted(self.a_cells),
        }


def cell_pair_from_json(obj: Mapping) -> CellPair:
    """Parse the explicit cell-model JSON or a catalog reference."""
    if "catalog" in obj:
        return _catalog_from_json(obj)
    for key in ("cells", "basepoint", "a_cells"):
        if key not in obj:
            raise ValueError(f'cell pair descriptor is missing "{key}"')
    raw_cells = obj["cells"]
    if not isinstance(raw_cells, Mapping):
        raise ValueError('"cells" must map dimensions to name lists')
    cells: dict[int, tuple[str, ...]] = {}
    for k, names in raw_cells.items():
        try:
            q = int(k)
        except (TypeError, ValueError):
            raise ValueError(f"bad cell dimension {k!r}") from None
        if not isinstance(names, (list, tuple)):
            raise ValueError(f'cell list at dimension {k} must be an array')
        cells[q] = tuple(names)
    raw_bnd = obj.get("boundary", {})
    if not isinstance(raw_bnd, Mapping):
        raise ValueError('"boundary" must map dimensions to integer matrices')
    boundary: dict[int, tuple[tuple[int, ...], ...]] = {}
    for k, mat in raw_bnd.items():
        try:
            q = int(k)
        except (TypeError, ValueError):
            raise ValueError(f"bad boundary dimension {k!r}") from None
        if not isinstance(mat, (list, tuple)):
            raise ValueError(f"boundary at dimension {k} must be a matrix")
        boundary[q] = tuple(tuple(row) for row in mat)
    a_cells = obj["a_cells"]
    if not isinstance(a_cells, (list, tuple)):
        raise ValueError('"a_cells" must be an array of cell names')
    return CellPair(
        cells=cells,
        boundary=boundary,
        basepoint=obj["basepoint"],
        a_cells=frozenset(a_cells),
    )


# -- shipped pair catalog --------------------------------------------------


def disk_circle() -> CellPair:
    """(D^2, S^1): one cell in each dimension 0..2, disk attached to the circle."""
    return CellPair(
        cells={0: ("v",), 1: ("a",), 2: ("u",)},
        boundary={2: ((1,),)},
        basepoint="v",
        a_cells=frozenset({"v", "a"}),
    )


def sphere_pair(n: int) -> CellPair:
    """(S^n, basepoint), n >= 1: one 0-cell and one n-cell."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"sphere dimension must be an integer >= 1, got {n!r}")
    return CellPair(
        cells={0: ("bp",), n: (f"s{n}",)},
        boundary={},
        basepoint="bp",
        a_cells=frozenset({"bp"}),
    )


def wedge_sphere_pair(
    common: Iterable[int], cokernel: Iterable[int], kernel: Iterable[int]
) -> CellPair:
    """A wedge-of-spheres pair realizing the given model degrees.

    X carries one sphere cell per common and cokernel degree; each kernel
    degree adds a sphere cell in A together with a cone cell in X - A
    killing it, so the kernel classes die in X while A keeps them.  All
    degrees must be >= 1.
    """
    cells: dict[int, list[str]] = {0: ["bp"]}
    boundary_entries: dict[str, str] = {}  # cap name -> killed cell name
    a_names = {"bp"}

    def add(degree: int, prefix: str, idx: int) -> str:
        if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
            raise ValueError(f"wedge model degrees must be integers >= 1, got {degree!r}")
        name = f"{prefix}{degree}_{idx}"
        cells.setdefault(degree, []).append(name)
        return name

    for idx, d in enumerate(common):
        a_names.add(add(d, "b", idx))
    for idx, d in enumerate(cokernel):
        add(d, "c", idx)
    for idx, d in enumerate(kernel):
        sphere = add(d, "e", idx)
        a_names.add(sphere)
        cap = add(d + 1, "cap", idx)
        boundary_entries[cap] = sphere
    boundary: dict[int, list[list[int]]] = {}
    for q, names in cells.items():
        if q == 0:
            continue
        prev = cells.get(q - 1, [])
        if not prev:
            continue
        rows = []
        nonzero = False
        for name in names:
            row = [0] * len(prev)
            target = boundary_entries.get(name)
            if target is not None and target in prev:
                row[prev.index(target)] = 1
                nonzero = True
            rows.append(row)
        if nonzero:
            boundary[q] = rows
    return CellPair(
        cells={q: tuple(v) for q, v in cells.items()},
        boundary={q: tuple(tuple(r) for r in mat) for q, mat in boundary.items()},
        basepoint="bp",
        a_cells=frozenset(a_names),
    )


def rp3_rp2() -> CellPair:
    """(RP^3, RP^2), one cell per dimension; boundary alternates 0 and 2.

    Over F_2 the subspace keeps classes in degrees 1 and 2 that survive to
    X; over Q both spaces lose them (the degree-2 boundary is invertible).
    """
    return CellPair(
        cells={0: ("x0",), 1: ("x1",), 2: ("x2",), 3: ("x3",)},
        boundary={2: ((2,),)},
        basepoint="x0",
        a_cells=frozenset({"x0", "x1", "x2"}),
    )


def catalog_pair(name: str, **params: object) -> CellPair:
    """Look up a shipped cell model by name."""
    if name == "disk_circle":
        _no_params(name, params)
        return disk_circle()
    if name == "rp3_rp2":
        _no_params(name, params)
        return rp3_rp2()
    if name == "sphere":
        n = params.pop("n", None)
        _no_params(name, params)
        if n is None:
            raise ValueError('catalog pair "sphere" needs a dimension "n"')
        return sphere_pair(n)  # type: ignore[arg-type]
    if name == "wedge":
        b = params.pop("b", [])
        c = params.pop("c", [])
        e = params.pop("e", [])
        _no_params(name, params)
        for lst in (b, c, e):
            if not isinstance(lst, (list, tuple)):
                raise ValueError('catalog pair "wedge" takes degree lists "b","c","e"')
        return wedge_sphere_pair(b, c, e)  # type: ignore[arg-type]
    raise ValueError(
        f"unknown catalog pair {name!r} "
        f"(available: disk_circle, sphere, wedge, rp3_rp2)"
    )


def _no_params(name: str, params: Mapping[str, object]) -> None:
    if params:
        raise ValueError(f"unexpected parameter(s) for catalog pair {name!r}: "
                         f"{sorted(params)}")


def _catalog_from_json(obj: Mapping) -> CellPair:
    params = {k: v for k, v in obj.items() if k not in ("type", "catalog")}
    return catalog_pair(obj["catalog"], **params)


# -- tensor chain complexes -------------------------------------------------


@dataclass(frozen=True)
class ChainComplexOverField:
    """A finite chain complex with a labeled basis and integer boundaries.

    boundaries[q] maps degree q to degree q-1 (rows = q-basis elements).
    Entries are integers; ranks are taken over the field.
    """

    field: Field
    basis: Mapping[int, tuple[tuple[str, ...], ...]]
    boundaries: Mapping[int, tuple[tuple[int, ...], ...]]

    def __post_init__(self) -> None:
        self.check_dd_zero()

    def check_dd_zero(self) -> None:
        for q, upper in self.boundaries.items():
            lower = self.boundaries.get(q - 1)
            if lower is None:
                continue
            n_out = len(lower[0]) if lower else 0
            for i, row in enumerate(upper):
                acc = [0] * n_out
                for j, coeff in enumerate(row):
                    if coeff:
                        low = lower[j]
                        for k_, val in enumerate(low):
                            if val:
                                acc[k_] += coeff * val
                if any(acc):
                    raise ValueError(f"dd != 0 at degree {q}, basis index {i}")

    def dims(self) -> dict[int, int]:
        return {q: len(b) for q, b in self.basis.items() if b}

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * n for q, n in self.dims().items())


def _tensor_complex(
    K: SimplicialComplex,
    pairs: Mapping[int, CellPair],
    field: Field,
    smash: bool,
    max_vertices: int,
) -> ChainComplexOverField:
    check_vertex_guard(K.n_vertices, max_vertices)
    slots = K.vertex_labels
    missing = [v for v in slots if v not in pairs]
    if missing:
        raise ValueError(f"no cell pair for vertex label(s) {missing}")
    slot_pairs = [pairs[v] for v in slots]
    slot_cells: list[list[str]] = []
    for pair in slot_pairs:
        names = [n for q in sorted(pair.cells) for n in pair.cells[q]]
        if smash:
            names = [n for n in names if n != pair.basepoint]
        slot_cells.append(names)
    dim_of = [
        {n: pair.dim_of(n) for n in names}
        for pair, names in zip(slot_pairs, slot_cells)
    ]
    in_a = [
        {n: (n in pair.a_cells) for n in names}
        for pair, names in zip(slot_pairs, slot_cells)
    ]

    basis: dict[int, list[tuple[str, ...]]] = {}
    for combo in itertools.product(*slot_cells):
        support = 0
        degree = 0
        for i, name in enumerate(combo):
            degree += dim_of[i][name]
            if not in_a[i][name]:
                support |= 1 << (slots[i] - 1)
        if support in K.face_masks:
            basis.setdefault(degree, []).append(combo)
    for elems in basis.values():
        elems.sort()
    index: dict[int, dict[tuple[str, ...], int]] = {
        q: {t: i for i, t in enumerate(elems)} for q, elems in basis.items()
    }

    boundaries: dict[int, list[list[int]]] = {}
    for q, elems in basis.items():
        if q == 0:
            continue
        prev = basis.get(q - 1, [])
        prev_index = index.get(q - 1, {})
        rows = []
        for combo in elems:
            row = [0] * len(prev)
            sign = 1
            for i, name in enumerate(combo):
                d_i = dim_of[i][name]
                if d_i > 0:
                    for target, coeff in slot_pairs[i].boundary_of(name):
                        if smash and target == slot_pairs[i].basepoint:
                            continue  # collapsed wedge axis
                        replaced = combo[:i] + (target,) + combo[i + 1:]
                        # support only shrinks (a_cells boundary-closed),
                        # so the target lives in the complex
                        row[prev_index[replaced]] += sign * coeff
                    sign *= (-1) ** d_i
            rows.append(row)
        boundaries[q] = rows

    return ChainComplexOverField(
        field=field,
        basis={q: tuple(elems) for q, elems in basis.items()},
        boundaries={q: tuple(tuple(r) for r in rows) for q, rows in boundaries.items()},
    )


def product_chain_complex(
    K: SimplicialComplex,
    pairs: Mapping[int, CellPair],
    field: Field,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> ChainComplexOverField:
    """Cellular chains of the polyhedral product: tensor basis restricted to
    combinations whose outside-A support is a face of K."""
    return _tensor_complex(K, pairs, field, smash=False, max_vertices=max_vertices)


def smash_chain_complex(
    K: SimplicialComplex,
    pairs: Mapping[int, CellPair],
    field: Field,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> ChainComplexOverField:
    """Reduced cellular chains of the smash polyhedral product: basepoint
    cells dropped from every slot, boundary terms through them deleted."""
    return _tensor_complex(K, pairs, field, smash=True, max_vertices=max_vertices)


def homology_series(
    complex_: ChainComplexOverField, reduced: bool = False
) -> GradedSeries:
    """Homology dimensions per degree as a series, by rank-nullity.

    reduced subtracts the basepoint component in degree 0 (for unreduced
    product complexes whose reduced series is wanted).
    """
    if not complex_.basis:
        if reduced:
            raise ValueError("cannot reduce an empty complex at degree 0")
        return GradedSeries.zero()
    field = complex_.field
    ranks: dict[int, int] = {}
    for q, mat in complex_.boundaries.items():
        ranks[q] = matrix_rank([list(r) for r in mat], field)
    dims: dict[int, int] = {}
    for q, elems in complex_.basis.items():
        h = len(elems) - ranks.get(q, 0) - ranks.get(q + 1, 0)
        if h:
            dims[q] = h
    if reduced:
        if dims.get(0, 0) < 1:
            raise ValueError("reduced requested but degree-0 homology is 0")
        dims[0] -= 1
        if not dims[0]:
            del dims[0]
    return GradedSeries(dims)


def pair_homology_from_cells(pair: CellPair, field: Field) -> PairHomology:
    """Reduced homology data of (X, A) and inclusion ranks over the field.

    The rank of H_q(A) -> H_q(X) is computed as
    rank(cycles of A stacked on boundaries of X) - rank(boundaries of X):
    boundaries of A are already boundaries of X, so quotienting by them
    does not change the image.
    """
    top = pair.max_dim
    x_rank = {q: matrix_rank(pair._matrix(q), field) for q in range(1, top + 2)}
    a_rank = {q: matrix_rank(pair._a_matrix(q), field) for q in range(1, top + 2)}
    x_dims: dict[int, int] = {}
    a_dims: dict[int, int] = {}
    inc_rank: dict[int, int] = {}
    for q in range(1, top + 1):
        n_x = len(pair.cells.get(q, ()))
        n_a = len(pair._a_indices(q))
        x_h = n_x - x_rank[q] - x_rank[q + 1]
        a_h = n_a - a_rank[q] - a_rank[q + 1]
        if x_h:
            x_dims[q] = x_h
        if a_h:
            a_dims[q] = a_h
        cycles_a = left_kernel_basis(pair._a_matrix(q), field)
        a_idx = pair._a_indices(q)
        embedded = []
        for vec in cycles_a:
            full = [0] * n_x
            for pos, val in zip(a_idx, vec):
                full[pos] = val
            embedded.append(full)
        bx_rows = [list(r) for r in pair.boundary.get(q + 1, ())]
        rank_b = matrix_rank(bx_rows, field) if bx_rows else 0
        stacked = embedded + bx_rows
        inc = (matrix_rank(stacked, field) - rank_b) if stacked else 0
        inc_rank[q] = inc
    return PairHomology(a_dims, x_dims, inc_rank)
