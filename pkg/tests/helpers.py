"""Shared helpers for the test suite.

Provides random generators for complexes, series, models and cell pairs,
an independent rational-elimination rank check, the exhaustive list of
complexes on three vertices, an in-process CLI runner, and the registry
of randomized property checks shared by test_properties.py and the
acceptance suite.
"""

import contextlib
import io
import random
from fractions import Fraction

from polyprod import (
    CellPair,
    Field,
    GradedSeries,
    PairHomology,
    RATIONALS,
    SimplicialComplex,
    WedgeModel,
    catalog_pair,
    left_kernel_basis,
    matrix_rank,
    model_from_series,
    new_complex,
    pair_homology_from_cells,
    product_chain_complex,
    product_series,
    smash_chain_complex,
    smash_series,
    homology_series,
    trivial_kernel_series,
    wedge_model,
    wedge_summands,
)
from polyprod.cli import main as cli_main

FIELDS = (RATIONALS, Field(2), Field(3))


def run_cli(*args: str) -> tuple[int, str, str]:
    """Run the CLI in-process; return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli_main(list(args))
    return code, out.getvalue(), err.getvalue()


# ---------------------------------------------------------------- random data

def random_complex(rng: random.Random, m: int | None = None, max_m: int = 4) -> SimplicialComplex:
    if m is None:
        m = rng.randint(1, max_m)
    gens = []
    for _ in range(rng.randint(0, m + 1)):
        size = rng.randint(1, m)
        gens.append(rng.sample(range(1, m + 1), size))
    return new_complex(m, gens)


def random_series(rng: random.Random, max_deg: int = 5, max_coeff: int = 2,
                  density: float = 0.4) -> GradedSeries:
    coeffs = {}
    for d in range(1, max_deg + 1):
        if rng.random() < density:
            coeffs[d] = rng.randint(1, max_coeff)
    return GradedSeries(coeffs)


def random_model(rng: random.Random) -> WedgeModel:
    return model_from_series(
        random_series(rng), random_series(rng), random_series(rng))


def random_models(rng: random.Random, m: int) -> dict[int, WedgeModel]:
    return {v: random_model(rng) for v in range(1, m + 1)}


def random_pair_homology(rng: random.Random) -> PairHomology:
    a = {d: rng.randint(0, 2) for d in range(1, 5) if rng.random() < 0.5}
    x = {d: rng.randint(0, 2) for d in range(1, 5) if rng.random() < 0.5}
    rank = {}
    for d in set(a) & set(x):
        cap = min(a[d], x[d])
        rank[d] = rng.randint(0, cap)
    return PairHomology(a_dims=a, x_dims=x, inc_rank=rank)


def random_cell_pair(rng: random.Random) -> CellPair:
    kind = rng.randrange(4)
    if kind == 0:
        return catalog_pair("disk_circle")
    if kind == 1:
        return catalog_pair("rp3_rp2")
    if kind == 2:
        return catalog_pair("sphere", n=rng.randint(1, 3))
    b = sorted(rng.sample(range(1, 4), rng.randint(0, 2)))
    c = sorted(rng.sample(range(1, 4), rng.randint(0, 2)))
    e = sorted(rng.sample(range(1, 4), rng.randint(0, 2)))
    return catalog_pair("wedge", b=b, c=c, e=e)


def random_matrix(rng: random.Random, max_size: int = 5, span: int = 6) -> list[list[int]]:
    nrows = rng.randint(1, max_size)
    ncols = rng.randint(1, max_size)
    return [[rng.randint(-span, span) for _ in range(ncols)] for _ in range(nrows)]


# ------------------------------------------------------- independent checkers

def fraction_rank(rows) -> int:
    """Plain Gaussian elimination over Fraction, independent of matrix_rank."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    col = 0
    ncols = len(mat[0]) if mat else 0
    while rank < len(mat) and col < ncols:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def all_complexes_on_3() -> list[SimplicialComplex]:
    """Every downward-closed nonempty face family on vertex set {1, 2, 3}."""
    out = []
    for bits in range(1 << 7):
        faces = {0}
        for i in range(7):
            if bits >> i & 1:
                faces.add(i + 1)
        closed = all(
            (mask & ~(1 << b)) in faces
            for mask in faces for b in range(3) if mask >> b & 1)
        if closed:
            out.append(SimplicialComplex(universe=7, face_masks=frozenset(faces)))
    return out


# ------------------------------------------------------------ property checks
#
# Each check consumes one randomly drawn instance.  The registry is shared
# between the per-property tests and the aggregate acceptance run.

def check_downward_closure(rng):
    K = random_complex(rng)
    faces = set(K.faces())
    assert () in faces
    for f in faces:
        for i in range(len(f)):
            assert f[:i] + f[i + 1:] in faces


def check_link_and_subcomplex_identities(rng):
    K = random_complex(rng)
    assert K.link(()) == K
    assert K.full_subcomplex(K.vertex_labels) == K
    face = rng.choice(list(K.faces()))
    L = K.link(face)
    expected = {tuple(sorted(set(g) - set(face)))
                for g in K.faces() if set(face) <= set(g)}
    assert set(L.faces()) == expected
    sub = tuple(v for v in K.vertex_labels if rng.random() < 0.5)
    KJ = K.full_subcomplex(sub)
    assert set(KJ.faces()) == {f for f in K.faces() if set(f) <= set(sub)}


def check_filtration(rng):
    K = random_complex(rng, max_m=3)
    last = (1 << K.n_vertices) - 1
    s = rng.randint(0, last)
    t = rng.randint(s, last)
    assert K.filtration(s).face_masks <= K.filtration(t).face_masks
    assert K.filtration(0).face_masks == frozenset({0})
    assert K.filtration(last) == K


def check_order_totality(rng):
    K = random_complex(rng)
    order = K.length_lex_order()
    assert sorted(order) == sorted(K.faces())
    assert len(set(order)) == len(order)
    keys = [(len(f), f) for f in order]
    assert keys == sorted(keys)


def check_cone_is_acyclic(rng):
    K = random_complex(rng, max_m=3)
    apex = K.n_vertices + 1
    gens = [tuple(f) + (apex,) for f in K.faces()]
    cone = new_complex(apex, gens)
    for field in FIELDS:
        assert cone.reduced_betti(field).dims == {}


def check_euler_formula(rng):
    K = random_complex(rng)
    betti = K.reduced_betti(RATIONALS)
    reduced_euler = sum((-1) ** q * n for q, n in betti.dims.items())
    assert reduced_euler == K.euler_characteristic() - 1


def check_euler_is_field_independent(rng):
    K = random_complex(rng, max_m=3)
    eulers = set()
    for field in FIELDS:
        betti = K.reduced_betti(field)
        eulers.add(sum((-1) ** q * n for q, n in betti.dims.items()))
    assert len(eulers) == 1


def check_series_ring_laws(rng):
    a, b, c = (random_series(rng) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    d = rng.randint(0, 4)
    assert a.shift(d) == a * GradedSeries.monomial(d)
    assert a * GradedSeries.one() == a
    assert a * GradedSeries.zero() == GradedSeries.zero()


def check_model_reconstruction(rng):
    p = random_pair_homology(rng)
    model = wedge_model(p)
    # image + kernel fills A, image + cokernel fills X
    assert model.common + model.kernel == p.a_series()
    assert model.common + model.cokernel == p.x_series()
    assert model.pair_homology() == p
    assert wedge_model(model.pair_homology()) == model


def check_summands_sum_to_series(rng):
    K = random_complex(rng, max_m=4)
    models = random_models(rng, K.n_vertices)
    parts = wedge_summands(K, models, RATIONALS)
    total = GradedSeries.zero()
    for part in parts:
        assert part.series == part.join_series * part.block_series * part.outside_series
        total += part.series
    assert total == smash_series(K, models, RATIONALS)


def check_subset_recursion(rng):
    # the subset-sum form of the smash series must agree with the direct
    # evaluation: sum over I of (series of K_I with common parts zeroed)
    # times the common factors outside I
    K = random_complex(rng, max_m=3)
    models = random_models(rng, K.n_vertices)
    field = rng.choice(FIELDS)
    zeroed = {v: WedgeModel(common=GradedSeries.zero(),
                            cokernel=mod.cokernel, kernel=mod.kernel)
              for v, mod in models.items()}
    labels = K.vertex_labels
    total = GradedSeries.zero()
    for bits in range(1 << len(labels)):
        inside = [labels[i] for i in range(len(labels)) if bits >> i & 1]
        KI = K.full_subcomplex(inside)
        inner = smash_series(KI, {v: zeroed[v] for v in inside}, field)
        outside = GradedSeries.one()
        for v in labels:
            if v not in inside:
                outside *= models[v].common
        total += inner * outside
    assert total == smash_series(K, models, field)


def check_trivial_kernel_fast_path(rng):
    K = random_complex(rng, max_m=4)
    models = {}
    for v in range(1, K.n_vertices + 1):
        models[v] = model_from_series(
            random_series(rng), random_series(rng), GradedSeries.zero())
    field = rng.choice(FIELDS)
    assert trivial_kernel_series(K, models) == smash_series(K, models, field)


def check_full_simplex_factorizes(rng):
    m = rng.randint(1, 4)
    K = new_complex(m, [list(range(1, m + 1))])
    models = random_models(rng, m)
    pp = GradedSeries.one()
    smash = GradedSeries.one()
    for v in range(1, m + 1):
        factor = models[v].common + models[v].cokernel
        pp *= GradedSeries.one() + factor
        smash *= factor
    field = rng.choice(FIELDS)
    assert product_series(K, models, field) == pp
    assert smash_series(K, models, field) == smash


def check_empty_complex_smash(rng):
    # only the empty face: every subset contributes its kernels inside,
    # commons outside, so the series is the product of (common + kernel)
    m = rng.randint(1, 4)
    K = new_complex(m, [])
    models = random_models(rng, m)
    expected = GradedSeries.one()
    for v in range(1, m + 1):
        expected *= models[v].common + models[v].kernel
    assert smash_series(K, models, RATIONALS) == expected


def check_tensor_boundary_squares_to_zero(rng):
    K = random_complex(rng, max_m=3)
    pairs = {v: random_cell_pair(rng) for v in range(1, K.n_vertices + 1)}
    field = rng.choice(FIELDS)
    for builder in (product_chain_complex, smash_chain_complex):
        cx = builder(K, pairs, field)
        cx.check_dd_zero()
    unreduced = homology_series(product_chain_complex(K, pairs, field))
    assert unreduced.coefficient(0) == 1


def check_engine_matches_oracle(rng):
    K = random_complex(rng, max_m=3)
    pairs = {v: random_cell_pair(rng) for v in range(1, K.n_vertices + 1)}
    field = rng.choice(FIELDS)
    models = {v: wedge_model(pair_homology_from_cells(p, field))
              for v, p in pairs.items()}
    # the smash complex drops basepoints, so its homology is already reduced
    oracle_smash = homology_series(smash_chain_complex(K, pairs, field))
    oracle_pp = homology_series(product_chain_complex(K, pairs, field))
    assert smash_series(K, models, field) == oracle_smash
    assert product_series(K, models, field) == oracle_pp


def check_euler_characteristic_agreement(rng):
    K = random_complex(rng, max_m=3)
    pairs = {v: random_cell_pair(rng) for v in range(1, K.n_vertices + 1)}
    field = rng.choice(FIELDS)
    models = {v: wedge_model(pair_homology_from_cells(p, field))
              for v, p in pairs.items()}
    # rank-nullity: cells and homology share an Euler characteristic, and
    # the smash complex has no basepoint cell to correct for
    cx = smash_chain_complex(K, pairs, field)
    assert cx.euler_characteristic() == smash_series(K, models, field).euler()
    pcx = product_chain_complex(K, pairs, field)
    assert pcx.euler_characteristic() == product_series(K, models, field).euler()


def check_rank_and_kernel(rng):
    rows = random_matrix(rng)
    field = rng.choice(FIELDS)
    rank = matrix_rank(rows, field)
    if field.char == 0:
        assert rank == fraction_rank(rows)
    kernel = left_kernel_basis(rows, field)
    assert len(kernel) == len(rows) - rank
    ncols = len(rows[0])
    for vec in kernel:
        for j in range(ncols):
            total = sum(vec[i] * rows[i][j] for i in range(len(rows)))
            if field.char:
                assert total % field.char == 0
            else:
                assert total == 0


def check_wedge_catalog_model(rng):
    b = sorted(rng.sample(range(1, 5), rng.randint(0, 2)))
    c = sorted(rng.sample(range(1, 5), rng.randint(0, 2)))
    e = sorted(rng.sample(range(1, 5), rng.randint(0, 2)))
    pair = catalog_pair("wedge", b=b, c=c, e=e)
    field = rng.choice(FIELDS)
    model = wedge_model(pair_homology_from_cells(pair, field))

    def series_of(degs):
        out = GradedSeries.zero()
        for d in degs:
            out += GradedSeries.monomial(d)
        return out

    assert model.common == series_of(b)
    assert model.cokernel == series_of(c)
    assert model.kernel == series_of(e)


PROPERTY_CHECKS = [
    ("downward_closure", check_downward_closure),
    ("link_and_subcomplex_identities", check_link_and_subcomplex_identities),
    ("filtration", check_filtration),
    ("order_totality", check_order_totality),
    ("cone_is_acyclic", check_cone_is_acyclic),
    ("euler_formula", check_euler_formula),
    ("euler_is_field_independent", check_euler_is_field_independent),
    ("series_ring_laws", check_series_ring_laws),
    ("model_reconstruction", check_model_reconstruction),
    ("summands_sum_to_series", check_summands_sum_to_series),
    ("subset_recursion", check_subset_recursion),
    ("trivial_kernel_fast_path", check_trivial_kernel_fast_path),
    ("full_simplex_factorizes", check_full_simplex_factorizes),
    ("empty_complex_smash", check_empty_complex_smash),
    ("tensor_boundary_squares_to_zero", check_tensor_boundary_squares_to_zero),
    ("engine_matches_oracle", check_engine_matches_oracle),
    ("euler_characteristic_agreement", check_euler_characteristic_agreement),
    ("rank_and_kernel", check_rank_and_kernel),
    ("wedge_catalog_model", check_wedge_catalog_model),
]


def run_property_suite(seed: int, total: int) -> int:
    """Round-robin the property checks until `total` instances have run."""
    rng = random.Random(seed)
    ran = 0
    idx = 0
    while ran < total:
        name, check = PROPERTY_CHECKS[idx % len(PROPERTY_CHECKS)]
        try:
            check(rng)
        except AssertionError as exc:
            raise AssertionError(f"property {name} failed on instance {ran}: {exc}")
        ran += 1
        idx += 1
    return ran
