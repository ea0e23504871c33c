"""End-to-end acceptance checks, one test per criterion (4 has extended variants).

Each test prints a PASS/FAIL line; the lines are repeated in the terminal summary.
"""

import time
from math import comb

import numpy as np
import pytest

from resolvesets.bounds import (
    bound_table,
    determining_lower_bound,
    distance_matrix,
    exact_metric_dimension,
)
from resolvesets.constructions import (
    plan_johnson_partition,
    plan_kneser_diam3,
    plan_kneser_partition,
    plan_matrix_basic,
    plan_toroidal,
)
from resolvesets.designs import (
    affine_plane,
    hadamard_design,
    hadamard_matrix,
    projective_plane,
    rank_and_det,
    steiner_triple_system,
    validate_partial_geometry,
    validate_t_design,
)
from resolvesets.graphs import GraphInstance, bfs_distance_matrix, odd_graph_distance
from resolvesets.subsets import enumerate_k_subsets, incidence_rows
from resolvesets.verify import verify_resolving

J = GraphInstance.johnson
K = GraphInstance.kneser


def resolves(g, landmarks):
    return verify_resolving(g, list(landmarks)).resolved


def test_criterion_1_distance_formulas(criterion):
    start = time.perf_counter()
    bad = []
    count = 0
    for n in range(2, 11):
        for k in range(1, n // 2 + 1):
            g = J(n, k)
            count += 1
            if not np.array_equal(distance_matrix(g), bfs_distance_matrix(g)):
                bad.append(str(g))
    for n in range(3, 13):
        for k in range(1, (n - 1) // 2 + 1):
            g = K(n, k)
            count += 1
            if not np.array_equal(distance_matrix(g), bfs_distance_matrix(g)):
                bad.append(str(g))
    for k in range(1, 6):
        g = K(2 * k + 1, k)
        vs = list(enumerate_k_subsets(g.n, k))
        formula, bfs = distance_matrix(g), bfs_distance_matrix(g)
        rule = np.array([[odd_graph_distance(k, u, w) for w in vs] for u in vs])
        count += 1
        if not (np.array_equal(rule, formula) and np.array_equal(rule, bfs)):
            bad.append(f"odd rule k={k}")
    elapsed = time.perf_counter() - start
    criterion(1, not bad and elapsed < 120, f"{count} instances, all pairs, formula == BFS ({elapsed:.1f}s) {bad or ''}")


def test_criterion_2_k2_values(criterion):
    start = time.perf_counter()
    got = {}
    for n in (6, 7, 8):
        for g in (J(n, 2), K(n, 2)):
            res = exact_metric_dimension(g, use_formula_bound=False)
            got[str(g)] = res.dimension if res.exhaustive else None
    expected = {f"{f}({n},2)": v for n, v in ((6, 4), (7, 5), (8, 6)) for f in "JK"}
    elapsed = time.perf_counter() - start
    criterion(2, got == expected and elapsed < 60, f"{got} ({elapsed:.1f}s)")


def test_criterion_3_construction_soundness(criterion):
    start = time.perf_counter()
    failures = []
    checked = 0
    for k in range(2, 6):
        for n in range(2 * k, 13):
            p = plan_johnson_partition(n, k)
            checked += 1
            if p.size != k * (n + 1) // (k + 1) or not resolves(J(n, k), p.subsets):
                failures.append(f"johnson_partition{(n, k)}")
    for n in range(5, 13):
        for k in range(2, (n - 1) // 2 + 1):
            p = plan_kneser_partition(n, k)
            formula = -(-n // (2 * k - 1)) * (comb(2 * k - 1, k) - 1)
            checked += 1
            # duplicates across the overlapping last part are dropped, so size may sit below the count
            if p.family_count != formula or p.size > formula or not resolves(K(n, k), p.subsets):
                failures.append(f"kneser_partition{(n, k)}")
    p = plan_kneser_diam3(10, 4)
    checked += 1
    if p.predicted_size != 2 * comb(6, 4) or p.size > 30 or not resolves(K(10, 4), p.subsets):
        failures.append("kneser_diam3(10,4)")
    for n in range(4, 13):
        for k in range(2, n // 2 + 1):
            if n < k + 2:
                continue
            p = plan_matrix_basic(n, k)
            checked += 1
            if p.size != n or not resolves(J(n, k), p.subsets):
                failures.append(f"matrix_basic{(n, k)}")
    elapsed = time.perf_counter() - start
    criterion(3, not failures and elapsed < 300, f"{checked} constructions verified, sizes match ({elapsed:.1f}s) {failures or ''}")


def _toroidal(criterion, side, k, budget):
    start = time.perf_counter()
    plan = plan_toroidal(side, side, k)
    n = side * side
    g = K(n, k)
    distinct = len(set(plan.subsets)) == 2 * n
    rep = verify_resolving(g, plan.subsets, budget=comb(n, k))
    elapsed = time.perf_counter() - start
    ok = distinct and rep.resolved and rep.vertices_checked == comb(n, k) and elapsed < budget
    criterion(4, ok, f"{2 * n} straight {k}-paths of C_{side} x C_{side} resolve {g}, "
                     f"{rep.vertices_checked} vertices, no collisions ({elapsed:.1f}s)")


@pytest.mark.slow
def test_criterion_4_toroidal(criterion):
    _toroidal(criterion, 10, 4, 600)


@pytest.mark.extended
@pytest.mark.parametrize("side,k", [(13, 5), (16, 6)])
def test_criterion_4_toroidal_extended(criterion, side, k):
    _toroidal(criterion, side, k, 6 * 3600)


def test_criterion_5_designs(criterion):
    start = time.perf_counter()
    fano = projective_plane(2).blocks
    had = hadamard_design(3)
    cases = {
        "Fano J(7,3)": resolves(J(7, 3), fano),
        "Fano K(7,3)": resolves(K(7, 3), fano),
        "Hadamard(11,5,2) J(11,5)": had.block_size == 5 and resolves(J(11, 5), had.blocks),
        "Hadamard(11,5,2) K(11,5)": resolves(K(11, 5), had.blocks),
        "AG(2,3) K(9,3)": affine_plane(3).n_blocks == 12 and resolves(K(9, 3), affine_plane(3).blocks),
        "STS(13) K(13,3)": steiner_triple_system(13).n_blocks == 26 and resolves(K(13, 3), steiner_triple_system(13).blocks),
        "STS(15) K(15,3)": steiner_triple_system(15).n_blocks == 35 and resolves(K(15, 3), steiner_triple_system(15).blocks),
    }
    elapsed = time.perf_counter() - start
    failed = [name for name, ok in cases.items() if not ok]
    criterion(5, not failed and elapsed < 180, f"{len(cases)} design resolving sets verified ({elapsed:.1f}s) {failed or ''}")


def test_criterion_6_projective_plane_fails(criterion):
    start = time.perf_counter()
    g = K(13, 4)
    rep = verify_resolving(g, projective_plane(3).blocks)
    shape = False
    if not rep.resolved and rep.witness:
        u, w = (set(x) for x in rep.witness)
        common = u & w
        shape = len(common) == 3 and len(u - common) == 1 and len(w - common) == 1
    elapsed = time.perf_counter() - start
    criterion(6, shape and elapsed < 120,
              f"PG(2,3) lines fail on {g}, witness {rep.witness and [str(x) for x in rep.witness]} "
              f"shares a 3-set ({elapsed:.1f}s)")


def test_criterion_7_matrix_criterion(criterion):
    start = time.perf_counter()
    failures = []
    for k in range(2, 7):
        for n in range(k + 2, 13):
            p = plan_matrix_basic(n, k)
            rank, det = rank_and_det(incidence_rows(p.subsets, n))
            if (rank, det) != (n, (-1) ** k * k):
                failures.append(f"det matrix_basic{(n, k)} = {det}")
            elif 2 * k <= n and not resolves(J(n, k), p.subsets):
                failures.append(f"matrix_basic{(n, k)} rank n but unresolved")
    _, fano_det = rank_and_det(projective_plane(2).matrix)
    if fano_det ** 2 != 576:
        failures.append(f"Fano det^2 = {fano_det ** 2}")
    designs = [projective_plane(q) for q in (2, 3, 4, 5)] + [hadamard_design(m) for m in (2, 3, 4, 5, 6)]
    for ic in designs:
        rank, _ = rank_and_det(ic.matrix)
        if rank == ic.n_points and not resolves(J(ic.n_points, ic.block_size), ic.blocks):
            failures.append(f"symmetric design on {ic.n_points} points rank n but unresolved")
        elif rank != ic.n_points:
            failures.append(f"symmetric design on {ic.n_points} points has rank {rank}")
    elapsed = time.perf_counter() - start
    criterion(7, not failures and elapsed < 60,
              f"det = (-1)^k k on 45 matrices, Fano det^2 = 576, {len(designs)} symmetric designs rank n and resolving "
              f"({elapsed:.1f}s) {failures or ''}")


SWEEP_TIMEOUT = 4.0
SWEEP_MAX_VERTICES = 5000


def _sweep(family):
    """Exact values by increasing n for each k; a series stops at its first timeout."""
    done, stopped = {}, []
    for k in range(2, 8):
        n = 2 * k if family is J else 2 * k + 1
        while comb(n, k) <= SWEEP_MAX_VERTICES:
            g = family(n, k)
            res = exact_metric_dimension(g, timeout=SWEEP_TIMEOUT, use_formula_bound=False, symmetry=True)
            if not res.exhaustive:
                stopped.append(str(g))
                break
            done[(n, k)] = res
            n += 1
    return done, stopped


def test_criterion_8_bound_consistency(criterion):
    start = time.perf_counter()
    problems = []
    solved = {}
    stopped = []
    for name, family in (("johnson", J), ("kneser", K)):
        done, halted = _sweep(family)
        solved[name] = done
        stopped += halted
        for (n, k), res in done.items():
            lower = determining_lower_bound(n, k)
            uppers = [r.value for r in bound_table(name, n, k) if r.applicable and r.direction in ("upper", "exact")]
            if lower is not None and lower > res.dimension:
                problems.append(f"{name}{(n, k)}: lower {lower} > {res.dimension}")
            if uppers and res.dimension > min(uppers):
                problems.append(f"{name}{(n, k)}: {res.dimension} > upper {min(uppers)}")
            if not resolves(family(n, k), res.basis):
                problems.append(f"{name}{(n, k)}: basis does not resolve")
    pairs = 0
    for (n, k), res in solved["johnson"].items():
        if (n, k) in solved["kneser"]:
            pairs += 1
            if res.dimension > solved["kneser"][(n, k)].dimension:
                problems.append(f"beta(J{(n, k)}) > beta(K{(n, k)})")
    conjecture = {(4, 2): 3, (6, 3): 4}
    for (n, k), beta in conjecture.items():
        res = solved["johnson"].get((n, k))
        if res is None or res.dimension != beta:
            problems.append(f"beta(J{(n, k)}) expected {beta}, got {res and res.dimension}")
    elapsed = time.perf_counter() - start
    total = sum(len(v) for v in solved.values())
    criterion(8, not problems and elapsed < 600,
              f"{total} instances solved exactly ({len(solved['johnson'])} J, {len(solved['kneser'])} K), "
              f"{pairs} J/K pairs compared, beta(J(4,2)) = 3, beta(J(6,3)) = 4; "
              f"series halted at {SWEEP_TIMEOUT:g}s timeout: {', '.join(stopped)} ({elapsed:.1f}s) {problems or ''}")


def test_criterion_9_design_validators(criterion):
    start = time.perf_counter()
    failures = []

    def design_ok(ic, t, lam, label):
        ok, params = validate_t_design(ic, t, lam)
        if not ok or params.b != params.expected_blocks or ic.n_blocks != lam * comb(ic.n_points, t) // comb(ic.block_size, t):
            failures.append(label)

    for q in (2, 3, 4, 5):
        pg, ag = projective_plane(q), affine_plane(q)
        design_ok(pg, 2, 1, f"PG(2,{q}) design")
        design_ok(ag, 2, 1, f"AG(2,{q}) design")
        if not validate_partial_geometry(pg, q, q, q + 1):
            failures.append(f"PG(2,{q}) as pg")
        if not validate_partial_geometry(ag, q - 1, q, q):
            failures.append(f"AG(2,{q}) as pg")
    for order in (2, 4, 8, 12, 16, 20, 24):
        h = hadamard_matrix(order).astype(np.int64)
        if not np.array_equal(h @ h.T, order * np.eye(order, dtype=np.int64)):
            failures.append(f"H{order}")
    for m in (2, 3, 4, 5, 6):
        design_ok(hadamard_design(m), 2, m - 1, f"Hadamard design m={m}")
    for n in (7, 9, 13, 15, 19, 21):
        design_ok(steiner_triple_system(n), 2, 1, f"STS({n})")
    elapsed = time.perf_counter() - start
    criterion(9, not failures and elapsed < 120,
              f"planes q=2..5 as designs and partial geometries, 7 Hadamard orders, 6 STS, block counts hold "
              f"({elapsed:.1f}s) {failures or ''}")
