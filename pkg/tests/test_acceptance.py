"""Acceptance criteria 1-10, one report line each.

Run with pytest, or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import itertools
import random
import time
from fractions import Fraction

from acceptance_report import report
from oracles import adjugate, random_poly_matrix

from vfblocks import cli
from vfblocks.curve import builtin_graphs, enumerate_labelings, graphs_of_genus, passes_root_lattice
from vfblocks.factorize import decomposition_table, rank_nodal, rank_smooth
from vfblocks.fusion import fusion_table, three_point_rank
from vfblocks.grading import ConeSpec, chern_sl2_coefficients, hilbert_basis, hilbert_function, qp_fit
from vfblocks.polarize import (
    Poly,
    SingularMatrixError,
    build_covering_pair,
    node_ledger,
    smith_normal_form,
)
from vfblocks.polarize.smith import det, matmul
from vfblocks.qgrass import (
    QClass,
    gw_nonvanishing_bound,
    horn_for_labels,
    index_set_to_partition,
    power_with_qdegrees,
    sigma_I,
)
from vfblocks.weights import (
    Weight,
    dual,
    epsilon_midpoint,
    epsilon_pair,
    iter_weights,
    level,
    weights_at_level,
    x_pairing,
)

F = Fraction
GRAPHS = builtin_graphs()
GENUS2 = {g.name: g for g in graphs_of_genus(2)}
P3 = [4, 10, 20, 35, 56, 84]


def _cli(*argv: str) -> str:
    out, err = io.StringIO(), io.StringIO()
    assert cli.run(list(argv), out, err) == 0, err.getvalue()
    return out.getvalue()


def test_criterion_01_genus2_sl2_ranks():
    t0 = time.perf_counter()
    got = [int(_cli("cb-rank", "--graph", "genus2-smooth", "--r", "2", "--level", str(m))) for m in range(1, 7)]
    dt = time.perf_counter() - t0
    ok = got == P3 and dt < 5
    report(1, ok, f"ranks {got} in {dt:.2f}s")
    assert ok


def test_criterion_02_factorization_invariance():
    t0 = time.perf_counter()
    g2 = graphs_of_genus(2)
    g3 = graphs_of_genus(3)
    bad = []
    for g in g2:
        for l in range(1, 4):
            if rank_nodal(g, 2, l) != P3[l - 1]:
                bad.append((g.name, l))
    g3_ranks = {}
    for g in g3:
        for l in range(0, 3):
            g3_ranks.setdefault(l, set()).add(rank_nodal(g, 2, l))
    dt = time.perf_counter() - t0
    ok = len(g2) == 7 and len(g3) >= 5 and not bad and all(len(v) == 1 for v in g3_ranks.values()) and dt < 60
    detail = f"{len(g2)} genus-2 graphs, {len(g3)} genus-3 graphs {dict((k, sorted(v)) for k, v in g3_ranks.items())} in {dt:.2f}s"
    report(2, ok, detail + (f" mismatches {bad}" if bad else ""))
    assert ok


CRIT3_CASES = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)]


def _table_invariants(t) -> bool:
    n = len(t.weights)
    N = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in t.prod[i][j]:
                N[i][j][k] = c
    d = t.dual_index
    for i, j, k in itertools.product(range(n), repeat=3):
        c = N[i][j][k]
        if c != N[j][i][k] or c != N[d[i]][d[j]][d[k]] or c != N[i][d[k]][d[j]]:
            return False
    for i, j, m in itertools.product(range(n), repeat=3):
        row = N[i][j]
        for p in range(n):
            lhs = sum(row[k] * N[k][m][p] for k in range(n) if row[k])
            rhs = sum(N[j][m][k] * N[i][k][p] for k in range(n) if N[j][m][k])
            if lhs != rhs:
                return False
    return True


def test_criterion_03_fusion_dual_oracle():
    t0 = time.perf_counter()
    triples = 0
    ok = True
    for r, l in CRIT3_CASES:
        a = fusion_table(r, l, "affine-fold")
        b = fusion_table(r, l, "rim-hook")
        triples += len(a.weights) ** 3
        ok &= a.coeffs == b.coeffs and _table_invariants(a)
    dt = time.perf_counter() - t0
    ok &= dt < 120
    report(3, ok, f"{len(CRIT3_CASES)} tables, {triples} triples, associativity and duality checked in {dt:.2f}s")
    assert ok


def test_criterion_04_vanishing_and_root_lattice():
    cases = [(g, 2, l) for g in GRAPHS.values() for l in (1, 2, 3)]
    cases += [(g, 3, l) for g in GRAPHS.values() for l in (1, 2)]
    ok = True
    rows = failing = zero_passing = 0
    for g, r, l in cases:
        full = decomposition_table(g, r, l, root_lattice=False)
        filtered = decomposition_table(g, r, l, root_lattice=True)
        ok &= sum(x.contribution for x in full) == sum(x.contribution for x in filtered)
        for row in full:
            rows += 1
            if not passes_root_lattice(g, row.labeling, r):
                failing += 1
                ok &= row.contribution == 0
            elif row.contribution == 0:
                zero_passing += 1
    # Zero rows may still pass the root-lattice test (fusion-rule vanishing),
    # so only the direction "fails the test => zero" is asserted.
    report(
        4,
        ok,
        f"{len(cases)} cases, {rows} rows; all {failing} non-root-lattice rows vanish"
        f" ({zero_passing} further zero rows pass the test)",
    )
    assert ok


def test_criterion_05_covering_pairs():
    ok = True
    count = 0
    for g in GENUS2.values():
        genus = g.arithmetic_genus
        for r, l in [(2, 2), (2, 4), (3, 2), (3, 4)]:
            for lab in enumerate_labelings(g, r, l, root_lattice=True):
                for choice in ("low", "high"):
                    cp = build_covering_pair(g, l, lab, choice, require_integral=True)
                    count += 1
                    for (i, side), eps in cp.epsilons.items():
                        pair = epsilon_pair(lab.half(i, side), l)
                        ok &= pair.low <= eps <= pair.high and F(-1, 2) <= eps <= F(1, 2)
                        ok &= eps + cp.epsilons[(i, "b" if side == "a" else "a")] == 0
                    ok &= all(cp.integral.values())
                    ok &= sum(cp.degrees.values()) == (genus - 1) * l
        for l in (1, 2, 3, 4):
            for lab in enumerate_labelings(g, 2, l):
                cp = build_covering_pair(g, l, lab, "midpoint")
                count += 1
                for v, gv in g.vertices:
                    ok &= cp.a_weights[v] == F(2 * gv - 2 + g.valence(v), 2)
    report(5, ok, f"{count} covering pairs on {len(GENUS2)} genus-2 graphs")
    assert ok


def _random_config(rng, case):
    r = rng.randint(2, 6)
    l = rng.randint(1, 6)
    mu = rng.choice(weights_at_level(r, l))
    pair = epsilon_pair(mu, l)
    endpoint = rng.random() < 0.5
    if endpoint:
        eps = pair.low if case == "c" else pair.high
    else:
        eps = pair.low + (pair.high - pair.low) * F(rng.randint(0, 12), 12)
    fb = rng.randint(0, 5)
    if case == "a":
        fa = fb
    elif case == "b":
        fa = fb + rng.randint(1, 5)
    else:
        fa, fb = fb, fb + rng.randint(1, 5)
    m = fa - fb
    if case == "c":
        beta = [] if endpoint else [rng.randint(0, 3) for _ in range(rng.randint(0, 3))]
        alpha = [sum(beta) - m]
    else:
        alpha = [] if endpoint else [rng.randint(0, 3) for _ in range(rng.randint(0, 3))]
        beta = [sum(alpha) + m]
    return r, l, mu, eps, fa, fb, alpha, beta, endpoint


def test_criterion_06_pole_certification():
    rng = random.Random(20261015)
    t0 = time.perf_counter()
    ok = True
    zeros = 0
    for case in "abc":
        for _ in range(1000):
            r, l, mu, eps, fa, fb, alpha, beta, endpoint = _random_config(rng, case)
            total = node_ledger(r, l, mu, eps, fa, fb, alpha, beta).total
            ok &= total <= 0
            if endpoint:
                zeros += total == 0
                ok &= total == 0
    dt = time.perf_counter() - t0
    ok &= dt < 10
    report(6, ok, f"3000 configurations, {zeros} endpoint totals equal 0, in {dt:.2f}s")
    assert ok


def test_criterion_07_weight_identities():
    ok = True
    n = 0
    boundary = 0
    for r in range(2, 7):
        for l in range(0, 7):
            for w in iter_weights(r, l):
                n += 1
                ok &= x_pairing(w) + x_pairing(dual(w)) == level(w)
                if l == 0:
                    continue
                pair = epsilon_pair(w, l)
                ok &= pair.low <= pair.high
                ok &= F(-1, 2) <= pair.low <= F(1, 2) or F(-1, 2) <= pair.high <= F(1, 2)
                mid = epsilon_midpoint(w, l)
                lo, hi = F(1, r) - F(1, 2), F(1, 2) - F(1, r)
                ok &= lo <= mid <= hi
                if not lo < mid < hi:
                    boundary += 1
                    # strictness fails only on the empty sl2 interval and at l*omega_1, l*omega_{r-1}
                    ok &= r == 2 or w.parts in ((l,) + (0,) * (r - 1), (l,) * (r - 1) + (0,))
    report(7, ok, f"{n} weights; closed midpoint interval holds, {boundary} boundary cases (sl2 or corner weights)")
    assert ok


def test_criterion_08_quantum_schubert():
    t0 = time.perf_counter()
    ok = True
    for r in range(3, 7):
        s = sigma_I(2, r)
        ok &= power_with_qdegrees(2, r, s, 2) == QClass.from_index_set(2, r, {1, 2})
        for b in range(2, r + 1):
            expect = QClass.schubert(2, r, index_set_to_partition(2, r, {b - 1, b}), b - 2)
            ok &= power_with_qdegrees(2, r, s, b) == expect
    gw = 0
    for r in range(3, 7):
        for e in range(2, 11):
            good, c = gw_nonvanishing_bound(2, r, e)
            ok &= good and c is not None and c <= e - 2
            gw += 1
    blocks = 0
    for r, l in CRIT3_CASES:
        if r > 3:
            continue
        ws = weights_at_level(r, l)
        for triple in itertools.combinations_with_replacement(ws, 3):
            if three_point_rank(r, l, *triple):
                blocks += 1
                ok &= horn_for_labels(r, l, triple)
    dt = time.perf_counter() - t0
    ok &= dt < 60
    report(8, ok, f"powers for r=3..6, {gw} GW bounds, horn on {blocks} nonzero blocks in {dt:.2f}s")
    assert ok


def test_criterion_09_grading():
    ok = True
    g = GENUS2["genus2-smooth"]
    values = hilbert_function(g, 2, 1, 6)
    q = qp_fit(values)
    pred = [int(q(7)), int(q(8))]
    direct = [rank_smooth(2, m, 2) for m in (7, 8)]
    ok &= (q.period, q.degree) == (1, 3) and pred == [120, 165] == direct
    hb = hilbert_basis(ConeSpec(2, 2, 0), 10)
    ok &= set(hb.generators) == {((1, 0), 1), ((0, 1), 1)} and hb.bound >= hb.required_bound
    ok &= chern_sl2_coefficients(1) == (1, -80) and chern_sl2_coefficients(0)[0] == 0
    report(9, ok, f"fit p0 = {q.constituent_str(0)}, predicts {pred}; basis {sorted(d + (l,) for d, l in hb.generators)}; alpha(1), beta(1) = {tuple(map(str, chern_sl2_coefficients(1)))}")
    assert ok


def _is_constant(p: Poly) -> bool:
    return p.degree <= 0 and not p.is_zero()


def test_criterion_10_smith_normal_form():
    rng = random.Random(10)
    t0 = time.perf_counter()
    snf_time = 0.0
    ok = True
    done = singular = 0
    while done < 200:
        n = rng.randint(1, 5)
        M = random_poly_matrix(rng, n)
        t1 = time.perf_counter()
        try:
            res = smith_normal_form(M)
        except SingularMatrixError:
            singular += 1
            ok &= det(M).is_zero()
            continue
        finally:
            snf_time += time.perf_counter() - t1
        done += 1
        D = res.diagonal
        zero = Poly.const(0)
        diag = [[D[i] if i == j else zero for j in range(n)] for i in range(n)]
        ok &= matmul(matmul(res.U, M), res.V) == diag
        dU, dV = det(res.U), det(res.V)
        ok &= _is_constant(dU) and _is_constant(dV)
        ok &= all((D[i + 1] % D[i]).is_zero() for i in range(n - 1))
        prod = Poly.const(1)
        for d in D:
            prod = prod * d
        ok &= prod == det(M).monic()
        # Normal-form shape: d_j = t^a_j u_j with u_j(0) != 0, so
        # M = U^-1 diag(t^a) Q where Q = diag(u) V^-1 is invertible at t = 0.
        a = [d.valuation() for d in D]
        units = [d // Poly.monomial(k) for d, k in zip(D, a)]
        ok &= all(u(0) != 0 for u in units)
        if n <= 3:
            P = [[x / dU.lead for x in row] for row in adjugate(res.U)]
            Vinv = [[x / dV.lead for x in row] for row in adjugate(res.V)]
            Q = [[units[i] * x for x in Vinv[i]] for i in range(n)]
            tdiag = [[Poly.monomial(a[i]) if i == j else zero for j in range(n)] for i in range(n)]
            ok &= matmul(matmul(P, tdiag), Q) == [list(row) for row in M]
            ok &= det(Q)(0) != 0
    dt = time.perf_counter() - t0
    ok &= snf_time < 10
    report(
        10,
        ok,
        f"200 matrices of size <= 5 ({singular} singular draws skipped);"
        f" SNF {snf_time:.2f}s, with verification {dt:.2f}s",
    )
    assert ok


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
