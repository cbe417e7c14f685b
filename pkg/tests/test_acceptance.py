"""Acceptance suite: one PASS/FAIL line per criterion.

Every comparison is exact (rational arithmetic in Q(sqrt q0) or integers), so
the numeric tolerance is zero throughout.  Runtime limits are wall-clock
seconds per criterion.  Run directly (``python tests/test_acceptance.py``) or
under pytest, which prints the same lines.
"""

import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from qca import bases, verify
from qca.ccmap import cc
from qca.finrep.ar import CCObject
from qca.finrep.rep import simple
from qca.lattice import a2, a3, kronecker
from qca.qtorus import QuantumTorus, render, specialize
from qca.scalars import FORMAL, SqrtRing
from qca.seeds import QuantumSeed, is_bar_invariant, mutate, seeds_within

TOLERANCE = 0  # exact arithmetic only
LIMITS = {1: 1.0, 2: 1.0, 3: 1.0, 4: 120.0, 5: 120.0, 6: 300.0, 7: 120.0, 8: 120.0, 9: 300.0, 10: 300.0}
LATTICES = {"kronecker": kronecker, "a2": a2, "a3": a3}


def _c1():
    K = kronecker()
    q = K.quiver
    expected = {
        "S1": "X[(-1,2,1,0)] + X[(-1,0,0,0)]",
        "S2": "X[(2,-1,0,0)] + X[(0,-1,0,1)]",
        "R": "X[(1,-1,0,0)] + X[(-1,1,1,1)] + X[(-1,-1,0,1)]",
    }
    checked = 0
    for q0 in (2, 3, 5):
        torus = QuantumTorus(K.lam)
        ring = SqrtRing(q0)
        xs1 = cc(CCObject(simple(q, q0, 1)), K)
        xs2 = cc(CCObject(simple(q, q0, 2)), K)
        if render(xs1) != expected["S1"] or render(xs2) != expected["S2"]:
            return False, f"simple expansion differs at q0={q0}"
        x123 = torus.gen(1, ring) * torus.gen(2, ring) * torus.gen(3, ring)
        rhs = xs1 * xs2 - x123.vshift(-3)  # q^{-3/2} = v^{-3}
        for pt in bases.degree_one_points(q0):
            xr = bases.x_delta(K, q0, pt)
            if render(xr) != expected["R"] or xr != rhs:
                return False, f"regular module at q0={q0}, point {pt}"
            checked += 1
    return True, f"{checked} (field, point) cases"


def _c2():
    K = kronecker()
    golden_lam = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, -2], [0, -1, 2, 0]])
    golden_b = np.array([[0, 2], [-2, 0], [-1, 0], [0, -1]])
    ok = (np.array_equal(K.btilde, golden_b) and np.array_equal(K.lam, golden_lam)
          and np.array_equal(golden_lam @ (-golden_b), np.vstack([np.eye(2, dtype=int), np.zeros((2, 2), dtype=int)])))
    return ok, "Lambda(-B) = I exactly" if ok else "matrices differ"


def _c3():
    total = fails = 0
    for name, make in LATTICES.items():
        reps = verify.sample_lattice_identities(make(), 1000, seed=7)
        total += len(reps)
        fails += sum(not r.passed for r in reps)
    return fails == 0, f"{total} instances, {fails} failures"


def _c4():
    parts = []
    ok = True
    for name, make in LATTICES.items():
        s = verify.summarize(verify.scan_hall(make(), 2, 3))
        parts.append(f"{name} {s['PASS']}/{s['PASS'] + s['FAIL']}")
        ok &= s["FAIL"] == 0 and s["INAPPLICABLE"] == 0
    return ok, ", ".join(parts)


def _c5():
    reps = []
    for k, make in enumerate(LATTICES.values()):
        reps += verify.sample_green(make(), 2, 3, 40, seed=k)
    s = verify.summarize(reps)
    return s["FAIL"] == 0 and len(reps) >= 100, f"{len(reps)} quadruples, {s['FAIL']} failures"


def _c6():
    counts = {"onedim": [0, 0], "rigid_pair": [0, 0], "euler_gap": [0, 0]}
    for make in LATTICES.values():
        lat = make()
        for which in counts:
            s = verify.summarize(verify.scan_onedim(lat, 2, 3, which))
            counts[which][0] += s["PASS"]
            counts[which][1] += s["FAIL"]
    A = a2()
    anchor = verify.verify_onedim(simple(A.quiver, 2, 2), simple(A.quiver, 2, 1), A)
    ok = anchor.passed and all(f == 0 for _, f in counts.values()) and counts["rigid_pair"][0] > 0
    detail = ", ".join(f"{k} {p} pass/{f} fail" for k, (p, f) in counts.items())
    return ok, f"{detail}; A2 (S2,S1) {anchor.status}"


def _c7():
    p = f = 0
    for make in LATTICES.values():
        s = verify.summarize(verify.scan_exchange(make(), 2, 3))
        p += s["PASS"]
        f += s["FAIL"]
    return p >= 3 and f == 0, f"{p} applicable pass, {f} fail"


def _c8():
    seeds = 0
    for make in (kronecker, a2):
        lat = make()
        for s in seeds_within(QuantumSeed.initial(lat, FORMAL), 4):
            seeds += 1
            for k in range(1, s.n + 1):
                if mutate(mutate(s, k), k).variables != s.variables:
                    return False, f"mu_k mu_k != id at {s.history} k={k}"
            if not all(is_bar_invariant(x) for x in s.cluster()):
                return False, f"variable not bar-invariant at {s.history}"
    K = kronecker()
    s0 = QuantumSeed.initial(K, FORMAL)
    for p in (2, 3, 5):
        for k in (1, 2):
            if specialize(mutate(s0, k).variables[k - 1], p) != cc(CCObject(simple(K.quiver, p, k)), K):
                return False, f"distance-1 variable {k} differs from cc(S{k}) at q0={p}"
    return True, f"{seeds} seeds"


def _c9():
    K, A = kronecker(), a2()
    tk = bases.triangularity_check(bases.kronecker_basis(K, 2, 2), K)
    ta = bases.triangularity_check(bases.finite_type_basis(A, 2, 2), A)
    if not (tk.ok and ta.ok):
        return False, "; ".join(tk.problems + ta.problems)
    missing = []
    for lat, elems in ((K, bases.kronecker_basis(K, 2, 4)), (A, bases.finite_type_basis(A, 2, 2))):
        vs = bases.cluster_variables(lat, 2, 4)
        missing += [render(x) for x, hit in bases.membership(vs, elems) if hit is None]
    return not missing, f"triangular; {len(missing)} variables missing"


def _c10():
    path = Path(__file__).with_name("test_properties.py")
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(path)],
                          capture_output=True, text=True)
    last = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    return proc.returncode == 0, f"5 suites x 200 cases: {last}"


CRITERIA = {
    1: ("degree-one regular module: golden expansions and identity", _c1),
    2: ("Kronecker compatibility golden test", _c2),
    3: ("lattice identities, 1000 samples per quiver", _c3),
    4: ("Hall multiplication, exhaustive pairs of total dim <= 3", _c4),
    5: ("Green's formula, >= 100 quadruples", _c5),
    6: ("one-dimensional Ext formula and its corollaries", _c6),
    7: ("exchange formula with shifted projectives", _c7),
    8: ("mutation suite within 4 steps", _c8),
    9: ("basis triangularity and cluster variable membership", _c9),
    10: ("property suites", _c10),
}


def run(k):
    title, fn = CRITERIA[k]
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    within = dt <= LIMITS[k]
    status = "PASS" if ok and within else "FAIL"
    line = f"criterion {k:2d} {status}: {title} [{detail}; {dt:.2f}s, limit {LIMITS[k]:.0f}s]"
    return ok and within, line


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    ok, line = run(k)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
