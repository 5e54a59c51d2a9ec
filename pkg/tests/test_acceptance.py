"""Acceptance criteria, one test per criterion.

Each test prints a single ``[criterion k] PASS|FAIL`` line (visible without
``-s``) before asserting.  All comparisons are exact.
"""

import random
import time

import pytest

from braidforge.braid import admissible_bound, b3_irreducible, central_character, check_braid, k_default
from braidforge.errors import DegenerateBaseChangeError
from braidforge.family import FamilySpec, build_family_member, pairwise_distinct, realize
from braidforge.gamma0 import burnside_dimension, hom_ext, make_S, make_T, to_gamma0, westbury_quiver
from braidforge.quiver import LabeledQuiver, Quiver, euler_form, family_dimension, local_quiver, onedim_is_simple, sigma_quiver

from oracles import all_small_quivers, brute_force_simple, common_eigenvector_reducible, euler_matrix_form

SEED = 2026
SAMPLES_PER_N = 5


def report(capsys, number, title, ok, detail=""):
    with capsys.disabled():
        line = f"[criterion {number}] {'PASS' if ok else 'FAIL'} {title}"
        print("\n" + line + (f" ({detail})" if detail else ""))


def sample_specs():
    rng = random.Random(SEED)
    specs = []
    for n in range(1, 13):
        for _ in range(SAMPLES_PER_N):
            lambdas = tuple(rng.sample(range(2, 41), n // 2))
            specs.append(FamilySpec(n, lambdas, mu=rng.choice([1, 2])))
    return specs


@pytest.fixture(scope="module")
def sampled():
    start = time.perf_counter()
    members = [realize(spec) for spec in sample_specs()]
    return members, time.perf_counter() - start


def test_criterion_1_braid_relation(sampled, capsys):
    members, elapsed = sampled
    bad = []
    for m in members:
        if m.b3 is None or not check_braid(m.b3) or central_character(m.b3) != m.spec.mu**6:
            bad.append(m.spec)
    ok = not bad and elapsed < 120
    report(capsys, 1, "braid relation and central character mu^6", ok,
           f"{len(members)} members, {elapsed:.1f}s, failures: {bad}")
    assert not bad
    assert elapsed < 120


def test_criterion_2_irreducible(sampled, capsys):
    members, _ = sampled
    bad = [m.spec for m in members if not (m.certificate.irreducible and b3_irreducible(m.b3))]
    report(capsys, 2, "Burnside irreducibility of every sampled member", not bad,
           f"{len(members)} members, failing specs: {bad}")
    assert not bad


def test_criterion_3_parameter_count(sampled, capsys):
    members, _ = sampled
    counts_ok = all(
        m.spec.parameter_count == m.certificate.parameter_count == m.spec.n // 2 + 1 for m in members
    )
    dims_ok = all(family_dimension(sigma_quiver(n)) == n // 2 for n in range(2, 41))
    report(capsys, 3, "k(n) = floor(n/2) + 1 parameters, family dimension floor(n/2)", counts_ok and dims_ok)
    assert counts_ok and dims_ok


def test_criterion_4_local_quiver(capsys):
    reps = [make_S(1, 1), make_T(1, 2), make_T(2, 3), make_T(1, 5), make_T(2, 7), make_T(1, 11), make_T(2, 13)]
    delta = local_quiver(westbury_quiver(), [r.dim for r in reps])
    loops = tuple(delta.loops_at(v) for v in range(7))
    arrows_ok = all(
        delta.arrow_count(i, j) == (1 if (i - j) % 2 else 0) for i in range(7) for j in range(7) if i != j
    )
    ok = loops == (0, 1, 1, 1, 1, 1, 1) and arrows_ok
    report(capsys, 4, "local quiver of S11, T1, T2, ... alternating", ok, f"loops {loops}")
    assert ok


def test_criterion_5_euler_identity(capsys):
    rng = random.Random(SEED + 5)

    def summand():
        if rng.random() < 0.4:
            return make_S(rng.randint(1, 2), rng.randint(1, 3))
        return make_T(rng.randint(1, 3), rng.randint(2, 12))

    bad = []
    for _ in range(100):
        v, w = summand(), summand()
        he = hom_ext(v, w)
        chi = euler_form(westbury_quiver(), v.dim, w.dim)
        if he.hom_dim - he.ext_dim != chi or chi != euler_matrix_form(v.dim, w.dim):
            bad.append((v.name, w.name))
    report(capsys, 5, "hom - ext = chi on 100 random S/T pairs", not bad, f"failures: {bad}")
    assert not bad


def test_criterion_6_non_isomorphism(capsys):
    even = [realize(FamilySpec(4, (2, t))) for t in range(3, 13)]
    odd = [realize(FamilySpec(5, (2, t))) for t in range(3, 13)]
    accepted = all(m.certificate.accepted for m in even + odd)
    distinct = pairwise_distinct([m.gamma0 for m in even]) and pairwise_distinct([m.gamma0 for m in odd])
    ok = accepted and distinct
    report(capsys, 6, "10 pairwise distinct fingerprints for n = 4 and n = 5", ok)
    assert ok


def test_criterion_7_constructor_edges(capsys):
    try:
        make_T(2, 1)
        raised = False
    except DegenerateBaseChangeError:
        raised = True
    zero = to_gamma0(make_T(2, 0, strict=False))
    zero_reducible = common_eigenvector_reducible(zero.U, zero.V, 2) and burnside_dimension([zero.U, zero.V], 2) < 4
    # lam = 1 has a singular base change and is not a representation at all
    agree = []
    for lam in (-2, -1, 0, 2, 3):
        g = to_gamma0(make_T(2, lam, strict=False))
        agree.append(
            (not common_eigenvector_reducible(g.U, g.V, 2)) == (burnside_dimension([g.U, g.V], 2, "exact") == 4)
        )
    ok = raised and zero_reducible and all(agree)
    report(capsys, 7, "T2 edge cases and oracle agreement on lambda in -2..3", ok)
    assert ok


def test_criterion_8_admissibility(capsys):
    primes = (2, 3, 5, 7, 11, 13)
    bad = []
    for n in range(1, 13):
        r = build_family_member(FamilySpec(n, primes[: n // 2]))
        if admissible_bound(r.dim) < k_default(n):
            bad.append(n)
    report(capsys, 8, "admissible bound >= floor(n/2) + 1 for n <= 12", not bad, f"failures: {bad}")
    assert not bad


def test_criterion_9_onedim_oracle(capsys):
    start = time.perf_counter()
    cases = 0
    mismatches = []
    for n, arrows, labelings in all_small_quivers(4):
        q = Quiver(n, arrows)
        for labels in labelings:
            cases += 1
            if onedim_is_simple(LabeledQuiver(q, labels)) != brute_force_simple(n, arrows, labels):
                mismatches.append((n, arrows, labels))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 10
    report(capsys, 9, "onedim_is_simple vs brute force, all quivers up to 4 vertices", ok,
           f"{cases} cases, {elapsed:.1f}s")
    assert not mismatches
    assert elapsed < 10
