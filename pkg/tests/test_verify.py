import json
import random

import pytest

from linepat.geometry import Transform2
from linepat.lattice import LatticeSpec, PointSet, fibonacci_triangle, grid_spec, pentagon_counterexample
from linepat.verify import (
    VerificationReport,
    VerifyConfig,
    check_coprime,
    check_counterexamples,
    check_no_5gon,
    check_rrl,
    check_transform_invariance,
    compare_engines,
    format_json,
    format_text,
    origin_case_sets,
    random_lattice_spec,
    random_transform,
    run_claims,
)

SMALL = VerifyConfig(grid_max=2, lattices=5, transform_trials=3, engine_sets=10)


def test_failed_report_needs_witness():
    with pytest.raises(ValueError):
        VerificationReport("x", False)
    assert VerificationReport("x", True).to_dict() == {
        "claim_id": "x", "passed": True, "witness": None, "stats": {}}


def test_no5gon_passes_on_lattices_and_fails_on_pentagon():
    assert check_no_5gon(LatticeSpec(1, 1, 1, 1, 3, 2)).passed
    assert check_no_5gon(grid_spec(2)).passed
    rep = check_no_5gon(pentagon_counterexample())
    assert not rep.passed
    assert rep.witness["oracle_face"]["side_count"] == 5


def test_rrl_fails_on_fibonacci_with_witness():
    rep = check_rrl(fibonacci_triangle(2))
    assert not rep.passed
    assert rep.witness["run"] >= 3
    assert "RRR" in rep.witness["d"] * 2
    assert check_rrl(grid_spec(2)).passed


def test_counterexamples_and_coprime():
    assert check_counterexamples().passed
    for n in (1, 2):
        rep = check_coprime(n)
        assert rep.passed and rep.stats["coprime"] == rep.stats["two_sided_unbounded"]


def test_transform_invariance():
    spec = LatticeSpec(1, 1, 1, 1, 2, 2)
    assert check_transform_invariance(spec, Transform2.identity()).passed
    assert check_transform_invariance(spec, Transform2(2, 1, 0, 1)).passed
    with pytest.raises(ValueError):
        check_transform_invariance(spec, Transform2(1, 1, 1, 1))


def test_compare_engines_on_every_origin_case():
    cases = set()
    for s in origin_case_sets():
        rep = compare_engines(s)
        assert rep.passed, rep.witness
        cases.add(rep.stats["origin_case"])
    assert cases == {"single_point", "collinear_origin_outside", "collinear_origin_inside",
                     "segment", "origin_inside", "origin_outside", "origin_on_boundary"}


def test_random_specs_are_valid_and_varied():
    rng = random.Random(1)
    specs = [random_lattice_spec(rng) for _ in range(60)]
    assert any(s.N == 0 or s.M == 0 for s in specs)
    covering = [s for s in specs if s.N and s.M and
                len(PointSet.of((s.a + k * s.dx, s.b + j * s.dy)
                                for k in range(s.N + 1) for j in range(s.M + 1))) < (s.N + 1) * (s.M + 1)]
    assert covering
    assert all(s.N <= 6 and s.M <= 6 for s in specs)
    m = random_transform(rng)
    assert m.det != 0


def test_run_claims_sorted_and_deterministic():
    a = run_claims(["rrl", "coprime", "engines"], SMALL)
    b = run_claims(["rrl", "coprime", "engines"], SMALL)
    ids = [r.claim_id for r in a]
    assert ids == sorted(ids)
    assert format_text(a, SMALL.seed) == format_text(b, SMALL.seed)
    doc = json.loads(format_json(a, SMALL.seed))
    assert doc["seed"] == SMALL.seed and doc["passed"]
    assert "seconds" not in doc["reports"][0]
    assert "seconds" in json.loads(format_json(a, SMALL.seed, timing=True))["reports"][0]


def test_run_claims_with_source():
    (rep,) = run_claims(["rrl"], SMALL, fibonacci_triangle(2))
    assert not rep.passed
    with pytest.raises(ValueError):
        run_claims(["coprime"], SMALL, fibonacci_triangle(2))
    with pytest.raises(KeyError):
        run_claims(["nonsense"], SMALL)
