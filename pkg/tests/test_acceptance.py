"""Exit criteria.  Each test appends one PASS/FAIL line to the summary
printed at the end of the pytest run."""

import time

import pytest

from twelvepoint import classify
from twelvepoint import trace as tracefmt
from twelvepoint.classify import SplitMix64, enumerate_reflexive, normal_form, random_reflexive
from twelvepoint.duality import dual_polygon, verify_twelve
from twelvepoint.lattice import (
    ORIGIN,
    ReflexivePolygon,
    boundary_count,
    boundary_count_oracle,
    interior_count,
    interior_count_oracle,
    same_cycle,
    strict_form,
)
from twelvepoint.reduction import (
    check_dual_transition,
    ear_removable,
    insert_vertex,
    is_terminal_parallelogram,
    reduce_to_parallelogram,
    remove_ear,
)

RANDOM_IMAGES = 1000
REDUCE_IMAGES = 200
INVERSE_SAMPLES = 10_000
RANDOM_STEPS = 20


@pytest.fixture
def report(acceptance_log):
    def log(number, name, ok, detail):
        acceptance_log.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} ({detail})")
    return log


def test_1_theorem_reproduction(report, representatives):
    start = time.perf_counter()
    failures = sum(not verify_twelve(rep).ok or verify_twelve(rep).sum != 12 for rep in representatives)
    for seed in range(RANDOM_IMAGES):
        r = verify_twelve(random_reflexive(seed, RANDOM_STEPS))
        failures += r.sum != 12
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 5.0
    report(1, "m + m* = 12 on 16 classes and 1000 random images", ok, f"failures={failures}, {elapsed:.2f}s < 5s")
    assert failures == 0
    assert elapsed < 5.0


def test_2_classification_count(report):
    classify._census.cache_clear()
    start = time.perf_counter()
    at4 = enumerate_reflexive(4)
    at5 = enumerate_reflexive(5)
    elapsed = time.perf_counter() - start
    same = [c.representative for c in at4] == [c.representative for c in at5]
    ok = len(at4) == 16 and len(at5) == 16 and same and elapsed < 60.0
    report(2, "16 classes at box 4 and the same 16 at box 5", ok,
           f"{len(at4)} / {len(at5)} classes, same={same}, {elapsed:.2f}s < 60s")
    assert len(at4) == 16
    assert len(at5) == 16
    assert same
    assert elapsed < 60.0


def test_3_dual_transition_suite(report, representatives):
    ears = failures = 0
    for rep in representatives:
        for i in range(rep.m):
            if not ear_removable(rep, i):
                continue
            ears += 1
            t = check_dual_transition(rep, i)
            if not (t.delta_ok and t.simple_ok and t.collinearity_ok):
                failures += 1
    ok = failures == 0 and ears > 0
    report(3, "dual transition on every removable ear", ok, f"ears={ears}, failures={failures}")
    assert ears > 0
    assert failures == 0


def _trace_problems(rep):
    t = reduce_to_parallelogram(rep)
    problems = []
    if any(s.m_after + s.m_star_after != 12 for s in t.steps):
        problems.append("step sum")
    final = t.final
    if not (final.m == 4 and is_terminal_parallelogram(final)):
        problems.append("final shape")
    if final.cycle[0] + final.cycle[2] != ORIGIN or final.cycle[1] + final.cycle[3] != ORIGIN:
        problems.append("diagonals")
    replayed = tracefmt.replay(tracefmt.parse(tracefmt.serialize(t)))
    problems.extend(replayed)
    return problems


def test_4_reduction_suite(report, representatives):
    inputs = list(representatives) + [random_reflexive(seed, RANDOM_STEPS) for seed in range(REDUCE_IMAGES)]
    failures = [k for k, rep in enumerate(inputs) if _trace_problems(rep)]
    ok = not failures
    report(4, "reduction to a parallelogram, replay CONSISTENT", ok,
           f"{len(inputs) - len(failures)}/{len(inputs)} traces")
    assert failures == []


def test_5_oracle_equivalence(report, corpus3):
    mismatches = 0
    for r in corpus3:
        for p in (r.polygon, r.subdivided):
            mismatches += boundary_count(p) != boundary_count_oracle(p)
            mismatches += interior_count(p) != interior_count_oracle(p)
    report(5, "gcd and Pick counts equal the enumeration oracles at box 3", mismatches == 0,
           f"{len(corpus3)} polygons, discrepancies={mismatches}")
    assert mismatches == 0


def test_6_double_dual(report, representatives):
    failures = 0
    for rep in representatives:
        dual = ReflexivePolygon(dual_polygon(rep).dual)
        double = strict_form(dual_polygon(dual).dual)
        failures += not same_cycle(double.vertices, [-v for v in rep.polygon])
    report(6, "dual of the dual is the reflection through O", failures == 0, f"failures={failures}/16")
    assert failures == 0


def test_7_inverse_operations(report):
    rng = SplitMix64(20240601)
    samples = failures = 0
    while samples < INVERSE_SAMPLES:
        poly = random_reflexive(rng.next(), rng.below(RANDOM_STEPS + 1))
        ears = [i for i in range(poly.m) if ear_removable(poly, i)]
        if not ears:
            continue
        i = ears[rng.below(len(ears))]
        samples += 1
        failures += insert_vertex(remove_ear(poly, i), i, poly.cycle[i]) != poly
    report(7, "insert_vertex after remove_ear is the identity", failures == 0,
           f"{samples} samples, failures={failures}")
    assert failures == 0


def test_random_images_stay_in_their_class(representatives):
    reps = set(representatives)
    for seed in range(100):
        assert normal_form(random_reflexive(seed, RANDOM_STEPS)) in reps
