import json
import random

import pytest

from pgtriangles import generators, seqcore
from pgtriangles.helix import (
    OrbitBudgetError,
    champions,
    circle_of_differences,
    orbit_analysis,
    upsilon_pow,
)

FIG2 = (100000, 59049, 32768, 16807, 7776, 3125, 1024, 243, 32, 1,
        0, 1, 0, 0, 0, 0, 0, 1, 0, 0)


def test_upsilon_pow_basics():
    assert upsilon_pow((1, 0, 1), 0) == (1, 0, 1)
    assert upsilon_pow((1, 0, 1), 1) == (1, 1, 0)
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(1, 64)
        u = tuple(rng.randint(0, 1) for _ in range(n))
        assert upsilon_pow(u, 2) == u
        assert upsilon_pow(u, 6) == u


def test_orbit_seven_layers():
    orbit = orbit_analysis(FIG2)
    assert orbit.distinct == 7
    assert (orbit.precycle_len, orbit.cycle_len) == (6, 1)
    assert len(orbit.layer_generators) == 7
    # closing the loop: six more edge steps from the last layer land on
    # the start of the cycle
    last = orbit.layer_generators[-1]
    assert upsilon_pow(last, 6) == orbit.layer_generators[orbit.precycle_len]


def test_orbit_seventh_powers():
    u = generators.with_fixed_tail(generators.powers_seq(7, 77))
    orbit = orbit_analysis(u)
    assert orbit.distinct == 17
    assert (orbit.precycle_len, orbit.cycle_len) == (9, 8)


def test_orbit_binary_single_layer():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.randint(1, 48)
        u = tuple(rng.randint(0, 1) for _ in range(n))
        orbit = orbit_analysis(u)
        assert orbit.distinct == 1
        assert (orbit.precycle_len, orbit.cycle_len) == (0, 1)


def test_orbit_budget_error_carries_partial():
    with pytest.raises(OrbitBudgetError) as ei:
        orbit_analysis(FIG2, max_layers=3)
    assert len(ei.value.partial) == 4  # start plus three new layers


def test_orbit_json_report():
    d = orbit_analysis((1, 0, 1)).to_json_dict()
    assert set(d) == {"generator", "P", "C", "distinct", "layer_hashes"}
    assert d["P"] == 0 and d["C"] == 1
    assert len(d["layer_hashes"]) == 1
    json.loads(orbit_analysis((1, 0, 1)).to_json())


def test_boundedness_of_layers():
    orbit = orbit_analysis(FIG2)
    top = max(FIG2)
    for g in orbit.layer_generators:
        assert max(g) <= top


def test_champions_examples():
    assert champions((0, 1, 3, 4)).indices == (1, 2, 3)
    assert champions((9, 5, 3, 1, 0, 1)).indices == (0,)
    assert champions((0, 0, 0)).indices == ()
    assert champions(()).indices == ()
    # index 0 counts when positive
    assert 0 in champions((2, 1))
    assert champions((5, 5, 6)).indices == (0, 2)


def test_champion_indices_and_values_increase():
    rng = random.Random(17)
    for _ in range(200):
        u = [rng.randint(0, 30) for _ in range(rng.randint(0, 40))]
        cs = champions(u).indices
        assert list(cs) == sorted(cs)
        vals = [u[i] for i in cs]
        assert vals == sorted(vals) and len(set(vals)) == len(vals)


def test_champion_theorem_on_fixed_points():
    # binary sequences are all fixed points of the sixth iterate
    rng = random.Random(41)
    for _ in range(2000):
        n = rng.randint(1, 64)
        u = tuple(rng.randint(0, 1) for _ in range(n))
        assert len(champions(u)) <= 1
    # scaled binary sequences are non-binary fixed points
    for _ in range(200):
        n = rng.randint(1, 32)
        c = rng.randint(2, 1000)
        u = tuple(c * rng.randint(0, 1) for _ in range(n))
        assert upsilon_pow(u, 6) == u
        assert len(champions(u)) <= 1


def test_circle_radius_zero():
    edges = circle_of_differences((4, 1, 2), 0)
    assert edges == ((4,),) * 6


def test_circle_champion_fixed_point():
    # champion at index 2 of a sixth-iterate fixed point: the whole circle
    # carries the champion value, the interior only zeros
    a = 7
    u = (0, 0, a, 0)
    assert upsilon_pow(u, 6) == u
    edges = circle_of_differences(u, 2)
    assert all(set(e) == {a} for e in edges)
    inner = circle_of_differences(u, 1)
    assert all(set(e) == {0} for e in inner)
    corners = [e[-1] for e in edges]
    starts = [e[0] for e in edges]
    assert corners[:5] == starts[1:]  # consecutive edges share corners


def test_circle_out_of_range():
    with pytest.raises(IndexError):
        circle_of_differences((1, 2), 2)


def test_binary_mirror_transpose_exhaustive():
    # for binary u, ray k of the triangle equals row k of the triangle of
    # the left edge, exhaustively through length 12
    for n in range(1, 13):
        for v in range(1 << n):
            u = tuple((v >> i) & 1 for i in range(n))
            rows_u = list(seqcore.triangle_rows(u))
            rows_w = list(seqcore.triangle_rows(seqcore.left_edge(u)))
            for k in range(n):
                ray_k = tuple(rows_u[j][k] for j in range(n - k))
                assert ray_k == rows_w[k]


def test_orbit_determinism():
    o1 = orbit_analysis(FIG2)
    o2 = orbit_analysis(FIG2)
    assert o1 == o2
