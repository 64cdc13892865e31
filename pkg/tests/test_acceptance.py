"""End-to-end agreement between the three engines and the brute-force oracle."""
import pytest

from app.antiplex.bench import BenchPlan, run_bench, share_of_cells_faster, vr_removed_by_t
from app.antiplex.enumeration import bape, sanc, sape
from app.antiplex.generator import generate_planted
from app.antiplex.models import Algorithm, GenSpec
from app.antiplex.oracle import enumerate_bruteforce, validate_plex
from app.antiplex.preprocess import dichromatic_reduction, vertex_reduction
from app.antiplex.runner import run_enumeration
from tests.plex_testing_utils import planted_instance, random_instance

BLOCK = 25


def _check_instance(g, params):
    expected = enumerate_bruteforce(g, params)
    for engine in (bape, sanc, sape):
        found = engine(g, params)
        assert len(found) == len(set(found))
        assert found == expected, engine.__name__
    for result in expected:
        assert validate_plex(result, g, params)
    return expected


@pytest.mark.parametrize("block", range(500 // BLOCK))
def test_engines_match_oracle_on_random_graphs(block):
    for index in range(block * BLOCK, (block + 1) * BLOCK):
        g, params = random_instance(index)
        _check_instance(g, params)


def test_engines_match_oracle_on_planted_graphs():
    found_any = 0
    for index in range(100):
        g, params = planted_instance(index)
        found_any += bool(_check_instance(g, params))
    assert found_any > 20


def test_reductions_keep_every_result():
    for index in range(100):
        g, params = planted_instance(index)
        expected = enumerate_bruteforce(g, params)
        _, report = vertex_reduction(g, params)
        for result in expected:
            assert result.members <= report.survivors
            seed = min(result.left)
            hop = dichromatic_reduction(g, seed, params)
            assert set(result.left) - {seed} <= hop.ln
            assert set(result.right) <= hop.rn


def test_parallel_runs_match_serial_runs(config):
    for index in range(50):
        g, params = planted_instance(index)
        serial = run_enumeration(g, params, Algorithm.SAPE, workers=1, config=config)
        parallel = run_enumeration(g, params, Algorithm.SAPE, workers=2, config=config)
        assert parallel.plexes == serial.plexes, index


@pytest.mark.slow
def test_optimized_engine_scales_better(config):
    spec = GenSpec(n=2000, planted=10, side=12, p_pos_in=0.9, p_neg_cross=0.9, p_noise=0.004, seed=11)
    g = generate_planted(spec)
    plan = BenchPlan(
        ks=[1, 2, 3],
        ts=list(range(5, 11)),
        algos=[Algorithm.BAPE, Algorithm.SAPE],
        repetitions=3,
        timeout=600.0,
        config=config,
    )
    frame = run_bench([("planted", g)], plan)
    assert share_of_cells_faster(frame, fast="sape", slow="bape") >= 0.9
    removed = vr_removed_by_t(frame)
    for _, group in removed.groupby("k"):
        assert group.sort_values("t")["vr_removed"].is_monotonic_increasing
