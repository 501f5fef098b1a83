import math

import pytest

import fuzzydepth as fd


@pytest.fixture
def grid():
    return fd.AlphaGrid(101)


def flat_band(grid):
    return fd.Sample([
        fd.FuzzyNumber.triangular(1, 2, 3, grid),
        fd.FuzzyNumber.crisp_point(4, grid),
        fd.FuzzyNumber.crisp_point(5, grid),
        fd.FuzzyNumber.triangular(6, 6, 7, grid),
    ])


def jump_cdf():
    return fd.CrispCdf([(0, 0, 0), (2, 0.29, 0.49), (53, 1, 1)])


def test_fuzzy_number_and_metric(grid):
    t = fd.FuzzyNumber.triangular(1, 2, 3, grid)
    i2 = fd.FuzzyNumber.crisp_point(2, grid)
    assert len(t.lower) == 101
    assert t.support(1, 0.25) == pytest.approx(2.75)
    assert abs(fd.rho(t, i2) - 0.5) <= 1e-12
    c = fd.blend(t, i2, 0.5)
    assert abs(fd.rho(t, i2) - fd.rho(t, c) - fd.rho(c, i2)) <= 1e-12
    assert fd.translate(t, 1.0).approx_equal(fd.FuzzyNumber.triangular(2, 3, 4, grid))


def test_invalid_input_raises(grid):
    with pytest.raises(fd.FuzzyDepthError, match="not nested"):
        fd.FuzzyNumber.from_arrays([0, -1, 0], [2, 2, 1])
    with pytest.raises(ValueError):
        fd.Sample([fd.FuzzyNumber.crisp_point(0, grid)], [0.5])
    with pytest.raises(fd.FuzzyDepthError):
        fd.depth(fd.FuzzyNumber.crisp_point(2, grid), jump_cdf(), "l1")


def test_band_and_named_medians(grid):
    band = fd.median_band(flat_band(grid), grid)
    assert all(row["u_plus"] == (4.0, 5.0) and row["u_minus"] == (-5.0, -4.0) for row in band)
    pair = fd.Sample([fd.FuzzyNumber.crisp_point(0, grid), fd.FuzzyNumber.crisp_point(2, grid)])
    assert fd.median_si(pair, grid).approx_equal(fd.FuzzyNumber.crisp_point(1, grid))
    assert fd.median_gr(pair, grid).approx_equal(fd.FuzzyNumber.crisp_interval(0, 2, grid))
    assert fd.band_contains(pair, fd.FuzzyNumber.crisp_point(0.5, grid))


def test_depths(grid):
    pair = fd.Sample([fd.FuzzyNumber.crisp_point(1, grid), fd.FuzzyNumber.crisp_point(3, grid)], [0.5, 0.5])
    queries = [fd.FuzzyNumber.crisp_point(2, grid), fd.FuzzyNumber.triangular(1, 2, 3, grid)]
    values = [r["value"] for r in fd.depth_batch(queries, pair, "projection")]
    assert values == pytest.approx([1.0, 0.5], abs=1e-12)
    assert fd.depth(queries[1], flat_band(grid), "tukey")["value"] == pytest.approx(0.25, abs=1e-12)
    fs = fd.depth(fd.FuzzyNumber.crisp_point(2, grid), jump_cdf(), "fsimplicial")
    assert abs(fs["value"] - 0.6558) <= 1e-9
    assert fs["witness_u"] in (-1, 1)
    with pytest.raises(fd.FuzzyDepthError, match="unknown depth method"):
        fd.depth(queries[0], pair, "halfspace")


def test_verify(grid):
    report = fd.verify(flat_band(grid), trials=50, seed=3)
    assert report["passed"]
    assert report["backend"] == "sample"
    names = {p["name"]: p["status"] for p in report["properties"]}
    assert names["one_median_is_support_median"] == "pass"
    crisp = fd.verify(jump_cdf(), trials=50, seed=3, grid=grid)
    statuses = {p["name"]: p["status"] for p in crisp["properties"]}
    assert statuses["simplicial_median_is_support_median"] == "documented_exception"
    assert math.isfinite(crisp["members"])
