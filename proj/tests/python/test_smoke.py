"""End-to-end smoke tests for the Python bindings."""

import pytest

import ferrers


def test_chess_count_and_conjugate():
    assert ferrers.chess_count([6, 6, 4, 1, 1, 1]) == (9, 10)
    assert ferrers.conjugate([6, 6, 4, 1, 1, 1]) == [6, 3, 3, 3, 2, 2]
    assert ferrers.signed_sum([4, 3, 3, 1]) == -1
    assert not ferrers.is_distinct([6, 6, 4, 1, 1, 1])
    assert ferrers.staircase(3) == [3, 2, 1]


def test_partition_validation_raises():
    with pytest.raises(ValueError):
        ferrers.chess_count([1, 2])
    with pytest.raises(ValueError):
        ferrers.chess_count([0])


def test_diagonal_profile_bijection():
    s = ferrers.from_partition([6, 6, 4, 1, 1, 1])
    assert s == [1, 2, 3, 4, 4, 4, 1]
    assert ferrers.bw(s) == (9, 10)
    assert ferrers.to_distinct_partition([1, 2, 3, 4, 5, 4]) == [6, 5, 4, 3, 1]
    assert ferrers.is_castelnuovo([1, 2, 2])
    assert not ferrers.is_castelnuovo([1, 3])


def test_reduction():
    r = ferrers.reduce_classify([1, 2, 3, 4, 4, 4, 1])
    assert r["steps"] == 8
    assert r["terminal"] == "staircase"
    assert r["u"] == 1
    traced = ferrers.reduce_classify([1, 2, 3, 4, 4, 4, 1], keep_trace=True)
    assert len(traced["trace"]) == 9
    assert traced["trace"][-1] == [1, 2]
    assert ferrers.star([1, 2, 3]) == [1, 1, 2]


def test_realizability_and_witnesses():
    assert ferrers.is_realizable_bw(9, 10)
    assert not ferrers.is_realizable_bw(2, 0)
    assert ferrers.witness_partition(9, 10) == [6, 5, 4, 3, 1]
    assert ferrers.witness_castelnuovo(9, 10) == [1, 2, 3, 4, 5, 4]
    with pytest.raises(ValueError):
        ferrers.witness_partition(2, 0)
    assert ferrers.thmb_decompose(9, 10) == {"family": "minus", "k": 1, "l": 8}
    assert ferrers.thmb_compose("minus", 1, 8) == (9, 10)
    assert ferrers.thmb_decompose(2, 0) is None


def test_nc_coordinates():
    assert ferrers.nc_from_bw(9, 10) == (19, -1)
    assert ferrers.bw_from_nc(19, -1) == (9, 10)
    assert ferrers.bw_from_nc(4, 1) is None
    assert ferrers.is_realizable_nc(11, -1)
    assert not ferrers.is_realizable_nc(11, 3)
    assert ferrers.equality_staircase(2) == {"m": 3, "partition": [3, 2, 1]}


def test_counting_and_enumeration():
    assert ferrers.count_by_bw(3) == {(1, 2): (1, 1), (2, 1): (2, 1)}
    assert ferrers.partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert ferrers.distinct_partitions(6) == [[6], [5, 1], [4, 2], [3, 2, 1]]
    assert ferrers.enumerate_castelnuovo(3) == [[1, 1, 1], [1, 2]]
    assert ferrers.census(1) == [(0, 0, 0, 1, 1), (1, 1, 0, 1, 1)]


def test_verify_range():
    report = ferrers.verify_range(8)
    assert report["pass"] is True
    assert report["total_failures"] == 0
    assert report["checks_run"] == ferrers.check_names()
    assert "result: PASS" in report["text"]
    subset = ferrers.verify_range(6, checks=["signed_sum"], jobs=2)
    assert subset["checks_run"] == ["signed_sum"]
    assert subset["pass"] is True


def test_render():
    art = ferrers.render_ferrers([4, 3, 3, 1], style="problem10")
    assert art.count("+") - art.count("-") == -1
    rows = ferrers.render_ferrers([6, 6, 4, 1, 1, 1])
    assert rows.count("#") == 9
    assert rows.count(".") == 10
    cols = ferrers.render_castelnuovo([1, 2, 3, 4, 4, 4, 1])
    assert cols.count("#") == 9
    assert cols.count(".") == 10
    svg = ferrers.render_ferrers([2, 1], format="svg")
    assert svg.count("<rect") == 3
    with pytest.raises(ValueError):
        ferrers.render_ferrers([2, 1], style="castelnuovo")


def test_analyze():
    record = ferrers.analyze([6, 6, 4, 1, 1, 1])
    assert record["b"] == 9
    assert record["w"] == 10
    assert record["castelnuovo"] == [1, 2, 3, 4, 4, 4, 1]
    assert record["form"] == {"family": "minus", "k": 1, "l": 8}
    assert record["reduction"]["steps"] == 8
    assert record["nc"] == {"n": 19, "c": -1}
