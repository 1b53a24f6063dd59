import pytest
from hypothesis import given
from hypothesis import strategies as st

from antlab.engine import new_universe
from antlab.rules import from_code
from antlab.symmetry import (
    MIRROR_DIAG,
    MIRROR_V,
    POINT,
    Isometry,
    candidates,
    check_isometry,
    detect_symmetries,
    symmetry_scan,
)
from antlab.truchet import tour

cells = st.tuples(st.integers(-50, 50), st.integers(-50, 50))
kinds = st.sampled_from([POINT, MIRROR_V, "mirrorHorizontal", MIRROR_DIAG, "mirrorAntiDiagonal"])


@given(kinds, st.tuples(st.integers(-20, 20), st.integers(-20, 20)), cells)
def test_isometries_are_involutions(kind, anchor2, c):
    iso = Isometry(kind, anchor2)
    m = iso(c)
    if m is not None:
        assert iso(m) == c


def test_single_cell_has_every_symmetry():
    u = new_universe("LR").step()
    assert check_isometry(u, Isometry(POINT, (0, 0)))
    assert len(detect_symmetries(u).found) == 3


def test_ant12_t4_mirror_through_home_edge(ant12_t4):
    # cell index 0.5 is the vertical line through the home edge
    assert check_isometry(ant12_t4, Isometry(MIRROR_V, (1, -1)))
    assert detect_symmetries(ant12_t4).mirror


@pytest.mark.parametrize("t", [184, 368, 472])
def test_ant2_central_symmetry(t):
    u = new_universe("LR").run_until(t)
    rep = detect_symmetries(u)
    assert rep.central
    xmin, xmax, ymin, ymax = u.bounding_box()
    assert check_isometry(u, Isometry(POINT, (xmin + xmax, ymin + ymax)))


def test_ant2_asymmetric_between():
    assert not detect_symmetries(new_universe("LR").run_until(300)).found


@pytest.mark.parametrize("rule, t", [("LLRR", 16_464), ("LRRL", 38_836)])
def test_figure_times_are_mirror_symmetric(rule, t):
    u = new_universe(rule).run_until(t)
    assert u.at_home
    assert detect_symmetries(u).mirror


def test_body_text_time_for_ant9_is_not_a_return():
    u = new_universe("LRRL").run_until(36_836)
    assert not u.at_home
    assert not detect_symmetries(u).mirror


def test_scan_on_return_ant12():
    reps = symmetry_scan("LLRR", 40, on_return=True)
    assert [r.time for r in reps][:4] == [4, 8, 28, 32]
    assert all(r.mirror for r in reps)


def test_scan_on_step_ant2():
    times = {r.time for r in symmetry_scan("LR", 500) if r.central}
    assert {184, 368, 472} <= times


def test_ant2_central_symmetry_ceases():
    reps = symmetry_scan("LR", 20_000)
    # last symmetric time found by simulation
    assert max(r.time for r in reps) == 473


def test_scan_lines_format():
    rep = symmetry_scan("LLRR", 4, on_return=True)[0]
    assert "4 mirrorVertical 0.5 -0.5" in list(rep.lines())


def test_diagonal_axes_behind_flag():
    box = (0, 3, 0, 3)
    assert len(candidates(box)) == 3
    assert len(candidates(box, diagonals=True)) == 5
    u = new_universe("LLRR").run_until(4)
    assert not any(i.kind == MIRROR_DIAG for i in detect_symmetries(u).found)
    assert any(i.kind == MIRROR_DIAG for i in detect_symmetries(u, diagonals=True).found)


def test_empty_track_rejected():
    with pytest.raises(ValueError):
        detect_symmetries(new_universe("LR"))
    with pytest.raises(ValueError):
        symmetry_scan("LR", 0)


@pytest.mark.parametrize("code", [12, 48, 9])
def test_symmetry_survives_tours(code):
    """A mirror fixing the home edge persists through every tour along the principal contour."""
    home_mirror = Isometry(MIRROR_V, (1, 0))
    u = new_universe(from_code(code))
    u.run_to_next_home(100)
    for _ in range(20):
        assert check_isometry(u, home_mirror)
        assert tour(u).lemma1
        assert check_isometry(u, home_mirror)
