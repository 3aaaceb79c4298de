import pytest
from gmpy2 import mpq

from truncdim import generators as gen
from truncdim import formulas as f


def _exact(fv):
    assert fv.is_exact
    return fv.value


def test_path_small_and_medium_branches():
    assert _exact(f.path_kf(3, 1)) == 1
    assert _exact(f.path_kf(5, 1)) == mpq(3, 2)  # (8-n)/(7-n) at k=1
    assert _exact(f.path_kf(4, 1)) == mpq(4, 3)
    assert _exact(f.path_kf(7, 2)) == mpq(3, 2)


def test_path_residue_branches():
    assert _exact(f.path_kf(9, 1)) == mpq(5, 2)  # n % 4 == 1
    assert _exact(f.path_kf(10, 1)) == 3  # n % 4 == 2
    assert _exact(f.path_kf(11, 1)) == 3  # n % 4 == 3
    fv = f.path_kf(8, 1)  # n % 4 == 0: interval only
    assert not fv.is_exact
    assert (fv.lo, fv.hi) == (2, mpq(5, 2))
    with pytest.raises(ValueError):
        fv.value
    # wider truncation: residues k+3..2k+1 are also interval-only
    fv2 = f.path_kf(11, 3)  # 11 % 8 == 3 == k
    assert _exact(fv2) == mpq(2)
    fv3 = f.path_kf(14, 3)  # 14 % 8 == 6 in k+3..2k+1
    assert not fv3.is_exact and (fv3.lo, fv3.hi) == (2, mpq(5, 2))


def test_path_truncation_boundary():
    # k >= n-2 makes truncation inert: value 1 like the untruncated path
    for n in range(2, 9):
        assert _exact(f.path_kf(n, n - 2 if n > 2 else 1)) == 1


def test_cycle_truncation_boundary():
    # k >= diameter-1 reproduces the untruncated parity formula
    for n in range(4, 16):
        k = max(1, n // 2 - 1)
        want = mpq(n, n - 1) if n % 2 else mpq(n, n - 2)
        assert _exact(f.cycle_kf(n, k)) == want


def test_cycle_branches():
    assert _exact(f.cycle_kf(5, 1)) == mpq(5, 4)
    assert _exact(f.cycle_kf(4, 1)) == 2
    assert _exact(f.cycle_kf(3, 1)) == mpq(3, 2)
    assert _exact(f.cycle_kf(12, 2)) == 2
    assert _exact(f.cycle_kf(7, 3)) == mpq(7, 6)  # odd, below saturation
    assert _exact(f.cycle_kf(8, 3)) == mpq(4, 3)  # even, below saturation
    assert _exact(f.cycle_kf(10, 1)) == mpq(5, 2)


def test_fan_branches():
    assert _exact(f.fan_kf(1, 1)) == 1
    assert _exact(f.fan_kf(2, 1)) == mpq(3, 2)
    assert _exact(f.fan_kf(3, 2)) == 2
    assert _exact(f.fan_kf(4, 3)) == mpq(5, 3)
    assert _exact(f.fan_kf(5, 1)) == mpq(5, 3)
    assert _exact(f.fan_kf(6, 1)) == 2
    assert _exact(f.fan_kf(7, 1)) == 2
    fv = f.fan_kf(8, 1)
    assert not fv.is_exact and (fv.lo, fv.hi) == (2, mpq(5, 2))
    assert _exact(f.fan_kf(9, 2)) == mpq(5, 2)


def test_wheel_branches():
    assert _exact(f.wheel_kf(3, 1)) == 2
    assert _exact(f.wheel_kf(4, 2)) == 2
    assert _exact(f.wheel_kf(5, 1)) == mpq(3, 2)
    assert _exact(f.wheel_kf(6, 1)) == mpq(3, 2)
    assert _exact(f.wheel_kf(11, 2)) == mpq(11, 4)


def test_multipartite():
    assert _exact(f.multipartite_f([1, 2])) == 1
    assert _exact(f.multipartite_f([2, 3])) == mpq(5, 2)
    assert _exact(f.multipartite_f([1] * 5)) == mpq(5, 2)
    assert _exact(f.multipartite_f([1, 4])) == 2


def test_petersen_and_grid():
    for k in (1, 2, 9):
        assert _exact(f.petersen_kf(k)) == mpq(5, 3)
    assert _exact(f.grid_f(2, 2)) == 2
    assert _exact(f.grid_f(6, 5)) == 2


def test_tree_formulas():
    star = gen.spider([1, 1, 1])
    assert _exact(f.tree_f(star)) == mpq(3, 2)
    assert f.tree_dim(star) == 2
    cat = gen.leaf_cluster_caterpillar(2, 3)
    assert _exact(f.tree_f(cat)) == 3
    assert f.tree_dim(cat) == 4
    lopsided = gen.spider([2, 1, 1])  # sigma=3, no single-terminal majors
    assert _exact(f.tree_f(lopsided)) == mpq(3, 2)
    for n in (2, 5, 9):
        assert _exact(f.tree_f(gen.path(n))) == 1
    with pytest.raises(ValueError):
        f.tree_dim(gen.path(6))


def test_dim_k_formula_examples():
    assert f.path_cycle_dim_k(10, 1, "cycle") == 4
    assert f.path_cycle_dim_k(4, 1, "path") == 2
    assert f.path_cycle_dim_k(3, 1, "path") == 1
    assert f.path_cycle_dim_k(9, 1, "cycle") == 4
    assert f.path_cycle_dim_k(9, 1, "path") == 4
    assert f.path_cycle_dim_k(3, 5, "cycle") == 2
    # middle residue branch: k=2, period 8, residue 5 -> floor((2n+4k-1)/(3k+2))
    assert f.path_cycle_dim_k(13, 2, "cycle") == (2 * 13 + 7) // 8


def test_formula_input_validation():
    for bad in [
        lambda: f.path_kf(1, 1),
        lambda: f.path_kf(4, 0),
        lambda: f.cycle_kf(2, 1),
        lambda: f.fan_kf(0, 1),
        lambda: f.wheel_kf(2, 1),
        lambda: f.multipartite_f([4]),
        lambda: f.grid_f(1, 5),
        lambda: f.path_cycle_dim_k(2, 1, "hypercube"),
        lambda: f.path_cycle_dim_k(1, 1, "path"),
    ]:
        with pytest.raises(ValueError):
            bad()


def test_interval_handling():
    fv = f.interval(1, mpq(3, 2), "demo")
    assert fv.contains(mpq(5, 4)) and not fv.contains(mpq(7, 4))
    assert str(fv) == "1/1..3/2"
    assert str(f.exact(mpq(5, 3))) == "5/3"
    with pytest.raises(ValueError):
        f.interval(2, 1)


def test_every_residue_class_is_covered():
    # the path case analysis must answer every (n, k) without gaps
    for k in range(1, 6):
        for n in range(2, 60):
            fv = f.path_kf(n, k)
            assert fv.lo <= fv.hi
        for n in range(3, 60):
            assert f.cycle_kf(n, k).is_exact
        for n in range(2, 60):
            assert f.path_cycle_dim_k(n, k, "path") >= 1
        for n in range(3, 60):
            assert f.path_cycle_dim_k(n, k, "cycle") >= 2
