import pytest

import guesswork as gw


class TestConstruction:
    def test_basic(self):
        e = gw.make_ensemble([[1, 0, 0], [0, 1, 0]], 1)
        assert e.n == 2 and e.dim == 3 and e.ring == gw.INTEGERS

    def test_quadratic_coercion(self):
        e = gw.make_ensemble([[(0, 0), (2, 0), (1, 1)]], (10, 2), k=5)
        assert e.vectors[0][2] == gw.quadratic(5, 1, 1)
        assert e.scale == gw.quadratic(5, 10, 2)

    def test_plain_ints_embed_into_quadratic(self):
        e = gw.make_ensemble([[1, 0, 0]], 1, k=2)
        assert e.vectors[0][0] == gw.quadratic(2, 1, 0)

    def test_pairs_rejected_over_integers(self):
        with pytest.raises(ValueError, match="quadratic"):
            gw.make_ensemble([[(1, 1), 0, 0]], 3)

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError, match="identical"):
            gw.make_ensemble([[1, 0, 0], [1, 0, 0]], 1)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            gw.make_ensemble([], 1)

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError, match="dimension"):
            gw.make_ensemble([[1, 0, 0], [1, 0]], 1)

    def test_norm_above_scale_rejected(self):
        with pytest.raises(ValueError, match="squared norm"):
            gw.make_ensemble([[2, 0, 0]], 1)

    def test_nonpositive_scale_rejected(self):
        with pytest.raises(ValueError, match="scale"):
            gw.make_ensemble([[0, 0, 0]], 0)
        with pytest.raises(ValueError, match="scale"):
            gw.make_ensemble([[0, 0, 0]], -2)

    def test_bad_coordinate_reports_position(self):
        with pytest.raises(ValueError, match=r"vectors\[1\]\[2\]"):
            gw.make_ensemble([[1, 0, 0], [0, 0, "x"]], 1)


class TestHelpers:
    def test_antipode_map(self):
        e = gw.make_ensemble([[1, 0, 0], [-1, 0, 0], [0, 1, 0]], 1)
        assert e.antipode_map() == [1, 0, None]

    def test_zero_index(self):
        e = gw.make_ensemble([[1, 0, 0], [0, 0, 0]], 1)
        assert e.zero_index() == 1
        e = gw.make_ensemble([[1, 0, 0]], 1)
        assert e.zero_index() is None

    def test_dot_and_norm(self):
        a = tuple(gw.integer(c) for c in (1, 2, 3))
        b = tuple(gw.integer(c) for c in (4, -5, 6))
        assert gw.vec_dot(a, b) == gw.integer(12)
        assert gw.norm_sq(a) == gw.integer(14)
