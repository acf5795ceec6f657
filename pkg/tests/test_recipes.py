import numpy as np
import pytest

from tzlab import RecipeError, build_grid, field_from_recipe, parse_recipe


class TestParse:
    def test_sampled_expression(self):
        fn = parse_recipe("1+0.5*cos(2*pi*x)")
        x = np.linspace(0, 1, 7)
        y = np.zeros_like(x)
        assert np.allclose(fn(x, y), 1 + 0.5 * np.cos(2 * np.pi * x))

    def test_both_coordinates(self):
        fn = parse_recipe("sin(2*pi*x)*cos(2*pi*y)+y")
        x = np.array([0.1, 0.4])
        y = np.array([0.3, 0.9])
        assert np.allclose(fn(x, y), np.sin(2 * np.pi * x) * np.cos(2 * np.pi * y) + y)

    def test_precedence_and_associativity(self):
        assert parse_recipe("2*3+4*5")(0.0, 0.0) == 26
        assert parse_recipe("2-3-4")(0.0, 0.0) == -5
        assert parse_recipe("2*(3+4)")(0.0, 0.0) == 14
        assert parse_recipe("-2*3")(0.0, 0.0) == -6
        assert parse_recipe("--2")(0.0, 0.0) == 2

    def test_scientific_numbers(self):
        assert parse_recipe("1e-2+.5")(0.0, 0.0) == pytest.approx(0.51)

    @pytest.mark.parametrize("bad", ["", "   ", "x/y", "foo(x)", "1+", "(1", "1 2", "x^2", "1..2"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(RecipeError):
            parse_recipe(bad)


class TestFieldFromRecipe:
    def test_matches_direct_sampling(self):
        grid = build_grid(32)
        f = field_from_recipe("1+0.5*cos(2*pi*x)", grid)
        expected = 1 + 0.5 * np.cos(2 * np.pi * grid.X)
        assert np.allclose(f.values, expected)

    def test_constant_broadcasts(self):
        grid = build_grid(16)
        f = field_from_recipe("2", grid)
        assert f.values.shape == (16, 16)
        assert np.all(f.values == 2.0)
