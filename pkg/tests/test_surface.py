"""Surface configurations: parsing, validation, pullbacks, constraints."""

from fractions import Fraction

import pytest

from lctdv import fixtures
from lctdv.exactlin import QVector
from lctdv.surface import (ParseError, UnknownCurve, ValidationError,
                           curve_row, exceptional_rows, load_surface,
                           make_divisor, nonneg_constraints, solve_pullback,
                           validate_config)


@pytest.fixture(scope="module")
def a4():
    return fixtures.load_surface_fixture("A4.deg1")


class TestFixtureCatalogWellFormed:
    def test_every_surface_parses_and_validates(self, all_surface_names):
        for name in all_surface_names:
            cfg = fixtures.load_surface_fixture(name)
            assert validate_config(cfg) == [], name

    def test_lemma_catalog_matches_surface_catalog(self, all_surface_names):
        assert sorted(fixtures.list_lemmas()) == all_surface_names

    def test_unknown_fixture(self):
        with pytest.raises(fixtures.FixtureNotFound):
            fixtures.load_surface_fixture("no-such-surface")


class TestStructure:
    def test_labels_and_vars(self, a4):
        assert a4.labels == ("E1", "E2", "E3", "E4")
        assert a4.var_names == ("a1", "a2", "a3", "a4")
        assert a4.label_index("E3") == 2
        with pytest.raises(UnknownCurve):
            a4.label_index("E9")

    def test_block_letters_follow_declaration_order(self):
        cfg = fixtures.load_surface_fixture("A5+A2+A1.deg1")
        # [TRIVIAL] second block gets letter b, third letter c.
        assert cfg.var_names[:5] == ("a1", "a2", "a3", "a4", "a5")
        assert cfg.var_names[5:] == ("b1", "b2", "c1")

    def test_exceptional_matrix_is_block_diagonal(self):
        cfg = fixtures.load_surface_fixture("E7+A1.deg1")
        m = cfg.exceptional_matrix
        assert m.is_symmetric()
        assert all(m.entry(i, i) == -2 for i in range(8))
        # [TRIVIAL] no intersections across blocks.
        assert all(m.entry(7, j) == 0 for j in range(7))


class TestPullback:
    def test_orthogonality(self, a4):
        # [TRIVIAL] defining property: M c = -profile.
        profile = QVector([0, 1, 1, 0])
        c = solve_pullback(a4, profile)
        assert a4.exceptional_matrix.mul_vector(c) == -profile

    def test_every_declared_coefficient_vector(self, all_surface_names):
        # [PAPER] the fixtures freeze the printed coefficient formulas.
        for name in all_surface_names:
            cfg = fixtures.load_surface_fixture(name)
            for curve in cfg.aux_curves:
                if curve.declared_coeffs is None:
                    continue
                got = solve_pullback(cfg, curve.profile)
                assert got == curve.declared_coeffs, (name, curve.name)

    def test_make_divisor_combines_pullbacks(self, a4):
        d1 = make_divisor(a4, {"C": Fraction(1, 2)})
        d2 = make_divisor(a4, {"C": Fraction(1, 2), "Z": 0})
        assert d1.exceptional_part == d2.exceptional_part
        with pytest.raises(UnknownCurve):
            make_divisor(a4, {"missing": 1})


class TestConstraintSystems:
    def test_variables_and_row_count(self, a4):
        s = nonneg_constraints(a4, curves="all")
        assert set(a4.var_names) <= set(s.variables)
        only_exceptional = nonneg_constraints(a4, curves="none")
        assert len(s.constraints) > len(only_exceptional.constraints)

    def test_exceptional_rows_are_chain_rows(self, a4):
        # [TRIVIAL] for a chain with unit scales, row j is
        # 2 a_j - a_{j-1} - a_{j+1}.
        rows = exceptional_rows(a4)
        assert len(rows) == len(a4.labels)
        sample = {"a1": Fraction(1, 2), "a2": Fraction(1, 3),
                  "a3": Fraction(1, 5), "a4": Fraction(1, 7)}
        padded = [Fraction(0), *(sample[v] for v in a4.var_names),
                  Fraction(0)]
        for j, row in enumerate(rows, start=1):
            expected = 2 * padded[j] - padded[j - 1] - padded[j + 1]
            assert row.evaluate(sample) == expected

    def test_curve_row_nonnegative_at_origin(self, a4):
        zero = {v: 0 for v in a4.var_names}
        for curve in a4.aux_curves:
            # [TRIVIAL] with no exceptional weight the strict transform
            # keeps its full anticanonical degree.
            assert curve_row(a4, curve).evaluate(zero) == \
                curve.antican_degree


class TestParserErrors:
    def test_junk_rejected(self):
        with pytest.raises(ParseError):
            load_surface("not a fixture at all\n")

    def test_wrong_declared_coefficients_rejected(self):
        # Corrupt a known-good fixture: declared pullback coefficients
        # that contradict the intersection matrix must fail validation.
        text = fixtures.surface_path("A4.deg1").read_text(encoding="utf-8")
        assert "coeffs=E1=1" in text
        bad = text.replace("coeffs=E1=1", "coeffs=E1=2", 1)
        with pytest.raises(ValidationError):
            load_surface(bad)
