"""Catalog reproduction and the Kähler-Einstein criterion."""

from fractions import Fraction

import pytest

from lctdv.harness import (KE_SINGULARITY_LISTS, TableEntry, TableFormatError,
                           check_entry, fixture_name, ke_criterion, ke_flags,
                           load_catalog, load_known_issues,
                           parse_singularity_list, parse_tables_tsv,
                           reference_reason)


def entry(degree, sings, condition="", lct="1/2"):
    if condition == "-":
        condition = ""
    return TableEntry(degree, sings, condition, Fraction(lct), "test")


class TestSingularityLists:
    @pytest.mark.parametrize("text,expected", [
        ("A3", ["A3"]),
        ("2A3+2A1", ["A3", "A3", "A1", "A1"]),
        ("E7+A1", ["E7", "A1"]),
        ("D4+3A1", ["D4", "A1", "A1", "A1"]),
        ("smooth", []),
    ])
    def test_parse(self, text, expected):
        assert parse_singularity_list(text) == expected


class TestTablesTsv:
    def test_parse_minimal(self):
        entries = parse_tables_tsv("# comment\n1\tE8\t-\t1/6\n")
        # "-" is the unconditional marker and normalizes to "".
        assert entries == [TableEntry(1, "E8", "", Fraction(1, 6),
                                      "catalog")]

    def test_wrong_column_count_rejected(self):
        with pytest.raises(TableFormatError):
            parse_tables_tsv("1\tE8\t1/6\n")

    def test_duplicate_key_rejected(self):
        with pytest.raises(TableFormatError):
            parse_tables_tsv("1\tE8\t-\t1/6\n1\tE8\t-\t1/4\n")

    def test_bundled_catalog_loads(self):
        entries = load_catalog()
        keys = {e.key for e in entries}
        assert (1, "E8", "") in keys
        assert (1, "A7", "reducible-ramification") in keys
        assert len(keys) == len(entries)

    def test_known_issue_ledger_has_exactly_one_entry(self):
        issues = load_known_issues()
        assert issues == {
            (4, "A3+2A1", ""): (Fraction(1, 3), Fraction(1, 4))}


class TestFixtureResolution:
    def test_plain_and_conditional_names(self):
        assert fixture_name(entry(1, "E8")) == "E8.deg1"
        assert fixture_name(entry(1, "A3+A1", "no-cusp")) == \
            "A3+A1.deg1.no-cusp"
        assert fixture_name(entry(1, "A3+A1", "cusp-other")) == \
            "A3+A1.deg1.cusp-smooth"
        assert fixture_name(
            entry(1, "A7", "reducible-ramification")) == "A7r.deg1"

    def test_missing_fixture_resolves_to_none(self):
        assert fixture_name(entry(1, "smooth")) is None
        assert fixture_name(entry(3, "3A2")) is None

    def test_reference_classification(self):
        assert reference_reason(entry(9, "smooth")) is not None
        assert reference_reason(entry(3, "E6")) is not None
        assert reference_reason(entry(1, "4A2", "no-cusp")) is not None
        assert reference_reason(entry(1, "E8")) is None


class TestCheckEntry:
    def test_verified_entry(self):
        r = check_entry(entry(1, "E8", "-", "1/6"), {}, chain_depth=1)
        assert r.status == "verified"
        assert r.computed == Fraction(1, 6)
        assert r.replay_passed

    def test_ledgered_conflict_is_known_issue(self):
        ledger = load_known_issues()
        r = check_entry(entry(4, "A3+2A1", "-", "1/3"), ledger,
                        chain_depth=1)
        assert r.status == "KNOWN-ISSUE"
        assert r.computed == Fraction(1, 4)

    def test_unledgered_conflict_is_mismatch(self):
        r = check_entry(entry(4, "A3+2A1", "-", "1/3"), {}, chain_depth=1)
        assert r.status == "MISMATCH"


class TestReport:
    def test_catalog_report(self, tables_report):
        counts = tables_report.counts()
        assert tables_report.ok
        assert counts.get("MISMATCH", 0) == 0
        assert counts.get("MISSING", 0) == 0
        assert counts["KNOWN-ISSUE"] == 1
        assert counts["verified"] >= 50
        assert tables_report.lines()[-1].startswith("result: PASS")
        assert len(tables_report.tsv_lines()) == len(tables_report.reports)


class TestKECriterion:
    def test_boundary(self):
        # [TRIVIAL] true exactly above 2/3.
        assert not ke_criterion(Fraction(2, 3))
        assert ke_criterion(Fraction(2, 3) + Fraction(1, 10 ** 9))
        assert not ke_criterion(Fraction(1, 2))
        assert ke_criterion(Fraction(3, 4))

    def test_monotone(self):
        grid = sorted(Fraction(n, 24) for n in range(0, 49))
        values = [ke_criterion(q) for q in grid]
        # [TRIVIAL] once true, stays true.
        assert values == sorted(values)

    def test_flags_for_asserted_lists(self, tables_report):
        flags = {f.singularities: f for f in ke_flags(tables_report)}
        assert set(flags) == set(KE_SINGULARITY_LISTS)
        for name, flag in flags.items():
            assert flag.ke, name
            assert flag.values, name
            for _condition, value in flag.values:
                assert ke_criterion(value)

    def test_conditional_lists_carry_condition_tags(self, tables_report):
        flags = {f.singularities: f for f in ke_flags(tables_report)}
        conditions = {c for c, _v in flags["A4+A1"].values}
        assert conditions == {"no-cusp-A1-A2", "cusp-A1"}
        conditions = {c for c, _v in flags["A3+A1"].values}
        assert conditions == {"no-cusp", "cusp-A1", "cusp-other"}
        assert {c for c, _v in flags["A3"].values} == {"-"}
