import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import as_oracle_inputs, doc
from overlaydyn import (
    Basemap,
    Corpus,
    Mode,
    SliceSpec,
    Status,
    build_citation_graph,
    compute_series,
    cumulative_cohort,
    type_a_cross_series,
    type_a_cumulative_series,
    type_b_series,
    type_c_series,
)
from overlaydyn.synthetic import two_phase_corpus

import oracles

UNDEF = Status.UNDEFINED_EMPTY_PROFILE


def spec(mode, years, **kw):
    return SliceSpec(mode, years, **kw)


class TestTypeACross:
    def test_hand_trace(self, three_year_corpus, abc_basemap):
        g = build_citation_graph(three_year_corpus)
        s = type_a_cross_series(three_year_corpus, g, abc_basemap, spec("typeA_cross", (2000, 2002)))
        assert s.years == [2000, 2001, 2002]
        r00, r01, r02 = s.rows
        # 2000: {A .75, B .25} cited by {B .5, C .5}; raw 0.6 over 4 cells
        assert r00.mod.value == pytest.approx(0.15, abs=1e-12)
        assert r00.od_source.value == pytest.approx(0.15, abs=1e-12)
        assert r00.od_target.value == pytest.approx(0.3, abs=1e-12)
        assert r00.odr.value == pytest.approx(2.0, abs=1e-12)
        assert (r00.n_source_docs, r00.n_target_docs) == (2, 2)
        # 2001: {B .5, C .5} cited by {A .5, B .25, C .25}; raw 0.5 over 6 cells
        assert r01.mod.value == pytest.approx(1 / 12, abs=1e-12)
        # 2002: nobody cites
        assert r02.mod.status is UNDEF and r02.od_target.status is UNDEF
        assert r02.status == "empty_target"

    def test_single_field_citers(self, abc_basemap):
        store = Corpus(
            [doc("x", 1990, ["A"]), doc("y", 1991, ["A"], ["x"]), doc("z", 1992, ["A"], ["x"])]
        )
        s = type_a_cross_series(store, build_citation_graph(store), abc_basemap, spec("typeA_cross", (1990, 1990)))
        assert s.rows[0].mod.value == 0
        assert s.rows[0].odr.status is Status.UNDEFINED_ZERO_SOURCE
        assert s.rows[0].status == "zero_source_diversity"


class TestTypeACumulative:
    def test_hand_trace(self, three_year_corpus, abc_basemap):
        g = build_citation_graph(three_year_corpus)
        s = type_a_cumulative_series(
            three_year_corpus, g, abc_basemap, spec("typeA_cumulative", (1999, 2002))
        )
        r99, r00, r01, r02 = s.rows
        assert r99.status == "empty_source;empty_target" and r99.n_source_docs == 0
        assert r00.mod.value == pytest.approx(0.15, abs=1e-12)
        # src {A 3/8, B 3/8, C 1/4}, tgt {A 1/4, B 3/8, C 3/8}: raw 7/16 over 9 cells
        assert r01.mod.value == pytest.approx(7 / 144, abs=1e-12)
        # src {A 5/12, B 1/3, C 1/4}, same tgt: raw 107/240 over 9 cells
        assert r02.mod.value == pytest.approx(107 / 2160, abs=1e-12)
        assert r02.n_source_docs == 6 and r02.n_target_docs == 4

    def test_final_year_uses_whole_corpus(self, three_year_corpus):
        assert cumulative_cohort(three_year_corpus, 2002) == set(three_year_corpus)

    def test_saturation_two_phase(self):
        store, b = two_phase_corpus()
        s = type_a_cumulative_series(store, build_citation_graph(store), b, spec("typeA_cumulative", (2000, 2014)))
        mod = dict(zip(s.years, s.column("mod")))
        # composition enters at 2005 (year 6) and has saturated by 2009 (year 10)
        assert mod[2005] > mod[2009]

    def test_exclude_overlap_flag(self, three_year_corpus, abc_basemap):
        g = build_citation_graph(three_year_corpus)
        s = type_a_cumulative_series(
            three_year_corpus, g, abc_basemap,
            spec("typeA_cumulative", (2001, 2001), exclude_self_citing_overlap=True),
        )
        # the citers of the 2000-2001 aggregate outside it: p5, p6
        assert s.rows[0].n_target_docs == 2


class TestTypeB:
    def test_same_single_field(self, abc_basemap):
        store = Corpus([doc("a", 1, ["A"]), doc("b", 2, ["A"])])
        s = type_b_series(store, abc_basemap, spec("typeB", (1, 2)))
        assert len(s) == 1 and s.rows[0].year == 2 and s.rows[0].mod.value == 0

    def test_pure_shift(self):
        b = Basemap.from_pairs([("A", "B", 1.0)], mode="distance")
        store = Corpus([doc("a", 1, ["A"]), doc("b", 2, ["B"])])
        assert type_b_series(store, b, spec("typeB", (1, 2))).rows[0].mod.value == 1.0

    def test_four_year_drift(self, abc_basemap):
        store = Corpus(
            [
                doc("d1", 1, ["A"]),
                doc("d2", 2, ["A"]),
                doc("d3", 2, ["B"]),
                doc("d4", 3, ["B"]),
                doc("d5", 4, ["B"]),
                doc("d6", 4, ["C"]),
            ]
        )
        s = type_b_series(store, abc_basemap, spec("typeB", (1, 4)))
        assert s.years == [2, 3, 4]
        # raw sums 0.2, 0.2, 0.3 over 2 cells each
        assert s.column("mod") == pytest.approx([0.1, 0.1, 0.15], abs=1e-12)
        assert [r.odr.status for r in s.rows] == [
            Status.UNDEFINED_ZERO_SOURCE,
            Status.OK,
            Status.UNDEFINED_ZERO_SOURCE,
        ]
        assert s.rows[1].odr.value == 0.0


class TestTypeC:
    def test_hand_trace(self, three_year_corpus, abc_basemap):
        g = build_citation_graph(three_year_corpus)
        s = type_c_series(three_year_corpus, g, abc_basemap, spec("typeC", (2000, 2002)))
        assert s.years == [2001, 2002]
        assert s.rows[0].mod.value == pytest.approx(1 / 12, abs=1e-12)
        assert s.rows[1].mod.status is UNDEF

    def test_both_empty(self, abc_basemap):
        store = Corpus([doc("a", 1, ["A"]), doc("b", 2, ["B"])])
        s = type_c_series(store, build_citation_graph(store), abc_basemap, spec("typeC", (1, 2)))
        assert s.rows[0].status == "empty_source;empty_target"

    def test_identical_citing_sets(self, abc_basemap):
        store = Corpus(
            [
                doc("a", 1, ["A"]),
                doc("b", 2, ["B"]),
                doc("c", 3, ["A", "C"], ["a", "b"]),
                doc("d", 3, ["B"], ["a", "b"]),
            ]
        )
        s = type_c_series(store, build_citation_graph(store), abc_basemap, spec("typeC", (1, 2)))
        row = s.rows[0]
        n = 3
        assert row.mod.value == pytest.approx(row.od_source.value / n**2, abs=1e-12)
        assert row.odr.value == 1.0


def test_wrong_mode_rejected(three_year_corpus, abc_basemap):
    with pytest.raises(ValueError):
        type_b_series(three_year_corpus, abc_basemap, spec("typeC", (2000, 2001)))


def test_spec_validation(three_year_corpus):
    with pytest.raises(ValueError):
        SliceSpec("typeB", (2002, 2000))
    assert SliceSpec.for_corpus("typeA-cross", three_year_corpus).year_range == (2000, 2002)
    assert SliceSpec("typeA-cumulative", (1, 2)).mode is Mode.TYPE_A_CUMULATIVE
    with pytest.raises(ValueError):
        SliceSpec.for_corpus("typeB", Corpus())


@pytest.mark.parametrize("mode", [m.value for m in Mode])
@pytest.mark.parametrize("counting", ["fractional", "whole"])
def test_series_match_pipeline_oracle(mode, counting):
    store, b = two_phase_corpus(seed=3, n_years=8, influx_offset=3, per_year=8)
    docs, d = as_oracle_inputs(store, b)
    years = list(range(1999, 2009))
    s = compute_series(store, build_citation_graph(store), b, SliceSpec(mode, (1999, 2008), counting))
    expected = oracles.pipeline_series(docs, d, mode, years, counting)
    assert len(s) == len(expected)
    for row, (year, mod, odr, od_s, od_t) in zip(s.rows, expected):
        assert row.year == year
        for got, want in ((row.mod, mod), (row.odr, odr), (row.od_source, od_s), (row.od_target, od_t)):
            if want is None:
                assert not got.ok
            else:
                assert got.ok and abs(got.value - want) <= 1e-12


@st.composite
def small_world(draw):
    n = draw(st.integers(0, 20))
    docs = []
    for i in range(n):
        year = draw(st.integers(1, 6))
        cats = draw(st.sets(st.sampled_from("ABC"), max_size=2))
        refs = draw(st.sets(st.sampled_from([f"d{j}" for j in range(n)]), max_size=3)) if n else set()
        docs.append(doc(f"d{i}", year, cats, refs))
    return Corpus(docs)


@given(small_world(), st.sampled_from(list(Mode)), st.integers(1, 4), st.integers(0, 4))
@settings(max_examples=120, deadline=None)
def test_series_invariants(store, mode, y0, span):
    b = Basemap.from_pairs([("A", "B", 0.4), ("A", "C", 1.0), ("B", "C", 0.6)], mode="distance")
    sp = SliceSpec(mode, (y0, y0 + span))
    g = build_citation_graph(store)
    s = compute_series(store, g, b, sp)
    expected_rows = span if mode.consecutive else span + 1
    assert len(s) == expected_rows
    assert all(a < c for a, c in zip(s.years, s.years[1:]))
    assert compute_series(store, g, b, sp, workers=4) == s
    for row in s.rows:
        if row.od_source.ok and row.od_target.ok:
            assert 0 <= row.mod.value <= 1
            assert (row.odr.status is Status.UNDEFINED_ZERO_SOURCE) == (row.od_source.value == 0)
        if not row.od_target.ok:
            assert row.mod.status is UNDEF


def test_csv_undefined_cells(tmp_path, three_year_corpus, abc_basemap):
    g = build_citation_graph(three_year_corpus)
    s = type_a_cross_series(three_year_corpus, g, abc_basemap, spec("typeA_cross", (2000, 2002)))
    s.write_csv(tmp_path / "s.csv")
    lines = (tmp_path / "s.csv").read_text().splitlines()
    assert lines[0] == "year,n_source,n_target,od_source,od_target,mod,odr,status"
    assert lines[1].startswith("2000,2,2,") and lines[1].endswith(",ok")
    assert lines[3].split(",")[4:] == ["", "", "", "empty_target"]
