import json

import pytest

from overlaydyn import Basemap, Corpus, DocumentRecord


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker:
            item.user_properties.append(("acceptance", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome == "passed":
                continue
            label = dict(getattr(rep, "user_properties", [])).get("acceptance")
            if label:
                lines.append((label, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for label, verdict in sorted(set(lines)):
            terminalreporter.write_line(f"{verdict}  {label}")


@pytest.fixture
def abc_basemap():
    """Three categories: d(A,B)=0.4, d(A,C)=1.0, d(B,C)=0.6."""
    return Basemap.from_pairs([("A", "B", 0.4), ("A", "C", 1.0), ("B", "C", 0.6)], mode="distance")


def doc(doc_id, year, cats=(), refs=()):
    return DocumentRecord(doc_id, year, frozenset(cats), frozenset(refs))


@pytest.fixture
def three_year_corpus():
    """Hand-built citation fixture used by the dynamics and CLI tests."""
    return Corpus(
        [
            doc("p1", 2000, ["A"]),
            doc("p2", 2000, ["A", "B"]),
            doc("p3", 2001, ["B"], ["p1"]),
            doc("p4", 2001, ["C"], ["p1", "p2"]),
            doc("p5", 2002, ["B", "C"], ["p3", "p4"]),
            doc("p6", 2002, ["A"], ["p3"]),
        ]
    )


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps(r) + "\n")
    return path


def as_oracle_inputs(corpus, basemap):
    """Plain dict/list view of package objects for the brute-force oracles."""
    docs = [
        {"id": d.doc_id, "year": d.year, "categories": sorted(d.categories), "references": sorted(d.references)}
        for d in corpus.records()
    ]
    d = {a: {b: basemap.distance(a, b) for b in basemap.categories} for a in basemap.categories}
    return docs, d
