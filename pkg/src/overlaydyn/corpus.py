"""Publication records, the within-corpus citation graph, and snowball expansion."""

from __future__ import annotations

import csv
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import networkx as nx

from .errors import DuplicateDocId, MalformedRecord, SeedNotInStore, UnknownDoc

__all__ = [
    "DocumentRecord",
    "Corpus",
    "CitationGraph",
    "ExpansionRow",
    "ExpansionReport",
    "ingest_corpus",
    "write_corpus",
    "build_citation_graph",
    "citing_set",
    "snowball_expand",
    "cohort",
    "cumulative_cohort",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DocumentRecord:
    """A publication: id, year, subject categories and cited doc ids.

    Duplicate references collapse (they are sets) and a reference to the
    document itself is dropped.
    """

    doc_id: str
    year: int
    categories: frozenset = frozenset()
    references: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "categories", frozenset(self.categories))
        refs = frozenset(self.references)
        object.__setattr__(self, "references", refs - {self.doc_id})

    def to_json(self) -> dict:
        return {
            "id": self.doc_id,
            "year": self.year,
            "categories": sorted(self.categories),
            "references": sorted(self.references),
        }


class Corpus(Mapping):
    """Immutable store of :class:`DocumentRecord` keyed by doc id.

    Iteration follows insertion order (file order for ingested corpora).
    """

    def __init__(self, docs: Iterable[DocumentRecord] = ()):
        self._docs = {}
        for doc in docs:
            if doc.doc_id in self._docs:
                raise DuplicateDocId(f"duplicate doc id {doc.doc_id!r}")
            self._docs[doc.doc_id] = doc

    def __getitem__(self, doc_id):
        return self._docs[doc_id]

    def __iter__(self):
        return iter(self._docs)

    def __len__(self):
        return len(self._docs)

    def __repr__(self):
        return f"Corpus({len(self)} docs)"

    def records(self):
        return self._docs.values()

    def subset(self, doc_ids) -> "Corpus":
        doc_ids = set(doc_ids)
        missing = doc_ids - self._docs.keys()
        if missing:
            raise UnknownDoc(missing)
        return Corpus(d for i, d in self._docs.items() if i in doc_ids)

    def years(self) -> list:
        return sorted({d.year for d in self._docs.values()})

    def categories(self) -> set:
        return set().union(*(d.categories for d in self._docs.values()))


def _records(docs):
    if isinstance(docs, Corpus):
        return docs.records()
    return docs


def ingest_corpus(path) -> Corpus:
    """Read a JSON-lines corpus (keys ``id``, ``year``, ``categories``, ``references``).

    Blank lines are skipped. References to documents outside the file are
    kept as-is.
    """
    docs = []
    seen = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(f"{path}:{lineno}: invalid JSON ({exc.msg})") from None
            doc = _parse_record(obj, f"{path}:{lineno}")
            if doc.doc_id in seen:
                raise DuplicateDocId(
                    f"{path}:{lineno}: doc id {doc.doc_id!r} already defined on line {seen[doc.doc_id]}"
                )
            seen[doc.doc_id] = lineno
            docs.append(doc)
    return Corpus(docs)


def _parse_record(obj, where):
    if not isinstance(obj, dict):
        raise MalformedRecord(f"{where}: record must be a JSON object")
    missing = [k for k in ("id", "year", "categories", "references") if k not in obj]
    if missing:
        raise MalformedRecord(f"{where}: missing keys {', '.join(missing)}")
    doc_id, year = obj["id"], obj["year"]
    if not isinstance(doc_id, str) or not doc_id:
        raise MalformedRecord(f"{where}: 'id' must be a non-empty string")
    if isinstance(year, bool) or not isinstance(year, int):
        raise MalformedRecord(f"{where}: 'year' must be an integer")
    for key in ("categories", "references"):
        value = obj[key]
        if not isinstance(value, list) or not all(isinstance(v, str) and v for v in value):
            raise MalformedRecord(f"{where}: {key!r} must be a list of non-empty strings")
    return DocumentRecord(doc_id, year, frozenset(obj["categories"]), frozenset(obj["references"]))


def write_corpus(docs, path) -> None:
    """Write records as JSON lines, in the given order, with sorted lists."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for doc in _records(docs):
            fh.write(json.dumps(doc.to_json(), ensure_ascii=False) + "\n")


class CitationGraph:
    """Directed citing -> cited graph restricted to documents in one corpus.

    Attributes
    ----------
    graph : networkx.DiGraph
        Nodes are doc ids; an edge ``a -> b`` means ``a`` cites ``b``.
    n_dangling : int
        References that pointed outside the corpus and were left out.
    """

    def __init__(self, graph: nx.DiGraph, n_dangling: int = 0):
        self.graph = graph
        self.n_dangling = n_dangling

    @property
    def nodes(self) -> set:
        return set(self.graph.nodes)

    @property
    def edges(self) -> set:
        return set(self.graph.edges)

    def __contains__(self, doc_id):
        return doc_id in self.graph

    def citers(self, doc_id) -> set:
        return set(self.graph.predecessors(doc_id))

    def citing_set(self, targets) -> set:
        return citing_set(self, targets)


def build_citation_graph(store) -> CitationGraph:
    """Build the within-corpus citation graph of ``store``.

    Every stored document becomes a node. Only references to other stored
    documents become edges; the rest are counted in ``n_dangling``.
    """
    records = list(_records(store))
    ids = {d.doc_id for d in records}
    g = nx.DiGraph()
    g.add_nodes_from(d.doc_id for d in records)
    dangling = 0
    for doc in records:
        for ref in sorted(doc.references):
            if ref == doc.doc_id:
                continue
            if ref in ids:
                g.add_edge(doc.doc_id, ref)
            else:
                dangling += 1
    if dangling:
        logger.warning("%d reference(s) point outside the corpus and were excluded", dangling)
    return CitationGraph(g, dangling)


def citing_set(g: CitationGraph, targets) -> set:
    """All documents with at least one edge into ``targets``.

    A target that cites another target is included.
    """
    targets = set(targets)
    missing = [t for t in targets if t not in g.graph]
    if missing:
        raise UnknownDoc(missing)
    result = set()
    for t in targets:
        result.update(g.graph.predecessors(t))
    return result


def cohort(docs, year: int) -> set:
    """Ids of documents published exactly in ``year``."""
    return {d.doc_id for d in _records(docs) if d.year == year}


def cumulative_cohort(docs, year: int) -> set:
    """Ids of documents published in or before ``year``."""
    return {d.doc_id for d in _records(docs) if d.year <= year}


COLUMNS = (
    "iteration",
    "n_source_docs",
    "n_references",
    "n_unique_references",
    "threshold",
    "n_relevant_retrievable",
)


@dataclass(frozen=True)
class ExpansionRow:
    generation_label: str
    n_source_docs: int
    n_references: int
    n_unique_references: int
    threshold: int
    n_relevant_retrievable: int

    def as_tuple(self):
        return (
            self.generation_label,
            self.n_source_docs,
            self.n_references,
            self.n_unique_references,
            self.threshold,
            self.n_relevant_retrievable,
        )


@dataclass
class ExpansionReport:
    """Per-generation statistics of a snowball run, one row per processed generation."""

    rows: list
    thresholds: tuple = ()
    converged: bool = True
    generations: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(r.n_source_docs for r in self.rows)

    def write_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(COLUMNS)
            for row in self.rows:
                w.writerow(row.as_tuple())
            w.writerow(("total", self.total, "", "", "", ""))

    @classmethod
    def read_csv(cls, path) -> "ExpansionReport":
        rows = []
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            if tuple(header) != COLUMNS:
                raise MalformedRecord(f"{path}: unexpected header {header}")
            for rec in reader:
                if rec[0] == "total":
                    break
                rows.append(ExpansionRow(rec[0], *(int(v) for v in rec[1:])))
        return cls(rows)


def generation_label(k: int) -> str:
    return "Initial corpus" if k == 0 else f"{k + 1}. generation"


def snowball_expand(store, seed, thresholds, max_generations: int = 10):
    """Grow a corpus from ``seed`` by following frequently cited references.

    For each generation, the references of its documents are pooled (one
    count per citing document) and every referenced id cited at least
    ``thresholds[k]`` times becomes relevant, provided it is in ``store`` and
    not yet collected. The relevant ids form the next generation. The last
    threshold is reused for later generations.

    Parameters
    ----------
    store : Corpus
        Everything that could be retrieved.
    seed : iterable of str
        Initial doc ids; all must be in ``store``.
    thresholds : sequence of int
        Minimum citation frequency per generation, all positive.
    max_generations : int
        Maximum number of generations processed (report rows).

    Returns
    -------
    corpus : set of str
    report : ExpansionReport
    """
    seed = set(seed)
    thresholds = tuple(int(t) for t in thresholds)
    if not thresholds or any(t <= 0 for t in thresholds):
        raise ValueError("thresholds must be a non-empty list of positive integers")
    if max_generations < 1:
        raise ValueError("max_generations must be at least 1")
    missing = seed - set(store)
    if missing:
        raise SeedNotInStore("seed ids not in store: " + ", ".join(sorted(missing)))

    corpus = set(seed)
    current = seed
    rows, generations = [], []
    converged = False
    for k in range(max_generations):
        generations.append(frozenset(current))
        threshold = thresholds[min(k, len(thresholds) - 1)]
        freq = Counter()
        for doc_id in current:
            freq.update(store[doc_id].references)
        relevant = {
            ref for ref, n in freq.items() if n >= threshold and ref in store and ref not in corpus
        }
        rows.append(
            ExpansionRow(
                generation_label(k),
                len(current),
                sum(freq.values()),
                len(freq),
                threshold,
                len(relevant),
            )
        )
        if not relevant:
            converged = True
            break
        if k + 1 < max_generations:
            corpus |= relevant
            current = relevant

    report = ExpansionReport(rows, thresholds, converged, generations)
    return corpus, report
