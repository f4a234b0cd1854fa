"""Synthetic corpora for demos and tests.

:func:`two_phase_corpus` generates a small closed corpus whose field
composition changes once: for the first years every paper sits in one of
two close core fields, then two distant fields enter and stay. From the
influx year on, a couple of papers per year also carry a peripheral field,
and a new peripheral field becomes available every year. Papers cite up to
three papers from the preceding three years, so the citing side of any
cumulative slice reaches into later, broader years.
"""

from __future__ import annotations

import random

from .basemap import Basemap
from .corpus import Corpus, DocumentRecord

__all__ = ["two_phase_corpus"]

CORE = ("A", "B")
INFLUX = ("C", "D")


def two_phase_corpus(
    seed: int = 7,
    first_year: int = 2000,
    n_years: int = 15,
    influx_offset: int = 5,
    per_year: int = 20,
):
    """Return ``(corpus, basemap)`` for the two-phase scenario.

    ``influx_offset`` is the number of core-only years; the distant fields
    appear in year ``first_year + influx_offset``.
    """
    rng = random.Random(seed)
    periph = [f"P{k}" for k in range(1, n_years - influx_offset + 1)]
    cats = list(CORE + INFLUX) + periph

    pairs = [("A", "B", 0.2), ("C", "D", 0.2)]
    pairs += [(a, b, 0.9) for a in CORE for b in INFLUX]
    for k, p in enumerate(periph):
        pairs += [(p, c, 0.5 + 0.03 * (k % 5)) for c in CORE + INFLUX]
    basemap = Basemap.from_pairs(pairs, mode="distance", categories=cats, meta={"source": "synthetic"})

    docs = []
    for t in range(n_years):
        year = first_year + t
        recent = [d.doc_id for d in docs if year - 3 <= d.year < year]
        for i in range(per_year):
            if t < influx_offset:
                c = [rng.choice(CORE)]
            else:
                c = [rng.choice(CORE + INFLUX + INFLUX)]
                if rng.random() < 0.3:
                    c.append(rng.choice(CORE + INFLUX))
            n_periph = t - influx_offset + 1
            if n_periph > 0 and i < 2:
                c.append(rng.choice(periph[:n_periph]))
            refs = rng.sample(recent, min(3, len(recent)))
            docs.append(DocumentRecord(f"{year}-{i:02d}", year, frozenset(c), frozenset(refs)))
    return Corpus(docs), basemap
