"""Science basemap: field categories and their pairwise cognitive distances.

A basemap file is a UTF-8 CSV with header ``cat_a,cat_b,value`` and one
undirected category pair per row. Values are either distances or
similarities in [0, 1]; similarities are converted with ``d = 1 - s``.
Pairs that never appear in the file are maximally distant (``d = 1``) and
the diagonal is always zero.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AsymmetricInput,
    DuplicateCategoryDeclaration,
    MalformedRow,
    UnknownCategory,
    ValueOutOfRange,
)

__all__ = ["Basemap", "load_basemap", "distance"]

HEADER = ("cat_a", "cat_b", "value")
MODES = ("distance", "similarity")


@dataclass(frozen=True, eq=False)
class Basemap:
    """Ordered categories plus a dense symmetric distance matrix.

    Parameters
    ----------
    categories : tuple of str
        Category ids in matrix order.
    distances : numpy.ndarray
        ``(k, k)`` matrix with zero diagonal, symmetric, entries in [0, 1].
        Stored read-only.
    meta : dict
        Free-form description of where the basemap came from.
    """

    categories: tuple
    distances: np.ndarray
    meta: dict = field(default_factory=dict)
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        cats = tuple(self.categories)
        d = np.array(self.distances, dtype=float)
        k = len(cats)
        if d.shape != (k, k):
            raise ValueError(f"distance matrix shape {d.shape} does not match {k} categories")
        if any(not isinstance(c, str) or not c for c in cats):
            raise ValueError("category ids must be non-empty strings")
        if len(set(cats)) != k:
            dupes = sorted({c for c in cats if cats.count(c) > 1})
            raise DuplicateCategoryDeclaration(f"duplicate categories: {', '.join(dupes)}")
        if k and (np.any(d < 0) or np.any(d > 1) or np.any(np.isnan(d))):
            raise ValueOutOfRange("distances must lie in [0, 1]")
        if not np.array_equal(d, d.T):
            raise AsymmetricInput("distance matrix is not symmetric")
        if np.any(np.diag(d) != 0):
            raise ValueOutOfRange("self-distances must be zero")
        d.setflags(write=False)
        object.__setattr__(self, "categories", cats)
        object.__setattr__(self, "distances", d)
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(cats)})

    @classmethod
    def from_pairs(cls, pairs, mode="distance", categories=None, meta=None):
        """Build a basemap from ``(cat_a, cat_b, value)`` triples.

        ``categories`` may list extra categories with no pairs (they end up at
        distance 1 from everything). Conflicting values for the same
        unordered pair raise :class:`AsymmetricInput`; repeating the same
        ordered pair raises :class:`DuplicateCategoryDeclaration`.
        """
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        order = {}
        if categories is not None:
            for c in categories:
                if c in order:
                    raise DuplicateCategoryDeclaration(f"category {c!r} declared twice")
                order[c] = len(order)
        seen = {}
        for a, b, value in pairs:
            value = float(value)
            if not (0.0 <= value <= 1.0):
                raise ValueOutOfRange(f"value {value} for ({a}, {b}) outside [0, 1]")
            for c in (a, b):
                order.setdefault(c, len(order))
            if (a, b) in seen:
                raise DuplicateCategoryDeclaration(f"pair ({a}, {b}) listed twice")
            if (b, a) in seen and a != b and seen[(b, a)] != value:
                raise AsymmetricInput(
                    f"pair ({a}, {b}) has conflicting values {seen[(b, a)]} and {value}"
                )
            seen[(a, b)] = value

        d = np.ones((len(order), len(order)))
        for (a, b), value in seen.items():
            dist = 1.0 - value if mode == "similarity" else value
            d[order[a], order[b]] = d[order[b], order[a]] = dist
        np.fill_diagonal(d, 0.0)
        return cls(tuple(order), d, dict(meta or {}, mode=mode))

    def __len__(self):
        return len(self.categories)

    def __contains__(self, category):
        return category in self._index

    def index(self, category: str) -> int:
        try:
            return self._index[category]
        except KeyError:
            raise UnknownCategory(category) from None

    def indices(self, categories: Iterable[str]) -> np.ndarray:
        """Matrix positions for ``categories``; all unknown ids are reported at once."""
        categories = list(categories)
        missing = [c for c in categories if c not in self._index]
        if missing:
            raise UnknownCategory(missing)
        return np.array([self._index[c] for c in categories], dtype=int)

    def check_known(self, categories: Iterable[str]) -> None:
        missing = {c for c in categories if c not in self._index}
        if missing:
            raise UnknownCategory(missing)

    def distance(self, i: str, j: str) -> float:
        return float(self.distances[self.index(i), self.index(j)])

    def submatrix(self, rows: Sequence[str], cols: Sequence[str]) -> np.ndarray:
        self.check_known(list(rows) + list(cols))
        return self.distances[np.ix_(self.indices(rows), self.indices(cols))]


def distance(b: Basemap, i: str, j: str) -> float:
    """Distance between categories ``i`` and ``j`` on basemap ``b``."""
    return b.distance(i, j)


def _parse_rows(path):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        for lineno, row in enumerate(reader, start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if lineno == 1 and tuple(c.strip() for c in row) == HEADER:
                continue
            if len(row) != 3:
                raise MalformedRow(f"{path}:{lineno}: expected 3 columns, got {len(row)}")
            a, b, raw = (c.strip() for c in row)
            if not a or not b:
                raise MalformedRow(f"{path}:{lineno}: empty category id")
            try:
                value = float(raw)
            except ValueError:
                raise MalformedRow(f"{path}:{lineno}: non-numeric value {raw!r}") from None
            if not math.isfinite(value) or not (0.0 <= value <= 1.0):
                raise ValueOutOfRange(f"{path}:{lineno}: value {raw} outside [0, 1]")
            yield lineno, a, b, value


def load_basemap(path, mode: str = "similarity") -> Basemap:
    """Read a basemap CSV.

    Parameters
    ----------
    path : str or Path
        CSV file with header ``cat_a,cat_b,value``.
    mode : {'similarity', 'distance'}
        How to read the value column. Similarities become ``1 - s``.

    Returns
    -------
    Basemap
        Categories ordered by first appearance in the file.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    path = Path(path)
    triples = []
    lines = {}
    for lineno, a, b, value in _parse_rows(path):
        if (a, b) in lines:
            raise DuplicateCategoryDeclaration(
                f"{path}:{lineno}: pair ({a}, {b}) already listed on line {lines[(a, b)]}"
            )
        lines[(a, b)] = lineno
        triples.append((a, b, value))
    try:
        return Basemap.from_pairs(triples, mode=mode, meta={"source": str(path)})
    except AsymmetricInput as exc:
        raise AsymmetricInput(f"{path}: {exc}") from None
