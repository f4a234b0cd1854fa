"""Overlay profiles: the share of a document set falling on each basemap category."""

from __future__ import annotations

import csv
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field

from .errors import MalformedRecord, UnknownCategory

__all__ = ["OverlayProfile", "build_overlay", "write_profile_csv", "read_profile_csv"]

logger = logging.getLogger(__name__)

COUNTING_MODES = ("fractional", "whole")


@dataclass(frozen=True)
class OverlayProfile:
    """Normalized category weights of a document set.

    Only categories with positive weight are stored, so ``support_size`` is
    the number of fields the set actually touches.

    Attributes
    ----------
    weights : dict
        Category id -> share, keys in sorted order, shares summing to 1.
    doc_count : int
        Documents that contributed (had at least one category).
    n_uncategorized : int
        Documents skipped for carrying no category.
    counting : str
        ``'fractional'`` or ``'whole'``.
    """

    weights: dict = field(default_factory=dict)
    doc_count: int = 0
    n_uncategorized: int = 0
    counting: str = "fractional"

    @property
    def support_size(self) -> int:
        return len(self.weights)

    @property
    def is_empty(self) -> bool:
        return not self.weights

    @property
    def categories(self) -> list:
        return list(self.weights)

    @classmethod
    def from_weights(cls, weights, doc_count=None, counting="fractional"):
        """Profile from raw (not necessarily normalized) category weights."""
        weights = {c: float(w) for c, w in weights.items() if w > 0}
        total = math.fsum(weights.values())
        weights = {c: weights[c] / total for c in sorted(weights)}
        if doc_count is None:
            doc_count = 1 if weights else 0
        return cls(weights, doc_count, 0, counting)

    def ranked(self) -> list:
        """``(category, weight)`` pairs by descending weight, ties by category id."""
        return sorted(self.weights.items(), key=lambda kv: (-kv[1], kv[0]))


def build_overlay(docs, basemap, counting: str = "fractional") -> OverlayProfile:
    """Project documents onto the basemap.

    With fractional counting each document spreads a unit of weight evenly
    over its categories; with whole counting it adds 1 to each. Weights are
    then normalized to sum to one. Documents without categories are skipped
    and tallied in ``n_uncategorized``.

    Raises :class:`UnknownCategory` naming every category missing from
    ``basemap``.
    """
    if counting not in COUNTING_MODES:
        raise ValueError(f"counting must be one of {COUNTING_MODES}, got {counting!r}")
    records = list(docs.records() if hasattr(docs, "records") else docs)

    unknown = {c for d in records for c in d.categories if c not in basemap}
    if unknown:
        raise UnknownCategory(unknown)

    contributions = defaultdict(list)
    n_docs = n_skipped = 0
    for doc in records:
        if not doc.categories:
            n_skipped += 1
            continue
        n_docs += 1
        share = 1.0 / len(doc.categories) if counting == "fractional" else 1.0
        for c in doc.categories:
            contributions[c].append(share)

    if n_skipped:
        logger.warning("%d document(s) without categories skipped in overlay", n_skipped)
    if not n_docs:
        return OverlayProfile({}, 0, n_skipped, counting)

    # fsum is exactly rounded, which keeps the result independent of doc order
    mass = {c: math.fsum(v) for c, v in contributions.items()}
    total = math.fsum(mass.values())
    weights = {c: mass[c] / total for c in sorted(mass)}
    return OverlayProfile(weights, n_docs, n_skipped, counting)


def write_profile_csv(profile: OverlayProfile, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("category", "weight"))
        for cat, weight in profile.ranked():
            w.writerow((cat, repr(weight)))


def read_profile_csv(path, counting="fractional") -> OverlayProfile:
    """Load a profile written by :func:`write_profile_csv` (weights taken as-is)."""
    weights = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["category", "weight"]:
            raise MalformedRecord(f"{path}: expected header 'category,weight'")
        for lineno, row in enumerate(reader, start=2):
            if len(row) != 2:
                raise MalformedRecord(f"{path}:{lineno}: expected 2 columns")
            try:
                weights[row[0]] = float(row[1])
            except ValueError:
                raise MalformedRecord(f"{path}:{lineno}: bad weight {row[1]!r}") from None
    return OverlayProfile({c: weights[c] for c in sorted(weights)}, int(bool(weights)), 0, counting)
