"""Overlay Diversity, Mean Overlay Distance and Overlay Diversity Ratio.

Overlay Diversity (OD) is the Rao-Stirling index of a single profile,

.. math::

    OD = \\sum_{i,j} p_i p_j d_{ij}

summed over all *ordered* pairs of the profile's categories. Because
``d_ii = 0`` this is twice the sum over unordered pairs; keep that in mind
when comparing with implementations that halve it.

Mean Overlay Distance (MOD) compares a source profile (``n`` categories)
with a target profile (``m`` categories),

.. math::

    MOD = \\frac{1}{n m} \\sum_{i \\in src} \\sum_{j \\in tgt} p_i q_j d_{ij}

Categories present on both sides contribute zero-distance cells and still
count towards ``n`` and ``m``.

The Overlay Diversity Ratio is ``OD(target) / OD(source)``: above 1 the
transition diversifies, below 1 it integrates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .basemap import Basemap
from .overlay import OverlayProfile

__all__ = [
    "Kind",
    "Status",
    "MeasureValue",
    "overlay_diversity",
    "mean_overlay_distance",
    "overlay_diversity_ratio",
]


class Kind(str, enum.Enum):
    OD = "OD"
    MOD = "MOD"
    ODR = "ODR"


class Status(str, enum.Enum):
    OK = "ok"
    UNDEFINED_ZERO_SOURCE = "undefined_zero_source"
    UNDEFINED_EMPTY_PROFILE = "undefined_empty_profile"


@dataclass(frozen=True)
class MeasureValue:
    """A measure result; ``value`` is ``None`` unless ``status`` is ok."""

    kind: Kind
    value: Optional[float] = None
    status: Status = Status.OK

    def __post_init__(self):
        if (self.value is None) == (self.status is Status.OK):
            raise ValueError("value must be present exactly when status is ok")

    @property
    def ok(self) -> bool:
        return self.status is Status.OK

    @classmethod
    def undefined(cls, kind, status):
        return cls(kind, None, Status(status))

    def __float__(self):
        if not self.ok:
            raise ValueError(f"{self.kind.value} is undefined ({self.status.value})")
        return self.value


def _vector(profile: OverlayProfile, basemap: Basemap):
    cats = profile.categories
    return cats, np.fromiter(profile.weights.values(), dtype=float, count=len(cats))


def _weighted_distance_sum(src, tgt, basemap):
    src_cats, p = _vector(src, basemap)
    tgt_cats, q = _vector(tgt, basemap)
    d = basemap.submatrix(src_cats, tgt_cats)
    return float(p @ d @ q)


def overlay_diversity(p: OverlayProfile, b: Basemap) -> MeasureValue:
    """Rao-Stirling diversity of one profile (full ordered double sum)."""
    b.check_known(p.weights)
    if p.is_empty:
        return MeasureValue.undefined(Kind.OD, Status.UNDEFINED_EMPTY_PROFILE)
    return MeasureValue(Kind.OD, _weighted_distance_sum(p, p, b))


def mean_overlay_distance(src: OverlayProfile, tgt: OverlayProfile, b: Basemap) -> MeasureValue:
    """Share-weighted source x target distance sum divided by ``n * m``."""
    b.check_known(list(src.weights) + list(tgt.weights))
    if src.is_empty or tgt.is_empty:
        return MeasureValue.undefined(Kind.MOD, Status.UNDEFINED_EMPTY_PROFILE)
    raw = _weighted_distance_sum(src, tgt, b)
    return MeasureValue(Kind.MOD, raw / (src.support_size * tgt.support_size))


def overlay_diversity_ratio(src: OverlayProfile, tgt: OverlayProfile, b: Basemap) -> MeasureValue:
    """``OD(tgt) / OD(src)``; undefined when the source has zero diversity."""
    return ratio_of(overlay_diversity(src, b), overlay_diversity(tgt, b))


def ratio_of(od_source: MeasureValue, od_target: MeasureValue) -> MeasureValue:
    """ODR from two already computed OD values."""
    if not (od_source.ok and od_target.ok):
        return MeasureValue.undefined(Kind.ODR, Status.UNDEFINED_EMPTY_PROFILE)
    if od_source.value == 0:
        return MeasureValue.undefined(Kind.ODR, Status.UNDEFINED_ZERO_SOURCE)
    return MeasureValue(Kind.ODR, od_target.value / od_source.value)
