"""
Overlay Diversity, Mean Overlay Distance and the diversity ratio
================================================================

Three fields on a toy basemap, and what each measure says about moving
from one profile to another.
"""

from overlaydyn import (
    Basemap,
    OverlayProfile,
    mean_overlay_distance,
    overlay_diversity,
    overlay_diversity_ratio,
)

# Distances between fields: A and B are neighbours, C is far from A.
basemap = Basemap.from_pairs(
    [("A", "B", 0.4), ("A", "C", 1.0), ("B", "C", 0.6)], mode="distance"
)

source = OverlayProfile.from_weights({"A": 0.5, "B": 0.5})
target = OverlayProfile.from_weights({"B": 0.4, "C": 0.6})

print("OD(source) =", overlay_diversity(source, basemap).value)
print("OD(target) =", overlay_diversity(target, basemap).value)
print("MOD        =", mean_overlay_distance(source, target, basemap).value)
print("ODR        =", overlay_diversity_ratio(source, target, basemap).value)

# %%
# A pure field shift: everything moves from one field to a distant one.
# Target diversity stays at zero, so the ratio is undefined, while MOD
# registers the full distance.

zoo = OverlayProfile.from_weights({"A": 1.0})
phil = OverlayProfile.from_weights({"C": 1.0})
print()
print("OD(target) =", overlay_diversity(phil, basemap).value)
print("MOD        =", mean_overlay_distance(zoo, phil, basemap).value)
print("ODR status =", overlay_diversity_ratio(zoo, phil, basemap).status.value)
