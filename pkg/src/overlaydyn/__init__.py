"""Knowledge-diffusion measurement on science overlay maps.

Build field-composition profiles of document sets on a science basemap and
compare them across time and along citations with Overlay Diversity (OD),
Mean Overlay Distance (MOD) and the Overlay Diversity Ratio (ODR).
"""

from .basemap import Basemap, distance, load_basemap
from .corpus import (
    CitationGraph,
    Corpus,
    DocumentRecord,
    ExpansionReport,
    build_citation_graph,
    citing_set,
    cohort,
    cumulative_cohort,
    ingest_corpus,
    snowball_expand,
)
from .diversity import (
    Kind,
    MeasureValue,
    Status,
    mean_overlay_distance,
    overlay_diversity,
    overlay_diversity_ratio,
)
from .dynamics import (
    DiversitySeries,
    Mode,
    SeriesRow,
    SliceSpec,
    compute_series,
    type_a_cross_series,
    type_a_cumulative_series,
    type_b_series,
    type_c_series,
)
from .overlay import OverlayProfile, build_overlay

__version__ = "0.1.0"
