"""Vector-space footprints of political discourse.

Pipeline: transcripts -> per-speaker documents (`corpus`) -> scored key
terms (`nlu`) -> terms embedded in a pre-trained word-vector space
(`vsm`) -> footprints plus the three comparison heuristics
(`footprint`) -> projector/word-cloud/PCA artifacts (`export`) and a
read-only JSON API (`server`).
"""

from .corpus import (
    SpeakerDocument,
    TranscriptFormat,
    Utterance,
    filter_stage_directions,
    parse_transcript,
    split_by_speaker,
    token_count,
    tokenize,
)
from .footprint import (
    DistanceReport,
    Footprint,
    FootprintTerm,
    KMeansCluster,
    KMeansResult,
    ThemeCluster,
    ThemeComparison,
    build_footprint,
    compare_theme,
    distance_matrix,
    drilldown,
    footprint_centroid,
    global_neighbors,
    kmeans,
    neighbors_of,
    theme_clusters,
)
from .nlu import (
    EMOTIONS,
    BackgroundFrequencies,
    ExtractParams,
    KeyTerm,
    Lexicons,
    bundled_lexicons,
    extract_keyterms,
    import_nlu_json,
)
from .vsm import (
    EmbeddedTerm,
    VectorSpace,
    build_space,
    centroid,
    cosine,
    embed_term,
    load_vectors,
    lookup,
    nearest,
    pca_2d,
)

__version__ = "0.1.0"
