"""Emotion-enriched word co-occurrence networks and semantic frame profiling."""

from .affect import EMOTIONS, AffectLexicon, antonym_emotions, load_lexicons
from .cooccur import (
    CooccurrenceNetwork,
    baseline_link_budget,
    build_network,
    count_bigrams,
    threshold_top_m,
)
from .errors import AnalysisError, ConfigError, DataError, SemframeError
from .graphan import (
    Partition,
    SemanticFrame,
    closeness,
    degree_assortativity,
    frame_community_count,
    louvain,
    mean_local_clustering,
    modularity,
    rank_concepts,
    semantic_frame,
)
from .porter import porter_stem
from .profiling import EmotionalProfile, build_profile, emotional_profile, random_baseline, z_scores
from .text_pipeline import Document, PipelineConfig, TokenizedDocument, clean_and_tokenize
from .topics import TopicModel, fit_lda, frame_topic, select_documents, top_topic_words

__version__ = "0.1.0"
