from .apriori import mine_jargon
from .extract import FEATURE_DEFS, FEATURE_NAMES, extract_features, raw_features, subjectivity_scores
from .lexicon import Lexicon, load_lexicon, load_stopwords
from .readability import ReadabilityScores, readability_scores
from .registry import ExtractorRegistry, default_registry
from .resources import FeatureResources, build_resources
from .tfidf import build_idf, cosine, tfidf_similarity, tfidf_vector

__all__ = [
    "FEATURE_DEFS",
    "FEATURE_NAMES",
    "FeatureResources",
    "ExtractorRegistry",
    "Lexicon",
    "ReadabilityScores",
    "build_idf",
    "build_resources",
    "cosine",
    "default_registry",
    "extract_features",
    "load_lexicon",
    "load_stopwords",
    "mine_jargon",
    "raw_features",
    "readability_scores",
    "subjectivity_scores",
    "tfidf_similarity",
    "tfidf_vector",
]
