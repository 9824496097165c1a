"""Lexicon-driven homograph tagging from part-of-speech information.

The package loads a homograph-structured lexicon (word type, ordered
homographs, ordered senses), classifies each word type by how far a
correct coarse POS tag can disambiguate it, tags POS-annotated corpora
by picking the first homograph matching each token's coarse tag, and
scores the assignments against gold annotations.
"""

from .errors import (
    CorpusError,
    EvaluationError,
    LexiconError,
    TaggerDataError,
    TagMapError,
    UnmappedTagError,
    VocabularyError,
)
from .evaluation import EvalReport, evaluate, render_report
from .lexicon import (
    DisambCategory,
    Homograph,
    Lexicon,
    SenseEntry,
    TaxonomyReport,
    WordTypeEntry,
    analyze_lexicon,
    classify_word_type,
    default_vocabulary,
    dump_lexicon,
    load_lexicon,
    load_vocabulary,
    lookup,
    normalize_key,
    render_taxonomy,
)
from .pipeline import (
    OUTPUT_HEADER,
    Document,
    SenseTaggedToken,
    TaggedToken,
    TokenStatus,
    baseline_pos_assign,
    disambiguate_token,
    lookup_key,
    read_corpus,
    render_output,
    status_counts,
    tag_document,
    write_output,
)
from .tagmap import (
    DEFAULT_OPEN_CLASS,
    TagMapping,
    default_tagmap,
    is_open_class,
    load_tagmap,
    map_tag,
)

__version__ = "0.1.0"
