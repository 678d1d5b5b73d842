from .canonical import CanonicalForm, canonical_code, canonical_hypergraph, canonize
from .engine import SoltesFilter, enumerate_hypergraphs, search_soltes
from .lemmas import LemmaReport, lemma_suite
from .spec import (
    COMPLETE,
    EXHAUSTED_BUDGET,
    INCOMPLETE,
    MAX_WIENER_THREE_UNIFORM,
    SearchResult,
    SearchSpec,
    trusted_deletion_bound,
)
