"""Natural-language code search: translate English queries into structured
(element kind, context, identifier) code queries and run them against a
structural index of Java sources."""

__version__ = "0.1.0"

from .config import Config
from .engine import QueryAnswer, SearchEngine
from .model import (
    Candidate,
    CandidateTable,
    ContextKind,
    ElectedQuery,
    ElementKind,
    ParameterKind,
    PosTag,
    SearchResult,
    TaggedToken,
    Token,
)
from .translator import TranslationOutcome, TranslationStatus, translate

__all__ = [
    "Candidate",
    "CandidateTable",
    "Config",
    "ContextKind",
    "ElectedQuery",
    "ElementKind",
    "ParameterKind",
    "PosTag",
    "QueryAnswer",
    "SearchEngine",
    "SearchResult",
    "TaggedToken",
    "Token",
    "TranslationOutcome",
    "TranslationStatus",
    "translate",
]
