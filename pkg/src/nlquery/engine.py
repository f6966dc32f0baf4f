"""The assembled search engine: one immutable object holding the lexicon,
vocabulary, training corpus, and code index, shared by CLI and service."""

from __future__ import annotations

from dataclasses import dataclass

from .config import Config
from .corpus import Corpus, bundled_corpus, load_corpus
from .index import CodeIndex, UnsupportedCombination, build_index, execute
from .model import SearchResult
from .textpipe import Lexicon
from .translator import TranslationOutcome, translate
from .vocab import DependencyTable, MappingTable, bundled_vocabulary, load_vocabulary

#: Results beyond this are dropped and flagged, so '*' queries stay usable.
RESULT_CAP = 500


@dataclass
class QueryAnswer:
    outcome: TranslationOutcome
    results: list[SearchResult]
    truncated: bool = False
    search_error: str | None = None


class SearchEngine:
    def __init__(self, config: Config | None = None):
        self.config = config or Config()
        if self.config.lexicon_path is not None:
            self.lexicon = Lexicon.load(self.config.lexicon_path)
        else:
            self.lexicon = Lexicon.bundled()
        if self.config.vocab_path is not None:
            self.vocab, self.deps = load_vocabulary(self.config.vocab_path)
        else:
            self.vocab, self.deps = bundled_vocabulary()
        if self.config.corpus_path is not None:
            self.corpus: Corpus = load_corpus(self.config.corpus_path, self.lexicon)
        else:
            self.corpus = bundled_corpus(self.lexicon)
        self.index: CodeIndex = build_index(self.config.resolved_source_root())

    def translate(self, raw_query: str) -> TranslationOutcome:
        return translate(raw_query, self.corpus, self.vocab, self.deps, self.lexicon)

    def query(self, raw_query: str, cap: int = RESULT_CAP) -> QueryAnswer:
        outcome = self.translate(raw_query)
        if not outcome.understood or outcome.elected is None:
            return QueryAnswer(outcome=outcome, results=[])
        try:
            results = execute(self.index, outcome.elected)
        except UnsupportedCombination as exc:
            return QueryAnswer(outcome=outcome, results=[], search_error=str(exc))
        truncated = len(results) > cap
        return QueryAnswer(outcome=outcome, results=results[:cap], truncated=truncated)
