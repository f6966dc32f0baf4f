"""Evaluation harness: understood / correctly-understood rates over a gold
set, plus the training-derived gold used for the self-consistency check."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .corpus import Corpus
from .model import ContextKind, ElementKind, ParameterKind
from .translator import TranslationOutcome
from .vocab import DependencyTable, MappingTable


class GoldFileError(ValueError):
    """Raised for unreadable, empty, or malformed gold files."""


@dataclass(frozen=True)
class GoldEntry:
    query: str
    kind: ElementKind
    context: ContextKind
    identifier: str

    def triple(self) -> tuple[str, str, str]:
        return (self.kind.value, self.context.value, self.identifier)


@dataclass(frozen=True)
class QueryVerdict:
    query: str
    expected: tuple[str, str, str]
    actual: tuple[str, str, str] | None
    understood: bool
    correct: bool

    @property
    def label(self) -> str:
        if not self.understood:
            return "not-understood"
        return "correct" if self.correct else "wrong"


@dataclass
class EvalReport:
    total: int = 0
    understood: int = 0
    correct: int = 0
    per_query: list[QueryVerdict] = field(default_factory=list)

    @property
    def understood_rate(self) -> float:
        return self.understood / self.total if self.total else 0.0

    @property
    def correct_rate(self) -> float:
        return self.correct / self.total if self.total else 0.0

    @property
    def correct_given_understood(self) -> float:
        return self.correct / self.understood if self.understood else 0.0

    def summary_line(self) -> str:
        return (
            f"EVAL total={self.total} understood={self.understood} "
            f"correct={self.correct} understood_rate={self.understood_rate:.4f} "
            f"correct_rate={self.correct_rate:.4f} "
            f"correct_given_understood={self.correct_given_understood:.4f}"
        )


def parse_gold_text(text: str, origin: str = "<string>") -> list[GoldEntry]:
    entries: list[GoldEntry] = []
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise GoldFileError(
                f"{origin}:{lineno}: expected 'query<TAB>KIND<TAB>CONTEXT<TAB>identifier'"
            )
        query, kind_name, context_name, identifier = (p.strip() for p in parts)
        if not query or not identifier:
            raise GoldFileError(f"{origin}:{lineno}: empty query or identifier")
        try:
            kind = ElementKind[kind_name]
            context = ContextKind[context_name]
        except KeyError as exc:
            raise GoldFileError(f"{origin}:{lineno}: unknown value {exc}") from None
        entries.append(GoldEntry(query=query, kind=kind, context=context,
                                 identifier=identifier))
    if not entries:
        raise GoldFileError(f"{origin}: gold file contains no entries")
    return entries


def load_gold_file(path: str | Path) -> list[GoldEntry]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GoldFileError(f"cannot read gold file {path}: {exc}") from exc
    return parse_gold_text(text, origin=str(path))


def evaluate(
    entries: list[GoldEntry],
    translate_fn: Callable[[str], TranslationOutcome],
) -> EvalReport:
    report = EvalReport(total=len(entries))
    for entry in entries:
        outcome = translate_fn(entry.query)
        election = outcome.election
        actual = election.triple() if election is not None else None
        understood = outcome.understood
        correct = understood and actual == entry.triple()
        report.understood += int(understood)
        report.correct += int(correct)
        report.per_query.append(
            QueryVerdict(query=entry.query, expected=entry.triple(), actual=actual,
                         understood=understood, correct=correct)
        )
    return report


def training_gold(
    corpus: Corpus, vocab: MappingTable, deps: DependencyTable
) -> list[GoldEntry]:
    """Expected triples for the training queries themselves, derived
    directly from their annotations (plus kind inference when absent)."""
    entries: list[GoldEntry] = []
    for query in corpus.all_queries():
        kind: ElementKind | None = None
        context: ContextKind | None = None
        identifier: str | None = None
        for annotation in query.annotations:
            words = query.annotated_words(annotation)
            if words is None:
                continue
            texts = tuple(w.text for w in words)
            if annotation.parameter is ParameterKind.CONTEXT:
                context = vocab.lookup(texts, ParameterKind.CONTEXT)
            elif annotation.parameter is ParameterKind.ELEMENT_KIND:
                kind = vocab.lookup(texts, ParameterKind.ELEMENT_KIND)
            else:
                identifier = " ".join(texts)
        if kind is None and context is not None:
            kind = deps.infer_element_kind(context)
        if kind is None or context is None or identifier is None:
            raise GoldFileError(
                f"training query {query.raw_text!r} does not resolve to a full triple"
            )
        entries.append(GoldEntry(query=query.raw_text, kind=kind,
                                 context=context, identifier=identifier))
    return entries
