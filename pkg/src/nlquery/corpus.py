"""Annotated training queries: parsing, form-indexed storage, and the
candidate-probability computation that drives the election."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .model import (
    Candidate,
    CandidateSource,
    CandidateTable,
    GrammaticalForm,
    ParameterKind,
    PosTag,
    TaggedToken,
)
from .textpipe import EmptyForm, EmptyQuery, Lexicon, grammatical_form, pos_tag, tokenize


class MalformedAnnotation(ValueError):
    """Raised for unknown annotation tags or misplaced annotations."""


class CorpusError(ValueError):
    """Raised when the corpus file cannot be loaded."""


_ANNOTATION_NAMES = {
    "context": ParameterKind.CONTEXT,
    "kind_of_sourcecode_element": ParameterKind.ELEMENT_KIND,
    "expression": ParameterKind.IDENTIFIER,
}


@dataclass(frozen=True)
class Annotation:
    """Binds the token at (tag, tag_ordinal) to a parameter; multi-word
    annotations cover word_count consecutive tokens starting there."""

    parameter: ParameterKind
    tag: PosTag
    tag_ordinal: int
    word_count: int = 1


@dataclass
class AnnotatedQuery:
    raw_text: str
    tagged: list[TaggedToken]
    annotations: list[Annotation]
    form: GrammaticalForm

    def annotation_for(self, parameter: ParameterKind) -> Annotation | None:
        for annotation in self.annotations:
            if annotation.parameter is parameter:
                return annotation
        return None

    def annotated_words(self, annotation: Annotation) -> tuple[TaggedToken, ...] | None:
        """The tokens this annotation covers, or None if out of range."""
        return tokens_at(self.tagged, annotation)


def tokens_at(
    tagged: list[TaggedToken], annotation: Annotation
) -> tuple[TaggedToken, ...] | None:
    """Resolve an annotation pattern against any tagged query: the token
    with the annotation's (tag, ordinal) plus following consecutive tokens."""
    anchor = None
    for tt in tagged:
        if tt.tag is annotation.tag and tt.tag_ordinal == annotation.tag_ordinal:
            anchor = tt.index
            break
    if anchor is None:
        return None
    end = anchor + annotation.word_count
    if end > len(tagged):
        return None
    return tuple(tagged[anchor:end])


def parse_training_line(line: str, lexicon: Lexicon) -> AnnotatedQuery:
    """Parse one `word:tag`-annotated training query.

    Annotation markers are stripped before POS tagging; consecutive
    annotations for the same parameter merge into one multi-word
    annotation.
    """
    pieces = line.split()
    if not pieces:
        raise EmptyQuery("empty training line")

    words: list[str] = []
    marks: list[ParameterKind | None] = []
    for piece in pieces:
        if ":" in piece:
            word, _, tag_name = piece.partition(":")
            if not word:
                raise MalformedAnnotation(f"annotation with empty word: {piece!r}")
            parameter = _ANNOTATION_NAMES.get(tag_name)
            if parameter is None:
                raise MalformedAnnotation(f"unknown annotation tag: {piece!r}")
            words.append(word)
            marks.append(parameter)
        else:
            words.append(piece)
            marks.append(None)

    raw_text = " ".join(words)
    tokens = tokenize(raw_text)
    if len(tokens) != len(words):
        raise MalformedAnnotation(
            f"annotations do not align with tokens in {line!r}"
        )
    tagged = pos_tag(tokens, lexicon)
    form = grammatical_form(tagged)

    annotations: list[Annotation] = []
    seen: set[ParameterKind] = set()
    i = 0
    while i < len(marks):
        parameter = marks[i]
        if parameter is None:
            i += 1
            continue
        start = i
        while i < len(marks) and marks[i] is parameter:
            i += 1
        word_count = i - start
        if word_count > 3:
            raise MalformedAnnotation(
                f"annotation for {parameter.value} spans {word_count} words (max 3)"
            )
        if parameter in seen:
            raise MalformedAnnotation(
                f"non-consecutive repeated annotation for {parameter.value} in {line!r}"
            )
        seen.add(parameter)
        first = tagged[start]
        annotations.append(
            Annotation(
                parameter=parameter,
                tag=first.tag,
                tag_ordinal=first.tag_ordinal,
                word_count=word_count,
            )
        )
    return AnnotatedQuery(raw_text=raw_text, tagged=tagged, annotations=annotations, form=form)


@dataclass
class Corpus:
    by_form: dict[GrammaticalForm, list[AnnotatedQuery]] = field(default_factory=dict)
    total_count: int = 0

    def add(self, query: AnnotatedQuery) -> None:
        self.by_form.setdefault(query.form, []).append(query)
        self.total_count += 1

    def bucket(self, form: GrammaticalForm) -> list[AnnotatedQuery]:
        return self.by_form.get(form, [])

    def all_queries(self) -> list[AnnotatedQuery]:
        return [q for bucket in self.by_form.values() for q in bucket]


def parse_corpus(text: str, lexicon: Lexicon, origin: str = "<string>") -> Corpus:
    corpus = Corpus()
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            corpus.add(parse_training_line(line, lexicon))
        except (MalformedAnnotation, EmptyQuery, EmptyForm) as exc:
            raise CorpusError(f"{origin}:{lineno}: {exc}") from exc
    return corpus


def load_corpus(path: str | Path, lexicon: Lexicon) -> Corpus:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read corpus file {path}: {exc}") from exc
    return parse_corpus(text, lexicon, origin=str(path))


def bundled_corpus(lexicon: Lexicon) -> Corpus:
    text = resources.files("nlquery.data").joinpath("corpus.txt").read_text("utf-8")
    return parse_corpus(text, lexicon, origin="nlquery.data/corpus.txt")


def candidates_for(
    form: GrammaticalForm,
    tagged_query: list[TaggedToken],
    corpus: Corpus,
) -> CandidateTable:
    """Build the candidate table for a query from its form-matched bucket.

    Every training annotation pattern (parameter, tag, ordinal, span) seen
    in the bucket is resolved against the query; the resolved tokens become
    one candidate with probability = pattern count / bucket size. Patterns
    that do not resolve (the query lacks such a token) are skipped.
    """
    bucket = corpus.bucket(form)
    if not bucket:
        return CandidateTable.empty(form)

    counts: dict[tuple[ParameterKind, PosTag, int, int], int] = {}
    for training in bucket:
        for annotation in training.annotations:
            key = (
                annotation.parameter,
                annotation.tag,
                annotation.tag_ordinal,
                annotation.word_count,
            )
            counts[key] = counts.get(key, 0) + 1

    table = CandidateTable(form=form, match_count=len(bucket))
    total = len(bucket)
    for (parameter, tag, ordinal, word_count), count in sorted(
        counts.items(), key=lambda kv: (kv[0][0].value, kv[0][1].value, kv[0][2], kv[0][3])
    ):
        words = tokens_at(
            tagged_query,
            Annotation(parameter=parameter, tag=tag, tag_ordinal=ordinal, word_count=word_count),
        )
        if words is None:
            continue
        table.candidates[parameter].append(
            Candidate(
                words=words,
                parameter=parameter,
                probability=Fraction(count, total),
                source=CandidateSource.FORM_MATCH,
            )
        )
    for parameter in ParameterKind:
        table.candidates[parameter].sort(key=lambda c: (c.first_index, len(c.words)))
    return table
