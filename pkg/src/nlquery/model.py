"""Shared domain types for queries, candidates, elections, and results."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction


class PosTag(Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJECTIVE = "ADJECTIVE"
    QUESTION = "QUESTION"
    BE = "BE"
    PREPOSITION = "PREPOSITION"
    DETERMINER = "DETERMINER"
    PRONOUN = "PRONOUN"
    OTHER = "OTHER"


#: Tags that participate in the grammatical form of a query.
FORM_TAGS = (PosTag.NOUN, PosTag.VERB)

#: GrammaticalForm: the NOUN/VERB subsequence of a tagged query, in order.
GrammaticalForm = tuple[PosTag, ...]


class ParameterKind(Enum):
    ELEMENT_KIND = "ELEMENT_KIND"
    CONTEXT = "CONTEXT"
    IDENTIFIER = "IDENTIFIER"


class ElementKind(Enum):
    TYPE = "TYPE"
    METHOD = "METHOD"
    FIELD = "FIELD"
    PACKAGE = "PACKAGE"
    CONSTRUCTOR = "CONSTRUCTOR"
    UNKNOWN = "UNKNOWN"


class ContextKind(Enum):
    DECLARATION = "DECLARATION"
    CALL = "CALL"
    READ_ACCESS = "READ_ACCESS"
    WRITE_ACCESS = "WRITE_ACCESS"
    INSTANCE_CREATION = "INSTANCE_CREATION"
    METHOD_PARAMETER = "METHOD_PARAMETER"
    PARAMETER_BOUND = "PARAMETER_BOUND"
    RETURN_TYPE = "RETURN_TYPE"
    SUPER_REFERENCE_METHOD_CALL = "SUPER_REFERENCE_METHOD_CALL"
    REFERENCE = "REFERENCE"
    UNKNOWN = "UNKNOWN"


class CandidateSource(Enum):
    FORM_MATCH = "FORM_MATCH"
    MULTIKEY = "MULTIKEY"
    QUOTE = "QUOTE"
    WILDCARD = "WILDCARD"


@dataclass(frozen=True)
class Token:
    """One word of a query. Text never contains whitespace."""

    text: str
    index: int
    quoted: bool = False

    def __post_init__(self) -> None:
        if not self.text or any(c.isspace() for c in self.text):
            raise ValueError(f"invalid token text: {self.text!r}")

    @property
    def has_wildcard(self) -> bool:
        return "*" in self.text or "?" in self.text


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: PosTag
    #: 1-based count of this tag so far in the query ("second noun" = 2).
    tag_ordinal: int

    @property
    def text(self) -> str:
        return self.token.text

    @property
    def index(self) -> int:
        return self.token.index


@dataclass(frozen=True)
class Candidate:
    """A word (or contiguous word tuple) proposed for one search parameter."""

    words: tuple[TaggedToken, ...]
    parameter: ParameterKind
    probability: Fraction
    source: CandidateSource

    @property
    def token_indexes(self) -> tuple[int, ...]:
        return tuple(w.index for w in self.words)

    @property
    def texts(self) -> tuple[str, ...]:
        return tuple(w.text for w in self.words)

    @property
    def first_index(self) -> int:
        return self.words[0].index

    def overlaps(self, other: "Candidate") -> bool:
        return bool(set(self.token_indexes) & set(other.token_indexes))


@dataclass
class CandidateTable:
    """Per-parameter candidates for a query plus the matched-bucket size."""

    form: GrammaticalForm
    match_count: int
    candidates: dict[ParameterKind, list[Candidate]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for parameter in ParameterKind:
            self.candidates.setdefault(parameter, [])

    @classmethod
    def empty(cls, form: GrammaticalForm) -> "CandidateTable":
        return cls(form=form, match_count=0)

    def for_parameter(self, parameter: ParameterKind) -> list[Candidate]:
        return self.candidates[parameter]


@dataclass(frozen=True)
class TraceEvent:
    """One step of the election, enough to replay it."""

    rule: str
    parameter: ParameterKind | None
    action: str
    words: tuple[str, ...] = ()
    value: str | None = None
    detail: str = ""
    indexes: tuple[int, ...] = ()

    def line(self) -> str:
        parts = [self.rule]
        if self.parameter is not None:
            parts.append(self.parameter.value)
        parts.append(self.action)
        if self.words:
            parts.append("'" + " ".join(self.words) + "'")
        if self.value is not None:
            parts.append("-> " + self.value)
        if self.detail:
            parts.append(f"({self.detail})")
        return " ".join(parts)


@dataclass
class ElectedQuery:
    element_kind: ElementKind
    context: ContextKind
    identifier: str
    trace: list[TraceEvent] = field(default_factory=list)
    #: True when no identifier candidate survived and '*' was substituted.
    identifier_defaulted: bool = False

    def is_understood(self) -> bool:
        return (
            self.element_kind is not ElementKind.UNKNOWN
            and self.context is not ContextKind.UNKNOWN
            and bool(self.identifier)
            and not self.identifier_defaulted
        )

    def triple(self) -> tuple[str, str, str]:
        return (self.element_kind.value, self.context.value, self.identifier)


@dataclass(frozen=True)
class SearchResult:
    file: str
    line: int
    column: int
    element_kind: ElementKind
    context: ContextKind
    element_name: str
    enclosing: str
    snippet: str

    def location(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"
