"""Mapping from stemmed words to concrete parameter values, plus the
context-to-element-kind dependency table used to infer missing values."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .model import ContextKind, ElementKind, ParameterKind
from .stem import stem_phrase


class VocabularyError(ValueError):
    """Raised for malformed vocabulary files."""


_PARAMETER_NAMES = {
    "kind": ParameterKind.ELEMENT_KIND,
    "element_kind": ParameterKind.ELEMENT_KIND,
    "context": ParameterKind.CONTEXT,
}

_VALUE_TYPES = {
    ParameterKind.ELEMENT_KIND: ElementKind,
    ParameterKind.CONTEXT: ContextKind,
}

ParameterValue = ElementKind | ContextKind


@dataclass
class MappingTable:
    """Stemmed keys (1..3 words) to parameter values, split by parameter.

    Keys are normalized with the stemmer at load time, so the file may
    list natural surface forms ("references", "instance creations").
    """

    entries: dict[ParameterKind, dict[tuple[str, ...], ParameterValue]] = field(
        default_factory=lambda: {
            ParameterKind.ELEMENT_KIND: {},
            ParameterKind.CONTEXT: {},
        }
    )

    def add(self, parameter: ParameterKind, words: tuple[str, ...], value: ParameterValue) -> None:
        if not 1 <= len(words) <= 3:
            raise VocabularyError(f"keys take 1..3 words, got {words!r}")
        key = stem_phrase(tuple(w.lower() for w in words))
        table = self.entries[parameter]
        existing = table.get(key)
        if existing is not None and existing is not value:
            raise VocabularyError(
                f"key {key!r} already maps to {existing} for {parameter.value}"
            )
        table[key] = value

    def lookup(self, words: tuple[str, ...], parameter: ParameterKind) -> ParameterValue | None:
        """Translate a word tuple; stems and lowercases internally."""
        if parameter is ParameterKind.IDENTIFIER:
            return None
        if not words:
            raise ValueError("lookup needs at least one word")
        key = stem_phrase(tuple(w.lower() for w in words))
        return self.entries[parameter].get(key)

    def multikeys(self, parameter: ParameterKind) -> dict[tuple[str, ...], ParameterValue]:
        return {
            key: value
            for key, value in self.entries[parameter].items()
            if len(key) > 1
        }


@dataclass
class DependencyTable:
    """Contexts that imply a unique element kind (e.g. only fields are read)."""

    implications: dict[ContextKind, ElementKind] = field(default_factory=dict)

    def infer_element_kind(self, context: ContextKind) -> ElementKind | None:
        if context is ContextKind.UNKNOWN:
            raise ValueError("cannot infer from an unknown context")
        return self.implications.get(context)


def parse_vocabulary(text: str, origin: str = "<string>") -> tuple[MappingTable, DependencyTable]:
    mapping = MappingTable()
    deps = DependencyTable()
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise VocabularyError(
                f"{origin}:{lineno}: expected 'parameter<TAB>key words<TAB>VALUE'"
            )
        head, middle, value_name = (p.strip() for p in parts)
        if head == "implies":
            try:
                context = ContextKind[middle]
                kind = ElementKind[value_name]
            except KeyError as exc:
                raise VocabularyError(f"{origin}:{lineno}: unknown value {exc}") from None
            deps.implications[context] = kind
            continue
        parameter = _PARAMETER_NAMES.get(head)
        if parameter is None:
            raise VocabularyError(f"{origin}:{lineno}: unknown parameter {head!r}")
        value_type = _VALUE_TYPES[parameter]
        try:
            value = value_type[value_name]
        except KeyError:
            raise VocabularyError(
                f"{origin}:{lineno}: unknown {parameter.value} value {value_name!r}"
            ) from None
        words = tuple(middle.split())
        if not words:
            raise VocabularyError(f"{origin}:{lineno}: empty key")
        try:
            mapping.add(parameter, words, value)
        except VocabularyError as exc:
            raise VocabularyError(f"{origin}:{lineno}: {exc}") from None
    return mapping, deps


def load_vocabulary(path: str | Path) -> tuple[MappingTable, DependencyTable]:
    path = Path(path)
    return parse_vocabulary(path.read_text(encoding="utf-8"), origin=str(path))


def bundled_vocabulary() -> tuple[MappingTable, DependencyTable]:
    text = resources.files("nlquery.data").joinpath("vocabulary.txt").read_text("utf-8")
    return parse_vocabulary(text, origin="nlquery.data/vocabulary.txt")
