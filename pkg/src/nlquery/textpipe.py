"""Tokenization, part-of-speech tagging, and grammatical-form extraction.

The tagger is a deterministic lexicon over the closed query-domain
vocabulary (question words, copulas, prepositions, determiners, domain
nouns and verbs) with ordered suffix rules and a NOUN fallback, so that
identifiers like ``Integer`` or ``init()`` tag cleanly as nouns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .model import FORM_TAGS, GrammaticalForm, PosTag, TaggedToken, Token


class EmptyQuery(ValueError):
    """Raised when a query contains no tokens after cleaning."""


class EmptyForm(ValueError):
    """Raised when a tagged query contains no noun and no verb."""


class LexiconError(ValueError):
    """Raised for malformed lexicon files."""


# Sentence punctuation stripped from token ends. '?' doubles as a wildcard
# character, so it is only stripped from the final token of the query.
_ALWAYS_STRIP = ".,!"
_FINAL_STRIP = ".,!?"


def _clean(piece: str, is_final: bool) -> str:
    chars = _FINAL_STRIP if is_final else _ALWAYS_STRIP
    return piece.rstrip(chars)


def tokenize(raw_query: str) -> list[Token]:
    """Split a query into tokens, handling quoted spans and punctuation.

    Double-quoted spans produce tokens flagged ``quoted`` with the quotes
    removed (a span with internal whitespace yields one quoted token per
    word, since token text never contains whitespace). Trailing sentence
    punctuation is stripped; '()' inside tokens is kept.
    """
    pieces: list[tuple[str, bool]] = []
    in_quote = False
    current: list[str] = []

    def flush() -> None:
        text = "".join(current)
        current.clear()
        for word in text.split():
            pieces.append((word, in_quote))

    for ch in raw_query:
        if ch == '"':
            flush()
            in_quote = not in_quote
        elif ch.isspace():
            if current:
                current.append(" ")
        else:
            current.append(ch)
    flush()

    tokens: list[Token] = []
    last = len(pieces) - 1
    for position, (piece, quoted) in enumerate(pieces):
        text = piece if quoted else _clean(piece, position == last)
        if not text:
            continue
        tokens.append(Token(text=text, index=len(tokens), quoted=quoted))
    if not tokens:
        raise EmptyQuery(f"no tokens in query: {raw_query!r}")
    return tokens


@dataclass
class Lexicon:
    """Word-to-tag mapping plus ordered suffix rules and a default tag."""

    words: dict[str, PosTag] = field(default_factory=dict)
    suffix_rules: list[tuple[str, PosTag]] = field(default_factory=list)
    default_tag: PosTag = PosTag.NOUN

    def tag_for(self, text: str) -> PosTag:
        word = text.lower()
        tag = self.words.get(word)
        if tag is not None:
            return tag
        for suffix, suffix_tag in self.suffix_rules:
            rest = word[: -len(suffix)]
            # Guard against short false positives like "red" for ~ed:
            # the remainder must look like a word stem of its own.
            if (
                word.endswith(suffix)
                and len(rest) >= 2
                and any(c in "aeiouy" for c in rest)
            ):
                return suffix_tag
        return self.default_tag

    @classmethod
    def parse(cls, text: str, origin: str = "<string>") -> "Lexicon":
        lexicon = cls()
        for lineno, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise LexiconError(f"{origin}:{lineno}: expected 'word<TAB>TAG'")
            entry, tag_name = parts[0].strip(), parts[1].strip()
            try:
                tag = PosTag[tag_name]
            except KeyError:
                raise LexiconError(f"{origin}:{lineno}: unknown tag {tag_name!r}") from None
            if entry.startswith("~"):
                lexicon.suffix_rules.append((entry[1:].lower(), tag))
            else:
                lexicon.words[entry.lower()] = tag
        return lexicon

    @classmethod
    def load(cls, path: str | Path) -> "Lexicon":
        path = Path(path)
        return cls.parse(path.read_text(encoding="utf-8"), origin=str(path))

    @classmethod
    def bundled(cls) -> "Lexicon":
        text = resources.files("nlquery.data").joinpath("lexicon.txt").read_text("utf-8")
        return cls.parse(text, origin="nlquery.data/lexicon.txt")


def pos_tag(tokens: list[Token], lexicon: Lexicon) -> list[TaggedToken]:
    """Tag every token and number it among tokens with the same tag."""
    if not tokens:
        raise EmptyQuery("cannot tag an empty token list")
    counts: dict[PosTag, int] = {}
    tagged = []
    for token in tokens:
        tag = lexicon.tag_for(token.text)
        counts[tag] = counts.get(tag, 0) + 1
        tagged.append(TaggedToken(token=token, tag=tag, tag_ordinal=counts[tag]))
    return tagged


def grammatical_form(tagged: list[TaggedToken]) -> GrammaticalForm:
    """The NOUN/VERB subsequence of the tagged query, in query order."""
    form = tuple(t.tag for t in tagged if t.tag in FORM_TAGS)
    if not form:
        raise EmptyForm("query contains no noun and no verb")
    return form


def form_to_str(form: GrammaticalForm) -> str:
    return " -> ".join(tag.value.lower() for tag in form)
