"""Election-rule invariant checks shared by the property tests and the
acceptance suite's randomized run."""

from __future__ import annotations

from nlquery.corpus import Corpus
from nlquery.model import ParameterKind
from nlquery.stem import stem_phrase
from nlquery.textpipe import Lexicon, pos_tag, tokenize
from nlquery.translator import translate
from nlquery.vocab import DependencyTable, MappingTable

_ELECTION_ACTIONS = {"elected", "unknown", "defaulted"}


def check_election_invariants(
    query: str,
    corpus: Corpus,
    vocab: MappingTable,
    deps: DependencyTable,
    lexicon: Lexicon,
) -> None:
    """Asserts determinism, election order, token exclusivity, multi-key
    dominance, and quoted dominance for one query. Raises AssertionError."""
    first = translate(query, corpus, vocab, deps, lexicon)
    second = translate(query, corpus, vocab, deps, lexicon)

    def triple(outcome):
        return outcome.election.triple() if outcome.election else None

    assert triple(first) == triple(second), f"non-deterministic triple for {query!r}"
    assert first.diagnostics == second.diagnostics, f"non-deterministic trace for {query!r}"
    assert first.status == second.status

    election = first.election
    if election is None:
        return
    trace = election.trace

    # Rule #4: context decided before element kind before identifier.
    order = []
    for event in trace:
        if event.action in _ELECTION_ACTIONS and event.parameter is not None:
            if event.parameter not in order:
                order.append(event.parameter)
    expected_order = [p for p in
                      (ParameterKind.CONTEXT, ParameterKind.ELEMENT_KIND,
                       ParameterKind.IDENTIFIER)
                      if p in order]
    assert order == expected_order, f"election order violated for {query!r}: {order}"

    # Rule #5: no token index elected for two parameters.
    elected_indexes: dict[ParameterKind, set[int]] = {}
    for event in trace:
        if event.action == "elected" and event.parameter is not None:
            elected_indexes.setdefault(event.parameter, set()).update(event.indexes)
    seen: set[int] = set()
    for parameter, indexes in elected_indexes.items():
        assert not (seen & indexes), (
            f"token exclusivity violated for {query!r}: {elected_indexes}"
        )
        seen |= indexes

    # Rule #2: the elected enum candidate never overlaps a longer valid
    # multi-key window of the same parameter (windows eaten by an earlier
    # election are exempt).
    tagged = pos_tag(tokenize(query), lexicon)
    consumed_before: dict[ParameterKind, set[int]] = {
        ParameterKind.CONTEXT: set(),
        ParameterKind.ELEMENT_KIND: elected_indexes.get(ParameterKind.CONTEXT, set()),
    }
    for parameter in (ParameterKind.CONTEXT, ParameterKind.ELEMENT_KIND):
        indexes = elected_indexes.get(parameter)
        if not indexes:
            continue
        width = len(indexes)
        for size in (2, 3):
            if size <= width:
                continue
            for start in range(0, len(tagged) - size + 1):
                window = tagged[start : start + size]
                window_indexes = {t.index for t in window}
                if any(t.token.quoted for t in window):
                    continue
                if window_indexes & consumed_before[parameter]:
                    continue
                key = stem_phrase(tuple(t.text.lower() for t in window))
                if key not in vocab.multikeys(parameter):
                    continue
                assert not (window_indexes & indexes), (
                    f"multi-key dominance violated for {query!r}: "
                    f"{parameter} elected {sorted(indexes)} but window "
                    f"{[t.text for t in window]} is a longer valid multi-key"
                )

    # Rule #6: a quoted token always becomes the identifier.
    quoted = [t for t in tagged if t.token.quoted]
    if quoted:
        assert election.identifier == quoted[0].text, (
            f"quoted dominance violated for {query!r}: "
            f"identifier={election.identifier!r} quoted={quoted[0].text!r}"
        )
