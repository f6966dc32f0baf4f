"""End-to-end query translation: tokenize, tag, match training forms,
then elect one value per search parameter with the rule chain.

Election order is fixed (context, then element kind, then identifier).
Per enum parameter: candidates without a vocabulary translation are
dropped; overlapping candidates lose to the one covering more words;
the survivor with the highest probability wins, position breaking ties.
Electing a value removes its tokens from the remaining candidate lists.
The identifier prefers a quoted token, then a unique wildcard token,
then the most probable candidate. A known context can fill in a missing
element kind through the dependency table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .corpus import Corpus, candidates_for
from .model import (
    Candidate,
    CandidateSource,
    CandidateTable,
    ContextKind,
    ElectedQuery,
    ElementKind,
    ParameterKind,
    TaggedToken,
    TraceEvent,
)
from .textpipe import EmptyForm, EmptyQuery, Lexicon, grammatical_form, pos_tag, tokenize
from .vocab import DependencyTable, MappingTable

_ENUM_PARAMETERS = (ParameterKind.CONTEXT, ParameterKind.ELEMENT_KIND)


class TranslationStatus(Enum):
    UNDERSTOOD = "UNDERSTOOD"
    NOT_UNDERSTOOD = "NOT_UNDERSTOOD"


@dataclass
class TranslationOutcome:
    status: TranslationStatus
    #: Present iff the query was understood.
    elected: ElectedQuery | None
    candidate_table: CandidateTable
    diagnostics: list[str] = field(default_factory=list)
    #: The raw election result, also present for not-understood queries.
    election: ElectedQuery | None = None
    tagged: list[TaggedToken] = field(default_factory=list)

    @property
    def understood(self) -> bool:
        return self.status is TranslationStatus.UNDERSTOOD


def collect_multikey_candidates(
    tagged: list[TaggedToken], vocab: MappingTable
) -> list[Candidate]:
    """Candidates from contiguous 2..3-token windows whose stemmed tuple
    is a multi-word vocabulary key."""
    found: list[Candidate] = []
    for parameter in _ENUM_PARAMETERS:
        multikeys = vocab.multikeys(parameter)
        if not multikeys:
            continue
        for size in (2, 3):
            for start in range(0, len(tagged) - size + 1):
                window = tuple(tagged[start : start + size])
                if any(w.token.quoted for w in window):
                    continue
                if vocab.lookup(tuple(w.text for w in window), parameter) is not None and (
                    len(window) > 1
                ):
                    found.append(
                        Candidate(
                            words=window,
                            parameter=parameter,
                            probability=Fraction(1),
                            source=CandidateSource.MULTIKEY,
                        )
                    )
    return found


def _selection_key(candidate: Candidate):
    # Highest probability first; ties go to the earliest query position,
    # then to the candidate covering more words.
    return (-candidate.probability, candidate.first_index, -len(candidate.words))


def _elect_enum_parameter(
    parameter: ParameterKind,
    pool: list[Candidate],
    vocab: MappingTable,
    consumed: set[int],
    trace: list[TraceEvent],
):
    """Rules #1-#3 and #5 for context/element-kind. Returns (value, winner)."""
    survivors: list[Candidate] = []
    for candidate in pool:
        if any(w.token.quoted for w in candidate.words):
            trace.append(
                TraceEvent("rule6", parameter, "removed", candidate.texts,
                           detail="quoted words are reserved for the identifier")
            )
            continue
        if set(candidate.token_indexes) & consumed:
            trace.append(
                TraceEvent("rule5", parameter, "removed", candidate.texts,
                           detail="token already elected for another parameter")
            )
            continue
        value = vocab.lookup(candidate.texts, parameter)
        if value is None:
            trace.append(
                TraceEvent("rule1", parameter, "removed", candidate.texts,
                           detail="no vocabulary translation")
            )
            continue
        survivors.append(candidate)

    dominated: set[int] = set()
    for i, candidate in enumerate(survivors):
        for other in survivors:
            if len(other.words) > len(candidate.words) and candidate.overlaps(other):
                dominated.add(i)
                trace.append(
                    TraceEvent("rule2", parameter, "removed", candidate.texts,
                               detail=f"overlaps longer candidate '{' '.join(other.texts)}'")
                )
                break
    remaining = [c for i, c in enumerate(survivors) if i not in dominated]

    if not remaining:
        trace.append(TraceEvent("rule3", parameter, "unknown",
                                detail="no candidate survived"))
        return None, None
    winner = min(remaining, key=_selection_key)
    value = vocab.lookup(winner.texts, parameter)
    trace.append(
        TraceEvent("rule3", parameter, "elected", winner.texts, value=value.value,
                   detail=f"p={winner.probability} source={winner.source.value}",
                   indexes=winner.token_indexes)
    )
    return value, winner


def _elect_identifier(
    tagged: list[TaggedToken],
    table: CandidateTable,
    consumed: set[int],
    trace: list[TraceEvent],
) -> tuple[str, tuple[int, ...], bool]:
    """Rule #6. Returns (identifier, token indexes, defaulted)."""
    quoted = [t for t in tagged if t.token.quoted]
    if quoted:
        if len(quoted) > 1:
            trace.append(
                TraceEvent("rule6", ParameterKind.IDENTIFIER, "note",
                           tuple(t.text for t in quoted[1:]),
                           detail="several quoted words; using the first")
            )
        chosen = quoted[0]
        trace.append(
            TraceEvent("rule6", ParameterKind.IDENTIFIER, "elected", (chosen.text,),
                       value=chosen.text, detail="quoted word",
                       indexes=(chosen.index,))
        )
        return chosen.text, (chosen.index,), False

    wildcards = [t for t in tagged if t.token.has_wildcard]
    if len(wildcards) == 1:
        chosen = wildcards[0]
        trace.append(
            TraceEvent("rule6", ParameterKind.IDENTIFIER, "elected", (chosen.text,),
                       value=chosen.text, detail="unique wildcard word",
                       indexes=(chosen.index,))
        )
        return chosen.text, (chosen.index,), False
    if len(wildcards) > 1:
        trace.append(
            TraceEvent("rule6", ParameterKind.IDENTIFIER, "note",
                       tuple(t.text for t in wildcards),
                       detail="several wildcard words; falling back to probabilities")
        )

    pool = []
    for candidate in table.for_parameter(ParameterKind.IDENTIFIER):
        if set(candidate.token_indexes) & consumed:
            trace.append(
                TraceEvent("rule5", ParameterKind.IDENTIFIER, "removed", candidate.texts,
                           detail="token already elected for another parameter")
            )
            continue
        pool.append(candidate)
    if pool:
        winner = min(pool, key=_selection_key)
        text = " ".join(winner.texts)
        trace.append(
            TraceEvent("rule6", ParameterKind.IDENTIFIER, "elected", winner.texts,
                       value=text, detail=f"p={winner.probability}",
                       indexes=winner.token_indexes)
        )
        return text, winner.token_indexes, False

    trace.append(
        TraceEvent("rule6", ParameterKind.IDENTIFIER, "defaulted", value="*",
                   detail="no identifier candidate survived")
    )
    return "*", (), True


def elect(
    table: CandidateTable,
    multikeys: list[Candidate],
    tagged: list[TaggedToken],
    vocab: MappingTable,
    deps: DependencyTable,
) -> ElectedQuery:
    trace: list[TraceEvent] = [
        TraceEvent("rule4", None, "start",
                   detail="election order: context, element kind, identifier")
    ]
    consumed: set[int] = set()

    pools: dict[ParameterKind, list[Candidate]] = {
        parameter: list(table.for_parameter(parameter)) for parameter in _ENUM_PARAMETERS
    }
    for candidate in multikeys:
        pools[candidate.parameter].append(candidate)

    context_value, context_winner = _elect_enum_parameter(
        ParameterKind.CONTEXT, pools[ParameterKind.CONTEXT], vocab, consumed, trace
    )
    if context_winner is not None:
        consumed.update(context_winner.token_indexes)

    kind_value, kind_winner = _elect_enum_parameter(
        ParameterKind.ELEMENT_KIND, pools[ParameterKind.ELEMENT_KIND], vocab, consumed, trace
    )
    if kind_winner is not None:
        consumed.update(kind_winner.token_indexes)

    identifier, identifier_indexes, defaulted = _elect_identifier(
        tagged, table, consumed, trace
    )
    consumed.update(identifier_indexes)

    context = context_value if context_value is not None else ContextKind.UNKNOWN
    kind = kind_value if kind_value is not None else ElementKind.UNKNOWN
    if kind is ElementKind.UNKNOWN and context is not ContextKind.UNKNOWN:
        inferred = deps.infer_element_kind(context)
        if inferred is not None:
            kind = inferred
            trace.append(
                TraceEvent("inference", ParameterKind.ELEMENT_KIND, "inferred",
                           value=inferred.value,
                           detail=f"implied by context {context.value}")
            )

    return ElectedQuery(
        element_kind=kind,
        context=context,
        identifier=identifier,
        trace=trace,
        identifier_defaulted=defaulted,
    )


def translate(
    raw_query: str,
    corpus: Corpus,
    vocab: MappingTable,
    deps: DependencyTable,
    lexicon: Lexicon,
) -> TranslationOutcome:
    """Run the whole pipeline; never raises for ordinary query text."""
    try:
        tokens = tokenize(raw_query)
    except EmptyQuery:
        return TranslationOutcome(
            status=TranslationStatus.NOT_UNDERSTOOD,
            elected=None,
            candidate_table=CandidateTable.empty(()),
            diagnostics=["empty query"],
        )
    tagged = pos_tag(tokens, lexicon)
    try:
        form = grammatical_form(tagged)
    except EmptyForm:
        return TranslationOutcome(
            status=TranslationStatus.NOT_UNDERSTOOD,
            elected=None,
            candidate_table=CandidateTable.empty(()),
            diagnostics=["query contains no noun and no verb"],
            tagged=tagged,
        )

    table = candidates_for(form, tagged, corpus)
    diagnostics: list[str] = []
    if table.match_count == 0:
        diagnostics.append("no matching grammatical form in the training data")
    multikeys = collect_multikey_candidates(tagged, vocab)
    election = elect(table, multikeys, tagged, vocab, deps)
    diagnostics.extend(event.line() for event in election.trace)

    understood = election.is_understood()
    return TranslationOutcome(
        status=TranslationStatus.UNDERSTOOD if understood else TranslationStatus.NOT_UNDERSTOOD,
        elected=election if understood else None,
        candidate_table=table,
        diagnostics=diagnostics,
        election=election,
        tagged=tagged,
    )
