import pytest

from nlquery.evaluation import (
    GoldFileError,
    evaluate,
    load_gold_file,
    parse_gold_text,
    training_gold,
)


class TestGoldFile:
    def test_parse(self):
        entries = parse_gold_text(
            "Where is number read\tFIELD\tREAD_ACCESS\tnumber\n"
        )
        assert entries[0].triple() == ("FIELD", "READ_ACCESS", "number")

    def test_empty_is_fatal(self):
        with pytest.raises(GoldFileError):
            parse_gold_text("# only a comment\n")

    def test_malformed_line_reports_number(self, tmp_path):
        path = tmp_path / "gold.tsv"
        path.write_text("good\tFIELD\tREAD_ACCESS\tx\nbad line\n")
        with pytest.raises(GoldFileError, match=":2:"):
            load_gold_file(path)

    def test_unknown_kind_rejected(self):
        with pytest.raises(GoldFileError):
            parse_gold_text("q\tNOPE\tREAD_ACCESS\tx\n")

    def test_bundled_gold_loads_and_is_heldout(self, engine):
        entries = load_gold_file(engine.config.resolved_gold_path())
        assert len(entries) >= 50
        training_texts = {q.raw_text for q in engine.corpus.all_queries()}
        assert not {e.query for e in entries} & training_texts


class TestEvaluate:
    def test_report_arithmetic_matches_verdicts(self, engine):
        entries = load_gold_file(engine.config.resolved_gold_path())
        report = evaluate(entries, engine.translate)
        assert report.total == len(entries)
        assert report.understood == sum(v.understood for v in report.per_query)
        assert report.correct == sum(v.correct for v in report.per_query)
        assert report.correct <= report.understood <= report.total

    def test_summary_line_is_machine_readable(self, engine):
        entries = parse_gold_text("Where is number read\tFIELD\tREAD_ACCESS\tnumber\n")
        report = evaluate(entries, engine.translate)
        assert report.summary_line().startswith("EVAL total=1 understood=1 correct=1")


class TestTrainingGold:
    def test_training_queries_resolve_to_full_triples(self, corpus, vocab, deps):
        entries = training_gold(corpus, vocab, deps)
        assert len(entries) == corpus.total_count
        for entry in entries:
            assert entry.kind.value != "UNKNOWN"
            assert entry.context.value != "UNKNOWN"
            assert entry.identifier

    def test_self_consistency(self, engine, corpus, vocab, deps):
        entries = training_gold(corpus, vocab, deps)
        report = evaluate(entries, engine.translate)
        assert report.correct == report.total
