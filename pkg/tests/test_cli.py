import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from homograph_tagger.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def fx(fixtures_dir, name):
    return str(fixtures_dir / name)


def invoke(runner, *args):
    return runner.invoke(main, [str(a) for a in args])


# ---------------------------------------------------------------------------
# validate


def test_validate_ok(runner, fixtures_dir):
    result = invoke(runner, "validate", "--lexicon", fx(fixtures_dir, "pipeline_lexicon.jsonl"))
    assert result.exit_code == 0
    assert "lexicon ok: 72 word types; tag map ok: 48 fine tags" in result.stderr
    assert result.stdout == ""


def test_validate_reports_data_errors_on_exit_1(runner, tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"word": "x"}\n', encoding="utf-8")
    result = invoke(runner, "validate", "--lexicon", bad)
    assert result.exit_code == 1
    assert result.stderr.startswith("error: ")
    assert "bad.jsonl:1" in result.stderr


def test_missing_file_is_a_usage_error(runner, tmp_path):
    result = invoke(runner, "validate", "--lexicon", tmp_path / "nope.jsonl")
    assert result.exit_code == 2
    assert "error:" in result.stderr


def test_missing_required_option_is_a_usage_error(runner):
    result = invoke(runner, "validate")
    assert result.exit_code == 2


def test_unknown_subcommand_is_a_usage_error(runner):
    assert invoke(runner, "frobnicate").exit_code == 2


# ---------------------------------------------------------------------------
# analyze


def test_analyze_text_report(runner, fixtures_dir):
    result = invoke(runner, "analyze", "--lexicon", fx(fixtures_dir, "analyze_four.jsonl"))
    assert result.exit_code == 0
    assert "word types:      4" in result.stdout
    assert "no-disambiguation: 1" in result.stdout


def test_analyze_structured_report(runner, fixtures_dir):
    result = invoke(
        runner, "analyze",
        "--lexicon", fx(fixtures_dir, "taxonomy_lexicon.jsonl"),
        "--report-format", "structured",
    )
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    expected = json.loads((fixtures_dir / "taxonomy_expected.json").read_text("utf-8"))
    assert payload == expected


def test_analyze_empty_lexicon_fails(runner, tmp_path):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("", encoding="utf-8")
    result = invoke(runner, "analyze", "--lexicon", empty)
    assert result.exit_code == 1
    assert "empty" in result.stderr


# ---------------------------------------------------------------------------
# tag


def test_tag_writes_the_golden_output(runner, fixtures_dir, tmp_path):
    out = tmp_path / "out.tsv"
    result = invoke(
        runner, "tag",
        "--lexicon", fx(fixtures_dir, "pipeline_lexicon.jsonl"),
        "--corpus", fx(fixtures_dir, "news_corpus.tsv"),
        "--out", out,
    )
    assert result.exit_code == 0
    golden = (fixtures_dir / "news_corpus_tagged.golden").read_bytes()
    assert out.read_bytes() == golden
    assert (
        "tagged 209 tokens in 5 documents:"
        " 107 matched, 3 fallback, 7 unknown, 92 closed-class"
    ) in result.stderr


def test_tag_defaults_to_stdout(runner, fixtures_dir):
    result = invoke(
        runner, "tag",
        "--lexicon", fx(fixtures_dir, "eval_mixed_lexicon.jsonl"),
        "--corpus", fx(fixtures_dir, "eval_mixed_corpus.tsv"),
    )
    assert result.exit_code == 0
    assert result.stdout.startswith("#homograph-tagger v1\n")
    assert result.stdout.count("\n") == 14  # header + 13 tokens


def test_tag_skip_proper_reclassifies_proper_nouns(runner, fixtures_dir, tmp_path):
    result = invoke(
        runner, "tag",
        "--lexicon", fx(fixtures_dir, "pipeline_lexicon.jsonl"),
        "--corpus", fx(fixtures_dir, "news_corpus.tsv"),
        "--out", tmp_path / "out.tsv",
        "--skip-proper",
    )
    assert result.exit_code == 0
    # the six NNP tokens move from unknown to closed-class
    assert "107 matched, 3 fallback, 1 unknown, 98 closed-class" in result.stderr


def test_tag_unmapped_tag_fails_with_tag_and_line(runner, fixtures_dir, tmp_path):
    corpus = tmp_path / "c.tsv"
    corpus.write_text("ok\tNN\nodd\tBES\n", encoding="utf-8")
    result = invoke(
        runner, "tag",
        "--lexicon", fx(fixtures_dir, "pipeline_lexicon.jsonl"),
        "--corpus", corpus,
    )
    assert result.exit_code == 1
    assert "'BES'" in result.stderr
    assert "line 2" in result.stderr


def test_tag_lenient_passes_unmapped_tags_through(runner, fixtures_dir, tmp_path):
    corpus = tmp_path / "c.tsv"
    corpus.write_text("ok\tNN\nodd\tBES\n", encoding="utf-8")
    result = invoke(
        runner, "tag",
        "--lexicon", fx(fixtures_dir, "pipeline_lexicon.jsonl"),
        "--corpus", corpus,
        "--lenient",
    )
    assert result.exit_code == 0
    assert "1 closed-class" in result.stderr


def test_tag_empty_corpus_fails(runner, fixtures_dir, tmp_path):
    corpus = tmp_path / "c.tsv"
    corpus.write_text("# nothing but comments\n", encoding="utf-8")
    result = invoke(
        runner, "tag",
        "--lexicon", fx(fixtures_dir, "pipeline_lexicon.jsonl"),
        "--corpus", corpus,
    )
    assert result.exit_code == 1
    assert "empty corpus" in result.stderr


def test_tag_declared_empty_document_yields_header_only_output(runner, fixtures_dir, tmp_path):
    corpus = tmp_path / "c.tsv"
    corpus.write_text("# doc: empty\n", encoding="utf-8")
    result = invoke(
        runner, "tag",
        "--lexicon", fx(fixtures_dir, "pipeline_lexicon.jsonl"),
        "--corpus", corpus,
    )
    assert result.exit_code == 0
    assert result.stdout == "#homograph-tagger v1\n"
    assert "tagged 0 tokens in 1 documents" in result.stderr


def test_tag_with_custom_vocab_and_tagmap(runner, fixtures_dir, tmp_path):
    vocab = tmp_path / "vocab.txt"
    vocab.write_text("noun\nverb\nstop\n", encoding="utf-8")
    tagmap = tmp_path / "map.tsv"
    tagmap.write_text("!open: noun verb\nN\tnoun\nV\tverb\nD\tstop\n", encoding="utf-8")
    lexicon = tmp_path / "lex.jsonl"
    lexicon.write_text(
        json.dumps({"word": "run", "homographs": [
            {"pos": ["noun"], "senses": [{"def": "a jog"}]},
            {"pos": ["verb"], "senses": [{"def": "to jog"}]},
        ]}) + "\n",
        encoding="utf-8",
    )
    corpus = tmp_path / "c.tsv"
    corpus.write_text("the\tD\nrun\tV\n", encoding="utf-8")
    result = invoke(
        runner, "tag",
        "--lexicon", lexicon, "--vocab", vocab, "--tagmap", tagmap, "--corpus", corpus,
    )
    assert result.exit_code == 0
    assert "1\trun\tverb\tM\t2" in result.stdout


# ---------------------------------------------------------------------------
# eval


def test_eval_text_report(runner, fixtures_dir):
    result = invoke(
        runner, "eval",
        "--lexicon", fx(fixtures_dir, "eval_mixed_lexicon.jsonl"),
        "--corpus", fx(fixtures_dir, "eval_mixed_corpus.tsv"),
    )
    assert result.exit_code == 0
    assert result.stdout.endswith("overall: 90.0% poly: 83.3% mono: 100.0% poly-share: 60.0%\n")


def test_eval_structured_report_to_file(runner, fixtures_dir, tmp_path):
    report_path = tmp_path / "report.json"
    result = invoke(
        runner, "eval",
        "--lexicon", fx(fixtures_dir, "eval_mixed_lexicon.jsonl"),
        "--corpus", fx(fixtures_dir, "eval_mixed_corpus.tsv"),
        "--report", report_path,
        "--report-format", "structured",
    )
    assert result.exit_code == 0
    payload = json.loads(report_path.read_text("utf-8"))
    assert payload["n_poly"] == 6
    assert payload["accuracy_overall"] == 0.9
    assert payload["poly_share"] == 0.6


def test_eval_requires_gold_annotations(runner, fixtures_dir, tmp_path):
    corpus = tmp_path / "c.tsv"
    corpus.write_text("bank\tNN\nthe\tDT\n", encoding="utf-8")
    result = invoke(
        runner, "eval",
        "--lexicon", fx(fixtures_dir, "pipeline_lexicon.jsonl"),
        "--corpus", corpus,
    )
    assert result.exit_code == 1
    assert "no gold homograph annotations" in result.stderr


def test_eval_gold_out_of_range_fails(runner, fixtures_dir, tmp_path):
    corpus = tmp_path / "c.tsv"
    corpus.write_text("bank\tNN\t\t9\n", encoding="utf-8")
    result = invoke(
        runner, "eval",
        "--lexicon", fx(fixtures_dir, "pipeline_lexicon.jsonl"),
        "--corpus", corpus,
    )
    assert result.exit_code == 1
    assert "out of range" in result.stderr


# ---------------------------------------------------------------------------
# entry points


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "homograph_tagger", "--help"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "validate" in proc.stdout and "eval" in proc.stdout
