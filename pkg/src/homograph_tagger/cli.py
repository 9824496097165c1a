"""Command-line interface: validate, analyze, tag and eval subcommands.

Exit codes: 0 on success, 1 on a data error (malformed lexicon,
vocabulary, tag map or corpus, or failed evaluation preconditions),
2 on a usage or I/O error. Diagnostics go to stderr; data goes to
stdout or to the chosen output paths.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import click

from .errors import EvaluationError, TaggerDataError
from .evaluation import evaluate, render_report
from .lexicon import (
    analyze_lexicon,
    default_vocabulary,
    load_lexicon,
    load_vocabulary,
    render_taxonomy,
)
from .pipeline import TokenStatus, read_corpus, render_output, status_counts, tag_document
from .tagmap import default_tagmap, load_tagmap

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE_ERROR = 2


@dataclass
class RunConfig:
    """Option bundle shared by the subcommands."""

    lexicon_path: str
    vocabulary_path: str | None = None
    tagmap_path: str | None = None
    corpus_path: str | None = None
    output_path: str | None = None
    report_path: str | None = None
    strict: bool = True
    skip_proper: bool = False
    report_format: str = "text"


def _fail(exc: Exception) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_DATA_ERROR if isinstance(exc, TaggerDataError) else EXIT_USAGE_ERROR


def _load_resources(config: RunConfig):
    vocabulary = (
        load_vocabulary(config.vocabulary_path)
        if config.vocabulary_path
        else default_vocabulary()
    )
    lexicon = load_lexicon(config.lexicon_path, vocabulary)
    mapping = (
        load_tagmap(config.tagmap_path, vocabulary)
        if config.tagmap_path
        else default_tagmap(vocabulary)
    )
    return lexicon, mapping


def _tag_corpus(config: RunConfig):
    lexicon, mapping = _load_resources(config)
    documents = read_corpus(config.corpus_path)
    results = []
    for document in documents:
        results.extend(
            tag_document(
                lexicon,
                mapping,
                document,
                strict=config.strict,
                skip_proper=config.skip_proper,
            )
        )
    return lexicon, documents, results


def cmd_validate(config: RunConfig) -> int:
    """Exit 0 iff the lexicon, vocabulary and tag map all load cleanly."""
    try:
        lexicon, mapping = _load_resources(config)
    except (TaggerDataError, OSError) as exc:
        return _fail(exc)
    print(
        f"lexicon ok: {len(lexicon)} word types; tag map ok: {len(mapping)} fine tags",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_analyze(config: RunConfig) -> int:
    """Print the disambiguation taxonomy report for a lexicon."""
    try:
        vocabulary = (
            load_vocabulary(config.vocabulary_path)
            if config.vocabulary_path
            else default_vocabulary()
        )
        lexicon = load_lexicon(config.lexicon_path, vocabulary)
        report = analyze_lexicon(lexicon)
    except (TaggerDataError, OSError) as exc:
        return _fail(exc)
    sys.stdout.write(render_taxonomy(report, config.report_format))
    return EXIT_OK


def cmd_tag(config: RunConfig) -> int:
    """Tag a corpus and write the output file (or stdout)."""
    try:
        _, documents, results = _tag_corpus(config)
        text = render_output(results)
        if config.output_path:
            with open(config.output_path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (TaggerDataError, OSError) as exc:
        return _fail(exc)
    counts = status_counts(results)
    print(
        f"tagged {len(results)} tokens in {len(documents)} documents:"
        f" {counts[TokenStatus.MATCHED]} matched,"
        f" {counts[TokenStatus.FALLBACK]} fallback,"
        f" {counts[TokenStatus.UNKNOWN_WORD]} unknown,"
        f" {counts[TokenStatus.CLOSED_CLASS]} closed-class",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_eval(config: RunConfig) -> int:
    """Tag a gold-annotated corpus and print the evaluation report."""
    try:
        lexicon, documents, results = _tag_corpus(config)
        gold = [token.gold_homograph_id for doc in documents for token in doc.tokens]
        if all(g is None for g in gold):
            raise EvaluationError(
                f"{config.corpus_path}: corpus carries no gold homograph annotations"
            )
        report = evaluate(lexicon, results, gold)
        text = render_report(report, config.report_format)
        if config.report_path:
            with open(config.report_path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (TaggerDataError, OSError) as exc:
        return _fail(exc)
    return EXIT_OK


# ---------------------------------------------------------------------------
# click wiring


@click.group()
def main():
    """Lexicon-driven homograph tagging from part-of-speech tags."""


_lexicon_option = click.option(
    "--lexicon", "lexicon_path", required=True, type=click.Path(), help="Lexicon file (JSON Lines)."
)
_vocab_option = click.option(
    "--vocab",
    "vocabulary_path",
    type=click.Path(),
    default=None,
    help="Coarse tag vocabulary file (default: the embedded 17-tag set).",
)
_tagmap_option = click.option(
    "--tagmap",
    "tagmap_path",
    type=click.Path(),
    default=None,
    help="Fine-to-coarse tag mapping file (default: the embedded Penn Treebank table).",
)
_lenient_option = click.option(
    "--lenient",
    is_flag=True,
    help="Treat unmapped fine tags as closed class instead of failing.",
)
_skip_proper_option = click.option(
    "--skip-proper",
    is_flag=True,
    help="Pass proper-noun tokens through without sense tagging.",
)
_report_format_option = click.option(
    "--report-format",
    type=click.Choice(["text", "structured"]),
    default="text",
    show_default=True,
    help="Report rendering: human-readable text or a flat JSON record.",
)


@main.command()
@_lexicon_option
@_vocab_option
@_tagmap_option
def validate(lexicon_path, vocabulary_path, tagmap_path):
    """Check that a lexicon (and optional vocabulary and tag map) load cleanly."""
    config = RunConfig(
        lexicon_path=lexicon_path,
        vocabulary_path=vocabulary_path,
        tagmap_path=tagmap_path,
    )
    sys.exit(cmd_validate(config))


@main.command()
@_lexicon_option
@_vocab_option
@_report_format_option
def analyze(lexicon_path, vocabulary_path, report_format):
    """Classify every word type and print the taxonomy report."""
    config = RunConfig(
        lexicon_path=lexicon_path,
        vocabulary_path=vocabulary_path,
        report_format=report_format,
    )
    sys.exit(cmd_analyze(config))


@main.command()
@_lexicon_option
@_vocab_option
@_tagmap_option
@click.option("--corpus", "corpus_path", required=True, type=click.Path(), help="Tagged corpus file.")
@click.option("--out", "output_path", type=click.Path(), default=None, help="Output file (default: stdout).")
@_lenient_option
@_skip_proper_option
def tag(lexicon_path, vocabulary_path, tagmap_path, corpus_path, output_path, lenient, skip_proper):
    """Assign a homograph to every token of a POS-tagged corpus."""
    config = RunConfig(
        lexicon_path=lexicon_path,
        vocabulary_path=vocabulary_path,
        tagmap_path=tagmap_path,
        corpus_path=corpus_path,
        output_path=output_path,
        strict=not lenient,
        skip_proper=skip_proper,
    )
    sys.exit(cmd_tag(config))


@main.command(name="eval")
@_lexicon_option
@_vocab_option
@_tagmap_option
@click.option(
    "--corpus",
    "corpus_path",
    required=True,
    type=click.Path(),
    help="Tagged corpus file with gold homograph annotations.",
)
@click.option("--report", "report_path", type=click.Path(), default=None, help="Report file (default: stdout).")
@_report_format_option
@_lenient_option
@_skip_proper_option
def eval_command(
    lexicon_path, vocabulary_path, tagmap_path, corpus_path, report_path, report_format, lenient, skip_proper
):
    """Tag a gold-annotated corpus and score the assignments."""
    config = RunConfig(
        lexicon_path=lexicon_path,
        vocabulary_path=vocabulary_path,
        tagmap_path=tagmap_path,
        corpus_path=corpus_path,
        report_path=report_path,
        report_format=report_format,
        strict=not lenient,
        skip_proper=skip_proper,
    )
    sys.exit(cmd_eval(config))
