"""Scoring of homograph assignments against gold annotations.

Scores are stratified by whether the token's word type is
polyhomographic: monohomographic tokens are trivially correct whenever
the gold annotation comes from the same lexicon, so the polyhomographic
stratum is where disambiguation is actually measured.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import EvaluationError
from .lexicon import Lexicon, lookup
from .pipeline import SenseTaggedToken, TokenStatus, lookup_key
from .util import fmt_pct


@dataclass(frozen=True)
class EvalReport:
    """Aggregate scores over one tagging run.

    Only open-class, known, gold-annotated tokens enter the accuracy
    denominators; n_open_class and n_unknown record the excluded
    populations (unannotated known tokens are the remainder).
    fallback_count tallies open-class known tokens that needed the
    fallback rule, annotated or not. Accuracy fields and poly_share are
    fractions in 0..1, None when their denominator is zero.
    """

    n_open_class: int
    n_unknown: int
    n_mono: int
    n_poly: int
    correct_mono: int
    correct_poly: int
    fallback_count: int
    accuracy_overall: float | None
    accuracy_mono: float | None
    accuracy_poly: float | None
    poly_share: float | None


def evaluate(
    lexicon: Lexicon,
    results: Sequence[SenseTaggedToken],
    gold: Sequence[int | None],
) -> EvalReport:
    """Score assignments against position-aligned gold homograph ids.

    A scored token is correct when its assigned homograph id equals the
    gold id. Gold ids are range-checked against the token's word type;
    the lexicon must be the one the results were produced with.
    """
    if len(results) != len(gold):
        raise EvaluationError(
            f"results/gold length mismatch: {len(results)} results, {len(gold)} gold ids"
        )
    n_open = n_unknown = fallbacks = 0
    n_mono = n_poly = correct_mono = correct_poly = 0
    for tagged, gold_id in zip(results, gold):
        if not tagged.open_class:
            continue
        n_open += 1
        if tagged.status is TokenStatus.UNKNOWN_WORD:
            n_unknown += 1
            continue
        if tagged.status is TokenStatus.FALLBACK:
            fallbacks += 1
        if gold_id is None:
            continue
        entry = lookup(lexicon, lookup_key(tagged.token))
        if entry is None:
            raise EvaluationError(
                f"token {tagged.token.surface!r} is not in the lexicon;"
                " were the results produced with a different lexicon?"
            )
        if not 1 <= gold_id <= len(entry.homographs):
            where = (
                f"line {tagged.token.line}"
                if tagged.token.line is not None
                else f"token {tagged.token.index}"
            )
            raise EvaluationError(
                f"gold homograph id {gold_id} out of range 1..{len(entry.homographs)}"
                f" for {entry.key!r} ({where})"
            )
        correct = tagged.homograph_id == gold_id
        if tagged.polyhomographic:
            n_poly += 1
            correct_poly += correct
        else:
            n_mono += 1
            correct_mono += correct
    scored = n_mono + n_poly
    return EvalReport(
        n_open_class=n_open,
        n_unknown=n_unknown,
        n_mono=n_mono,
        n_poly=n_poly,
        correct_mono=correct_mono,
        correct_poly=correct_poly,
        fallback_count=fallbacks,
        accuracy_overall=(correct_mono + correct_poly) / scored if scored else None,
        accuracy_mono=correct_mono / n_mono if n_mono else None,
        accuracy_poly=correct_poly / n_poly if n_poly else None,
        poly_share=n_poly / scored if scored else None,
    )


def render_report(report: EvalReport, fmt: str = "text") -> str:
    """Render an EvalReport as a small text table or a flat JSON record.

    The text view shows percentages to one decimal place (half-up) and
    'n/a' for undefined ratios; the structured view keeps raw fractions.
    """
    if fmt == "structured":
        return json.dumps(asdict(report)) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    scored = report.n_mono + report.n_poly
    unannotated = report.n_open_class - scored - report.n_unknown
    lines = [
        f"open-class tokens: {report.n_open_class}",
        f"  unknown words:   {report.n_unknown}",
        f"  unannotated:     {unannotated}",
        f"  scored:          {scored} (mono {report.n_mono}, poly {report.n_poly})",
        f"  fallback:        {report.fallback_count}",
        "overall: {} poly: {} mono: {} poly-share: {}".format(
            fmt_pct(report.accuracy_overall),
            fmt_pct(report.accuracy_poly),
            fmt_pct(report.accuracy_mono),
            fmt_pct(report.poly_share),
        ),
    ]
    return "\n".join(lines) + "\n"
