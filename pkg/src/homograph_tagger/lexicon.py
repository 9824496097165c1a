"""Homograph lexicon: data model, JSON Lines loading and serialization,
lookup, and the static analysis that bounds how far part-of-speech
information alone can take homograph disambiguation.

A lexicon file holds one word type per line as a JSON record:

    {"word":"bank","homographs":[
        {"pos":["n"],"senses":[{"def":"..."},{"def":"..."}]},
        {"pos":["v"],"senses":[{"def":"..."}]}]}

Order is authoritative: homographs and senses are listed most frequent
first, so position 1 is the most likely reading and ids are just
1-based positions. Keys are normalized by lowercasing, both at load
time and on lookup; no stemming or other conflation is applied.
"""

from __future__ import annotations

import enum
import json
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from importlib.resources import files
from pathlib import Path
from typing import Iterable, Iterator

from .errors import LexiconError, VocabularyError
from .util import pct_of

_TAG_RE = re.compile(r"[A-Za-z][A-Za-z0-9_-]*")


def normalize_key(surface: str) -> str:
    """Normalize a headword or surface form to its lookup key."""
    return surface.lower()


# ---------------------------------------------------------------------------
# coarse tag vocabulary


@cache
def default_vocabulary() -> tuple[str, ...]:
    """The 17-tag coarse category vocabulary shipped with the package."""
    text = files("homograph_tagger").joinpath("data/coarse_tags.txt").read_text("utf-8")
    return _parse_vocabulary(text.splitlines(), "<default vocabulary>")


def load_vocabulary(path: str | Path) -> tuple[str, ...]:
    """Load a vocabulary file: one coarse tag per line, '#' comments allowed."""
    with open(path, encoding="utf-8") as fh:
        return _parse_vocabulary(fh.read().splitlines(), str(path))


def _parse_vocabulary(lines: Iterable[str], source: str) -> tuple[str, ...]:
    tags: list[str] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not _TAG_RE.fullmatch(line):
            raise VocabularyError(f"{source}:{lineno}: invalid coarse tag {line!r}")
        if line in seen:
            raise VocabularyError(f"{source}:{lineno}: duplicate coarse tag {line!r}")
        seen.add(line)
        tags.append(line)
    if not tags:
        raise VocabularyError(f"{source}: vocabulary is empty")
    return tuple(tags)


# ---------------------------------------------------------------------------
# data model


class DisambCategory(enum.Enum):
    """How far a correct coarse POS tag can narrow a word type's homographs."""

    MONOHOMOGRAPHIC = "monohomographic"
    GUARANTEED = "guaranteed"
    POSSIBLE = "possible"
    NO_DISAMBIGUATION = "no-disambiguation"


@dataclass(frozen=True)
class SenseEntry:
    """One numbered sense within a homograph. The definition is opaque text."""

    sense_id: int
    definition: str


@dataclass(frozen=True)
class Homograph:
    """An ordered block of senses sharing one set of coarse POS tags.

    homograph_id is the 1-based position of the block within its word
    type; position is frequency rank. pos keeps source order and holds
    no duplicates.
    """

    homograph_id: int
    pos: tuple[str, ...]
    senses: tuple[SenseEntry, ...]

    @property
    def pos_set(self) -> frozenset[str]:
        return frozenset(self.pos)


@dataclass(frozen=True)
class WordTypeEntry:
    """A normalized headword and its ordered homographs."""

    key: str
    homographs: tuple[Homograph, ...]

    def sense_count(self) -> int:
        return sum(len(h.senses) for h in self.homographs)

    @property
    def polyhomographic(self) -> bool:
        return len(self.homographs) >= 2


@dataclass(frozen=True)
class Lexicon:
    """An immutable, insertion-ordered homograph dictionary."""

    vocabulary: tuple[str, ...]
    entries: tuple[WordTypeEntry, ...]
    _index: dict[str, WordTypeEntry] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {e.key: e for e in self.entries})

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[WordTypeEntry]:
        return iter(self.entries)


def lookup(lexicon: Lexicon, surface: str) -> WordTypeEntry | None:
    """Find the entry for a surface form or headword, or None."""
    return lexicon._index.get(normalize_key(surface))


# ---------------------------------------------------------------------------
# loading and serialization


def load_lexicon(path: str | Path, vocabulary: Iterable[str] | None = None) -> Lexicon:
    """Load a JSON Lines lexicon file.

    Records are validated against the coarse vocabulary (the shipped
    17-tag default when none is given). Duplicate word keys, unknown
    tags, and empty homograph or sense lists are rejected with the
    offending line number in the message.
    """
    vocab = tuple(vocabulary) if vocabulary is not None else default_vocabulary()
    vocab_set = frozenset(vocab)
    source = str(path)
    entries: list[WordTypeEntry] = []
    first_line: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LexiconError(f"{source}:{lineno}: invalid JSON: {exc.msg}") from None
            entry = _entry_from_record(record, vocab_set, source, lineno)
            if entry.key in first_line:
                raise LexiconError(
                    f"{source}:{lineno}: duplicate word type key {entry.key!r}"
                    f" (first defined on line {first_line[entry.key]})"
                )
            first_line[entry.key] = lineno
            entries.append(entry)
    return Lexicon(vocabulary=vocab, entries=tuple(entries))


def _entry_from_record(record, vocab: frozenset[str], source: str, lineno: int) -> WordTypeEntry:
    def bad(message: str) -> LexiconError:
        return LexiconError(f"{source}:{lineno}: {message}")

    if not isinstance(record, dict):
        raise bad("record must be a JSON object")
    word = record.get("word")
    if not isinstance(word, str) or not word:
        raise bad("'word' must be a non-empty string")
    raw_homographs = record.get("homographs")
    if not isinstance(raw_homographs, list) or not raw_homographs:
        raise bad(f"{word!r}: 'homographs' must be a non-empty list")
    homographs = []
    for position, raw in enumerate(raw_homographs, start=1):
        if not isinstance(raw, dict):
            raise bad(f"{word!r}: homograph {position} must be a JSON object")
        pos = raw.get("pos")
        if not isinstance(pos, list) or not pos:
            raise bad(f"{word!r}: homograph {position}: 'pos' must be a non-empty list")
        seen_tags: list[str] = []
        for tag in pos:
            if not isinstance(tag, str):
                raise bad(f"{word!r}: homograph {position}: pos tags must be strings")
            if tag not in vocab:
                raise bad(f"{word!r}: homograph {position}: unknown coarse tag {tag!r}")
            if tag in seen_tags:
                raise bad(f"{word!r}: homograph {position}: duplicate pos tag {tag!r}")
            seen_tags.append(tag)
        raw_senses = raw.get("senses")
        if not isinstance(raw_senses, list) or not raw_senses:
            raise bad(f"{word!r}: homograph {position}: 'senses' must be a non-empty list")
        senses = []
        for sense_position, raw_sense in enumerate(raw_senses, start=1):
            if not isinstance(raw_sense, dict) or not isinstance(raw_sense.get("def"), str):
                raise bad(
                    f"{word!r}: homograph {position}: sense {sense_position}"
                    " must be an object with a string 'def'"
                )
            senses.append(SenseEntry(sense_position, raw_sense["def"]))
        homographs.append(Homograph(position, tuple(seen_tags), tuple(senses)))
    return WordTypeEntry(normalize_key(word), tuple(homographs))


def dump_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    """Serialize back to the JSON Lines format. load(dump(x)) equals x."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for entry in lexicon.entries:
            record = {
                "word": entry.key,
                "homographs": [
                    {
                        "pos": list(h.pos),
                        "senses": [{"def": s.definition} for s in h.senses],
                    }
                    for h in entry.homographs
                ],
            }
            fh.write(json.dumps(record, ensure_ascii=False, separators=(",", ":")) + "\n")


# ---------------------------------------------------------------------------
# disambiguation-bound analysis


def classify_word_type(entry: WordTypeEntry) -> DisambCategory:
    """Place a word type in the four-way POS-disambiguation taxonomy.

    Let count(c) be the number of homographs carrying coarse tag c, over
    the tags the word type can take at all. If every count is 1, a
    correct coarse tag always pins down a single homograph (guaranteed);
    if every count is 2 or more, no tag ever does (no-disambiguation);
    a mixture means some tags decide the homograph and some do not
    (possible). Word types with one homograph are trivial.
    """
    if len(entry.homographs) == 1:
        return DisambCategory.MONOHOMOGRAPHIC
    counts = Counter(tag for h in entry.homographs for tag in h.pos)
    if max(counts.values()) <= 1:
        return DisambCategory.GUARANTEED
    if min(counts.values()) >= 2:
        return DisambCategory.NO_DISAMBIGUATION
    return DisambCategory.POSSIBLE


@dataclass(frozen=True)
class TaxonomyReport:
    """Whole-lexicon disambiguation statistics.

    Percentages are rounded to one decimal place (half-up). The two
    "of polyhomographic" figures are None when the lexicon has no
    polyhomographic entries. possible_* percentages are cumulative:
    they include the guaranteed cases, and the *_all_types pair also
    counts monohomographic entries as trivially disambiguated.
    collision_histogram maps each coarse tag to the number of word
    types in which two or more homographs carry that tag.
    """

    n_word_types: int
    n_polysemous: int
    n_polyhomographic: int
    n_monohomographic: int
    n_guaranteed: int
    n_possible: int
    n_no_disambiguation: int
    polysemous_pct: float
    polyhomographic_pct: float
    guaranteed_pct_of_polyhomographic: float | None
    possible_pct_of_polyhomographic: float | None
    guaranteed_pct_all_types: float
    possible_pct_all_types: float
    collision_histogram: dict[str, int]


def analyze_lexicon(lexicon: Lexicon) -> TaxonomyReport:
    """Aggregate the four-way classification over a whole lexicon."""
    if not lexicon.entries:
        raise LexiconError("cannot analyze an empty lexicon")
    by_category: Counter[DisambCategory] = Counter()
    n_polysemous = 0
    n_polyhomographic = 0
    collisions: Counter[str] = Counter()
    for entry in lexicon.entries:
        by_category[classify_word_type(entry)] += 1
        if entry.sense_count() >= 2:
            n_polysemous += 1
        if entry.polyhomographic:
            n_polyhomographic += 1
        tag_counts = Counter(tag for h in entry.homographs for tag in h.pos)
        for tag, count in tag_counts.items():
            if count >= 2:
                collisions[tag] += 1
    n = len(lexicon.entries)
    n_mono = by_category[DisambCategory.MONOHOMOGRAPHIC]
    n_guaranteed = by_category[DisambCategory.GUARANTEED]
    n_possible = by_category[DisambCategory.POSSIBLE]
    n_none = by_category[DisambCategory.NO_DISAMBIGUATION]
    histogram = {tag: collisions[tag] for tag in lexicon.vocabulary if collisions[tag]}
    return TaxonomyReport(
        n_word_types=n,
        n_polysemous=n_polysemous,
        n_polyhomographic=n_polyhomographic,
        n_monohomographic=n_mono,
        n_guaranteed=n_guaranteed,
        n_possible=n_possible,
        n_no_disambiguation=n_none,
        polysemous_pct=pct_of(n_polysemous, n),
        polyhomographic_pct=pct_of(n_polyhomographic, n),
        guaranteed_pct_of_polyhomographic=(
            pct_of(n_guaranteed, n_polyhomographic) if n_polyhomographic else None
        ),
        possible_pct_of_polyhomographic=(
            pct_of(n_guaranteed + n_possible, n_polyhomographic) if n_polyhomographic else None
        ),
        guaranteed_pct_all_types=pct_of(n_mono + n_guaranteed, n),
        possible_pct_all_types=pct_of(n_mono + n_guaranteed + n_possible, n),
        collision_histogram=histogram,
    )


def render_taxonomy(report: TaxonomyReport, fmt: str = "text") -> str:
    """Render a TaxonomyReport as a text table or a flat JSON record."""
    if fmt == "structured":
        from dataclasses import asdict

        return json.dumps(asdict(report)) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")

    def pct(value: float | None) -> str:
        return "n/a" if value is None else f"{value:.1f}%"

    lines = [
        f"word types:      {report.n_word_types}",
        f"polysemous:      {report.n_polysemous} ({pct(report.polysemous_pct)})",
        f"polyhomographic: {report.n_polyhomographic} ({pct(report.polyhomographic_pct)})",
        "categories:",
        f"  monohomographic:   {report.n_monohomographic}",
        f"  guaranteed:        {report.n_guaranteed}",
        f"  possible:          {report.n_possible}",
        f"  no-disambiguation: {report.n_no_disambiguation}",
        "of polyhomographic word types:",
        f"  guaranteed:        {pct(report.guaranteed_pct_of_polyhomographic)}",
        f"  possible (cum.):   {pct(report.possible_pct_of_polyhomographic)}",
        "over all word types:",
        f"  guaranteed:        {pct(report.guaranteed_pct_all_types)}",
        f"  possible (cum.):   {pct(report.possible_pct_all_types)}",
    ]
    if report.collision_histogram:
        lines.append("homograph collisions by tag:")
        for tag, count in report.collision_histogram.items():
            lines.append(f"  {tag}: {count}")
    return "\n".join(lines) + "\n"
