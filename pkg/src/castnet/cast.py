"""Raw-word extraction, curated casts, and occurrence matching.

The candidate list ("raw words") is what a human curates into a cast: a
set of canonical names, each owning one or more variant phrases that are
matched case-insensitively in the corpus.  Matching is greedy
longest-phrase-first and never overlaps, so "King Claudius" beats a bare
"Claudius" starting at the same token.
"""

from collections import Counter
from dataclasses import dataclass

from .corpus import Corpus, tokenize

KINDS = ("character", "place", "motif")
MAX_VARIANT_WORDS = 4


class CastError(ValueError):
    """Invalid cast content; `line` is set when a cast file is the source."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        prefix = ""
        if line is not None:
            prefix = f"line {line}: " if column is None else f"line {line}, column {column}: "
        super().__init__(prefix + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ExtractionConstraints:
    """Filters applied when proposing candidate words from the corpus."""

    min_length: int = 3
    capitalized_only: bool = True
    min_count: int = 2

    def __post_init__(self):
        if self.min_length < 1:
            raise ValueError("min_length must be >= 1")
        if self.min_count < 1:
            raise ValueError("min_count must be >= 1")


@dataclass(frozen=True)
class RawWordEntry:
    folded: str
    count: int
    sample_surface: str


def _fold_phrase(phrase: str) -> tuple[str, ...]:
    return tuple(t.folded for t in tokenize(phrase))


@dataclass(frozen=True)
class NameEntry:
    """A canonical name plus the variant phrases credited to it."""

    canonical: str
    variants: tuple[str, ...]
    kind: str = "character"

    def __post_init__(self):
        if not self.canonical.strip():
            raise CastError("canonical name is empty")
        if self.kind not in KINDS:
            raise CastError(f"unknown kind {self.kind!r} for {self.canonical}")
        if not self.variants:
            raise CastError(f"{self.canonical}: needs at least one variant")
        seen = set()
        for v in self.variants:
            words = _fold_phrase(v)
            if not 1 <= len(words) <= MAX_VARIANT_WORDS:
                raise CastError(
                    f"{self.canonical}: variant {v!r} must be 1..{MAX_VARIANT_WORDS} words"
                )
            if words in seen:
                raise CastError(f"{self.canonical}: duplicate variant {v!r}")
            seen.add(words)

    @property
    def match_keys(self) -> tuple[tuple[str, ...], ...]:
        return tuple(_fold_phrase(v) for v in self.variants)


@dataclass(frozen=True)
class Cast:
    entries: tuple[NameEntry, ...]

    def __post_init__(self):
        canon_seen: dict[str, str] = {}
        key_owner: dict[tuple[str, ...], str] = {}
        for e in self.entries:
            ck = e.canonical.casefold()
            if ck in canon_seen:
                raise CastError(f"duplicate canonical name {e.canonical!r}")
            canon_seen[ck] = e.canonical
            for v, key in zip(e.variants, e.match_keys):
                if key in key_owner:
                    raise CastError(
                        f"variant {v!r} claimed by both {key_owner[key]} and {e.canonical}"
                    )
                key_owner[key] = e.canonical

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(e.canonical for e in self.entries)

    @property
    def kinds(self) -> dict[str, str]:
        return {e.canonical: e.kind for e in self.entries}

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Occurrence:
    name: str
    unit_index: int
    position: int
    span: int


@dataclass(frozen=True)
class OccurrenceIndex:
    """Position-sorted matches per unit, keyed by canonical name."""

    per_unit: dict[int, dict[str, tuple[Occurrence, ...]]]
    names: tuple[str, ...]

    @property
    def unit_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.per_unit))

    def positions(self, unit_index: int, name: str) -> tuple[int, ...]:
        occs = self.per_unit.get(unit_index, {}).get(name, ())
        return tuple(o.position for o in occs)

    def count(self, name: str, unit_indices) -> int:
        return sum(len(self.per_unit.get(u, {}).get(name, ())) for u in unit_indices)


def extract_raw_words(corpus: Corpus, constraints: ExtractionConstraints) -> list[RawWordEntry]:
    """Propose candidate words: sorted by count descending, then alphabetically.

    A word passes if its length meets min_length, its total count meets
    min_count, and (when capitalized_only) at least one of its occurrences
    starts with an uppercase letter.
    """
    counts: Counter[str] = Counter()
    surfaces: dict[str, Counter[str]] = {}
    capitalized: set[str] = set()
    for unit in corpus.units:
        for tok in unit.tokens:
            counts[tok.folded] += 1
            surfaces.setdefault(tok.folded, Counter())[tok.surface] += 1
            if tok.surface[0].isupper():
                capitalized.add(tok.folded)

    entries = []
    for folded, count in counts.items():
        if len(folded) < constraints.min_length:
            continue
        if count < constraints.min_count:
            continue
        if constraints.capitalized_only and folded not in capitalized:
            continue
        best = max(surfaces[folded].items(), key=lambda kv: (kv[1], kv[0]))
        entries.append(RawWordEntry(folded=folded, count=count, sample_surface=best[0]))
    entries.sort(key=lambda e: (-e.count, e.folded))
    return entries


def parse_cast_file(text: str) -> Cast:
    """Parse the cast-file format into a Cast.

    One entry per line: ``CANONICAL [@place|@motif] : variant ( | variant )*``
    ``#`` starts a comment; blank lines are skipped.  Raises CastError with
    a line number on syntax or uniqueness violations.
    """
    entries: list[NameEntry] = []
    canon_lines: dict[str, tuple[str, int]] = {}
    key_claims: dict[tuple[str, ...], tuple[str, int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise CastError("expected ':' after the canonical name", lineno, len(raw) + 1)
        head, _, tail = line.partition(":")
        head = head.strip()

        kind = "character"
        if "@" in head:
            name_part, _, tag = head.partition("@")
            tag = tag.strip()
            if tag not in ("place", "motif"):
                raise CastError(f"unknown tag @{tag}", lineno, raw.find("@") + 1)
            kind = tag
            head = name_part.strip()
        if not head:
            raise CastError("missing canonical name", lineno, 1)

        variants = tuple(v.strip() for v in tail.split("|"))
        if any(not v for v in variants):
            raise CastError(f"{head}: empty variant", lineno)

        ck = head.casefold()
        if ck in canon_lines:
            first_name, first_line = canon_lines[ck]
            raise CastError(
                f"duplicate canonical name {head!r} (first defined on line {first_line})",
                lineno,
            )
        canon_lines[ck] = (head, lineno)

        try:
            entry = NameEntry(canonical=head, variants=variants, kind=kind)
        except CastError as e:
            raise CastError(str(e), lineno) from None

        for v, key in zip(entry.variants, entry.match_keys):
            if key in key_claims:
                owner, owner_line = key_claims[key]
                raise CastError(
                    f"variant {v!r} claimed by both {owner} (line {owner_line}) and {head}",
                    lineno,
                )
            key_claims[key] = (head, lineno)
        entries.append(entry)

    return Cast(entries=tuple(entries))


def format_cast_file(cast: Cast) -> str:
    """Inverse of parse_cast_file (comments are not preserved)."""
    lines = []
    for e in cast.entries:
        tag = "" if e.kind == "character" else f" @{e.kind}"
        lines.append(f"{e.canonical}{tag}: " + " | ".join(e.variants))
    return "\n".join(lines) + ("\n" if lines else "")


def match_occurrences(corpus: Corpus, cast: Cast) -> OccurrenceIndex:
    """Scan each unit left to right, matching the longest variant phrase.

    Matches never overlap: after a match the scan resumes past its span.
    Comparison is on case-folded token sequences, so corpus casing is
    irrelevant.  Phrases never match across unit boundaries.
    """
    table: dict[tuple[str, ...], str] = {}
    for e in cast.entries:
        for key in e.match_keys:
            table[key] = e.canonical
    span_lengths = sorted({len(k) for k in table}, reverse=True)

    per_unit: dict[int, dict[str, tuple[Occurrence, ...]]] = {}
    for unit in corpus.units:
        folded = [t.folded for t in unit.tokens]
        found: dict[str, list[Occurrence]] = {}
        i, n = 0, len(folded)
        while i < n:
            for span in span_lengths:
                if i + span > n:
                    continue
                name = table.get(tuple(folded[i : i + span]))
                if name is not None:
                    found.setdefault(name, []).append(
                        Occurrence(name=name, unit_index=unit.index, position=i, span=span)
                    )
                    i += span
                    break
            else:
                i += 1
        per_unit[unit.index] = {name: tuple(occs) for name, occs in found.items()}
    return OccurrenceIndex(per_unit=per_unit, names=cast.names)
