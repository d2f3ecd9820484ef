"""Corpus loading and tokenization.

A corpus is an ordered set of plain-text units (one file per act or
chapter).  Each unit is tokenized into a position-indexed stream: tokens
are maximal runs of Unicode letters, optionally joined by interior
apostrophes (straight or curly), so contractions and possessives like
"Hamlet's" or "father’s" stay whole.  Everything else separates tokens.
"""

import re
from dataclasses import dataclass
from pathlib import Path

# Letters only (no digits, no underscore), with optional interior apostrophes.
# Leading/trailing apostrophes fall outside the match, so "'tis" yields "tis".
_TOKEN_RE = re.compile(r"[^\W\d_]+(?:['’][^\W\d_]+)*")


@dataclass(frozen=True)
class Token:
    surface: str
    folded: str
    position: int


@dataclass(frozen=True)
class TextUnit:
    """One input file: `id` is the file stem, `index` its 1-based order."""

    id: str
    index: int
    tokens: tuple[Token, ...]


@dataclass(frozen=True)
class Corpus:
    units: tuple[TextUnit, ...]
    source_path: str

    @property
    def unit_indices(self) -> tuple[int, ...]:
        return tuple(u.index for u in self.units)

    def unit(self, index: int) -> TextUnit:
        for u in self.units:
            if u.index == index:
                return u
        raise KeyError(f"no unit with index {index}")


def tokenize(text: str) -> tuple[Token, ...]:
    """Split text into tokens, preserving original spelling in `surface`."""
    return tuple(
        Token(surface=m.group(0), folded=m.group(0).casefold(), position=i)
        for i, m in enumerate(_TOKEN_RE.finditer(text))
    )


def load_corpus(path: str | Path, extension: str = ".txt") -> Corpus:
    """Load every `extension` file under `path` as one unit, in name order.

    Raises FileNotFoundError/NotADirectoryError for a bad path and
    ValueError naming the file and byte offset for non-UTF-8 content.
    """
    directory = Path(path)
    if not directory.exists():
        raise FileNotFoundError(f"corpus directory not found: {directory}")
    if not directory.is_dir():
        raise NotADirectoryError(f"corpus path is not a directory: {directory}")

    units = []
    for i, file in enumerate(sorted(directory.glob(f"*{extension}")), start=1):
        try:
            text = file.read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise ValueError(
                f"{file}: not valid UTF-8 (byte offset {e.start})"
            ) from e
        units.append(TextUnit(id=file.stem, index=i, tokens=tokenize(text)))
    return Corpus(units=tuple(units), source_path=str(directory))
