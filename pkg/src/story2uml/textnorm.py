"""Text normalization and dictionary-lookup spelling correction.

First pipeline stage: straighten typography, collapse whitespace, force a
terminal period, then repair misspelled tokens against a bundled lexicon.
Correction is deterministic: candidates within Damerau-Levenshtein distance
2 are ranked by (distance, corpus frequency descending, alphabetical), and
capitalized mid-sentence unknowns are presumed proper nouns and left alone.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Mapping

from .errors import EmptyInput

DATA_DIR = Path(__file__).parent / "data"
DEFAULT_LEXICON_PATH = DATA_DIR / "lexicon.tsv"
DEFAULT_CLOSED_CLASS_PATH = DATA_DIR / "closed_class.tsv"

_CHAR_MAP = {
    "‘": "'", "’": "'", "‚": "'", "‛": "'",
    "“": '"', "”": '"', "„": '"',
    "‐": "-", "‑": "-", "‒": "-",
    "–": "-", "—": "-", "―": "-",
    "…": "...",
}
_TRANSLATION = str.maketrans(_CHAR_MAP)
_WHITESPACE_RE = re.compile(r"\s+")
_WORD_RE = re.compile(r"[A-Za-z]+(?:'[A-Za-z]+)*")
_TERMINAL_PUNCT = ".!?"
# characters that carry no sentence-position information when scanning back
_SKIPPABLE_BEFORE_WORD = " \"'()[]"

MAX_EDIT_DISTANCE = 2


@dataclass(frozen=True)
class Lexicon:
    """Immutable word list backing correction, tagging, and lemma checks.

    ``entries`` holds every known lowercase form.  ``frequencies`` and
    ``tags`` cover the open-class vocabulary; ``closed_class`` maps
    determiners, pronouns, prepositions, conjunctions, and auxiliaries to
    their fixed tag names.
    """

    entries: frozenset[str]
    frequencies: Mapping[str, int] = field(default_factory=dict)
    closed_class: Mapping[str, str] = field(default_factory=dict)
    tags: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for word in self.entries:
            if not word or word != word.lower() or any(c.isspace() for c in word):
                raise ValueError(f"bad lexicon entry: {word!r}")
        for name, mapping in (("frequencies", self.frequencies),
                              ("closed_class", self.closed_class),
                              ("tags", self.tags)):
            missing = set(mapping) - set(self.entries)
            if missing:
                raise ValueError(f"{name} keys missing from entries: {sorted(missing)[:5]}")

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.entries

    def frequency(self, word: str) -> int:
        return self.frequencies.get(word, 0)


def load_lexicon(path: Path | str | None = None,
                 closed_class_path: Path | str | None = None) -> Lexicon:
    """Read the word list and the closed-class table.

    Word list rows are ``word<TAB>frequency`` with an optional third
    ``TAG`` column carrying the word's most frequent part of speech.
    Closed-class rows are ``word<TAB>TAG``.  Blank lines and ``#`` comments
    are ignored in both files.
    """
    path = Path(path) if path else DEFAULT_LEXICON_PATH
    closed_class_path = Path(closed_class_path) if closed_class_path else DEFAULT_CLOSED_CLASS_PATH
    entries: set[str] = set()
    frequencies: dict[str, int] = {}
    tags: dict[str, str] = {}
    for line in _read_lines(path):
        parts = line.split("\t")
        word = parts[0].strip().lower()
        entries.add(word)
        if len(parts) > 1 and parts[1].strip():
            frequencies[word] = int(parts[1])
        if len(parts) > 2 and parts[2].strip():
            tags[word] = parts[2].strip().upper()
    closed_class: dict[str, str] = {}
    for line in _read_lines(closed_class_path):
        word, tag = line.split("\t")[:2]
        word = word.strip().lower()
        entries.add(word)
        closed_class[word] = tag.strip().upper()
    return Lexicon(entries=frozenset(entries), frequencies=frequencies,
                   closed_class=closed_class, tags=tags)


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    return load_lexicon()


def _read_lines(path: Path):
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip("\n")
        if line.strip() and not line.lstrip().startswith("#"):
            yield line


@dataclass
class CorrectionReport:
    """Audit trail of one correction pass."""

    replacements: list[tuple[str, str, int]] = field(default_factory=list)
    untouched_unknown: list[str] = field(default_factory=list)

    def __post_init__(self):
        offsets = [off for _, _, off in self.replacements]
        if offsets != sorted(set(offsets)):
            raise ValueError("replacement offsets must be strictly increasing")
        for original, corrected, _ in self.replacements:
            if original == corrected:
                raise ValueError(f"replacement must change the token: {original!r}")


def normalize_text(raw: str) -> str:
    """Map curly quotes/dashes to ASCII, collapse whitespace, and make sure
    the text ends with sentence-final punctuation."""
    text = raw.translate(_TRANSLATION)
    text = _WHITESPACE_RE.sub(" ", text).strip()
    if not text:
        raise EmptyInput("no text left after normalization")
    if text[-1] not in _TERMINAL_PUNCT:
        text += "."
    return text


def damerau_levenshtein(a: str, b: str) -> int:
    """Edit distance counting deletions, insertions, substitutions, and
    adjacent transpositions (optimal string alignment)."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return la or lb
    prev2: list[int] = []
    prev = list(range(lb + 1))
    for i in range(1, la + 1):
        cur = [i] + [0] * lb
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                cur[j] = min(cur[j], prev2[j - 2] + 1)
        prev2, prev = prev, cur
    return prev[lb]


def best_candidate(word: str, lexicon: Lexicon) -> str | None:
    """Pick the replacement for an unknown word, or None when nothing is
    within the edit-distance cap.

    Candidates must preserve the original's first letter (the vast
    majority of real typos do, and the constraint keeps rare words and
    names from being rewritten into unrelated vocabulary).  Ranking:
    smaller distance first, then higher corpus frequency, then
    alphabetical order so the result never depends on iteration order.
    """
    lowered = word.lower()
    best: tuple[int, int, str] | None = None
    for entry in lexicon.entries:
        if entry[0] != lowered[0]:
            continue
        if abs(len(entry) - len(lowered)) > MAX_EDIT_DISTANCE:
            continue
        dist = damerau_levenshtein(lowered, entry)
        if dist > MAX_EDIT_DISTANCE:
            continue
        key = (dist, -lexicon.frequency(entry), entry)
        if best is None or key < best:
            best = key
    return best[2] if best else None


def _is_sentence_initial(text: str, start: int) -> bool:
    i = start - 1
    while i >= 0 and text[i] in _SKIPPABLE_BEFORE_WORD:
        i -= 1
    return i < 0 or text[i] in _TERMINAL_PUNCT


def _match_first_letter_case(original: str, replacement: str) -> str:
    if original[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def correct_spelling(text: str, lexicon: Lexicon) -> tuple[str, CorrectionReport]:
    """Replace unknown alphabetic tokens with their best lexicon candidate.

    Tokens already in the lexicon (case-insensitively) pass through.
    Capitalized tokens that are not sentence-initial are presumed proper
    nouns and never rewritten.  Tokens with no candidate within distance
    2 stay as-is; both groups are recorded in ``untouched_unknown``.
    """
    replacements: list[tuple[str, str, int]] = []
    untouched: list[str] = []
    pieces: list[str] = []
    last = 0
    for match in _WORD_RE.finditer(text):
        word = match.group()
        if word in lexicon:
            continue
        if word[:1].isupper() and not _is_sentence_initial(text, match.start()):
            untouched.append(word)
            continue
        candidate = best_candidate(word, lexicon)
        if candidate is None:
            untouched.append(word)
            continue
        corrected = _match_first_letter_case(word, candidate)
        if corrected == word:
            continue
        replacements.append((word, corrected, match.start()))
        pieces.append(text[last:match.start()])
        pieces.append(corrected)
        last = match.end()
    pieces.append(text[last:])
    return "".join(pieces), CorrectionReport(replacements, untouched)
