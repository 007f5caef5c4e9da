"""Deterministic linguistic pipeline.

Sentence segmentation, tokenization, rule-based POS tagging, shallow
NSUBJ/DOBJ labeling, and suffix-table lemmatization.  No statistics, no
trained models: a lexicon plus ordered rules produce exactly the two
dependency labels the extraction heuristics consume.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import TYPE_CHECKING, Iterable

from .errors import EmptyInput

if TYPE_CHECKING:
    from .textnorm import Lexicon

DATA_DIR = Path(__file__).parent / "data"
DEFAULT_ABBREVIATIONS_PATH = DATA_DIR / "abbreviations.txt"
DEFAULT_EXCEPTIONS_PATH = DATA_DIR / "lemma_exceptions.tsv"


class PosTag(str, Enum):
    NOUN = "NOUN"
    PROPN = "PROPN"
    VERB = "VERB"
    AUX = "AUX"
    ADJ = "ADJ"
    ADV = "ADV"
    PRON = "PRON"
    DET = "DET"
    ADP = "ADP"
    CONJ = "CONJ"
    NUM = "NUM"
    PART = "PART"
    INTJ = "INTJ"
    PUNCT = "PUNCT"
    X = "X"


class DepLabel(str, Enum):
    NSUBJ = "NSUBJ"
    DOBJ = "DOBJ"
    NONE = "NONE"


NOMINAL_TAGS = (PosTag.NOUN, PosTag.PROPN, PosTag.PRON)
# tokens that may sit inside one noun phrase run
_NP_RUN_TAGS = (PosTag.DET, PosTag.ADJ, PosTag.NUM,
                PosTag.NOUN, PosTag.PROPN, PosTag.PRON)
# left-walk set for the compound-noun repair pass
_NP_INNER_TAGS = (PosTag.NOUN, PosTag.PROPN, PosTag.ADJ, PosTag.NUM)

_PUNCT_CHARS = set(string.punctuation)
_SENTENCE_ENDERS = ".!?"


@dataclass(frozen=True)
class Token:
    index: int
    text: str
    lemma: str
    pos: PosTag
    dep: DepLabel = DepLabel.NONE
    sentence_index: int = 0

    def __post_init__(self):
        if not self.text or not self.lemma:
            raise ValueError("token text and lemma must be nonempty")
        if self.dep is not DepLabel.NONE and self.pos not in NOMINAL_TAGS:
            raise ValueError(f"{self.dep.value} requires a nominal tag, got {self.pos.value}")


@dataclass(frozen=True)
class TaggedSentence:
    tokens: tuple[Token, ...]
    text: str

    def __post_init__(self):
        for i, tok in enumerate(self.tokens):
            if tok.index != i:
                raise ValueError("token indices must be contiguous from 0")


@lru_cache(maxsize=1)
def default_abbreviations() -> frozenset[str]:
    return frozenset(_read_lines(DEFAULT_ABBREVIATIONS_PATH))


@lru_cache(maxsize=1)
def default_lemma_exceptions() -> dict[tuple[str, str], str]:
    table: dict[tuple[str, str], str] = {}
    for line in _read_lines(DEFAULT_EXCEPTIONS_PATH):
        word, pos, lemma = line.split("\t")[:3]
        table[(word.lower(), pos.upper())] = lemma.lower()
    return table


def _read_lines(path: Path) -> Iterable[str]:
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def segment_sentences(text: str, abbreviations: frozenset[str] | None = None) -> list[str]:
    """Split normalized text into sentences.

    A sentence ends at '.', '!', or '?' followed by whitespace plus a
    capital letter, or at end of text.  Periods that close a known
    abbreviation ("Mr.", "e.g.") never split.
    """
    if not text.strip():
        raise EmptyInput("cannot segment empty text")
    if abbreviations is None:
        abbreviations = default_abbreviations()
    sentences: list[str] = []
    start = 0
    for i, ch in enumerate(text):
        if ch not in _SENTENCE_ENDERS:
            continue
        if ch == "." and _ends_abbreviation(text, i, abbreviations):
            continue
        tail = text[i + 1:]
        stripped = tail.lstrip()
        at_end = not stripped
        next_is_capital = tail[:1].isspace() and stripped[:1].isupper()
        if at_end or next_is_capital:
            chunk = text[start:i + 1].strip()
            if chunk:
                sentences.append(chunk)
            start = i + 1
    rest = text[start:].strip()
    if rest:
        sentences.append(rest)
    return sentences


def _ends_abbreviation(text: str, dot_index: int, abbreviations: frozenset[str]) -> bool:
    j = dot_index - 1
    while j >= 0 and (text[j].isalpha() or text[j] == "."):
        j -= 1
    word = text[j + 1:dot_index + 1].lower()
    return word in abbreviations


def tokenize_with_spans(sentence: str) -> list[tuple[str, int, int]]:
    """Tokenize one sentence, keeping (text, start, end) character spans.

    Whitespace split, then leading/trailing punctuation peeled into
    standalone tokens; hyphenated words stay whole; a possessive ``'s``
    comes off as its own token.
    """
    spans: list[tuple[str, int, int]] = []
    i = 0
    n = len(sentence)
    while i < n:
        if sentence[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not sentence[j].isspace():
            j += 1
        spans.extend(_split_chunk(sentence, i, j))
        i = j
    return spans


def _split_chunk(sentence: str, start: int, end: int) -> list[tuple[str, int, int]]:
    left = start
    right = end
    leading: list[tuple[str, int, int]] = []
    trailing: list[tuple[str, int, int]] = []
    while left < right and sentence[left] in _PUNCT_CHARS:
        leading.append((sentence[left], left, left + 1))
        left += 1
    while right > left and sentence[right - 1] in _PUNCT_CHARS:
        trailing.append((sentence[right - 1], right - 1, right))
        right -= 1
    middle: list[tuple[str, int, int]] = []
    if left < right:
        word = sentence[left:right]
        if len(word) > 2 and word.lower().endswith("'s"):
            middle.append((word[:-2], left, right - 2))
            middle.append((word[-2:], right - 2, right))
        else:
            middle.append((word, left, right))
    return leading + middle + list(reversed(trailing))


def tokenize(sentence: str) -> list[str]:
    return [text for text, _, _ in tokenize_with_spans(sentence)]


_SUFFIX_TAGS = (
    ("ly", PosTag.ADV),
    ("tion", PosTag.NOUN), ("ment", PosTag.NOUN),
    ("ness", PosTag.NOUN), ("ity", PosTag.NOUN),
    ("ize", PosTag.VERB), ("ise", PosTag.VERB),
    ("ous", PosTag.ADJ), ("ful", PosTag.ADJ),
    ("able", PosTag.ADJ), ("ive", PosTag.ADJ),
)

_BE_FORMS = frozenset({"be", "am", "is", "are", "was", "were", "been", "being"})


def pos_tag(tokens: list[str], lexicon: Lexicon) -> list[tuple[str, PosTag]]:
    """Assign one tag per token.

    Precedence: closed-class table, lexicon tag, suffix heuristics,
    PROPN for capitalized mid-sentence words, NOUN otherwise.  Two repair
    passes follow: verbs trapped inside determiner-headed noun phrases
    become nouns, and infinitival "to" becomes PART.
    """
    first_word = next((i for i, t in enumerate(tokens) if t[:1].isalpha()), -1)
    tags: list[PosTag] = []
    for i, token in enumerate(tokens):
        tags.append(_tag_one(token, i == first_word, lexicon))
    _repair_noun_phrases(tokens, tags)
    _repair_infinitival_to(tokens, tags, lexicon)
    return list(zip(tokens, tags))


def _tag_one(token: str, sentence_initial: bool, lexicon: Lexicon) -> PosTag:
    if all(c in _PUNCT_CHARS for c in token):
        return PosTag.PUNCT
    if token[0].isdigit():
        return PosTag.NUM
    lowered = token.lower()
    closed = lexicon.closed_class.get(lowered)
    if closed:
        return PosTag[closed]
    known = lexicon.tags.get(lowered)
    if known:
        return PosTag[known]
    for suffix, tag in _SUFFIX_TAGS:
        if lowered.endswith(suffix) and len(lowered) > len(suffix) + 1:
            return tag
    if token[0].isupper() and not sentence_initial:
        return PosTag.PROPN
    return PosTag.NOUN


def _repair_noun_phrases(tokens: list[str], tags: list[PosTag]) -> None:
    # A VERB straight after a determiner is a noun ("the change").  Deeper
    # inside a determiner-headed run ("a car repair shop", "an oil change")
    # the conversion applies only in object/prepositional position, i.e.
    # when the determiner itself follows an ADP or a VERB; subject-position
    # runs ("the customer buys") must keep their verb.
    for i, tag in enumerate(tags):
        if tag is not PosTag.VERB:
            continue
        if i > 0 and tags[i - 1] is PosTag.DET:
            tags[i] = PosTag.NOUN
            continue
        j = i - 1
        while j >= 0 and tags[j] in _NP_INNER_TAGS:
            j -= 1
        if j >= 0 and tags[j] is PosTag.DET and j > 0 and tags[j - 1] in (PosTag.ADP, PosTag.VERB):
            tags[i] = PosTag.NOUN


def _repair_infinitival_to(tokens: list[str], tags: list[PosTag], lexicon: Lexicon) -> None:
    for i in range(len(tokens) - 1):
        if tokens[i].lower() != "to" or tags[i] is not PosTag.ADP:
            continue
        nxt = tokens[i + 1]
        if tags[i + 1] is PosTag.VERB and lemmatize(nxt, PosTag.VERB, lexicon) == nxt.lower():
            tags[i] = PosTag.PART


def lemmatize(token: str, pos: PosTag, lexicon: Lexicon,
              exceptions: dict[tuple[str, str], str] | None = None) -> str:
    """Reduce a word to its root form.

    Irregulars come from the exceptions table; everything else goes
    through ordered suffix rules whose outputs must exist in the lexicon
    (with e-restoration and consonant undoubling as fallback variants).
    Rules reapply until the form is stable, so stacked inflections like
    "bookings" reduce fully.  Unknown shapes come back unchanged,
    lowercased.
    """
    if exceptions is None:
        exceptions = default_lemma_exceptions()
    current = token.lower()
    for _ in range(8):
        reduced = _lemmatize_once(current, pos, lexicon, exceptions)
        if reduced == current:
            return current
        current = reduced
    return current


def _lemmatize_once(lowered: str, pos: PosTag, lexicon: Lexicon,
                    exceptions: dict[tuple[str, str], str]) -> str:
    irregular = exceptions.get((lowered, pos.value))
    if irregular:
        return irregular
    for suffix, build in _suffix_rules(pos):
        if not lowered.endswith(suffix) or len(lowered) <= len(suffix):
            continue
        stem = lowered[: -len(suffix)]
        for candidate in build(stem):
            # closed-class words ("us", "will") are never valid stems
            if (len(candidate) >= 2 and candidate in lexicon.entries
                    and candidate not in lexicon.closed_class):
                return candidate
    return lowered


def _plain(stem: str) -> list[str]:
    return [stem]


def _with_restoration(stem: str) -> list[str]:
    variants = [stem, stem + "e"]
    if len(stem) >= 2 and stem[-1] == stem[-2]:
        variants.append(stem[:-1])
    return variants


def _ies_to_y(stem: str) -> list[str]:
    return [stem + "y"]


def _es_after_sibilant(stem: str) -> list[str]:
    if stem.endswith(("s", "x", "z", "ch", "sh")):
        return [stem]
    return []


def _suffix_rules(pos: PosTag):
    if pos is PosTag.NOUN:
        return (("ies", _ies_to_y), ("es", _es_after_sibilant), ("s", _plain))
    if pos is PosTag.VERB:
        return (("ies", _ies_to_y), ("ing", _with_restoration),
                ("ed", _with_restoration), ("es", _plain), ("s", _plain))
    if pos is PosTag.ADJ:
        return (("er", _with_restoration), ("est", _with_restoration))
    return ()


def _finite_verb_indices(tokens: tuple[Token, ...]) -> list[int]:
    finite = []
    for i, tok in enumerate(tokens):
        if tok.pos is not PosTag.VERB:
            continue
        if i > 0 and tokens[i - 1].pos is PosTag.PART:
            continue
        finite.append(i)
    return finite


def dep_lite(sentence: TaggedSentence, include_infinitives: bool = False) -> TaggedSentence:
    """Label one NSUBJ and at most one DOBJ per clause segment.

    The sentence splits into clause segments at finite verbs (a VERB not
    preceded by infinitival "to").  Each clause's subject is the nearest
    noun-phrase head to the left that an earlier clause has not consumed;
    its object is the nearest noun-phrase head to the right, searched up
    to the next boundary (finite verb, conjunction, punctuation) and cut
    short by any verb.  "and"-coordinated clauses without their own
    subject keep the previous clause's subject token.  With
    ``include_infinitives`` non-finite verbs also claim objects.
    """
    tokens = sentence.tokens
    deps: list[DepLabel] = [DepLabel.NONE] * len(tokens)
    finite = _finite_verb_indices(tokens)
    finite_set = set(finite)

    # Clauses coordinated by a conjunction without a fresh subject assign
    # no new NSUBJ, which leaves the previous subject token's label in
    # place as the shared subject.
    prev_boundary = -1
    for v in finite:
        for i in range(v - 1, prev_boundary, -1):
            if tokens[i].pos in NOMINAL_TAGS:
                deps[i] = DepLabel.NSUBJ
                break
        boundary = _clause_boundary(tokens, v, finite_set)
        obj = _object_head(tokens, v, boundary)
        if obj is not None:
            deps[obj] = DepLabel.DOBJ
        prev_boundary = boundary

    if include_infinitives:
        for i, tok in enumerate(tokens):
            if tok.pos is PosTag.VERB and i not in finite_set:
                boundary = _clause_boundary(tokens, i, finite_set)
                obj = _object_head(tokens, i, boundary)
                if obj is not None and deps[obj] is DepLabel.NONE:
                    deps[obj] = DepLabel.DOBJ

    new_tokens = tuple(replace(tok, dep=dep) for tok, dep in zip(tokens, deps))
    return TaggedSentence(tokens=new_tokens, text=sentence.text)


def _clause_boundary(tokens: tuple[Token, ...], verb: int, finite_set: set[int]) -> int:
    for i in range(verb + 1, len(tokens)):
        if tokens[i].pos in (PosTag.PUNCT, PosTag.CONJ) or i in finite_set:
            return i
    return len(tokens)


def _object_head(tokens: tuple[Token, ...], verb: int, boundary: int) -> int | None:
    i = verb + 1
    while i < boundary:
        tok = tokens[i]
        if tok.pos in (PosTag.VERB, PosTag.AUX):
            return None
        if tok.pos in _NP_RUN_TAGS:
            head = None
            while i < boundary and tokens[i].pos in _NP_RUN_TAGS:
                if tokens[i].pos in NOMINAL_TAGS:
                    head = i
                i += 1
            if head is not None:
                return head
            continue
        i += 1
    return None


def annotate(text: str, lexicon: Lexicon, include_infinitives: bool = False,
             abbreviations: frozenset[str] | None = None) -> list[TaggedSentence]:
    """Run the full pipeline on normalized text: segment, tokenize, tag,
    lemmatize, and label dependencies."""
    sentences = []
    for s_idx, sentence_text in enumerate(segment_sentences(text, abbreviations)):
        tokens = tokenize(sentence_text)
        tagged = pos_tag(tokens, lexicon)
        built = []
        for t_idx, (surface, tag) in enumerate(tagged):
            if surface[:1].isalpha():
                lemma = lemmatize(surface, tag, lexicon)
            else:
                lemma = surface
            built.append(Token(index=t_idx, text=surface, lemma=lemma,
                               pos=tag, sentence_index=s_idx))
        sentence = TaggedSentence(tokens=tuple(built), text=sentence_text)
        sentences.append(dep_lite(sentence, include_infinitives))
    return sentences


def is_passive_clause(tokens: tuple[Token, ...], verb_index: int) -> bool:
    """Heuristic passive check: a finite verb right after a form of "be"."""
    if verb_index == 0:
        return False
    prev = tokens[verb_index - 1]
    return prev.pos is PosTag.AUX and prev.text.lower() in _BE_FORMS
