"""Actor and use-case extraction from annotated sentences.

Unique non-pronoun subjects become actors; each finite verb paired with a
direct object becomes a "verb object" use case owned by whichever actor
is currently active.  A pronoun subject keeps the previous actor active.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoActorsFound, UnassignedUseCase
from .lingpipe import DepLabel, PosTag, TaggedSentence

DEFAULT_SYSTEM_NAME = "System"


@dataclass(frozen=True)
class UseCase:
    verb_lemma: str
    object_lemma: str
    phrase: str
    source: tuple[int, int]

    def __post_init__(self):
        if not self.verb_lemma or not self.object_lemma:
            raise ValueError("use case needs both a verb and an object lemma")
        if self.phrase != f"{self.verb_lemma} {self.object_lemma}":
            raise ValueError(f"phrase {self.phrase!r} does not match its lemmas")


def make_use_case(verb_lemma: str, object_lemma: str,
                  source: tuple[int, int] = (-1, -1)) -> UseCase:
    return UseCase(verb_lemma=verb_lemma, object_lemma=object_lemma,
                   phrase=f"{verb_lemma} {object_lemma}", source=source)


@dataclass(frozen=True)
class Actor:
    name: str
    key: str
    first_seen: tuple[int, int] = (-1, -1)

    def __post_init__(self):
        if not self.name.strip():
            raise ValueError("actor name must be nonempty")
        if self.key != self.name.lower():
            raise ValueError(f"actor key {self.key!r} must be the lowercased name")


def make_actor(lemma: str, first_seen: tuple[int, int] = (-1, -1)) -> Actor:
    return Actor(name=lemma.title(), key=lemma.lower(), first_seen=first_seen)


@dataclass
class UseCaseModel:
    """Ordered actors, each owning an ordered, duplicate-free use-case list."""

    system_name: str = DEFAULT_SYSTEM_NAME
    actors: list[Actor] = field(default_factory=list)
    associations: dict[str, list[UseCase]] = field(default_factory=dict)

    def actor_keys(self) -> list[str]:
        return [actor.key for actor in self.actors]

    def use_cases(self) -> list[tuple[str, UseCase]]:
        return [(actor.key, uc)
                for actor in self.actors
                for uc in self.associations.get(actor.key, [])]

    def validate(self) -> None:
        keys = self.actor_keys()
        if len(keys) != len(set(keys)):
            raise ValueError("duplicate actor keys")
        if set(self.associations) != set(keys):
            raise ValueError("association keys must match the actor list")
        for key, cases in self.associations.items():
            phrases = [uc.phrase for uc in cases]
            if len(phrases) != len(set(phrases)):
                raise ValueError(f"duplicate use case under actor '{key}'")


def extract_model(sentences: list[TaggedSentence]) -> UseCaseModel:
    """Scan annotated sentences in document order and build the model.

    Raises NoActorsFound when no actor ever appears, and otherwise
    UnassignedUseCase when a verb/object candidate preceded the first
    actor.
    """
    model = UseCaseModel()
    active_key: str | None = None
    orphans: list[tuple[UseCase, tuple[int, int]]] = []

    for sentence in sentences:
        last_verb = None
        for token in sentence.tokens:
            if token.pos is PosTag.VERB:
                last_verb = token
            if token.dep is DepLabel.NSUBJ and token.pos in (PosTag.NOUN, PosTag.PROPN):
                key = token.lemma
                if key not in model.associations:
                    actor = make_actor(key, (token.sentence_index, token.index))
                    model.actors.append(actor)
                    model.associations[key] = []
                active_key = key
            elif token.dep is DepLabel.DOBJ and last_verb is not None:
                use_case = make_use_case(last_verb.lemma, token.lemma,
                                         (token.sentence_index, last_verb.index))
                if active_key is None:
                    orphans.append((use_case, use_case.source))
                    continue
                owned = model.associations[active_key]
                if use_case.phrase not in {uc.phrase for uc in owned}:
                    owned.append(use_case)

    if not model.actors:
        raise NoActorsFound("no actor could be extracted from the story")
    if orphans:
        use_case, location = orphans[0]
        raise UnassignedUseCase(
            f"use case '{use_case.phrase}' appeared before any actor",
            candidate=use_case, location=location)
    return model


def model_stats(model: UseCaseModel) -> tuple[int, int]:
    """(actor count, total use-case count) for evaluation tables."""
    total = sum(len(cases) for cases in model.associations.values())
    return len(model.actors), total
