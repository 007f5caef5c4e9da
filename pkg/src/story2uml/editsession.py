"""Revision-tracked manual editing of a use case model.

Each applied command pushes its inverse onto the undo stack.  Inverses of
removals and reassignments must restore entities at their original list
positions, so the command set includes internal restore/move variants that
only ever appear as inverses.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field, replace
from typing import Union

from .errors import (DuplicateActor, DuplicateUseCase, InvalidCommand,
                     NothingToUndo, UnknownActor, UnknownUseCase)
from .extract import Actor, UseCase, UseCaseModel, make_use_case


def _require_text(value: str, what: str) -> str:
    value = value.strip()
    if not value:
        raise InvalidCommand(f"{what} must be nonempty")
    return value


@dataclass(frozen=True)
class AddActor:
    name: str


@dataclass(frozen=True)
class RemoveActor:
    key: str


@dataclass(frozen=True)
class RenameActor:
    key: str
    new_name: str


@dataclass(frozen=True)
class AddUseCase:
    actor_key: str
    phrase: str


@dataclass(frozen=True)
class RemoveUseCase:
    actor_key: str
    phrase: str


@dataclass(frozen=True)
class RenameUseCase:
    actor_key: str
    old_phrase: str
    new_phrase: str


@dataclass(frozen=True)
class ReassignUseCase:
    phrase: str
    from_key: str
    to_key: str


@dataclass(frozen=True)
class RestoreActor:
    """Inverse of RemoveActor: reinsert the actor and its use cases."""

    actor: Actor
    index: int
    use_cases: tuple[UseCase, ...]


@dataclass(frozen=True)
class RestoreUseCase:
    """Inverse of RemoveUseCase: reinsert at the original position."""

    actor_key: str
    use_case: UseCase
    index: int


@dataclass(frozen=True)
class MoveUseCase:
    """Inverse of ReassignUseCase: move back to the original position."""

    phrase: str
    from_key: str
    to_key: str
    index: int


EditCommand = Union[AddActor, RemoveActor, RenameActor, AddUseCase,
                    RemoveUseCase, RenameUseCase, ReassignUseCase,
                    RestoreActor, RestoreUseCase, MoveUseCase]


@dataclass
class Session:
    model: UseCaseModel
    revision: int = 0
    undo_stack: list[EditCommand] = field(default_factory=list)


def _find_actor(model: UseCaseModel, key: str) -> tuple[int, Actor]:
    for i, actor in enumerate(model.actors):
        if actor.key == key:
            return i, actor
    raise UnknownActor(key)


def _find_use_case(model: UseCaseModel, key: str, phrase: str) -> tuple[int, UseCase]:
    _find_actor(model, key)
    for i, use_case in enumerate(model.associations[key]):
        if use_case.phrase == phrase:
            return i, use_case
    raise UnknownUseCase(key, phrase)


def _parse_phrase(phrase: str) -> UseCase:
    phrase = _require_text(phrase, "use case phrase").lower()
    verb, _, rest = phrase.partition(" ")
    if not rest.strip():
        raise InvalidCommand("use case phrase needs a verb and an object")
    return make_use_case(verb, rest.strip())


def _rebuild_associations(model: UseCaseModel) -> None:
    model.associations = {actor.key: model.associations[actor.key]
                          for actor in model.actors}


def _apply(model: UseCaseModel, cmd: EditCommand) -> EditCommand:
    """Mutate the model and return the inverse command."""
    if isinstance(cmd, AddActor):
        name = _require_text(cmd.name, "actor name")
        key = name.lower()
        if key in model.associations:
            raise DuplicateActor(key)
        model.actors.append(Actor(name=name, key=key))
        model.associations[key] = []
        return RemoveActor(key=key)

    if isinstance(cmd, RemoveActor):
        index, actor = _find_actor(model, cmd.key)
        use_cases = tuple(model.associations.pop(cmd.key))
        model.actors.pop(index)
        _rebuild_associations(model)
        return RestoreActor(actor=actor, index=index, use_cases=use_cases)

    if isinstance(cmd, RestoreActor):
        model.actors.insert(cmd.index, cmd.actor)
        model.associations[cmd.actor.key] = list(cmd.use_cases)
        _rebuild_associations(model)
        return RemoveActor(key=cmd.actor.key)

    if isinstance(cmd, RenameActor):
        new_name = _require_text(cmd.new_name, "actor name")
        index, actor = _find_actor(model, cmd.key)
        new_key = new_name.lower()
        if new_key != cmd.key and new_key in model.associations:
            raise DuplicateActor(new_key)
        use_cases = model.associations.pop(cmd.key)
        model.actors[index] = replace(actor, name=new_name, key=new_key)
        model.associations[new_key] = use_cases
        _rebuild_associations(model)
        return RenameActor(key=new_key, new_name=actor.name)

    if isinstance(cmd, AddUseCase):
        _find_actor(model, cmd.actor_key)
        use_case = _parse_phrase(cmd.phrase)
        owned = model.associations[cmd.actor_key]
        if any(uc.phrase == use_case.phrase for uc in owned):
            raise DuplicateUseCase(cmd.actor_key, use_case.phrase)
        owned.append(use_case)
        return RemoveUseCase(actor_key=cmd.actor_key, phrase=use_case.phrase)

    if isinstance(cmd, RemoveUseCase):
        index, use_case = _find_use_case(model, cmd.actor_key, cmd.phrase)
        model.associations[cmd.actor_key].pop(index)
        return RestoreUseCase(actor_key=cmd.actor_key, use_case=use_case, index=index)

    if isinstance(cmd, RestoreUseCase):
        _find_actor(model, cmd.actor_key)
        model.associations[cmd.actor_key].insert(cmd.index, cmd.use_case)
        return RemoveUseCase(actor_key=cmd.actor_key, phrase=cmd.use_case.phrase)

    if isinstance(cmd, RenameUseCase):
        index, old = _find_use_case(model, cmd.actor_key, cmd.old_phrase)
        renamed = _parse_phrase(cmd.new_phrase)
        owned = model.associations[cmd.actor_key]
        if any(uc.phrase == renamed.phrase for uc in owned if uc is not old):
            raise DuplicateUseCase(cmd.actor_key, renamed.phrase)
        owned[index] = replace(renamed, source=old.source)
        return RenameUseCase(actor_key=cmd.actor_key,
                             old_phrase=renamed.phrase, new_phrase=old.phrase)

    if isinstance(cmd, ReassignUseCase):
        _find_actor(model, cmd.to_key)
        index, use_case = _find_use_case(model, cmd.from_key, cmd.phrase)
        if any(uc.phrase == cmd.phrase for uc in model.associations[cmd.to_key]):
            raise DuplicateUseCase(cmd.to_key, cmd.phrase)
        model.associations[cmd.from_key].pop(index)
        model.associations[cmd.to_key].append(use_case)
        return MoveUseCase(phrase=cmd.phrase, from_key=cmd.to_key,
                           to_key=cmd.from_key, index=index)

    if isinstance(cmd, MoveUseCase):
        _find_actor(model, cmd.to_key)
        index, use_case = _find_use_case(model, cmd.from_key, cmd.phrase)
        if any(uc.phrase == cmd.phrase for uc in model.associations[cmd.to_key]):
            raise DuplicateUseCase(cmd.to_key, cmd.phrase)
        model.associations[cmd.from_key].pop(index)
        model.associations[cmd.to_key].insert(cmd.index, use_case)
        return ReassignUseCase(phrase=cmd.phrase, from_key=cmd.to_key,
                               to_key=cmd.from_key)

    raise InvalidCommand(f"unsupported command: {cmd!r}")


def apply_edit(session: Session, cmd: EditCommand) -> Session:
    """Apply one command, returning a new session with the inverse pushed."""
    model = copy.deepcopy(session.model)
    inverse = _apply(model, cmd)
    return Session(model=model, revision=session.revision + 1,
                   undo_stack=session.undo_stack + [inverse])


def undo(session: Session) -> Session:
    if not session.undo_stack:
        raise NothingToUndo("nothing to undo")
    model = copy.deepcopy(session.model)
    _apply(model, session.undo_stack[-1])
    return Session(model=model, revision=session.revision - 1,
                   undo_stack=session.undo_stack[:-1])
