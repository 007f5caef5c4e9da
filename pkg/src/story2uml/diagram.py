"""PlantUML source emission for use case models.

Output layout is fixed: actors first, use cases inside a left-to-right
rectangle (named only when the system name was supplied), then one arrow
per association.  A minimal reader of the same dialect supports
round-trip checks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import MalformedFile
from .extract import DEFAULT_SYSTEM_NAME, Actor, UseCaseModel, make_use_case

_INDENT = "    "


@dataclass(frozen=True)
class AliasMap:
    actor_aliases: dict[str, str]
    usecase_aliases: dict[tuple[str, str], str]


def make_aliases(model: UseCaseModel) -> AliasMap:
    """Short identifiers: two letters per actor ("Customer" -> "Cu", with
    numeric suffixes on collision) and UC1..UCn over use cases in model
    order."""
    used: set[str] = set()
    actor_aliases: dict[str, str] = {}
    for actor in model.actors:
        base = actor.name[0].upper()
        if len(actor.name) > 1:
            base += actor.name[1].lower()
        alias = base
        suffix = 2
        while alias in used:
            alias = f"{base}{suffix}"
            suffix += 1
        used.add(alias)
        actor_aliases[actor.key] = alias
    usecase_aliases: dict[tuple[str, str], str] = {}
    counter = 1
    for key, use_case in model.use_cases():
        alias = f"UC{counter}"
        counter += 1
        usecase_aliases[(key, use_case.phrase)] = alias
    return AliasMap(actor_aliases=actor_aliases, usecase_aliases=usecase_aliases)


def _quote(name: str) -> str:
    return '"' + name.replace('"', '""') + '"'


def emit_plantuml(model: UseCaseModel, aliases: AliasMap | None = None) -> str:
    """Render the model as PlantUML text (LF endings, trailing newline)."""
    if aliases is None:
        aliases = make_aliases(model)
    lines = ["@startuml", "left to right direction"]
    for actor in model.actors:
        lines.append(f"actor {_quote(actor.name)} as {aliases.actor_aliases[actor.key]}")
    if model.system_name != DEFAULT_SYSTEM_NAME:
        lines.append(f"rectangle {_quote(model.system_name)} {{")
    else:
        lines.append("rectangle {")
    for key, use_case in model.use_cases():
        alias = aliases.usecase_aliases[(key, use_case.phrase)]
        lines.append(f"{_INDENT}usecase {_quote(use_case.phrase)} as {alias}")
    lines.append("}")
    for key, use_case in model.use_cases():
        alias = aliases.usecase_aliases[(key, use_case.phrase)]
        lines.append(f"{aliases.actor_aliases[key]} --> {alias}")
    lines.append("@enduml")
    return "\n".join(lines) + "\n"


_ACTOR_RE = re.compile(r'^actor "(.*)" as (\S+)$')
_RECTANGLE_RE = re.compile(r'^rectangle (?:"(.*)" )?\{$')
_USECASE_RE = re.compile(r'^usecase "(.*)" as (\S+)$')
_ARROW_RE = re.compile(r"^(\S+) --> (\S+)$")


def parse_plantuml(text: str) -> UseCaseModel:
    """Minimal reader for the emitted dialect.

    Recovers actors, use cases, and associations.  Extraction provenance
    (token positions) is not present in the text, so parsed entities carry
    sentinel sources.
    """
    actors_by_alias: dict[str, Actor] = {}
    phrases_by_alias: dict[str, str] = {}
    model = UseCaseModel()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line in ("@startuml", "@enduml", "left to right direction", "}"):
            continue
        if match := _ACTOR_RE.match(line):
            name = match.group(1).replace('""', '"')
            actor = Actor(name=name, key=name.lower())
            actors_by_alias[match.group(2)] = actor
            model.actors.append(actor)
            model.associations[actor.key] = []
            continue
        if match := _RECTANGLE_RE.match(line):
            if match.group(1) is not None:
                model.system_name = match.group(1).replace('""', '"')
            continue
        if match := _USECASE_RE.match(line):
            phrases_by_alias[match.group(2)] = match.group(1).replace('""', '"')
            continue
        if match := _ARROW_RE.match(line):
            actor_alias, uc_alias = match.groups()
            if actor_alias not in actors_by_alias or uc_alias not in phrases_by_alias:
                raise MalformedFile(f"arrow references undeclared alias: {line}")
            phrase = phrases_by_alias[uc_alias]
            verb, _, rest = phrase.partition(" ")
            model.associations[actors_by_alias[actor_alias].key].append(
                make_use_case(verb, rest))
            continue
        raise MalformedFile(f"unrecognized diagram line: {line}")
    return model
