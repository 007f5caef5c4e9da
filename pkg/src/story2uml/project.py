"""Pipeline orchestration, project persistence, and corpus evaluation.

The pipeline runs normalization, correction, annotation, extraction,
classifier filtering, and diagram emission in order, keeping every
intermediate for inspection.  Extraction failures become diagnostics so
callers can still show partial results.
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field
from pathlib import Path

from . import classifier, diagram, editsession, lingpipe, textnorm
from .classifier import NBModel
from .editsession import Session
from .errors import (InvalidCommand, MalformedFile, NoActorsFound,
                     UnassignedUseCase, VersionMismatch)
from .extract import Actor, UseCase, UseCaseModel, extract_model
from .lingpipe import DepLabel, PosTag, TaggedSentence, Token
from .textnorm import CorrectionReport, Lexicon

SCHEMA_VERSION = 1
DEFAULT_GOLD_CORPUS_PATH = Path(__file__).parent / "data" / "gold_corpus.ndjson"


@dataclass
class PipelineConfig:
    lexicon_path: Path | str | None = None
    model_path: Path | str | None = None
    alpha: float = 1.0
    filter_enabled: bool = True
    include_infinitives: bool = False
    system_name: str = "System"

    def load_lexicon(self) -> Lexicon:
        if self.lexicon_path:
            return textnorm.load_lexicon(self.lexicon_path)
        return textnorm.default_lexicon()

    def load_nb_model(self) -> NBModel:
        if self.model_path:
            return classifier.load_model(self.model_path)
        return classifier.default_model(alpha=self.alpha)


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    message: str
    location: tuple[int, int] | None = None


@dataclass
class PipelineResult:
    story: str
    corrected_text: str
    report: CorrectionReport
    sentences: list[TaggedSentence]
    raw_model: UseCaseModel
    filtered_model: UseCaseModel
    dropped: list[tuple[str, UseCase]]
    plantuml: str
    diagnostics: list[Diagnostic] = field(default_factory=list)


def run_pipeline(story: str, config: PipelineConfig | None = None) -> PipelineResult:
    """Run every stage on one story.

    Raises EmptyInput for blank stories; extraction problems surface as
    error diagnostics alongside an empty model instead of raising.
    """
    config = config or PipelineConfig()
    lexicon = config.load_lexicon()
    normalized = textnorm.normalize_text(story)
    corrected, report = textnorm.correct_spelling(normalized, lexicon)
    sentences = lingpipe.annotate(corrected, lexicon,
                                  include_infinitives=config.include_infinitives)
    diagnostics = _passive_voice_diagnostics(sentences)
    try:
        raw_model = extract_model(sentences)
    except (NoActorsFound, UnassignedUseCase) as exc:
        raw_model = UseCaseModel(system_name=config.system_name)
        diagnostics.append(Diagnostic(severity="error", message=str(exc),
                                      location=getattr(exc, "location", None)))
    raw_model.system_name = config.system_name
    if config.filter_enabled:
        nb_model = config.load_nb_model()
        filtered_model, dropped = classifier.filter_model(nb_model, raw_model)
    else:
        filtered_model, dropped = copy.deepcopy(raw_model), []
    plantuml = diagram.emit_plantuml(filtered_model)
    return PipelineResult(story=story, corrected_text=corrected, report=report,
                          sentences=sentences, raw_model=raw_model,
                          filtered_model=filtered_model, dropped=dropped,
                          plantuml=plantuml, diagnostics=diagnostics)


def _passive_voice_diagnostics(sentences: list[TaggedSentence]) -> list[Diagnostic]:
    found = []
    for sentence in sentences:
        for i, token in enumerate(sentence.tokens):
            if token.pos is PosTag.VERB and lingpipe.is_passive_clause(sentence.tokens, i):
                found.append(Diagnostic(
                    severity="warning",
                    message=(f"'{sentence.tokens[i - 1].text} {token.text}' looks passive; "
                             "the grammatical subject will be treated as the actor"),
                    location=(token.sentence_index, token.index)))
    return found


# ---------------------------------------------------------------------------
# serialization

def token_to_dict(token: Token) -> dict:
    return {"index": token.index, "text": token.text, "lemma": token.lemma,
            "pos": token.pos.value, "dep": token.dep.value,
            "sentence_index": token.sentence_index}


def token_from_dict(data: dict) -> Token:
    return Token(index=data["index"], text=data["text"], lemma=data["lemma"],
                 pos=PosTag(data["pos"]), dep=DepLabel(data["dep"]),
                 sentence_index=data["sentence_index"])


def sentence_to_dict(sentence: TaggedSentence) -> dict:
    return {"text": sentence.text,
            "tokens": [token_to_dict(t) for t in sentence.tokens]}


def sentence_from_dict(data: dict) -> TaggedSentence:
    return TaggedSentence(tokens=tuple(token_from_dict(t) for t in data["tokens"]),
                          text=data["text"])


def use_case_to_dict(use_case: UseCase) -> dict:
    return {"verb_lemma": use_case.verb_lemma, "object_lemma": use_case.object_lemma,
            "phrase": use_case.phrase, "source": list(use_case.source)}


def use_case_from_dict(data: dict) -> UseCase:
    return UseCase(verb_lemma=data["verb_lemma"], object_lemma=data["object_lemma"],
                   phrase=data["phrase"], source=tuple(data["source"]))


def model_to_dict(model: UseCaseModel) -> dict:
    return {
        "system_name": model.system_name,
        "actors": [{"name": a.name, "key": a.key, "first_seen": list(a.first_seen)}
                   for a in model.actors],
        "associations": {a.key: [use_case_to_dict(uc)
                                 for uc in model.associations.get(a.key, [])]
                         for a in model.actors},
    }


def model_from_dict(data: dict) -> UseCaseModel:
    actors = [Actor(name=a["name"], key=a["key"], first_seen=tuple(a["first_seen"]))
              for a in data["actors"]]
    associations = {key: [use_case_from_dict(uc) for uc in cases]
                    for key, cases in data["associations"].items()}
    return UseCaseModel(system_name=data["system_name"], actors=actors,
                        associations=associations)


def report_to_dict(report: CorrectionReport) -> dict:
    return {"replacements": [list(r) for r in report.replacements],
            "untouched_unknown": list(report.untouched_unknown)}


def report_from_dict(data: dict) -> CorrectionReport:
    return CorrectionReport(
        replacements=[(r[0], r[1], r[2]) for r in data["replacements"]],
        untouched_unknown=list(data["untouched_unknown"]))


def result_to_dict(result: PipelineResult) -> dict:
    return {
        "story": result.story,
        "corrected_text": result.corrected_text,
        "report": report_to_dict(result.report),
        "sentences": [sentence_to_dict(s) for s in result.sentences],
        "raw_model": model_to_dict(result.raw_model),
        "filtered_model": model_to_dict(result.filtered_model),
        "dropped": [[key, use_case_to_dict(uc)] for key, uc in result.dropped],
        "plantuml": result.plantuml,
        "diagnostics": [{"severity": d.severity, "message": d.message,
                         "location": list(d.location) if d.location else None}
                        for d in result.diagnostics],
    }


def result_from_dict(data: dict) -> PipelineResult:
    return PipelineResult(
        story=data["story"],
        corrected_text=data["corrected_text"],
        report=report_from_dict(data["report"]),
        sentences=[sentence_from_dict(s) for s in data["sentences"]],
        raw_model=model_from_dict(data["raw_model"]),
        filtered_model=model_from_dict(data["filtered_model"]),
        dropped=[(key, use_case_from_dict(uc)) for key, uc in data["dropped"]],
        plantuml=data["plantuml"],
        diagnostics=[Diagnostic(severity=d["severity"], message=d["message"],
                                location=tuple(d["location"]) if d["location"] else None)
                     for d in data["diagnostics"]],
    )


_COMMAND_TYPES = {
    "add_actor": editsession.AddActor,
    "remove_actor": editsession.RemoveActor,
    "rename_actor": editsession.RenameActor,
    "add_use_case": editsession.AddUseCase,
    "remove_use_case": editsession.RemoveUseCase,
    "rename_use_case": editsession.RenameUseCase,
    "reassign_use_case": editsession.ReassignUseCase,
    "restore_actor": editsession.RestoreActor,
    "restore_use_case": editsession.RestoreUseCase,
    "move_use_case": editsession.MoveUseCase,
}
_COMMAND_KINDS = {cls: kind for kind, cls in _COMMAND_TYPES.items()}


def command_to_dict(cmd) -> dict:
    kind = _COMMAND_KINDS[type(cmd)]
    if isinstance(cmd, editsession.RestoreActor):
        return {"kind": kind, "index": cmd.index,
                "actor": {"name": cmd.actor.name, "key": cmd.actor.key,
                          "first_seen": list(cmd.actor.first_seen)},
                "use_cases": [use_case_to_dict(uc) for uc in cmd.use_cases]}
    if isinstance(cmd, editsession.RestoreUseCase):
        return {"kind": kind, "actor_key": cmd.actor_key, "index": cmd.index,
                "use_case": use_case_to_dict(cmd.use_case)}
    payload = {"kind": kind}
    payload.update(cmd.__dict__)
    return payload


def command_from_dict(data: dict):
    if not isinstance(data, dict) or "kind" not in data:
        raise InvalidCommand("edit command must be an object with a 'kind'")
    kind = data["kind"]
    if kind not in _COMMAND_TYPES:
        raise InvalidCommand(f"unknown command kind '{kind}'")
    fields = {k: v for k, v in data.items() if k != "kind"}
    try:
        if kind == "restore_actor":
            actor = fields["actor"]
            return editsession.RestoreActor(
                actor=Actor(name=actor["name"], key=actor["key"],
                            first_seen=tuple(actor["first_seen"])),
                index=fields["index"],
                use_cases=tuple(use_case_from_dict(uc) for uc in fields["use_cases"]))
        if kind == "restore_use_case":
            return editsession.RestoreUseCase(
                actor_key=fields["actor_key"],
                use_case=use_case_from_dict(fields["use_case"]),
                index=fields["index"])
        return _COMMAND_TYPES[kind](**fields)
    except (KeyError, TypeError) as exc:
        raise InvalidCommand(f"bad fields for command '{kind}': {exc}") from exc


def session_to_dict(session: Session) -> dict:
    return {"revision": session.revision,
            "model": model_to_dict(session.model),
            "undo_stack": [command_to_dict(c) for c in session.undo_stack]}


def session_from_dict(data: dict) -> Session:
    return Session(model=model_from_dict(data["model"]),
                   revision=data["revision"],
                   undo_stack=[command_from_dict(c) for c in data["undo_stack"]])


def save_project(result: PipelineResult, session: Session, path: Path | str) -> None:
    payload = {"schema_version": SCHEMA_VERSION,
               "result": result_to_dict(result),
               "session": session_to_dict(session)}
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def load_project(path: Path | str) -> tuple[PipelineResult, Session]:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedFile(f"{path}: not a valid project file ({exc})") from exc
    if not isinstance(payload, dict) or "schema_version" not in payload:
        raise MalformedFile(f"{path}: missing schema_version")
    if payload["schema_version"] != SCHEMA_VERSION:
        raise VersionMismatch(payload["schema_version"], SCHEMA_VERSION)
    try:
        return (result_from_dict(payload["result"]),
                session_from_dict(payload["session"]))
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise MalformedFile(f"{path}: incomplete project payload ({exc})") from exc


# ---------------------------------------------------------------------------
# corpus evaluation

@dataclass(frozen=True)
class GoldStory:
    story: str
    actors: tuple[str, ...]
    use_cases: tuple[str, ...]

    def __post_init__(self):
        if not self.actors or not self.use_cases:
            raise ValueError("gold story needs at least one actor and use case")
        if len(set(self.actors)) != len(self.actors):
            raise ValueError("duplicate gold actors")
        if len(set(self.use_cases)) != len(self.use_cases):
            raise ValueError("duplicate gold use cases")


@dataclass(frozen=True)
class ExtractionReport:
    story_count: int
    actual_actors: int
    actual_use_cases: int
    identified_actors: int
    identified_use_cases: int
    actor_pct: float
    use_case_pct: float


def load_gold_corpus(path: Path | str | None = None) -> list[GoldStory]:
    """Read the line-delimited gold corpus (one JSON record per line)."""
    path = Path(path) if path else DEFAULT_GOLD_CORPUS_PATH
    stories = []
    for line_no, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            stories.append(GoldStory(story=record["story"],
                                     actors=tuple(record["actors"]),
                                     use_cases=tuple(record["use_cases"])))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise MalformedFile(f"{path}:{line_no}: bad gold record ({exc})") from exc
    return stories


def evaluate_corpus(corpus: list[GoldStory],
                    config: PipelineConfig | None = None) -> ExtractionReport:
    """Strict-match identification counts over a gold corpus.

    Credit requires an exact match on the lemmatized lowercase actor key
    or "verb object" phrase of the pipeline's final (filtered) model.
    """
    actual_actors = actual_use_cases = 0
    identified_actors = identified_use_cases = 0
    for gold in corpus:
        result = run_pipeline(gold.story, config)
        extracted_actors = set(result.filtered_model.actor_keys())
        extracted_phrases = {uc.phrase for _, uc in result.filtered_model.use_cases()}
        actual_actors += len(gold.actors)
        actual_use_cases += len(gold.use_cases)
        identified_actors += len(extracted_actors & set(gold.actors))
        identified_use_cases += len(extracted_phrases & set(gold.use_cases))
    return ExtractionReport(
        story_count=len(corpus),
        actual_actors=actual_actors,
        actual_use_cases=actual_use_cases,
        identified_actors=identified_actors,
        identified_use_cases=identified_use_cases,
        actor_pct=100.0 * identified_actors / actual_actors,
        use_case_pct=100.0 * identified_use_cases / actual_use_cases,
    )
