"""Command-line interface.

Subcommands: generate (story -> PlantUML), train (seed CSV -> model file),
evaluate (gold corpus -> identification table, optional classifier metrics
and report files), serve (HTTP API + web UI), edit (interactive session).
Exit codes: 0 success, 1 input error, 2 internal error.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from pathlib import Path

from . import classifier, editsession, project
from .diagram import emit_plantuml
from .editsession import Session
from .errors import Story2UmlError
from .project import PipelineConfig

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="story2uml",
                     description="Generate UML use case diagrams from user stories.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="run the pipeline on one story")
    gen.add_argument("story", nargs="?", help="story file (default: stdin)")
    gen.add_argument("--out", help="write PlantUML here instead of stdout")
    gen.add_argument("--system", default="System", help="system name for the rectangle")
    gen.add_argument("--no-filter", action="store_true", help="skip the classifier filter")
    gen.add_argument("--model", help="trained classifier model file")
    gen.add_argument("--lexicon", help="alternative lexicon file")
    gen.add_argument("--alpha", type=float, default=1.0, help="Laplace smoothing constant")
    gen.add_argument("--include-infinitives", action="store_true",
                     help="let infinitive verbs contribute use cases")
    gen.add_argument("--json", action="store_true", dest="as_json",
                     help="emit the full pipeline result as JSON")
    gen.add_argument("--save-project", help="also write a project file here")

    trn = sub.add_parser("train", help="train the use-case filter")
    trn.add_argument("--data", required=True, help="phrase,label CSV")
    trn.add_argument("--alpha", type=float, default=1.0)
    trn.add_argument("--out", required=True, help="model file to write")

    ev = sub.add_parser("evaluate", help="score extraction against a gold corpus")
    ev.add_argument("--corpus", help="gold corpus (NDJSON; default: bundled)")
    ev.add_argument("--model", help="classifier model file")
    ev.add_argument("--no-filter", action="store_true")
    ev.add_argument("--include-infinitives", action="store_true")
    ev.add_argument("--ml-test", help="labeled CSV to score the classifier on")
    ev.add_argument("--report-dir", help="write CSV + figure files here")

    srv = sub.add_parser("serve", help="start the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=8000)
    srv.add_argument("--data-dir", help="project persistence directory")
    srv.add_argument("--ui-dir", help="built web UI assets to serve at /")

    ed = sub.add_parser("edit", help="interactively edit a model")
    ed.add_argument("source", help="project file (.json) or story file")
    ed.add_argument("--save", help="write the project here on quit")
    ed.add_argument("--system", default="System")
    ed.add_argument("--no-filter", action="store_true")
    return parser


def _pipeline_config(args) -> PipelineConfig:
    return PipelineConfig(
        lexicon_path=getattr(args, "lexicon", None),
        model_path=getattr(args, "model", None),
        alpha=getattr(args, "alpha", 1.0),
        filter_enabled=not getattr(args, "no_filter", False),
        include_infinitives=getattr(args, "include_infinitives", False),
        system_name=getattr(args, "system", "System"),
    )


def _read_story(path: str | None) -> str:
    if path:
        return Path(path).read_text(encoding="utf-8")
    return sys.stdin.read()


def cmd_generate(args) -> int:
    result = project.run_pipeline(_read_story(args.story), _pipeline_config(args))
    for diag in result.diagnostics:
        print(f"{diag.severity}: {diag.message}", file=sys.stderr)
    output = (json.dumps(project.result_to_dict(result), indent=2) + "\n"
              if args.as_json else result.plantuml)
    if args.out:
        Path(args.out).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    if args.save_project:
        session = Session(model=result.filtered_model)
        project.save_project(result, session, args.save_project)
    return EXIT_OK


def cmd_train(args) -> int:
    dataset = classifier.load_dataset(args.data)
    model = classifier.train(dataset, alpha=args.alpha)
    classifier.save_model(model, args.out)
    print(f"trained on {len(dataset)} phrases "
          f"({len(model.vocabulary)} vocabulary tokens) -> {args.out}")
    return EXIT_OK


def cmd_evaluate(args) -> int:
    corpus = project.load_gold_corpus(args.corpus)
    config = _pipeline_config(args)
    rep = project.evaluate_corpus(corpus, config)
    rows = [
        ("user stories", rep.story_count, ""),
        ("actual actors", rep.actual_actors, ""),
        ("actual use cases", rep.actual_use_cases, ""),
        ("identified actors", rep.identified_actors, f"({rep.actor_pct:.2f}%)"),
        ("identified use cases", rep.identified_use_cases, f"({rep.use_case_pct:.2f}%)"),
    ]
    print("Extraction evaluation")
    for label, value, extra in rows:
        print(f"  {label:<22} {value:>4}  {extra}")
    cm = nb_metrics = None
    if args.ml_test:
        nb_model = (classifier.load_model(args.model) if args.model
                    else classifier.default_model())
        cm, nb_metrics = classifier.evaluate(nb_model, classifier.load_dataset(args.ml_test))
        print("Classifier evaluation")
        print(f"  {'TP':>5} {'FP':>5} {'FN':>5} {'TN':>5}")
        print(f"  {cm.tp:>5} {cm.fp:>5} {cm.fn:>5} {cm.tn:>5}")
        for name, value in (("accuracy", nb_metrics.accuracy),
                            ("precision", nb_metrics.precision),
                            ("recall", nb_metrics.recall),
                            ("f1", nb_metrics.f1)):
            print(f"  {name:<22} {value:.4f}")
    if args.report_dir:
        from . import report as report_mod
        written = report_mod.render_report_dir(args.report_dir, rep, cm, nb_metrics)
        for path in written:
            print(f"wrote {path}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    app = create_app(data_dir=args.data_dir, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_EDIT_USAGE = """\
commands:
  add-actor NAME              remove-actor KEY
  rename-actor KEY NEW_NAME   add-usecase KEY PHRASE
  remove-usecase KEY PHRASE   rename-usecase KEY OLD NEW
  reassign PHRASE FROM TO     undo
  show | uml | save [PATH] | help | quit
"""


def _parse_edit_command(parts: list[str]):
    name, rest = parts[0], parts[1:]
    shapes = {
        "add-actor": (editsession.AddActor, 1),
        "remove-actor": (editsession.RemoveActor, 1),
        "rename-actor": (editsession.RenameActor, 2),
        "add-usecase": (editsession.AddUseCase, 2),
        "remove-usecase": (editsession.RemoveUseCase, 2),
        "rename-usecase": (editsession.RenameUseCase, 3),
        "reassign": (editsession.ReassignUseCase, 3),
    }
    if name not in shapes:
        return None
    cls, arity = shapes[name]
    if len(rest) != arity:
        raise Story2UmlError(f"{name} takes {arity} argument(s); try 'help'")
    return cls(*rest)


def cmd_edit(args) -> int:
    source = Path(args.source)
    if source.suffix == ".json":
        result, session = project.load_project(source)
    else:
        result = project.run_pipeline(source.read_text(encoding="utf-8"),
                                      _pipeline_config(args))
        session = Session(model=result.filtered_model)
    print(_EDIT_USAGE, end="")
    save_path = args.save or (str(source) if source.suffix == ".json" else None)
    for raw in sys.stdin:
        line = raw.strip()
        if not line:
            continue
        try:
            parts = shlex.split(line)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            continue
        head = parts[0].lower()
        try:
            if head == "quit":
                break
            elif head == "help":
                print(_EDIT_USAGE, end="")
            elif head == "show":
                for actor in session.model.actors:
                    print(f"{actor.name} ({actor.key})")
                    for uc in session.model.associations[actor.key]:
                        print(f"  - {uc.phrase}")
                print(f"revision {session.revision}")
            elif head == "uml":
                sys.stdout.write(emit_plantuml(session.model))
            elif head == "save":
                target = parts[1] if len(parts) > 1 else save_path
                if not target:
                    print("error: no save path; use 'save PATH'", file=sys.stderr)
                    continue
                project.save_project(result, session, target)
                save_path = target
                print(f"saved {target}")
            elif head == "undo":
                session = editsession.undo(session)
                print(f"revision {session.revision}")
            else:
                cmd = _parse_edit_command(parts)
                if cmd is None:
                    print(f"error: unknown command '{head}'; try 'help'", file=sys.stderr)
                    continue
                session = editsession.apply_edit(session, cmd)
                print(f"revision {session.revision}")
        except Story2UmlError as exc:
            print(f"error: {exc}", file=sys.stderr)
    if save_path:
        project.save_project(result, session, save_path)
        print(f"saved {save_path}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    handlers = {
        "generate": cmd_generate,
        "train": cmd_train,
        "evaluate": cmd_evaluate,
        "serve": cmd_serve,
        "edit": cmd_edit,
    }
    try:
        return handlers[args.command](args)
    except Story2UmlError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
