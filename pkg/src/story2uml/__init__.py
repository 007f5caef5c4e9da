"""story2uml: English user stories in, UML use case models and PlantUML out."""

from .classifier import (ConfusionMatrix, LabeledPhrase, Metrics, NBModel,
                         evaluate, metrics, predict, train)
from .diagram import AliasMap, emit_plantuml, make_aliases, parse_plantuml
from .editsession import Session, apply_edit, undo
from .extract import (Actor, UseCase, UseCaseModel, extract_model,
                      model_stats)
from .lingpipe import (DepLabel, PosTag, TaggedSentence, Token, annotate,
                       dep_lite, lemmatize, pos_tag, segment_sentences,
                       tokenize)
from .project import (ExtractionReport, GoldStory, PipelineConfig,
                      PipelineResult, evaluate_corpus, load_project,
                      run_pipeline, save_project)
from .textnorm import (CorrectionReport, Lexicon, correct_spelling,
                       damerau_levenshtein, default_lexicon, load_lexicon,
                       normalize_text)

__version__ = "0.1.0"

__all__ = [
    "Actor", "AliasMap", "ConfusionMatrix", "CorrectionReport", "DepLabel",
    "ExtractionReport", "GoldStory", "LabeledPhrase", "Lexicon", "Metrics",
    "NBModel", "PipelineConfig", "PipelineResult", "PosTag", "Session",
    "TaggedSentence", "Token", "UseCase", "UseCaseModel", "annotate",
    "apply_edit", "correct_spelling", "damerau_levenshtein", "default_lexicon",
    "dep_lite", "emit_plantuml", "evaluate", "evaluate_corpus", "extract_model",
    "lemmatize", "load_lexicon", "load_project", "make_aliases", "metrics",
    "model_stats", "normalize_text", "parse_plantuml", "pos_tag", "predict",
    "run_pipeline", "save_project", "segment_sentences", "tokenize", "train",
    "undo", "__version__",
]
