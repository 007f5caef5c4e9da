"""Multinomial Naive Bayes filter over use-case phrases, plus the
confusion-matrix metric suite used to evaluate it.

Features are lowercase whitespace unigrams with Laplace smoothing.
Ties and phrases made only of unseen tokens resolve to "keep": deleting
a kept phrase in the editor is cheaper than recovering a dropped one.
"""

from __future__ import annotations

import copy
import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DegenerateDataset, MalformedFile, UndefinedMetric, VersionMismatch
from .extract import UseCase, UseCaseModel

MODEL_FORMAT_VERSION = 1
DEFAULT_DATASET_PATH = Path(__file__).parent / "data" / "seed_usecases.csv"


@dataclass(frozen=True)
class LabeledPhrase:
    phrase: str
    label: bool

    def __post_init__(self):
        if not self.phrase.strip():
            raise ValueError("labeled phrase must be nonempty")


@dataclass
class NBModel:
    alpha: float
    class_doc_counts: dict[bool, int]
    class_token_counts: dict[bool, dict[str, int]]
    class_total_tokens: dict[bool, int]
    vocabulary: set[str] = field(default_factory=set)


def features(phrase: str) -> list[str]:
    return phrase.lower().split()


def train(dataset: list[LabeledPhrase], alpha: float = 1.0) -> NBModel:
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    doc_counts = {True: 0, False: 0}
    token_counts: dict[bool, dict[str, int]] = {True: {}, False: {}}
    total_tokens = {True: 0, False: 0}
    vocabulary: set[str] = set()
    for row in dataset:
        doc_counts[row.label] += 1
        for token in features(row.phrase):
            vocabulary.add(token)
            token_counts[row.label][token] = token_counts[row.label].get(token, 0) + 1
            total_tokens[row.label] += 1
    if doc_counts[True] == 0 or doc_counts[False] == 0:
        raise DegenerateDataset("training data must contain both classes")
    return NBModel(alpha=alpha, class_doc_counts=doc_counts,
                   class_token_counts=token_counts,
                   class_total_tokens=total_tokens, vocabulary=vocabulary)


def predict(model: NBModel, phrase: str) -> tuple[bool, dict[bool, float]]:
    """Classify a phrase; returns (label, per-class log posterior).

    Log posteriors are unnormalized: log prior plus smoothed log
    likelihoods of the in-vocabulary tokens.  Ties go to True.
    """
    total_docs = sum(model.class_doc_counts.values())
    vocab_size = len(model.vocabulary)
    log_posteriors: dict[bool, float] = {}
    for label in (True, False):
        # fsum keeps symmetric scores exactly tied regardless of the
        # order the token logs happen to accumulate in
        terms = [math.log(model.class_doc_counts[label] / total_docs)]
        denominator = model.class_total_tokens[label] + model.alpha * vocab_size
        for token in features(phrase):
            if token not in model.vocabulary:
                continue
            count = model.class_token_counts[label].get(token, 0)
            terms.append(math.log((count + model.alpha) / denominator))
        log_posteriors[label] = math.fsum(terms)
    return log_posteriors[True] >= log_posteriors[False], log_posteriors


def filter_model(model: NBModel, ucm: UseCaseModel) -> tuple[UseCaseModel, list[tuple[str, UseCase]]]:
    """Drop use cases the classifier rejects; actors stay even when their
    list empties out.  The dropped list keeps extraction order."""
    filtered = copy.deepcopy(ucm)
    dropped: list[tuple[str, UseCase]] = []
    for actor in filtered.actors:
        kept = []
        for use_case in filtered.associations[actor.key]:
            label, _ = predict(model, use_case.phrase)
            if label:
                kept.append(use_case)
            else:
                dropped.append((actor.key, use_case))
        filtered.associations[actor.key] = kept
    dropped.sort(key=lambda pair: pair[1].source)
    return filtered, dropped


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class Metrics:
    accuracy: float
    precision: float
    recall: float
    f1: float


def metrics(cm: ConfusionMatrix) -> Metrics:
    if cm.total == 0:
        raise UndefinedMetric("accuracy")
    if cm.tp + cm.fp == 0:
        raise UndefinedMetric("precision")
    if cm.tp + cm.fn == 0:
        raise UndefinedMetric("recall")
    accuracy = (cm.tp + cm.tn) / cm.total
    precision = cm.tp / (cm.tp + cm.fp)
    recall = cm.tp / (cm.tp + cm.fn)
    if precision + recall == 0:
        raise UndefinedMetric("f1")
    f1 = 2 * precision * recall / (precision + recall)
    return Metrics(accuracy, precision, recall, f1)


def evaluate(model: NBModel, test: list[LabeledPhrase]) -> tuple[ConfusionMatrix, Metrics]:
    tp = fp = fn = tn = 0
    for row in test:
        predicted, _ = predict(model, row.phrase)
        if predicted and row.label:
            tp += 1
        elif predicted and not row.label:
            fp += 1
        elif not predicted and row.label:
            fn += 1
        else:
            tn += 1
    cm = ConfusionMatrix(tp=tp, fp=fp, fn=fn, tn=tn)
    return cm, metrics(cm)


def load_dataset(path: Path | str | None = None) -> list[LabeledPhrase]:
    """Read a ``phrase,label`` CSV (labels are the words true/false)."""
    path = Path(path) if path else DEFAULT_DATASET_PATH
    rows: list[LabeledPhrase] = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["phrase", "label"]:
            raise MalformedFile(f"{path}: expected header 'phrase,label'")
        for record in reader:
            label_text = (record["label"] or "").strip().lower()
            if label_text not in ("true", "false"):
                raise MalformedFile(f"{path}: bad label {record['label']!r}")
            rows.append(LabeledPhrase(phrase=record["phrase"].strip(),
                                      label=label_text == "true"))
    return rows


def save_model(model: NBModel, path: Path | str) -> None:
    """Write the trained counts as versioned JSON."""
    payload = {
        "format_version": MODEL_FORMAT_VERSION,
        "alpha": model.alpha,
        "class_doc_counts": {str(k).lower(): v for k, v in model.class_doc_counts.items()},
        "class_token_counts": {str(k).lower(): v for k, v in model.class_token_counts.items()},
        "class_total_tokens": {str(k).lower(): v for k, v in model.class_total_tokens.items()},
        "vocabulary": sorted(model.vocabulary),
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def load_model(path: Path | str) -> NBModel:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedFile(f"{path}: not a valid model file ({exc})") from exc
    if not isinstance(payload, dict) or "format_version" not in payload:
        raise MalformedFile(f"{path}: missing format_version")
    if payload["format_version"] != MODEL_FORMAT_VERSION:
        raise VersionMismatch(payload["format_version"], MODEL_FORMAT_VERSION)
    try:
        return NBModel(
            alpha=float(payload["alpha"]),
            class_doc_counts={True: payload["class_doc_counts"]["true"],
                              False: payload["class_doc_counts"]["false"]},
            class_token_counts={True: dict(payload["class_token_counts"]["true"]),
                                False: dict(payload["class_token_counts"]["false"])},
            class_total_tokens={True: payload["class_total_tokens"]["true"],
                                False: payload["class_total_tokens"]["false"]},
            vocabulary=set(payload["vocabulary"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedFile(f"{path}: incomplete model payload ({exc})") from exc


def default_model(alpha: float = 1.0) -> NBModel:
    """Train on the bundled seed dataset (used when no model file is given)."""
    return train(load_dataset(), alpha=alpha)
