"""Independent reference implementations used only to check the package.

Each oracle deliberately takes a different implementation route than the
production code: recursive memoized edit distance vs. the iterative DP,
Fraction-based Bayes posteriors vs. streaming float logs, and a direct
transcription of the four confusion-matrix formulas.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def edit_distance(a: str, b: str) -> int:
    """Optimal string alignment distance, recursive formulation."""

    @lru_cache(maxsize=None)
    def dist(i: int, j: int) -> int:
        if i == 0:
            return j
        if j == 0:
            return i
        cost = 0 if a[i - 1] == b[j - 1] else 1
        best = min(dist(i - 1, j) + 1, dist(i, j - 1) + 1, dist(i - 1, j - 1) + cost)
        if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
            best = min(best, dist(i - 2, j - 2) + 1)
        return best

    return dist(len(a), len(b))


def words_within_distance(word: str, vocabulary, cap: int = 2) -> list[tuple[str, int]]:
    """Brute-force scan of a vocabulary for close words."""
    close = []
    for entry in vocabulary:
        d = edit_distance(word.lower(), entry)
        if d <= cap:
            close.append((entry, d))
    return sorted(close, key=lambda pair: (pair[1], pair[0]))


def nb_log_posteriors(dataset: list[tuple[str, bool]], alpha,
                      phrase: str) -> dict[bool, float]:
    """Smoothed multinomial Bayes posteriors computed with exact rationals.

    Builds the full joint probability per class from scratch:
    P(c) * prod_t P(t|c) with P(t|c) = (count(t,c)+alpha)/(total_c+alpha*|V|),
    skipping tokens outside the training vocabulary.
    """
    alpha = Fraction(alpha)
    vocabulary = set()
    token_counts: dict[bool, dict[str, int]] = {True: {}, False: {}}
    doc_counts = {True: 0, False: 0}
    for text, label in dataset:
        doc_counts[label] += 1
        for token in text.lower().split():
            vocabulary.add(token)
            token_counts[label][token] = token_counts[label].get(token, 0) + 1
    total_docs = doc_counts[True] + doc_counts[False]
    result = {}
    for label in (True, False):
        total_tokens = sum(token_counts[label].values())
        joint = Fraction(doc_counts[label], total_docs)
        for token in phrase.lower().split():
            if token not in vocabulary:
                continue
            count = token_counts[label].get(token, 0)
            joint *= (count + alpha) / (total_tokens + alpha * len(vocabulary))
        result[label] = math.log(joint)
    return result


def nb_label(dataset, alpha, phrase) -> bool:
    posteriors = nb_log_posteriors(dataset, alpha, phrase)
    return posteriors[True] >= posteriors[False]


def confusion_metrics(tp: int, fp: int, fn: int, tn: int) -> tuple[float, float, float, float]:
    """Direct transcription of the four evaluation formulas."""
    total = tp + fp + fn + tn
    accuracy = (tp + tn) / total
    precision = tp / (tp + fp)
    recall = tp / (tp + fn)
    f1 = 2 * (precision * recall) / (precision + recall)
    return accuracy, precision, recall, f1
