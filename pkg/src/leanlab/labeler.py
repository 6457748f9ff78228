"""Heuristic post labeling from linked news domains and post sentiment.

Type-1 (news-domain labeling): average the leaning codes of a post's
known news domains into an unscaled leaning, then threshold it into
left / center / right bands at +-0.1.  Posts without known news domains
receive no label.

Type-2 (sentiment labeling) adjusts the type-1 result by the post's
combined sentiment tau, in one of two modes:

* ``flip`` (default): when tau < 0 and the type-1 label is not Center,
  swap Left and Right; otherwise keep the type-1 label.
* ``scale``: re-threshold the product unscaled * tau.

Center posts never change label in either mode: flip skips them by
definition, and in scale mode |tau| <= 1 keeps the product inside the
center band.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .ingest import Post, post_domains
from .registry import BiasRegistry, Leaning
from .sentiment import SentimentAnalyzer, SentimentScore

LEFT_BAND = -0.1
RIGHT_BAND = 0.1

TYPE2_MODES = ("flip", "scale")


@dataclass(frozen=True)
class LabeledPost:
    post_id: str
    unscaled: float
    tau: float | None
    label: Leaning
    method: str  # type1 | type2_flip | type2_scale
    domain_count: int


def unscaled_leaning(domains: list[Leaning]) -> float:
    """Arithmetic mean of leaning codes; requires at least one domain."""
    if not domains:
        raise ValueError("no known news domains: post is unlabelable")
    return sum(int(d) for d in domains) / len(domains)


def threshold(p_hat: float) -> Leaning:
    """Band a finite unscaled leaning: <= -0.1 left, >= +0.1 right, else center."""
    if not math.isfinite(p_hat):
        raise ValueError(f"unscaled leaning must be finite, got {p_hat}")
    if p_hat <= LEFT_BAND:
        return Leaning.LEFT
    if p_hat >= RIGHT_BAND:
        return Leaning.RIGHT
    return Leaning.CENTER


def opposite(leaning: Leaning) -> Leaning:
    return Leaning(-int(leaning))


def apply_type2(unscaled: float, tau: float, mode: str) -> Leaning:
    """Sentiment-adjusted label for a known unscaled leaning and tau."""
    if mode == "scale":
        return threshold(unscaled * tau)
    if mode == "flip":
        base = threshold(unscaled)
        if tau < 0 and base is not Leaning.CENTER:
            return opposite(base)
        return base
    raise ValueError(f"unknown type-2 mode: {mode!r}")


def _known_leanings(post: Post, registry: BiasRegistry) -> list[Leaning]:
    return [leaning for _, leaning in post_domains(post, registry) if leaning is not None]


def label_type1(post: Post, registry: BiasRegistry) -> LabeledPost | None:
    """News-domain label, or None when the post links no known news domain."""
    known = _known_leanings(post, registry)
    if not known:
        return None
    p_hat = unscaled_leaning(known)
    return LabeledPost(
        post_id=post.id,
        unscaled=p_hat,
        tau=None,
        label=threshold(p_hat),
        method="type1",
        domain_count=len(known),
    )


def label_type2(
    post: Post,
    registry: BiasRegistry,
    score: SentimentScore,
    mode: str = "flip",
) -> LabeledPost | None:
    """Sentiment-adjusted label; unlabeled exactly when type-1 would be."""
    if mode not in TYPE2_MODES:
        raise ValueError(f"unknown type-2 mode: {mode!r}")
    known = _known_leanings(post, registry)
    if not known:
        return None
    p_hat = unscaled_leaning(known)
    return LabeledPost(
        post_id=post.id,
        unscaled=p_hat,
        tau=score.tau,
        label=apply_type2(p_hat, score.tau, mode),
        method=f"type2_{mode}",
        domain_count=len(known),
    )


@dataclass
class LabelSummary:
    """Per-leaning label counts plus the count of unlabeled posts."""

    counts: Counter

    @classmethod
    def empty(cls) -> "LabelSummary":
        return cls(Counter({Leaning.LEFT: 0, Leaning.CENTER: 0, Leaning.RIGHT: 0, "unlabeled": 0}))

    def add(self, labeled: LabeledPost | None) -> None:
        if labeled is None:
            self.counts["unlabeled"] += 1
        else:
            self.counts[labeled.label] += 1

    def as_dict(self) -> dict[str, int]:
        return {
            "left": self.counts[Leaning.LEFT],
            "center": self.counts[Leaning.CENTER],
            "right": self.counts[Leaning.RIGHT],
            "unlabeled": self.counts["unlabeled"],
        }


def label_corpus(
    posts: Iterable[Post],
    registry: BiasRegistry,
    method: str = "type1",
    analyzer: SentimentAnalyzer | None = None,
    type2_mode: str = "flip",
) -> tuple[list[LabeledPost], LabelSummary]:
    """Label every post with the chosen heuristic; returns labels + counts."""
    if method not in ("type1", "type2"):
        raise ValueError(f"unknown labeling method: {method!r}")
    analyzer = analyzer or SentimentAnalyzer()
    summary = LabelSummary.empty()
    labeled: list[LabeledPost] = []
    for post in posts:
        if method == "type1":
            result = label_type1(post, registry)
        else:
            result = label_type2(post, registry, analyzer.score(post.text), mode=type2_mode)
        summary.add(result)
        if result is not None:
            labeled.append(result)
    return labeled, summary
