"""Per-post sentiment scoring: three lexicon analyzers and their combination.

Three contract-compatible analyzers produce the per-post scores used by
the sentiment labeling heuristic:

* ``polarity_pattern`` -> alpha, a real polarity in [-1, +1]
* ``polarity_rule``    -> beta, a trichotomized {-1, 0, +1} score
* ``polarity_wordlist``-> gamma, a real wordlist polarity in [-1, +1]

``combine`` averages them into tau.  All analyzers are pure functions of
(text, lexicon); lexicons are immutable after construction.  A small
embedded lexicon ships for deterministic runs; larger lexicons can be
loaded from TSV files (``word<TAB>score``).

Shared adjustment rules (pattern and rule analyzers): a negation word
within the 3 preceding tokens multiplies a matched score by -0.5, and an
intensifier immediately before the matched token multiplies it by the
intensifier's boost.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from pathlib import Path

from .ingest import strip_urls

NEGATION_WINDOW = 3
NEGATION_FACTOR = -0.5
# rule-analyzer normalization: s / sqrt(s^2 + RULE_NORM), trichotomized at +-0.05
RULE_NORM = 15.0
RULE_POS_THRESHOLD = 0.05
RULE_NEG_THRESHOLD = -0.05

_TOKEN_RE = re.compile(r"[a-z0-9']+")


def sentiment_tokens(text: str) -> list[str]:
    """Lowercased word tokens with URLs removed; punctuation-independent."""
    return _TOKEN_RE.findall(strip_urls(text).lower())


DEFAULT_NEGATIONS = frozenset(
    {
        "not", "no", "never", "none", "nothing", "cannot", "cant", "can't",
        "dont", "don't", "doesnt", "doesn't", "didnt", "didn't", "isnt",
        "isn't", "wasnt", "wasn't", "arent", "aren't", "werent", "weren't",
        "wont", "won't", "wouldnt", "wouldn't", "couldnt", "couldn't",
        "shouldnt", "shouldn't", "aint", "ain't", "neither", "nor", "hardly",
    }
)

DEFAULT_INTENSIFIERS = {
    "very": 1.5,
    "really": 1.3,
    "extremely": 2.0,
    "absolutely": 1.8,
    "incredibly": 1.9,
    "totally": 1.6,
    "hugely": 1.7,
    "deeply": 1.4,
    "slightly": 0.5,
    "somewhat": 0.7,
    "barely": 0.4,
}

# Embedded pattern-analyzer polarities, [-1, +1].
_PATTERN_WORDS = {
    "great": 0.8, "good": 0.7, "excellent": 1.0, "wonderful": 1.0,
    "amazing": 0.8, "love": 0.6, "win": 0.8, "best": 1.0, "brilliant": 0.9,
    "happy": 0.8, "hope": 0.5, "success": 0.75, "strong": 0.45,
    "proud": 0.6, "fair": 0.7, "safe": 0.5, "kind": 0.6, "calm": 0.3,
    "awful": -1.0, "terrible": -1.0, "bad": -0.7, "horrible": -1.0,
    "disaster": -0.8, "hate": -0.8, "worst": -1.0, "corrupt": -0.8,
    "fail": -0.65, "crisis": -0.6, "weak": -0.5, "angry": -0.7,
    "sad": -0.6, "wrong": -0.5, "fear": -0.6, "lie": -0.7,
    "threat": -0.55, "shame": -0.6, "evil": -0.9, "danger": -0.6,
}

# Embedded rule-analyzer valences (unnormalized, roughly [-4, +4]).
_RULE_WORDS = {
    "great": 3.1, "good": 1.9, "excellent": 2.7, "wonderful": 2.7,
    "amazing": 2.8, "love": 3.2, "win": 2.8, "best": 3.2, "brilliant": 2.8,
    "happy": 2.7, "hope": 1.9, "success": 2.7, "strong": 1.7, "proud": 2.2,
    "fair": 1.7, "safe": 1.4, "kind": 2.0, "calm": 1.3,
    "awful": -2.0, "terrible": -2.1, "bad": -2.5, "horrible": -2.5,
    "disaster": -3.1, "hate": -2.7, "worst": -3.1, "corrupt": -2.4,
    "fail": -2.3, "crisis": -2.3, "weak": -1.8, "angry": -2.3, "sad": -2.1,
    "wrong": -2.1, "fear": -2.2, "lie": -1.7, "threat": -2.4,
    "shame": -2.1, "evil": -3.4, "danger": -2.4,
}

# Embedded wordlist scores, integers in [-5, +5].
_WORDLIST_WORDS = {
    "abandon": -2, "amazing": 4, "angry": -3, "awful": -3, "bad": -3,
    "best": 3, "brilliant": 4, "calm": 2, "corrupt": -3, "crisis": -3,
    "danger": -2, "disaster": -2, "evil": -3, "excellent": 3, "fail": -2,
    "fair": 2, "fear": -2, "good": 3, "great": 3, "happy": 3, "hate": -3,
    "hope": 2, "horrible": -3, "kind": 2, "lie": -2, "love": 3, "proud": 2,
    "sad": -2, "safe": 1, "shame": -2, "strong": 2, "success": 2,
    "terrible": -3, "threat": -2, "weak": -2, "win": 4, "wonderful": 4,
    "worst": -3, "wrong": -2,
}


@dataclass(frozen=True)
class SentimentLexicon:
    """Word scores plus the negation / intensifier wordlists.

    ``words`` maps lowercase tokens to finite scores; intensifier boosts
    are positive multipliers.
    """

    words: dict[str, float]
    intensifiers: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_INTENSIFIERS))
    negations: frozenset[str] = DEFAULT_NEGATIONS

    def __post_init__(self) -> None:
        for word, score in self.words.items():
            if not math.isfinite(score):
                raise ValueError(f"non-finite score for {word!r}")
        for word, boost in self.intensifiers.items():
            if boost <= 0:
                raise ValueError(f"intensifier boost must be > 0 ({word!r})")


def default_pattern_lexicon() -> SentimentLexicon:
    return SentimentLexicon(dict(_PATTERN_WORDS))


def default_rule_lexicon() -> SentimentLexicon:
    return SentimentLexicon(dict(_RULE_WORDS))


def default_wordlist_lexicon() -> SentimentLexicon:
    return SentimentLexicon({w: float(s) for w, s in _WORDLIST_WORDS.items()})


def load_lexicon(path: str | Path, **kwargs) -> SentimentLexicon:
    """Read a ``word<TAB>score`` TSV file into a SentimentLexicon."""
    path = Path(path)
    words: dict[str, float] = {}
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'word<TAB>score'")
            try:
                words[parts[0].lower()] = float(parts[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: bad score {parts[1]!r}") from None
    return SentimentLexicon(words, **kwargs)


def _clamp(value: float, lo: float = -1.0, hi: float = 1.0) -> float:
    return max(lo, min(hi, value))


def _adjusted_scores(tokens: list[str], lexicon: SentimentLexicon) -> list[float]:
    """Matched-token scores after negation flips and intensifier boosts."""
    scores = []
    for i, token in enumerate(tokens):
        base = lexicon.words.get(token)
        if base is None:
            continue
        if i > 0 and tokens[i - 1] in lexicon.intensifiers:
            base *= lexicon.intensifiers[tokens[i - 1]]
        window = tokens[max(0, i - NEGATION_WINDOW):i]
        if any(t in lexicon.negations for t in window):
            base *= NEGATION_FACTOR
        scores.append(base)
    return scores


def polarity_pattern(text: str, lexicon: SentimentLexicon | None = None) -> float:
    """alpha: mean adjusted polarity of matched tokens, clamped to [-1, +1]."""
    lexicon = lexicon or default_pattern_lexicon()
    scores = _adjusted_scores(sentiment_tokens(text), lexicon)
    if not scores:
        return 0.0
    return _clamp(sum(scores) / len(scores))


def polarity_rule(text: str, lexicon: SentimentLexicon | None = None) -> int:
    """beta: trichotomized compound score in {-1, 0, +1}.

    The summed adjusted valences are squashed to s / sqrt(s^2 + 15) and
    cut at +-0.05.
    """
    lexicon = lexicon or default_rule_lexicon()
    total = sum(_adjusted_scores(sentiment_tokens(text), lexicon))
    if total == 0.0:
        return 0
    compound = total / math.sqrt(total * total + RULE_NORM)
    if compound >= RULE_POS_THRESHOLD:
        return 1
    if compound <= RULE_NEG_THRESHOLD:
        return -1
    return 0


def polarity_wordlist(text: str, lexicon: SentimentLexicon | None = None) -> float:
    """gamma: mean matched wordlist score divided by 5, clamped to [-1, +1]."""
    lexicon = lexicon or default_wordlist_lexicon()
    tokens = sentiment_tokens(text)
    matched = [lexicon.words[t] for t in tokens if t in lexicon.words]
    if not matched:
        return 0.0
    return _clamp((sum(matched) / len(matched)) / 5.0)


def combine(alpha: float, beta: int, gamma: float) -> float:
    """tau: exact arithmetic mean of the three scores; inputs range-checked."""
    if not -1.0 <= alpha <= 1.0:
        raise ValueError(f"alpha out of range [-1, 1]: {alpha}")
    if beta not in (-1, 0, 1):
        raise ValueError(f"beta must be in {{-1, 0, +1}}: {beta}")
    if not -1.0 <= gamma <= 1.0:
        raise ValueError(f"gamma out of range [-1, 1]: {gamma}")
    return (alpha + beta + gamma) / 3.0


@dataclass(frozen=True)
class SentimentScore:
    alpha: float
    beta: int
    gamma: float
    tau: float


class SentimentAnalyzer:
    """Bundles the three lexicons and scores posts in one call."""

    def __init__(
        self,
        pattern_lexicon: SentimentLexicon | None = None,
        rule_lexicon: SentimentLexicon | None = None,
        wordlist_lexicon: SentimentLexicon | None = None,
    ):
        self.pattern_lexicon = pattern_lexicon or default_pattern_lexicon()
        self.rule_lexicon = rule_lexicon or default_rule_lexicon()
        self.wordlist_lexicon = wordlist_lexicon or default_wordlist_lexicon()

    def score(self, text: str) -> SentimentScore:
        alpha = polarity_pattern(text, self.pattern_lexicon)
        beta = polarity_rule(text, self.rule_lexicon)
        gamma = polarity_wordlist(text, self.wordlist_lexicon)
        return SentimentScore(alpha, beta, gamma, combine(alpha, beta, gamma))
