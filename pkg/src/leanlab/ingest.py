"""Corpus ingestion: JSONL readers, URL extraction, and corpus filters."""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import CorpusError
from .registry import BiasRegistry, Leaning, normalize_domain

URL_RE = re.compile(r"""https?://[^\s)\]}"'>]+""")
# social text abuts links with punctuation; trim it off the tail
_TRAILING_PUNCT = ".,;:!?)\"']"


@dataclass
class Post:
    """One social-media post, as read from a corpus file."""

    id: str
    text: str
    urls: list[str] = field(default_factory=list)
    platform: str = "other"
    timestamp: str | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("post id must be non-empty")
        if not self.text and not self.urls:
            raise ValueError(f"post {self.id}: empty text requires at least one url")


@dataclass
class CorpusStats:
    post_count: int = 0
    domain_frequency: Counter = field(default_factory=Counter)


@dataclass(frozen=True)
class FieldMapping:
    """Names of the id/text/url fields in a line-delimited JSON corpus.

    The two source datasets use different schemas, so the mapping is
    configuration rather than a hardcoded layout.
    """

    id_field: str = "id"
    text_field: str = "text"
    url_field: str | None = None
    timestamp_field: str | None = None
    platform: str = "other"


def extract_urls(text: str) -> list[str]:
    """All http(s) URLs in `text`, in order, with trailing punctuation trimmed.

    A URL runs from its scheme up to whitespace or a closing
    bracket/quote; duplicates are kept.
    """
    found = []
    for match in URL_RE.finditer(text):
        url = match.group(0).rstrip(_TRAILING_PUNCT)
        scheme_len = 8 if url.startswith("https://") else 7
        if len(url) > scheme_len:  # bare scheme is not a link
            found.append(url)
    return found


def strip_urls(text: str) -> str:
    """Text with every extractable URL replaced by a single space."""
    return URL_RE.sub(" ", text)


class JsonlCorpusReader:
    """Stream Posts out of a line-delimited JSON file.

    Invalid lines (bad JSON, missing/empty mandatory fields) are counted
    in ``skipped`` and passed over rather than aborting the run.  A
    mapping that misses its id or text field in more than half of the
    first 100 lines is treated as a configuration error.
    """

    PROBE_LINES = 100

    def __init__(self, path: str | Path, mapping: FieldMapping | None = None):
        self.path = Path(path)
        if not self.path.is_file():
            raise FileNotFoundError(f"corpus file not found: {self.path}")
        self.mapping = mapping or FieldMapping()
        self.skipped = 0
        self.yielded = 0
        self._probe()

    def _probe(self) -> None:
        probed = 0
        missing = 0
        with self.path.open(encoding="utf-8") as fh:
            for line in fh:
                if not line.strip():
                    continue
                probed += 1
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError:
                    obj = {}
                if not isinstance(obj, dict) or (
                    self.mapping.id_field not in obj or self.mapping.text_field not in obj
                ):
                    missing += 1
                if probed >= self.PROBE_LINES:
                    break
        if probed and missing * 2 > probed:
            raise CorpusError(
                f"{self.path}: mapping ({self.mapping.id_field!r}/{self.mapping.text_field!r}) "
                f"missing in {missing} of first {probed} lines"
            )

    def _to_post(self, obj: dict) -> Post:
        m = self.mapping
        raw_urls = obj.get(m.url_field) if m.url_field else []
        if raw_urls is None:
            raw_urls = []
        if isinstance(raw_urls, str):
            raw_urls = [raw_urls] if raw_urls else []
        urls = [u for u in raw_urls if isinstance(u, str) and u]
        timestamp = obj.get(m.timestamp_field) if m.timestamp_field else None
        return Post(
            id=str(obj[m.id_field]),
            text=str(obj.get(m.text_field) or ""),
            urls=urls,
            platform=m.platform,
            timestamp=timestamp,
        )

    def __iter__(self) -> Iterator[Post]:
        self.skipped = 0
        self.yielded = 0
        with self.path.open(encoding="utf-8") as fh:
            for line in fh:
                if not line.strip():
                    continue
                try:
                    obj = json.loads(line)
                    if not isinstance(obj, dict):
                        raise ValueError("line is not a JSON object")
                    if self.mapping.id_field not in obj:
                        raise ValueError("missing id field")
                    post = self._to_post(obj)
                except (ValueError, KeyError):
                    self.skipped += 1
                    continue
                self.yielded += 1
                yield post


def read_corpus(path: str | Path, mapping: FieldMapping | None = None) -> JsonlCorpusReader:
    """Open a JSONL corpus for streaming; see JsonlCorpusReader."""
    return JsonlCorpusReader(path, mapping)


def _normalized_post_domains(post: Post) -> list[str]:
    """Unique normalized domains linked by a post, first-seen order."""
    seen: dict[str, None] = {}
    for url in extract_urls(post.text) + list(post.urls):
        try:
            domain = normalize_domain(url)
        except ValueError:
            continue  # junk link, no host
        if domain not in seen:
            seen[domain] = None
    return list(seen)


def post_domains(post: Post, registry: BiasRegistry) -> list[tuple[str, Leaning | None]]:
    """Unique (domain, leaning) pairs for a post; leaning None when unknown.

    URLs come from the text and the structured ``urls`` field; repeats of
    the same domain within one post collapse to a single entry.
    """
    return [(d, registry.lookup(d)) for d in _normalized_post_domains(post)]


def word_count_without_urls(text: str) -> int:
    return len(strip_urls(text).split())


def filter_gab(posts: Iterable[Post]) -> Iterator[Post]:
    """Keep posts with more than five words (URLs removed) and at least one URL."""
    for post in posts:
        has_url = bool(extract_urls(post.text)) or bool(post.urls)
        if has_url and word_count_without_urls(post.text) > 5:
            yield post


def corpus_stats(posts: Iterable[Post]) -> CorpusStats:
    """Post count plus normalized-domain frequencies (one count per post)."""
    stats = CorpusStats()
    for post in posts:
        stats.post_count += 1
        for domain in _normalized_post_domains(post):
            stats.domain_frequency[domain] += 1
    return stats


def top_domains(stats: CorpusStats, k: int) -> list[tuple[str, int]]:
    """k most frequent domains, count-descending, ties lexicographic."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ranked = sorted(stats.domain_frequency.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:k]
