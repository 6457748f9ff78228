"""Shared tokenizer for all text representations."""

from __future__ import annotations

import re

from ..ingest import strip_urls

_MENTION_RE = re.compile(r"@[a-z0-9_]+")
_SPLIT_RE = re.compile(r"[^a-z0-9]+")
MIN_TOKEN_LEN = 2


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens: URLs and @mentions removed, '#' stripped,
    split on non-alphanumerics, tokens shorter than 2 characters dropped."""
    cleaned = _MENTION_RE.sub(" ", strip_urls(text.lower()))
    return [t for t in _SPLIT_RE.split(cleaned) if len(t) >= MIN_TOKEN_LEN]


def as_tokens(doc: str | list[str]) -> list[str]:
    """Accept raw text or a pre-tokenized list."""
    return tokenize(doc) if isinstance(doc, str) else list(doc)
