"""Bag-of-words and TF-IDF vectorizers built on a shared vocabulary."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from .text import as_tokens

Document = "str | list[str]"


@dataclass
class Vocabulary:
    """Dense token index plus document frequencies over the fit corpus."""

    token_to_index: dict[str, int]
    doc_freq: dict[str, int]
    n_docs: int

    def __len__(self) -> int:
        return len(self.token_to_index)

    @classmethod
    def build(cls, docs_tokens: Sequence[list[str]]) -> "Vocabulary":
        df: Counter = Counter()
        for tokens in docs_tokens:
            df.update(set(tokens))
        token_to_index = {tok: i for i, tok in enumerate(sorted(df))}
        return cls(token_to_index, dict(df), len(docs_tokens))


@dataclass
class FeatureMatrix:
    """Post feature rows with their post-id alignment."""

    matrix: "sp.spmatrix | np.ndarray"
    ids: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        data = self.matrix.data if sp.issparse(self.matrix) else self.matrix
        if np.asarray(data).size and not np.all(np.isfinite(np.asarray(data))):
            raise ValueError("feature matrix contains non-finite entries")
        if self.ids and len(self.ids) != self.matrix.shape[0]:
            raise ValueError("row count does not match id count")

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def dense(self) -> np.ndarray:
        return self.matrix.toarray() if sp.issparse(self.matrix) else np.asarray(self.matrix)


class NotFittedError(RuntimeError):
    pass


class CountVectorizer:
    """Token-count vectors over a corpus-fitted vocabulary.

    Out-of-vocabulary tokens are ignored at transform time.  Documents
    may be raw strings (tokenized internally) or pre-tokenized lists.
    """

    def __init__(self) -> None:
        self.vocabulary: Vocabulary | None = None

    def fit(self, corpus: Iterable["str | list[str]"]) -> "CountVectorizer":
        docs = [as_tokens(doc) for doc in corpus]
        if not docs:
            raise ValueError("cannot fit on an empty corpus")
        self.vocabulary = Vocabulary.build(docs)
        return self

    def _require_fit(self) -> Vocabulary:
        if self.vocabulary is None:
            raise NotFittedError("vectorizer used before fit()")
        return self.vocabulary

    def transform_one(self, doc: "str | list[str]") -> sp.csr_matrix:
        return self.transform([doc])

    def transform(self, corpus: Iterable["str | list[str]"]) -> sp.csr_matrix:
        vocab = self._require_fit()
        indptr = [0]
        indices: list[int] = []
        data: list[float] = []
        n_rows = 0
        for doc in corpus:
            counts = Counter(as_tokens(doc))
            row = sorted(
                (vocab.token_to_index[tok], cnt)
                for tok, cnt in counts.items()
                if tok in vocab.token_to_index
            )
            indices.extend(idx for idx, _ in row)
            data.extend(cnt for _, cnt in row)
            indptr.append(len(indices))
            n_rows += 1
        return sp.csr_matrix(
            (np.array(data, dtype=np.float64), np.array(indices, dtype=np.int32), indptr),
            shape=(n_rows, len(vocab)),
        )

    def fit_transform(self, corpus: Sequence["str | list[str]"]) -> sp.csr_matrix:
        return self.fit(corpus).transform(corpus)


def smoothed_idf(n_docs: int, doc_freq: int) -> float:
    """idf = ln((1 + N) / (1 + df)) + 1; smooth so unseen tokens stay finite."""
    return math.log((1.0 + n_docs) / (1.0 + doc_freq)) + 1.0


class TfidfVectorizer:
    """TF-IDF vectors: raw counts times smoothed idf, rows L2-normalized."""

    def __init__(self) -> None:
        self._counts = CountVectorizer()
        self.idf: np.ndarray | None = None

    @property
    def vocabulary(self) -> Vocabulary | None:
        return self._counts.vocabulary

    def fit(self, corpus: Sequence["str | list[str]"]) -> "TfidfVectorizer":
        self._counts.fit(corpus)
        vocab = self._counts.vocabulary
        assert vocab is not None
        idf = np.empty(len(vocab))
        for token, idx in vocab.token_to_index.items():
            idf[idx] = smoothed_idf(vocab.n_docs, vocab.doc_freq[token])
        self.idf = idf
        return self

    def transform(self, corpus: Iterable["str | list[str]"]) -> sp.csr_matrix:
        if self.idf is None:
            raise NotFittedError("vectorizer used before fit()")
        tf = self._counts.transform(corpus)
        weighted = tf.multiply(self.idf).tocsr()
        # L2-normalize rows in place; zero rows stay zero
        norms = np.sqrt(weighted.multiply(weighted).sum(axis=1)).A.ravel()
        scale = np.divide(1.0, norms, out=np.zeros_like(norms), where=norms > 0)
        return sp.diags(scale) @ weighted

    def fit_transform(self, corpus: Sequence["str | list[str]"]) -> sp.csr_matrix:
        return self.fit(corpus).transform(corpus)
