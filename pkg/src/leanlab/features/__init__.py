"""Text representations: tokenization, counts, TF-IDF, skip-gram embeddings."""

from .text import tokenize
from .vectorizers import CountVectorizer, FeatureMatrix, TfidfVectorizer, Vocabulary
from .word2vec import (
    EmbeddingConfig,
    EmbeddingModel,
    cosine_similarity,
    embed_post,
    sgns_loss_and_grad,
    train_skipgram,
)

__all__ = [
    "tokenize",
    "Vocabulary",
    "FeatureMatrix",
    "CountVectorizer",
    "TfidfVectorizer",
    "EmbeddingConfig",
    "EmbeddingModel",
    "train_skipgram",
    "embed_post",
    "cosine_similarity",
    "sgns_loss_and_grad",
]
