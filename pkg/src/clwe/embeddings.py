"""Plain-text word embedding I/O: parsing, validation, truncation, serialization.

File format: a header line ``<count> <dim>`` followed by one line per word,
``<token> <v1> ... <vd>``, single-space separated, UTF-8, ``.`` decimal point.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import ParseError


@dataclass
class Vocabulary:
    """Ordered, duplicate-free token list with a token -> position index.

    Order is descending corpus frequency when the vocabulary comes out of the
    trainer; file-backed vocabularies keep file order.
    """

    words: list[str]
    index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {w: i for i, w in enumerate(self.words)}
        if len(self.index) != len(self.words):
            raise ValueError("vocabulary contains duplicate tokens")

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, token: str) -> bool:
        return token in self.index

    def __getitem__(self, position: int) -> str:
        return self.words[position]


@dataclass
class EmbeddingSpace:
    """A vocabulary plus its dense row-major matrix of word vectors."""

    vocab: Vocabulary
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.ndim != 2:
            raise ValueError(f"embedding matrix must be 2-dimensional, got shape {m.shape}")
        if m.shape[0] != len(self.vocab):
            raise ValueError(
                f"matrix has {m.shape[0]} rows but vocabulary has {len(self.vocab)} tokens"
            )
        if m.shape[1] < 1:
            raise ValueError("embedding dimension must be positive")
        if not np.isfinite(m).all():
            raise ValueError("embedding matrix contains non-finite entries")
        self.matrix = m

    @property
    def dim(self) -> int:
        return self.matrix.shape[1]

    def __len__(self) -> int:
        return len(self.vocab)


def load_text_embeddings(path, max_vocab: int | None = None) -> EmbeddingSpace:
    """Parse a text embedding file, keeping at most ``max_vocab`` rows.

    Rows are kept in file order. Duplicate tokens after the first occurrence
    are skipped with a warning and the row count is adjusted accordingly.
    Malformed headers, arity mismatches and non-finite values raise
    :class:`ParseError` naming the offending line.
    """
    if max_vocab is not None and max_vocab < 1:
        raise ValueError("max_vocab must be at least 1")
    words: list[str] = []
    seen: dict[str, int] = {}
    with open(path, encoding="utf-8", errors="surrogateescape") as fh:
        header = fh.readline()
        if not header:
            raise ParseError(path, 1, "empty file, expected '<count> <dim>' header")
        fields = header.rstrip("\n").split(" ")
        if len(fields) != 2:
            raise ParseError(path, 1, f"malformed header {header.rstrip()!r}, expected '<count> <dim>'")
        try:
            count, dim = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(path, 1, f"malformed header {header.rstrip()!r}, expected two integers") from None
        if count < 0 or dim < 1:
            raise ParseError(path, 1, f"invalid header values count={count} dim={dim}")

        target = count if max_vocab is None else min(count, max_vocab)
        matrix = np.empty((target, dim), dtype=np.float64)
        duplicates = 0
        for lineno in range(2, count + 2):
            if len(words) >= target:
                break
            line = fh.readline()
            if not line:
                raise ParseError(path, lineno, f"unexpected end of file, header declared {count} rows")
            parts = line.rstrip("\n").rstrip(" ").split(" ")
            if len(parts) != dim + 1:
                raise ParseError(
                    path, lineno, f"expected 1 token + {dim} values, found {len(parts)} fields"
                )
            token = parts[0]
            if token in seen:
                duplicates += 1
                continue
            try:
                row = np.array(parts[1:], dtype=np.float64)
            except ValueError:
                raise ParseError(path, lineno, "could not parse vector values as floats") from None
            if not np.isfinite(row).all():
                raise ParseError(path, lineno, f"non-finite value in vector for token {token!r}")
            seen[token] = len(words)
            matrix[len(words)] = row
            words.append(token)

    if duplicates:
        warnings.warn(
            f"{path}: skipped {duplicates} duplicate token(s), keeping first occurrences",
            stacklevel=2,
        )
    return EmbeddingSpace(Vocabulary(words), matrix[: len(words)])


def save_text_embeddings(space: EmbeddingSpace, path) -> None:
    """Write a space in the text format; round-trips within 1e-7 per entry."""
    if len(space) == 0:
        raise ValueError("refusing to write an empty embedding space")
    with open(path, "w", encoding="utf-8", errors="surrogateescape") as fh:
        fh.write(f"{len(space)} {space.dim}\n")
        for word, row in zip(space.vocab.words, space.matrix):
            fh.write(word)
            fh.write(" ")
            fh.write(" ".join(f"{v:.9g}" for v in row))
            fh.write("\n")


def truncate_vocabulary(space: EmbeddingSpace, n: int) -> EmbeddingSpace:
    """Keep the first min(n, |vocab|) rows; order preserved."""
    if n < 1:
        raise ValueError("truncation size must be at least 1")
    if n >= len(space):
        return EmbeddingSpace(Vocabulary(list(space.vocab.words)), space.matrix.copy())
    return EmbeddingSpace(Vocabulary(space.vocab.words[:n]), space.matrix[:n].copy())
