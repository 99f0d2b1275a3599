"""Linear codes over F_q: construction, enumeration, duals and cosets."""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from math import prod
from typing import Any

import galois
import numpy as np

from algebra.field import FieldSpec, field_make, labels
from config.parser import DEFAULT_ENUMERATION_BUDGET
from utils.helpers import CodeError, FieldError, check_budget, get_logger

logger = get_logger(__name__)

CodeWord = galois.FieldArray
CodeMatrix = galois.FieldArray

BLOCK_SIZE = 1 << 14


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A k-dimensional subspace of F_q^n.

    ``generator`` is the k x n reduced row-echelon basis and ``pivots`` the
    sorted pivot column of each row.
    """

    field: FieldSpec
    n: int
    generator: galois.FieldArray
    pivots: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.pivots)

    @property
    def size(self) -> int:
        return self.field.q**self.k

    def generator_labels(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in row) for row in labels(self.generator))

    def contains(self, word) -> bool:
        """Membership by reduction against the echelon basis."""
        word = self.field.array(word) if not isinstance(word, galois.FieldArray) else word
        residue = word.copy()
        for row, col in zip(self.generator, self.pivots):
            residue = residue - residue[col] * row
        return not np.any(labels(residue))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.field == other.field
            and self.n == other.n
            and self.generator_labels() == other.generator_labels()
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.generator_labels()))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.field})"


@dataclass(frozen=True, eq=False)
class WordList:
    """An arbitrary, possibly nonlinear, set of words kept as an explicit list.

    Only enumerator-style operations accept word lists; anything that needs a
    dual code requires a LinearCode.
    """

    field: FieldSpec
    n: int
    words: galois.FieldArray

    @property
    def size(self) -> int:
        return int(self.words.shape[0])


@dataclass(frozen=True)
class CodeTuple:
    """The product C_1 x ... x C_m, read as a set of m x n matrices."""

    codes: tuple[LinearCode, ...]

    def __post_init__(self):
        if not self.codes:
            raise CodeError("a code tuple needs at least one code")
        first = self.codes[0]
        for code in self.codes[1:]:
            if code.field != first.field or code.n != first.n:
                raise CodeError("all codes in a tuple must share field and length")

    @property
    def m(self) -> int:
        return len(self.codes)

    @property
    def n(self) -> int:
        return self.codes[0].n

    @property
    def field(self) -> FieldSpec:
        return self.codes[0].field

    @property
    def size(self) -> int:
        return prod(code.size for code in self.codes)

    def dual(self) -> "CodeTuple":
        return CodeTuple(tuple(dual_code(code) for code in self.codes))


def _zero_code(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(field, n, field.gf(np.zeros((0, n), dtype=np.int64)), ())


def is_integer(value: Any) -> bool:
    """True for ints and numpy integers, false for bools, floats and strings."""
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool)


def label_matrix(rows: Any, what: str) -> np.ndarray:
    """Rows of integer labels as a 2-D int64 array.

    Raises:
        CodeError: Unless ``rows`` is a list of equal-length flat lists of integers.
    """
    if not isinstance(rows, (list, tuple)) or any(not isinstance(row, (list, tuple)) for row in rows):
        raise CodeError(f"{what} must be a list of rows")
    for row in rows:
        for entry in row:
            if not is_integer(entry):
                raise CodeError(f"{what} entries must be integer labels, got {entry!r}")
    lengths = {len(row) for row in rows}
    if len(lengths) > 1:
        raise CodeError(f"ragged {what} rows of lengths {sorted(lengths)}")
    width = lengths.pop() if lengths else 0
    try:
        return np.asarray([list(row) for row in rows], dtype=np.int64).reshape(len(rows), width)
    except OverflowError:
        raise CodeError(f"{what} entries must be labels in the field")


def code_from_generator(field: FieldSpec, rows: Sequence[Sequence[int]] | galois.FieldArray, n: int | None = None) -> LinearCode:
    """Build a code from spanning rows.

    Rows are row-reduced; dependent rows are dropped.

    Args:
        field: The alphabet.
        rows: Spanning vectors as integer labels or a field array.
        n: Code length; required when ``rows`` is empty.

    Returns:
        The code with reduced generator and pivots.

    Raises:
        CodeError: On ragged rows, entries outside the field, or unknown length.
    """
    if isinstance(rows, galois.FieldArray):
        matrix = labels(rows)
    else:
        matrix = label_matrix(rows, "generator")

    if matrix.size == 0:
        length = n if n is not None else (matrix.shape[1] or None)
        if length is None:
            raise CodeError("length n is required for an empty generator")
        return _zero_code(field, length)

    if n is not None and matrix.shape[1] != n:
        raise CodeError(f"rows have length {matrix.shape[1]}, expected {n}")
    try:
        generator = field.array(matrix)
    except FieldError as e:
        raise CodeError(e.message)

    reduced = generator.row_reduce()
    nonzero = labels(reduced).any(axis=1)
    reduced = reduced[nonzero]
    pivots = tuple(int(np.flatnonzero(labels(row))[0]) for row in reduced)
    return LinearCode(field, int(matrix.shape[1]), reduced, pivots)


def code_from_words(field: FieldSpec, words: Sequence[Sequence[int]]) -> WordList:
    """Keep an explicit list of distinct words."""
    matrix = label_matrix(words, "word")
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        raise CodeError("a word list needs at least one word of uniform length")
    if len({tuple(row) for row in matrix.tolist()}) != matrix.shape[0]:
        raise CodeError("word list contains repeated words")
    try:
        return WordList(field, int(matrix.shape[1]), field.array(matrix))
    except FieldError as e:
        raise CodeError(e.message)


def code_from_json(data: Any) -> LinearCode | WordList:
    """Build a code from the code-file JSON object.

    The object carries ``q``, optional ``modulus`` (ascending coefficients),
    ``n`` and either ``generators`` or ``words`` as integer labels.

    Raises:
        CodeError: On missing or malformed keys.
        FieldError: If q is not a prime power or the modulus is reducible.
    """
    if not isinstance(data, dict):
        raise CodeError("code file must hold a JSON object")
    q, n = data.get("q"), data.get("n")
    if not is_integer(q) or not is_integer(n) or n < 1:
        raise CodeError('code file needs integer "q" and a positive integer "n"')
    modulus = data.get("modulus")
    if modulus is not None and (
        not isinstance(modulus, list) or not all(is_integer(c) for c in modulus)
    ):
        raise CodeError('"modulus" must be a list of integer coefficients')
    field = field_make(int(q), modulus)

    if "words" in data:
        words = code_from_words(field, data["words"])
        if words.n != n:
            raise CodeError(f"words have length {words.n}, expected {n}")
        return words

    return code_from_generator(field, data.get("generators", []), int(n))


def require_linear(code: LinearCode | WordList) -> LinearCode:
    """Reject word lists where a dual code is needed."""
    if not isinstance(code, LinearCode):
        raise CodeError("this operation requires a linear code given by generators")
    return code


def message_block(field: FieldSpec, k: int, start: int, stop: int) -> galois.FieldArray:
    """Messages start..stop-1 as base-q digit rows, most significant first."""
    index = np.arange(start, stop, dtype=np.int64)
    powers = field.q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return field.gf((index[:, np.newaxis] // powers[np.newaxis, :]) % field.q)


def iter_codeword_blocks(
    code: LinearCode | WordList,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    block: int = BLOCK_SIZE,
) -> Iterator[galois.FieldArray]:
    """Yield codewords in blocks, lexicographic in the message vector.

    Raises:
        BudgetExceededError: If |C| exceeds the budget.
    """
    check_budget("codewords", code.size, budget)
    if isinstance(code, WordList):
        yield code.words
        return
    if code.k == 0:
        yield code.field.gf(np.zeros((1, code.n), dtype=np.int64))
        return
    logger.debug("Enumerating %d codewords of %r", code.size, code)
    for start in range(0, code.size, block):
        stop = min(start + block, code.size)
        yield message_block(code.field, code.k, start, stop) @ code.generator


def codeword_array(code: LinearCode | WordList, budget: int = DEFAULT_ENUMERATION_BUDGET) -> galois.FieldArray:
    """All codewords as one |C| x n array."""
    blocks = list(iter_codeword_blocks(code, budget))
    if len(blocks) == 1:
        return blocks[0]
    return code.field.gf(np.concatenate([labels(b) for b in blocks]))


def enumerate_codewords(code: LinearCode | WordList, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Iterator[CodeWord]:
    """Stream codewords one at a time."""
    for block in iter_codeword_blocks(code, budget):
        yield from block


def dual_code(code: LinearCode) -> LinearCode:
    """The dual under the pairing <a,b> = sum(a_i * b_i)."""
    code = require_linear(code)
    field, n = code.field, code.n
    if code.k == 0:
        return code_from_generator(field, field.gf(np.eye(n, dtype=np.int64)))
    if code.k == n:
        return _zero_code(field, n)
    return code_from_generator(field, code.generator.null_space())


def coset_representatives(code: LinearCode, budget: int = DEFAULT_ENUMERATION_BUDGET) -> galois.FieldArray:
    """One canonical representative per coset of C in F_q^n.

    Representatives vanish on every pivot column; the free columns run through
    F_q^(n-k) lexicographically.

    Raises:
        BudgetExceededError: If q**(n-k) exceeds the budget.
    """
    code = require_linear(code)
    field, n = code.field, code.n
    free = [col for col in range(n) if col not in code.pivots]
    check_budget("coset representatives", field.q ** len(free), budget)
    reps = np.zeros((field.q ** len(free), n), dtype=np.int64)
    if free:
        reps[:, free] = labels(message_block(field, len(free), 0, field.q ** len(free)))
    return field.gf(reps)


def hamming_weight(x: CodeWord) -> int:
    """Number of nonzero coordinates."""
    return int(np.count_nonzero(labels(x)))


def hamming_weights(block: galois.FieldArray) -> np.ndarray:
    """Row-wise Hamming weights of a block of words."""
    return np.count_nonzero(labels(block), axis=-1)


def effective_length_weight(x: CodeMatrix) -> int:
    """Number of nonzero columns of an m x n matrix."""
    return int(np.count_nonzero(labels(x).any(axis=0)))


def random_code(field: FieldSpec, n: int, rng: np.random.Generator) -> LinearCode:
    """Uniform k in [0, n], then a uniform k x n matrix, row-reduced."""
    k = int(rng.integers(0, n + 1))
    rows = rng.integers(0, field.q, size=(k, n))
    return code_from_generator(field, rows.tolist(), n)
