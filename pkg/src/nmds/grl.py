"""Reed-Solomon, Roth-Lempel and generalized Roth-Lempel generator matrices.

A GRL code evaluates a message polynomial ``f(x) = f_0 + ... + f_{k-1} x^{k-1}``
at distinct points ``alpha_i`` with multipliers ``v_i`` and appends the tail
``(f_{k-l}, ..., f_{k-1}) . M`` for an invertible ``l x l`` block ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import LinearCode
from .errors import BadDimension, DimensionOutOfRange, DuplicatePoints, SingularTailBlock
from .gf import Field
from .matrix import Matrix, det

ALPHABETS = ("units", "full")


def alphabet_points(field: Field, alphabet) -> tuple[int, ...]:
    """Resolve ``"units"``, ``"full"`` or an explicit point list to encodings."""
    if isinstance(alphabet, str):
        if alphabet == "units":
            return field.units()
        if alphabet == "full":
            return field.full()
        raise ValueError(f"unknown alphabet {alphabet!r}; expected one of {ALPHABETS}")
    return tuple(field.check(int(a)) for a in alphabet)


def swap_tail() -> list[list[int]]:
    """The 2x2 block ``[[0, 1], [1, 0]]``."""
    return [[0, 1], [1, 0]]


def rs_generator(field: Field, alpha, k: int) -> Matrix:
    alpha = alphabet_points(field, alpha)
    if len(set(alpha)) != len(alpha):
        raise DuplicatePoints(f"evaluation points repeat: {list(alpha)}")
    if not 1 <= k <= len(alpha):
        raise BadDimension(f"need 1 <= k <= n = {len(alpha)}, got k = {k}")
    return Matrix(field, [[field.pow(a, i) for a in alpha] for i in range(k)], len(alpha))


@dataclass(frozen=True)
class GrlSpec:
    """Construction recipe for ``GRL_k(alpha, v, M)``."""

    field: Field
    alpha: tuple[int, ...]
    k: int
    tail: Matrix
    v: tuple[int, ...] | None = None

    def __post_init__(self):
        F = self.field
        object.__setattr__(self, "alpha", alphabet_points(F, self.alpha))
        if self.v is None:
            object.__setattr__(self, "v", (1,) * len(self.alpha))
        else:
            object.__setattr__(self, "v", tuple(F.check(int(x)) for x in self.v))
        if not isinstance(self.tail, Matrix):
            object.__setattr__(self, "tail", Matrix(F, self.tail))
        self.validate()

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def l(self) -> int:  # noqa: E743
        return self.tail.nrows

    def validate(self) -> None:
        F, M = self.field, self.tail
        if M.field != F:
            raise ValueError("tail block lives in a different field")
        if len(set(self.alpha)) != len(self.alpha):
            raise DuplicatePoints(f"evaluation points repeat: {list(self.alpha)}")
        if len(self.v) != self.n:
            raise BadDimension(f"{len(self.v)} multipliers for {self.n} points")
        if any(x == 0 for x in self.v):
            raise ValueError("multipliers must be nonzero")
        if M.nrows != M.ncols or M.nrows < 1:
            raise BadDimension(f"tail block must be square, got {M.shape}")
        if not (self.l < self.k <= self.n <= F.q):
            raise BadDimension(
                f"need l < k <= n <= q, got l={self.l}, k={self.k}, n={self.n}, q={F.q}"
            )
        if det(M) == 0:
            raise SingularTailBlock(f"tail block {M.to_text()} is singular")


def grl_generator(spec: GrlSpec) -> Matrix:
    """``k x (n + l)`` generator; row j holds the coefficients produced by ``x^j``."""
    F, k, l = spec.field, spec.k, spec.l
    rows = []
    for j in range(k):
        head = [F.mul(v, F.pow(a, j)) for a, v in zip(spec.alpha, spec.v)]
        s = j - (k - l)
        tail = list(spec.tail.rows[s]) if s >= 0 else [0] * l
        rows.append(head + tail)
    return Matrix(F, rows, spec.n + l)


def grl_encode(spec: GrlSpec, message) -> tuple[int, ...]:
    """Evaluation form of the codeword for coefficients ``f_0 .. f_{k-1}``."""
    F, k, l = spec.field, spec.k, spec.l
    f = [F.check(int(c)) for c in message]
    if len(f) != k:
        raise BadDimension(f"message has {len(f)} coefficients, expected {k}")
    out = []
    for a, v in zip(spec.alpha, spec.v):
        acc = 0
        for c in reversed(f):
            acc = F.add(F.mul(acc, a), c)
        out.append(F.mul(v, acc))
    top = f[k - l:]
    for s in range(l):
        acc = 0
        for r in range(l):
            acc = F.add(acc, F.mul(top[r], spec.tail.rows[r][s]))
        out.append(acc)
    return tuple(out)


def rl_dimension_range(field: Field, alphabet: str) -> tuple[int, int]:
    return (3, field.q - 1) if alphabet == "units" else (3, field.q)


def rl_spec(field: Field, alphabet: str, k: int, tail) -> GrlSpec:
    if alphabet not in ALPHABETS:
        raise ValueError(f"unknown alphabet {alphabet!r}; expected one of {ALPHABETS}")
    lo, hi = rl_dimension_range(field, alphabet)
    if not lo <= k <= hi:
        raise DimensionOutOfRange(f"k = {k} outside [{lo}, {hi}] for the {alphabet} alphabet")
    M = tail if isinstance(tail, Matrix) else Matrix(field, tail)
    if M.shape != (2, 2):
        raise BadDimension(f"tail block must be 2x2, got {M.shape}")
    return GrlSpec(field, alphabet_points(field, alphabet), k, M)


def rl_code(field: Field, alphabet: str, k: int, tail) -> LinearCode:
    """``RL_k(D, M)`` over the canonical ordering of ``D`` (units or full field)."""
    return LinearCode(grl_generator(rl_spec(field, alphabet, k, tail)))
