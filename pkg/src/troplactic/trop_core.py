"""Max-plus (tropical) scalars and square matrices.

The carrier is the integers extended by a least element ``BOTTOM`` ("-inf").
Addition is max (unit: BOTTOM), multiplication is integer sum (unit: 0,
BOTTOM absorbs).  Matrices over this semiring double as weighted digraphs:
entry (i, j) of a product records a maximal path weight.

Entries are kept within signed 64-bit range; arithmetic that would leave the
range raises OverflowError instead of wrapping.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

I64_MIN = -(2**63)
I64_MAX = 2**63 - 1


class _Bottom:
    """The least tropical scalar; additive unit, multiplicative absorber."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-inf"

    def __lt__(self, other):
        if isinstance(other, int):
            return True
        if other is self:
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, int) or other is self:
            return True
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, int) or other is self:
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, int):
            return False
        if other is self:
            return True
        return NotImplemented

    def __hash__(self) -> int:
        return hash("troplactic-bottom")


BOTTOM = _Bottom()

TropScalar = Union[int, _Bottom]


def _check_int(v: int) -> int:
    if not (I64_MIN <= v <= I64_MAX):
        raise OverflowError(f"tropical value {v} outside signed 64-bit range")
    return v


def is_scalar(v: object) -> bool:
    return v is BOTTOM or (isinstance(v, int) and not isinstance(v, bool))


def tadd(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical addition: max, with BOTTOM as the neutral element."""
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    return a if a >= b else b


def tmul(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical multiplication: integer sum, with BOTTOM absorbing."""
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    return _check_int(a + b)


def tmin(a: TropScalar, b: TropScalar) -> TropScalar:
    # min in the order where BOTTOM is least; equivalently
    # a min b = -((-a) max (-b)) with -BOTTOM read as a symbolic top.
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    return a if a <= b else b


def scalar_le(a: TropScalar, b: TropScalar) -> bool:
    if a is BOTTOM:
        return True
    if b is BOTTOM:
        return False
    return a <= b


def _format_scalar(v: TropScalar) -> str:
    return "-inf" if v is BOTTOM else str(v)


def _parse_scalar(tok: str) -> TropScalar:
    if tok == "-inf":
        return BOTTOM
    return _check_int(int(tok))


class TropMatrix:
    """Immutable square matrix over the max-plus semiring.

    ``rows`` is a tuple of n row-tuples; entries are ints or BOTTOM.
    External indices (``entry``, serialization) are 1-based.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[TropScalar]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have positive dimension")
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            for v in r:
                if v is BOTTOM:
                    continue
                if isinstance(v, bool) or not isinstance(v, int):
                    raise ValueError(f"matrix entry {v!r} is not a tropical scalar")
                _check_int(v)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("TropMatrix is immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def unit(cls, n: int) -> "TropMatrix":
        """Multiplicative unit I: 0 on the diagonal, BOTTOM elsewhere."""
        return cls(
            tuple(
                tuple(0 if i == j else BOTTOM for j in range(n)) for i in range(n)
            )
        )

    @classmethod
    def zero(cls, n: int) -> "TropMatrix":
        """Additive unit: every entry BOTTOM."""
        return cls(tuple(tuple(BOTTOM for _ in range(n)) for _ in range(n)))

    # -- basic protocol ------------------------------------------------------

    def entry(self, i: int, j: int) -> TropScalar:
        """Entry in row i, column j (1-based)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"index ({i},{j}) out of range for n={self.n}")
        return self.rows[i - 1][j - 1]

    def __getitem__(self, ij: tuple[int, int]) -> TropScalar:
        return self.entry(*ij)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TropMatrix)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash(self.rows)

    def __le__(self, other: "TropMatrix") -> bool:
        self._check_dim(other)
        return all(
            scalar_le(a, b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __ge__(self, other: "TropMatrix") -> bool:
        return other.__le__(self)

    def __lt__(self, other: "TropMatrix") -> bool:
        return self != other and self.__le__(other)

    def __gt__(self, other: "TropMatrix") -> bool:
        return other.__lt__(self)

    def _check_dim(self, other: "TropMatrix") -> None:
        if not isinstance(other, TropMatrix):
            raise TypeError(f"expected TropMatrix, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    # -- semiring operations -------------------------------------------------

    def __add__(self, other: "TropMatrix") -> "TropMatrix":
        """Entrywise max."""
        self._check_dim(other)
        return TropMatrix(
            tuple(
                tuple(tadd(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __mul__(self, other: "TropMatrix") -> "TropMatrix":
        """Max-plus product: c_{i,j} = max_t (a_{i,t} + b_{t,j})."""
        self._check_dim(other)
        n = self.n
        brows = other.rows
        out = []
        for arow in self.rows:
            row: list[TropScalar] = [BOTTOM] * n
            for t in range(n):
                a = arow[t]
                if a is BOTTOM:
                    continue
                brow = brows[t]
                for j in range(n):
                    b = brow[j]
                    if b is BOTTOM:
                        continue
                    s = a + b
                    cur = row[j]
                    if cur is BOTTOM or s > cur:
                        row[j] = s
            out.append(tuple(row))
        return TropMatrix(out)

    def __pow__(self, m: int) -> "TropMatrix":
        if not isinstance(m, int) or m < 0:
            raise ValueError("matrix power requires a nonnegative integer")
        result = TropMatrix.unit(self.n)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base if m > 1 else base
            m >>= 1
        return result

    def min_with(self, other: "TropMatrix") -> "TropMatrix":
        """Entrywise min (the dual addition)."""
        self._check_dim(other)
        return TropMatrix(
            tuple(
                tuple(tmin(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def transpose(self) -> "TropMatrix":
        return TropMatrix(tuple(zip(*self.rows)))

    def scale(self, c: int) -> "TropMatrix":
        """Tropical scalar multiple: add the integer c to every non-BOTTOM entry."""
        return TropMatrix(
            tuple(tuple(tmul(c, v) for v in row) for row in self.rows)
        )

    # -- serialization ---------------------------------------------------------

    def to_text(self) -> str:
        """n lines of space-separated entries; BOTTOM printed as '-inf'."""
        return "\n".join(" ".join(_format_scalar(v) for v in row) for row in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "TropMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        return cls(tuple(tuple(_parse_scalar(t) for t in ln.split()) for ln in lines))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "rows": [[None if v is BOTTOM else v for v in row] for row in self.rows],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "TropMatrix":
        rows = d["rows"]
        if len(rows) != d["n"]:
            raise ValueError("row count does not match declared dimension")
        return cls(
            tuple(tuple(BOTTOM if v is None else v for v in row) for row in rows)
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, s: str) -> "TropMatrix":
        return cls.from_json_dict(json.loads(s))

    def __repr__(self) -> str:
        return f"TropMatrix([{', '.join(repr(list(r)) for r in self.rows)}])"

    def __str__(self) -> str:
        return self.to_text()


def mat_mul(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    return a * b


def mat_add(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    return a + b


def mat_min(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    return a.min_with(b)


def transpose(a: TropMatrix) -> TropMatrix:
    return a.transpose()


# -- invariants ----------------------------------------------------------------

_PERMANENT_CAP = 12
_RANK_CAP = 8


def _perm_weight(rows: Sequence[Sequence[TropScalar]], sigma: Sequence[int]) -> TropScalar:
    total = 0
    for i, j in enumerate(sigma):
        v = rows[i][j]
        if v is BOTTOM:
            return BOTTOM
        total += v
    return total


def permanent(a: TropMatrix) -> TropScalar:
    """max over permutations sigma of sum_i a_{i, sigma(i)}."""
    n = a.n
    if n > _PERMANENT_CAP:
        raise ValueError(f"permanent enumeration capped at n={_PERMANENT_CAP}")
    best: TropScalar = BOTTOM
    for sigma in itertools.permutations(range(n)):
        w = _perm_weight(a.rows, sigma)
        if w is BOTTOM:
            continue
        if best is BOTTOM or w > best:
            best = w
    return best


def nonsingular_witness(a: TropMatrix) -> tuple[int, ...] | None:
    """The unique permutation attaining the permanent (1-based values), or None.

    None means singular: either the permanent is BOTTOM or at least two
    permutations attain it.
    """
    n = a.n
    if n > _PERMANENT_CAP:
        raise ValueError(f"permanent enumeration capped at n={_PERMANENT_CAP}")
    best: TropScalar = BOTTOM
    witness: tuple[int, ...] | None = None
    count = 0
    for sigma in itertools.permutations(range(n)):
        w = _perm_weight(a.rows, sigma)
        if w is BOTTOM:
            continue
        if best is BOTTOM or w > best:
            best, witness, count = w, sigma, 1
        elif w == best:
            count += 1
    if witness is None or count != 1:
        return None
    return tuple(j + 1 for j in witness)


def is_nonsingular(a: TropMatrix) -> bool:
    """True iff the permanent is finite and attained by exactly one permutation."""
    return nonsingular_witness(a) is not None


def trace(a: TropMatrix) -> TropScalar:
    """Additive trace: max over the diagonal."""
    t: TropScalar = BOTTOM
    for i in range(a.n):
        t = tadd(t, a.rows[i][i])
    return t


def mtrace(a: TropMatrix) -> TropScalar:
    """Multiplicative trace: sum over the diagonal (BOTTOM absorbing)."""
    t: TropScalar = 0
    for i in range(a.n):
        t = tmul(t, a.rows[i][i])
    return t


def structure_map(a: TropMatrix) -> tuple[tuple[int, ...], ...]:
    """Boolean shadow: 1 where the entry is finite, 0 where it is BOTTOM."""
    return tuple(tuple(0 if v is BOTTOM else 1 for v in row) for row in a.rows)


def rank(a: TropMatrix) -> int:
    """Largest k such that some k-by-k submatrix is nonsingular (brute force)."""
    n = a.n
    if n > _RANK_CAP:
        raise ValueError(f"rank enumeration capped at n={_RANK_CAP}")
    rows = a.rows
    for k in range(n, 0, -1):
        for ris in itertools.combinations(range(n), k):
            for cjs in itertools.combinations(range(n), k):
                sub = TropMatrix(tuple(tuple(rows[i][j] for j in cjs) for i in ris))
                if is_nonsingular(sub):
                    return k
    return 0


def is_synoptic(a: TropMatrix) -> bool:
    """a_{i,j} >= max(a_{i+1,j}, a_{i,j-1}) for i = 1..n-1 and j = 2..n."""
    rows = a.rows
    n = a.n
    for i in range(n - 1):
        for j in range(1, n):
            if not scalar_le(tadd(rows[i + 1][j], rows[i][j - 1]), rows[i][j]):
                return False
    return True


# -- generator matrices ----------------------------------------------------------


def _check_index(n: int, ell: int, name: str = "index") -> None:
    if not (1 <= ell <= n):
        raise ValueError(f"{name} {ell} out of range 1..{n}")


def _check_kappa(kappa: int) -> None:
    if isinstance(kappa, bool) or not isinstance(kappa, int) or kappa < 1:
        raise ValueError(f"kappa must be an integer >= 1, got {kappa!r}")


def flat_corner(n: int, p: int, q: int, kappa: int = 1) -> TropMatrix:
    """kappa on rows 1..p times columns q..n, BOTTOM elsewhere."""
    _check_index(n, p, "p")
    _check_index(n, q, "q")
    _check_kappa(kappa)
    return TropMatrix(
        tuple(
            tuple(kappa if i < p and j >= q - 1 else BOTTOM for j in range(n))
            for i in range(n)
        )
    )


def gen_F(n: int, ell: int, kappa: int = 1) -> TropMatrix:
    """The flat corner with p = q = ell."""
    return flat_corner(n, ell, ell, kappa)


def layout_E(n: int) -> TropMatrix:
    """0 on and above the diagonal, BOTTOM below; idempotent for both operations."""
    if n < 1:
        raise ValueError("dimension must be positive")
    return TropMatrix(
        tuple(tuple(0 if j >= i else BOTTOM for j in range(n)) for i in range(n))
    )


def gen_A(n: int, ell: int, kappa: int = 1) -> TropMatrix:
    """Generator of the triangular matrix algebra: layout_E plus the ell-corner."""
    return layout_E(n) + gen_F(n, ell, kappa)


def co_gen_A(n: int, ell: int, kappa: int = 1) -> TropMatrix:
    """Co-generator: upper triangle all 0 except -kappa at (l', l'), l' = n-ell+1."""
    _check_index(n, ell, "ell")
    _check_kappa(kappa)
    lp = n - ell + 1
    return TropMatrix(
        tuple(
            tuple(
                (-kappa if (i + 1 == lp and j + 1 == lp) else 0) if j >= i else BOTTOM
                for j in range(n)
            )
            for i in range(n)
        )
    )


def co_mirror_M(n: int, ell: int, kappa: int = 1) -> TropMatrix:
    """Product of gen_A(n, t, kappa) for t = n down to 1, skipping t = n-ell+1."""
    _check_index(n, ell, "ell")
    if n < 2:
        raise ValueError("co-mirror generators need n >= 2")
    _check_kappa(kappa)
    skip = n - ell + 1
    out = TropMatrix.unit(n)
    for t in range(n, 0, -1):
        if t == skip:
            continue
        out = out * gen_A(n, t, kappa)
    return out


@dataclass(frozen=True)
class GeneratorSet:
    """The n generators, co-generators, and layout matrix at a fixed kappa."""

    n: int
    kappa: int = 1
    A: tuple[TropMatrix, ...] = field(init=False, repr=False, compare=False)
    Acheck: tuple[TropMatrix, ...] = field(init=False, repr=False, compare=False)
    E: TropMatrix = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("alphabet size must be positive")
        _check_kappa(self.kappa)
        object.__setattr__(
            self, "A", tuple(gen_A(self.n, l, self.kappa) for l in range(1, self.n + 1))
        )
        object.__setattr__(
            self,
            "Acheck",
            tuple(co_gen_A(self.n, l, self.kappa) for l in range(1, self.n + 1)),
        )
        object.__setattr__(self, "E", layout_E(self.n))

    def a(self, ell: int) -> TropMatrix:
        _check_index(self.n, ell, "ell")
        return self.A[ell - 1]

    def acheck(self, ell: int) -> TropMatrix:
        _check_index(self.n, ell, "ell")
        return self.Acheck[ell - 1]


# -- internal fast path ------------------------------------------------------------
#
# Products of the generator (and co-generator) matrices are upper triangular with
# finite entries on and above the diagonal, so folds over them can skip BOTTOM
# checks.  Agreement with the generic product is covered by the test suite.


def _upper_rows(m: TropMatrix) -> tuple[tuple[TropScalar, ...], ...]:
    return m.rows


def _mul_upper(
    a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], n: int
) -> tuple[tuple[TropScalar, ...], ...]:
    """Product of two upper-triangular matrices with finite upper entries."""
    out = []
    for i in range(n):
        arow = a[i]
        row: list[TropScalar] = [BOTTOM] * n
        for j in range(i, n):
            best = arow[i] + b[i][j]
            for t in range(i + 1, j + 1):
                s = arow[t] + b[t][j]
                if s > best:
                    best = s
            row[j] = best
        out.append(tuple(row))
    return tuple(out)
