"""Words over ordered finite alphabets.

Letters are integer indices 1..n.  Provides reversal, co-mirroring,
brute-force longest-nondecreasing-subword oracles (and the equivalence they
induce), n-power words, and two-variable identity construction/verification.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, TypeVar

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class Word:
    """Immutable word over the alphabet {1, ..., n}; may be empty."""

    __slots__ = ("n", "letters")

    def __init__(self, n: int, letters: Iterable[int] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"alphabet size must be a positive integer, got {n!r}")
        letters = tuple(letters)
        for l in letters:
            if isinstance(l, bool) or not isinstance(l, int) or not (1 <= l <= n):
                raise ValueError(f"letter {l!r} out of range 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text: str, n: int) -> "Word":
        """Parse 'acb' (a=1, n <= 26) or dotted '3.1.2'; '' is the empty word."""
        text = text.strip()
        if not text:
            return cls(n, ())
        if all(c in _LETTERS for c in text):
            return cls(n, tuple(_LETTERS.index(c) + 1 for c in text))
        try:
            letters = tuple(int(tok) for tok in text.split("."))
        except ValueError:
            raise ValueError(f"cannot parse word {text!r}") from None
        return cls(n, letters)

    def format(self) -> str:
        """Inverse of parse: letters for n <= 26, dotted integers otherwise."""
        if self.n <= 26:
            return "".join(_LETTERS[l - 1] for l in self.letters)
        return ".".join(str(l) for l in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.n == other.n
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.n, self.letters))

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"alphabet mismatch: {self.n} vs {other.n}")
        return Word(self.n, self.letters + other.letters)

    def __repr__(self) -> str:
        return f"Word({self.n}, {self.format()!r})"


@dataclass(frozen=True)
class ConvexRange:
    """The convex sub-alphabet {lo, lo+1, ..., hi}."""

    lo: int
    hi: int

    def __post_init__(self):
        if not (1 <= self.lo <= self.hi):
            raise ValueError(f"need 1 <= lo <= hi, got ({self.lo}, {self.hi})")


def reverse(w: Word) -> Word:
    return Word(w.n, w.letters[::-1])


def co_mirror_letter(n: int, ell: int) -> tuple[int, ...]:
    """n, n-1, ..., 1 with n-ell+1 removed (length n-1)."""
    if n < 2:
        raise ValueError("co-mirror needs alphabet size >= 2")
    if not (1 <= ell <= n):
        raise ValueError(f"letter {ell} out of range 1..{n}")
    skip = n - ell + 1
    return tuple(t for t in range(n, 0, -1) if t != skip)


def co_mirror(w: Word) -> Word:
    """Replace each letter by its co-mirror word; a monoid endomorphism."""
    if w.n < 2:
        raise ValueError("co-mirror needs alphabet size >= 2")
    out: list[int] = []
    for l in w.letters:
        out.extend(co_mirror_letter(w.n, l))
    return Word(w.n, out)


def iterate_co_mirror(w: Word, k: int) -> Word:
    if not isinstance(k, int) or k < 0:
        raise ValueError("iteration count must be a nonnegative integer")
    for _ in range(k):
        w = co_mirror(w)
    return w


def _range_pair(w: Word, r) -> tuple[int, int]:
    if isinstance(r, ConvexRange):
        lo, hi = r.lo, r.hi
    else:
        lo, hi = r
    if not (1 <= lo <= hi <= w.n):
        raise ValueError(f"range ({lo}, {hi}) invalid for alphabet size {w.n}")
    return lo, hi


def lnds_oracle(w: Word, r) -> int:
    """Longest nondecreasing subword of w using only letters in [lo..hi].

    Dynamic program: best[l] = longest such subword ending with letter l.
    Accepts a ConvexRange or a (lo, hi) pair.
    """
    lo, hi = _range_pair(w, r)
    width = hi - lo + 1
    best = [0] * width
    for c in w.letters:
        if lo <= c <= hi:
            k = c - lo
            best[k] = max(best[: k + 1]) + 1
    return max(best)


_ENUM_CAP = 20


def lnds_enumerate(w: Word, r) -> int:
    """Independent cross-check of lnds_oracle by explicit subsequence search."""
    lo, hi = _range_pair(w, r)
    m = len(w)
    if m > _ENUM_CAP:
        raise ValueError(f"enumeration oracle capped at length {_ENUM_CAP}")
    letters = w.letters
    best = 0
    for mask in range(1 << m):
        prev = 0
        length = 0
        ok = True
        for k in range(m):
            if mask >> k & 1:
                c = letters[k]
                if c < lo or c > hi or c < prev:
                    ok = False
                    break
                prev = c
                length += 1
        if ok and length > best:
            best = length
    return best


def convex_ranges(n: int) -> Iterator[ConvexRange]:
    for lo in range(1, n + 1):
        for hi in range(lo, n + 1):
            yield ConvexRange(lo, hi)


def clk_equiv_oracle(u: Word, v: Word) -> bool:
    """True iff u and v agree on every convex-range subword-length statistic."""
    if u.n != v.n:
        raise ValueError(f"alphabet mismatch: {u.n} vs {v.n}")
    return all(lnds_oracle(u, r) == lnds_oracle(v, r) for r in convex_ranges(u.n))


# -- n-power words and identities -------------------------------------------------

_NPOWER_ENUM_CAP = 10**6


def max_run(w: Word) -> int:
    """Length of the longest constant factor (0 for the empty word)."""
    best = 0
    run = 0
    prev = None
    for c in w.letters:
        run = run + 1 if c == prev else 1
        prev = c
        if run > best:
            best = run
    return best


def is_uniform(w: Word) -> bool:
    """True iff every letter that appears in w appears the same number of times."""
    counts = {}
    for c in w.letters:
        counts[c] = counts.get(c, 0) + 1
    return len(set(counts.values())) <= 1


def is_npower_word(w: Word, p: int, n: int) -> bool:
    """True iff no letter repeats more than p times consecutively and every
    length-n word over the declared alphabet with that property is a factor.
    """
    if not isinstance(p, int) or p < 1 or not isinstance(n, int) or n < 1:
        raise ValueError("p and n must be positive integers")
    if len(w) == 0:
        return False
    if max_run(w) > p:
        return False
    if w.n**n > _NPOWER_ENUM_CAP:
        raise ValueError(
            f"factor enumeration cap exceeded: {w.n}^{n} > {_NPOWER_ENUM_CAP}"
        )
    # strings make the factor test O(len) per candidate
    text = "".join(chr(c) for c in w.letters)
    for cand in itertools.product(range(1, w.n + 1), repeat=n):
        run = 1
        ok = True
        for a, b in zip(cand, cand[1:]):
            run = run + 1 if a == b else 1
            if run > p:
                ok = False
                break
        if ok and "".join(chr(c) for c in cand) not in text:
            return False
    return True


@dataclass(frozen=True)
class Identity:
    """A two-sided identity between words over a shared variable alphabet."""

    lhs: Word
    rhs: Word

    def __post_init__(self):
        if len(self.lhs) == 0 or len(self.rhs) == 0:
            raise ValueError("identity sides must be nonempty")
        if self.lhs.n != self.rhs.n:
            raise ValueError("identity sides must share a variable alphabet")

    def format(self) -> str:
        return f"{self.lhs.format()} = {self.rhs.format()}"


# seed words w over {x=1, y=2}: (p, n) -> letters
_NPOWER_CATALOG: dict[tuple[int, int], tuple[int, ...]] = {
    # y x x y y x
    (2, 2): (2, 1, 1, 2, 2, 1),
    # x y y y x y x x x y
    (3, 3): (1, 2, 2, 2, 1, 2, 1, 1, 1, 2),
}

X, Y = 1, 2


def build_identity(p: int, n: int, seed: Word | None = None) -> Identity:
    """The identity  w·x·w = w·y·w  for an n-power seed word w over {x, y}.

    The seed comes from the built-in catalog unless supplied; it is validated,
    and so are both sides (inserting a letter must preserve the n-power
    property).
    """
    if seed is None:
        letters = _NPOWER_CATALOG.get((p, n))
        if letters is None:
            raise ValueError(
                f"no catalog seed word for (p, n) = ({p}, {n}); supply one"
            )
        seed = Word(2, letters)
    if seed.n != 2:
        raise ValueError("seed word must be over the 2-letter variable alphabet")
    if not is_npower_word(seed, p, n):
        raise ValueError(f"seed word {seed.format()!r} is not a {n}-power word")
    x = Word(2, (X,))
    y = Word(2, (Y,))
    lhs = seed + x + seed
    rhs = seed + y + seed
    for side in (lhs, rhs):
        if not is_npower_word(side, p, n):
            raise ValueError(
                f"side {side.format()!r} fails the {n}-power validation"
            )
    return Identity(lhs, rhs)


def refine_identity(ident: Identity) -> Identity:
    """Substitute x -> xy and y -> yx in both sides (balances letter counts)."""
    sub = {X: (X, Y), Y: (Y, X)}

    def apply(w: Word) -> Word:
        out: list[int] = []
        for c in w.letters:
            out.extend(sub[c])
        return Word(w.n, out)

    return Identity(apply(ident.lhs), apply(ident.rhs))


T = TypeVar("T")


def verify_identity(
    ident: Identity,
    assignment: Mapping[int, T],
    product: Callable[[T, T], T],
) -> bool:
    """Evaluate both sides under the assignment with the given associative
    product and compare for equality."""

    def evaluate(w: Word) -> T:
        it = iter(w.letters)
        acc = assignment[next(it)]
        for c in it:
            acc = product(acc, assignment[c])
        return acc

    return evaluate(ident.lhs) == evaluate(ident.rhs)
