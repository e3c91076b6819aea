"""Linear representations of words over max-plus matrices.

mho sends a word to the product of its generator matrices (the forward
representation); omega uses the co-generators.  At kappa = 1, entry (i, j)
of mho(w) is the longest nondecreasing subword of w over letters i..j.
mho_fast computes the same product by balanced divide and conquer, which is
linear-time in the word length for fixed alphabet size.  wp pairs the two
tableau-side matrices and agrees with (mho, omega).
"""

from __future__ import annotations

from dataclasses import dataclass

from .trop_core import (
    BOTTOM,
    GeneratorSet,
    TropMatrix,
    TropScalar,
    _mul_upper,
    mtrace,
    tmul,
    trace,
)
from .tableaux import c_mat, c_mat_co, ctab
from .words import Word

_CHUNK = 32


class RepContext:
    """Alphabet size, weight kappa, and the generator matrices they induce."""

    __slots__ = ("n", "kappa", "gens")

    def __init__(self, n: int, kappa: int = 1):
        gens = GeneratorSet(n, kappa)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "gens", gens)

    def __setattr__(self, name, value):
        raise AttributeError("RepContext is immutable")

    def __repr__(self) -> str:
        return f"RepContext(n={self.n}, kappa={self.kappa})"


def _check_word(ctx: RepContext, w: Word) -> None:
    if w.n != ctx.n:
        raise ValueError(f"word alphabet {w.n} does not match context n={ctx.n}")


def _fold(gen_rows, letters, n):
    """Sequential product of generator row-grids over the letters."""
    it = iter(letters)
    acc = gen_rows[next(it) - 1]
    for c in it:
        acc = _mul_upper(acc, gen_rows[c - 1], n)
    return acc


def mho(ctx: RepContext, w: Word) -> TropMatrix:
    """Left-to-right product of generator matrices; the empty word gives E."""
    _check_word(ctx, w)
    if not w.letters:
        return ctx.gens.E
    gen_rows = [m.rows for m in ctx.gens.A]
    return TropMatrix(_fold(gen_rows, w.letters, ctx.n))


def _fold_split(gen_rows, letters, n):
    if len(letters) <= _CHUNK:
        return _fold(gen_rows, letters, n)
    half = len(letters) // 2
    left = _fold_split(gen_rows, letters[:half], n)
    right = _fold_split(gen_rows, letters[half:], n)
    return _mul_upper(left, right, n)


def mho_fast(ctx: RepContext, w: Word) -> TropMatrix:
    """Same value as mho, by balanced recursive splitting (associativity)."""
    _check_word(ctx, w)
    if not w.letters:
        return ctx.gens.E
    return TropMatrix(_fold_split([m.rows for m in ctx.gens.A], w.letters, ctx.n))


def omega(ctx: RepContext, w: Word) -> TropMatrix:
    """Left-to-right product of co-generator matrices; the empty word gives E."""
    _check_word(ctx, w)
    if not w.letters:
        return ctx.gens.E
    return TropMatrix(_fold([m.rows for m in ctx.gens.Acheck], w.letters, ctx.n))


def omega_kappa(ctx: RepContext, w: Word) -> TropMatrix:
    """Product of the co-mirror matrices M^(l); equals kappa^len(w) * omega(w).

    Computed through the defining factorization: mho of the co-mirrored word.
    """
    from .words import co_mirror

    _check_word(ctx, w)
    return mho(ctx, co_mirror(w))


def clk_equiv(ctx: RepContext, u: Word, v: Word) -> bool:
    return mho(ctx, u) == mho(ctx, v)


def coclk_equiv(ctx: RepContext, u: Word, v: Word) -> bool:
    return omega(ctx, u) == omega(ctx, v)


@dataclass(frozen=True)
class PlacticImage:
    """Paired forward/co matrices; multiplies componentwise."""

    fwd: TropMatrix
    co: TropMatrix

    def __mul__(self, other: "PlacticImage") -> "PlacticImage":
        return PlacticImage(self.fwd * other.fwd, self.co * other.co)


def _scale_classical(m: TropMatrix, k: int) -> TropMatrix:
    """Multiply every finite entry by the integer k (repeated tropical product)."""
    if k == 1:
        return m
    return TropMatrix(
        tuple(
            tuple(BOTTOM if v is BOTTOM else v * k for v in row) for row in m.rows
        )
    )


def wp(ctx: RepContext, w: Word) -> PlacticImage:
    """Tableau-side image (c_mat, c_mat_co) of ctab(w), scaled to the context's
    kappa; equals (mho(w), omega(w)) — a cross-check, not a definition."""
    _check_word(ctx, w)
    c = ctab(w)
    return PlacticImage(
        _scale_classical(c_mat(c), ctx.kappa),
        _scale_classical(c_mat_co(c), ctx.kappa),
    )


def chi_plus(m: TropMatrix) -> TropScalar:
    """Additive character: the trace.  On mho images at kappa=1 this is the
    maximum letter multiplicity of the word."""
    return trace(m)


def chi_times(m: TropMatrix) -> TropScalar:
    """Multiplicative character: the diagonal sum.  On mho images at kappa=1
    this is the word length."""
    return mtrace(m)


def recover_nondecreasing(ctx: RepContext, m: TropMatrix) -> Word:
    """Rebuild the nondecreasing word w with mho(ctx, w) = m from m's top row:
    multiplicities are the successive differences divided by kappa."""
    if m.n != ctx.n:
        raise ValueError(f"matrix dimension {m.n} does not match context n={ctx.n}")
    kappa = ctx.kappa
    top = m.rows[0]
    counts = []
    prev = 0
    for k, v in enumerate(top, start=1):
        if v is BOTTOM:
            raise ValueError(f"top-row entry (1, {k}) is -inf; not a mho image")
        diff = v - prev
        if diff < 0 or diff % kappa != 0:
            raise ValueError(
                f"top-row entry (1, {k}) is inconsistent with a nondecreasing word"
            )
        counts.append(diff // kappa)
        prev = v
    letters: list[int] = []
    for k, q in enumerate(counts, start=1):
        letters.extend([k] * q)
    return Word(ctx.n, letters)
