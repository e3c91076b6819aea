"""Exhaustive and randomized property sweeps.

Each sweep returns (cases_checked, violations) where violations is a list of
human-readable strings; an empty list means the property held everywhere.
Exhaustive mode enumerates every word over 1..n up to maxlen; randomized mode
(samples > 0) draws uniform words with lengths up to maxlen.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .reps import RepContext, mho, omega
from .tableaux import c_mat, c_mat_co, ctab, tab
from .words import Word, co_mirror, convex_ranges, lnds_oracle, reverse


def iter_words(n: int, maxlen: int, minlen: int = 1) -> Iterator[Word]:
    """Every word over 1..n with minlen <= length <= maxlen."""
    for length in range(minlen, maxlen + 1):
        for letters in itertools.product(range(1, n + 1), repeat=length):
            yield Word(n, letters)


def random_word(rng: random.Random, n: int, maxlen: int, minlen: int = 1) -> Word:
    length = rng.randint(minlen, maxlen)
    return Word(n, tuple(rng.randint(1, n) for _ in range(length)))


def _samples(n: int, maxlen: int, samples: int, seed: int) -> Iterator[Word]:
    if samples <= 0:
        yield from iter_words(n, maxlen)
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            yield random_word(rng, n, maxlen)


def sweep_key_lemma(
    n: int, maxlen: int, samples: int = 0, seed: int = 0, kappa: int = 1
) -> tuple[int, list[str]]:
    """mho(w)[i, j] = kappa * (longest nondecreasing subword over i..j)."""
    ctx = RepContext(n, kappa)
    ranges = list(convex_ranges(n))
    count = 0
    violations = []
    for w in _samples(n, maxlen, samples, seed):
        count += 1
        rows = mho(ctx, w).rows
        for r in ranges:
            got = rows[r.lo - 1][r.hi - 1]
            want = kappa * lnds_oracle(w, r)
            if got != want:
                violations.append(
                    f"n={n} w={w.format()} range=[{r.lo}..{r.hi}]:"
                    f" matrix {got} oracle {want}"
                )
    return count, violations


def sweep_commute(
    n: int, maxlen: int, samples: int = 0, seed: int = 0
) -> tuple[int, list[str]]:
    """c_mat(ctab(w)) = mho(w) and c_mat_co(ctab(w)) = omega(w)."""
    ctx = RepContext(n)
    count = 0
    violations = []
    for w in _samples(n, maxlen, samples, seed):
        count += 1
        c = ctab(w)
        if c_mat(c) != mho(ctx, w):
            violations.append(f"n={n} w={w.format()}: c_mat(ctab) != mho")
        if c_mat_co(c) != omega(ctx, w):
            violations.append(f"n={n} w={w.format()}: c_mat_co(ctab) != omega")
    return count, violations


def sweep_wp_faithful(
    n: int, maxlen: int, samples: int = 0, seed: int = 0
) -> tuple[int, list[str]]:
    """wp(u) = wp(v) exactly when tab(u) = tab(v).

    Groups words by tableau: each class must map to a single image, and
    distinct classes must map to distinct images.
    """
    ctx = RepContext(n)
    count = 0
    violations = []
    class_image: dict[tuple, tuple] = {}
    image_class: dict[tuple, tuple] = {}
    for w in _samples(n, maxlen, samples, seed):
        count += 1
        tkey = tab(w).rows
        c = ctab(w)
        image = (c_mat(c).rows, c_mat_co(c).rows)
        if tkey in class_image:
            if class_image[tkey] != image:
                violations.append(
                    f"n={n} w={w.format()}: same tableau, different image"
                )
        else:
            class_image[tkey] = image
            other = image_class.get(image)
            if other is not None:
                violations.append(
                    f"n={n} w={w.format()}: image collides with tableau class"
                    f" {other}"
                )
            else:
                image_class[image] = tkey
    return count, violations


def sweep_cmr_knuth(
    n: int, maxlen: int, samples: int = 0, seed: int = 0
) -> tuple[int, list[str]]:
    """tab(u) = tab(v) implies tab(co_mirror(u)) = tab(co_mirror(v))."""
    count = 0
    violations = []
    class_cmr: dict[tuple, tuple] = {}
    for w in _samples(n, maxlen, samples, seed):
        count += 1
        tkey = tab(w).rows
        ckey = tab(co_mirror(w)).rows
        if tkey in class_cmr:
            if class_cmr[tkey] != ckey:
                violations.append(
                    f"n={n} w={w.format()}: co-mirror left its plactic class"
                )
        else:
            class_cmr[tkey] = ckey
    return count, violations


def sweep_std_reversal(n: int, maxlen: int = 0) -> tuple[int, list[str]]:
    """Over permutations of 1..n: tab(u) = tab(v) iff both mho(u) = mho(v)
    and mho(reverse(u)) = mho(reverse(v)).  (maxlen is ignored.)"""
    ctx = RepContext(n)
    count = 0
    violations = []
    by_tab: dict[tuple, set] = {}
    by_mat: dict[tuple, set] = {}
    for letters in itertools.permutations(range(1, n + 1)):
        count += 1
        w = Word(n, letters)
        by_tab.setdefault(tab(w).rows, set()).add(letters)
        key = (mho(ctx, w).rows, mho(ctx, reverse(w)).rows)
        by_mat.setdefault(key, set()).add(letters)
    parts_tab = {frozenset(s) for s in by_tab.values()}
    parts_mat = {frozenset(s) for s in by_mat.values()}
    if parts_tab != parts_mat:
        for block in sorted(
            parts_tab.symmetric_difference(parts_mat), key=sorted
        )[:5]:
            words = ", ".join(Word(n, p).format() for p in sorted(block))
            violations.append(f"n={n}: partition blocks differ at {{{words}}}")
    return count, violations


SWEEPS = {
    "key-lemma": sweep_key_lemma,
    "commute": sweep_commute,
    "wp-faithful": sweep_wp_faithful,
    "cmr-knuth": sweep_cmr_knuth,
    "std-reversal": sweep_std_reversal,
}
