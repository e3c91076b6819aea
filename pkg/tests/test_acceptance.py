"""Acceptance suite: the ten end-to-end guarantees this package ships with.

Each test is numbered and self-contained:

  01  golden values for every worked example (matrices, tableaux, images)
  02  oracle equivalence of the matrix entries with brute-force subword counts
  03  commuting diagrams between the tableau maps and the word representations
  04  faithfulness of the paired representation on three letters
  05  the four-letter collision witness
  06  the axiom systems of the generator algebra and its dual
  07  the flagship semigroup identity, in matrices and in plactic images
  08  co-mirroring preserves plactic classes
  09  tableau equality over permutations = joint forward/reversal equivalence
  10  equality and scaling contract of the chunked product evaluator

Value assertions are exact.  Stated runtime ceilings are asserted with wide
margins; the scaling ratios in 10 are reported as warnings only, since wall
time depends on the machine.
"""

import math
import random
import time
import warnings

from troplactic.reps import PlacticImage, RepContext, mho, mho_fast, omega, wp
from troplactic.sweeps import (
    random_word,
    sweep_cmr_knuth,
    sweep_commute,
    sweep_key_lemma,
    sweep_std_reversal,
    sweep_wp_faithful,
)
from troplactic.tableaux import c_mat, c_mat_co, ctab, reading_word, tab
from troplactic.trop_core import BOTTOM, GeneratorSet, TropMatrix, co_gen_A, gen_A
from troplactic.words import Word, X, Y, build_identity, co_mirror, verify_identity

B = BOTTOM

RUN_U = Word.parse("cbbccaabbc", 3)
RUN_V = Word.parse("ccbbcaabbc", 3)
FOUR_WORD = Word.parse("dcdbbddaaaccd", 4)


def M(rows):
    return TropMatrix(rows)


def W3(text):
    return Word.parse(text, 3)


# ---------------------------------------------------------------------------
# 01 -- golden values
# ---------------------------------------------------------------------------

def test_ac01_golden_values():
    start = time.perf_counter()

    # Three-letter generator matrices and all two-generator word products.
    g = GeneratorSet(3)
    A, Bm, C = g.a(1), g.a(2), g.a(3)
    assert A == gen_A(3, 1) == M([[1, 1, 1], [B, 0, 0], [B, B, 0]])
    assert Bm == gen_A(3, 2) == M([[0, 1, 1], [B, 1, 1], [B, B, 0]])
    assert C == gen_A(3, 3) == M([[0, 0, 1], [B, 0, 1], [B, B, 1]])

    acb = M([[1, 2, 2], [B, 1, 1], [B, B, 1]])
    assert A * C * Bm == C * A * Bm == acb
    bac = M([[1, 1, 2], [B, 1, 2], [B, B, 1]])
    assert Bm * A * C == Bm * C * A == bac
    assert A * Bm * A == Bm * A * A == M([[2, 2, 2], [B, 1, 1], [B, B, 0]])
    assert Bm * Bm * A == Bm * A * Bm == M([[1, 2, 2], [B, 2, 2], [B, B, 0]])
    assert A * C * A == C * A * A == M([[2, 2, 2], [B, 0, 1], [B, B, 1]])
    assert C * C * A == C * A * C == M([[1, 1, 2], [B, 0, 2], [B, B, 2]])
    assert Bm * C * Bm == C * Bm * Bm == M([[0, 2, 2], [B, 2, 2], [B, B, 1]])
    assert C * C * Bm == C * Bm * C == M([[0, 1, 2], [B, 1, 2], [B, B, 2]])
    abc = M([[1, 2, 3], [B, 1, 2], [B, B, 1]])
    assert A * Bm * C == abc
    cba = M([[1, 1, 1], [B, 1, 1], [B, B, 1]])
    assert C * Bm * A == cba

    # Dual generators and their pair products.  The product of the first two
    # dual generators agrees with their entrywise minimum, and so does the
    # (3,1) pair, while the reversed (2,1) pair picks up one extra -1 entry.
    A1, A2, A3 = (co_gen_A(3, ell) for ell in (1, 2, 3))
    assert A1 == M([[0, 0, 0], [B, 0, 0], [B, B, -1]])
    assert A2 == M([[0, 0, 0], [B, -1, 0], [B, B, 0]])
    assert A3 == M([[-1, 0, 0], [B, 0, 0], [B, B, 0]])
    assert A1 * A2 == A1.min_with(A2) == M([[0, 0, 0], [B, -1, 0], [B, B, -1]])
    assert A2 * A1 == M([[0, 0, 0], [B, -1, -1], [B, B, -1]])
    assert A2 * A1 != A2.min_with(A1)
    assert A3 * A1 == A3.min_with(A1) == M([[-1, 0, 0], [B, 0, 0], [B, B, -1]])

    # The four-letter standard word: tableau, configuration, traces, image.
    t4 = tab(FOUR_WORD)
    assert t4.rows == ((1, 1, 1, 3, 3, 4), (2, 2, 4, 4), (3, 4), (4,))
    c4 = ctab(FOUR_WORD)
    assert c4.rows == ((3, 0, 2, 1), (2, 0, 2), (1, 1), (1,))
    assert c4.traces() == (3, 2, 3, 5)
    assert c_mat(c4) == M(
        [[3, 3, 5, 6], [B, 2, 4, 5], [B, B, 3, 5], [B, B, B, 5]]
    )

    # Single letters and the five basic three-letter classes, on both the
    # forward and the dual matrix side.
    for text, gen, dual in (("a", A, A1), ("b", Bm, A2), ("c", C, A3)):
        c = ctab(W3(text))
        assert c_mat(c) == gen
        assert c_mat_co(c) == dual
    assert ctab(W3("a")).rows == ((1, 0, 0), (0, 0), (0,))
    assert ctab(W3("b")).rows == ((0, 1, 0), (0, 0), (0,))
    assert ctab(W3("c")).rows == ((0, 0, 1), (0, 0), (0,))

    cases = [
        ("acb", "cab", ((1, 1, 0), (0, 1), (0,)), acb,
         M([[-1, -1, 0], [B, -1, 0], [B, B, -1]])),
        ("bac", "bca", ((1, 0, 1), (1, 0), (0,)), bac,
         M([[-1, 0, 0], [B, -1, -1], [B, B, -1]])),
        ("abc", "abc", ((1, 1, 1), (0, 0), (0,)), abc,
         M([[-1, 0, 0], [B, -1, 0], [B, B, -1]])),
        ("cba", "cba", ((1, 0, 0), (1, 0), (1,)), cba,
         M([[-1, -1, -1], [B, -1, -1], [B, B, -1]])),
    ]
    for u_text, v_text, crows, fwd, co in cases:
        cu, cv = ctab(W3(u_text)), ctab(W3(v_text))
        assert cu == cv
        assert cu.rows == crows
        assert c_mat(cu) == fwd
        assert c_mat_co(cu) == co
    assert tab(W3("acb")).rows == ((1, 2), (3,))
    assert tab(W3("bca")).rows == ((1, 3), (2,))

    # The two-row collision on the dual side: same dual image (and the same
    # matrix would be ambiguous), different tableaux.
    c_aca, c_aac = ctab(W3("aca")), ctab(W3("aac"))
    assert ctab(W3("caa")) == c_aca
    assert c_aca.rows == ((2, 0, 0), (0, 1), (0,))
    assert c_aac.rows == ((2, 0, 1), (0, 0), (0,))
    collision = M([[-1, 0, 0], [B, 0, 0], [B, B, -2]])
    assert c_mat_co(c_aca) == c_mat_co(c_aac) == collision
    assert tab(W3("aca")) == tab(W3("caa")) != tab(W3("aac"))

    # Generic three-letter tableau word  c^k3 b^j2 c^k2 a^i1 b^j1 c^k1:
    # closed forms for both matrix images, checked over every small valid
    # configuration.
    for i1 in range(3):
        for j1 in range(3):
            for k1 in range(3):
                for j2 in range(min(i1, 2) + 1):
                    for k2 in range(3):
                        if j2 + k2 > i1 + j1:
                            continue
                        for k3 in range(j2 + 1):
                            if i1 + j1 + k1 + j2 + k2 + k3 == 0:
                                continue
                            letters = (
                                (3,) * k3 + (2,) * j2 + (3,) * k2
                                + (1,) * i1 + (2,) * j1 + (3,) * k1
                            )
                            w = Word(3, letters)
                            c = ctab(w)
                            assert c.rows == ((i1, j1, k1), (j2, k2), (k3,))
                            assert c_mat(c) == M([
                                [i1, i1 + j1, i1 + j1 + k1],
                                [B, j1 + j2, j2 + max(j1, k2) + k1],
                                [B, B, k1 + k2 + k3],
                            ])
                            assert c_mat_co(c) == M([
                                [-(k1 + k2 + k3), -(k3 + min(j1, k2)), -k3],
                                [B, -(j1 + j2), -j2],
                                [B, B, -i1],
                            ])

    # The running pair: equal forward images, distinct tableaux, and the
    # dual images that tell them apart.
    cu, cv = ctab(RUN_U), ctab(RUN_V)
    assert cu.rows == ((2, 2, 1), (2, 2), (1,))
    assert cv.rows == ((2, 2, 1), (2, 1), (2,))
    shared = M([[2, 4, 5], [B, 4, 5], [B, B, 4]])
    assert c_mat(cu) == c_mat(cv) == shared
    assert tab(RUN_U) != tab(RUN_V)
    assert c_mat_co(cu) == M([[-4, -3, -1], [B, -4, -2], [B, B, -2]])
    assert c_mat_co(cv) == M([[-4, -3, -2], [B, -4, -2], [B, B, -2]])
    assert c_mat_co(cu) != c_mat_co(cv)

    # The four-letter pair with equal paired images but distinct tableaux.
    u4, v4 = Word.parse("bdac", 4), Word.parse("dbac", 4)
    assert ctab(u4).rows == ((1, 0, 1, 0), (1, 0, 1), (0, 0), (0,))
    assert ctab(v4).rows == ((1, 0, 1, 0), (1, 0, 0), (0, 1), (0,))
    ctx4 = RepContext(4)
    image = wp(ctx4, u4)
    assert image == wp(ctx4, v4)
    assert image.fwd == M(
        [[1, 1, 2, 2], [B, 1, 2, 2], [B, B, 1, 1], [B, B, B, 1]]
    )
    assert image.co == M(
        [[-1, -1, 0, 0], [B, -1, 0, 0], [B, B, -1, -1], [B, B, B, -1]]
    )
    assert tab(u4) != tab(v4)

    # Co-mirrored three-letter relations: each pair of substituted words is
    # tableau-equal, with the stated canonical form and configuration.
    appendix = [
        ("acb", "cab", "bacbca", "cbbaca", "cbbaac",
         ((2, 0, 1), (2, 0), (1,))),
        ("aba", "baa", "bacaba", "cababa", "cbbaaa",
         ((3, 0, 0), (2, 0), (1,))),
        ("bac", "bca", "cabacb", "cacbba", "cbcaab",
         ((2, 1, 0), (1, 1), (1,))),
        ("cbc", "ccb", "cbcacb", "cbcbca", "cbcabc",
         ((1, 1, 1), (1, 1), (1,))),
    ]
    for u_text, v_text, cmr_u, cmr_v, canon, crows in appendix:
        u, v = co_mirror(W3(u_text)), co_mirror(W3(v_text))
        assert u == W3(cmr_u)
        assert v == W3(cmr_v)
        assert tab(W3(u_text)) == tab(W3(v_text))
        assert tab(u) == tab(v) == tab(W3(canon))
        assert reading_word(tab(u)) == W3(canon)
        assert ctab(u).rows == ctab(v).rows == crows

    assert time.perf_counter() - start < 1.0


# ---------------------------------------------------------------------------
# 02 -- oracle equivalence for the matrix entries
# ---------------------------------------------------------------------------

def test_ac02_entries_match_subword_oracle():
    start = time.perf_counter()
    counts = {}
    for n in (1, 2, 3, 4):
        count, bad = sweep_key_lemma(n, 8)
        assert bad == []
        counts[n] = count
    assert counts[4] == 87380
    assert counts == {1: 8, 2: 510, 3: 9840, 4: 87380}
    for n in (2, 3, 4, 5, 6):
        count, bad = sweep_key_lemma(n, 40, samples=2000, seed=100 + n)
        assert count == 2000
        assert bad == []
    assert time.perf_counter() - start < 60.0


# ---------------------------------------------------------------------------
# 03 -- commuting diagrams
# ---------------------------------------------------------------------------

def test_ac03_tableau_maps_commute_with_representations():
    for n in (1, 2, 3, 4):
        count, bad = sweep_commute(n, 8)
        assert bad == []
        assert count == (8 if n == 1 else (n ** 9 - n) // (n - 1))
    for n in (2, 3, 4, 5, 6):
        count, bad = sweep_commute(n, 40, samples=2000, seed=300 + n)
        assert count == 2000
        assert bad == []


# ---------------------------------------------------------------------------
# 04 -- faithfulness on three letters
# ---------------------------------------------------------------------------

def test_ac04_paired_image_is_faithful_on_three_letters():
    start = time.perf_counter()
    count, bad = sweep_wp_faithful(3, 8)
    assert count == 9840
    assert bad == []
    assert time.perf_counter() - start < 120.0


# ---------------------------------------------------------------------------
# 05 -- the four-letter collision witness
# ---------------------------------------------------------------------------

def test_ac05_four_letter_collision_witness():
    ctx = RepContext(4)
    u, v = Word.parse("bdac", 4), Word.parse("dbac", 4)
    assert wp(ctx, u) == wp(ctx, v)
    assert tab(u) != tab(v)


# ---------------------------------------------------------------------------
# 06 -- axiom suites for the generator algebra and its dual
# ---------------------------------------------------------------------------

def test_ac06_axiom_suites_all_generator_tuples():
    from troplactic.trop_core import layout_E

    for n in range(1, 7):
        g = GeneratorSet(n)
        e = layout_E(n)
        idx = range(1, n + 1)

        # unit absorption and the ordered-product law
        for ell in idx:
            a = g.a(ell)
            assert e + a == a
            assert e * a == a == a * e
            assert e.min_with(g.acheck(ell)) == g.acheck(ell)
        for p in idx:
            for q in range(p + 1, n + 1):
                assert g.a(q) * g.a(p) == g.a(p) + g.a(q)
                assert g.acheck(p) * g.acheck(q) == g.acheck(p).min_with(
                    g.acheck(q)
                )

        # mixed products over all ordered triples
        for p in idx:
            for q in range(p, n + 1):
                for r in range(q, n + 1):
                    a, b, c = g.a(p), g.a(q), g.a(r)
                    assert a * (b + c) == a * b + c
                    assert (a + b) * c == a + b * c

        # Knuth relations with the separating corner entries
        for p in idx:
            for q in range(p, n + 1):
                for r in range(q + 1, n + 1):
                    a, b, c = g.a(p), g.a(q), g.a(r)
                    assert a * c * b == c * a * b
                    assert (a * b * c).entry(p, r) == 3
                    assert (a * c * b).entry(p, r) == 2
                    assert a * b * c != a * c * b
                    if p < q:
                        assert (b * a * c).entry(p, r) == 2
                        assert (c * b * a).entry(p, r) == 1
        for p in idx:
            for q in range(p + 1, n + 1):
                for r in range(q, n + 1):
                    a, b, c = g.a(p), g.a(q), g.a(r)
                    assert b * a * c == b * c * a

        # dual mixed laws over strict triples
        for p in idx:
            for q in range(p + 1, n + 1):
                for r in range(q + 1, n + 1):
                    a, b, c = g.acheck(p), g.acheck(q), g.acheck(r)
                    assert (b.min_with(c)) * a == (b * a).min_with(c)
                    assert c * (b.min_with(a)) == a.min_with(c * b)

        # power splitting over generator sums, all pairs, exponents to 6
        for k in idx:
            for ell in idx:
                for m in range(1, 7):
                    split = g.a(k) ** m + g.a(ell) ** m
                    assert (g.a(k) + g.a(ell)) ** m == split
                    if k < ell:
                        assert split == g.a(ell) ** m * g.a(k) ** m
                        assert split == (g.a(ell) * g.a(k)) ** m


# ---------------------------------------------------------------------------
# 07 -- the flagship semigroup identity
# ---------------------------------------------------------------------------

def test_ac07_flagship_identity_matrices_and_images():
    ident = build_identity(2, 2)
    rng = random.Random(2022)
    values = [BOTTOM] + list(range(-5, 6))

    def random_triangular():
        rows = []
        for i in range(3):
            row = [BOTTOM] * i + [rng.choice(values) for _ in range(3 - i)]
            rows.append(row)
        return TropMatrix(rows)

    for _ in range(10_000):
        u = random_triangular()
        v = random_triangular()
        assert verify_identity(
            ident, {X: u * v, Y: v * u}, lambda s, t: s * t
        )

    ctx = RepContext(3)
    for _ in range(10_000):
        u = random_word(rng, 3, 6, minlen=0)
        v = random_word(rng, 3, 6, minlen=0)
        x, y = wp(ctx, u), wp(ctx, v)
        assert verify_identity(
            ident, {X: x * y, Y: y * x}, lambda s, t: s * t
        )


# ---------------------------------------------------------------------------
# 08 -- co-mirroring preserves plactic classes
# ---------------------------------------------------------------------------

def test_ac08_co_mirror_preserves_tableau_classes():
    start = time.perf_counter()
    count3, bad3 = sweep_cmr_knuth(3, 6)
    assert count3 == 1092
    assert bad3 == []
    count4, bad4 = sweep_cmr_knuth(4, 6)
    assert count4 == 5460
    assert bad4 == []
    assert time.perf_counter() - start < 300.0


# ---------------------------------------------------------------------------
# 09 -- permutations: tableau classes = joint forward/reversal classes
# ---------------------------------------------------------------------------

def test_ac09_standardized_reversal_partitions_agree():
    for n in range(1, 7):
        count, bad = sweep_std_reversal(n)
        assert count == math.factorial(n)
        assert bad == []


# ---------------------------------------------------------------------------
# 10 -- chunked evaluator: equality mandatory, scaling informative
# ---------------------------------------------------------------------------

def test_ac10_chunked_evaluator_equality_and_scaling():
    rng = random.Random(7)
    ctx = RepContext(5)
    letters = tuple(rng.randint(1, 5) for _ in range(10 ** 6))
    words = {
        4: Word(5, letters[: 10 ** 4]),
        5: Word(5, letters[: 10 ** 5]),
        6: Word(5, letters),
    }

    mho_fast(ctx, words[4])  # warm-up
    times = {}
    for decade, w in words.items():
        t0 = time.perf_counter()
        fast = mho_fast(ctx, w)
        times[decade] = time.perf_counter() - t0
        assert fast == mho(ctx, w)

    for lo, hi in ((4, 5), (5, 6)):
        ratio = times[hi] / times[lo]
        if not 8.0 <= ratio <= 13.0:
            warnings.warn(
                f"decade 1e{lo}->1e{hi} time ratio {ratio:.2f} outside"
                f" [8, 13] (times {times[lo]:.3f}s -> {times[hi]:.3f}s);"
                " linear scaling check is informative only",
                stacklevel=1,
            )
