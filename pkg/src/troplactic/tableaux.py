"""Young tableaux and configuration tableaux.

Young tableaux use the French convention: rows are stored bottom row first,
rows are nondecreasing left to right, columns strictly increase bottom-up.
A configuration tableau is the numeric mirror: a triangular array counting,
per row and letter, the letter multiplicities of a Young tableau.  The two
are in bijection, and the walk/cover weight functions on configuration
tableaux produce the upper-triangular matrices of the word representations.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass

from .trop_core import BOTTOM, TropMatrix
from .words import Word, reverse

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _format_letter(l: int, n: int) -> str:
    return _LETTERS[l - 1] if n <= 26 else str(l)


@dataclass(frozen=True)
class Shape:
    """A partition: weakly decreasing positive integers (possibly empty)."""

    partition: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.partition)
        object.__setattr__(self, "partition", p)
        for a in p:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise ValueError(f"shape parts must be positive integers: {p}")
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"shape parts must be weakly decreasing: {p}")

    def conjugate(self) -> "Shape":
        if not self.partition:
            return Shape(())
        width = self.partition[0]
        return Shape(
            tuple(sum(1 for a in self.partition if a >= c) for c in range(1, width + 1))
        )

    def __iter__(self):
        return iter(self.partition)

    def __len__(self) -> int:
        return len(self.partition)


class YoungTableau:
    """Immutable semi-standard Young tableau over the alphabet 1..n.

    ``rows`` is a tuple of row-tuples, bottom row first.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows=()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"alphabet size must be a positive integer, got {n!r}")
        rows = tuple(tuple(r) for r in rows)
        for r in rows:
            if not r:
                raise ValueError("tableau rows must be nonempty")
            for l in r:
                if isinstance(l, bool) or not isinstance(l, int) or not (1 <= l <= n):
                    raise ValueError(f"letter {l!r} out of range 1..{n}")
            if any(a > b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not nondecreasing")
        for low, high in zip(rows, rows[1:]):
            if len(high) > len(low):
                raise ValueError("row lengths must weakly decrease bottom-up")
            if any(high[c] <= low[c] for c in range(len(high))):
                raise ValueError("columns must strictly increase bottom-up")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("YoungTableau is immutable")

    @classmethod
    def empty(cls, n: int) -> "YoungTableau":
        return cls(n, ())

    def shape(self) -> Shape:
        return Shape(tuple(len(r) for r in self.rows))

    def num_cells(self) -> int:
        return sum(len(r) for r in self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, YoungTableau)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def to_text(self) -> str:
        """One row per line, bottom row printed last; '(empty)' when empty."""
        if not self.rows:
            return "(empty)"
        return "\n".join(
            " ".join(_format_letter(l, self.n) for l in r) for r in reversed(self.rows)
        )

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "YoungTableau":
        return cls(d["n"], d["rows"])

    def __repr__(self) -> str:
        return f"YoungTableau({self.n}, {[list(r) for r in self.rows]})"


def _bump(rows: list[list[int]], x: int) -> None:
    """Schensted row insertion on a mutable list of rows (bottom first)."""
    cur = x
    for row in rows:
        pos = bisect_right(row, cur)
        if pos == len(row):
            row.append(cur)
            return
        cur, row[pos] = row[pos], cur
    rows.append([cur])


def bump_insert(t: YoungTableau, x: int) -> YoungTableau:
    """Insert one letter by Schensted bumping; adds exactly one cell."""
    if isinstance(x, bool) or not isinstance(x, int) or not (1 <= x <= t.n):
        raise ValueError(f"letter {x!r} out of range 1..{t.n}")
    rows = [list(r) for r in t.rows]
    _bump(rows, x)
    return YoungTableau(t.n, rows)


def tab(w: Word) -> YoungTableau:
    """Fold bump_insert over the word; the empty word gives the empty tableau."""
    rows: list[list[int]] = []
    for c in w.letters:
        _bump(rows, c)
    return YoungTableau(w.n, rows)


def reading_word(t: YoungTableau) -> Word:
    """Rows concatenated top row first; tab(reading_word(t)) = t."""
    out: list[int] = []
    for r in reversed(t.rows):
        out.extend(r)
    return Word(t.n, out)


def tab_product(t: YoungTableau, s: YoungTableau) -> YoungTableau:
    """Monoid product: insert s's reading word into t."""
    if t.n != s.n:
        raise ValueError(f"alphabet mismatch: {t.n} vs {s.n}")
    rows = [list(r) for r in t.rows]
    for r in reversed(s.rows):
        for c in r:
            _bump(rows, c)
    return YoungTableau(t.n, rows)


def is_standard(t: YoungTableau) -> bool:
    """Each letter occurs at most once (hence rows and columns strictly increase)."""
    seen: set[int] = set()
    for r in t.rows:
        for l in r:
            if l in seen:
                return False
            seen.add(l)
    return True


def transpose_standard(t: YoungTableau) -> YoungTableau:
    """Exchange rows and columns; defined on standard tableaux only."""
    if not is_standard(t):
        raise ValueError("transpose is defined on standard tableaux only")
    if not t.rows:
        return t
    width = len(t.rows[0])
    cols = [
        [r[c] for r in t.rows if c < len(r)] for c in range(width)
    ]
    return YoungTableau(t.n, cols)


class ConfigTableau:
    """Immutable triangular array of nonnegative cell values.

    Cell (i, j) is defined for 1 <= i <= j <= n (i = row from the bottom,
    j = diagonal); storage is ``rows[i-1][j-i]``.  Construction enforces the
    configuration laws: prefix sums along row j never exceed the matching
    prefix sums along any lower row i.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"size must be a positive integer, got {n!r}")
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        for i, r in enumerate(rows):
            if len(r) != n - i:
                raise ValueError(f"row {i + 1} must have {n - i} cells, got {len(r)}")
            for v in r:
                if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                    raise ValueError(f"cell value {v!r} is not a nonnegative integer")
        # laws: prefix sums of consecutive rows are ordered, which gives all pairs
        prefix = []
        for r in rows:
            acc = 0
            p = []
            for v in r:
                acc += v
                p.append(acc)
            prefix.append(p)
        for i in range(n - 1):
            upper = prefix[i + 1]
            lower = prefix[i]
            for k in range(len(upper)):
                if upper[k] > lower[k]:
                    raise ValueError(
                        f"configuration law violated between rows {i + 1} and {i + 2}"
                        f" at prefix length {k + 1}"
                    )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ConfigTableau is immutable")

    @classmethod
    def zero(cls, n: int) -> "ConfigTableau":
        return cls(n, tuple(tuple(0 for _ in range(n - i)) for i in range(n)))

    def cell(self, i: int, j: int) -> int:
        """Value at row i, diagonal j (1-based, i <= j)."""
        if not (1 <= i <= j <= self.n):
            raise ValueError(f"cell ({i},{j}) undefined for size {self.n}")
        return self.rows[i - 1][j - i]

    def trace(self, ell: int) -> int:
        """tau_ell: total of diagonal ell = multiplicity of letter ell."""
        if not (1 <= ell <= self.n):
            raise ValueError(f"diagonal {ell} out of range 1..{self.n}")
        return sum(self.rows[t][ell - 1 - t] for t in range(ell))

    def traces(self) -> tuple[int, ...]:
        return tuple(self.trace(l) for l in range(1, self.n + 1))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def shape(self) -> Shape:
        sums = self.row_sums()
        while sums and sums[-1] == 0:
            sums = sums[:-1]
        return Shape(sums)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConfigTableau)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def to_text(self) -> str:
        """One row per line, bottom row printed last."""
        return "\n".join(" ".join(str(v) for v in r) for r in reversed(self.rows))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "ConfigTableau":
        return cls(d["n"], d["rows"])

    def __repr__(self) -> str:
        return f"ConfigTableau({self.n}, {[list(r) for r in self.rows]})"


def is_standard_config(c: ConfigTableau) -> bool:
    """True iff every diagonal total (trace) equals 1."""
    return all(c.trace(l) == 1 for l in range(1, c.n + 1))


def tab_to_ctab(t: YoungTableau) -> ConfigTableau:
    """Cell (i, ell) = number of occurrences of letter ell in row i."""
    n = t.n
    rows = []
    for i in range(1, n + 1):
        counts = [0] * (n - i + 1)
        if i <= len(t.rows):
            for l in t.rows[i - 1]:
                counts[l - i] += 1
        rows.append(tuple(counts))
    return ConfigTableau(n, rows)


def ctab_to_tab(c: ConfigTableau) -> YoungTableau:
    """Rebuild row i as i^{cell(i,i)} (i+1)^{cell(i,i+1)} ... n^{cell(i,n)}."""
    rows = []
    for i in range(1, c.n + 1):
        row: list[int] = []
        for j in range(i, c.n + 1):
            row.extend([j] * c.cell(i, j))
        rows.append(row)
    while rows and not rows[-1]:
        rows.pop()
    return YoungTableau(c.n, rows)


def _encode(rows: list[list[int]], ell: int, n: int) -> None:
    """One letter of the encoding algorithm, on mutable triangular rows.

    Increment cell (r, cur); if some higher diagonal of row r is occupied,
    move its lowest such unit up one row, repeating there.
    """
    r = 0  # 0-based row
    cur = ell
    while True:
        row = rows[r]
        row[cur - r - 1] += 1
        nxt = -1
        for idx in range(cur - r, n - r):
            if row[idx] > 0:
                nxt = idx
                break
        if nxt < 0:
            return
        row[nxt] -= 1
        cur = nxt + r + 1
        r += 1


def encode_letter(c: ConfigTableau, ell: int) -> ConfigTableau:
    """Insert one letter directly on the configuration side."""
    if isinstance(ell, bool) or not isinstance(ell, int) or not (1 <= ell <= c.n):
        raise ValueError(f"letter {ell!r} out of range 1..{c.n}")
    rows = [list(r) for r in c.rows]
    _encode(rows, ell, c.n)
    return ConfigTableau(c.n, rows)


def ctab(w: Word) -> ConfigTableau:
    """Fold encode_letter from the all-zero tableau; equals tab_to_ctab(tab(w))."""
    n = w.n
    rows = [[0] * (n - i) for i in range(n)]
    for c in w.letters:
        _encode(rows, c, n)
    return ConfigTableau(n, rows)


# -- walk and cover weights ---------------------------------------------------
#
# Cells live on diagonal coordinates (row r, diagonal d), r <= d.  A descending
# walk from (i, i) to (1, j) moves by horizontal steps (r, d) -> (r, d+1) and
# slant steps (r, d) -> (r-1, d); its weight is the total of visited cells.
# A horizontal cover of span (i, j) picks one cell on each diagram column
# t = 1..j — the cell (r_t, r_t + t - 1) — where the rows r_t form a strictly
# decreasing sequence drawn from {1..i} (a subset of rows, one per column);
# its weight is the total of the picked cells.  Strictness is what makes
# covers exist exactly when i >= j and forces eta_{i,i} = tau_i.


def _walk_row(c: ConfigTableau, i: int) -> list[int]:
    """Maximum walk weights [nu_{i,i}, nu_{i,i+1}, ..., nu_{i,n}]."""
    n = c.n
    lam = c.rows
    out = []
    prev: list[int] = []
    for d in range(i, n + 1):
        cur = [0] * (i + 2)
        for r in range(i, 0, -1):
            val = lam[r - 1][d - r]
            if d == i:
                cur[r] = val if r == i else val + cur[r + 1]
            else:
                best = prev[r]
                if r < i and cur[r + 1] > best:
                    best = cur[r + 1]
                cur[r] = val + best
        out.append(cur[1])
        prev = cur
    return out


def _cover_row(c: ConfigTableau, i: int) -> list[int]:
    """Minimum cover weights [eta_{i,1}, eta_{i,2}, ..., eta_{i,i}].

    cost[r-1] holds the cheapest cover of columns 1..t whose column-t row is
    r; the strict decrease leaves rows 1..i-t+1 available at column t.
    """
    lam = c.rows
    cost = [lam[r - 1][0] for r in range(1, i + 1)]
    out = [min(cost)]
    for t in range(2, i + 1):
        # exclusive suffix minima: cheapest previous column using a row > r
        above = list(cost[1:])
        for r in range(len(above) - 2, -1, -1):
            if above[r + 1] < above[r]:
                above[r] = above[r + 1]
        cost = [lam[r - 1][t - 1] + above[r - 1] for r in range(1, i - t + 2)]
        out.append(min(cost))
    return out


def nu(c: ConfigTableau, i: int, j: int) -> int:
    """Maximum total cell value over descending walks from (i, i) to (1, j)."""
    if not (1 <= i <= j <= c.n):
        raise ValueError(f"walk requires 1 <= i <= j <= {c.n}, got ({i}, {j})")
    return _walk_row(c, i)[j - i]


def eta(c: ConfigTableau, i: int, j: int) -> int:
    """Minimum total cell value over horizontal covers; 0 when i < j."""
    if not (1 <= i <= c.n and 1 <= j <= c.n):
        raise ValueError(f"indices ({i}, {j}) out of range 1..{c.n}")
    if i < j:
        return 0
    return _cover_row(c, i)[j - 1]


def c_mat(c: ConfigTableau) -> TropMatrix:
    """Upper-triangular matrix with entry (i, j) = nu_{i,j}; BOTTOM below."""
    n = c.n
    out = []
    for i in range(1, n + 1):
        walk = _walk_row(c, i)
        out.append(tuple([BOTTOM] * (i - 1)) + tuple(walk))
    return TropMatrix(out)


def c_mat_co(c: ConfigTableau) -> TropMatrix:
    """Upper-triangular matrix with entry (i, j) = -eta_{n-i+1, n-j+1}."""
    n = c.n
    out = []
    for i in range(1, n + 1):
        cover = _cover_row(c, n - i + 1)
        row = [BOTTOM] * n
        for j in range(i, n + 1):
            row[j - 1] = -cover[n - j]
        out.append(tuple(row))
    return TropMatrix(out)


def sn_realization(perm: Word) -> tuple[TropMatrix, TropMatrix]:
    """(c_mat of ctab(perm), c_mat of ctab(reversed perm)); injective on S_n."""
    if sorted(perm.letters) != list(range(1, perm.n + 1)):
        raise ValueError(f"{perm.format()!r} is not a permutation of 1..{perm.n}")
    return c_mat(ctab(perm)), c_mat(ctab(reverse(perm)))


# -- size changes -----------------------------------------------------------------


def right_inject(c: ConfigTableau, n_target: int) -> ConfigTableau:
    """Embed into a larger tableau: content in the right part, zeros on the
    left columns and the new top rows."""
    if not isinstance(n_target, int) or n_target < c.n:
        raise ValueError(f"target size {n_target!r} must be an integer >= {c.n}")
    d = n_target - c.n
    rows = []
    for i in range(1, n_target + 1):
        row = []
        for j in range(i, n_target + 1):
            if i <= c.n and j - d >= i:
                row.append(c.cell(i, j - d))
            else:
                row.append(0)
        rows.append(tuple(row))
    return ConfigTableau(n_target, rows)


def delete_bottom_row(c: ConfigTableau) -> ConfigTableau:
    """Drop row 1; cell (i, j) of the result is cell (i+1, j+1) of the input."""
    if c.n < 2:
        raise ValueError("deletion needs size >= 2")
    return ConfigTableau(c.n - 1, tuple(c.rows[1:]))


def delete_last_diagonal(c: ConfigTableau) -> ConfigTableau:
    """Drop the n-th diagonal: the last cell of every row, and the top row."""
    if c.n < 2:
        raise ValueError("deletion needs size >= 2")
    return ConfigTableau(c.n - 1, tuple(r[:-1] for r in c.rows[:-1]))
