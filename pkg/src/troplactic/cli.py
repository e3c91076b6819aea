"""Command-line surface.

Subcommands: tab, rep, subwords, equiv, identity, sweep, bench.
Exit codes: 0 success, 1 property violation (identity/sweep), 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from .reps import RepContext, clk_equiv, coclk_equiv, mho_fast, omega, mho, wp
from .sweeps import SWEEPS, random_word
from .tableaux import ctab, tab
from .trop_core import BOTTOM, TropMatrix, mat_mul
from .words import Word, build_identity, convex_ranges, lnds_oracle, verify_identity


def _parse_word(text: str, n: int) -> Word:
    return Word.parse(text, n)


def _cmd_tab(args) -> int:
    w = _parse_word(args.word, args.n)
    t = tab(w)
    c = ctab(w)
    print("young:")
    print(t.to_text())
    print("config:")
    print(c.to_text())
    parts = " ".join(str(p) for p in t.shape())
    print(f"shape: {parts}" if parts else "shape: -")
    return 0


def _cmd_rep(args) -> int:
    ctx = RepContext(args.n, args.kappa)
    w = _parse_word(args.word, args.n)
    m = omega(ctx, w) if args.co else mho(ctx, w)
    if args.json:
        print(json.dumps(m.to_json_dict()))
    else:
        print(m.to_text())
    return 0


def _lambda_matrix(w: Word) -> TropMatrix:
    rows = [[BOTTOM] * w.n for _ in range(w.n)]
    for r in convex_ranges(w.n):
        rows[r.lo - 1][r.hi - 1] = lnds_oracle(w, r)
    return TropMatrix(rows)


def _cmd_subwords(args) -> int:
    if args.stdin and args.word is not None:
        print("error: give a word or --stdin, not both", file=sys.stderr)
        return 2
    if args.stdin:
        texts = [ln.strip() for ln in sys.stdin if ln.strip()]
    elif args.word is not None:
        texts = [args.word]
    else:
        print("error: need a word or --stdin", file=sys.stderr)
        return 2
    first = True
    for text in texts:
        w = _parse_word(text, args.n)
        if not first:
            print()
        first = False
        if args.fast:
            m = mho_fast(RepContext(args.n), w)
        else:
            m = _lambda_matrix(w)
        print(m.to_text())
    return 0


def _cmd_equiv(args) -> int:
    u = _parse_word(args.u, args.n)
    v = _parse_word(args.v, args.n)
    ctx = RepContext(args.n)
    if args.kind == "plc":
        answer = tab(u) == tab(v)
    elif args.kind == "clk":
        answer = clk_equiv(ctx, u, v)
    else:
        answer = coclk_equiv(ctx, u, v)
    print("true" if answer else "false")
    return 0


def _random_tmat3(rng: random.Random) -> TropMatrix:
    choices = list(range(-5, 6)) + [BOTTOM]
    return TropMatrix(
        tuple(
            tuple(rng.choice(choices) if j >= i else BOTTOM for j in range(3))
            for i in range(3)
        )
    )


def _cmd_identity(args) -> int:
    try:
        p_str, n_str = args.pn.split(",")
        p, n = int(p_str), int(n_str)
    except ValueError:
        print(f"error: --pn expects 'P,N', got {args.pn!r}", file=sys.stderr)
        return 2
    ident = build_identity(p, n)
    rng = random.Random(args.seed)
    violations = 0
    for _ in range(args.samples):
        if args.monoid == "tmat3":
            u = _random_tmat3(rng)
            v = _random_tmat3(rng)
            ok = verify_identity(ident, {1: u * v, 2: v * u}, mat_mul)
        else:
            ctx = RepContext(3)
            u = random_word(rng, 3, 6)
            v = random_word(rng, 3, 6)
            x = wp(ctx, u + v)
            y = wp(ctx, v + u)
            ok = verify_identity(ident, {1: x, 2: y}, lambda a, b: a * b)
        if not ok:
            violations += 1
    print(f"identity {ident.format()} in {args.monoid}:")
    print(f"checked {args.samples} samples: {violations} violations")
    return 1 if violations else 0


def _cmd_sweep(args) -> int:
    fn = SWEEPS.get(args.check)
    if fn is None:
        known = ", ".join(sorted(SWEEPS))
        print(f"error: unknown check {args.check!r} (known: {known})", file=sys.stderr)
        return 2
    count, violations = fn(args.n, args.maxlen)
    print(f"{args.check}: checked {count} cases, {len(violations)} violations")
    for v in violations[:5]:
        print(f"  {v}")
    return 1 if violations else 0


def _cmd_bench(args) -> int:
    try:
        lens = [int(float(tok)) for tok in args.lens.split(",") if tok]
    except ValueError:
        print(f"error: --lens expects numbers, got {args.lens!r}", file=sys.stderr)
        return 2
    if not lens or any(l < 1 for l in lens):
        print("error: --lens needs positive lengths", file=sys.stderr)
        return 2
    ctx = RepContext(args.n)
    rng = random.Random(args.seed)
    words = [
        Word(args.n, tuple(rng.randint(1, args.n) for _ in range(l))) for l in lens
    ]
    mho_fast(ctx, words[0])  # warm run
    results = []
    for l, w in zip(lens, words):
        start = time.perf_counter()
        mho_fast(ctx, w)
        seconds = time.perf_counter() - start
        results.append((l, seconds, l / seconds if seconds > 0 else float("inf")))
    print("length seconds letters_per_sec")
    for l, seconds, rate in results:
        print(f"{l} {seconds:.6f} {rate:.0f}")
    for (l0, t0, _), (l1, t1, _) in zip(results, results[1:]):
        if t0 > 0:
            print(f"ratio {l1}/{l0}: {t1 / t0:.2f}")
    num = sum(t * l for l, t, _ in results)
    den = sum(l * l for l, _, _ in results)
    slope = num / den if den else 0.0
    ss_res = sum((t - slope * l) ** 2 for l, t, _ in results)
    ss_tot = sum(t * t for _, t, _ in results)
    residual = (ss_res / ss_tot) ** 0.5 if ss_tot > 0 else 0.0
    print(f"fit: seconds ~ {slope:.3e} * length, residual {residual:.4f}")
    if args.out:
        _write_bench_report(Path(args.out), results, slope)
    return 0


def _write_bench_report(out_dir: Path, results, slope: float) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "report.csv"
    with csv_path.open("w") as fh:
        fh.write("length,seconds,letters_per_sec\n")
        for l, seconds, rate in results:
            fh.write(f"{l},{seconds:.6f},{rate:.0f}\n")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    lengths = [l for l, _, _ in results]
    seconds = [t for _, t, _ in results]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(lengths, seconds, "o", label="measured")
    if slope > 0:
        ax.loglog(lengths, [slope * l for l in lengths], "--", label="linear fit")
    ax.set_xlabel("word length")
    ax.set_ylabel("seconds")
    ax.set_title("divide-and-conquer fold scaling")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(out_dir / "scaling.png", dpi=120)
    plt.close(fig)
    print(f"wrote {csv_path} and {out_dir / 'scaling.png'}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="troplactic",
        description="Tropical word representations, tableaux, and sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tab", help="print Young tableau, configuration tableau, shape")
    p.add_argument("-n", type=int, required=True, help="alphabet size")
    p.add_argument("word", help="word, e.g. 'acb' or '3.1.2' ('' for empty)")
    p.set_defaults(handler=_cmd_tab)

    p = sub.add_parser("rep", help="print the forward (or co) matrix of a word")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--kappa", type=int, default=1)
    p.add_argument("--co", action="store_true", help="use the co-representation")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_rep)

    p = sub.add_parser("subwords", help="print the full subword-length matrix")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--fast", action="store_true", help="divide-and-conquer path")
    p.add_argument("--stdin", action="store_true", help="read words from stdin")
    p.add_argument("word", nargs="?", default=None)
    p.set_defaults(handler=_cmd_subwords)

    p = sub.add_parser("equiv", help="decide plactic/cloaktic/co-cloaktic equality")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--kind", choices=("plc", "clk", "coclk"), required=True)
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("identity", help="verify the two-variable identity on samples")
    p.add_argument("--pn", required=True, help="P,N of the seed word, e.g. 2,2")
    p.add_argument("--monoid", choices=("tmat3", "plactic3"), default="tmat3")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_identity)

    p = sub.add_parser("sweep", help="run a named exhaustive property check")
    p.add_argument("--check", required=True, help=", ".join(sorted(SWEEPS)))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--maxlen", type=int, default=0)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("bench", help="time the divide-and-conquer fold")
    p.add_argument("--lens", default="1e4,1e5", help="comma-separated lengths")
    p.add_argument("-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="directory for report.csv + scaling.png")
    p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except (ValueError, OverflowError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
