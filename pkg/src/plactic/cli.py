"""Command-line entry point: ``plactic <subcommand> ...``.

Exit codes: 0 when every requested check passes, 1 when a check is
falsified (the counterexample is printed), 2 for parse errors and tripped
resource guards.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from typing import Sequence

from ._parallel import DEFAULT_GUARD, default_workers
from .characterize import (
    c1c2_power_invariance,
    c_one_membership,
    descent_run,
    lwi_growth_check,
    r2_product_length,
    row_bound_check,
    row_shift_check,
    staircase_membership,
    two_letter_membership,
)
from .counting import (
    b_count,
    c_via_schur_formula,
    coefficient_report,
    count_c,
    count_c_refined,
    log_concavity,
)
from .errors import PlacticError, SingleLetterCase
from .plactic import centralizer_slice, centralizer_words, count_words, in_centralizer, knuth_class
from .stability import (
    FingerprintCache,
    m_stability_check_permutation,
    packed_conjecture_sweep,
    stability_probe,
    strong_stability_check_two_letter,
)
from .tableaux import SkewConfiguration, greene_invariant, jdt_rectify, p_tableau, row, rsk, singleton_count
from .words import Word, concat, decreasing, format_word, multiplicity, parse_word, power

CACHE_ENV = "PLACTIC_CACHE_DIR"


class Result:
    """What a subcommand produced: a JSON payload, optional table rows, a verdict."""

    def __init__(self, payload: dict, rows: list[dict] | None = None, passed: bool = True,
                 text: str | None = None, counterexample: str | None = None):
        self.payload = payload
        self.rows = rows
        self.passed = passed
        self.text = text
        self.counterexample = counterexample


# ---------------------------------------------------------------- rendering

def render_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _scalar_rows(payload: dict) -> list[dict]:
    return [{"key": k, "value": v} for k, v in sorted(payload.items()) if not isinstance(v, (dict, list))]


def _cell(v) -> str:
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    if v is None:
        return ""
    return str(v)


def render_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    lines = [",".join(cols)]
    lines += [",".join(_cell(r[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


def render_table(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    cells = [[_cell(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(line[i]) for line in cells)) for i, c in enumerate(cols)]
    out = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    out += ["  ".join(x.rjust(w) for x, w in zip(line, widths)) for line in cells]
    return "\n".join(out) + "\n"


def emit(result: Result, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(render_json(result.payload))
    elif result.text is not None and fmt == "table":
        out.write(result.text)
    else:
        rows = result.rows if result.rows is not None else _scalar_rows(result.payload)
        out.write(render_csv(rows) if fmt == "csv" else render_table(rows))


def _rows_json(t) -> list[list[int]]:
    return [list(r) for r in t.rows]


# ---------------------------------------------------------------- commands

def cmd_rsk(args) -> Result:
    w = parse_word(args.word)
    p, q = rsk(w)
    payload = {"word": format_word(w), "P": _rows_json(p), "Q": _rows_json(q)}
    text = f"P:\n{p}\nQ:\n{q}\n" if w else "P:\n\nQ:\n\n"
    rows = [
        {"tableau": name, "row": i, "entries": format_word(r)}
        for name, t in (("P", p), ("Q", q))
        for i, r in enumerate(t.rows, 1)
    ]
    return Result(payload, rows, text=text)


def cmd_jdt(args) -> Result:
    u, v = parse_word(args.u), parse_word(args.v)
    cfg = SkewConfiguration.southwest(p_tableau(u), p_tableau(v))
    rect = jdt_rectify(cfg)
    direct = p_tableau(concat(u, v))
    payload = {
        "u": format_word(u),
        "v": format_word(v),
        "rectified": _rows_json(rect),
        "insertion": _rows_json(direct),
        "agree": rect == direct,
    }
    text = f"{rect}\n" if rect.size else "\n"
    cex = None if rect == direct else f"jdt {format_word(u)} {format_word(v)}"
    return Result(payload, [{"row": i, "entries": format_word(r)} for i, r in enumerate(rect.rows, 1)],
                  passed=rect == direct, text=text, counterexample=cex)


def cmd_knuth_class(args) -> Result:
    w = parse_word(args.word)
    words = sorted(knuth_class(w, limit=args.limit), key=lambda x: tuple(x))
    payload = {
        "word": format_word(w),
        "tableau": _rows_json(p_tableau(w)),
        "size": len(words),
        "words": [format_word(x) for x in words],
    }
    return Result(payload, [{"word": format_word(x)} for x in words],
                  text="".join(format_word(x) + "\n" for x in words))


def cmd_centralizer(args) -> Result:
    u = parse_word(args.u)
    sl = centralizer_slice(u, args.n, args.m, guard=args.guard, workers=args.workers)
    payload = sl.to_json()
    rows = [
        {"tableau": " / ".join(format_word(r) for r in t.rows) or "e", "weight": wt}
        for t, wt in sl.classes
    ]
    text = render_table(rows) + f"total {sl.total}\n"
    if args.witnesses:
        words = [format_word(w) for w in centralizer_words(u, args.n, args.m, guard=args.guard, workers=args.workers)]
        payload["witnesses"] = words
        rows = [{"word": w} for w in words]
        text = "".join(w + "\n" for w in words)
    return Result(payload, rows, text=text)


def _report(check: str, inputs: dict, computed: dict, conditions: dict) -> Result:
    passed = all(conditions.values())
    payload = {"check": check, "inputs": inputs, "computed": computed, "conditions": conditions, "passed": passed}
    rows = [{"condition": k, "pass": v} for k, v in sorted(conditions.items())]
    cex = None if passed else f"{check} " + " ".join(f"{k}={v}" for k, v in sorted(inputs.items()))
    return Result(payload, rows, passed, counterexample=cex)


def cmd_characterize(args) -> Result:
    check = args.check
    a = [parse_word(x) for x in args.words]

    def need(n):
        if len(a) != n:
            raise ValueError(f"{check} takes {n} word argument(s)")

    if check == "c-one":
        need(1)
        direct, first_row, lwi = c_one_membership(a[0])
        return _report(check, {"w": format_word(a[0])},
                       {"in_centralizer": direct, "first_row_all_ones": first_row, "lwi_condition": lwi},
                       {"first_row_agrees": first_row == direct, "lwi_agrees": lwi == direct})
    if check == "staircase":
        need(1)
        m = args.m if args.m is not None else 1
        closed = staircase_membership(a[0], m)
        direct = in_centralizer(decreasing(m), a[0])
        return _report(check, {"w": format_word(a[0]), "m": m},
                       {"closed_form": closed, "in_centralizer": direct}, {"agrees": closed == direct})
    if check == "row-bound":
        need(2)
        w, u = a
        bound = row_bound_check(w, u)
        direct = in_centralizer(u, w)
        return _report(check, {"w": format_word(w), "u": format_word(u)},
                       {"descent_run": descent_run(u), "rows_bounded": bound, "in_centralizer": direct},
                       {"necessary_condition": bound or not direct})
    if check == "r2":
        need(2)
        w, u = a
        predicted = r2_product_length(w, u)
        actual = len(row(p_tableau(concat(w, u)), 2))
        return _report(check, {"w": format_word(w), "u": format_word(u)},
                       {"predicted": predicted, "actual": actual}, {"agrees": predicted == actual})
    if check == "two-letter":
        need(2)
        u, w = a
        direct = in_centralizer(u, w)
        try:
            closed = two_letter_membership(u, w)
            route = "two-letter"
        except SingleLetterCase:
            # u = a^n has the same centralizer as the single letter a
            closed = in_centralizer(u[:1], w) if u else True
            route = "single-letter"
        pw = p_tableau(w)
        return _report(check, {"u": format_word(u), "w": format_word(w)},
                       {"route": route, "closed_form": closed, "in_centralizer": direct,
                        "c1_w": singleton_count(pw, 1), "c2_w": singleton_count(pw, 2),
                        "m1_u": multiplicity(u, 1), "m2_u": multiplicity(u, 2)},
                       {"agrees": closed == direct})
    if check == "power-invariance":
        need(1)
        k = args.k if args.k is not None else 4
        ok = c1c2_power_invariance(a[0], k)
        return _report(check, {"u": format_word(a[0]), "k_max": k}, {}, {"invariant": ok})
    if check == "row-shift":
        need(1)
        u = a[0]
        k = args.k if args.k is not None else len(u)
        ok = row_shift_check(u, k)
        return _report(check, {"u": format_word(u), "k": k},
                       {"P_k": _rows_json(p_tableau(power(u, k))), "P_k1": _rows_json(p_tableau(power(u, k + 1)))},
                       {"row_shift": ok})
    if check == "lwi-growth":
        need(1)
        u = a[0]
        i = args.i if args.i is not None else 1
        k = args.k if args.k is not None else 1
        ok = lwi_growth_check(u, i, k)
        return _report(check, {"u": format_word(u), "i": i, "k": k},
                       {"lwi_k": greene_invariant(power(u, k), i), "lwi_k1": greene_invariant(power(u, k + 1), i)},
                       {"growth": ok})
    raise ValueError(f"unknown check {check!r}")


def _cache(args) -> FingerprintCache | None:
    path = args.cache_dir or os.environ.get(CACHE_ENV)
    return FingerprintCache(path) if path else None


def cmd_stability(args) -> Result:
    u = parse_word(args.u)
    rep = stability_probe(u, args.K, args.L, args.M, guard=args.guard, workers=args.workers, cache=_cache(args))
    return Result(rep.to_json(), rep.csv_rows())


def cmd_count(args) -> Result:
    u = parse_word(args.u)
    n, m = args.n, args.m
    if args.k is not None:
        value = count_c_refined(n, m, args.k, u, guard=args.guard, workers=args.workers)
    elif args.method == "class":
        value = count_c(n, m, u, guard=args.guard, workers=args.workers)
    elif args.method == "words":
        value = count_words(u, n, m, guard=args.guard, workers=args.workers)
    else:
        if tuple(u) != (1,):
            raise ValueError("the schur method only counts C(1)")
        value = c_via_schur_formula(n, m)
    payload = {"u": format_word(u), "n": n, "m": m, "k": args.k, "method": args.method, "count": value}
    return Result(payload, [{"n": n, "m": m, "count": value}])


def cmd_coeffs(args) -> Result:
    if args.n < 2:
        raise ValueError("coefficient report needs n >= 2")
    rep = coefficient_report(args.n, guard=args.guard, workers=args.workers)
    rows = [{"n": r["n"], "k": r["k"], "a_k": r["a_k"], "b_k": r["b_k"]} for r in rep.rows()]
    failed = [k for k, v in sorted(rep.clauses.items()) if not v]
    return Result(rep.to_json(), rows, rep.passed,
                  counterexample=f"n={args.n} failing clauses: {', '.join(failed)}" if failed else None)


def _conj_logconcave(args) -> Result:
    entries, rows, bad = [], [], []
    for n in range(1, args.n_max + 1):
        b = [b_count(n, k, guard=args.guard, workers=args.workers) for k in range(1, n + 1)]
        viol = log_concavity(b)
        entries.append({"n": n, "b": b, "violations": viol})
        rows += [{"n": n, "k": k, "b_nk": v} for k, v in enumerate(b, 1)]
        bad += [f"n={n} k={k}" for k in viol]
    payload = {"which": "logconcave", "n_max": args.n_max, "sequences": entries, "passed": not bad}
    return Result(payload, rows, not bad, counterexample="; ".join(bad) or None)


def _conj_packed(args) -> Result:
    m = args.m
    K = args.K if args.K is not None else m + 3
    L = args.L if args.L is not None else 6
    rep = packed_conjecture_sweep(m, args.len_max, K, L, args.M, guard=args.guard, workers=args.workers,
                                  cache=_cache(args))
    payload = {"which": "packed", **rep.to_json()}
    rows = [{"m": m, "len_max": args.len_max, "K": K, "L": L, "words": rep.words,
             "classes": rep.classes, "failures": len(rep.failures)}]
    cex = "; ".join(f"u={f['u']} k={f['k']}" for f in rep.failures) or None
    return Result(payload, rows, rep.passed, counterexample=cex)


def _conj_stability(args) -> Result:
    a = args.alphabet
    K = args.K if args.K is not None else 4
    L = args.L if args.L is not None else 5
    M = args.M if args.M is not None else a + 1
    cache = _cache(args)
    rows = []
    if a <= 2:
        family = "strong"
        bases = [Word(w) for n in range(1, args.len_max + 1)
                 for w in itertools.product(range(1, a + 1), repeat=n) if set(w) == set(range(1, a + 1))]
        for u in bases:
            if a == 2:
                ok = strong_stability_check_two_letter(u, K, L, M, guard=args.guard, workers=args.workers, cache=cache)
            else:
                ok = stability_probe(u, K, L, M, guard=args.guard, workers=args.workers, cache=cache).observed_index == 1
            rows.append({"u": format_word(u), "check": "strong", "pass": ok})
    else:
        family = "permutation"
        for perm in itertools.permutations(range(1, a + 1)):
            u = Word(perm)
            ok = m_stability_check_permutation(u, max(K, a + 1), L, M, guard=args.guard, workers=args.workers,
                                               cache=cache)
            rows.append({"u": format_word(u), "check": "m-stable", "pass": ok})
        d = decreasing(a)
        ok = stability_probe(d, K, L, M, guard=args.guard, workers=args.workers, cache=cache).observed_index == 1
        rows.append({"u": format_word(d), "check": "strong", "pass": ok})
    bad = [r["u"] for r in rows if not r["pass"]]
    payload = {"which": "stability", "alphabet": a, "len_max": args.len_max, "K": K, "L": L, "M": M,
               "family": family, "results": rows, "passed": not bad,
               "note": "equality of truncated centralizers is evidence, not proof, of equality of centralizers"}
    return Result(payload, rows, not bad, counterexample=("u=" + ", u=".join(bad)) if bad else None)


def cmd_conjectures(args) -> Result:
    return {"logconcave": _conj_logconcave, "packed": _conj_packed, "stability": _conj_stability}[args.which](args)


# ---------------------------------------------------------------- parser

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    def d(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--format", choices=("json", "csv", "table"), default=d("table"))
    p.add_argument("--guard", type=_positive, default=d(DEFAULT_GUARD), help="max enumerated objects")
    p.add_argument("--workers", type=_positive, default=d(default_workers()))
    p.add_argument("--cache-dir", default=d(None), help=f"fingerprint cache (env {CACHE_ENV})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plactic", description="Plactic-monoid centralizer toolkit.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        _add_globals(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    p = add("rsk", cmd_rsk, "insertion and recording tableaux of a word")
    p.add_argument("word")

    p = add("jdt", cmd_jdt, "rectify the south-west configuration of P(u) and P(v)")
    p.add_argument("u")
    p.add_argument("v")

    p = add("knuth-class", cmd_knuth_class, "all words Knuth-equivalent to a word")
    p.add_argument("word")
    p.add_argument("--limit", type=_positive, default=9, help="max word length")

    p = add("centralizer", cmd_centralizer, "slice of C(u) at length n over [m]")
    p.add_argument("u")
    p.add_argument("n", type=_nonneg)
    p.add_argument("m", type=_positive)
    p.add_argument("--witnesses", action="store_true", help="list every member word")

    p = add("characterize", cmd_characterize, "check one closed-form characterization on an instance")
    p.add_argument("check", choices=("c-one", "staircase", "row-bound", "r2", "two-letter",
                                     "power-invariance", "row-shift", "lwi-growth"))
    p.add_argument("words", nargs="+")
    p.add_argument("--m", type=_positive)
    p.add_argument("--k", type=_positive)
    p.add_argument("--i", type=_positive)

    p = add("stability", cmd_stability, "fingerprint C'(u^k) for k = 1..K")
    p.add_argument("u")
    p.add_argument("--K", type=_positive, default=5)
    p.add_argument("--L", type=_nonneg, default=4)
    p.add_argument("--M", type=_positive)

    p = add("count", cmd_count, "c_{n,m}(u), or c_{n,m,k}(u) with --k")
    p.add_argument("n", type=_nonneg)
    p.add_argument("m", type=_nonneg)
    p.add_argument("--u", default="1")
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--method", choices=("class", "words", "schur"), default="class")

    p = add("coeffs", cmd_coeffs, "binomial-basis coefficients a_k, b_k for c_{n,m}(1)")
    p.add_argument("n", type=int)

    p = add("conjectures", cmd_conjectures, "desk-scale conjecture sweeps")
    p.add_argument("--which", choices=("logconcave", "packed", "stability"), required=True)
    p.add_argument("--n-max", type=_positive, default=12)
    p.add_argument("--m", type=_positive, default=3)
    p.add_argument("--len-max", type=_positive, default=5)
    p.add_argument("--alphabet", type=_positive, default=2)
    p.add_argument("--K", type=_positive)
    p.add_argument("--L", type=_nonneg)
    p.add_argument("--M", type=_positive)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except PlacticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(result, args.format)
    if not result.passed:
        if result.counterexample:
            print(f"counterexample: {result.counterexample}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
