"""Command-line surface: queries, verification reports, SVG scenes.

Exit codes: 0 when every executed claim passes (flagged claims warn unless
--strict), 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import brute, exchange, families, lamination, render, report
from .angles import format_angle, orbit_type, parse_angle
from .coding import (
    Word,
    itinerary,
    upper_arc,
    verify_region_table,
    word_less,
)
from .errors import AerolamError
from .families import build_level
from .lamination import Chord, pullback_lamination, check_invariance, MINOR


def _word(text: str, raw: bool = False) -> Word:
    return Word.parse(text, raw=raw)


def _emit(args, claims: list[dict], t0: float) -> int:
    rep = report.make_report(
        " ".join(sys.argv[1:]), claims, timing=time.perf_counter() - t0
    )
    text = report.to_json(rep) if args.json else report.to_text(rep)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    if args.json:
        print(f"# wall time {rep['timing']} s", file=sys.stderr)
    return report.exit_code(claims, args.strict)


# --- claim assemblies ---------------------------------------------------------


def claims_order(max_level: int) -> list[dict]:
    return families.verify_order_chain(max_level)


def claims_occurrences(max_level: int) -> list[dict]:
    return families.verify_occurrences(min(max_level, 6) or 1)


def claims_suffixes(max_level: int) -> list[dict]:
    out = []
    for n in range(min(max_level, 5) + 1):
        for k in range(n + 1):
            out.extend(families.verify_suffix_windows(n, k))
    return out


def claims_eau(max_level: int) -> list[dict]:
    universe = families.list_exchangeable_pairs(3)
    basic = families.check_eau_conditions(
        families.PREFIX3, (families.A_WORD, families.B_WORD), families.U0, universe
    )
    claims = [
        {
            "id": f"eau/basic-{cid}",
            "locus": "3",
            "status": "pass" if basic[cid] else "fail",
            "witness": {},
        }
        for cid in families.CONDITION_IDS
    ]
    claims.extend(families.pair_claims(3))
    claims.extend(families.decomposition_claims(min(max_level, 4)))
    return claims


def claims_captures(max_level: int) -> list[dict]:
    claims = []
    for n in range(min(max_level, 6) + 1):
        try:
            fam = families.capture_family(n)
            expected_pre = {0: 13}.get(n)
            ok = len(fam) == n + 2 and (
                expected_pre is None or all(s.preperiod == expected_pre for s in fam)
            )
            witness = {
                "count": len(fam),
                "preperiods": sorted({s.preperiod for s in fam}),
                "closed_form_preperiod": 26 * 2**n - 11,
            }
        except AerolamError as exc:
            ok, witness = False, {"error": str(exc)}
        claims.append(
            {
                "id": f"captures/n{n}",
                "locus": "2.7",
                "status": "pass" if ok else "fail",
                "witness": witness,
            }
        )
    return claims


def claims_matings(max_level: int, brute_check: bool = True) -> list[dict]:
    claims = []
    for n in range(min(max_level, 5) + 1):
        try:
            fam = families.mating_family(n)
            ok = len(fam) == n + 2
            witness = {
                "count": len(fam),
                "period": fam[0].period,
                "angles": [report.jsonable(s.q) for s in fam],
            }
        except AerolamError as exc:
            ok, witness = False, {"error": str(exc)}
        claims.append(
            {
                "id": f"matings/n{n}",
                "locus": "2.8",
                "status": "pass" if ok else "fail",
                "witness": witness,
            }
        )
    if brute_check:
        fam = families.mating_family(0)
        ok = True
        for spec in fam:
            js = brute.mersenne_matches(spec.cycle_word)
            jq = int(spec.q * ((1 << 18) - 1))
            ok = ok and js == sorted([jq, (1 << 18) - 1 - jq])
        claims.append(
            {
                "id": "matings/mersenne-brute-force",
                "locus": "2.8",
                "status": "pass" if ok else "fail",
                "witness": {"period": 18},
            }
        )
    return claims


def claims_exchange(max_level: int) -> list[dict]:
    claims = []
    claims.extend(exchange.basic_trace_claims())
    claims.extend(exchange.mating_trace_claims(0, 0))
    claims.extend(exchange.side_strip_claims())
    claims.extend(exchange.s_image_claims(min(max_level, 2)))
    claims.extend(exchange.first_move_claims(min(max_level, 3)))
    return claims


def claims_lamination(depth: int = 12) -> list[dict]:
    lam = pullback_lamination(Chord(*MINOR), depth)
    claims = check_invariance(lam)
    counts_ok = all(len(layer) == 2**d for d, layer in enumerate(lam.layers))
    claims.append(
        {
            "id": "lamination/layer-counts",
            "locus": "1.2",
            "status": "pass" if counts_ok else "fail",
            "witness": {"layers": [len(l) for l in lam.layers]},
        }
    )
    depth1 = {(c.a, c.b) for c in lam.layers[1]}
    from fractions import Fraction as F

    expected1 = {(F(3, 14), F(11, 14)), (F(2, 7), F(5, 7))}
    claims.append(
        {
            "id": "lamination/critical-gap-chords",
            "locus": "1.2",
            "status": "pass" if depth1 == expected1 else "fail",
            "witness": {"depth1": sorted(str(c) for c in lam.layers[1])},
        }
    )
    return claims


def claims_oracle(max_len: int = 10) -> list[dict]:
    words = brute.restricted_words(max_len)
    claims = brute.hull_check(words)
    bad = [c for c in claims if c["status"] != "pass"]
    return [
        {
            "id": "oracle/hull-summary",
            "locus": "1.4",
            "status": "pass" if not bad else "fail",
            "witness": {"words": len(claims), "failures": [c["id"] for c in bad]},
        }
    ] + bad


VERIFY_TARGETS = (
    "regions",
    "oracle",
    "order",
    "occurrences",
    "suffixes",
    "lengths",
    "captures",
    "matings",
    "eau",
    "exchange",
    "lamination",
)


def assemble(target: str, max_level: int) -> list[dict]:
    if target == "regions":
        return verify_region_table()
    if target == "oracle":
        return claims_oracle()
    if target == "order":
        return claims_order(max_level)
    if target == "occurrences":
        return claims_occurrences(max_level)
    if target == "suffixes":
        return claims_suffixes(max_level)
    if target == "lengths":
        return families.length_report(max(max_level, 8))
    if target == "captures":
        return claims_captures(max_level)
    if target == "matings":
        return claims_matings(max_level)
    if target == "eau":
        return claims_eau(max_level)
    if target == "exchange":
        return claims_exchange(max_level)
    if target == "lamination":
        return claims_lamination()
    if target == "all":
        out = []
        for t in VERIFY_TARGETS:
            out.extend(assemble(t, max_level))
        return out
    raise ValueError(f"unknown verify target {target!r}")


# --- sub-commands --------------------------------------------------------------


def cmd_itinerary(args) -> int:
    theta = parse_angle(args.angle)
    word = itinerary(theta, args.depth, refine_c=args.refine_c)
    print(str(word))
    return 0


def cmd_arc(args) -> int:
    arc = upper_arc(_word(args.word, args.raw))
    print(f"({format_angle(arc.lo)}, {format_angle(arc.hi)})")
    return 0


def cmd_order(args) -> int:
    v, w = _word(args.v, args.raw), _word(args.w, args.raw)
    print(f"{args.v} < {args.w}" if word_less(v, w) else f"{args.w} < {args.v}")
    return 0


def cmd_family(args) -> int:
    lv = build_level(args.level)
    rows = [("v", lv.v), ("w", lv.w), ("t", lv.t), ("u", lv.u)]
    if args.level == 0:
        rows.append(("u'", lv.u_prime))
    if args.json:
        print(json.dumps({name: str(w) for name, w in rows}, indent=2))
    else:
        for name, w in rows:
            print(f"{name}_{args.level} ({len(w)} letters): {w}")
    return 0


def cmd_lengths(args) -> int:
    t0 = time.perf_counter()
    return _emit(args, families.length_report(args.max_level), t0)


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    try:
        claims = assemble(args.target, args.max_level)
    except AerolamError as exc:
        claims = [
            {
                "id": f"verify/{args.target}",
                "locus": "-",
                "status": "fail",
                "witness": {"error": str(exc)},
            }
        ]
    return _emit(args, claims, t0)


def cmd_captures(args) -> int:
    fam = families.capture_family(args.level)
    if args.json:
        payload = [
            {
                "k": s.k,
                "word": str(s.word),
                "preperiod": s.preperiod,
                "crossing_arc": report.jsonable(s.crossing),
            }
            for s in fam
        ]
        print(json.dumps({"schema": 1, "level": args.level, "captures": payload}, indent=2))
    else:
        for s in fam:
            tag = "base" if s.k is None else f"k={s.k}"
            print(f"[{tag}] preperiod {s.preperiod}  crossing {s.crossing}  {s.word}")
    return 0


def cmd_matings(args) -> int:
    fam = families.mating_family(args.level)
    if args.json:
        payload = [
            {
                "k": s.k,
                "q": report.jsonable(s.q),
                "period": s.period,
                "cycle_word": str(s.cycle_word),
            }
            for s in fam
        ]
        print(json.dumps({"schema": 1, "level": args.level, "matings": payload}, indent=2))
    else:
        for s in fam:
            print(f"[k={s.k}] q = {format_angle(s.q)}  period {s.period}")
    return 0


def cmd_exchange(args) -> int:
    factory = exchange.SCENARIOS[args.scenario]
    kwargs = {}
    if args.k is not None:
        kwargs["k"] = args.k
    if args.n is not None:
        kwargs["n"] = args.n
    cfg = factory(**kwargs)
    res = exchange.trace_scenario(cfg)
    if args.json:
        for event in res.events:
            print(json.dumps(event.as_dict()))
    else:
        print(f"scenario {cfg.name}: steps {res.m0}..{res.m - 1}, "
              f"hits {list(res.hits_y)}")
        for event in res.events:
            if event.kind == "orbitTouch" and not args.verbose:
                continue
            print(
                f"step {event.step:4d}  {event.kind:13s} "
                f"{event.component[0][0]}({event.component[0][1]}) <-> "
                f"({event.component[1][1]}){event.component[1][0]}"
                + (
                    f"  {event.endpoint_before} -> {event.endpoint_after}"
                    if event.endpoint_before != event.endpoint_after
                    else ""
                )
            )
        print(f"final endpoint: {res.final_beta}")
        if res.final_zeta is not None:
            print(f"final zeta endpoint: {res.final_zeta}")
    if args.output:
        render.write_svg(render.scenario_scene(res), args.output)
        print(f"wrote {args.output}", file=sys.stderr)
    return 0


def cmd_search_eau(args) -> int:
    if args.word:
        word = _word(args.word, args.raw)
        found = families.search_decompositions(word)
        print(f"{len(found)} decompositions of a {len(word)}-letter word")
        for rec in found:
            print(f"  |e|={rec['e_len']}  a={rec['a']}  |u|={rec['u_len']}")
        return 0
    t0 = time.perf_counter()
    claims = families.decomposition_claims(min(args.max_level, 4))
    for claim in claims:
        w = claim["witness"]
        print(
            f"{claim['status'].upper():4s} {claim['id']}: {w['count']} decompositions "
            f"(>= {w['required']}) at length {w['length']}"
        )
    print(f"# wall time {time.perf_counter() - t0:.2f} s", file=sys.stderr)
    return 0 if all(c["status"] == "pass" for c in claims) else 1


def cmd_render(args) -> int:
    if args.what == "lamination":
        lam = pullback_lamination(Chord(*MINOR), args.depth)
        text = render.lamination_scene(lam)
    elif args.what == "regions":
        text = render.region_scene()
    else:
        factory = exchange.SCENARIOS[args.scenario]
        kwargs = {}
        if args.k is not None:
            kwargs["k"] = args.k
        if args.n is not None:
            kwargs["n"] = args.n
        res = exchange.trace_scenario(factory(**kwargs))
        text = render.scenario_scene(res)
    out = args.output or f"{args.what}.svg"
    render.write_svg(text, out)
    print(f"wrote {out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="aerolam",
        description="exact circle coding, word families and disc-exchange "
        "verification for the aeroplane lamination map",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, output=True):
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--strict", action="store_true",
                       help="flagged claims fail the run")
        if output:
            p.add_argument("-o", "--output", help="write output to a file")

    p = sub.add_parser("itinerary", help="doubling itinerary of an angle")
    p.add_argument("angle")
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--refine-c", action="store_true")
    p.set_defaults(fn=cmd_itinerary)

    p = sub.add_parser("arc", help="upper-semicircle trace of a region word")
    p.add_argument("word")
    p.add_argument("--raw", action="store_true")
    p.set_defaults(fn=cmd_arc)

    p = sub.add_parser("order", help="compare two region words")
    p.add_argument("v")
    p.add_argument("w")
    p.add_argument("--raw", action="store_true")
    p.set_defaults(fn=cmd_order)

    p = sub.add_parser("family", help="print the level words")
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("lengths", help="length ledger vs closed forms")
    p.add_argument("--max-level", type=int, default=8)
    common(p)
    p.set_defaults(fn=cmd_lengths)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("target", choices=VERIFY_TARGETS + ("all",))
    p.add_argument("--max-level", type=int, default=5)
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("captures", help="capture word family at a level")
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_captures)

    p = sub.add_parser("matings", help="mating angle family at a level")
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_matings)

    p = sub.add_parser("exchange", help="replay a disc-exchange scenario")
    p.add_argument("--scenario", choices=sorted(exchange.SCENARIOS), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--verbose", action="store_true", help="include orbit rows")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", help="also write an SVG strip")
    p.set_defaults(fn=cmd_exchange)

    p = sub.add_parser("search-eau", help="count (e, a, u) decompositions")
    p.add_argument("--word", help="decompose one word instead of the family")
    p.add_argument("--max-level", type=int, default=4)
    p.add_argument("--raw", action="store_true")
    p.set_defaults(fn=cmd_search_eau)

    p = sub.add_parser("render", help="write an SVG scene")
    p.add_argument("what", choices=("lamination", "scenario", "regions"))
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--scenario", choices=sorted(exchange.SCENARIOS), default="2.1")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_render)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if not hasattr(args, "strict"):
        args.strict = False
    try:
        return args.fn(args)
    except AerolamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
