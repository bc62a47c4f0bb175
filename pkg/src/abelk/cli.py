"""Command-line front end.

Group literals use the shared grammar (``Z``, ``Z^k``, ``Z/n``, ``0``
joined by ``+``); element literals are ``(t1,...,tm; f1,...,fr)`` in
canonical factor order.  ``--json`` switches any command to the stable
structured schema.  Exit codes: 0 success, 1 parse/usage error, 2 domain
error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .groups import (
    DomainError,
    FgaGroup,
    IntMatrix,
    ParseError,
    element_order,
    element_to_json,
    group_to_json,
    parse_element,
    parse_group,
    quotient_by,
    render_element,
    render_group,
    snf,
    tensor,
    tor,
)
from .ktheory import (
    KPair,
    KTriple,
    aut_homotopy,
    classify_triples,
    cone_k,
    kunneth_pair,
    reciprocal,
    sw_dual_pair,
)
from .primary import (
    aut_sends,
    g1_normal_form,
    g2_quotient_closed_form,
    g3_normal_form,
    g4_quotient_closed_form,
    invariant_I,
    satisfies_star,
    satisfies_star_star,
)
from .verifier import SUITE_NAMES, CatalogBounds, run_all_suites, run_suite

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad usage; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _pair_json(p: KPair) -> dict:
    return {"k0": group_to_json(p.k0), "k1": group_to_json(p.k1)}


def _triple_json(t: KTriple) -> dict:
    return {"k0": group_to_json(t.k0), "unit": element_to_json(t.unit),
            "k1": group_to_json(t.k1)}


def _triple_text(t: KTriple) -> str:
    return (f"k0={render_group(t.k0)}  unit={render_element(t.unit)}  "
            f"k1={render_group(t.k1)}")


def _parse_triple(args, prefix: str = "") -> KTriple:
    get = lambda name: getattr(args, (prefix + name).replace("-", "_"))
    k0 = parse_group(get("k0"))
    k1 = parse_group(get("k1"))
    return KTriple(k0, parse_element(get("unit"), k0), k1)


def _parse_matrix(text: str) -> IntMatrix:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"matrix must be a JSON list of rows: {exc.msg}",
                         exc.pos)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("matrix must be a list of rows", 0)
    if rows and not all(isinstance(x, int) for r in rows for x in r):
        raise ParseError("matrix entries must be integers", 0)
    if not rows:
        raise ParseError("matrix needs at least one row", 0)
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("matrix rows must have equal length", 0)
    return IntMatrix.from_rows(rows)


def _parse_bounds(text: str | None) -> CatalogBounds:
    if not text:
        return CatalogBounds()
    keys = {"primes": (2, 3), "exp": 3, "factors": 2, "rank": 2,
            "content": 4, "order": None}
    for field in text.split(";"):
        field = field.strip()
        if not field:
            continue
        if "=" not in field:
            raise ParseError(f"bad bounds field {field!r}", text.find(field))
        name, _, value = field.partition("=")
        name = name.strip()
        if name not in keys:
            raise ParseError(f"unknown bounds key {name!r}", text.find(field))
        try:
            if name == "primes":
                keys[name] = tuple(int(v) for v in value.split(",") if v.strip())
            else:
                keys[name] = int(value)
        except ValueError:
            raise ParseError(f"bad integer in bounds field {field!r}",
                             text.find(field)) from None
    return CatalogBounds(primes=keys["primes"], max_exponent=keys["exp"],
                         max_factors_per_prime=keys["factors"],
                         max_free_rank=keys["rank"],
                         max_unit_content=keys["content"],
                         max_order=keys["order"])


def _add_triple_flags(sub, prefix: str = "", required: bool = True):
    sub.add_argument(f"--{prefix}k0", required=required, metavar="GROUP")
    sub.add_argument(f"--{prefix}unit", required=required, metavar="ELEMENT")
    sub.add_argument(f"--{prefix}k1", required=required, metavar="GROUP")


def build_parser() -> _Parser:
    p = _Parser(prog="abelk",
                description="Exact computations with finitely generated "
                            "abelian groups and K-invariant triples.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, **kw):
        s = sub.add_parser(name, **kw)
        s.add_argument("--json", action="store_true",
                       help="emit the structured schema")
        return s

    s = cmd("normalize", help="canonical form of a group literal")
    s.add_argument("group", metavar="GROUP")

    s = cmd("snf", help="Smith normal form s = u*m*v of an integer matrix")
    s.add_argument("matrix", metavar="MATRIX",
                   help='JSON rows, e.g. "[[2,4],[6,8]]"')

    s = cmd("quotient", help="quotient of a group by generated elements")
    s.add_argument("--group", required=True, metavar="GROUP")
    s.add_argument("--element", action="append", required=True,
                   metavar="ELEMENT")

    s = cmd("order", help="order of an element")
    s.add_argument("--group", required=True, metavar="GROUP")
    s.add_argument("--element", required=True, metavar="ELEMENT")

    for name in ("tensor", "tor"):
        s = cmd(name, help=f"{name} product of two groups")
        s.add_argument("left", metavar="G")
        s.add_argument("right", metavar="H")

    s = cmd("invariants", help="p-primary exponent profiles I and L")
    s.add_argument("group", metavar="GROUP")
    s.add_argument("--prime", type=int, default=None)

    for name, flag in (("star", "one-sided-free"), ("star2", "one-sided")):
        s = cmd(name, help=f"interleaving condition {'(*)' if name == 'star' else '(**)'}")
        s.add_argument("left", metavar="G")
        s.add_argument("right", metavar="H")
        s.add_argument("--prime", type=int, required=True)

    s = cmd("nf", help="normal form of an element of a finite p-group")
    s.add_argument("--group", required=True, metavar="GROUP")
    s.add_argument("--element", required=True, metavar="ELEMENT")
    s.add_argument("--prime", type=int, default=None,
                   help="defaults to the group's unique prime")
    s.add_argument("--augment", type=int, default=None, metavar="L",
                   help="normal form of (e, p^L) in G + Z instead")

    s = cmd("aut-equiv", help="does an automorphism map e1 to e2?")
    s.add_argument("--group", required=True, metavar="GROUP")
    s.add_argument("--e1", required=True, metavar="ELEMENT")
    s.add_argument("--e2", required=True, metavar="ELEMENT")

    s = cmd("cone", help="K-groups of the mapping cone of the unit inclusion")
    _add_triple_flags(s)

    s = cmd("dual", help="Spanier-Whitehead dual on K-groups")
    s.add_argument("--k0", required=True, metavar="GROUP")
    s.add_argument("--k1", required=True, metavar="GROUP")

    s = cmd("kunneth", help="K-groups of a tensor product")
    s.add_argument("--a-k0", required=True, metavar="GROUP")
    s.add_argument("--a-k1", required=True, metavar="GROUP")
    s.add_argument("--b-k0", required=True, metavar="GROUP")
    s.add_argument("--b-k1", required=True, metavar="GROUP")

    s = cmd("reciprocal", help="the reciprocal partner triple")
    _add_triple_flags(s)

    s = cmd("homotopy", help="homotopy groups of Aut(A) from the triple")
    _add_triple_flags(s)

    s = cmd("classify", help="ISOMORPHIC / RECIPROCAL / DISTINCT for two triples")
    _add_triple_flags(s, prefix="a-")
    _add_triple_flags(s, prefix="b-")

    s = cmd("verify", help="run verification suites")
    s.add_argument("suite", nargs="?", default=None,
                   help=f"one of: {', '.join(SUITE_NAMES)} (default: all)")
    s.add_argument("--bounds", default=None,
                   metavar="primes=2,3;exp=3;factors=2;rank=2[;content=4;order=64]")
    return p


def _run(args) -> tuple[int, object, str]:
    """Returns (exit code, json payload, text rendering)."""
    cmd = args.command
    if cmd == "normalize":
        g = parse_group(args.group)
        payload = dict(group_to_json(g),
                       invariant_factors=g.invariant_factors())
        inv = ", ".join(str(d) for d in g.invariant_factors()) or "-"
        return EXIT_OK, payload, (f"{render_group(g)}\n"
                                  f"invariant factors: {inv}")
    if cmd == "snf":
        m = _parse_matrix(args.matrix)
        s, u, v = snf(m)
        payload = {"s": s.to_rows(), "u": u.to_rows(), "v": v.to_rows()}
        text = "\n".join(f"{k} = {rows}" for k, rows in payload.items())
        return EXIT_OK, payload, text
    if cmd == "quotient":
        g = parse_group(args.group)
        elems = [parse_element(e, g) for e in args.element]
        q = quotient_by(g, elems)
        return EXIT_OK, group_to_json(q), render_group(q)
    if cmd == "order":
        g = parse_group(args.group)
        n = element_order(parse_element(args.element, g))
        return EXIT_OK, {"order": n}, "INFINITE" if n is None else str(n)
    if cmd in ("tensor", "tor"):
        g, h = parse_group(args.left), parse_group(args.right)
        out = (tensor if cmd == "tensor" else tor)(g, h)
        return EXIT_OK, group_to_json(out), render_group(out)
    if cmd == "invariants":
        g = parse_group(args.group)
        primes = [args.prime] if args.prime else list(g.primes())
        payload = {}
        lines = []
        for p in primes:
            prof = invariant_I(g, p)
            payload[str(p)] = {"exponents": list(prof.exponents),
                               "length": prof.length, "max": prof.max_exp}
            exps = ",".join(map(str, prof.exponents))
            lines.append(f"p={p}: I={{{exps}}} L={prof.length} max={prof.max_exp}")
        return EXIT_OK, payload, "\n".join(lines) or "no torsion"
    if cmd in ("star", "star2"):
        g, h = parse_group(args.left), parse_group(args.right)
        fn = satisfies_star if cmd == "star" else satisfies_star_star
        ok = fn(g, h, args.prime)
        return EXIT_OK, {"holds": ok}, str(ok).lower()
    if cmd == "nf":
        g = parse_group(args.group)
        e = parse_element(args.element, g)
        primes = g.primes()
        p = args.prime or (primes[0] if len(primes) == 1 else None)
        if p is None:
            raise DomainError("ambiguous prime; pass --prime")
        if args.augment is None:
            d = g1_normal_form(g, e, p)
            q = g2_quotient_closed_form(d)
            tt = None
        else:
            d = g3_normal_form(g, e, args.augment, p)
            q, tt = g4_quotient_closed_form(d)
        payload = {"p": d.p, "l": d.l, "untouched": list(d.untouched),
                   "k": list(d.k), "r": list(d.r), "mode": d.mode.value,
                   "quotient": group_to_json(q)}
        text = (f"p={d.p}  l={d.l}  untouched={list(d.untouched)}  "
                f"k={list(d.k)}  r={list(d.r)}  mode={d.mode.value}\n"
                f"quotient: {render_group(q)}")
        if tt is not None:
            payload["t_tilde"] = element_to_json(tt)
            text += f"\nt~ = {render_element(tt)}"
        return EXIT_OK, payload, text
    if cmd == "aut-equiv":
        g = parse_group(args.group)
        ok = aut_sends(g, parse_element(args.e1, g), parse_element(args.e2, g))
        return EXIT_OK, {"equivalent": ok}, str(ok).lower()
    if cmd == "cone":
        pair = cone_k(_parse_triple(args))
        text = f"k0={render_group(pair.k0)}  k1={render_group(pair.k1)}"
        return EXIT_OK, _pair_json(pair), text
    if cmd == "dual":
        pair = sw_dual_pair(KPair(parse_group(args.k0), parse_group(args.k1)))
        text = f"k0={render_group(pair.k0)}  k1={render_group(pair.k1)}"
        return EXIT_OK, _pair_json(pair), text
    if cmd == "kunneth":
        a = KPair(parse_group(args.a_k0), parse_group(args.a_k1))
        b = KPair(parse_group(args.b_k0), parse_group(args.b_k1))
        pair = kunneth_pair(a, b)
        text = f"k0={render_group(pair.k0)}  k1={render_group(pair.k1)}"
        return EXIT_OK, _pair_json(pair), text
    if cmd == "reciprocal":
        rt = reciprocal(_parse_triple(args))
        return EXIT_OK, _triple_json(rt), _triple_text(rt)
    if cmd == "homotopy":
        prof = aut_homotopy(_parse_triple(args))
        payload = {"pi_odd": group_to_json(prof.pi_odd),
                   "pi_even": group_to_json(prof.pi_even)}
        text = (f"pi_odd={render_group(prof.pi_odd)}  "
                f"pi_even={render_group(prof.pi_even)}")
        return EXIT_OK, payload, text
    if cmd == "classify":
        verdict = classify_triples(_parse_triple(args, "a-"),
                                   _parse_triple(args, "b-"))
        return EXIT_OK, {"verdict": verdict.value}, verdict.value
    if cmd == "verify":
        bounds = _parse_bounds(args.bounds)
        if args.suite is not None and args.suite not in SUITE_NAMES:
            raise ParseError(f"unknown suite {args.suite!r}; choose from "
                             f"{', '.join(SUITE_NAMES)}", 0)
        reports = (run_all_suites(bounds) if args.suite is None
                   else [run_suite(args.suite, bounds)])
        payload = [r.to_json() for r in reports]
        text = "\n".join(r.render_text() for r in reports)
        code = EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY
        return code, payload, text
    raise AssertionError(f"unhandled command {cmd}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, payload, text = _run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(json.dumps(payload, indent=2) if args.json else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
