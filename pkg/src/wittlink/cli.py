"""Command-line entry point: one-shot exact computations and reports.

Subcommands: witt, field, linking, monodromy, reciprocity, bridge,
verify-all.  Global flags --format {text,json,csv}, --seed N, --jobs N.

Exit codes: 0 success, 1 usage or parse error, 2 domain violation
(ramified prime, non-coprime level, non-unit, ...), 3 verification
mismatch.

JSON output is schema-stable with top-level keys {command, config,
rows|report, verdict} and contains exact integers only; every float is a
display field suffixed _display.  Identical inputs produce byte-identical
output for equal config (for that reason wall times appear in text output
only).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import DomainViolation, ParseError
from .rings import Polynomial, RingElement, RingSpec, primes_below
from .witt import WittVector, frobenius, ghost, split_counit, teichmuller, witt_add, witt_mul
from .cft import (
    AbelianField,
    abelian_field,
    conductor,
    cyclotomic_field,
    linking_hom,
    quadratic_field_subgroup,
    ramified_set,
    rationals_field,
    split_invariants,
    subgroup_generated,
)
from .orbits import (
    cc_fiber,
    cc_fiber_infinite_level,
    closed_orbit_labels,
    decompose,
    deninger_packet,
    packet_fiber_over_label,
    reciprocity_row,
)
from .bridge import bridge_compare
from .verify import VerifyConfig, run_all


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by table and grid commands."""

    max_prime: int = 100
    levels: tuple = ()
    cyclotomic_bound: int = 40
    output_format: str = "text"
    seed: int = 20240901
    parallelism: int = 1


# --------------------------------------------------------------------------
# literal parsing


def parse_ring(text: str) -> RingSpec:
    s = text.strip()
    if s in ("Z", "z"):
        return RingSpec.integers()
    if s in ("Q", "q"):
        return RingSpec.rationals()
    head, rest = s[:1].upper(), s[1:]
    if rest.isdigit():
        n = int(rest)
        if head == "F":
            return RingSpec.prime_field(n)
        if head == "Z":
            return RingSpec.mod_ring(n)
        if head == "C":
            return RingSpec.cyclotomic(n)
    raise ParseError(f"unknown ring {text!r}; use Z, Q, F<p>, Z<n> or C<n>")


def _skip_spaces(s: str, i: int) -> int:
    while i < len(s) and s[i].isspace():
        i += 1
    return i


def parse_poly_literal(text: str, spec: RingSpec, var: str = "t") -> Polynomial:
    """Parse integer-coefficient literals such as ``1-5t+6t^2``."""
    s = text
    terms: dict[int, int] = {}
    i = _skip_spaces(s, 0)
    if i >= len(s):
        raise ParseError("empty polynomial literal")
    first = True
    while i < len(s):
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i = _skip_spaces(s, i + 1)
        elif not first:
            raise ParseError(f"expected '+' or '-' at position {i}: {s[i:i+8]!r}")
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        coef = int(s[i:j]) if j > i else None
        i = _skip_spaces(s, j)
        exp = 0
        if i < len(s) and s[i] == var:
            exp = 1
            i += 1
            if i < len(s) and s[i] == "^":
                i += 1
                j = i
                while j < len(s) and s[j].isdigit():
                    j += 1
                if j == i:
                    raise ParseError(f"expected exponent digits at position {i}: {s[i:i+8]!r}")
                exp = int(s[i:j])
                i = j
        elif coef is None:
            raise ParseError(f"expected a coefficient or '{var}' at position {i}: {s[i:i+8]!r}")
        terms[exp] = terms.get(exp, 0) + sign * (1 if coef is None else coef)
        first = False
        i = _skip_spaces(s, i)
    top = max(terms)
    return Polynomial.from_ints(spec, [terms.get(k, 0) for k in range(top + 1)])


def _strip_outer_parens(s: str) -> str:
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for idx, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and idx != len(s) - 1:
                    return s
        s = s[1:-1].strip()
    return s


def parse_witt_literal(text: str, spec: RingSpec) -> WittVector:
    """Parse ``P`` or ``P/Q`` with polynomial literals P, Q."""
    depth = 0
    split_at = None
    for idx, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced ')' at position {idx}")
        elif ch == "/" and depth == 0:
            if split_at is not None:
                raise ParseError("more than one top-level '/' in a rational literal")
            split_at = idx
    if depth != 0:
        raise ParseError("unbalanced '(' in literal")
    if split_at is None:
        return WittVector.from_polys(parse_poly_literal(_strip_outer_parens(text), spec))
    num = parse_poly_literal(_strip_outer_parens(text[:split_at]), spec)
    den = parse_poly_literal(_strip_outer_parens(text[split_at + 1 :]), spec)
    return WittVector.from_polys(num, den)


def parse_field(ns: argparse.Namespace) -> AbelianField:
    if getattr(ns, "quadratic", None) is not None:
        return quadratic_field_subgroup(ns.quadratic)
    if getattr(ns, "cyclotomic", None) is not None:
        n = ns.cyclotomic
        sub = getattr(ns, "subgroup", None)
        if not sub:
            return cyclotomic_field(n)
        try:
            gens = [int(x) for x in sub.replace(" ", "").split(",") if x]
        except ValueError as exc:
            raise ParseError(f"bad subgroup literal {sub!r}: comma-separated integers") from exc
        return abelian_field(n, subgroup_generated(n, gens))
    return rationals_field()


# --------------------------------------------------------------------------
# output plumbing


@dataclass
class Output:
    command: str
    config: dict
    payload_key: str  # "rows" or "report"
    payload: object
    verdict: str
    text_lines: list
    csv_header: list
    csv_rows: list


def _emit(out: Output, fmt: str) -> None:
    if fmt == "json":
        doc = {
            "command": out.command,
            "config": out.config,
            out.payload_key: out.payload,
            "verdict": out.verdict,
        }
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(out.csv_header)
        for row in out.csv_rows:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        for line in out.text_lines:
            print(line)


def _length_fields(p: int, f: int) -> dict:
    return {
        "circle_length": {"prime": p, "exponent": f},
        "circle_length_display": round(f * math.log(p), 6),
    }


# --------------------------------------------------------------------------
# commands


_WITT_ARITY = {"add": 2, "mul": 2, "frob": 2, "ghost": 1, "teich": 1, "split": 1}


def cmd_witt(ns: argparse.Namespace) -> tuple[int, Output]:
    spec = parse_ring(ns.ring)
    op = ns.witt_op
    if len(ns.args) != _WITT_ARITY[op]:
        raise ParseError(f"witt {op} takes {_WITT_ARITY[op]} operand(s), got {len(ns.args)}")
    if op in ("add", "mul"):
        f = parse_witt_literal(ns.args[0], spec)
        g = parse_witt_literal(ns.args[1], spec)
        result = witt_add(f, g) if op == "add" else witt_mul(f, g)
        rendered = str(result)
    elif op == "frob":
        if not ns.args[0].lstrip("-").isdigit():
            raise ParseError(f"witt frob needs an integer index, got {ns.args[0]!r}")
        n = int(ns.args[0])
        f = parse_witt_literal(ns.args[1], spec)
        result = frobenius(n, f)
        rendered = str(result)
    elif op == "ghost":
        f = parse_witt_literal(ns.args[0], spec)
        rendered = str(ghost(f, ns.precision))
    elif op == "teich":
        if not ns.args[0].lstrip("-").isdigit():
            raise ParseError(f"witt teich needs an integer, got {ns.args[0]!r}")
        a = RingElement.of(spec, int(ns.args[0]))
        rendered = str(teichmuller(a))
    else:  # split
        f = parse_witt_literal(ns.args[0], spec)
        rendered = str(split_counit(f))
    row = {"operation": op, "ring": str(spec), "inputs": list(ns.args), "result": rendered}
    out = Output(
        command="witt",
        config={"ring": str(spec), "operation": op},
        payload_key="rows",
        payload=[row],
        verdict="ok",
        text_lines=[rendered],
        csv_header=["operation", "ring", "result"],
        csv_rows=[[op, str(spec), rendered]],
    )
    return 0, out


def cmd_field(ns: argparse.Namespace) -> tuple[int, Output]:
    F = parse_field(ns)
    sub = ns.field_op
    if sub == "split":
        if ns.prime is None:
            raise ParseError("field split needs --prime")
        data = split_invariants(F, ns.prime)
        row = {
            "field": F.describe(),
            "prime": ns.prime,
            "f": data.residue_degree,
            "r": data.num_primes,
            "norm": data.norm,
            "artin_rep": data.artin_class.rep,
            "artin_modulus": data.artin_class.modulus,
        }
        text = [
            f"f={data.residue_degree} r={data.num_primes} "
            f"artin={data.artin_class.rep} mod {data.artin_class.modulus} norm={data.norm}"
        ]
        header = ["field", "prime", "f", "r", "norm", "artin_rep"]
        rows = [[F.describe(), ns.prime, data.residue_degree, data.num_primes, data.norm, data.artin_class.rep]]
    elif sub == "conductor":
        c = conductor(F)
        row = {"field": F.describe(), "conductor": c}
        text = [str(c)]
        header = ["field", "conductor"]
        rows = [[F.describe(), c]]
    else:  # ramified
        R = sorted(ramified_set(F))
        row = {"field": F.describe(), "ramified": R}
        text = [" ".join(str(p) for p in R) if R else "(none)"]
        header = ["field", "ramified"]
        rows = [[F.describe(), " ".join(map(str, R))]]
    out = Output(
        command="field",
        config={"field": F.describe(), "operation": sub},
        payload_key="rows",
        payload=[row],
        verdict="ok",
        text_lines=text,
        csv_header=header,
        csv_rows=rows,
    )
    return 0, out


def cmd_linking(ns: argparse.Namespace) -> tuple[int, Output]:
    u = linking_hom(ns.prime, ns.level)
    out = Output(
        command="linking",
        config={"prime": ns.prime, "level": ns.level},
        payload_key="rows",
        payload=[{"prime": ns.prime, "level": ns.level, "value": u.value}],
        verdict="ok",
        text_lines=[str(u)],
        csv_header=["prime", "level", "value"],
        csv_rows=[[ns.prime, ns.level, u.value]],
    )
    return 0, out


def cmd_monodromy(ns: argparse.Namespace) -> tuple[int, Output]:
    has_field = ns.quadratic is not None or ns.cyclotomic is not None
    if ns.side == "cc":
        if has_field:
            T = cc_fiber(parse_field(ns), ns.prime)
        else:
            T = cc_fiber_infinite_level(ns.prime, ns.level)
        dec = decompose(T)
        label_info = {}
    else:
        F = parse_field(ns)
        T = deninger_packet(F, ns.prime, ns.level)
        dec = decompose(T)
        labels = closed_orbit_labels(ns.prime, ns.level)
        label_info = {"labels": [lab.base_class for lab in labels]}
        if ns.level % conductor(F) == 0:  # label fibers need the character
            fib = packet_fiber_over_label(T, labels[0])
            label_info["fiber_per_label"] = {
                "count": fib.count,
                "covering_degree": fib.covering_degree,
                **_length_fields(ns.prime, fib.covering_degree),
            }
    rows = [
        {
            "component": list(members),
            "size": dec.covering_degree,
            **_length_fields(dec.base_prime, dec.covering_degree),
        }
        for members in dec.components
    ]
    text = [
        f"side={ns.side} prime={ns.prime} group order {T.group.order} "
        f"monodromy {T.monodromy} mod {T.level}",
        f"components: {dec.count} of size {dec.covering_degree} "
        f"(length {dec.covering_degree}*log({dec.base_prime}) "
        f"~ {dec.circle_length_display():.6f} display-only)",
    ]
    for members in dec.components:
        text.append("  " + " ".join(str(m) for m in members))
    if "fiber_per_label" in label_info:
        fpl = label_info["fiber_per_label"]
        text.append(
            f"fiber over each of {len(label_info['labels'])} closed-orbit labels: "
            f"{fpl['count']} components of size {fpl['covering_degree']}"
        )
    payload = {
        "side": ns.side,
        "prime": ns.prime,
        "level": T.level,
        "monodromy": T.monodromy,
        "group_order": T.group.order,
        "components": rows,
        **label_info,
    }
    out = Output(
        command="monodromy",
        config={"side": ns.side, "prime": ns.prime, "level": ns.level},
        payload_key="report",
        payload=payload,
        verdict="ok",
        text_lines=text,
        csv_header=["component", "size"],
        csv_rows=[[" ".join(map(str, m)), dec.covering_degree] for m in dec.components],
    )
    return 0, out


def _reciprocity_pairs(bound: int) -> list[tuple[int, int]]:
    odd = [p for p in primes_below(bound) if p > 2]
    return [(p, q) for p in odd for q in odd if p != q]


def cmd_reciprocity(ns: argparse.Namespace, cfg: RunConfig) -> tuple[int, Output]:
    if cfg.max_prime < 5:
        raise DomainViolation("--max-prime must be at least 5")
    pairs = _reciprocity_pairs(cfg.max_prime)
    if cfg.parallelism > 1:
        with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
            rows = list(pool.map(lambda pq: reciprocity_row(*pq), pairs))
    else:
        rows = [reciprocity_row(p, q) for p, q in pairs]
    disagreements = [r for r in rows if not r.agree]
    payload = [
        {
            "p": r.p,
            "q": r.q,
            "legendre": r.legendre,
            "cc_count": r.cc_count,
            "deninger_count": r.deninger_count,
            "agree": r.agree,
        }
        for r in rows
    ]
    text = [f"{'p':>4} {'q':>4} {'legendre':>9} {'cc':>3} {'den':>4} agree"]
    text += [
        f"{r.p:>4} {r.q:>4} {r.legendre:>9} {r.cc_count:>3} {r.deninger_count:>4} {str(r.agree).lower()}"
        for r in rows
    ]
    text.append(f"{len(rows)} rows, {len(disagreements)} disagreements")
    out = Output(
        command="reciprocity",
        config={"max_prime": cfg.max_prime},
        payload_key="rows",
        payload=payload,
        verdict="pass" if not disagreements else "fail",
        text_lines=text,
        csv_header=["p", "q", "legendre", "cc_count", "deninger_count", "agree"],
        csv_rows=[[r.p, r.q, r.legendre, r.cc_count, r.deninger_count, r.agree] for r in rows],
    )
    return (0 if not disagreements else 3), out


def cmd_bridge(ns: argparse.Namespace, cfg: RunConfig) -> tuple[int, Output]:
    F = parse_field(ns)
    report = bridge_compare(F, ns.prime, ns.level, seed=cfg.seed)
    doc = report.to_dict()
    text = [
        f"field {report.field_label}, prime {report.prime}, level {report.level} "
        f"(conductor {report.conductor})",
        f"cc side:       {report.cc_side.count} components of size {report.cc_side.covering_degree}",
        f"deninger side: {report.deninger_side.count} components of size "
        f"{report.deninger_side.covering_degree}",
        f"monodromy: cc {report.cc_monodromy.rep} mod {report.cc_monodromy.modulus}, "
        f"deninger {report.deninger_monodromy.rep} mod {report.deninger_monodromy.modulus} "
        f"-> match={str(report.monodromy_match).lower()}",
        f"psi p-part zero: {str(report.psi_zero_ok).lower()}; "
        + "; ".join(f"{name}: {str(ok).lower()}" for name, ok in report.equivariance_checks)
        + f"; anti-equivariance: {str(report.anti_equivariance).lower()}",
        f"match={str(report.match).lower()}",
    ]
    out = Output(
        command="bridge",
        config={"field": report.field_label, "prime": ns.prime, "level": ns.level, "seed": cfg.seed},
        payload_key="report",
        payload=doc,
        verdict="pass" if report.match else "fail",
        text_lines=text,
        csv_header=["field", "prime", "level", "cc_count", "den_count", "cc_f", "den_f", "match"],
        csv_rows=[[
            report.field_label, ns.prime, ns.level,
            report.cc_side.count, report.deninger_side.count,
            report.cc_side.covering_degree, report.deninger_side.covering_degree,
            report.match,
        ]],
    )
    return (0 if report.match else 3), out


def cmd_verify_all(ns: argparse.Namespace, cfg: RunConfig) -> tuple[int, Output]:
    # a reduced cyclotomic bound is quick mode: scale the randomized suites
    # down too unless they were set explicitly
    quick = cfg.cyclotomic_bound < 40
    defaults = VerifyConfig.quick() if quick else VerifyConfig()
    vcfg = VerifyConfig(
        seed=cfg.seed,
        cyclotomic_bound=cfg.cyclotomic_bound,
        max_prime=cfg.max_prime if cfg.max_prime <= 50 else 50,
        reciprocity_prime_bound=cfg.max_prime,
        witt_samples=ns.witt_samples or defaults.witt_samples,
        descent_samples=ns.descent_samples or defaults.descent_samples,
        equivariance_cases=ns.equivariance_cases or defaults.equivariance_cases,
        roundtrip_samples=ns.roundtrip_samples or defaults.roundtrip_samples,
    )
    results = run_all(vcfg)
    all_pass = all(r.passed for r in results)
    payload = [
        {"suite": r.name, "passed": r.passed, "checks": r.checks, "failures": r.failures}
        for r in results
    ]
    text = [r.line() for r in results]
    text.append(f"verdict: {'pass' if all_pass else 'fail'}")
    out = Output(
        command="verify-all",
        config={
            "seed": vcfg.seed,
            "cyclotomic_bound": vcfg.cyclotomic_bound,
            "max_prime": vcfg.max_prime,
            "reciprocity_prime_bound": vcfg.reciprocity_prime_bound,
        },
        payload_key="rows",
        payload=payload,
        verdict="pass" if all_pass else "fail",
        text_lines=text,
        csv_header=["suite", "passed", "checks", "failures"],
        csv_rows=[[r.name, r.passed, r.checks, r.failures] for r in results],
    )
    return (0 if all_pass else 3), out


# --------------------------------------------------------------------------
# argument plumbing


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors -> exit 1, not argparse's 2
        raise ParseError(message)


def _add_field_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cyclotomic", type=int, default=None, metavar="N",
                   help="field inside the level-N cyclotomic field")
    p.add_argument("--subgroup", type=str, default=None, metavar="A,B,...",
                   help="generators of the fixing subgroup (with --cyclotomic)")
    p.add_argument("--quadratic", type=int, default=None, metavar="Q",
                   help="the quadratic field of the odd prime Q")


def build_parser() -> _Parser:
    parser = _Parser(prog="wittlink", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--seed", type=int, default=20240901)
    parser.add_argument("--jobs", type=int, default=1)
    # the same flags are accepted after the subcommand; SUPPRESS keeps a
    # pre-subcommand value alive when the post-subcommand flag is absent
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w = subs.add_parser("witt", help="rational Witt vector arithmetic", parents=[common])
    w.add_argument("witt_op", choices=("add", "mul", "frob", "ghost", "teich", "split"))
    w.add_argument("args", nargs="+", help="operands (polynomial or P/Q literals)")
    w.add_argument("--ring", default="Z", help="Z, Q, F<p>, Z<n> or C<n>")
    w.add_argument("-N", "--precision", type=int, default=8, help="ghost component count")

    f = subs.add_parser("field", help="abelian field invariants", parents=[common])
    f.add_argument("field_op", choices=("split", "conductor", "ramified"))
    _add_field_flags(f)
    f.add_argument("--prime", type=int, default=None)

    l = subs.add_parser("linking", help="level truncation of the linking homomorphism", parents=[common])
    l.add_argument("--prime", type=int, required=True)
    l.add_argument("--level", type=int, required=True)

    m = subs.add_parser("monodromy", help="decomposition tables for either side", parents=[common])
    m.add_argument("--side", choices=("cc", "deninger"), required=True)
    m.add_argument("--prime", type=int, required=True)
    m.add_argument("--level", type=int, required=True)
    _add_field_flags(m)

    r = subs.add_parser("reciprocity", help="component-count table over odd prime pairs", parents=[common])
    r.add_argument("--max-prime", type=int, default=100)

    b = subs.add_parser("bridge", help="side-by-side fiber comparison report", parents=[common])
    _add_field_flags(b)
    b.add_argument("--prime", type=int, required=True)
    b.add_argument("--level", type=int, required=True)

    v = subs.add_parser("verify-all", help="run every acceptance suite", parents=[common])
    v.add_argument("--cyclotomic-bound", type=int, default=40)
    v.add_argument("--max-prime", type=int, default=100)
    v.add_argument("--witt-samples", type=int, default=None,
                   help="random vectors for the ring-law suite (default 200, quick 40)")
    v.add_argument("--descent-samples", type=int, default=None)
    v.add_argument("--equivariance-cases", type=int, default=None)
    v.add_argument("--roundtrip-samples", type=int, default=None)
    return parser


def main(argv: list | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = RunConfig(
            max_prime=getattr(ns, "max_prime", 100),
            cyclotomic_bound=getattr(ns, "cyclotomic_bound", 40),
            output_format=ns.format,
            seed=ns.seed,
            parallelism=ns.jobs,
        )
        if ns.command == "witt":
            code, out = cmd_witt(ns)
        elif ns.command == "field":
            code, out = cmd_field(ns)
        elif ns.command == "linking":
            code, out = cmd_linking(ns)
        elif ns.command == "monodromy":
            code, out = cmd_monodromy(ns)
        elif ns.command == "reciprocity":
            code, out = cmd_reciprocity(ns, cfg)
        elif ns.command == "bridge":
            code, out = cmd_bridge(ns, cfg)
        else:
            code, out = cmd_verify_all(ns, cfg)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(out, ns.format)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
