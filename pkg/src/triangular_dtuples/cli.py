"""Command-line interface.

Usage:
    dtuples admissible 100
    dtuples solve 1 --bound 1000
    dtuples check 1 4 25
    dtuples check-values 5050 5653
    dtuples extend 1 --count 3
    dtuples enumerate --bound 1000 --oracle

Every command accepts ``--format text|json|csv``. JSON output is the
envelope ``{command, parameters, result, elapsed_ms}`` with sorted keys.
CSV output has one header row followed by one row per atomic result:

    admissible    n,admissible,n_factors,n1_factors,violation
    solve         n,a,x_star,y_star,parity_valid,m_values,next_m
    check         i,j,root
    check-values  u,v,root
    extend        n,m1,m2,root_n_m1,root_n_m2,root_m1_m2
    enumerate     seed,m,root

Exit codes: 0 success or positive answer, 1 negative answer, 2 usage or
domain error, 3 internal consistency failure.
"""
from __future__ import annotations

import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable

import click

from .arith import Factorization
from .errors import ConsistencyError, DomainError, NoPairsError
from .pell import fundamental_bounds, fundamental_solutions, make_problem, solution_classes
from .sieve import admissible as admissible_check
from .sieve import brute_force_pairs, enumerate_pairs
from .tuples import build_triples, check_tuple, check_value_tuple, index_sequence, parity_valid

__all__ = ["cli", "main"]

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

EXPERIMENTAL_NOTICE = "experimental: a != -1 (pair extension holds for all a; enumeration is proven only for a = -1)"

FORMATS = click.Choice(["text", "json", "csv"])


@dataclass
class Outcome:
    result: dict[str, Any]
    header: list[str]
    rows: list[list[Any]]
    text: list[str]
    exit_code: int = EXIT_OK
    notices: list[str] = field(default_factory=list)


def _factors(f: Factorization) -> list[list[int]]:
    return [[p, e] for p, e in f.factors]


def _emit(command: str, params: dict[str, Any], fmt: str, start: float, outcome: Outcome) -> None:
    if fmt == "json":
        if outcome.notices:
            outcome.result["notices"] = outcome.notices
        envelope = {
            "command": command,
            "parameters": params,
            "result": outcome.result,
            "elapsed_ms": int((time.perf_counter() - start) * 1000),
        }
        click.echo(json.dumps(envelope, sort_keys=True, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(outcome.header)
        writer.writerows([[str(v) for v in row] for row in outcome.rows])
        click.echo(buf.getvalue(), nl=False)
        for note in outcome.notices:
            click.echo(note, err=True)
    else:
        for note in outcome.notices:
            click.echo(f"note: {note}", err=True)
        for line in outcome.text:
            click.echo(line)
    sys.exit(outcome.exit_code)


def _run(command: str, params: dict[str, Any], fmt: str, body: Callable[[], Outcome]) -> None:
    start = time.perf_counter()
    try:
        outcome = body()
    except DomainError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    except NoPairsError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NEGATIVE)
    except ConsistencyError as exc:
        click.echo(f"internal consistency failure: {exc}", err=True)
        sys.exit(EXIT_INTERNAL)
    _emit(command, params, fmt, start, outcome)


def _format_option(f):
    return click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)(f)


def _property_option(f):
    return click.option(
        "--property", "a", type=int, default=-1, show_default=True, help="The a in D(a): products plus a must be squares."
    )(f)


def _notices(a: int) -> list[str]:
    return [] if a == -1 else [EXPERIMENTAL_NOTICE]


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """D(a)-pairs and triples of triangular numbers."""


@cli.command()
@click.argument("n", type=int)
@_format_option
def admissible(n, fmt):
    """Factorization test for n and n+1 (necessary for a D(-1)-pair)."""

    def body():
        res = admissible_check(n)
        verdict = "admissible" if res.admissible else "inadmissible"
        text = [f"n = {n}: {verdict}", f"  n   = {res.n_factors}", f"  n+1 = {res.n1_factors}"]
        text += [f"  violation: {v}" for v in res.violations]
        return Outcome(
            result={
                "n": n,
                "admissible": res.admissible,
                "n_factors": _factors(res.n_factors),
                "n1_factors": _factors(res.n1_factors),
                "violations": list(res.violations),
            },
            header=["n", "admissible", "n_factors", "n1_factors", "violation"],
            rows=[[n, res.admissible, res.n_factors, res.n1_factors, res.violation or ""]],
            text=text,
            exit_code=EXIT_OK if res.admissible else EXIT_NEGATIVE,
        )

    _run("admissible", {"n": n}, fmt, body)


@cli.command()
@click.argument("n", type=int)
@_property_option
@click.option("--bound", "bound", type=int, default=1000, show_default=True, help="Largest index m to list.")
@_format_option
def solve(n, a, bound, fmt):
    """Fundamental solutions and partner indices m <= bound for T_n."""

    def body():
        if bound < 1:
            raise DomainError(f"bound must be positive, got {bound}")
        p = make_problem(n, a)
        y_bound, x_bound = fundamental_bounds(p)
        fundamentals = fundamental_solutions(p)
        classes = []
        m_list: set[int] = set()
        rows, text = [], []
        text.append(f"x^2 - {p.D} y^2 = {p.N}   (n={n}, a={a}, unit=({p.unit[0]}, {p.unit[1]}))")
        text.append(f"bounds: 0 < y* <= {y_bound}, |x*| <= {x_bound}")
        text.append("fundamental solutions: " + (", ".join(f"({f.x_star}, {f.y_star})" for f in fundamentals) or "none"))
        for c in solution_classes(p):
            ok = parity_valid(c)
            entry = {"fundamental": [c.fundamental.x_star, c.fundamental.y_star], "parity_valid": ok}
            if ok:
                terms = []
                next_m = None
                for t in index_sequence(p, c):
                    if t.m > bound:
                        next_m = t.m
                        break
                    if t.retained:
                        terms.append(t.m)
                m_list.update(terms)
                entry.update(m=terms, truncated=True, next_m=next_m, next_m_digits=len(str(next_m)))
                shown = ", ".join(map(str, terms)) or "-"
                text.append(
                    f"class ({c.fundamental.x_star}, {c.fundamental.y_star}): m = {shown}, ... "
                    f"[truncated; next m = {next_m}, {len(str(next_m))} digits]"
                )
                rows.append([n, a, c.fundamental.x_star, c.fundamental.y_star, True, " ".join(map(str, terms)), next_m])
            else:
                text.append(f"class ({c.fundamental.x_star}, {c.fundamental.y_star}): not of the form x = 4r, y = 2m + 1")
                rows.append([n, a, c.fundamental.x_star, c.fundamental.y_star, False, "", ""])
            classes.append(entry)
        m_sorted = sorted(m_list)
        text.append(f"partners m <= {bound}: " + (", ".join(map(str, m_sorted)) or "none"))
        return Outcome(
            result={
                "problem": {"n": n, "a": a, "D": p.D, "N": p.N, "unit": list(p.unit)},
                "bounds": {"y_bound": y_bound, "x_bound": x_bound},
                "experimental": p.experimental,
                "fundamental_solutions": [[f.x_star, f.y_star] for f in fundamentals],
                "classes": classes,
                "m_list": m_sorted,
            },
            header=["n", "a", "x_star", "y_star", "parity_valid", "m_values", "next_m"],
            rows=rows,
            text=text,
            exit_code=EXIT_OK if any(c["parity_valid"] for c in classes) else EXIT_NEGATIVE,
            notices=_notices(a) + (["N > 0: positive-N fundamental bounds in use"] if p.experimental else []),
        )

    _run("solve", {"n": n, "property": a, "bound": bound}, fmt, body)


def _tuple_outcome(report, labels, a) -> Outcome:
    pairs = [{labels[0]: i, labels[1]: j, "root": r} for i, j, r in report.pair_results]
    text = [f"{'valid' if report.is_valid else 'invalid'} D({a})-tuple: {{{', '.join(map(str, report.indices))}}}"]
    for i, j, r in report.pair_results:
        text.append(f"  ({i}, {j}): " + (f"root {r}" if r is not None else "not a square"))
    return Outcome(
        result={"elements": list(report.indices), "a": a, "valid": report.is_valid, "pairs": pairs},
        header=[labels[0], labels[1], "root"],
        rows=[[i, j, "" if r is None else r] for i, j, r in report.pair_results],
        text=text,
        exit_code=EXIT_OK if report.is_valid else EXIT_NEGATIVE,
        notices=_notices(a),
    )


@cli.command()
@click.argument("indices", type=int, nargs=-1, required=True)
@_property_option
@_format_option
def check(indices, a, fmt):
    """Check whether {T_i : i in INDICES} is a D(a)-tuple."""
    _run(
        "check",
        {"indices": list(indices), "property": a},
        fmt,
        lambda: _tuple_outcome(check_tuple(indices, a), ("i", "j"), a),
    )


@cli.command("check-values")
@click.argument("values", type=int, nargs=-1, required=True)
@_property_option
@_format_option
def check_values(values, a, fmt):
    """Check whether the plain integers VALUES form a D(a)-tuple."""
    _run(
        "check-values",
        {"values": list(values), "property": a},
        fmt,
        lambda: _tuple_outcome(check_value_tuple(values, a), ("u", "v"), a),
    )


@cli.command()
@click.argument("n", type=int)
@click.option("--count", type=int, default=3, show_default=True, help="Number of triples to build.")
@_property_option
@_format_option
def extend(n, count, a, fmt):
    """Build D(a)-triples {T_n, T_m_k, T_m_k+1} from the Pell solution classes."""

    def body():
        triples = build_triples(n, a, count)
        out, rows, text = [], [], []
        for rep in triples:
            m1, m2 = (i for i in rep.indices if i != n)
            roots = [rep.root(n, m1), rep.root(n, m2), rep.root(m1, m2)]
            out.append({"indices": [n, m1, m2], "roots": {"n_m1": roots[0], "n_m2": roots[1], "m1_m2": roots[2]}})
            rows.append([n, m1, m2, *roots])
            text.append(f"{{{n}, {m1}, {m2}}}  roots {roots[0]}, {roots[1]}, {roots[2]}")
        return Outcome(
            result={"n": n, "a": a, "triples": out},
            header=["n", "m1", "m2", "root_n_m1", "root_n_m2", "root_m1_m2"],
            rows=rows,
            text=text,
            notices=_notices(a),
        )

    _run("extend", {"n": n, "count": count, "property": a}, fmt, body)


@cli.command("enumerate")
@click.option("--bound", type=int, default=1000, show_default=True, help="Largest index C to search.")
@click.option("--oracle", is_flag=True, help="Cross-check against the pairwise brute-force scan.")
@_format_option
def enumerate_cmd(bound, oracle, fmt):
    """All n <= bound with T_n in a D(-1)-pair of triangular numbers."""

    def body():
        report = enumerate_pairs(bound)
        steps, rows, text = [], [], []
        for i, s in enumerate(report.steps, 1):
            steps.append({"seed": s.seed, "discovered": list(s.discovered), "roots": [w.r for w in s.witnesses]})
            rows += [[s.seed, w.m, w.r] for w in s.witnesses] or [[s.seed, "", ""]]
            text.append(f"step {i}: seed {s.seed} -> " + (", ".join(map(str, s.discovered)) or "none"))
        text.append("result: {" + ", ".join(map(str, report.result)) + "}")
        result = {"bound": bound, "steps": steps, "result": list(report.result)}
        code = EXIT_OK
        if oracle:
            brute = brute_force_pairs(bound)
            match = brute == list(report.result)
            result["oracle"] = {"match": match, "brute_force": brute}
            text.append(f"oracle: {'match' if match else 'MISMATCH'}")
            if not match:
                code = EXIT_INTERNAL
        return Outcome(result=result, header=["seed", "m", "root"], rows=rows, text=text, exit_code=code)

    _run("enumerate", {"bound": bound, "oracle": oracle}, fmt, body)


def main(argv=None):
    cli.main(args=argv, prog_name="dtuples")


if __name__ == "__main__":
    main()
