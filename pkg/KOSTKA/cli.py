"""Command line interface.

Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on usage errors and
on domain errors raised by the library.
"""

import json
import sys
from functools import wraps

import click

from KOSTKA import branching
from KOSTKA import combinat
from KOSTKA import main
from KOSTKA import utils
from KOSTKA.utils import KostkaError

SCHEMA = "kostka/1"


def _fail_on_error(fun):
    """Turn library errors into exit code 2."""

    @wraps(fun)
    def wrapper(*args, **kwargs):
        try:
            return fun(*args, **kwargs)
        except (KostkaError, AssertionError) as err:
            click.echo(f"Error: {type(err).__name__}: {err}", err=True)
            sys.exit(2)

    return wrapper


def _partition(text, n):
    try:
        return combinat.partition([int(x) for x in text.split(",") if x.strip()], n)
    except (ValueError, AssertionError) as err:
        raise click.BadParameter(f"{text!r} is not a partition with at most {n} parts") from err


def _rects(text):
    try:
        return main.parse_rects(text)
    except (ValueError, AssertionError) as err:
        raise click.BadParameter(f"{text!r} is not a list of HxW rectangles") from err


def _pair(text, name):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError as err:
        raise click.BadParameter(f"{name} must be two comma-separated integers") from err
    return a, b


def _echo_json(payload):
    click.echo(json.dumps({"schema": SCHEMA, **payload}, default=str))


@click.group()
def cli():
    """Level-restricted generalized Kostka polynomials and affine branching functions."""


@cli.command("kostka")
@click.option("--n", "n", type=int, default=None, help="Rank (number of parts of lambda).")
@click.option("--lambda", "lam", default=None, help="Partition, e.g. 3,2,1.")
@click.option("--rects", default=None, help="Rectangles HxW in order, e.g. 1x2,1x1.")
@click.option("--ell", type=int, default=None, help="Level (classical polynomial if omitted).")
@click.option(
    "--method",
    type=click.Choice(["paths", "lr", "rc", "fermionic", "mn", "weyl"]),
    default=None,
    help="Evaluator (default from the parameter file).",
)
@click.option("--verify-all", is_flag=True, help="Compare every evaluator.")
@click.option("--json", "as_json", is_flag=True, help="JSON output.")
@click.option("--threads", type=int, default=1, help="Number of processes (-1 for all cores).")
@click.option("--params", "params_file", default=None, help="Yaml file overriding defaults.")
@_fail_on_error
def kostka_cmd(n, lam, rects, ell, method, verify_all, as_json, threads, params_file):
    """Compute K_{lam R}(q) or K^ell_{lam R}(q)."""
    params = utils.parse_parameters(params_file)
    params["processes"] = threads
    if method is not None:
        params["method"] = method

    single = lam is not None or rects is not None
    if single and (n is None or lam is None or rects is None):
        raise click.UsageError("--n, --lambda and --rects are needed together")
    if not single and not verify_all:
        raise click.UsageError("give --n, --lambda and --rects, or --verify-all")

    if verify_all:
        instances = [(_partition(lam, n), _rects(rects), ell)] if single else None
        df = main.verify_all(params, instances)
        if as_json:
            _echo_json({"rows": df.to_dict(orient="records")})
        else:
            click.echo(df.to_string(index=False))
        sys.exit(0 if df["match"].all() else 1)

    lam = _partition(lam, n)
    rects = _rects(rects)
    poly = main.kostka(lam, rects, ell, params)
    if as_json:
        _echo_json(
            {
                "lambda": list(lam),
                "rects": main.rects_to_str(rects),
                "ell": ell,
                "method": params["method"],
                "poly": json.loads(combinat.poly_to_json(poly)),
            }
        )
    else:
        click.echo(combinat.poly_to_str(poly))


@cli.command("verify-bijection")
@click.option("--n", "n", type=int, required=True, help="Rank (number of parts of lambda).")
@click.option("--lambda", "lam", required=True, help="Partition, e.g. 3,3,2,1.")
@click.option("--rects", required=True, help="Rectangles HxW in order.")
@click.option("--ell", type=int, default=None, help="Also compare level restrictions.")
@click.option("--json", "as_json", is_flag=True, help="JSON output.")
@_fail_on_error
def verify_bijection_cmd(n, lam, rects, ell, as_json):
    """Check the bijection between LR tableaux and rigged configurations."""
    df, counterexamples = main.verify_bijection(_partition(lam, n), _rects(rects), ell)
    if as_json:
        _echo_json(
            {"rows": df.to_dict(orient="records"), "counterexamples": counterexamples}
        )
    else:
        click.echo(df.to_string(index=False))
        click.echo(f"{len(df)} tableaux, {len(counterexamples)} counterexamples")
    sys.exit(1 if counterexamples else 0)


@cli.command("branching")
@click.option("--n", "n", type=int, default=None, help="Rank (checked against --weight).")
@click.option("--level-split", required=True, help="ell',ell'' with Lambda'' = ell'' Lambda_0.")
@click.option("--weight", required=True, help="Lambda as z_0,...,z_{n-1}.")
@click.option("--rs", default="0,1", help="r,s with Lambda' = r Lambda_s + (ell'-r) Lambda_0.")
@click.option("--trunc", type=int, default=None, help="Truncation degree.")
@click.option(
    "--method",
    type=click.Choice(["limit", "fermionic", "both"]),
    default="limit",
    help="Limit of Kostka polynomials, fermionic formula, or both compared.",
)
@click.option("--threads", type=int, default=1, help="Number of processes (-1 for all cores).")
@click.option("--json", "as_json", is_flag=True, help="JSON output.")
@click.option("--params", "params_file", default=None, help="Yaml file overriding defaults.")
@_fail_on_error
def branching_cmd(n, level_split, weight, rs, trunc, method, threads, as_json, params_file):
    """Compute the branching function of Lambda in Lambda' (x) Lambda''."""
    params = utils.parse_parameters(params_file)
    Lam = branching.cl_weight(weight)
    if n is not None and n != Lam.n:
        raise click.UsageError(f"--weight has {Lam.n} coefficients but --n is {n}")
    ellprime, elldoubleprime = _pair(level_split, "--level-split")
    if min(ellprime, elldoubleprime) < 1 or ellprime + elldoubleprime != Lam.level:
        raise click.UsageError(
            f"--level-split {ellprime},{elldoubleprime} does not split the level {Lam.level} of "
            "--weight into two positive levels"
        )
    r, s = _pair(rs, "--rs")
    D = params["truncation_degree"] if trunc is None else trunc

    results = {}
    status = 0
    if method == "both":
        out = branching.compare_branching(
            Lam, r, s, ellprime, D, max_M=params["max_M"], m_cap=params["fermionic_m_cap"]
        )
        results = {"limit": out["limit"], "fermionic": out["fermionic"]}
        status = 0 if out["coeffs_match"] else 1
    elif method == "limit":
        results["limit"] = branching.branching_series(
            Lam, r, s, ellprime, elldoubleprime, D, max_M=params["max_M"], processes=threads
        )
    else:
        results["fermionic"] = branching.branching_fermionic(
            Lam, r, s, ellprime, D, m_cap=params["fermionic_m_cap"]
        )

    if as_json:
        _echo_json(
            {
                name: {
                    "offset": str(series.offset),
                    "coeffs": {str(e): c for e, c in sorted(series.coeffs.items())},
                    "truncation_degree": series.truncation_degree,
                }
                for name, series in results.items()
            }
        )
    else:
        for name, series in results.items():
            prefix = f"{name}: " if len(results) > 1 else ""
            click.echo(prefix + combinat.series_to_str(series))
    sys.exit(status)


@cli.command("conjecture-skew")
@click.option("--max-size", type=int, default=None, help="Largest |lambda| (EXPERIMENTAL).")
@click.option("--threads", type=int, default=1, help="Number of processes (-1 for all cores).")
@click.option("--json", "as_json", is_flag=True, help="JSON output.")
@click.option("--params", "params_file", default=None, help="Yaml file overriding defaults.")
@_fail_on_error
def conjecture_skew_cmd(max_size, threads, as_json, params_file):
    """EXPERIMENTAL: compare the skew restrictions on both sides of the bijection."""
    params = utils.parse_parameters(params_file)
    params["processes"] = threads
    if max_size is not None:
        params["skew_max_size"] = max_size

    df = main.verify_skew(params)
    bad = df[~df["match"]] if len(df) else df
    if as_json:
        _echo_json(
            {
                "experimental": True,
                "instances": len(df),
                "discrepancies": bad.to_dict(orient="records"),
            }
        )
    else:
        click.echo("EXPERIMENTAL skew restriction check")
        click.echo(f"{len(df)} instances, {len(bad)} discrepancies")
        if len(bad):
            click.echo(bad.to_string(index=False))
