"""Main evaluation functions and verification tables."""

import warnings
from itertools import product

import pandas as pd

from KOSTKA import bijection
from KOSTKA import combinat
from KOSTKA import fermionic
from KOSTKA import lr
from KOSTKA import paths
from KOSTKA import rigged
from KOSTKA import tableaux
from KOSTKA import utils

CLASSICAL_METHODS = ("paths", "lr", "rc", "fermionic")
LEVEL_METHODS = ("paths", "lr", "rc", "fermionic", "mn", "weyl")


def classical_level(lam):
    """A level at which the level restriction is empty: |lam| (at least 1)."""
    return max(sum(lam), 1)


def kostka(lam, rects, ell=None, params=None):
    """K_{lam R}(q), or K^ell_{lam R}(q), by the method chosen in params.

    The possible methods are described below and are selected by the `method` key of
    `params` (see default_params.yaml).

    Args:
        lam: partition with n parts, n being the rank (trailing zeros included)
        rects: sequence of (height, width)
        ell: level, or None for the classical polynomial
        params: dict with parameters to overwrite default params or a path to a yaml file

    Methods:
        paths: energy generating function of classically (or level-ell) restricted paths
        lr: generalized charge over LR tableaux (charge_method selects the statistic)
        rc: charge generating function of rigged configurations
        fermionic: quasiparticle sum, or its inclusion-exclusion form at level ell
        mn: quadratic form sum over the (m,n)-system
        weyl: alternating sum over S_n and the root lattice

    Returns:
        QPoly
    """
    params = utils.parse_parameters(params)
    method = params["method"]
    lam = tuple(lam)
    rects = combinat.rect_seq(rects)

    if params["verbose"]:
        print(f"\n---- Computing K for lam={lam}, R={rects}, ell={ell} with method {method}")

    if method == "paths":
        return paths.kostka_via_paths(
            lam, rects, ell, processes=params["processes"], verbose=params["verbose"]
        )
    if method == "lr":
        return lr.kostka_via_lr(lam, rects, ell, params["charge_method"])
    if method == "rc":
        return rigged.kostka_via_rc(lam, rects, ell)
    if method == "fermionic":
        if ell is None:
            return fermionic.fermionic_kostka(lam, rects)
        return fermionic.fermionic_level_kostka(lam, rects, ell)
    if ell is None:
        ell = classical_level(lam)
    if method == "mn":
        return fermionic.kostka_level_mn(lam, rects, ell)
    return fermionic.kostka_level_weyl(lam, rects, ell)


def rects_to_str(rects):
    """Text form 'HxW,HxW,...'."""
    return ",".join(f"{h}x{w}" for h, w in rects)


def parse_rects(text):
    """Inverse of rects_to_str; the empty string gives the empty sequence."""
    text = text.strip()
    if not text:
        return ()
    rects = []
    for item in text.split(","):
        h, w = item.strip().lower().split("x")
        rects.append((int(h), int(w)))
    return combinat.rect_seq(rects)


def _rect_sequences(total, shapes, max_height):
    """Ordered sequences of rectangles from shapes with total number of cells."""
    shapes = [(h, w) for h, w in shapes if h <= max_height]
    if total == 0:
        yield ()
        return
    for h, w in shapes:
        if h * w <= total:
            for rest in _rect_sequences(total - h * w, shapes, max_height):
                yield ((h, w),) + rest


def grid(params):
    """Instances (lam, R, ell) of the verification grid.

    The rank runs over 2..grid_max_rank, |lam| over 1..grid_max_size, rectangles are
    drawn from grid_rects with fewer than n rows, and ell is None (classical) or runs over
    1..grid_max_level, skipping levels below lam_1 - lam_n or a rectangle width.
    """
    shapes = [tuple(r) for r in params["grid_rects"]]
    instances = []
    for n in range(2, params["grid_max_rank"] + 1):
        for total in range(1, params["grid_max_size"] + 1):
            lams = [combinat.partition(p, n) for p in combinat.partitions_of(total, n)]
            seqs = list(_rect_sequences(total, shapes, n - 1))
            for lam, rects in product(lams, seqs):
                instances.append((lam, rects, None))
                widest = max(max(w for _, w in rects), lam[0] - lam[-1])
                for ell in range(max(widest, 1), params["grid_max_level"] + 1):
                    instances.append((lam, rects, ell))
    return instances


def _evaluate(method, lam, rects, ell, charge_method):
    params = {"method": method, "charge_method": charge_method}
    return kostka(lam, rects, ell, params)


def _verify_worker(inputs, instance):
    """All evaluations of one instance as a table row.

    A failing evaluator, for whatever reason, gives an error cell and a mismatch.
    """
    charge_method = inputs
    lam, rects, ell = instance
    methods = CLASSICAL_METHODS if ell is None else LEVEL_METHODS
    level = "classical" if ell is None else ell
    row = {"n": len(lam), "lambda": lam, "rects": rects_to_str(rects), "ell": level}
    values = []
    for method in methods:
        try:
            poly = _evaluate(method, lam, rects, ell, charge_method)
            row[method] = combinat.poly_to_str(poly)
            values.append(poly)
        except Exception as err:
            row[method] = f"error: {type(err).__name__}"
            values.append(err)
    row["match"] = all(not isinstance(v, Exception) for v in values) and all(
        v == values[0] for v in values
    )
    return row


def verify_all(params=None, instances=None):
    """Run every evaluator over the verification grid.

    Args:
        params: dict with parameters to overwrite default params or a path to a yaml file
        instances: optional list of (lam, R, ell) replacing the grid

    Returns:
        pandas.DataFrame with one row per instance, one column per method and a
        boolean `match` column
    """
    params = utils.parse_parameters(params)
    if params["verbose"]:
        utils.print_settings(params)
    if instances is None:
        instances = grid(params)

    rows = utils.parallel_proc(
        _verify_worker,
        instances,
        params["charge_method"],
        processes=params["processes"],
        desc="Verifying",
        verbose=params["verbose"],
    )
    df = pd.DataFrame(rows)

    if params["verbose"]:
        print(f"\n---- {int((~df['match']).sum())} mismatches in {len(df)} instances")
    return df


def verify_bijection(lam, rects, ell=None, max_length=6):
    """Check psi_bar on LR(lam; R) against RC(lam; R).

    Every tableau is mapped to a rigged configuration and back. The checks are the
    inverse property, validity of the image, equality of the generalized charge (by the
    symmetric group average when L <= max_length) with the rigged charge, the complement
    identity c(theta(rc)) = ||R|| - cc(rc), and agreement of the level restrictions when
    ell is given. Bijectivity is checked by comparing the image with RC(lam; R).

    Returns:
        (pandas.DataFrame with one row per tableau, list of counterexample dicts)
    """
    lam = tuple(lam)
    rects = combinat.rect_seq(rects)
    n = len(lam)
    average = len(rects) <= max_length
    norm = combinat.norm(rects)

    rows, counterexamples, image = [], [], set()
    for qt in lr.enumerate_lr(lam, rects):
        rc = bijection.psi_bar(qt, n)
        image.add(rc)
        row = {
            "tableau": tableaux.tableau_to_str(qt.tableau),
            "rigged": rigged.rc_to_str(rc),
            "valid": rigged.is_valid(rc),
            "inverse": bijection.psi_bar_inverse(rc) == qt,
            "charge": (lr.charge(qt, "via_average") == rigged.rc_charge(rc)) if average else None,
            "theta": rigged.rc_charge(rigged.theta(rc)) == norm - rigged.rc_cocharge(rc)
            and rigged.theta(rigged.theta(rc)) == rc,
        }
        if ell is not None:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                row["level"] = lr.is_level_restricted_lr(
                    qt, ell, n
                ) == rigged.is_level_restricted_rc(rc, ell)
        row["ok"] = all(v is not False for k, v in row.items() if k not in ("tableau", "rigged"))
        rows.append(row)
        if not row["ok"]:
            counterexamples.append(row)

    target = set()
    for config in rigged.enumerate_configs(lam, rects):
        target.update(rigged.enumerate_riggings(config))
    if image != target:
        counterexamples.append(
            {
                "tableau": None,
                "rigged": None,
                "missing": len(target - image),
                "extra": len(image - target),
            }
        )

    return pd.DataFrame(rows), counterexamples


def skew_grid(params):
    """Instances (lam, rho, R, ell) for the skew restriction checker.

    rho runs over the partitions contained in lam (the empty one included), R over the
    sequences of grid_rects with fewer than n rows filling |lam| - |rho| cells, and ell
    over the levels up to grid_max_level allowed by lam and R.
    """
    shapes = [tuple(r) for r in params["grid_rects"]]
    instances = []
    for n in range(2, params["grid_max_rank"] + 1):
        for total in range(1, params["skew_max_size"] + 1):
            for lam in (combinat.partition(p, n) for p in combinat.partitions_of(total, n)):
                for inner in range(total):
                    for rho in combinat.partitions_of(inner, n):
                        rho = combinat.partition(rho, n)
                        if any(r > p for r, p in zip(rho, lam)):
                            continue
                        for rects in _rect_sequences(total - inner, shapes, n - 1):
                            widest = max(max(w for _, w in rects), lam[0] - lam[-1])
                            for ell in range(max(widest, 1), params["grid_max_level"] + 1):
                                instances.append((lam, rho, rects, ell))
    return instances


def _skew_worker(inputs, instance):
    del inputs
    lam, rho, rects, ell = instance
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        result = bijection.check_skew_conjecture(lam, rho, rects, ell)
    return {"lambda": lam, "rho": rho, "rects": rects_to_str(rects), "ell": ell, **result}


def verify_skew(params=None, instances=None):
    """Experimental check of the skew restriction of psi_bar over a grid.

    Returns:
        pandas.DataFrame with one row per instance and a boolean `match` column; the
        discrepancies are also reported with warnings.warn
    """
    params = utils.parse_parameters(params)
    if instances is None:
        instances = skew_grid(params)

    rows = utils.parallel_proc(
        _skew_worker,
        instances,
        None,
        processes=params["processes"],
        desc="Skew check",
        verbose=params["verbose"],
    )
    df = pd.DataFrame(rows)
    if len(df):
        for _, row in df[~df["match"]].iterrows():
            warnings.warn(
                f"skew restriction differs for lam={row['lambda']}, rho={row['rho']}, "
                f"R={row['rects']}, ell={row['ell']}"
            )
    return df
