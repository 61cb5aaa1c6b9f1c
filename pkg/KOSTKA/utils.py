"""Utils module."""

import multiprocessing
import os
from functools import partial

import yaml
from tqdm import tqdm


class KostkaError(Exception):
    """Base class of all errors raised by KOSTKA."""


class SizeMismatch(KostkaError):
    """The shape and the rectangles do not have the same number of cells."""


class NonRectangular(KostkaError):
    """An affine operation was requested on a non-rectangular tableau."""


class InternalInconsistency(KostkaError):
    """A combinatorial object that must be unique or exist was not found."""


class DomainMismatch(KostkaError):
    """A relabeling map was applied to a tableau of the wrong family."""


class TooLarge(KostkaError):
    """The requested evaluation is too expensive for this method."""


class LevelTooSmall(KostkaError):
    """The level is smaller than lambda_1 - lambda_n or than a rectangle width."""


class BadWitness(KostkaError):
    """A witness tableau is not column-strict over the required alphabet."""


class MissingPadString(KostkaError):
    """A zero-labeled padding string is absent from a rigged configuration."""


class BadLevel(KostkaError):
    """The level of a weight does not match the level of the crystal."""


class NoStabilization(KostkaError):
    """The branching approximants did not stabilize before the cap on M."""


def parse_parameters(params=None):
    """Load default parameters and merge with user specified parameters.

    Args:
        params: dict of parameters or path to a yaml file (missing keys take default values)

    Returns:
        dict of parameters
    """
    if params is None:
        params = {}
    elif isinstance(params, str):
        with open(params, "rb") as f:
            params = yaml.safe_load(f) or {}
    else:
        params = dict(params)

    file = os.path.dirname(__file__) + "/default_params.yaml"
    with open(file, "rb") as f:
        defaults = yaml.safe_load(f)

    if "KOSTKA_GRID_MAX" in os.environ and "grid_max_size" not in params:
        defaults["grid_max_size"] = int(os.environ["KOSTKA_GRID_MAX"])

    # merge dictionaries without duplications
    for key in defaults.keys():
        if key not in params.keys():
            params[key] = defaults[key]

    check_parameters(params)

    return params


def check_parameters(params):
    """Check parameter validity"""

    pars = [
        "method",
        "charge_method",
        "processes",
        "verbose",
        "average_max_length",
        "max_M",
        "truncation_degree",
        "grid_max_size",
        "grid_max_rank",
        "grid_max_level",
        "grid_rects",
        "skew_max_size",
        "fermionic_m_cap",
    ]

    for p in pars:
        assert p in list(params.keys()), f"Parameter {p} is not specified!"

    assert params["method"] in ["paths", "lr", "rc", "fermionic", "mn", "weyl"], "Unknown method!"
    assert params["charge_method"] in ["via_bijection", "via_average"], "Unknown charge method!"
    assert params["max_M"] >= 2, "Stabilization needs at least two approximants!"
    assert params["truncation_degree"] >= 0, "Truncation degree must be nonnegative!"
    assert params["grid_max_size"] >= 1, "Verification grid must contain at least one cell!"
    for h, w in params["grid_rects"]:
        assert h >= 1 and w >= 1, "Grid rectangles must have positive sides!"


def print_settings(params):
    """Print parameters to screen"""

    print("\n---- Settings: \n")

    for x in params:
        print(x, ":", params[x])


def parallel_proc(fun, iterable, inputs, processes=-1, desc="", verbose=True):
    """Distribute an iterable function between processes"""

    if processes == -1:
        processes = multiprocessing.cpu_count()

    if processes > 1 and len(iterable) > 1:
        with multiprocessing.Pool(processes=processes) as pool:
            fun = partial(fun, inputs)
            result = list(
                tqdm(pool.imap(fun, iterable), total=len(iterable), desc=desc, disable=not verbose)
            )
    else:
        result = [fun(inputs, i) for i in tqdm(iterable, desc=desc, disable=not verbose)]

    return result
