"""JSON run configurations for the command-line front end.

A config is a single JSON object; numbers are parsed as doubles. Fields:

    mode          "fit" | "eval" | "tp-check" (optional; checked against
                  the subcommand when present)
    nodes         required list of node values
    coefficients  optional, default 1 per node
    scale         optional positive number, default 1
    weights       optional, default 1 per node
    points        control or data points (list of [x, y] or [x, y, z])
    params        fit parameters, one per point
    max_iter      optional, default 20
    tol           optional, default 0
    grid          optional grid size for basis tables, default 101
    out           optional output directory
"""

import json
from dataclasses import asdict, dataclass

from .basis import NodeSet, validate_node_set, validate_weights
from .pia import FitProblem


class ConfigError(ValueError):
    """Invalid or inconsistent run configuration."""


_FIELDS = ("mode", "nodes", "coefficients", "scale", "weights", "points",
           "params", "max_iter", "tol", "grid", "out")
_MODES = ("fit", "eval", "tp-check")


@dataclass
class RunConfig:
    mode: str | None = None
    nodes: list | None = None
    coefficients: list | None = None
    scale: float = 1.0
    weights: list | None = None
    points: list | None = None
    params: list | None = None
    max_iter: int = 20
    tol: float = 0.0
    grid: int = 101
    out: str | None = None


def load_config(path) -> RunConfig:
    """Load and structurally validate a JSON config file."""
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: config must be a JSON object")
    unknown = set(raw) - set(_FIELDS)
    if unknown:
        raise ConfigError(f"{path}: unknown config fields {sorted(unknown)}")
    cfg = RunConfig(**raw)
    if cfg.mode is not None and cfg.mode not in _MODES:
        raise ConfigError(f"mode must be one of {_MODES}, got {cfg.mode!r}")
    if cfg.nodes is None:
        raise ConfigError("config requires a 'nodes' field")
    if cfg.max_iter < 1:
        raise ConfigError("max_iter must be at least 1")
    if cfg.tol < 0:
        raise ConfigError("tol must be non-negative")
    if cfg.grid < 1:
        raise ConfigError("grid must be at least 1")
    return cfg


def save_config(cfg: RunConfig, path):
    """Write a config back out; load_config(save_config(c)) is equivalent to c."""
    data = {k: v for k, v in asdict(cfg).items() if v is not None}
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def config_node_set(cfg: RunConfig) -> NodeSet:
    try:
        return validate_node_set(cfg.nodes, cfg.coefficients, cfg.scale)
    except ValueError as exc:
        raise ConfigError(f"invalid node set: {exc}") from exc


def config_weights(cfg: RunConfig, ns: NodeSet):
    try:
        return validate_weights(ns, cfg.weights)
    except ValueError as exc:
        raise ConfigError(f"invalid weights: {exc}") from exc


def config_fit_problem(cfg: RunConfig) -> FitProblem:
    ns = config_node_set(cfg)
    w = config_weights(cfg, ns)
    if cfg.points is None:
        raise ConfigError("fit config requires a 'points' field")
    if cfg.params is None:
        raise ConfigError("fit config requires a 'params' field")
    try:
        return FitProblem(cfg.points, cfg.params, ns, w)
    except ValueError as exc:
        raise ConfigError(f"invalid fit problem: {exc}") from exc
