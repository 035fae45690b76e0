"""Run configuration: defaults, INI file loading and validation."""

from __future__ import annotations

import configparser
import dataclasses
import os
from dataclasses import dataclass, field

from .fields import factor_prime_power

__all__ = ["ConfigError", "ENV_VAR", "FORMATS", "RunConfig", "load_config_file"]

ENV_VAR = "CARLITZ_CONFIG"
FORMATS = ("json", "csv", "text")


class ConfigError(ValueError):
    """Invalid flags or configuration; maps to exit status 2."""


@dataclass(frozen=True)
class RunConfig:
    """Everything a run depends on.

    Precision fields left as None fall back to each suite's own defaults
    (the values the acceptance suite uses); setting one overrides it for every
    suite that has that parameter.
    """

    suites: tuple = ()
    q: int | None = None
    ext_deg: int | None = None
    u_prec: int | None = None
    t_prec: int | None = None
    tau_order: int | None = None
    deg_max: int | None = None
    K: int | None = None
    tol: float | None = None
    n: int | None = None
    seed: int = 0
    triples: int = 200
    format: str = "json"
    out: str | None = None
    jobs: int = 1
    timing: bool = False
    moduli: dict = field(default_factory=dict, hash=False)

    def validate(self, known_suites=None) -> "RunConfig":
        for name in ("u_prec", "t_prec", "tau_order", "deg_max", "K", "ext_deg", "n", "triples", "jobs"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ConfigError(f"{name.replace('_', '-')} must be positive, got {v}")
        if self.tol is not None and not self.tol > 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if self.q is not None:
            try:
                factor_prime_power(self.q)
            except ValueError as exc:
                raise ConfigError(f"q={self.q} is not a prime power") from exc
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}; choose from {', '.join(FORMATS)}")
        if known_suites is not None:
            bad = [s for s in self.suites if s not in known_suites]
            if bad:
                raise ConfigError(f"unknown suite(s): {', '.join(bad)}")
        return self

    def replace(self, **kw) -> "RunConfig":
        return dataclasses.replace(self, **kw)

    def params(self) -> dict:
        """Echo of the parameters that affect results (no output plumbing)."""
        skip = {"format", "out", "jobs", "timing", "suites", "moduli"}
        d = {f.name: getattr(self, f.name) for f in dataclasses.fields(self) if f.name not in skip}
        if self.moduli:
            d["moduli"] = {f"{p}^{k}": list(v) for (p, k), v in sorted(self.moduli.items())}
        return d


_INT = {"q", "ext_deg", "u_prec", "t_prec", "tau_order", "deg_max", "K", "n", "seed", "triples", "jobs"}
_FLOAT = {"tol"}
_BOOL = {"timing"}
_STR = {"format", "out"}


def load_config_file(path: str) -> dict:
    """Read an INI file into RunConfig keyword arguments.

    Keys may sit in a ``[run]`` section or at the top of the file (a ``[run]``
    header is injected).  A ``[moduli]`` section maps ``p^k`` to comma-separated
    irreducible polynomial coefficients, low degree first.
    """
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    cp = configparser.ConfigParser()
    cp.optionxform = str
    try:
        cp.read_string(text if text.lstrip().startswith("[") else "[run]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    out: dict = {}
    if cp.has_section("run"):
        for key, raw in cp.items("run"):
            k = key.replace("-", "_")
            try:
                if k in _INT:
                    out[k] = int(raw)
                elif k in _FLOAT:
                    out[k] = float(raw)
                elif k in _BOOL:
                    out[k] = cp.getboolean("run", key)
                elif k in _STR:
                    out[k] = raw
                elif k == "suites":
                    out[k] = tuple(s.strip() for s in raw.replace(",", " ").split() if s.strip())
                else:
                    raise ConfigError(f"{path}: unknown key {key!r}")
            except ValueError as exc:
                raise ConfigError(f"{path}: bad value for {key}: {raw!r}") from exc
    if cp.has_section("moduli"):
        mods = {}
        for key, raw in cp.items("moduli"):
            try:
                p, k = (int(x) for x in key.split("^"))
                mods[(p, k)] = tuple(int(x) for x in raw.split(","))
            except ValueError as exc:
                raise ConfigError(f"{path}: bad modulus entry {key} = {raw}") from exc
        out["moduli"] = mods
    return out


def config_path(flag_value: str | None) -> str | None:
    """The --config flag wins over the environment variable."""
    return flag_value or os.environ.get(ENV_VAR) or None
