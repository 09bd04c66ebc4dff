"""Resource caps and the key=value configuration file."""
from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from .errors import ResourceLimit

DEGREE_CAP = 10_000
ENUMERATION_CAP = 10**6
MATRIX_ENUMERATION_CAP = 10**7
DEFAULT_SEED = 20240611


@dataclass(frozen=True)
class Settings:
    degree_cap: int = DEGREE_CAP
    enumeration_cap: int = ENUMERATION_CAP
    matrix_enumeration_cap: int = MATRIX_ENUMERATION_CAP
    seed: int = DEFAULT_SEED
    jobs: int = 1

    def __post_init__(self):
        for name in ("degree_cap", "enumeration_cap", "matrix_enumeration_cap", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


_KEYS = {
    "caps.degree": "degree_cap",
    "caps.enumeration": "enumeration_cap",
    "caps.matrix_enumeration": "matrix_enumeration_cap",
    "seed": "seed",
    "jobs": "jobs",
}


def load_settings(path: str | Path, base: Settings | None = None) -> Settings:
    """Read ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in _KEYS:
            raise ValueError(f"{path}:{lineno}: unknown setting {key!r}")
        values[_KEYS[key]] = int(value.strip())
    return replace(base or Settings(), **values)


def check_cap(what: str, needed: int, cap: int) -> None:
    if needed > cap:
        raise ResourceLimit(what, needed, cap)
