"""Campaign settings loader.

Loads tolerances, parameter grids and size budgets from the packaged JSON
data file instead of scattering constants across modules.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any

# Path to campaigns.json (relative to this file)
SETTINGS_FILE = Path(__file__).parent.parent / "data" / "campaigns.json"


@dataclass(frozen=True)
class Tolerances:
    """
    Numeric tolerances shared by every report row.

    Attributes:
        strict_margin: Required gap for strict inequalities (lhs < rhs - margin)
        slack: Allowed excess for non-strict inequalities (lhs <= rhs + slack)
        equality: Absolute tolerance for equality rows
        spectral: Residual tolerance handed to power iteration
    """

    strict_margin: float = 1e-6
    slack: float = 1e-9
    equality: float = 1e-8
    spectral: float = 1e-10

    def __post_init__(self) -> None:
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not value > 0:
                raise ValueError(f"Tolerance {field.name} must be > 0, got {value}")

    def with_overrides(self, **overrides: float | None) -> Tolerances:
        """Copy with every non-None override applied (CLI flags pass None when unset)."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class GridSettings:
    deltas: tuple[int, ...]
    n_offsets: tuple[int, ...]

    def points(self) -> list[tuple[int, int]]:
        """(delta, n) pairs with n = 2*delta^2 + offset."""
        return [(d, 2 * d * d + off) for d in self.deltas for off in self.n_offsets]


@dataclass(frozen=True)
class TheoremSettings:
    edge_probabilities: tuple[float, ...]
    max_attempts: int


@dataclass(frozen=True)
class Lemma23Settings:
    s_max: int
    p_max: int
    t_min: int
    t_max: int
    n_max: int


@dataclass(frozen=True)
class Limits:
    """Size budgets for exhaustive procedures."""

    criterion_order: int = 24
    oracle_order: int = 12
    oracle_edges: int = 32
    labeled_scan_order: int = 6
    stream_scan_order: int = 12
    small_eigen_size: int = 8
    max_order: int = 63
    power_iterations: int = 1_000_000


@dataclass(frozen=True)
class Settings:
    tolerances: Tolerances
    grid: GridSettings
    theorem: TheoremSettings
    lemma23: Lemma23Settings
    limits: Limits


def _section(data: dict[str, Any], name: str) -> dict[str, Any]:
    try:
        section = data[name]
    except KeyError as e:
        raise ValueError(f"Settings file {SETTINGS_FILE} is missing section '{name}'") from e
    if not isinstance(section, dict):
        raise ValueError(f"Settings section '{name}' must be an object, got {type(section).__name__}")
    return section


def parse_settings(data: dict[str, Any]) -> Settings:
    """
    Build Settings from the decoded JSON document.

    Raises:
        ValueError: If a section is missing or carries unknown/invalid keys
    """
    try:
        grid = _section(data, "grid")
        theorem = _section(data, "theorem")
        return Settings(
            tolerances=Tolerances(**_section(data, "tolerances")),
            grid=GridSettings(
                deltas=tuple(grid["deltas"]), n_offsets=tuple(grid["n_offsets"])
            ),
            theorem=TheoremSettings(
                edge_probabilities=tuple(theorem["edge_probabilities"]),
                max_attempts=theorem["max_attempts"],
            ),
            lemma23=Lemma23Settings(**_section(data, "lemma23")),
            limits=Limits(**_section(data, "limits")),
        )
    except (KeyError, TypeError) as e:
        raise ValueError(f"Malformed settings file {SETTINGS_FILE}: {e}") from e


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    """
    Load campaign settings from the packaged JSON data file.

    Returns:
        Frozen Settings

    Raises:
        FileNotFoundError: If campaigns.json is missing
        ValueError: If the file is not valid JSON or a section is malformed

    Example:
        >>> settings = load_settings()
        >>> settings.tolerances.strict_margin
        1e-06
        >>> settings.limits.criterion_order
        24
    """
    if not SETTINGS_FILE.exists():
        raise FileNotFoundError(
            f"Settings data file not found: {SETTINGS_FILE}\n"
            f"Expected location: src/spectral_parity/data/campaigns.json"
        )

    with open(SETTINGS_FILE, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"Settings file {SETTINGS_FILE} is not valid JSON: {e}") from e

    return parse_settings(data)
