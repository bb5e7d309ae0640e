"""Configuration management for the spread workbench.

This module loads computation caps, pool size, seed and log level from
environment variables (optionally via a ``.env`` file).
"""

import os
from dataclasses import dataclass, asdict, replace
from typing import Any, Dict, Optional

from dotenv import load_dotenv


# Graph values store adjacency rows in machine words; this is not overridable upward.
HARD_MAX_ORDER = 64
HARD_ENUM_MAX_N = 9


@dataclass(frozen=True)
class WorkbenchConfig:
    """Workbench configuration loaded from environment variables."""

    log_level: str = "INFO"
    threads: int = 4
    seed: int = 20240101
    max_order: int = HARD_MAX_ORDER
    enum_max_n: int = 8
    canon_exact_max_n: int = 10
    minor_max_n: int = 14
    search_max_n: int = 8
    psi_max_s: int = 10
    dense_max_n: int = 2000
    mader_factor: float = 10.0

    @classmethod
    def from_env(cls) -> "WorkbenchConfig":
        """Load configuration from environment variables.

        Returns:
            WorkbenchConfig: Configuration instance with values from environment

        Raises:
            ValueError: If a variable is not a number or is out of range
        """
        load_dotenv()

        config = cls(
            log_level=os.getenv("WORKBENCH_LOG_LEVEL", "INFO").upper(),
            threads=_int_env("WORKBENCH_THREADS", cls.threads),
            seed=_int_env("WORKBENCH_SEED", cls.seed),
            max_order=_int_env("WORKBENCH_MAX_ORDER", cls.max_order),
            enum_max_n=_int_env("WORKBENCH_ENUM_MAX_N", cls.enum_max_n),
            canon_exact_max_n=_int_env("WORKBENCH_CANON_EXACT_MAX_N", cls.canon_exact_max_n),
            minor_max_n=_int_env("WORKBENCH_MINOR_MAX_N", cls.minor_max_n),
            search_max_n=_int_env("WORKBENCH_SEARCH_MAX_N", cls.search_max_n),
            psi_max_s=_int_env("WORKBENCH_PSI_MAX_S", cls.psi_max_s),
            dense_max_n=_int_env("WORKBENCH_DENSE_MAX_N", cls.dense_max_n),
            mader_factor=_float_env("WORKBENCH_MADER_FACTOR", cls.mader_factor),
        )
        config.validate()
        return config

    def validate(self) -> None:
        """Validate configuration ranges."""
        if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Invalid log level: {self.log_level}")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        if not 1 <= self.max_order <= HARD_MAX_ORDER:
            raise ValueError(f"max_order must be between 1 and {HARD_MAX_ORDER}")
        if not 1 <= self.enum_max_n <= HARD_ENUM_MAX_N:
            raise ValueError(f"enum_max_n must be between 1 and {HARD_ENUM_MAX_N}")
        if self.canon_exact_max_n < 1:
            raise ValueError("canon_exact_max_n must be positive")
        if not 1 <= self.minor_max_n <= HARD_MAX_ORDER:
            raise ValueError("minor_max_n must be between 1 and 64")
        if not 1 <= self.search_max_n <= HARD_ENUM_MAX_N:
            raise ValueError(f"search_max_n must be between 1 and {HARD_ENUM_MAX_N}")
        if self.psi_max_s < 2:
            raise ValueError("psi_max_s must be at least 2")
        if self.dense_max_n < 1:
            raise ValueError("dense_max_n must be positive")
        if self.mader_factor <= 0:
            raise ValueError("mader_factor must be positive")

    def with_overrides(self, **overrides: Any) -> "WorkbenchConfig":
        """Return a copy with some fields replaced (the CLI ``--caps`` flag).

        Args:
            **overrides: Field names and new values

        Returns:
            WorkbenchConfig: Validated copy

        Raises:
            ValueError: If a field is unknown or a value is out of range
        """
        known = set(asdict(self))
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise ValueError(f"Unknown configuration keys: {', '.join(unknown)}")
        updated = replace(self, **overrides)
        updated.validate()
        return updated

    def as_dict(self) -> Dict[str, Any]:
        """Get configuration as a plain dictionary for reports."""
        return asdict(self)


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def _float_env(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"{name} must be a number, got {raw!r}") from None


# Global config instance
_config: Optional[WorkbenchConfig] = None


def get_config() -> WorkbenchConfig:
    """Get the global configuration instance.

    Returns:
        WorkbenchConfig: The global configuration instance
    """
    global _config
    if _config is None:
        _config = WorkbenchConfig.from_env()
    return _config


def set_config(config: WorkbenchConfig) -> None:
    """Install a configuration instance (used after CLI overrides)."""
    global _config
    _config = config


def reset_config() -> None:
    """Reset the global configuration instance (useful for testing)."""
    global _config
    _config = None
