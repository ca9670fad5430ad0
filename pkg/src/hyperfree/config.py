"""
Settings - budgets and logging options resolved from arguments, environment and YAML
"""

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Dict, Optional

import yaml
from loguru import logger

DEFAULT_CONFIG_FILE = "config/hyperfree.yml"


@dataclass(frozen=True)
class Budgets:
    """Work limits; exceeding one raises ResourceBudgetError"""

    enumeration_points: int = 5_000_000
    monomial_basis: int = 6000
    saito_attempts: int = 10_000
    minor_count: int = 500_000
    lattice_flats: int = 200_000

    def validate(self) -> bool:
        """Validate budget values"""
        for name, value in self.__dict__.items():
            if value <= 0:
                raise ValueError(f"Budget '{name}' must be positive, got {value}")
        return True


@dataclass(frozen=True)
class Settings:
    """Runtime settings for library calls and the CLI"""

    budgets: Budgets = field(default_factory=Budgets)
    log_directory: Optional[str] = None
    workers: int = 1

    def validate(self) -> bool:
        """Validate settings"""
        self.budgets.validate()
        if self.workers <= 0:
            raise ValueError("Worker count must be positive")
        return True

    def with_budgets(self, **overrides: int) -> "Settings":
        """Return a copy with some budgets replaced"""
        return replace(self, budgets=replace(self.budgets, **overrides))


_ENV_BUDGETS = {
    "enumeration_points": "HYPERFREE_ENUMERATION_POINTS",
    "monomial_basis": "HYPERFREE_MONOMIAL_BASIS",
    "saito_attempts": "HYPERFREE_SAITO_ATTEMPTS",
    "minor_count": "HYPERFREE_MINOR_COUNT",
    "lattice_flats": "HYPERFREE_LATTICE_FLATS",
}

_current: Optional[Settings] = None


def _load_yaml(config_file: str) -> Dict:
    """
    Load the `hyperfree` section of a YAML configuration file

    Args:
        config_file: Path to YAML configuration file

    Returns:
        Dictionary with configuration values (empty if missing or unreadable)
    """
    config_path = Path(config_file)

    if not config_path.exists():
        logger.debug(f"Config file not found: {config_file}")
        return {}

    try:
        with open(config_path) as f:
            config = yaml.safe_load(f) or {}
            return config.get("hyperfree", {}) or {}
    except Exception as e:
        logger.warning(f"Failed to load config {config_file}: {e}")
        return {}


def load_settings(
    config_file: str = DEFAULT_CONFIG_FILE,
    log_directory: Optional[str] = None,
    workers: Optional[int] = None,
    **budget_overrides: Optional[int],
) -> Settings:
    """
    Resolve settings (priority order: arg > env > config > default)

    Args:
        config_file: Path to YAML configuration file
        log_directory: Directory for rotating log files
        workers: Thread pool size for batch commands
        **budget_overrides: Explicit budget values, None entries are ignored

    Returns:
        Validated Settings instance
    """
    try:
        from dotenv import load_dotenv

        load_dotenv()
    except ImportError:
        logger.debug("python-dotenv not available, skipping .env file")

    config = _load_yaml(config_file)
    config_budgets = config.get("budgets", {}) or {}
    defaults = Budgets()

    resolved = {}
    for name, env_name in _ENV_BUDGETS.items():
        value = budget_overrides.get(name)
        if value is None and os.getenv(env_name):
            value = int(os.environ[env_name])
        if value is None:
            value = config_budgets.get(name, getattr(defaults, name))
        resolved[name] = int(value)

    settings = Settings(
        budgets=Budgets(**resolved),
        log_directory=log_directory
        or os.getenv("HYPERFREE_LOG_DIR")
        or config.get("log_directory"),
        workers=int(
            workers or os.getenv("HYPERFREE_WORKERS") or config.get("workers", 1)
        ),
    )
    settings.validate()

    logger.debug(f"Settings resolved: {settings}")
    return settings


def get_settings() -> Settings:
    """Return the process-wide settings, loading defaults on first use"""
    global _current
    if _current is None:
        _current = Settings()
    return _current


def set_settings(settings: Settings) -> None:
    """Install process-wide settings (used by the CLI after flag parsing)"""
    global _current
    settings.validate()
    _current = settings
