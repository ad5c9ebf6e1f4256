# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""Configuration management for spiderlab."""

import logging
import os
import yaml
from pathlib import Path
from typing import Dict, Any, Mapping, Optional
from dataclasses import dataclass

logger = logging.getLogger(__name__)

HARD_EDGE_CAP = 12
MAX_EDGES_ENV = "SPIDERLAB_MAX_EDGES"

# Nested YAML sections and the keys flattened out of each
SECTIONS = {
    "oracle": ("max_edges", "prune", "parallel", "workers"),
    "labeling": ("scheme",),
    "mcp": ("mode",),
    "http": ("port", "addr"),
}


@dataclass
class Spiderlab:
    """spiderlab configuration data class."""

    # Oracle settings
    max_edges: int = 10
    prune: bool = True
    parallel: bool = False
    workers: Optional[int] = None

    # Labeling settings
    scheme: str = "auto"

    # MCP settings
    mode: str = "stdio"

    # HTTP settings
    port: int = 63418
    addr: str = "localhost"

    log_level: str = "WARNING"

    def __post_init__(self):
        """Validate configuration after initialization."""
        if (
            isinstance(self.max_edges, bool)
            or not isinstance(self.max_edges, int)
            or not (1 <= self.max_edges <= HARD_EDGE_CAP)
        ):
            raise ValueError(
                f"Invalid max_edges: {self.max_edges}. "
                f"Must be integer between 1-{HARD_EDGE_CAP}"
            )

        if self.workers is not None and (
            not isinstance(self.workers, int) or self.workers < 1
        ):
            raise ValueError(f"Invalid workers: {self.workers}. Must be >= 1")

        self.scheme = str(self.scheme).lower()
        if self.scheme not in ("auto", "a", "b", "c"):
            raise ValueError(
                f"Invalid scheme: {self.scheme}. Must be one of auto, a, b, c"
            )

        if self.mode not in ("http", "stdio"):
            raise ValueError(f"Invalid mode: {self.mode}. Must be 'http' or 'stdio'")

        if not isinstance(self.port, int) or not (1 <= self.port <= 65535):
            raise ValueError(
                f"Invalid port: {self.port}. Must be integer between 1-65535"
            )

        valid_levels = ("DEBUG", "INFO", "WARNING", "ERROR")
        if self.log_level.upper() not in valid_levels:
            raise ValueError(
                f"Invalid log_level: {self.log_level}. Must be one of {valid_levels}"
            )

        # Normalize log level to uppercase
        self.log_level = self.log_level.upper()


class Loader:
    """Handles loading and merging of configuration from files, environment and CLI."""

    @staticmethod
    def load_config_file(config_file: str) -> Dict[str, Any]:
        """Load configuration from YAML file.

        Args:
            config_file: Path to YAML configuration file

        Returns:
            Dictionary with configuration values

        Raises:
            ValueError: If config file doesn't exist or is invalid
        """
        config_path = Path(config_file)
        if not config_path.exists():
            raise ValueError(f"Configuration file does not exist: {config_file}")

        try:
            with open(config_path, "r") as f:
                config = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in configuration file {config_file}: {e}")
        except Exception as e:
            raise ValueError(f"Failed to read configuration file {config_file}: {e}")

        if not isinstance(config, dict):
            raise ValueError(f"Configuration file {config_file} must hold a mapping")

        return Loader._process_config(config)

    @staticmethod
    def _process_config(config: Dict[str, Any]) -> Dict[str, Any]:
        """Flatten the nested oracle.*, labeling.*, mcp.* and http.* settings."""
        processed = {k: v for k, v in config.items() if k not in SECTIONS}

        for section, keys in SECTIONS.items():
            values = config.get(section)
            if not isinstance(values, dict):
                continue
            for key in keys:
                if key in values:
                    processed[key] = values[key]

        return processed

    @staticmethod
    def merge_with_env(
        config: Dict[str, Any], environ: Optional[Mapping[str, str]] = None
    ) -> Dict[str, Any]:
        """Apply SPIDERLAB_MAX_EDGES on top of the file values.

        Raises:
            ValueError: If the variable is not an integer
        """
        environ = os.environ if environ is None else environ
        merged = config.copy()

        value = environ.get(MAX_EDGES_ENV)
        if value:
            try:
                merged["max_edges"] = int(value)
            except ValueError:
                raise ValueError(f"Invalid {MAX_EDGES_ENV}: {value!r}. Must be integer")
            logger.debug(f"max_edges={merged['max_edges']} from {MAX_EDGES_ENV}")

        return merged

    @staticmethod
    def merge_with_cli_args(config: Dict[str, Any], **cli_args) -> Dict[str, Any]:
        """Merge configuration file with CLI arguments, with CLI taking precedence.

        Args:
            config: Configuration dictionary from file
            **cli_args: CLI arguments as keyword arguments

        Returns:
            Merged configuration with CLI args overriding config file values
        """
        merged = config.copy()

        # CLI args override config file values (skip None values)
        for key, value in cli_args.items():
            if value is not None:
                merged[key] = value

        return merged

    @staticmethod
    def create(**kwargs) -> Spiderlab:
        """Create a Spiderlab config instance from keyword arguments.

        Raises:
            ValueError: If a parameter is invalid
        """
        # Null YAML values fall back to the defaults
        kwargs = {key: value for key, value in kwargs.items() if value is not None}
        return Spiderlab(
            max_edges=kwargs.get("max_edges", 10),
            prune=bool(kwargs.get("prune", True)),
            parallel=bool(kwargs.get("parallel", False)),
            workers=kwargs.get("workers"),
            scheme=kwargs.get("scheme", "auto"),
            mode=kwargs.get("mode", "stdio"),
            port=kwargs.get("port", 63418),
            addr=kwargs.get("addr", "localhost"),
            log_level=kwargs.get("log_level", "WARNING"),
        )

    @classmethod
    def from_file_and_cli(
        cls,
        config_file: Optional[str] = None,
        environ: Optional[Mapping[str, str]] = None,
        **cli_args,
    ) -> Spiderlab:
        """Load configuration from file, environment and CLI arguments.

        Precedence, lowest first: defaults, file, SPIDERLAB_MAX_EDGES, CLI.

        Raises:
            ValueError: If configuration is invalid
        """
        config: Dict[str, Any] = {}

        if config_file:
            config = cls.load_config_file(config_file)

        config = cls.merge_with_env(config, environ)
        merged_config = cls.merge_with_cli_args(config, **cli_args)

        return cls.create(**merged_config)
