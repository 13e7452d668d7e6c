"""This module is used to create the configuration of the calculators and experiments."""

from copy import deepcopy
from fractions import Fraction
from logging import Logger
from os import environ
from typing import Any, Optional

from yaml import safe_load

from tripoly.fastmod.exceptions import FastModError
from tripoly.fastmod.ntt import NumberTheoreticTransform, PrimeField
from tripoly.fastmod.transform import FastRoute
from tripoly.util.aggregating_logger import name_to_level
from tripoly.util.exceptions import TripolyError

DB_DIRECTORY_VARIABLE = "TRIPOLY_DB_DIR"

DEFAULTS = {
    "laurent_order": 32,
    "epsilon": {"start": "1/4", "max_halvings": 64},
    "oracle": {"max_points": 13},
    "hull_check_max_points": 12,
    "modulus": 998244353,
    "primitive_root": 3,
    "fast_route": FastRoute.CLOSED_FORM.value,
    "workers": 1,
    "db_directory": None,
    "logger": {"level": "INFO", "aggregation_threshold": 4, "aggregation_period": 30},
    "measure_time": False,
}


class InvalidConfigurationError(TripolyError):
    """Base class for Configuration related exceptions."""

    def __init__(self, unprefixed_message: str = None, message: str = None):
        if unprefixed_message is not None:
            super().__init__(unprefixed_message)
        elif message is not None:
            super().__init__(f"Invalid Configuration: {message}")
        else:
            super().__init__("Invalid Configuration.")


class RequiredConfigurationKeyMissingError(InvalidConfigurationError):
    """Raise if required option is missing in configuration."""

    def __init__(self, key: str):
        super().__init__(f"Required option is missing: {key}")


class InvalidFieldConfigurationError(InvalidConfigurationError):
    """Raise if modulus and primitive root do not support number theoretic transforms."""

    def __init__(self, message: str):
        super().__init__(f"Invalid prime field: {message}")


class InvalidLoggerConfigurationError(InvalidConfigurationError):
    """Raise if logger configuration is invalid."""

    def __init__(self, message: str):
        super().__init__(f"Invalid logger configuration: {message}")


def _merged(defaults: dict, values: dict) -> dict:
    merged = deepcopy(defaults)
    for key, value in values.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merged(merged[key], value)
        else:
            merged[key] = value
    return merged


class Configuration(dict):
    """Used to create and verify a configuration dict parsed from a YAML file."""

    @staticmethod
    def default() -> "Configuration":
        """Configuration with the built-in defaults."""
        return Configuration(deepcopy(DEFAULTS))

    @staticmethod
    def create_from_yaml(path: str) -> "Configuration":
        """Create configuration from a YAML file.

        Options missing in the file keep their defaults.

        Parameters
        ----------
        path : str
            Path of file to create configuration from.

        Returns
        -------
        config : Configuration
            Configuration object based on dictionary.

        Raises
        ------
        InvalidConfigurationError
            If the file does not hold a mapping.

        """
        with open(path, "r", encoding="utf8") as file:
            yaml_configuration = safe_load(file)
        if yaml_configuration is None:
            yaml_configuration = {}
        if not isinstance(yaml_configuration, dict):
            raise InvalidConfigurationError(message=f"'{path}' does not contain a mapping")
        return Configuration(_merged(DEFAULTS, yaml_configuration))

    def verify(self, logger: Optional[Logger] = None):
        """Verify the configuration."""
        self._verify_required_keys_exist()
        self._verify_no_unknown_keys()
        self._verify_values_make_sense()
        self._verify_field()
        self._verify_logger()
        if logger is not None:
            logger.debug("Configuration verified")

    def _verify_required_keys_exist(self):
        for key, value in DEFAULTS.items():
            if key not in self:
                raise RequiredConfigurationKeyMissingError(key)
            if isinstance(value, dict):
                for sub_key in value:
                    if not isinstance(self[key], dict) or sub_key not in self[key]:
                        raise RequiredConfigurationKeyMissingError(f"{key} > {sub_key}")

    def _verify_no_unknown_keys(self):
        unknown = sorted(set(self) - set(DEFAULTS))
        if unknown:
            raise InvalidConfigurationError(message=f"Unknown options: {', '.join(unknown)}")

    def _require_integer(self, name: str, value: Any, minimum: int):
        if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
            raise InvalidConfigurationError(
                message=f"{name} must be an integer of {minimum} or larger, not: {value}"
            )

    def _verify_values_make_sense(self):
        self._require_integer("laurent_order", self["laurent_order"], 1)
        self._require_integer("epsilon > max_halvings", self["epsilon"]["max_halvings"], 0)
        self._require_integer("oracle > max_points", self["oracle"]["max_points"], 3)
        self._require_integer("hull_check_max_points", self["hull_check_max_points"], 0)
        self._require_integer("workers", self["workers"], 1)
        try:
            start = self.epsilon_start
        except (TypeError, ValueError, ZeroDivisionError) as error:
            raise InvalidConfigurationError(
                message=f"epsilon > start is not a fraction: {self['epsilon']['start']}"
            ) from error
        if not 0 < start < 1:
            raise InvalidConfigurationError(
                message=f"epsilon > start must lie strictly between 0 and 1, not: {start}"
            )
        routes = [route.value for route in FastRoute]
        if self["fast_route"] not in routes:
            raise InvalidConfigurationError(
                message=f"fast_route must be one of {', '.join(routes)}, not: {self['fast_route']}"
            )
        if not isinstance(self["measure_time"], bool):
            raise InvalidConfigurationError(message="measure_time must be true or false")

    def _verify_field(self):
        try:
            NumberTheoreticTransform(self.field)
        except (FastModError, TypeError) as error:
            raise InvalidFieldConfigurationError(str(error)) from error

    def _verify_logger(self):
        logger_config = self["logger"]
        level = str(logger_config["level"]).upper()
        if level not in name_to_level:
            raise InvalidLoggerConfigurationError(f"Unknown level '{logger_config['level']}'")
        if logger_config["aggregation_threshold"] < 1:
            raise InvalidLoggerConfigurationError("aggregation_threshold must be positive")
        if logger_config["aggregation_period"] <= 0:
            raise InvalidLoggerConfigurationError("aggregation_period must be positive")

    @property
    def epsilon_start(self) -> Fraction:
        return Fraction(str(self["epsilon"]["start"]))

    @property
    def max_halvings(self) -> int:
        return self["epsilon"]["max_halvings"]

    @property
    def max_points(self) -> int:
        return self["oracle"]["max_points"]

    @property
    def field(self) -> PrimeField:
        return PrimeField(self["modulus"], self["primitive_root"])

    @property
    def fast_route(self) -> FastRoute:
        return FastRoute(self["fast_route"])

    @property
    def db_directory(self) -> Optional[str]:
        """Order type database directory; the environment variable takes precedence."""
        return environ.get(DB_DIRECTORY_VARIABLE) or self["db_directory"]
