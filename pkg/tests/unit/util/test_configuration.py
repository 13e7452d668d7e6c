# pylint: disable=missing-docstring
from copy import deepcopy
from fractions import Fraction
from logging import getLogger

import pytest
from pytest import fail, raises

from tests.testdata.metadata import (
    path_to_config,
    path_to_partial_config,
    path_to_quickstart_config,
)
from tripoly.fastmod.ntt import PrimeField
from tripoly.fastmod.transform import FastRoute
from tripoly.util.configuration import (
    DB_DIRECTORY_VARIABLE,
    Configuration,
    InvalidConfigurationError,
    InvalidFieldConfigurationError,
    InvalidLoggerConfigurationError,
    RequiredConfigurationKeyMissingError,
)

logger = getLogger()


class ConfigurationTestCommon:
    def setup_class(self):
        self.config = Configuration.create_from_yaml(path_to_config)

    def assert_fails_when_replacing_key_with_value(self, key, value, expected_message):
        config = Configuration(deepcopy(self.config))

        parent = config
        if not isinstance(key, str):
            key = list(key)
            while len(key) > 1:
                parent = parent[key.pop(0)]
            key = key[0]
        parent[key] = value

        with raises(InvalidConfigurationError, match=expected_message):
            config.verify(logger)


class TestConfiguration(ConfigurationTestCommon):
    def test_verify_passes_for_valid_configuration(self):
        try:
            self.config.verify(logger)
        except InvalidConfigurationError:
            fail("The verification should pass for a valid configuration.")

    def test_default_configuration_is_valid(self):
        config = Configuration.default()
        config.verify()
        assert config.epsilon_start == Fraction(1, 4)
        assert config.max_halvings == 64
        assert config.max_points == 13
        assert config.field == PrimeField(998244353, 3)
        assert config.fast_route is FastRoute.CLOSED_FORM

    def test_quickstart_configuration_is_valid(self):
        config = Configuration.create_from_yaml(path_to_quickstart_config)
        config.verify()
        assert config["workers"] == 4

    def test_values_are_read_from_file(self):
        assert self.config["laurent_order"] == 16
        assert self.config.max_halvings == 32
        assert self.config.fast_route is FastRoute.DIVIDE_AND_CONQUER
        assert self.config["logger"]["level"] == "DEBUG"

    def test_missing_options_keep_defaults(self):
        config = Configuration.create_from_yaml(path_to_partial_config)
        assert config.max_points == 9
        assert config["logger"]["level"] == "WARNING"
        assert config["logger"]["aggregation_threshold"] == 4
        assert config["laurent_order"] == 32
        config.verify(logger)

    def test_verify_fails_on_missing_required_value(self):
        for key in list(self.config.keys()):
            config = Configuration(deepcopy(self.config))
            del config[key]

            with raises(RequiredConfigurationKeyMissingError, match=f"missing: {key}"):
                config.verify(logger)

    def test_verify_fails_on_missing_nested_value(self):
        self.assert_fails_when_replacing_key_with_value(
            "epsilon", {"start": "1/8"}, "Required option is missing: epsilon > max_halvings"
        )

    def test_verify_fails_on_unknown_option(self):
        self.assert_fails_when_replacing_key_with_value(
            "laurent_ordre", 4, "Unknown options: laurent_ordre"
        )

    @pytest.mark.parametrize("workers", [0, -1, 1.5, "2", True])
    def test_verify_fails_on_invalid_worker_count(self, workers):
        self.assert_fails_when_replacing_key_with_value(
            "workers", workers, "workers must be an integer of 1 or larger, not:"
        )

    def test_verify_fails_on_small_oracle_cap(self):
        self.assert_fails_when_replacing_key_with_value(
            ("oracle", "max_points"), 2, "oracle > max_points must be an integer of 3 or larger"
        )

    @pytest.mark.parametrize("start", ["0", "1", "3/2", "-1/4"])
    def test_verify_fails_on_epsilon_outside_unit_interval(self, start):
        self.assert_fails_when_replacing_key_with_value(
            ("epsilon", "start"), start, "epsilon > start must lie strictly between 0 and 1"
        )

    def test_verify_fails_on_unparsable_epsilon(self):
        self.assert_fails_when_replacing_key_with_value(
            ("epsilon", "start"), "a quarter", "epsilon > start is not a fraction"
        )

    def test_epsilon_may_be_a_decimal(self):
        config = Configuration(deepcopy(self.config))
        config["epsilon"]["start"] = 0.125
        config.verify(logger)
        assert config.epsilon_start == Fraction(1, 8)

    def test_verify_fails_on_unknown_route(self):
        self.assert_fails_when_replacing_key_with_value(
            "fast_route", "fft", "fast_route must be one of closed_form, divide_and_conquer"
        )

    def test_verify_fails_on_invalid_field(self):
        config = Configuration(deepcopy(self.config))
        config["primitive_root"] = 4
        with raises(InvalidFieldConfigurationError, match="Invalid prime field"):
            config.verify(logger)

    def test_verify_fails_on_invalid_log_level(self):
        config = Configuration(deepcopy(self.config))
        config["logger"]["level"] = "LOUD"
        with raises(InvalidLoggerConfigurationError, match="Unknown level 'LOUD'"):
            config.verify(logger)

    def test_file_without_mapping(self, tmp_path):
        path = tmp_path / "list.yml"
        path.write_text("- 1\n- 2\n", encoding="utf8")
        with raises(InvalidConfigurationError, match="does not contain a mapping"):
            Configuration.create_from_yaml(str(path))

    def test_empty_file_gives_defaults(self, tmp_path):
        path = tmp_path / "empty.yml"
        path.write_text("", encoding="utf8")
        assert Configuration.create_from_yaml(str(path)) == Configuration.default()

    def test_environment_overrides_db_directory(self, monkeypatch):
        monkeypatch.delenv(DB_DIRECTORY_VARIABLE, raising=False)
        assert self.config.db_directory == "/tmp/order_types"
        monkeypatch.setenv(DB_DIRECTORY_VARIABLE, "/data/otypes")
        assert self.config.db_directory == "/data/otypes"
