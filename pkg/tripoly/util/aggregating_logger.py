"""This module creates loggers that are able to aggregate repetitive log messages."""

from logging import (
    CRITICAL,
    DEBUG,
    ERROR,
    FATAL,
    INFO,
    NOTSET,
    WARNING,
    Logger,
    basicConfig,
    getLogger,
)

from tripoly.util.log_aggregator import Aggregator

name_to_level = {
    "CRITICAL": CRITICAL,
    "FATAL": FATAL,
    "ERROR": ERROR,
    "WARN": WARNING,
    "WARNING": WARNING,
    "INFO": INFO,
    "DEBUG": DEBUG,
    "NOTSET": NOTSET,
}

LOG_FORMAT = "%(asctime)-15s %(name)-5s %(levelname)-8s: %(message)s"


class AggregatingLogger:
    """Used to create loggers that aggregate log messages."""

    logger_config: dict = {}
    level_str = "INFO"
    log_level = INFO
    logger_disabled = False

    @classmethod
    def setup(cls, config: dict, logger_disabled: bool = False, start_timer: bool = True):
        """Setup aggregating logger.

        Parameters
        ----------
        config : dict
            Tripoly configuration, only its logger section is read.
        logger_disabled : bool
            Defines if aggregating loggers are enabled or not.
        start_timer : bool
            Start the thread that emits aggregated messages periodically.

        """
        cls.logger_disabled = logger_disabled
        cls.logger_config = config.get("logger", {})
        cls.level_str = str(cls.logger_config.get("level", "INFO"))
        cls.log_level = name_to_level.get(cls.level_str.upper(), INFO)
        basicConfig(level=cls.log_level, format=LOG_FORMAT)
        for handler in getLogger().handlers:
            if Aggregator not in handler.filters:
                handler.addFilter(Aggregator)

        Aggregator.setup(
            cls.logger_config.get("aggregation_threshold", 4),
            cls.logger_config.get("aggregation_period", 30),
        )
        if start_timer:
            Aggregator.start_timer()

    @classmethod
    def create(cls, name: str) -> Logger:
        """Create aggregating logger.

        The logger named "Tripoly" is the parent of all library loggers ("Tripoly.Scan", ...), so
        its level applies to them as well. Their records are aggregated by the filter that setup
        attaches to the root handlers.

        Parameters
        ----------
        name : str
            Name for aggregating logger.

        Returns
        -------
        logger : logging.Logger
            Logger with the configured level

        """
        logger = getLogger(name)
        logger.disabled = cls.logger_disabled

        if cls.level_str.upper() not in name_to_level:
            logger.info(f"Invalid log level '{cls.level_str.upper()}', defaulting to 'INFO'")
            logger.setLevel(INFO)
        else:
            logger.setLevel(cls.log_level)
            logger.debug(f"Log level set to '{cls.level_str.upper()}'")

        return logger
