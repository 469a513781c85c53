"""Logging for the qcosine package.

Three channels share the `qcosine` prefix:

    qcosine              rotating logs/qcosine.log + stderr console
    qcosine.errors       rotating logs/errors.log (ProductionLogger.log_error)
    qcosine.performance  rotating logs/performance.log (PerformanceTimer, @log_performance)

Library modules only ever call ProductionLogger.get_logger('qcosine.<area>');
handlers are attached once by setup_production_logging() from the CLI.
"""
import functools
import logging
import logging.handlers
import time
from pathlib import Path
from typing import Dict, Optional

from src.config.settings import Config

MAIN_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
ERROR_FORMAT = '%(asctime)s - ERROR - %(name)s - %(funcName)s:%(lineno)d\nMessage: %(message)s\n---'
PERF_FORMAT = '%(asctime)s - PERF - %(message)s'

_MB = 1024 * 1024


class ProductionLogger:
    """Rotating file channels for the main log, errors and timings"""

    def __init__(self, logs_dir: Optional[Path] = None):
        self.logs_dir = Path(logs_dir or Config.LOGS_DIR)
        self.logs_dir.mkdir(parents=True, exist_ok=True)

        self.log_level = Config.LOG_LEVEL
        self.console_level = Config.CONSOLE_LOG_LEVEL

        main_logger = self._channel('qcosine', logging.DEBUG)
        main_logger.addHandler(self._rotating('qcosine.log', 10, 5, MAIN_FORMAT, self.log_level))
        # stdout is reserved for command output
        console = logging.StreamHandler()
        console.setLevel(getattr(logging, self.console_level, logging.WARNING))
        console.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
        main_logger.addHandler(console)

        self._channel('qcosine.errors', logging.ERROR).addHandler(
            self._rotating('errors.log', 5, 10, ERROR_FORMAT))
        self._channel('qcosine.performance', logging.INFO).addHandler(
            self._rotating('performance.log', 5, 3, PERF_FORMAT))

        main_logger.debug(f"Logging configured in {self.logs_dir} (file: {self.log_level}, console: {self.console_level})")

    @staticmethod
    def _channel(name: str, level: int) -> logging.Logger:
        logger = logging.getLogger(name)
        logger.setLevel(level)
        logger.handlers.clear()
        # Prevent duplicate logs
        logger.propagate = False
        return logger

    def _rotating(self, filename: str, max_mb: int, backups: int, fmt: str,
                  level: Optional[str] = None) -> logging.Handler:
        handler = logging.handlers.RotatingFileHandler(
            self.logs_dir / filename, maxBytes=max_mb * _MB, backupCount=backups
        )
        if level is not None:
            handler.setLevel(getattr(logging, level, logging.INFO))
        handler.setFormatter(logging.Formatter(fmt))
        return handler

    @staticmethod
    def get_logger(name: str = 'qcosine') -> logging.Logger:
        return logging.getLogger(name)

    @staticmethod
    def log_performance(operation: str, duration: float, details: Dict = None):
        message = f"Operation: {operation} | Duration: {duration:.6f}s"
        if details:
            message += f" | Details: {details}"
        logging.getLogger('qcosine.performance').info(message)

    @staticmethod
    def log_error(error: Exception, context: str = ""):
        """Record a handled error on the error channel"""
        prefix = f"Context: {context} | " if context else ""
        logging.getLogger('qcosine.errors').error(f"{prefix}{type(error).__name__}: {error}")


def setup_production_logging(logs_dir: Optional[Path] = None) -> ProductionLogger:
    return ProductionLogger(logs_dir)


class PerformanceTimer:
    """Context manager that reports wall time to the performance channel"""

    def __init__(self, operation_name: str, details: Dict = None):
        self.operation_name = operation_name
        self.details = details or {}
        self.start_time = None
        self.duration = None

    def __enter__(self):
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.duration = time.perf_counter() - self.start_time
        self.details['success'] = exc_type is None
        if exc_type is not None:
            self.details['error'] = str(exc_val)
        ProductionLogger.log_performance(self.operation_name, self.duration, self.details)


def log_performance(operation_name: str = None):
    """Decorator form of PerformanceTimer"""
    def decorator(func):
        op_name = operation_name or f"{func.__module__}.{func.__name__}"

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            with PerformanceTimer(op_name):
                return func(*args, **kwargs)

        return wrapper
    return decorator
