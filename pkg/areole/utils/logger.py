#!/usr/bin/python3
"""
This module sets up a logger with a rotating file handler and, in
development, a stream handler. Logs are written to AREOLE_LOG_DIR (or the
'logs' directory) with a level taken from the 'LOG_LEVEL' environment
variable. The rotating file handler limits the file size and keeps backup
logs to avoid unbounded growth.

Key Features:
- Log level can be dynamically configured (default: DEBUG).
- RotatingFileHandler keeps files under 10MB with up to 5 backups.
- StreamHandler (stderr) only when ENVIRONMENT is DEV, so that the
  command-line diagnostics stay readable.
"""
import os
import logging
from logging.handlers import RotatingFileHandler
from areole.config import Config

log_dir = Config.AREOLE_LOG_DIR if Config.AREOLE_LOG_DIR else os.path.join(
    os.getcwd(), "logs")
log_file_path = os.path.join(log_dir, "areole.log")


def get_logger(name: str) -> logging.Logger:
    """
    Create a module-specific logger so that records can be traced back to
    the analysis stage that produced them.

    Args:
        name (str): The name of the module.

    Returns:
        logging.Logger: The logger instance for the calling module.
    """
    formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    logger = logging.getLogger(name)

    if not logger.handlers:
        log_level = 'DEBUG' if not Config.LOG_LEVEL else Config.LOG_LEVEL
        logger.setLevel(getattr(logging, log_level, logging.DEBUG))
        os.makedirs(os.path.dirname(log_file_path), exist_ok=True)

        file_handler = RotatingFileHandler(
                log_file_path, maxBytes=10 * 1024 * 1024, backupCount=5
                )
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

        if Config.ENVIRONMENT == 'DEV':
            stream_handler = logging.StreamHandler()
            stream_handler.setFormatter(formatter)
            logger.addHandler(stream_handler)

    return logger
