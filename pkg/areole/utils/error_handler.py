#!/usr/bin/python3
from areole.utils.logger import get_logger
from areole.utils.exceptions import (
        AreoleError, BudgetExceededError,
        FrontEndError, GeometryError,
        MathError, SynthesisError,
        UsageError, InputFileError
        )

logger = get_logger(__name__)


def handle_error(exception, module_name=None):
    """
    Handles different types of exceptions by logging
    the error and raising the exception.
    """

    logger = get_logger(module_name or __name__)
    if isinstance(exception, BudgetExceededError):
        logger.warning(f"Enumeration refused: {exception}")
    elif isinstance(exception, FrontEndError):
        logger.error(f"Source rejected [{exception.code}]: {exception}")
    elif isinstance(exception, GeometryError):
        logger.error(f"Domain error [{exception.code}]: {exception}")
    elif isinstance(exception, SynthesisError):
        logger.error(f"Synthesis failure [{exception.code}]: {exception}")
    elif isinstance(exception, MathError):
        logger.error(f"Arithmetic error [{exception.code}]: {exception}")
    elif isinstance(exception, (UsageError, InputFileError)):
        logger.error(f"Usage error [{exception.code}]: {exception}")
    elif isinstance(exception, AreoleError):
        logger.error(f"Analysis error [{exception.code}]: {exception}")
    else:
        logger.critical(f"Unexpected error: {exception}")
    raise exception
