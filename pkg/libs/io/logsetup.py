# coding=utf-8
"""Logging setup helper"""
import logging.handlers
import os
from output import DEFAULT_LOGS_OUTPUT_FOLDER

LOG_FORMAT = "%(asctime)-15s | %(filename).8s:%(lineno)-5d | %(levelname).4s | %(message)s"

LOGGING_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
}


def init(reset=False, override_default=True, log_file_name='secant.log', console_level='info'):
    """Logging setup, calling it again only changes the console level"""
    logger = logging.getLogger("default")
    logger.setLevel(logging.DEBUG)
    level = LOGGING_LEVELS.get(console_level, logging.INFO)

    client_handlers = [h for h in logger.handlers
                       if not isinstance(h, logging.handlers.RotatingFileHandler)]
    if client_handlers:
        for handler in client_handlers:
            handler.setLevel(level)
        return logger

    log_path = os.path.join(DEFAULT_LOGS_OUTPUT_FOLDER, log_file_name)
    os.makedirs(os.path.dirname(log_path), exist_ok=True)

    file_handler = logging.handlers.RotatingFileHandler(log_path,
                                                        maxBytes=100 * 1024,
                                                        backupCount=20)
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    if reset:
        file_handler.doRollover()
    logger.addHandler(file_handler)

    client_handler = logging.StreamHandler()
    client_handler.setLevel(level)
    client_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(client_handler)

    if override_default:
        logging.basicConfig(
            level=logging.DEBUG,
            handlers=[file_handler, client_handler],
        )
        logging.debug("Started !")

    return logger
