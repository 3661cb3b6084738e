# positroid/core/logging.py
import logging
import sys

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(debug: bool = False, level: str = "WARNING") -> None:
    """Configure the root logger on stderr; stdout is reserved for command output."""
    logging.basicConfig(
        level=(
            logging.DEBUG if debug else getattr(logging, level.upper(), logging.WARNING)
        ),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )
