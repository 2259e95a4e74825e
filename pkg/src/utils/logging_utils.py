import logging
import sys
from typing import Optional

from colorama import Fore, Style, init

_LEVEL_COLORS = {
    logging.DEBUG: Fore.CYAN,
    logging.INFO: Fore.GREEN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED + Style.BRIGHT,
}


class ColorFormatter(logging.Formatter):
    def __init__(self, use_color: bool = True):
        super().__init__("%(levelname)s %(name)s: %(message)s")
        self.use_color = use_color

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        if not self.use_color:
            return text
        color = _LEVEL_COLORS.get(record.levelno, "")
        return f"{color}{text}{Style.RESET_ALL}"


def setup_logging(level: int = logging.WARNING, stream: Optional[object] = None) -> logging.Logger:
    """Route the ``src`` logger tree to stderr with colored level names.

    stdout is reserved for reports, so nothing here ever writes to it.
    """
    stream = stream if stream is not None else sys.stderr
    init(strip=not getattr(stream, "isatty", lambda: False)())
    root = logging.getLogger("src")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler.setFormatter(ColorFormatter(use_color=getattr(stream, "isatty", lambda: False)()))
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False
    return root
