from typing import List, Sequence

from src.utils.errors import ParseError


def parse_int_list(text: str, what: str = "list") -> List[int]:
    """Parse a comma-separated list of non-negative integers ("1,0,1")."""
    text = text.strip()
    if not text:
        return []
    values = []
    for token in text.split(","):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise ParseError(f"malformed {what} entry {token!r} in {text!r}") from None
        if value < 0:
            raise ParseError(f"negative {what} entry {value} in {text!r}")
        values.append(value)
    return values


def format_int_list(values: Sequence[int]) -> str:
    return ",".join(str(int(v)) for v in values)


def parse_int_range(text: str, what: str = "range") -> List[int]:
    """Accept "5,7,11" or "1-4" (inclusive)."""
    text = text.strip()
    if "-" in text and "," not in text:
        lo, _, hi = text.partition("-")
        try:
            lo_i, hi_i = int(lo), int(hi)
        except ValueError:
            raise ParseError(f"malformed {what} {text!r}") from None
        if hi_i < lo_i:
            raise ParseError(f"empty {what} {text!r}")
        return list(range(lo_i, hi_i + 1))
    return parse_int_list(text, what)
