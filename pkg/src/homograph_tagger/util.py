"""Shared percentage arithmetic and rendering helpers.

All percentages in reports are rounded to one decimal place with
half-up rounding, which is what decimal.ROUND_HALF_UP gives and what
round() does not.
"""

from decimal import ROUND_HALF_UP, Decimal

_TENTH = Decimal("0.1")


def pct_of(numerator: int, denominator: int) -> float:
    """Percentage numerator/denominator, one decimal place, half-up."""
    value = Decimal(100 * numerator) / Decimal(denominator)
    return float(value.quantize(_TENTH, rounding=ROUND_HALF_UP))


def fmt_pct(fraction: float | None) -> str:
    """Render a 0..1 fraction as a percentage string, 'n/a' when undefined."""
    if fraction is None:
        return "n/a"
    value = Decimal(str(fraction)) * 100
    return f"{value.quantize(_TENTH, rounding=ROUND_HALF_UP)}%"
