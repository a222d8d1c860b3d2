"""Closed-form parameters: feasible palettes, copy thresholds, growth rates."""

from __future__ import annotations

import math

from ..errors import ConfigError

GOLDEN_RATIO = (1 + math.sqrt(5)) / 2


def c_star(delta: float) -> float:
    """Real threshold above which ``delta + C`` colors admit a copy threshold.

    It is the positive root of ``C^2 + (delta - 1) C - (delta^2 + delta - 2)``.
    """
    return (math.sqrt(5 * delta * delta + 2 * delta - 7) - (delta - 1)) / 2


def golden_gap(delta: float) -> float:
    """``c_star(delta) - delta / phi``; increasing, from about 0.463 at 3
    toward ``1/2 + sqrt(5)/10``."""
    return c_star(delta) - delta / GOLDEN_RATIO


GOLDEN_GAP_LIMIT = 0.5 + math.sqrt(5) / 10


def large_palette_feasible(delta: int, extra: int, b: int) -> bool:
    """``(b (C - 1) + 2) / delta > delta - C + 1`` with ``2 <= b <= C``, exactly."""
    if not 2 <= b <= extra:
        return False
    return b * (extra - 1) + 2 > delta * (delta - extra + 1)


def min_feasible_c(delta: int) -> int:
    """Smallest integer number of extra colors strictly above ``c_star(delta)``.

    Uses the integer form of the defining inequality, so exact roots (as for
    ``delta = 4``) are handled without rounding.
    """
    if delta < 3:
        raise ConfigError(f"max degree must be at least 3, got {delta}")
    c = max(1, int(c_star(delta)) - 1)
    while c * c + (delta - 1) * c - (delta * delta + delta - 2) <= 0:
        c += 1
    return c


def palette_is_trivial(delta: int, extra: int) -> bool:
    """With ``extra >= delta - 1`` a greedy choice never needs recoloring."""
    return extra > delta - 2


def choose_b(delta: int, extra: int) -> int:
    """Copy threshold for the large-palette engine.

    Near the top of the range (``C >= 0.9 delta``) take ``5 (delta - C)``,
    otherwise the smallest ``b`` satisfying the feasibility inequality.  If
    that choice is out of range, scan downward from ``C``.
    """
    if extra < 2:
        raise ConfigError(f"need at least 2 extra colors, got {extra}")
    if 10 * extra >= 9 * delta:
        b = 5 * (delta - extra)
    else:
        b = 1 + ((delta - extra + 1) * delta - 2) // (extra - 1)
    if large_palette_feasible(delta, extra, b):
        return b
    for b in range(extra, 1, -1):
        if large_palette_feasible(delta, extra, b):
            return b
    raise ConfigError(f"no feasible copy threshold for delta={delta}, extra={extra}")


def arboricity_promise_holds(extra: int, alpha: int, epsilon: float) -> bool:
    """``C >= (2 + epsilon) alpha - 1`` from the low-arboricity regime."""
    return extra >= (2 + epsilon) * alpha - 1


def low_arboricity_growth(extra: int, alpha: int) -> float:
    """Per-level growth ``C / (2 alpha - 1)`` of shift trees on such graphs."""
    if alpha < 1:
        raise ConfigError(f"arboricity must be at least 1, got {alpha}")
    return extra / (2 * alpha - 1)


def low_arboricity_path_bound(n: int, extra: int, alpha: int) -> int:
    """Path-length bound ``ceil(log_B n) + 2`` for growth ``B > 1``."""
    growth = low_arboricity_growth(extra, alpha)
    if growth <= 1:
        raise ConfigError(f"growth {growth} is not above 1")
    if n <= 1:
        return 2
    return math.ceil(math.log(n) / math.log(growth) - 1e-12) + 2


def girth_depth_bound(n: int, delta: int, extra: int) -> float:
    """Depth bound ``log_{C+1}(n / (delta + C^2)) + 2`` for large-girth graphs."""
    return math.log(n / (delta + extra * extra)) / math.log(extra + 1) + 2
