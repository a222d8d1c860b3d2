from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import inf

from ..errors import ConfigError
from .params import arboricity_promise_holds, choose_b, large_palette_feasible


class EngineKind(str, Enum):
    LARGE_PALETTE = "large-palette"
    DELTA_MINUS_2 = "delta-minus-2"
    NO_HANDLER = "no-handler"


@dataclass(frozen=True)
class EngineConfig:
    """Which insertion engine to run and with what parameters.

    ``b`` only matters for the large-palette engine: an integer copy
    threshold or ``"auto"``.  ``adaptive`` switches on the local palette
    (every edge keeps a color at most ``max endpoint degree + extra``) and
    the repair step after deletions.  ``alpha``/``epsilon`` declare an
    arboricity promise for the handler-free engine.
    """

    kind: EngineKind
    delta: int
    extra: int
    b: int | str = "auto"
    adaptive: bool = False
    alpha: int | None = None
    epsilon: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", EngineKind(self.kind))
        self.validate()

    @property
    def palette(self) -> int:
        return self.delta + self.extra

    def copy_threshold(self) -> float:
        if self.kind is EngineKind.NO_HANDLER:
            return inf
        if self.kind is EngineKind.DELTA_MINUS_2:
            return 2
        if self.b == "auto":
            return choose_b(self.delta, self.extra)
        return int(self.b)

    def validate(self) -> None:
        d, c = self.delta, self.extra
        if d < 1 or c < 0:
            raise ConfigError(f"invalid delta={d}, extra={c}")
        if self.kind is EngineKind.LARGE_PALETTE:
            if self.b != "auto" and not isinstance(self.b, int):
                raise ConfigError(f"b must be an integer or 'auto', got {self.b!r}")
            b = self.copy_threshold()
            if not large_palette_feasible(d, c, int(b)):
                raise ConfigError(
                    f"(b(C-1)+2)/delta > delta-C+1 with 2 <= b <= C fails for delta={d}, C={c}, b={b}"
                )
        elif self.kind is EngineKind.DELTA_MINUS_2:
            if d < 4 or c != d - 2:
                raise ConfigError(f"the delta-2 engine needs delta >= 4 and extra = delta - 2, got {d}, {c}")
            if self.adaptive:
                raise ConfigError("the delta-2 engine has no local-palette variant")
        elif self.kind is EngineKind.NO_HANDLER:
            if (self.alpha is None) != (self.epsilon is None):
                raise ConfigError("alpha and epsilon must be given together")
            if self.alpha is not None:
                if self.alpha < 1 or self.epsilon <= 0:
                    raise ConfigError(f"need alpha >= 1 and epsilon > 0, got {self.alpha}, {self.epsilon}")
                if not arboricity_promise_holds(c, self.alpha, self.epsilon):
                    raise ConfigError(
                        f"extra={c} is below (2+epsilon)*alpha-1 for alpha={self.alpha}, epsilon={self.epsilon}"
                    )


@dataclass
class RecourseReport:
    """Outcome of one engine call.

    ``recolored`` counts previously colored edges whose color changed; the
    first coloring of a new edge is not included (``total`` adds it back).
    ``handler`` is ``"direct"``, ``"useful-path"``, ``"leaves"``, ``"cycle"``,
    ``"delete"`` or ``"repair"``.
    """

    recolored: int
    path_len: int
    tree_depth: int
    handler: str
    colored_new: bool = True

    @property
    def total(self) -> int:
        return self.recolored + (1 if self.colored_new else 0)
