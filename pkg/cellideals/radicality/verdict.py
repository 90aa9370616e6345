"""Defines the radicality verdict and its certificates."""

from dataclasses import dataclass
from typing import Literal

from sympy.polys.rings import PolyElement

from cellideals.grid import CellCollection

Status = Literal["radical", "non-radical", "unknown"]
Method = Literal["exact", "witness", "screen"]


@dataclass(frozen=True)
class RadicalVerdict:
    """Outcome of a radicality test.

    Parameters:
        status: ``radical``, ``non-radical`` or ``unknown``.
        method: The method that produced the status.
        witness: A polynomial ``f`` with ``f`` outside the ideal and ``f^2``
            inside it.
        excess: A polynomial of the radical that is not in the ideal, when
            its square is not itself in the ideal.
        subconfiguration: An embedded non-radical sub-collection whose extra
            cells are all edge-supported outside it.
        reason: A short human-readable account of the decision.
    """

    status: Status
    method: Method
    witness: PolyElement | None = None
    excess: PolyElement | None = None
    subconfiguration: CellCollection | None = None
    reason: str = ""

    def __post_init__(self) -> None:
        if self.status == "non-radical" and not self.has_certificate:
            raise ValueError("A non-radical verdict needs a certificate")
        if self.method in ("witness", "screen") and self.status == "radical":
            raise ValueError(f"The {self.method} method cannot certify radicality")

    @property
    def has_certificate(self) -> bool:
        return self.witness is not None or self.excess is not None or self.subconfiguration is not None

    @property
    def decided(self) -> bool:
        return self.status != "unknown"
