import re
from dataclasses import dataclass
from typing import Literal

from gaugekit.errors import QuantityFormatError

Family = Literal["R", "r"]
Mode = Literal["pi", "sigma"]
Position = Literal["sup", "inf"]

_NAME = re.compile(r"^(R|r)-(pi|sigma)-(sup|inf):(\d+)$")


@dataclass(frozen=True)
class Quantity:
    """
    One of the eight successive radii families at index `j`.

    `position="sup"` is the variant taking the supremum over subspaces (index
    written as a superscript, e.g. $R_\\pi^j$), `position="inf"` the one taking
    the infimum ($R^\\pi_j$). The names used on the command line read
    `R-pi-sup:1` for $R_\\pi^1$ or `r-sigma-inf:2` for $r^\\sigma_2$.
    """

    family: Family
    """`R` for circumradii, `r` for inradii."""

    mode: Mode
    """`pi` for cylinders `C + L`, `sigma` for sections by flats `x + L`."""

    position: Position
    """Whether the outer extremum over subspaces is a sup or an inf."""

    j: int
    """The index, `1 <= j <= d`."""

    def __post_init__(self):
        if self.family not in ("R", "r"):
            raise QuantityFormatError(f"unknown family {self.family!r}, expected 'R' or 'r'")
        if self.mode not in ("pi", "sigma"):
            raise QuantityFormatError(f"unknown mode {self.mode!r}, expected 'pi' or 'sigma'")
        if self.position not in ("sup", "inf"):
            raise QuantityFormatError(f"unknown position {self.position!r}, expected 'sup' or 'inf'")
        if isinstance(self.j, bool) or not isinstance(self.j, int) or self.j < 1:
            raise QuantityFormatError(f"the index must be a positive integer, got {self.j!r}")

    @classmethod
    def parse(cls, name: str) -> "Quantity":
        """
        Parses names such as `R-pi-sup:1`.

        Raises:
            QuantityFormatError: for malformed names.
        """
        match = _NAME.match(name.strip())
        if match is None:
            raise QuantityFormatError(
                f"malformed quantity {name!r}, expected e.g. 'R-pi-sup:1' "
                "(family R|r, mode pi|sigma, position sup|inf, index j)"
            )
        family, mode, position, j = match.groups()
        return cls(family, mode, position, int(j))  # type: ignore[arg-type]

    @property
    def name(self) -> str:
        return f"{self.family}-{self.mode}-{self.position}:{self.j}"

    @property
    def symbol(self) -> str:
        """Conventional notation, e.g. `R_pi^1` or `r^sigma_2`."""
        if self.position == "sup":
            return f"{self.family}_{self.mode}^{self.j}"
        return f"{self.family}^{self.mode}_{self.j}"

    def subspace_dim(self, d: int) -> int:
        """Dimension of the subspaces `L` the quantity extremizes over."""
        return d - self.j if self.mode == "pi" else self.j

    def check_dimension(self, d: int) -> None:
        if self.j > d:
            raise QuantityFormatError(f"{self.name} needs j <= d = {d}")

    def __str__(self) -> str:
        return self.name


def all_quantities(d: int) -> list[Quantity]:
    """The `8 d` quantities in table order: family, mode, position, then `j`."""
    return [
        Quantity(family, mode, position, j)
        for family in ("R", "r")
        for mode in ("pi", "sigma")
        for position in ("sup", "inf")
        for j in range(1, d + 1)
    ]


def chains(d: int) -> list[list[Quantity]]:
    """
    The eight monotone chains over `j`: circumradii are nondecreasing in `j`,
    inradii nonincreasing.
    """
    return [
        [Quantity(family, mode, position, j) for j in range(1, d + 1)]
        for family in ("R", "r")
        for mode in ("pi", "sigma")
        for position in ("sup", "inf")
    ]
