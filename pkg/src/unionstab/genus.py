"""Genus bounds for union stabilizations of Heegaard splittings."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SplittingDescriptor:
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")


@dataclass(frozen=True)
class GnPresentation:
    """A knot in genus g, n-bridge position."""
    g: int
    n: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("g must be nonnegative")
        if self.n < 1:
            raise ValueError("n must be at least 1")


@dataclass(frozen=True)
class BoundReport:
    quantity: str
    value: int
    formula: str
    hypothesis: str = ""

    def line(self) -> str:
        text = f"{self.quantity} = {self.value}  [{self.formula}]"
        return text + (f"  (assumes {self.hypothesis})" if self.hypothesis else "")

    def to_dict(self) -> dict:
        return {"quantity": self.quantity, "value": self.value,
                "formula": self.formula, "hypothesis": self.hypothesis}


def _nonneg(**kw):
    for name, v in kw.items():
        if v < 0:
            raise ValueError(f"{name} must be nonnegative, got {v}")


def prop21_bound(g: int) -> BoundReport:
    """Two isotopic genus-g splittings have a union stabilization of genus g + 1."""
    _nonneg(g=g)
    return BoundReport("union stabilization genus", g + 1, "g + 1",
                       "the two splittings are isotopic")


def thm22_bound(g1: int, g2: int, c: int) -> BoundReport:
    """One tunnel per crossing of the spine diagram of V2 over the punctured disk."""
    _nonneg(g1=g1, g2=g2, c=c)
    return BoundReport("union stabilization genus", g1 + g2 + c, "g1 + g2 + c",
                       "one tunnel per crossing; connecting arcs are genus-neutral")


def prop32_bound(g1: int, g2: int) -> BoundReport:
    _nonneg(g1=g1, g2=g2)
    return BoundReport("union genus", g1 + g2, "g(S1) + g(S2)",
                       "a spine of V2 lies on S1")


def prop33_bounds(p: GnPresentation) -> tuple[BoundReport, BoundReport]:
    g, n = p.g, p.n
    return (BoundReport("tunnel number", g + n - 1, "g + n - 1"),
            BoundReport("union genus", 2 * g + 2 * n - 1, "2g + 2n - 1"))


def euler_glue_check(p: GnPresentation) -> BoundReport:
    """Genus of X1 ∪ X2 from Euler characteristics of the glued pieces.

    X1 is a handlebody of genus 2g + 2n - 1 and X2 is S × I for S the
    2n-punctured genus-g surface; they meet along a copy of S.  The union is
    a handlebody whose genus h satisfies 1 - h = χ(X1) + χ(X2) - χ(S).
    """
    g, n = p.g, p.n
    chi_x1 = 1 - (2 * g + 2 * n - 1)
    chi_s = 2 - 2 * g - 2 * n
    chi_x2 = chi_s
    h = 1 - (chi_x1 + chi_x2 - chi_s)
    if h != 2 * g + 2 * n - 1:
        raise AssertionError(f"gluing gives genus {h}, expected {2 * g + 2 * n - 1}")
    return BoundReport("genus of X1 ∪ X2", h, "1 - (χ(X1) + χ(X2) - χ(S))",
                       f"χ(X1) = {chi_x1}, χ(X2) = χ(S) = {chi_s}")
