"""Degree conventions and the registry of named elements.

Four Picard gradings appear in the computations:

* tri-degrees ``(p, q, w)`` of Artin-Tate R-motivic spectra,
* RO(C2)-degrees ``p + q*sigma`` of C2-spectra,
* bi-degrees ``(s, w)`` of C-motivic spectra (base change),
* integer degrees of underlying and geometric fixed point spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Tuple, Union

from trigraded.errors import InputError, UnknownName


@dataclass(frozen=True, order=True)
class TriDegree:
    """Tri-degree (p, q, w): p simplicial, q in the sigma direction, w the motivic weight."""

    p: int
    q: int
    w: int

    def __add__(self, other: "TriDegree") -> "TriDegree":
        return TriDegree(self.p + other.p, self.q + other.q, self.w + other.w)

    def __sub__(self, other: "TriDegree") -> "TriDegree":
        return TriDegree(self.p - other.p, self.q - other.q, self.w - other.w)

    def __neg__(self) -> "TriDegree":
        return TriDegree(-self.p, -self.q, -self.w)

    def scale(self, k: int) -> "TriDegree":
        return TriDegree(k * self.p, k * self.q, k * self.w)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.p, self.q, self.w)

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.w})"


@dataclass(frozen=True, order=True)
class RODegree:
    """RO(C2)-degree p + q*sigma."""

    p: int
    q: int

    def __add__(self, other: "RODegree") -> "RODegree":
        return RODegree(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "RODegree") -> "RODegree":
        return RODegree(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "RODegree":
        return RODegree(-self.p, -self.q)

    def scale(self, k: int) -> "RODegree":
        return RODegree(k * self.p, k * self.q)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        sigma = {1: "s", -1: "-s"}.get(self.q, f"{self.q}s")
        if self.p == 0:
            return sigma
        sign = "" if sigma.startswith("-") else "+"
        return f"{self.p}{sign}{sigma}"


Degree = Union[TriDegree, RODegree]

ZERO = TriDegree(0, 0, 0)


class Home(str, Enum):
    """Ring in which a named element lives."""
    SPHERE2 = "Sphere2"
    MF2 = "MF2"
    MZ2 = "MZ2"
    UF2 = "uF2"
    UZ2 = "uZ2"
    STEENROD = "Steenrod"


@dataclass(frozen=True)
class NamedElement:
    name: str
    degree: Degree
    home: Home
    description: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "degree": list(self.degree.as_tuple()),
            "home": self.home.value,
            "description": self.description,
        }


def betti_degree(d: TriDegree) -> RODegree:
    """Betti realization: 1^{p,q,w} goes to 1^{p+q*sigma}."""
    return RODegree(d.p, d.q)


def base_change_degree(d: TriDegree) -> Tuple[int, int]:
    """Base change to C: 1^{p,q,w} goes to 1^{p+q,w}."""
    return (d.p + d.q, d.w)


def artin_embed(r: RODegree) -> TriDegree:
    """Artin-Tate embedding of C2-spectra: 1^{p+q*sigma} goes to 1^{p,q,0}."""
    return TriDegree(r.p, r.q, 0)


def underlying_degree(r: RODegree) -> int:
    """Underlying spectrum: 1^{p+q*sigma} goes to 1^{p+q}."""
    return r.p + r.q


def geometric_fixed_degree(r: RODegree) -> int:
    """Geometric fixed points: 1^{p+q*sigma} goes to 1^{p}."""
    return r.p


def tau_degree(i: int) -> TriDegree:
    k = 2 ** i
    return TriDegree(k, k - 1, k - 1)


def xi_degree(i: int) -> TriDegree:
    k = 2 ** i - 1
    return TriDegree(k, k, k)


STEENROD_GENERATOR_LIMIT = 7


def _build_registry() -> Dict[str, NamedElement]:
    entries: List[NamedElement] = [
        NamedElement("ta", TriDegree(0, 0, -1), Home.SPHERE2,
                     "weight-shifting class; Betti realization 1"),
        NamedElement("a", TriDegree(0, -1, 0), Home.SPHERE2,
                     "Artin-Tate image of a_sigma"),
        NamedElement("rho", TriDegree(0, -1, -1), Home.SPHERE2, "rho = ta*a"),
        NamedElement("eta", TriDegree(0, 1, 1), Home.SPHERE2, "Hopf map, detected by alpha_1"),
        NamedElement("u", TriDegree(1, -1, 0), Home.MF2, "Artin-Tate image of u_sigma"),
        NamedElement("tau", TriDegree(1, -1, -1), Home.MF2, "tau = ta*u"),
        NamedElement("a_sigma", RODegree(0, -1), Home.UF2, "Euler class of sigma"),
        NamedElement("u_sigma", RODegree(1, -1), Home.UF2, "orientation class mod 2"),
        NamedElement("theta", RODegree(-2, 2), Home.UF2, "bottom of the mod 2 negative cone"),
        NamedElement("u_2sigma", RODegree(2, -2), Home.UZ2, "orientation class of 2*sigma"),
        NamedElement("theta_Z", RODegree(-3, 3), Home.UZ2, "bottom of the integral negative cone"),
    ]
    for i in range(STEENROD_GENERATOR_LIMIT + 1):
        entries.append(NamedElement(f"tau_{i}", tau_degree(i), Home.STEENROD))
    for i in range(1, STEENROD_GENERATOR_LIMIT + 1):
        entries.append(NamedElement(f"xi_{i}", xi_degree(i), Home.STEENROD))

    registry: Dict[str, NamedElement] = {}
    for entry in entries:
        if entry.name in registry:
            raise ValueError(f"duplicate registry name {entry.name}")
        registry[entry.name] = entry
    return registry


REGISTRY: Dict[str, NamedElement] = _build_registry()


def named_element(name: str) -> NamedElement:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownName(f"no element named {name!r}") from None


def list_elements() -> List[NamedElement]:
    return list(REGISTRY.values())


def iter_box(*ranges: Tuple[int, int]) -> Iterator[Tuple[int, ...]]:
    """Iterate integer points of an inclusive box, last coordinate fastest."""
    if not ranges:
        yield ()
        return
    lo, hi = ranges[0]
    for x in range(lo, hi + 1):
        for rest in iter_box(*ranges[1:]):
            yield (x,) + rest


def parse_degree(text: str) -> Degree:
    """Parse ``p,q`` or ``p,q,w`` into a degree."""
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise InputError(f"degree must be comma-separated integers, got {text!r}") from None
    if len(parts) == 3:
        return TriDegree(*parts)
    if len(parts) == 2:
        return RODegree(*parts)
    raise InputError(f"degree needs 2 or 3 coordinates, got {text!r}")


def parse_tridegree(text: str) -> TriDegree:
    d = parse_degree(text)
    if not isinstance(d, TriDegree):
        raise InputError(f"expected a tri-degree p,q,w, got {text!r}")
    return d
