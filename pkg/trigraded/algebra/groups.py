"""Finitely generated abelian groups as lists of labelled cyclic summands."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Tuple

from trigraded.errors import InputError

_ORDER_RE = re.compile(r"^Z/(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Order:
    """Order of a cyclic summand.

    ``modulus == 0`` is a free summand over the 2-adic integers; otherwise the summand is Z/modulus.
    """

    modulus: int = 0

    @classmethod
    def free(cls) -> "Order":
        return cls(0)

    @classmethod
    def two_power(cls, k: int) -> "Order":
        if k < 1:
            raise ValueError("torsion exponent must be positive")
        return cls(2 ** k)

    @property
    def is_free(self) -> bool:
        return self.modulus == 0

    @property
    def two_exponent(self) -> Optional[int]:
        """k for Z/2^k, None otherwise."""
        m = self.modulus
        if m < 2 or m & (m - 1):
            return None
        return m.bit_length() - 1

    def sort_key(self) -> Tuple[int, int]:
        return (0, 0) if self.is_free else (1, self.modulus)

    def __str__(self) -> str:
        if self.is_free:
            return "Z2"
        k = self.two_exponent
        if k is not None and k > 1:
            return f"Z/2^{k}"
        return f"Z/{self.modulus}"

    @classmethod
    def parse(cls, text: str) -> "Order":
        text = text.strip()
        if text in ("Z2", "Z_2", "Z2adic"):
            return cls.free()
        if text == "F2":
            return cls(2)
        match = _ORDER_RE.match(text)
        if not match:
            raise InputError(f"unrecognised summand order {text!r}")
        base = int(match.group(1))
        exponent = int(match.group(2) or 1)
        if base < 2:
            raise InputError(f"summand order must be at least 2, got {text!r}")
        return cls(base ** exponent)


FREE = Order.free()
F2 = Order(2)


@dataclass(frozen=True)
class Summand:
    order: Order
    label: str
    # Representative in whatever coordinates produced the summand; not part of equality.
    vector: Optional[Tuple[int, ...]] = field(default=None, compare=False, repr=False)

    def sort_key(self) -> Tuple:
        return (self.order.sort_key(), self.label)

    def relabel(self, label: str) -> "Summand":
        return Summand(self.order, label, self.vector)


@dataclass(frozen=True)
class GroupPresentation:
    """Direct sum of cyclic summands in canonical order. The empty sum is the zero group."""

    summands: Tuple[Summand, ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.summands, key=Summand.sort_key))
        object.__setattr__(self, "summands", ordered)

    @classmethod
    def of(cls, *pairs: Tuple[Order, str]) -> "GroupPresentation":
        return cls(tuple(Summand(order, label) for order, label in pairs))

    @classmethod
    def zero(cls) -> "GroupPresentation":
        return cls(())

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __bool__(self) -> bool:
        return bool(self.summands)

    @property
    def free_rank(self) -> int:
        return sum(1 for s in self.summands if s.order.is_free)

    @property
    def torsion_orders(self) -> List[Order]:
        return [s.order for s in self.summands if not s.order.is_free]

    def shape(self) -> Tuple[str, ...]:
        """Orders only, ignoring labels."""
        return tuple(str(s.order) for s in self.summands)

    def labels(self) -> List[str]:
        return [s.label for s in self.summands]

    def dim_f2(self) -> int:
        """Dimension of G/2 (every cyclic summand contributes one)."""
        return len(self.summands)

    def map_labels(self, fn: Callable[[str], str]) -> "GroupPresentation":
        return GroupPresentation(tuple(s.relabel(fn(s.label)) for s in self.summands))

    def reduce_mod_two(self) -> "GroupPresentation":
        """G tensor F2, one F2 per summand."""
        return GroupPresentation(tuple(Summand(F2, s.label, s.vector) for s in self.summands))

    def __add__(self, other: "GroupPresentation") -> "GroupPresentation":
        return direct_sum([self, other])

    def to_pairs(self) -> List[List[str]]:
        return [[str(s.order), s.label] for s in self.summands]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[str]]) -> "GroupPresentation":
        summands = []
        for pair in pairs:
            order, label = list(pair)
            summands.append(Summand(Order.parse(order), str(label)))
        return cls(tuple(summands))

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        return " + ".join(f"{s.order}{{{s.label}}}" for s in self.summands)


def direct_sum(groups: Iterable[GroupPresentation]) -> GroupPresentation:
    summands: List[Summand] = []
    for group in groups:
        summands.extend(group.summands)
    return GroupPresentation(tuple(summands))
