"""Exact arithmetic on low-rank Picard lattices.

A smooth Fano threefold with free Picard group of rank rho carries a symmetric
trilinear intersection form Pic x Pic x Pic -> Z.  This module models divisor
classes as integer coordinate vectors in a fixed basis, the cup-product form as
a table of values on basis multisets, and evaluates triple products by full
multilinear expansion.  Everything is immutable and pure; no floats anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ConstraintError, DimensionMismatchError

__all__ = [
    "DivisorClass",
    "TrilinearForm",
    "triple_product",
    "anticanonical_class",
]


@dataclass(frozen=True)
class DivisorClass:
    r"""A divisor class in a fixed basis of Pic(X) \cong Z^rho, rho in {2, 3}.

    ``coords`` are the integer coordinates; the lattice rank is ``rho``.
    Addition, negation and integer scaling are provided so linearity statements
    can be written down directly.
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) not in (2, 3):
            raise DimensionMismatchError(
                f"divisor classes must have rank 2 or 3, got {len(coords)} coordinates"
            )

    @property
    def rho(self) -> int:
        return len(self.coords)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if self.rho != other.rho:
            raise DimensionMismatchError(
                f"cannot add classes of rank {self.rho} and {other.rho}"
            )
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def __rmul__(self, n: int) -> "DivisorClass":
        return DivisorClass(tuple(n * a for a in self.coords))


def _multiset_keys(rho: int) -> list[tuple[int, int, int]]:
    """All index multisets 1 <= i <= j <= k <= rho, the support of a form."""
    return list(itertools.combinations_with_replacement(range(1, rho + 1), 3))


@dataclass(frozen=True)
class TrilinearForm:
    """A symmetric trilinear form on Z^rho given by its values on basis triples.

    ``entries`` maps each sorted index triple (i, j, k), 1-based with
    i <= j <= k <= rho, to the integer H_i . H_j . H_k.  Every multiset must be
    present -- a missing entry is an error, not an implicit zero -- so that a
    form is unambiguous data.  Use :meth:`from_nonzero` when writing down sparse
    forms by hand.
    """

    rho: int
    entries: Mapping[tuple[int, int, int], int]

    def __post_init__(self) -> None:
        if self.rho not in (2, 3):
            raise DimensionMismatchError(f"rank must be 2 or 3, got {self.rho}")
        normalized: dict[tuple[int, int, int], int] = {}
        for key, value in self.entries.items():
            i, j, k = key
            sorted_key = tuple(sorted((int(i), int(j), int(k))))
            if not (1 <= sorted_key[0] and sorted_key[2] <= self.rho):
                raise DimensionMismatchError(
                    f"index triple {key} out of range for rank {self.rho}"
                )
            if sorted_key in normalized and normalized[sorted_key] != int(value):
                raise ConstraintError(
                    f"conflicting values for basis triple {sorted_key}"
                )
            normalized[sorted_key] = int(value)
        required = _multiset_keys(self.rho)
        missing = [k for k in required if k not in normalized]
        if missing:
            raise ConstraintError(
                f"trilinear form on rank {self.rho} is missing entries {missing}"
            )
        object.__setattr__(
            self, "entries", {k: normalized[k] for k in required}
        )

    @classmethod
    def from_nonzero(
        cls, rho: int, nonzero: Mapping[tuple[int, int, int], int]
    ) -> "TrilinearForm":
        """Build a form from its nonzero entries, filling the rest with 0."""
        entries = {key: 0 for key in _multiset_keys(rho)}
        for key, value in nonzero.items():
            entries[tuple(sorted(key))] = int(value)
        return cls(rho, entries)

    @classmethod
    def rank2(cls, h111: int, h112: int, h122: int, h222: int) -> "TrilinearForm":
        """Convenience constructor for rank 2: the four cubes in order."""
        return cls(
            2,
            {(1, 1, 1): h111, (1, 1, 2): h112, (1, 2, 2): h122, (2, 2, 2): h222},
        )

    def value(self, i: int, j: int, k: int) -> int:
        """The form on basis vectors e_i, e_j, e_k (any index order)."""
        return self.entries[tuple(sorted((i, j, k)))]

    def transposed(self, permutation: tuple[int, ...]) -> "TrilinearForm":
        """The same form in a permuted basis; ``permutation[new-1] = old``."""
        if sorted(permutation) != list(range(1, self.rho + 1)):
            raise DimensionMismatchError(
                f"{permutation} is not a permutation of 1..{self.rho}"
            )
        return TrilinearForm(
            self.rho,
            {
                key: self.value(*(permutation[i - 1] for i in key))
                for key in _multiset_keys(self.rho)
            },
        )


def triple_product(
    form: TrilinearForm, x: DivisorClass, y: DivisorClass, z: DivisorClass
) -> int:
    """Evaluate x . y . z under ``form`` by full multilinear expansion.

    The sum runs over all ordered index triples; symmetry of the stored form
    makes the result independent of argument order.
    """
    for cls_ in (x, y, z):
        if cls_.rho != form.rho:
            raise DimensionMismatchError(
                f"class of rank {cls_.rho} fed to a rank-{form.rho} form"
            )
    indices = range(1, form.rho + 1)
    total = 0
    for i in indices:
        xi = x.coords[i - 1]
        if xi == 0:
            continue
        for j in indices:
            yj = y.coords[j - 1]
            if yj == 0:
                continue
            for k in indices:
                zk = z.coords[k - 1]
                if zk == 0:
                    continue
                total += xi * yj * zk * form.value(i, j, k)
    return total


def anticanonical_class(mu1: int, mu2: int, rho: int) -> DivisorClass:
    """The anticanonical class in the basis dual to a pair of extremal rays.

    Rank 2: with H_i the pullback of the ample generator along the contraction
    of the ray R_i of length mu_i, the lattice-index argument pins
    -K = mu2*H_1 + mu1*H_2, so the coordinates are (mu2, mu1).

    Rank 3 (triple conic bundle case): the three coordinates all equal 2/d
    where d is the degree of the induced triple cover, passed in the ``mu1``
    slot (``mu2`` is ignored).  Non-integral 2/d is a pruning event.
    """
    if rho == 2:
        for mu in (mu1, mu2):
            if mu not in (1, 2, 3):
                raise ConstraintError(f"ray length must be 1, 2 or 3, got {mu}")
        return DivisorClass((mu2, mu1))
    if rho == 3:
        d = mu1
        if d <= 0 or 2 % d != 0:
            raise ConstraintError(
                f"2/d must be a positive integer for the rank-3 class, got d={d}"
            )
        c = 2 // d
        return DivisorClass((c, c, c))
    raise DimensionMismatchError(f"rank must be 2 or 3, got {rho}")
