"""Sparse order-m hypermatrices with exact rational entries.

Entries live in a map keyed by full 1-based index tuples; zeros are never
stored, and looking up an absent tuple yields 0.  Construction and all
algebraic identities run in exact rational arithmetic; iterative solvers
convert to floats on entry (see :mod:`dhspec.spectra`).

Index tuples are kept uncompressed because slot position is semantically
significant for directed adjacency tensors: the same multiset of indices
can appear with different leading blocks and different values.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .errors import (
    DimensionMismatch,
    DimensionTooLargeForExhaustiveSearch,
    NonpositiveDiagonal,
    ParseError,
)
from ._graphs import is_strongly_connected_digraph

Scalar = Union[int, Fraction, float]
IndexTuple = tuple[int, ...]


def is_exact_vector(x: Sequence[Scalar]) -> bool:
    """True when no component is a binary float."""
    return not any(isinstance(c, float) for c in x)


def as_exact_vector(x: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Convert componentwise to Fraction; floats convert exactly."""
    return tuple(Fraction(c) for c in x)


def as_float_vector(x: Sequence[Scalar]) -> tuple[float, ...]:
    return tuple(float(c) for c in x)


class Hypermatrix:
    """Order-m, dimension-n sparse array over exact rationals."""

    __slots__ = ("order", "dim", "_entries", "_rows", "_float_view", "_int_view")

    def __init__(
        self,
        order: int,
        dim: int,
        entries: Optional[Mapping[IndexTuple, Scalar]] = None,
    ):
        if order < 2:
            raise DimensionMismatch(f"order must be >= 2, got {order}")
        if dim < 1:
            raise DimensionMismatch(f"dim must be >= 1, got {dim}")
        self.order = order
        self.dim = dim
        store: dict[IndexTuple, Fraction] = {}
        if entries:
            for key, value in entries.items():
                key = tuple(key)
                if len(key) != order:
                    raise DimensionMismatch(
                        f"index tuple {key} has arity {len(key)}, expected {order}"
                    )
                if any(not (1 <= i <= dim) for i in key):
                    raise DimensionMismatch(f"index tuple {key} outside [1, {dim}]")
                if isinstance(value, float):
                    raise TypeError("entries must be exact rationals, not floats")
                value = Fraction(value)
                if value != 0:
                    store[key] = value
        self._entries = store
        self._rows: Optional[dict[int, list[tuple[IndexTuple, Fraction]]]] = None
        self._float_view = None
        self._int_view: Optional[tuple[int, tuple]] = None

    # -- basic container behaviour

    @property
    def entries(self) -> Mapping[IndexTuple, Fraction]:
        return MappingProxyType(self._entries)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def __getitem__(self, key: IndexTuple) -> Fraction:
        return self._entries.get(tuple(key), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        return (
            self.order == other.order
            and self.dim == other.dim
            and self._entries == other._entries
        )

    def __hash__(self):
        return hash((self.order, self.dim, frozenset(self._entries.items())))

    def __repr__(self):
        return f"Hypermatrix(order={self.order}, dim={self.dim}, nnz={self.nnz})"

    def _row_groups(self) -> dict[int, list[tuple[IndexTuple, Fraction]]]:
        if self._rows is None:
            rows: dict[int, list[tuple[IndexTuple, Fraction]]] = defaultdict(list)
            for key, value in self._entries.items():
                rows[key[0]].append((key, value))
            self._rows = dict(rows)
        return self._rows

    def _int_entries(self) -> tuple[int, tuple]:
        # Common-denominator view so exact contractions run on plain ints.
        if self._int_view is None:
            common = math.lcm(*(v.denominator for v in self._entries.values())) if self._entries else 1
            items = tuple(
                (key[0], key[1:], int(value * common))
                for key, value in self._entries.items()
            )
            self._int_view = (common, items)
        return self._int_view

    def float_arrays(self):
        """(rows, cols, vals) numpy views for float-mode contraction kernels.

        rows holds 0-based first indices, cols the 0-based trailing indices
        with shape (nnz, order-1), vals the float entry values.
        """
        if self._float_view is None:
            nnz = self.nnz
            rows = np.empty(nnz, dtype=np.intp)
            cols = np.empty((nnz, self.order - 1), dtype=np.intp)
            vals = np.empty(nnz, dtype=np.float64)
            for pos, (key, value) in enumerate(sorted(self._entries.items())):
                rows[pos] = key[0] - 1
                cols[pos] = [i - 1 for i in key[1:]]
                vals[pos] = float(value)
            self._float_view = (rows, cols, vals)
        return self._float_view

    # -- algebra

    def apply(self, x: Sequence[Scalar]) -> list[Scalar]:
        """Contract the trailing order-1 slots with x.

        Component i sums a[i, i2, ..., im] * x[i2] * ... * x[im]; exact when
        x has no float components.
        """
        if len(x) != self.dim:
            raise DimensionMismatch(
                f"vector has length {len(x)}, tensor dimension is {self.dim}"
            )
        if is_exact_vector(x):
            xe = [Fraction(c) for c in x]
            den = math.lcm(*(c.denominator for c in xe))
            nums = [int(c * den) for c in xe]
            common, items = self._int_entries()
            acc = [0] * self.dim
            for row, rest, value in items:
                term = value
                for j in rest:
                    term *= nums[j - 1]
                acc[row - 1] += term
            scale = common * den ** (self.order - 1)
            return [Fraction(total, scale) for total in acc]
        rows, cols, vals = self.float_arrays()
        xv = np.asarray(as_float_vector(x))
        if self.nnz == 0:
            return [0.0] * self.dim
        contrib = vals * xv[cols].prod(axis=1)
        return list(np.bincount(rows, weights=contrib, minlength=self.dim))

    def form(self, x: Sequence[Scalar]) -> Scalar:
        """The degree-m homogeneous form: sum over entries of a * x[i1]...x[im]."""
        if len(x) != self.dim:
            raise DimensionMismatch(
                f"vector has length {len(x)}, tensor dimension is {self.dim}"
            )
        if is_exact_vector(x):
            xe = [Fraction(c) for c in x]
            den = math.lcm(*(c.denominator for c in xe))
            nums = [int(c * den) for c in xe]
            common, items = self._int_entries()
            total = 0
            for row, rest, value in items:
                term = value * nums[row - 1]
                for j in rest:
                    term *= nums[j - 1]
                total += term
            return Fraction(total, common * den**self.order)
        if self.nnz == 0:
            return 0.0
        rows, cols, vals = self.float_arrays()
        xv = np.asarray(as_float_vector(x))
        return float((vals * xv[rows] * xv[cols].prod(axis=1)).sum())

    def row_sums(self) -> list[Fraction]:
        sums = [Fraction(0)] * self.dim
        for key, value in self._entries.items():
            sums[key[0] - 1] += value
        return sums

    def __add__(self, other: "Hypermatrix") -> "Hypermatrix":
        self._check_same_shape(other)
        merged = dict(self._entries)
        for key, value in other._entries.items():
            merged[key] = merged.get(key, Fraction(0)) + value
        return Hypermatrix(self.order, self.dim, merged)

    def __sub__(self, other: "Hypermatrix") -> "Hypermatrix":
        self._check_same_shape(other)
        merged = dict(self._entries)
        for key, value in other._entries.items():
            merged[key] = merged.get(key, Fraction(0)) - value
        return Hypermatrix(self.order, self.dim, merged)

    def _check_same_shape(self, other: "Hypermatrix"):
        if self.order != other.order or self.dim != other.dim:
            raise DimensionMismatch(
                f"shape mismatch: order {self.order} dim {self.dim} vs "
                f"order {other.order} dim {other.dim}"
            )


def power_vector(x: Sequence[Scalar], p: int) -> list[Scalar]:
    """Componentwise p-th power, preserving the scalar mode."""
    if p < 1:
        raise ValueError(f"power must be a positive integer, got {p}")
    return [c**p for c in x]


def identity_matrix(n: int) -> Hypermatrix:
    return Hypermatrix(2, n, {(i, i): Fraction(1) for i in range(1, n + 1)})


def diagonal_matrix(diag: Sequence[Scalar]) -> Hypermatrix:
    n = len(diag)
    return Hypermatrix(
        2, n, {(i, i): Fraction(diag[i - 1]) for i in range(1, n + 1) if diag[i - 1]}
    )


def shao_product(a: Hypermatrix, b: Hypermatrix) -> Hypermatrix:
    """General tensor product: order (m-1)(k-1)+1 sparse contraction.

    c[i, a1, ..., a_{m-1}] sums a[i, i2, ..., im] * b[i2, a1] * ... *
    b[im, a_{m-1}], each a_j being a (k-1)-slot block.  With an order-2
    second factor this specializes to matrix action on each trailing slot.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    m, k = a.order, b.order
    out_order = (m - 1) * (k - 1) + 1
    b_rows: dict[int, list[tuple[IndexTuple, Fraction]]] = defaultdict(list)
    for key, value in b.entries.items():
        b_rows[key[0]].append((key[1:], value))
    acc: dict[IndexTuple, Fraction] = defaultdict(Fraction)
    for key, value in a.entries.items():
        row_choices = [b_rows.get(i, ()) for i in key[1:]]
        if any(len(choice) == 0 for choice in row_choices):
            continue
        for picks in product(*row_choices):
            coeff = value
            index: tuple[int, ...] = (key[0],)
            for suffix, bval in picks:
                coeff = coeff * bval
                index = index + suffix
            acc[index] += coeff
    return Hypermatrix(out_order, a.dim, acc)


def diagonal_similarity(a: Hypermatrix, diag: Sequence[Scalar]) -> Hypermatrix:
    """Conjugate by a positive diagonal, preserving the spectrum.

    Computes D^-(m-1) * A * D through two products; the result has entries
    a[i1..im] * d[i2]...d[im] / d[i1]^(m-1).
    """
    if len(diag) != a.dim:
        raise DimensionMismatch(
            f"diagonal has length {len(diag)}, tensor dimension is {a.dim}"
        )
    exact = [Fraction(c) for c in diag]
    if any(c <= 0 for c in exact):
        raise NonpositiveDiagonal("all diagonal entries must be positive")
    m = a.order
    left = diagonal_matrix([c ** -(m - 1) for c in exact])
    right = diagonal_matrix(exact)
    return shao_product(shao_product(left, a), right)


def symmetrize(a: Hypermatrix) -> Hypermatrix:
    """Average over all index permutations.

    The result is invariant under slot permutation and induces the same
    degree-m form as the input.
    """
    m = a.order
    weight = Fraction(1, math.factorial(m))
    acc: dict[IndexTuple, Fraction] = defaultdict(Fraction)
    for key, value in a.entries.items():
        share = value * weight
        for perm in permutations(range(m)):
            acc[tuple(key[p] for p in perm)] += share
    return Hypermatrix(m, a.dim, acc)


def is_supersymmetric(a: Hypermatrix) -> bool:
    """Entries invariant under every permutation of the index tuple."""
    groups: dict[IndexTuple, list[Fraction]] = defaultdict(list)
    for key, value in a.entries.items():
        groups[tuple(sorted(key))].append(value)
    m = a.order
    for key, values in groups.items():
        counts: dict[int, int] = defaultdict(int)
        for i in key:
            counts[i] += 1
        arrangements = math.factorial(m)
        for c in counts.values():
            arrangements //= math.factorial(c)
        if len(values) != arrangements or len(set(values)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Eigenvalue localization


@dataclass(frozen=True)
class GershgorinDisk:
    center: Fraction
    radius: Fraction


def gershgorin_disks(a: Hypermatrix) -> list[GershgorinDisk]:
    """One disk per row: center the diagonal entry, radius the absolute
    off-diagonal row mass.  Every eigenvalue lies in the union."""
    centers = [Fraction(0)] * a.dim
    radii = [Fraction(0)] * a.dim
    for key, value in a.entries.items():
        i = key[0]
        if all(j == i for j in key):
            centers[i - 1] = value
        else:
            radii[i - 1] += abs(value)
    return [GershgorinDisk(centers[i], radii[i]) for i in range(a.dim)]


def in_disk_union(
    disks: Sequence[GershgorinDisk], value: float, tol: float = 0.0
) -> bool:
    return any(
        abs(value - float(d.center)) <= float(d.radius) + tol for d in disks
    )


# ---------------------------------------------------------------------------
# Reducibility hierarchy


@dataclass(frozen=True)
class IrreducibilityReport:
    """Witness subset (or None) plus the two graph-based irreducibility flags."""

    reducible_witness: Optional[frozenset[int]]
    weakly_irreducible: bool
    weak_star_irreducible: bool


def weak_graph(a: Hypermatrix) -> dict[int, set[int]]:
    """Arc i -> j for every nonzero entry with first index i and j anywhere
    in the trailing slots."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, a.dim + 1)}
    for key in a.entries:
        adj[key[0]].update(key[1:])
    return adj


def weak_star_graph(a: Hypermatrix) -> dict[int, set[int]]:
    """Arc i -> j for every nonzero entry with first index i and last index j."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, a.dim + 1)}
    for key in a.entries:
        adj[key[0]].add(key[-1])
    return adj


def is_weakly_irreducible(a: Hypermatrix) -> bool:
    return is_strongly_connected_digraph(a.dim, weak_graph(a))


def is_weak_star_irreducible(a: Hypermatrix) -> bool:
    return is_strongly_connected_digraph(a.dim, weak_star_graph(a))


def reducible_witness(a: Hypermatrix, cap: int = 24) -> Optional[frozenset[int]]:
    """Exhaustive search for a nonempty proper J with a[i1, rest] = 0 whenever
    i1 is inside J and every trailing index is outside.

    The search is exponential by definition, so it refuses dimensions above
    ``cap`` instead of approximating.
    """
    n = a.dim
    if n > cap:
        raise DimensionTooLargeForExhaustiveSearch(
            f"dimension {n} exceeds the subset-search cap {cap}"
        )
    items = [
        (1 << (key[0] - 1), _mask(key[1:]))
        for key in a.entries
    ]
    for j_mask in range(1, (1 << n) - 1):
        blocked = False
        for first_bit, rest_mask in items:
            if (first_bit & j_mask) and not (rest_mask & j_mask):
                blocked = True
                break
        if not blocked:
            return frozenset(
                i + 1 for i in range(n) if j_mask & (1 << i)
            )
    return None


def _mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def reducibility_report(a: Hypermatrix, cap: int = 24) -> IrreducibilityReport:
    return IrreducibilityReport(
        reducible_witness=reducible_witness(a, cap=cap),
        weakly_irreducible=is_weakly_irreducible(a),
        weak_star_irreducible=is_weak_star_irreducible(a),
    )


# ---------------------------------------------------------------------------
# .ht text format


def format_ht(a: Hypermatrix) -> str:
    """Header ``order m dim n`` then one ``i1 ... im p/q`` line per nonzero,
    in lexicographic tuple order."""
    lines = [f"order {a.order} dim {a.dim}"]
    for key in sorted(a.entries):
        indices = " ".join(str(i) for i in key)
        lines.append(f"{indices} {a.entries[key]}")
    return "\n".join(lines) + "\n"


def parse_ht(text: str) -> Hypermatrix:
    order = dim = None
    entries: dict[IndexTuple, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if order is None:
            if len(tokens) != 4 or tokens[0] != "order" or tokens[2] != "dim":
                raise ParseError("expected 'order <m> dim <n>' header", lineno)
            try:
                order, dim = int(tokens[1]), int(tokens[3])
            except ValueError:
                raise ParseError("order and dim must be integers", lineno) from None
            continue
        if len(tokens) != order + 1:
            raise ParseError(
                f"expected {order} indices and a value, got {len(tokens)} tokens",
                lineno,
            )
        try:
            key = tuple(int(tok) for tok in tokens[:-1])
            value = Fraction(tokens[-1])
        except ValueError:
            raise ParseError("malformed entry line", lineno) from None
        if key in entries:
            raise ParseError(f"duplicate index tuple {key}", lineno)
        entries[key] = value
    if order is None or dim is None:
        raise ParseError("missing 'order <m> dim <n>' header")
    return Hypermatrix(order, dim, entries)
