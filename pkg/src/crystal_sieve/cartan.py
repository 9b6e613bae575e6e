"""Finite-type Cartan data: matrices, symmetrizers, positive roots, pairings.

Conventions, fixed once here and relied on everywhere else:

* The Cartan matrix entry at (i, j) is the pairing of the i-th simple
  coroot with the j-th simple root, so rows index coroots.
* Symmetrizers d_i are the unique positive integers with min d_i = 1
  making diag(d) * A symmetric; the bilinear form is (a_i, a_j) = d_i * A[i][j].
* Roots and weights are plain integer tuples: a root holds its simple-root
  coordinates, a weight its fundamental-weight coordinates.
* Numbering within each family follows the standard Bourbaki tables.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidRank, NotARoot, ShapeTooLong
from .partitions import Partition, as_partition

Root = tuple[int, ...]
Weight = tuple[int, ...]

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),  # D3 is rejected rather than silently aliased to A3
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_TYPE_RE = re.compile(r"^([A-G])\s*(\d+)$")


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_RANGE:
            raise InvalidRank(f"unknown family {self.family!r}")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidRank(f"{self.family}{self.rank} is not a finite type here")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = _TYPE_RE.match(text.strip().upper())
        if not m:
            raise InvalidRank(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with rows indexed by coroots."""
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, down=-1, up=-1):
        # a[i][j] is the coroot-i against root-j pairing
        a[i][j] = down
        a[j][i] = up

    fam = ct.family
    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B" and n >= 2:
            a[n - 1][n - 2] = -2  # short coroot sees the long root doubled
        if fam == "C" and n >= 2:
            a[n - 2][n - 1] = -2
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "E":
        # chain 1-3-4-5-...-n with node 2 hanging off node 4
        chain = [0] + list(range(2, n))
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2)
        bond(2, 3)
        a[2][1] = -2  # arrow from node 2 to node 3
    elif fam == "G":
        a[0][1] = -3
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


def symmetrizers(ct: CartanType) -> tuple[int, ...]:
    """Positive integers d_i with min 1 making diag(d) * A symmetric."""
    n = ct.rank
    fam = ct.family
    if fam in ("A", "D", "E"):
        return (1,) * n
    if fam == "B":
        return (2,) * (n - 1) + (1,)
    if fam == "C":
        return (1,) * (n - 1) + (2,)
    if fam == "F":
        return (2, 2, 1, 1)
    return (1, 3)  # G2


def _reflect(matrix, i: int, beta: Root) -> Root:
    """Simple reflection s_i in simple-root coordinates."""
    out = list(beta)
    out[i] -= sum(matrix[i][j] * beta[j] for j in range(len(beta)))
    return tuple(out)


def _positive_roots(matrix) -> tuple[Root, ...]:
    """Closure of the simple roots under all simple reflections, positive half.

    Every root of a finite type is a reflection image of a simple root, so a
    plain orbit walk enumerates the whole root system; we keep the vectors
    with nonnegative coordinates.
    """
    n = len(matrix)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(n):
            img = _reflect(matrix, i, beta)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    positive = [b for b in seen if all(c >= 0 for c in b)]
    # simple roots first, then by height, ties broken toward lower indices
    positive.sort(key=lambda b: (sum(b), tuple(-c for c in b)))
    return tuple(positive)


@dataclass(frozen=True, eq=False)
class CartanDatum:
    """Immutable bundle of a Cartan type with its derived combinatorics.

    ``rho_pairings`` caches (beta, rho) for every positive root beta; since
    (a_i, rho) = d_i, that pairing is the symmetrizer-weighted height.
    """

    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    rho_pairings: dict[Root, int]

    @property
    def rank(self) -> int:
        return self.cartan_type.rank


@functools.cache
def _build(ct: CartanType) -> CartanDatum:
    matrix = cartan_matrix(ct)
    d = symmetrizers(ct)
    roots = _positive_roots(matrix)
    rho = {beta: sum(c * d[i] for i, c in enumerate(beta)) for beta in roots}
    return CartanDatum(ct, matrix, d, roots, rho)


def build_cartan_datum(ct: CartanType | str) -> CartanDatum:
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return _build(ct)


def _check_len(datum: CartanDatum, v: tuple[int, ...], what: str) -> None:
    if len(v) != datum.rank:
        raise DimensionMismatch(f"{what} has length {len(v)}, rank is {datum.rank}")


def pairing(datum: CartanDatum, beta: Root, lam: Weight) -> int:
    """(beta, lam) for beta in root coordinates and lam in weight coordinates.

    Bilinearity gives (beta, lam) = sum_i c_i * d_i * <h_i, lam> and
    <h_i, lam> is just the i-th weight coordinate.
    """
    _check_len(datum, beta, "root")
    _check_len(datum, lam, "weight")
    d = datum.symmetrizers
    return sum(c * d[i] * lam[i] for i, c in enumerate(beta))


def rho_pairing(datum: CartanDatum, beta: Root) -> int:
    """(beta, rho) = sum_i c_i * d_i."""
    cached = datum.rho_pairings.get(beta)
    if cached is not None:
        return cached
    _check_len(datum, beta, "root")
    return sum(c * datum.symmetrizers[i] for i, c in enumerate(beta))


def root_norm(datum: CartanDatum, beta: Root) -> int:
    """(beta, beta) via the symmetrized Cartan matrix."""
    _check_len(datum, beta, "root")
    a = datum.cartan_matrix
    d = datum.symmetrizers
    return sum(
        ci * d[i] * a[i][j] * cj
        for i, ci in enumerate(beta) if ci
        for j, cj in enumerate(beta) if cj
    )


def copairing(datum: CartanDatum, beta: Root, lam: Weight) -> int:
    """<beta^vee, lam> = 2 (beta, lam) / (beta, beta); integral for real roots."""
    norm = root_norm(datum, beta)
    if norm <= 0:
        raise NotARoot(f"{beta} has nonpositive norm {norm}")
    num = 2 * pairing(datum, beta, lam)
    if num % norm:
        raise NotARoot(f"coroot pairing of {beta} with {lam} is not integral")
    return num // norm


def corho_pairing(datum: CartanDatum, beta: Root) -> int:
    """<beta^vee, rho> = 2 (beta, rho) / (beta, beta)."""
    norm = root_norm(datum, beta)
    if norm <= 0:
        raise NotARoot(f"{beta} has nonpositive norm {norm}")
    num = 2 * rho_pairing(datum, beta)
    if num % norm:
        raise NotARoot(f"coroot height of {beta} is not integral")
    return num // norm


def root_height(beta: Root) -> int:
    return sum(beta)


def highest_root(datum: CartanDatum) -> Root:
    """The unique root of maximal height."""
    return datum.positive_roots[-1]


def is_dominant(lam: Weight) -> bool:
    return all(c >= 0 for c in lam)


def gl_weight(lam: Partition | tuple[int, ...], m: int) -> Weight:
    """Fundamental coordinates of a partition viewed as a weight for m letters:
    coordinate i is lam_i - lam_(i+1) after padding with zeros to length m.

    The result has m - 1 coordinates and is always dominant.
    """
    lam = as_partition(lam)
    if len(lam) > m:
        raise ShapeTooLong(f"{len(lam)} parts will not fit into {m} letters")
    padded = lam + (0,) * (m - len(lam))
    return tuple(padded[i] - padded[i + 1] for i in range(m - 1))
