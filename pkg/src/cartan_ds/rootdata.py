"""Root systems and Weyl groups of finite Cartan type, over exact rationals.

Weights are stored in simple-root coordinates, the canonical basis throughout
the package; fundamental-weight coordinates are derived on demand.  With the
row convention used here the Cartan matrix entry ``A[i][j]`` equals
``<alpha_j, alpha_i^vee>``, simple reflections act on coordinates through row
``i`` only, and every Weyl-group element is an integer matrix.

Reducible types are direct sums: the Cartan matrix is block diagonal and all
operations act factor-wise without special casing.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from . import linalg
from .errors import CapExceeded, InvalidType, PreconditionFailed, RankMismatch
from .linalg import Mat, frac

DEFAULT_CAP = 10**6

Coords = tuple[Fraction, ...]
IntMat = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Weight:
    """Weight-space vector in simple-root coordinates."""

    coords: Coords

    @staticmethod
    def of(values: Iterable[object]) -> "Weight":
        return Weight(tuple(frac(v) for v in values))

    @staticmethod
    def zero(rank: int) -> "Weight":
        return Weight((Fraction(0),) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        if len(self.coords) != len(other.coords):
            raise RankMismatch("weights live in different weight spaces")
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        if len(self.coords) != len(other.coords):
            raise RankMismatch("weights live in different weight spaces")
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, t: object) -> "Weight":
        f = frac(t)
        return Weight(tuple(f * a for a in self.coords))


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Group element as an integer matrix plus one word in simple reflections.

    ``matrix`` equals the product of the simple-reflection matrices listed in
    ``word`` (left factor applied last).  Equality and hashing use the matrix
    only; the word is a certificate, not part of the identity.
    """

    matrix: IntMat
    word: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return self.matrix == linalg.int_identity(n)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self applied after other."""
        return WeylElement(
            linalg.as_int_matrix(linalg.mat_mul(self.matrix, other.matrix)),
            self.word + other.word,
        )

    def inverse(self) -> "WeylElement":
        inv = linalg.as_int_matrix(linalg.inverse(linalg.matrix(self.matrix)))
        return WeylElement(inv, tuple(reversed(self.word)))


class StabilizerInfo(NamedTuple):
    gens: tuple[WeylElement, ...]
    is_regular: bool


_FAMILY_MIN_RANK = {"A": 1, "B": 1, "C": 1, "D": 2, "E": 6, "F": 4, "G": 2}
_FAMILY_MAX_RANK = {"E": 8, "F": 4, "G": 2}

_E_EDGES = {
    6: [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
    7: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
    8: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
}


def parse_cartan_type(text: str) -> tuple[tuple[str, int], ...]:
    """Parse a type string like "A2" or "B3xA1" into ((family, rank), ...)."""
    if not isinstance(text, str) or not text.strip():
        raise InvalidType("empty Cartan type")
    factors = []
    for part in text.strip().split("x"):
        m = re.fullmatch(r"\s*([A-Ga-g])\s*([0-9]+)\s*", part)
        if m is None:
            raise InvalidType(f"malformed Cartan type factor: {part!r}")
        family = m.group(1).upper()
        n = int(m.group(2))
        lo = _FAMILY_MIN_RANK[family]
        hi = _FAMILY_MAX_RANK.get(family)
        if n < lo or (hi is not None and n > hi):
            raise InvalidType(f"illegal rank for type {family}: {n}")
        if family == "E" and n not in (6, 7, 8):
            raise InvalidType(f"illegal rank for type E: {n}")
        factors.append((family, n))
    return tuple(factors)


def format_cartan_type(factors: Sequence[tuple[str, int]]) -> str:
    return "x".join(f"{fam}{n}" for fam, n in factors)


def _chain_matrix(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    return a


def _cartan_block(family: str, n: int) -> tuple[list[list[int]], list[Fraction]]:
    """Cartan matrix rows and symmetrizer of one irreducible (or A1-like) factor."""
    if family == "A":
        return _chain_matrix(n), [Fraction(1)] * n
    if family == "B":
        a = _chain_matrix(n)
        if n >= 2:
            a[n - 1][n - 2] = -2
        d = [Fraction(2)] * (n - 1) + [Fraction(1)]
        return a, d
    if family == "C":
        a = _chain_matrix(n)
        if n >= 2:
            a[n - 2][n - 1] = -2
        d = [Fraction(1)] * (n - 1) + [Fraction(2)]
        return a, d
    if family == "D":
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 2):
            a[i][i + 1] = -1
            a[i + 1][i] = -1
        if n >= 3:
            a[n - 3][n - 1] = -1
            a[n - 1][n - 3] = -1
        return a, [Fraction(1)] * n
    if family == "E":
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in _E_EDGES[n]:
            a[i - 1][j - 1] = -1
            a[j - 1][i - 1] = -1
        return a, [Fraction(1)] * n
    if family == "F":
        a = _chain_matrix(4)
        a[2][1] = -2
        return a, [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
    if family == "G":
        return [[2, -3], [-1, 2]], [Fraction(1), Fraction(3)]
    raise InvalidType(f"unknown family {family!r}")


class RootSystem:
    """Immutable root-system data generated from a Cartan matrix.

    Do not construct directly; use :func:`build_root_system`, which caches and
    validates.  All derived data (roots, rho, fundamental weights, reflection
    matrices, invariant form) is exact.
    """

    def __init__(self, factors: tuple[tuple[str, int], ...]):
        self.cartan_type = factors
        blocks = [_cartan_block(fam, n) for fam, n in factors]
        rank = sum(n for _, n in factors)
        self.rank = rank
        a = [[0] * rank for _ in range(rank)]
        d: list[Fraction] = []
        offset = 0
        for (block, sym), (_, n) in zip(blocks, factors):
            for i in range(n):
                for j in range(n):
                    a[offset + i][offset + j] = block[i][j]
            d.extend(sym)
            offset += n
        self.cartan_matrix: IntMat = tuple(tuple(row) for row in a)
        self.symmetrizer: tuple[Fraction, ...] = tuple(d)
        self.form: Mat = tuple(
            tuple(d[i] * a[i][j] for j in range(rank)) for i in range(rank)
        )
        self.simple_roots: tuple[Weight, ...] = tuple(
            Weight(tuple(Fraction(1 if j == i else 0) for j in range(rank)))
            for i in range(rank)
        )
        self._reflections: tuple[IntMat, ...] = tuple(
            tuple(
                tuple((1 if k == j else 0) - (a[i][j] if k == i else 0) for j in range(rank))
                for k in range(rank)
            )
            for i in range(rank)
        )
        self.identity = WeylElement(linalg.int_identity(rank), ())
        self.all_roots: frozenset[Weight] = self._generate_roots()
        self.positive_roots: frozenset[Weight] = frozenset(
            r for r in self.all_roots if all(c >= 0 for c in r.coords)
        )
        half = Fraction(1, 2)
        rho = Weight.zero(rank)
        for r in self.positive_roots:
            rho = rho + r
        self.rho: Weight = rho.scale(half)
        ainv = linalg.inverse(linalg.matrix(self.cartan_matrix))
        self.fundamental_weights: tuple[Weight, ...] = tuple(
            Weight(tuple(ainv[k][i] for k in range(rank))) for i in range(rank)
        )

    def _generate_roots(self) -> frozenset[Weight]:
        seen: set[Weight] = set(self.simple_roots)
        queue = deque(seen)
        while queue:
            w = queue.popleft()
            for i in range(self.rank):
                nxt = self.reflect(i, w)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return frozenset(seen)

    def pairing(self, x: Weight, y: Weight) -> Fraction:
        """Invariant symmetric bilinear form in simple-root coordinates."""
        if x.rank != self.rank or y.rank != self.rank:
            raise RankMismatch("weight rank does not match root system")
        total = Fraction(0)
        for i, xi in enumerate(x.coords):
            if xi:
                row = self.form[i]
                total += xi * sum(row[j] * y.coords[j] for j in range(self.rank) if y.coords[j])
        return total

    def norm_sq(self, x: Weight) -> Fraction:
        return self.pairing(x, x)

    def coroot_pairing(self, lam: Weight, root: Weight) -> Fraction:
        """<lam, root^vee> = 2 (lam, root) / (root, root)."""
        return 2 * self.pairing(lam, root) / self.norm_sq(root)

    def fw_coords(self, lam: Weight) -> Coords:
        """Coordinates of lam against the fundamental weights: <lam, alpha_i^vee>."""
        if lam.rank != self.rank:
            raise RankMismatch("weight rank does not match root system")
        a = self.cartan_matrix
        return tuple(
            Fraction(sum(a[i][j] * lam.coords[j] for j in range(self.rank)))
            for i in range(self.rank)
        )

    def weight_from_fw(self, values: Weight | Iterable[object]) -> Weight:
        if isinstance(values, Weight):
            values = values.coords
        vals = [frac(v) for v in values]
        if len(vals) != self.rank:
            raise RankMismatch("coordinate length does not match rank")
        out = Weight.zero(self.rank)
        for c, fw in zip(vals, self.fundamental_weights):
            if c:
                out = out + fw.scale(c)
        return out

    def reflect(self, i: int, lam: Weight) -> Weight:
        """Apply the simple reflection s_i to a weight (O(rank))."""
        a = self.cartan_matrix[i]
        pairing = sum(a[j] * lam.coords[j] for j in range(self.rank))
        if pairing == 0:
            return lam
        coords = list(lam.coords)
        coords[i] = coords[i] - pairing
        return Weight(tuple(coords))

    def simple_reflection(self, i: int) -> WeylElement:
        if not 0 <= i < self.rank:
            raise RankMismatch(f"no simple reflection with index {i}")
        return WeylElement(self._reflections[i], (i,))

    def reflection_in_root(self, root: Weight) -> WeylElement:
        """The reflection s_root as a Weyl element (matrix built exactly)."""
        if root not in self.all_roots:
            raise PreconditionFailed("reflection requested in a non-root")
        cols = []
        for j in range(self.rank):
            e = self.simple_roots[j]
            img = e - root.scale(self.coroot_pairing(e, root))
            cols.append(img.coords)
        mat = tuple(tuple(cols[j][k] for j in range(self.rank)) for k in range(self.rank))
        word = _word_for_root_reflection(self, root)
        return WeylElement(linalg.as_int_matrix(mat), word)


def _word_for_root_reflection(rs: RootSystem, root: Weight) -> tuple[int, ...]:
    """Word u^-1 s_i u where u carries root (made positive) onto simple alpha_i."""
    beta = root if all(c >= 0 for c in root.coords) else -root
    steps: list[int] = []
    while beta not in rs.simple_roots:
        # a positive non-simple root pairs positively with some simple root,
        # and reflecting there keeps it positive with smaller height
        i = next(
            j for j in range(rs.rank)
            if rs.coroot_pairing(beta, rs.simple_roots[j]) > 0
        )
        beta = rs.reflect(i, beta)
        steps.append(i)
    i = rs.simple_roots.index(beta)
    return tuple(steps) + (i,) + tuple(reversed(steps))


@lru_cache(maxsize=None)
def _build_cached(factors: tuple[tuple[str, int], ...]) -> RootSystem:
    return RootSystem(factors)


def build_root_system(cartan_type: str | Sequence[tuple[str, int]]) -> RootSystem:
    """Construct (with caching) the root system of the given finite type."""
    if isinstance(cartan_type, str):
        factors = parse_cartan_type(cartan_type)
    else:
        factors = tuple((str(f).upper(), int(n)) for f, n in cartan_type)
        factors = parse_cartan_type(format_cartan_type(factors))
    return _build_cached(factors)


def apply(w: WeylElement, lam: Weight) -> Weight:
    """Apply a Weyl element (or any integer matrix element) to a weight."""
    if len(w.matrix) != lam.rank:
        raise RankMismatch("element and weight have different ranks")
    return Weight(
        tuple(
            Fraction(sum(row[j] * lam.coords[j] for j in range(lam.rank)))
            for row in w.matrix
        )
    )


def dominant_representative(rs: RootSystem, lam: Weight) -> tuple[Weight, WeylElement]:
    """The dominant element of W.lam together with w such that w(lam) is dominant.

    Deterministic: always reflects at the lowest-index negative pairing.
    """
    if lam.rank != rs.rank:
        raise RankMismatch("weight rank does not match root system")
    current = lam
    word: list[int] = []
    matrix = rs.identity.matrix
    while True:
        fws = rs.fw_coords(current)
        i = next((j for j in range(rs.rank) if fws[j] < 0), None)
        if i is None:
            break
        current = rs.reflect(i, current)
        word.insert(0, i)
        matrix = _reflect_matrix_left(rs, i, matrix)
    return current, WeylElement(matrix, tuple(word))


def _reflect_matrix_left(rs: RootSystem, i: int, m: IntMat) -> IntMat:
    """Integer matrix of s_i . m; only row i changes."""
    a = rs.cartan_matrix[i]
    n = rs.rank
    rows = list(m)
    rows[i] = tuple(m[i][j] - sum(a[k] * m[k][j] for k in range(n)) for j in range(n))
    return tuple(rows)


def weyl_orbit(rs: RootSystem, lam: Weight, cap: int = DEFAULT_CAP) -> frozenset[Weight]:
    """Full W-orbit of a weight; raises CapExceeded past ``cap`` elements."""
    if lam.rank != rs.rank:
        raise RankMismatch("weight rank does not match root system")
    seen: set[Weight] = {lam}
    queue = deque([lam])
    while queue:
        w = queue.popleft()
        for i in range(rs.rank):
            nxt = rs.reflect(i, w)
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"orbit size exceeded cap {cap}")
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def stabilizer_generators(rs: RootSystem, lam: Weight) -> StabilizerInfo:
    """Reflection generators of Stab_W(lam) and a regularity flag.

    The stabilizer of a dominant weight is generated by the simple reflections
    orthogonal to it; a general weight's generators are those conjugated back.
    """
    dom, w = dominant_representative(rs, lam)
    winv = w.inverse()
    fws = rs.fw_coords(dom)
    gens = tuple(
        winv.compose(rs.simple_reflection(i)).compose(w)
        for i in range(rs.rank)
        if fws[i] == 0
    )
    return StabilizerInfo(gens=gens, is_regular=not gens)


def longest_element(rs: RootSystem) -> WeylElement:
    """w0, computed by chasing the strictly antidominant regular vector -rho."""
    _, w = dominant_representative(rs, -rs.rho)
    return w


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_CAP) -> frozenset[WeylElement]:
    """All Weyl-group elements by closure under right multiplication."""
    seen: dict[IntMat, WeylElement] = {rs.identity.matrix: rs.identity}
    queue = deque([rs.identity])
    a = rs.cartan_matrix
    n = rs.rank
    while queue:
        w = queue.popleft()
        m = w.matrix
        for i in range(n):
            ai = a[i]
            nxt = tuple(
                tuple(m[k][j] - m[k][i] * ai[j] for j in range(n)) for k in range(n)
            )
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"Weyl group order exceeded cap {cap}")
                elem = WeylElement(nxt, w.word + (i,))
                seen[nxt] = elem
                queue.append(elem)
    return frozenset(seen.values())


_WEYL_ORDER_EXCEPTIONAL = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


def weyl_order(cartan_type: str | Sequence[tuple[str, int]]) -> int:
    """Order of the Weyl group, by the classical closed formulas.

    Used to budget enumerations before starting them; cross-checked against
    actual enumeration in the test suite.
    """
    factors = (
        parse_cartan_type(cartan_type)
        if isinstance(cartan_type, str)
        else tuple((f, int(n)) for f, n in cartan_type)
    )
    total = 1
    for family, n in factors:
        if family == "A":
            total *= math.factorial(n + 1)
        elif family in ("B", "C"):
            total *= 2**n * math.factorial(n)
        elif family == "D":
            total *= 2 ** max(n - 1, 1) * math.factorial(n)
        else:
            total *= _WEYL_ORDER_EXCEPTIONAL[(family, n)]
    return total
