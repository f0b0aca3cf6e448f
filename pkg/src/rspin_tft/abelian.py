"""Finitely generated abelian groups and exact integer linear algebra.

Groups are kept in invariant-factor form ``Z^n x Z/d_1 x ... x Z/d_k`` with
``d_1 | d_2 | ... | d_k`` and every ``d_i >= 2``.  Elements are integer
coordinate vectors on the canonical generators: free generators first, then
the torsion generators in increasing order.

>>> cokernel(IntMatrix([[2, 4], [6, 8]]))
FgAbGroup(free_rank=0, torsion=(2, 4))
>>> print(hom_group(FgAbGroup(1, (2,)), FgAbGroup(0, (2,))))
Z/2 x Z/2
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "FgAbGroup",
    "GroupHom",
    "InfiniteHomError",
    "smith_normal_form",
    "cokernel",
    "cokernel_map",
    "cokernel_of_relations",
    "hom_group",
    "ext_group",
    "tensor_z2",
    "direct_sum",
    "hom_compose",
    "hom_equal",
    "enumerate_homs",
    "structure_from_elements",
]


class InfiniteHomError(ValueError):
    """Raised when asked to enumerate an infinite Hom set."""


# ---------------------------------------------------------------------------
# integer matrices
# ---------------------------------------------------------------------------


class IntMatrix:
    """Immutable integer matrix with explicit shape (0 x n and n x 0 allowed)."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix rows")
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
        for col in columns:
            if len(col) != nrows:
                raise ValueError("column length does not match nrows")
        return cls([[col[i] for col in columns] for i in range(nrows)], len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.columns(), self.nrows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows],
            other.ncols,
        )

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match ncols")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        if not self.rows:
            return f"IntMatrix.zeros({self.nrows}, {self.ncols})"
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, row in enumerate(self.rows) for j, x in enumerate(row) if i != j)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        M = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if M[k][k] == 0:
                for i in range(k + 1, n):
                    if M[i][k]:
                        M[k], M[i] = M[i], M[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            prev = M[k][k]
        return sign * M[n - 1][n - 1]

    def to_json(self) -> dict:
        # decimal strings keep arbitrary-precision entries intact across JSON readers
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[str(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> IntMatrix:
        m = cls([[int(x) for x in row] for row in data["entries"]], int(data["cols"]))
        if m.nrows != int(data["rows"]):
            raise ValueError("row count does not match entries")
        return m


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def invariants(self) -> tuple[int, ...]:
        return self.D.diagonal()


def _nearest_quotient(a: int, b: int) -> int:
    # rem carries the sign of b, so stepping q up moves it to the other side of 0
    q, rem = divmod(a, b)
    if 2 * abs(rem) > abs(b):
        q += 1
    return q


def _smith(D: list[list[int]], m: int, n: int, U: list[list[int]] | None, V: list[list[int]] | None) -> None:
    """In-place Smith reduction of the m x n list matrix D.

    Row operations are mirrored on U (m x m) and column operations on V
    (n x n) when they are given.  The pivot is always an entry of minimal
    absolute value, which keeps intermediate entries small.
    """

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        if U is not None:
            U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in D:
            row[j], row[k] = row[k], row[j]
        if V is not None:
            for row in V:
                row[j], row[k] = row[k], row[j]

    def add_row(i, k, q):
        # row_i -= q * row_k
        rk = D[k]
        D[i] = [a - q * b for a, b in zip(D[i], rk)]
        if U is not None:
            uk = U[k]
            U[i] = [a - q * b for a, b in zip(U[i], uk)]

    def add_col(j, k, q):
        # col_j -= q * col_k
        for row in D:
            if row[k]:
                row[j] -= q * row[k]
        if V is not None:
            for row in V:
                if row[k]:
                    row[j] -= q * row[k]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            return
        _, i0, j0 = best
        if i0 != t:
            swap_rows(t, i0)
        if j0 != t:
            swap_cols(t, j0)

        while True:
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, _nearest_quotient(D[i][t], p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, _nearest_quotient(D[t][j], p))

            # remainders smaller than the pivot left over: move the smallest in
            small = None
            for i in range(t + 1, m):
                x = D[i][t]
                if x and (small is None or abs(x) < small[0]):
                    small = (abs(x), i, None)
            for j in range(t + 1, n):
                x = D[t][j]
                if x and (small is None or abs(x) < small[0]):
                    small = (abs(x), None, j)
            if small is not None:
                if small[1] is not None:
                    swap_rows(t, small[1])
                else:
                    swap_cols(t, small[2])
                continue

            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # row_t += row_bad exposes a non-multiple in row t
            add_row(t, bad, -1)

        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transforms: ``U @ A @ V == D``.

    >>> smith_normal_form(IntMatrix([[2, 4], [6, 8]])).invariants
    (2, 4)
    """
    m, n = A.shape
    D = [list(r) for r in A.rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    _smith(D, m, n, U, V)
    return SmithDecomposition(IntMatrix(U, m), IntMatrix(D, n), IntMatrix(V, n))


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------


def _invariant_factors(orders: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Canonicalize cyclic orders (0 meaning Z) into (free rank, invariant factors)."""
    free = 0
    finite = []
    for d in orders:
        d = abs(int(d))
        if d == 0:
            free += 1
        elif d > 1:
            finite.append(d)
    # Z/a x Z/b = Z/gcd x Z/lcm; after the sweep every entry divides the later ones
    k = len(finite)
    for i in range(k):
        for j in range(i + 1, k):
            a, b = finite[i], finite[j]
            g = math.gcd(a, b)
            finite[i], finite[j] = g, a // g * b
    return free, tuple(d for d in finite if d > 1)


@dataclass(frozen=True)
class FgAbGroup:
    """Finitely generated abelian group in invariant-factor form."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for i, d in enumerate(self.torsion):
            if d < 2:
                raise ValueError(f"invariant factor {d} is not >= 2")
            if i and d % self.torsion[i - 1]:
                raise ValueError(f"invariant factors {self.torsion} break the divisibility chain")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> FgAbGroup:
        """Group from arbitrary cyclic orders; ``0`` stands for ``Z``.

        >>> FgAbGroup.from_orders([6, 4, 0, 1])
        FgAbGroup(free_rank=1, torsion=(2, 12))
        """
        return cls(*_invariant_factors(orders))

    @classmethod
    def free(cls, n: int) -> FgAbGroup:
        return cls(n, ())

    @classmethod
    def cyclic(cls, n: int) -> FgAbGroup:
        return cls.from_orders([n])

    @property
    def orders(self) -> tuple[int, ...]:
        """Order of each canonical generator, 0 for free generators."""
        return (0,) * self.free_rank + self.torsion

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int:
        if self.free_rank:
            raise ValueError("infinite group has no finite order")
        return math.prod(self.torsion)

    def torsion_subgroup(self) -> FgAbGroup:
        return FgAbGroup(0, self.torsion)

    def exponent(self) -> int:
        """Exponent of the torsion subgroup (1 when torsion-free)."""
        return self.torsion[-1] if self.torsion else 1

    # elements -----------------------------------------------------------

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.ngens:
            raise ValueError(f"element {tuple(vec)} has wrong length for {self}")
        return tuple(x % d if d else int(x) for x, d in zip(vec, self.orders))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.ngens

    def add(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return self.reduce([a + b for a, b in zip(x, y)])

    def neg(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.reduce([-a for a in x])

    def scale(self, n: int, x: Sequence[int]) -> tuple[int, ...]:
        return self.reduce([n * a for a in x])

    def element_order(self, x: Sequence[int]) -> int:
        """Order of an element, 0 if it has infinite order."""
        x = self.reduce(x)
        result = 1
        for a, d in zip(x, self.orders):
            if d == 0:
                if a:
                    return 0
            else:
                result = math.lcm(result, d // math.gcd(d, a))
        return result

    def elements(self) -> Iterable[tuple[int, ...]]:
        if self.free_rank:
            raise ValueError(f"cannot list elements of infinite group {self}")
        return itertools.product(*(range(d) for d in self.torsion))

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: Mapping) -> FgAbGroup:
        return cls.from_orders([0] * int(data.get("rank", 0)) + [int(d) for d in data.get("torsion", [])])


def direct_sum(*groups: FgAbGroup) -> FgAbGroup:
    return FgAbGroup.from_orders(o for G in groups for o in G.orders)


# ---------------------------------------------------------------------------
# cokernels
# ---------------------------------------------------------------------------


def _insert_relation(basis: dict[int, dict[int, int]], vec: dict[int, int]) -> None:
    """Add a sparse vector to a row-echelon lattice basis keyed by pivot index."""
    while vec:
        p = min(vec)
        b = basis.get(p)
        if b is None:
            if vec[p] < 0:
                vec = {k: -x for k, x in vec.items()}
            basis[p] = vec
            return
        a, c = b[p], vec[p]
        if c % a == 0:
            q = c // a
            new = dict(vec)
            for k, x in b.items():
                y = new.get(k, 0) - q * x
                if y:
                    new[k] = y
                else:
                    new.pop(k, None)
            vec = new
            continue
        # unimodular 2x2 step: pivot becomes gcd(a, c), vec loses its leading entry
        g, s, t = _xgcd(a, c)
        ag, cg = a // g, c // g
        keys = b.keys() | vec.keys()
        nb, nv = {}, {}
        for k in keys:
            x, y = b.get(k, 0), vec.get(k, 0)
            u = s * x + t * y
            w = ag * y - cg * x
            if u:
                nb[k] = u
            if w:
                nv[k] = w
        basis[p] = nb
        vec = nv


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) > 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _quotient_from_basis(ngens: int, basis: dict[int, dict[int, int]], with_map: bool):
    cols = [basis[p] for p in sorted(basis)]
    k = len(cols)
    D = [[0] * k for _ in range(ngens)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            D[i][j] = x
    U = [[int(i == j) for j in range(ngens)] for i in range(ngens)] if with_map else None
    _smith(D, ngens, k, U, None)
    diag = [D[i][i] if i < k else 0 for i in range(ngens)]
    free_rows = [i for i, d in enumerate(diag) if d == 0]
    tors_rows = [i for i, d in enumerate(diag) if d > 1]
    group = FgAbGroup(len(free_rows), tuple(diag[i] for i in tors_rows))
    if not with_map:
        return group, None
    M = IntMatrix([U[i] for i in free_rows + tors_rows], ngens)
    return group, GroupHom(FgAbGroup.free(ngens), group, M)


def cokernel_of_relations(ngens: int, relations: Iterable[Mapping[int, int]], with_map: bool = False):
    """Quotient of ``Z^ngens`` by sparse relation vectors ``{index: coeff}``.

    Returns the group, or ``(group, quotient_map)`` when ``with_map`` is set;
    the map is a :class:`GroupHom` from ``Z^ngens`` sending each generator to
    its class.
    """
    basis: dict[int, dict[int, int]] = {}
    for rel in relations:
        vec = {}
        for i, x in rel.items():
            if not 0 <= i < ngens:
                raise IndexError(f"relation references generator {i} outside 0..{ngens - 1}")
            if x:
                vec[i] = vec.get(i, 0) + x
        vec = {i: x for i, x in vec.items() if x}
        if vec:
            _insert_relation(basis, vec)
    group, qmap = _quotient_from_basis(ngens, basis, with_map)
    return (group, qmap) if with_map else group


def _matrix_relations(A: IntMatrix):
    for col in A.columns():
        yield {i: x for i, x in enumerate(col) if x}


def cokernel(A: IntMatrix) -> FgAbGroup:
    """``Z^rows / (column span of A)`` in canonical form.

    >>> print(cokernel(IntMatrix([[2, 3]])))
    0
    >>> print(cokernel(IntMatrix.zeros(1, 0)))
    Z
    """
    return cokernel_of_relations(A.nrows, _matrix_relations(A))


def cokernel_map(A: IntMatrix) -> GroupHom:
    """Quotient map ``Z^rows -> cokernel(A)``."""
    return cokernel_of_relations(A.nrows, _matrix_relations(A), with_map=True)[1]


# ---------------------------------------------------------------------------
# Hom, Ext, tensor
# ---------------------------------------------------------------------------


def _hom_cyclic(n: int, m: int) -> int:
    if n == 0:
        return m
    if m == 0:
        return 1
    return math.gcd(n, m)


def _ext_cyclic(n: int, m: int) -> int:
    if n == 0:
        return 1
    if m == 0:
        return n
    return math.gcd(n, m)


def hom_group(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """``Hom(A, B)``, expanded over the cyclic factors of both groups."""
    return FgAbGroup.from_orders(_hom_cyclic(a, b) for a in A.orders for b in B.orders)


def ext_group(A: FgAbGroup, B: FgAbGroup) -> FgAbGroup:
    """``Ext(A, B)``; ``Ext(Z, -) = 0`` and ``Ext(Z/n, B) = B/nB``."""
    return FgAbGroup.from_orders(_ext_cyclic(a, b) for a in A.orders for b in B.orders)


def tensor_z2(A: FgAbGroup) -> FgAbGroup:
    return FgAbGroup.from_orders(2 for d in A.orders if d % 2 == 0)


# ---------------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by its action on canonical generators.

    ``matrix`` has one column per source generator holding the coordinates of
    its image.  Torsion coordinates are reduced on construction so that
    ``==`` is equality of maps.
    """

    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        M = self.matrix
        if not isinstance(M, IntMatrix):
            M = IntMatrix(M, self.source.ngens)
        if M.shape != (self.target.ngens, self.source.ngens):
            raise ValueError(f"matrix shape {M.shape} does not fit {self.source} -> {self.target}")
        cols = [self.target.reduce(c) for c in M.columns()]
        for col, d in zip(cols, self.source.orders):
            if d and any(self.target.scale(d, col)):
                raise ValueError(f"image {col} of an order-{d} generator has order not dividing {d}")
        object.__setattr__(self, "matrix", IntMatrix.from_columns(cols, self.target.ngens))

    @classmethod
    def zero(cls, A: FgAbGroup, B: FgAbGroup) -> GroupHom:
        return cls(A, B, IntMatrix.zeros(B.ngens, A.ngens))

    @classmethod
    def identity(cls, A: FgAbGroup) -> GroupHom:
        return cls(A, A, IntMatrix.identity(A.ngens))

    @classmethod
    def from_images(cls, A: FgAbGroup, B: FgAbGroup, images: Sequence[Sequence[int]]) -> GroupHom:
        return cls(A, B, IntMatrix.from_columns([tuple(v) for v in images], B.ngens))

    def images(self) -> list[tuple[int, ...]]:
        return self.matrix.columns()

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.target.reduce(self.matrix.apply(self.source.reduce(x)))

    def __add__(self, other: GroupHom) -> GroupHom:
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("adding homomorphisms with different source/target")
        cols = [self.target.add(a, b) for a, b in zip(self.images(), other.images())]
        return GroupHom.from_images(self.source, self.target, cols)

    def is_zero(self) -> bool:
        return not any(x for row in self.matrix.rows for x in row)


def hom_compose(g: GroupHom, f: GroupHom) -> GroupHom:
    """``g o f``."""
    if f.target != g.source:
        raise ValueError(f"cannot compose: {f.target} != {g.source}")
    return GroupHom(f.source, g.target, g.matrix @ f.matrix)


def hom_equal(f: GroupHom, g: GroupHom) -> bool:
    return f == g


def _hom_candidates(d: int, B: FgAbGroup) -> list[tuple[int, ...]]:
    """Possible images of a generator of order d (0 = free) in B."""
    if d == 0:
        if B.free_rank:
            raise InfiniteHomError(f"Hom(Z, {B}) is infinite")
        return list(B.elements())
    zeros = (0,) * B.free_rank
    ranges = [range(0, e, e // math.gcd(e, d)) for e in B.torsion]
    return [zeros + t for t in itertools.product(*ranges)]


def enumerate_homs(A: FgAbGroup, B: FgAbGroup) -> list[GroupHom]:
    """Every homomorphism ``A -> B``; requires ``Hom(A, B)`` finite."""
    if hom_group(A, B).free_rank:
        raise InfiniteHomError(f"Hom({A}, {B}) is infinite")
    per_gen = [_hom_candidates(d, B) for d in A.orders]
    return [GroupHom.from_images(A, B, cols) for cols in itertools.product(*per_gen)]


def structure_from_elements(elements: Iterable[Sequence[int]], moduli: Sequence[int]) -> FgAbGroup:
    """Isomorphism type of a finite subgroup of ``prod Z/m_i`` given by its elements.

    Uses only element orders: for each prime p the counts of elements killed
    by p, p^2, ... determine the p-primary part.
    """
    orders = []
    for x in elements:
        o = 1
        for a, m in zip(x, moduli):
            o = math.lcm(o, m // math.gcd(m, a % m))
        orders.append(o)
    N = len(orders)
    if N == 0:
        raise ValueError("a subgroup has at least one element")
    cyclic = []
    n, p = N, 2
    primes = []
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    for p in primes:
        # s[k] = log_p #{x : p^k x = 0}
        s = [0]
        k = 1
        while True:
            count = sum(1 for o in orders if (p ** k) % o == 0)
            s.append(round(math.log(count, p)))
            if p ** s[-1] != count:
                raise ValueError("element list is not a group")
            if s[-1] == s[-2]:
                break
            k += 1
        # number of cyclic factors of order >= p^k is s[k] - s[k-1]
        at_least = [s[i] - s[i - 1] for i in range(1, len(s))]
        for k in range(len(at_least)):
            exact = at_least[k] - (at_least[k + 1] if k + 1 < len(at_least) else 0)
            cyclic += [p ** (k + 1)] * exact
    G = FgAbGroup.from_orders(cyclic)
    if G.order() != N:
        raise ValueError("element list is not a group")
    return G
