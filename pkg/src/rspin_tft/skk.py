"""SKK group of closed r-spin surfaces.

Classes are normalized to ``(j, eps)``: ``j = chi / (2 r~)`` is the free
coordinate (r > 0) and ``eps`` in Z/2 is the torus/Arf coordinate (even r,
including r = 0).  The torus subgroup can also be computed from scratch as a
quotient of the free group on all tori by the cut-and-reglue relations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .abelian import FgAbGroup, GroupHom, IntMatrix, cokernel_of_relations
from .rspin import (
    ClosedRSpinSurface,
    HigherGenus,
    LowRGenus,
    Sphere,
    Torus,
    check_r,
    check_surface,
    rtilde,
    sl2_canonical,
    surface_from_json,
    surface_to_json,
    u_surface,
)

__all__ = [
    "SkkClass",
    "FormalSurfaceSum",
    "SkkPresentation",
    "skk_group",
    "torus_subgroup_presentation",
    "torus_subgroup_oracle",
    "skk_class",
    "surface_class",
    "euler_hom",
    "section_phi",
    "k_invariant_circle",
    "EXHAUSTIVE_LIMIT",
]

# four-term relation instances grow like n^5; beyond this many residues they are sampled
EXHAUSTIVE_LIMIT = 8


@dataclass(frozen=True)
class SkkClass:
    r: int
    j: int = 0
    eps: int | None = None

    def __post_init__(self):
        check_r(self.r)
        even = self.r % 2 == 0
        if even and self.eps is None:
            object.__setattr__(self, "eps", 0)
        if not even and self.eps is not None:
            raise ValueError(f"no torsion coordinate for odd r = {self.r}")
        if self.eps is not None:
            object.__setattr__(self, "eps", self.eps % 2)
        if self.r == 0 and self.j:
            raise ValueError("the free coordinate vanishes for r = 0")

    @classmethod
    def zero(cls, r: int) -> SkkClass:
        return cls(r)

    def __add__(self, other: SkkClass) -> SkkClass:
        if self.r != other.r:
            raise ValueError(f"adding SKK classes for r = {self.r} and r = {other.r}")
        eps = None if self.eps is None else self.eps + other.eps
        return SkkClass(self.r, self.j + other.j, eps)

    def __neg__(self) -> SkkClass:
        return SkkClass(self.r, -self.j, self.eps)

    def __sub__(self, other: SkkClass) -> SkkClass:
        return self + (-other)

    def __mul__(self, n: int) -> SkkClass:
        eps = None if self.eps is None else n * self.eps
        return SkkClass(self.r, n * self.j, eps)

    __rmul__ = __mul__

    def coordinates(self) -> tuple[int, ...]:
        """Coordinates in ``skk_group(r)``'s canonical generators."""
        if self.r == 0:
            return (self.eps,)
        if self.eps is None:
            return (self.j,)
        return (self.j, self.eps)

    def to_json(self) -> dict:
        d = {"r": self.r}
        if self.r:
            d["j"] = self.j
        if self.eps is not None:
            d["eps"] = self.eps
        return d

    @classmethod
    def from_json(cls, d: Mapping) -> SkkClass:
        return cls(int(d["r"]), int(d.get("j", 0)), d.get("eps"))


class FormalSurfaceSum:
    """Integer combination of closed surfaces (disjoint union is addition)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for item in items:
            S, n = item if isinstance(item, tuple) else (item, 1)
            acc[S] = acc.get(S, 0) + int(n)
        self._terms = {S: n for S, n in acc.items() if n}

    @classmethod
    def of(cls, *surfaces: ClosedRSpinSurface) -> FormalSurfaceSum:
        return cls(surfaces)

    def items(self) -> list[tuple[ClosedRSpinSurface, int]]:
        return sorted(self._terms.items(), key=lambda kv: repr(surface_to_json(kv[0])))

    def __iter__(self) -> Iterator[tuple[ClosedRSpinSurface, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: FormalSurfaceSum) -> FormalSurfaceSum:
        return FormalSurfaceSum(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> FormalSurfaceSum:
        return FormalSurfaceSum({S: -n for S, n in self._terms.items()})

    def __sub__(self, other: FormalSurfaceSum) -> FormalSurfaceSum:
        return self + (-other)

    def __mul__(self, k: int) -> FormalSurfaceSum:
        return FormalSurfaceSum({S: k * n for S, n in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSurfaceSum):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        return f"FormalSurfaceSum({dict(self.items())!r})"

    def to_json(self) -> list:
        return [{"surface": surface_to_json(S), "coeff": n} for S, n in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> FormalSurfaceSum:
        return cls([(surface_from_json(d["surface"]), int(d.get("coeff", 1))) for d in data])


def skk_group(r: int) -> FgAbGroup:
    """Closed form of SKK for r-spin surfaces."""
    check_r(r)
    if r == 0:
        return FgAbGroup(0, (2,))
    if r % 2 == 0:
        return FgAbGroup(1, (2,))
    return FgAbGroup(1, ())


# ---------------------------------------------------------------------------
# torus subgroup from relations
# ---------------------------------------------------------------------------


@dataclass
class SkkPresentation:
    """Generators ``[T(kappa, u)]`` and sparse relation vectors ``{index: coeff}``."""

    r: int
    labels: list[tuple[int, int]]
    relations: list[dict[int, int]]

    def index(self, kappa: int, u: int) -> int:
        return self._index[(kappa, u)]

    def __post_init__(self):
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        n = len(self.labels)
        for rel in self.relations:
            if any(not 0 <= i < n for i in rel):
                raise ValueError("relation references a missing generator")

    def relation_matrix(self) -> IntMatrix:
        """Dense relation matrix, one column per relation."""
        n = len(self.labels)
        cols = []
        for rel in self.relations:
            col = [0] * n
            for i, x in rel.items():
                col[i] = x
            cols.append(col)
        return IntMatrix.from_columns(cols, n)

    def quotient(self) -> tuple[FgAbGroup, GroupHom]:
        return cokernel_of_relations(len(self.labels), self.relations, with_map=True)


def _residues(r: int, window: int) -> list[int]:
    return list(range(r)) if r else list(range(-window, window + 1))


def torus_subgroup_presentation(r: int, window: int = 6, seed: int = 0) -> SkkPresentation:
    """Relations among tori: four-term relations, ``[T(1,u)] = 0``, orbit identifications.

    For r = 0 the generators are restricted to ``|kappa|, |u| <= window`` and
    only relations among in-window tori are kept.
    """
    check_r(r)
    if r == 0 and window < 1:
        raise ValueError("window must be positive")
    res = _residues(r, window)
    inside = set(res)
    labels = [(k, u) for k in res for u in res]
    index = {lab: i for i, lab in enumerate(labels)}

    def norm(x):
        return x % r if r else x

    rels: set[tuple[tuple[int, int], ...]] = set()

    def add(vec: dict[int, int]):
        vec = {i: x for i, x in vec.items() if x}
        if vec:
            rels.add(tuple(sorted(vec.items())))

    def four_term(k, u1, u2, u3, u4):
        s12, s34 = norm(u1 + u2), norm(u3 + u4)
        if s12 not in inside or s34 not in inside:
            return
        vec: dict[int, int] = {}
        for u, c in ((u1, 1), (u2, 1), (u3, 1), (u4, 1), (s12, -1), (s34, -1)):
            i = index[(k, u)]
            vec[i] = vec.get(i, 0) + c
        add(vec)

    n = len(res)
    if n <= EXHAUSTIVE_LIMIT:
        for k in res:
            for u1 in res:
                for u2 in res:
                    if norm(u1 + u2) not in inside:
                        continue
                    for u3 in res:
                        for u4 in res:
                            four_term(k, u1, u2, u3, u4)
    else:
        rng = random.Random(seed)
        pairs = [(a, b) for a in res for b in res if norm(a + b) in inside]
        for _ in range(10 * n ** 3):
            k = rng.choice(res)
            u1, u2 = rng.choice(pairs)
            u3, u4 = rng.choice(pairs)
            four_term(k, u1, u2, u3, u4)

    one = norm(1)
    for u in res:
        add({index[(one, u)]: 1})

    for (s, t), i in index.items():
        d = norm(sl2_canonical(s, t, r))
        j = index[(d, 0)]
        if i != j:
            add({i: 1, j: -1})

    relations = [dict(rel) for rel in sorted(rels)]
    return SkkPresentation(r, labels, relations)


def torus_subgroup_oracle(r: int, window: int = 6, seed: int = 0) -> FgAbGroup:
    """Subgroup generated by tori, computed as a quotient by Smith normal form."""
    return torus_subgroup_presentation(r, window, seed).quotient()[0]


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------


def _arf_eps(arf: int | None) -> int | None:
    return None if arf is None else (0 if arf == 1 else 1)


def surface_class(S: ClosedRSpinSurface, r: int) -> SkkClass:
    check_surface(S, r)
    even = r % 2 == 0
    if isinstance(S, Torus):
        if not even:
            return SkkClass(r)
        return SkkClass(r, 0, int(sl2_canonical(S.s, S.t, r) % 2 == 0))
    if isinstance(S, Sphere):
        return SkkClass(r, 1, 0 if even else None)
    if isinstance(S, HigherGenus):
        return SkkClass(r, -S.l, _arf_eps(S.arf))
    if isinstance(S, LowRGenus):
        return SkkClass(r, 1 - S.genus, _arf_eps(S.arf))
    raise TypeError(f"not a surface: {S!r}")


def skk_class(x: FormalSurfaceSum | ClosedRSpinSurface, r: int) -> SkkClass:
    """Normal form ``(j, eps)`` of a formal sum of closed r-spin surfaces."""
    if not isinstance(x, FormalSurfaceSum):
        x = FormalSurfaceSum.of(x)
    total = SkkClass.zero(r)
    for S, n in x:
        total = total + n * surface_class(S, r)
    return total


def euler_hom(c: SkkClass) -> int:
    """Euler characteristic of a class."""
    if c.r == 0:
        raise ValueError("the Euler characteristic vanishes identically for r = 0")
    return 2 * rtilde(c.r) * c.j


def section_phi(j: int, r: int) -> FormalSurfaceSum:
    """Splitting of ``chi / (2 r~)``: ``j`` spheres for r <= 2, otherwise ``-sign(j) U_|j|`` (Arf +1).

    ``U_l`` has ``chi / (2 r~) = -l``, hence the sign flip.
    """
    if check_r(r) == 0:
        raise ValueError("no Euler section for r = 0")
    if j == 0:
        return FormalSurfaceSum()
    if r <= 2:
        return FormalSurfaceSum({Sphere(): j})
    sign = -1 if j > 0 else 1
    return FormalSurfaceSum({u_surface(abs(j), r, 1): sign})


def k_invariant_circle(kappa: int, r: int) -> SkkClass:
    """Self-braiding loop of the circle of type kappa: the class of ``T(kappa, 0)``."""
    return skk_class(Torus(kappa, 0), r)
