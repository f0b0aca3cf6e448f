"""Picard groupoids and the symmetric monoidal functors between them.

A Picard groupoid is recorded by ``(pi0, pi1, k)``.  ``pi1`` is a finitely
generated group, optionally times the circle group C*; C* is never
enumerated, only rewritten symbolically (``Hom(Z, C*) = C*``,
``Hom(Z/n, C*) = Z/n``, ``Ext(-, C*) = 0``).

Elements of ``pi1`` are integer tuples on the canonical generators of the
finitely generated part, followed by one extra entry ``+1``/``-1`` when C*
is present (k only ever takes values of order at most 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .abelian import (
    FgAbGroup,
    GroupHom,
    InfiniteHomError,
    direct_sum,
    enumerate_homs,
    ext_group,
    hom_group,
    structure_from_elements,
)
from .rspin import check_r

__all__ = [
    "Pi1Group",
    "PicardData",
    "FormalGroupExpr",
    "UnsupportedClassificationError",
    "bord_picard_data",
    "sline",
    "line",
    "classify_functors",
    "classify_rspin_tfts",
]

Z2 = FgAbGroup(0, (2,))


class UnsupportedClassificationError(ValueError):
    """The functor classification cannot be computed for this source/target pair."""


@dataclass(frozen=True)
class Pi1Group:
    fg: FgAbGroup = FgAbGroup()
    circle: bool = False

    @classmethod
    def finitely(cls, G: FgAbGroup) -> Pi1Group:
        return cls(G, False)

    @classmethod
    def circle_group(cls) -> Pi1Group:
        return cls(FgAbGroup(), True)

    @classmethod
    def circle_times(cls, G: FgAbGroup) -> Pi1Group:
        return cls(G, True)

    def __str__(self) -> str:
        if not self.circle:
            return str(self.fg)
        return "C*" if self.fg.is_trivial() else f"{self.fg} x C*"

    def normalize(self, x: Sequence) -> tuple:
        """Reduce an element that should have order dividing 2; raise otherwise."""
        n = self.fg.ngens
        if len(x) != n + self.circle:
            raise ValueError(f"element {tuple(x)} has wrong length for {self}")
        fg = self.fg.reduce([int(a) for a in x[:n]])
        if any(self.fg.scale(2, fg)):
            raise ValueError(f"k value {tuple(x)} has order > 2 in {self}")
        if not self.circle:
            return fg
        c = x[n]
        if c * c != 1:
            raise ValueError(f"k value {c!r} in C* has order > 2")
        return fg + (1 if c == 1 else -1,)

    def is_zero(self, x: Sequence) -> bool:
        fg = x[: self.fg.ngens]
        return not any(fg) and (not self.circle or x[-1] == 1)

    def to_json(self):
        if self.circle and self.fg.is_trivial():
            return "circle"
        d = self.fg.to_json()
        if self.circle:
            d["circle"] = True
        return d

    @classmethod
    def from_json(cls, data) -> Pi1Group:
        if data == "circle":
            return cls.circle_group()
        return cls(_strict_group(data), bool(data.get("circle", False)))


def _strict_group(data: Mapping) -> FgAbGroup:
    # k images refer to canonical generators, so the stated form must already be canonical
    return FgAbGroup(int(data.get("rank", 0)), tuple(int(d) for d in data.get("torsion", [])))


@dataclass(frozen=True)
class PicardData:
    """``k`` lists ``k(x_i (x) 1)`` for each canonical generator ``x_i`` of ``pi0``."""

    pi0: FgAbGroup
    pi1: Pi1Group
    k: tuple = ()

    def __post_init__(self):
        if not isinstance(self.pi1, Pi1Group):
            object.__setattr__(self, "pi1", Pi1Group.finitely(self.pi1))
        if len(self.k) != self.pi0.ngens:
            raise ValueError(f"k needs {self.pi0.ngens} images, got {len(self.k)}")
        k = tuple(self.pi1.normalize(x) for x in self.k)
        for d, x in zip(self.pi0.orders, k):
            # k factors through pi0 (x) Z/2, which kills odd-order generators
            if d % 2 and not self.pi1.is_zero(x):
                raise ValueError(f"k must vanish on the order-{d} generator")
        object.__setattr__(self, "k", k)

    def k_of(self, y: Sequence[int]) -> tuple:
        """``k(y (x) 1)`` for an element y of pi0."""
        n = self.pi1.fg.ngens
        fg = [0] * n
        sign = 1
        for c, img in zip(y, self.k):
            for i in range(n):
                fg[i] += c * img[i]
            if self.pi1.circle and c % 2 and img[n] == -1:
                sign = -sign
        fg = self.pi1.fg.reduce(fg)
        return fg + (sign,) if self.pi1.circle else fg

    def to_json(self) -> dict:
        return {"pi0": self.pi0.to_json(), "pi1": self.pi1.to_json(), "k": [list(x) for x in self.k]}

    @classmethod
    def from_json(cls, data: Mapping) -> PicardData:
        return cls(_strict_group(data["pi0"]), Pi1Group.from_json(data["pi1"]), tuple(tuple(x) for x in data.get("k", [])))


@dataclass(frozen=True)
class FormalGroupExpr:
    """``finite x (C*)^circles`` with the finitely generated part canonical."""

    fg: FgAbGroup = FgAbGroup()
    circles: int = 0

    def factors(self) -> list[str]:
        parts = [] if self.fg.is_trivial() else str(self.fg).split(" x ")
        return parts + ["C*"] * self.circles

    def __str__(self) -> str:
        return " x ".join(self.factors()) or "0"

    def to_json(self) -> dict:
        return {"factors": self.factors()}


# ---------------------------------------------------------------------------
# built-in groupoids
# ---------------------------------------------------------------------------


def bord_picard_data(r: int) -> PicardData:
    """Homotopy data of the groupoid completion of the r-spin bordism category."""
    check_r(r)
    if r == 0:
        return PicardData(Z2, Pi1Group.finitely(Z2), ((1,),))
    if r % 2 == 0:
        return PicardData(Z2, Pi1Group.finitely(FgAbGroup(1, (2,))), ((0, 1),))
    return PicardData(FgAbGroup(), Pi1Group.finitely(FgAbGroup(1, ())), ())


def sline() -> PicardData:
    """Super lines with the signed symmetry: the odd line has k = -1."""
    return PicardData(Z2, Pi1Group.circle_group(), ((-1,),))


def line() -> PicardData:
    """Super lines with the plain flip: k is trivial."""
    return PicardData(Z2, Pi1Group.circle_group(), ((1,),))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def _hom_moduli(f: GroupHom) -> list[int]:
    # coordinates of a Hom matrix live in Z/e per target row; free rows get a
    # dummy modulus 1 (only reached when every entry there must vanish)
    return [e or 1 for e in f.target.orders for _ in range(f.source.ngens)]


def _flatten(f: GroupHom) -> list[int]:
    return [x for row in f.matrix.rows for x in row]


def _enumerate_pairs(source: PicardData, target: PicardData) -> FgAbGroup:
    """Brute force over all (f0, f1) with finite targets."""
    A0, A1 = source.pi0, source.pi1.fg
    f0s = enumerate_homs(A0, target.pi0)
    f1s = enumerate_homs(A1, target.pi1.fg)
    elements = []
    moduli = None
    for f0 in f0s:
        rhs = [target.k_of(f0(e)) for e in _basis(A0)]
        for f1 in f1s:
            if all(f1(source.k[i]) == rhs[i] for i in range(A0.ngens)):
                elements.append(_flatten(f0) + _flatten(f1))
                if moduli is None:
                    moduli = _hom_moduli(f0) + _hom_moduli(f1)
    return structure_from_elements(elements, moduli or [])


def _basis(G: FgAbGroup) -> list[tuple[int, ...]]:
    return [tuple(int(i == j) for j in range(G.ngens)) for i in range(G.ngens)]


def _structural_pairs(source: PicardData, target: PicardData) -> FormalGroupExpr:
    """Split ``pi1(source) = Z^a + T``: f1 on Z^a is unconstrained, and on the
    finite part T any map to C* lands in the M-th roots of unity, M = lcm(2, exp T)."""
    A0, A1 = source.pi0, source.pi1.fg
    a = A1.free_rank
    T = A1.torsion_subgroup()
    B1 = target.pi1.fg
    M = math.lcm(2, T.exponent())
    ZM = FgAbGroup.cyclic(M)
    try:
        f0s = enumerate_homs(A0, target.pi0)
    except InfiniteHomError as exc:
        raise UnsupportedClassificationError(f"Hom({A0}, {target.pi0}) is infinite") from exc
    f1fs = enumerate_homs(T, B1)
    f1cs = enumerate_homs(T, ZM) if target.pi1.circle else [None]

    def ks_on_T(x):
        # k values have order <= 2, so their free coordinates vanish
        return x[a:]

    elements = []
    moduli = None
    for f0 in f0s:
        rhs = [target.k_of(f0(e)) for e in _basis(A0)]
        for hf in f1fs:
            for hc in f1cs:
                ok = True
                for i in range(A0.ngens):
                    t = ks_on_T(source.k[i])
                    lhs = hf(t)
                    if hc is not None:
                        # hc(t) = c stands for exp(2 pi i c / M); only c in {0, M/2} is +-1
                        c = hc(t)[0]
                        lhs = lhs + ({0: 1, M // 2: -1}.get(c, 0),)
                    if lhs != rhs[i]:
                        ok = False
                        break
                if ok:
                    flat = _flatten(f0) + _flatten(hf) + (_flatten(hc) if hc is not None else [])
                    elements.append(flat)
                    if moduli is None:
                        moduli = _hom_moduli(f0) + _hom_moduli(hf) + (_hom_moduli(hc) if hc is not None else [])
    pairs_T = structure_from_elements(elements, moduli or [])
    fg = direct_sum(pairs_T, *([B1] * a), ext_group(A0, B1))
    return FormalGroupExpr(fg, a if target.pi1.circle else 0)


def classify_functors(source: PicardData, target: PicardData, method: str = "auto") -> FormalGroupExpr:
    """Group of functor classes ``{(f0, f1) : f1 k_src = k_tgt (f0 (x) Z/2)} x Ext(pi0 src, pi1 tgt)``.

    ``method`` is ``"enumerate"`` (brute force, finite targets only),
    ``"structural"`` (handles C* and infinite pi1) or ``"auto"``.
    """
    if source.pi1.circle:
        raise UnsupportedClassificationError("symbolic C* in the source is not supported")
    finite = (
        not target.pi1.circle
        and hom_group(source.pi0, target.pi0).free_rank == 0
        and hom_group(source.pi1.fg, target.pi1.fg).free_rank == 0
    )
    if method == "auto":
        method = "enumerate" if finite else "structural"
    if method == "enumerate":
        if not finite:
            raise UnsupportedClassificationError("enumeration needs finite Hom groups and no C*")
        pairs = _enumerate_pairs(source, target)
        return FormalGroupExpr(direct_sum(pairs, ext_group(source.pi0, target.pi1.fg)), 0)
    if method == "structural":
        return _structural_pairs(source, target)
    raise ValueError(f"unknown method {method!r}")


def classify_rspin_tfts(r: int, target: PicardData) -> FormalGroupExpr:
    """Invertible r-spin TFTs with values in ``target``, in closed form."""
    check_r(r)
    B1 = target.pi1.fg
    circles = int(target.pi1.circle)
    if r % 2:
        return FormalGroupExpr(B1, circles)
    base = direct_sum(hom_group(Z2, target.pi0), ext_group(Z2, B1))
    if r == 0:
        return FormalGroupExpr(base, 0)
    return FormalGroupExpr(direct_sum(base, B1), circles)
