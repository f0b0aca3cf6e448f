"""Combinatorics of r-spin structures on surfaces.

``r = 0`` is the framed case: residues are then plain integers.  Boundary
types follow the convention where an outgoing disc boundary has type +1 and
an ingoing one type -1.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

__all__ = [
    "InvalidSurfaceError",
    "check_r",
    "rtilde",
    "residue",
    "exists_rspin",
    "genus_admissible",
    "sl2_canonical",
    "sl2_generators",
    "enumerate_torus_orbits",
    "torus_orbits",
    "arf_torus",
    "Sphere",
    "Torus",
    "HigherGenus",
    "LowRGenus",
    "ClosedRSpinSurface",
    "check_surface",
    "u_surface",
    "genus",
    "euler_char",
    "surface_to_json",
    "surface_from_json",
    "parse_surface",
]


class InvalidSurfaceError(ValueError):
    """A surface descriptor that admits no r-spin structure for the given r."""


def check_r(r: int) -> int:
    if isinstance(r, bool) or not isinstance(r, int) or r < 0:
        raise ValueError(f"r must be a non-negative integer, got {r!r}")
    return r


def rtilde(r: int) -> int:
    """``r / gcd(r, 2)``; only defined for r > 0."""
    if check_r(r) == 0:
        raise ValueError("r~ is undefined for r = 0")
    return r // math.gcd(r, 2)


def residue(x: int, r: int) -> int:
    """Reduce into {0, ..., r-1}; identity for r = 0."""
    return x % r if r else x


def _congruent(a: int, b: int, r: int) -> bool:
    return (a - b) % r == 0 if r else a == b


def exists_rspin(g: int, kappa_in: Sequence[int], kappa_out: Sequence[int], r: int) -> bool:
    """Whether a connected genus-g bordism with these boundary types carries an r-spin structure."""
    check_r(r)
    if g < 0:
        raise ValueError("genus must be non-negative")
    chi = 2 - 2 * g - len(kappa_in) - len(kappa_out)
    return _congruent(chi, sum(kappa_out) - sum(kappa_in), r)


def genus_admissible(g: int, r: int) -> bool:
    """Whether the closed genus-g surface admits an r-spin structure.

    For r = 0 only the torus is framable.
    """
    check_r(r)
    if g < 0:
        raise ValueError("genus must be non-negative")
    if r == 0:
        return g == 1
    return (g - 1) % rtilde(r) == 0


# ---------------------------------------------------------------------------
# tori
# ---------------------------------------------------------------------------


def sl2_canonical(s: int, t: int, r: int) -> int:
    """Complete SL(2,Z) orbit invariant of the torus T(s, t).

    Returns ``gcd(s, t, r)`` (so ``(0, 0)`` gives ``r``); the orbit
    representative is ``T(d, 0)``.  For r = 0 this is ``gcd(s, t)``.
    """
    check_r(r)
    return math.gcd(s, t, r)


def sl2_generators(r: int):
    """The standard generators S, T and their inverses acting on row vectors mod r."""

    def act(a, b, c, d):
        return lambda s, t: (residue(s * a + t * c, r), residue(s * b + t * d, r))

    return [act(0, -1, 1, 0), act(0, 1, -1, 0), act(1, 1, 0, 1), act(1, -1, 0, 1)]


def enumerate_torus_orbits(r: int) -> list[frozenset[tuple[int, int]]]:
    """Brute-force SL(2,Z) orbits on (Z/r)^2 by breadth-first search."""
    if check_r(r) == 0:
        raise ValueError("infinitely many orbits for r = 0")
    gens = sl2_generators(r)
    seen: set[tuple[int, int]] = set()
    orbits = []
    for start in ((s, t) for s in range(r) for t in range(r)):
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = g(*x)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        seen |= orbit
        orbits.append(frozenset(orbit))
    return orbits


def torus_orbits(r: int) -> list[int]:
    """Diffeomorphism classes of r-spin tori, labelled by the divisors of r."""
    if check_r(r) == 0:
        raise ValueError("infinitely many torus orbits for r = 0; use sl2_canonical")
    return [d for d in range(1, r + 1) if r % d == 0]


def arf_torus(s: int, t: int, r: int) -> int:
    """Arf invariant in Z/2 of T(s, t): 1 exactly when s and t are both even."""
    check_r(r)
    if r % 2:
        raise ValueError(f"Arf invariant needs even r, got r = {r}")
    return int(s % 2 == 0 and t % 2 == 0)


# ---------------------------------------------------------------------------
# closed surfaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Sphere:
    pass


@dataclass(frozen=True)
class Torus:
    s: int
    t: int


@dataclass(frozen=True)
class HigherGenus:
    """``U_l``: genus ``1 + l * r~`` for r > 2; ``arf`` is +1/-1 for even r."""

    l: int
    arf: int | None = None


@dataclass(frozen=True)
class LowRGenus:
    """Genus ``g >= 2`` surface for r in {1, 2}; ``arf`` is +1/-1 when r = 2."""

    genus: int
    arf: int | None = None


ClosedRSpinSurface = Union[Sphere, Torus, HigherGenus, LowRGenus]


def _check_arf(arf, required: bool, what: str) -> None:
    if required and arf not in (1, -1):
        raise InvalidSurfaceError(f"{what} needs an Arf sign +1 or -1, got {arf!r}")
    if not required and arf is not None:
        raise InvalidSurfaceError(f"{what} carries no Arf sign here")


def check_surface(S: ClosedRSpinSurface, r: int) -> None:
    """Raise :class:`InvalidSurfaceError` unless S is a valid r-spin surface."""
    check_r(r)
    if isinstance(S, Sphere):
        if r not in (1, 2):
            raise InvalidSurfaceError(f"the sphere has no {r}-spin structure")
    elif isinstance(S, Torus):
        if not (isinstance(S.s, int) and isinstance(S.t, int)):
            raise InvalidSurfaceError("torus labels must be integers")
    elif isinstance(S, HigherGenus):
        if r <= 2:
            raise InvalidSurfaceError("U_l descriptors are for r > 2; use LowRGenus")
        if S.l < 1:
            raise InvalidSurfaceError("U_l needs l >= 1")
        _check_arf(S.arf, r % 2 == 0, f"U_{S.l} for r = {r}")
    elif isinstance(S, LowRGenus):
        if r not in (1, 2):
            raise InvalidSurfaceError("LowRGenus is only valid for r in {1, 2}")
        if S.genus < 2:
            raise InvalidSurfaceError("LowRGenus needs genus >= 2")
        _check_arf(S.arf, r == 2, f"genus {S.genus} surface for r = {r}")
    else:
        raise InvalidSurfaceError(f"not a closed r-spin surface: {S!r}")


def u_surface(l: int, r: int, arf: int | None = None) -> ClosedRSpinSurface:
    """The surface ``U_l`` of genus ``1 + l * r~`` in whichever descriptor fits r."""
    if r > 2:
        return HigherGenus(l, arf if r % 2 == 0 else None)
    if r in (1, 2):
        return LowRGenus(1 + l, arf if r == 2 else None)
    raise InvalidSurfaceError("only tori are framed")


def genus(S: ClosedRSpinSurface, r: int) -> int:
    check_surface(S, r)
    if isinstance(S, Sphere):
        return 0
    if isinstance(S, Torus):
        return 1
    if isinstance(S, HigherGenus):
        return 1 + S.l * rtilde(r)
    return S.genus


def euler_char(S: ClosedRSpinSurface, r: int) -> int:
    return 2 - 2 * genus(S, r)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

_ARF_SYMBOL = {1: "+", -1: "-"}
_ARF_VALUE = {"+": 1, "-": -1, 1: 1, -1: -1}


def surface_to_json(S: ClosedRSpinSurface) -> dict:
    if isinstance(S, Sphere):
        return {"type": "sphere"}
    if isinstance(S, Torus):
        return {"type": "torus", "s": S.s, "t": S.t}
    if isinstance(S, HigherGenus):
        d = {"type": "U", "l": S.l}
    elif isinstance(S, LowRGenus):
        d = {"type": "genus", "g": S.genus}
    else:
        raise TypeError(f"not a surface: {S!r}")
    if S.arf is not None:
        d["arf"] = _ARF_SYMBOL[S.arf]
    return d


def surface_from_json(d: Mapping) -> ClosedRSpinSurface:
    kind = d.get("type")
    arf = d.get("arf")
    if arf is not None:
        if arf not in _ARF_VALUE:
            raise ValueError(f"bad Arf sign {arf!r}")
        arf = _ARF_VALUE[arf]
    if kind == "sphere":
        return Sphere()
    if kind == "torus":
        return Torus(int(d["s"]), int(d["t"]))
    if kind == "U":
        return HigherGenus(int(d["l"]), arf)
    if kind == "genus":
        return LowRGenus(int(d["g"]), arf)
    raise ValueError(f"unknown surface type {kind!r}")


def parse_surface(text: str) -> ClosedRSpinSurface:
    """Parse the compact forms ``sphere``, ``torus:S:T``, ``U:L[:+|-]``, ``genus:G[:+|-]``."""
    parts = text.strip().split(":")
    kind, args = parts[0].lower(), parts[1:]
    try:
        if kind in ("sphere", "s2") and not args:
            return Sphere()
        if kind in ("torus", "t") and len(args) == 2:
            return Torus(int(args[0]), int(args[1]))
        if kind in ("u", "genus", "g") and len(args) in (1, 2):
            arf = _ARF_VALUE[args[1]] if len(args) == 2 else None
            n = int(args[0])
            return HigherGenus(n, arf) if kind == "u" else LowRGenus(n, arf)
    except (ValueError, KeyError):
        pass
    raise ValueError(f"cannot parse surface {text!r}")
