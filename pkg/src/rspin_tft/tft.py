"""Invertible TFT evaluators on closed r-spin surfaces.

An invertible TFT with values in super lines is the same as a homomorphism
out of SKK; here it is stored by its value ``lam`` on the Euler section
generator and its sign ``rho`` on the torus class ``[T(0,0)]``, so a class
``(j, eps)`` evaluates to ``lam**j * rho**eps``.  Values are exact fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .rspin import Sphere, Torus, check_r, rtilde, u_surface
from .skk import FormalSurfaceSum, skk_class

__all__ = [
    "InvertibleTft",
    "InvarianceReport",
    "arf_tft",
    "euler_tft",
    "evaluate",
    "verify_skk_invariance",
    "format_value",
]


@dataclass(frozen=True)
class InvertibleTft:
    r: int
    lam: Fraction | None = None
    rho: int | None = None
    name: str = "tft"

    def __post_init__(self):
        check_r(self.r)
        if self.r == 0 and self.lam is not None:
            raise ValueError("no Euler parameter for r = 0")
        if self.r > 0:
            if self.lam is None or Fraction(self.lam) == 0:
                raise ValueError("lam must be a nonzero rational for r > 0")
            object.__setattr__(self, "lam", Fraction(self.lam))
        even = self.r % 2 == 0
        if even and self.rho not in (1, -1):
            raise ValueError("rho must be +1 or -1 for even r")
        if not even and self.rho is not None:
            raise ValueError("no torsion sign for odd r")

    def value(self, j: int, eps: int | None) -> Fraction:
        v = Fraction(1)
        if self.lam is not None:
            v *= self.lam ** j
        if self.rho is not None and eps:
            v *= self.rho
        return v

    def to_json(self) -> dict:
        d = {"name": self.name, "r": self.r}
        if self.lam is not None:
            d["lambda"] = format_value(self.lam)
        if self.rho is not None:
            d["rho"] = self.rho
        return d


def format_value(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def arf_tft(r: int) -> InvertibleTft:
    """``2**(chi/2) * (-1)**Arf`` on closed surfaces; needs even r."""
    check_r(r)
    if r % 2:
        raise ValueError(f"the Arf TFT needs even r, got r = {r}")
    lam = Fraction(2) ** rtilde(r) if r else None
    return InvertibleTft(r, lam, -1, name="arf")


def euler_tft(r: int, lam) -> InvertibleTft:
    """TFT depending only on the Euler characteristic: ``lam ** (chi / (2 r~))``."""
    if check_r(r) == 0:
        raise ValueError("Euler TFTs are trivial for r = 0")
    return InvertibleTft(r, Fraction(lam), 1 if r % 2 == 0 else None, name="euler")


def evaluate(Z: InvertibleTft, x) -> Fraction:
    """Value on a formal sum (or single surface); multiplicative over disjoint union."""
    c = skk_class(x, Z.r)
    return Z.value(c.j, c.eps)


@dataclass
class InvarianceReport:
    trials: int
    seed: int
    mismatches: list = field(default_factory=list)
    by_family: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "mismatches": len(self.mismatches),
            "by_family": dict(sorted(self.by_family.items())),
            "examples": self.mismatches[:5],
        }


def _relation_families(r: int):
    """Relation samplers ``rng -> (name, lhs, rhs)`` valid for this r."""
    S = FormalSurfaceSum

    def norm(x):
        return x % r if r else x

    def residue_(rng):
        return rng.randrange(r) if r else rng.randint(-12, 12)

    def four_term(rng):
        k = residue_(rng)
        u = [residue_(rng) for _ in range(4)]
        lhs = S([Torus(k, x) for x in u])
        rhs = S([Torus(k, norm(u[0] + u[1])), Torus(k, norm(u[2] + u[3]))])
        return "four_term", lhs, rhs

    def kills_one(rng):
        return "torus_T1u", S.of(Torus(norm(1), residue_(rng))), S()

    def orbit(rng):
        s, t = residue_(rng), residue_(rng)
        a, b = rng.choice([(t, -s), (s, s + t), (s + t, t), (-t, s)])
        return "sl2_orbit", S.of(Torus(s, t)), S.of(Torus(norm(a), norm(b)))

    families = [four_term, kills_one, orbit]
    if r == 0:
        return families
    even = r % 2 == 0
    plus = 1 if even else None

    def u_add(rng):
        l, j = rng.randint(1, 8), rng.randint(1, 8)
        lhs = S.of(u_surface(l, r, plus), u_surface(j, r, plus))
        return "u_addition", lhs, S.of(u_surface(l + j, r, plus))

    families.append(u_add)
    if even:

        def arf_flip(rng):
            l = rng.randint(1, 8)
            lhs = S.of(u_surface(l, r, 1), Torus(0, 0))
            return "arf_flip", lhs, S.of(u_surface(l, r, -1))

        families.append(arf_flip)
    if r <= 2:

        def sphere_genus(rng):
            g = rng.randint(2, 10)
            arf = rng.choice([1, -1]) if even else None
            lhs = S.of(u_surface(g, r, arf), Sphere())
            return "sphere_genus", lhs, S.of(u_surface(g - 1, r, arf))

        families.append(sphere_genus)
    return families


def verify_skk_invariance(Z: InvertibleTft, trials: int = 1000, seed: int = 0) -> InvarianceReport:
    """Evaluate both sides of randomly drawn cut-and-reglue relations and record mismatches."""
    rng = random.Random(seed)
    families = _relation_families(Z.r)
    report = InvarianceReport(trials, seed)
    for _ in range(trials):
        name, lhs, rhs = rng.choice(families)(rng)
        report.by_family[name] = report.by_family.get(name, 0) + 1
        a, b = evaluate(Z, lhs), evaluate(Z, rhs)
        if a != b:
            report.mismatches.append(
                {"family": name, "lhs": lhs.to_json(), "rhs": rhs.to_json(), "values": [format_value(a), format_value(b)]}
            )
    return report
