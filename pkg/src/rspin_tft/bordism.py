"""The bordism group of r-spin circles.

Every connected r-spin bordism ``S_in -> S_out`` imposes the relation
``sum [S_out] - sum [S_in] = 0`` on the free group of circle types.  The
quotient by all such relations with bounded genus and boundary count is
computed exactly; increasing the bounds does not change the answer once the
pair of pants, the discs and the genus-one handles are included.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .abelian import FgAbGroup, GroupHom, cokernel_of_relations
from .rspin import check_r, exists_rspin, residue

__all__ = [
    "CircleObject",
    "BordismRelation",
    "enumerate_bordism_relations",
    "pi0_quotient",
    "pi0_presentation",
    "circle_class",
]


@dataclass(frozen=True)
class CircleObject:
    kappa: int


@dataclass(frozen=True)
class BordismRelation:
    """A connected genus-g bordism from ``inputs`` to ``outputs`` (sorted circle types)."""

    inputs: tuple[int, ...]
    outputs: tuple[int, ...]
    genus: int

    def vector(self) -> dict[int, int]:
        vec: dict[int, int] = defaultdict(int)
        for k in self.outputs:
            vec[k] += 1
        for k in self.inputs:
            vec[k] -= 1
        return {k: x for k, x in vec.items() if x}


def _circle_types(r: int, window: int) -> list[int]:
    return list(range(r)) if r else list(range(-window, window + 1))


def _multisets_by_sum(types, size, r):
    groups = defaultdict(list)
    for ms in combinations_with_replacement(types, size):
        groups[residue(sum(ms), r)].append(ms)
    return groups


def enumerate_bordism_relations(r: int, g_max: int = 2, n_max: int = 4, window: int = 6):
    """Yield every admissible connected bordism with at least one boundary circle.

    One representative genus is reported per boundary configuration, the
    smallest that satisfies the existence congruence.
    """
    check_r(r)
    types = _circle_types(r, window)
    by_size = [_multisets_by_sum(types, n, r) for n in range(n_max + 1)]
    for a in range(n_max + 1):
        for b in range(n_max + 1 - a):
            if a + b == 0:
                continue
            for s_in, ins in by_size[a].items():
                for s_out, outs in by_size[b].items():
                    g = next(
                        (g for g in range(g_max + 1) if exists_rspin(g, ins[0], outs[0], r)),
                        None,
                    )
                    if g is None:
                        continue
                    for i in ins:
                        for o in outs:
                            yield BordismRelation(i, o, g)


def _compressed_relations(r, g_max, n_max, window):
    """Relations spanning the same lattice as :func:`enumerate_bordism_relations`.

    Within one admissible block (fixed sizes and boundary sums) the relations
    are all differences ``o - i``; these span the same lattice as
    ``o0 - i0`` together with ``o - o0`` and ``i - i0``, which is far fewer
    vectors.
    """
    check_r(r)
    types = _circle_types(r, window)
    by_size = [_multisets_by_sum(types, n, r) for n in range(n_max + 1)]

    def count(ms, sign):
        vec: dict[int, int] = defaultdict(int)
        for k in ms:
            vec[k] += sign
        return vec

    def diff(x, y):
        vec = dict(x)
        for k, v in y.items():
            vec[k] = vec.get(k, 0) - v
        return {k: v for k, v in vec.items() if v}

    out = set()
    for a in range(n_max + 1):
        for b in range(n_max + 1 - a):
            if a + b == 0:
                continue
            for ins in by_size[a].values():
                for outs in by_size[b].values():
                    if not any(exists_rspin(g, ins[0], outs[0], r) for g in range(g_max + 1)):
                        continue
                    o0, i0 = count(outs[0], 1), count(ins[0], 1)
                    vecs = [diff(o0, i0)]
                    vecs += [diff(count(o, 1), o0) for o in outs[1:]]
                    vecs += [diff(count(i, 1), i0) for i in ins[1:]]
                    for v in vecs:
                        if v:
                            out.add(tuple(sorted(v.items())))
    return [dict(v) for v in sorted(out)]


def pi0_quotient(r: int, g_max: int = 2, n_max: int = 4, window: int = 6) -> tuple[list[int], GroupHom]:
    """Circle types and the quotient map from their free group onto the bordism group."""
    if g_max < 1 or n_max < 3:
        raise ValueError("need g_max >= 1 and n_max >= 3")
    if r == 0 and window < 1:
        raise ValueError("window must be positive")
    types = _circle_types(r, window)
    pos = {k: i for i, k in enumerate(types)}
    relations = [{pos[k]: x for k, x in rel.items()} for rel in _compressed_relations(r, g_max, n_max, window)]
    _, qmap = cokernel_of_relations(len(types), relations, with_map=True)
    return types, qmap


def pi0_presentation(r: int, g_max: int = 2, n_max: int = 4, window: int = 6) -> FgAbGroup:
    """Bordism group of r-spin circles from enumerated bordism relations."""
    return pi0_quotient(r, g_max, n_max, window)[1].target


def circle_class(kappa: int, r: int) -> int:
    """Coordinate of ``[S^1_kappa]`` on the generator ``[S^1_0]``.

    Odd types are bounded by the disc, so the class is 1 exactly for even
    types when r is even (or 0), and always 0 for odd r.
    """
    check_r(r)
    if r % 2:
        return 0
    return (kappa + 1) % 2
