"""Homology groups from boundary-matrix ranks and invariant factors."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..complex import SimplicialComplex
from .chains import ChainComplex, chain_complex
from .sparse import field_rank, integer_reduction

__all__ = ["HomologyGroup", "HomologyResult", "homology", "chain_homology"]


@dataclass(frozen=True)
class HomologyGroup:
    dim: int
    betti: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion


@dataclass(frozen=True)
class HomologyResult:
    reduced: bool
    groups: tuple[HomologyGroup, ...] = field(default_factory=tuple)
    coeff: str = "z"

    def betti(self, k: int) -> int:
        return next((g.betti for g in self.groups if g.dim == k), 0)

    def torsion(self, k: int) -> tuple[int, ...]:
        return next((g.torsion for g in self.groups if g.dim == k), ())

    @property
    def betti_numbers(self) -> tuple[int, ...]:
        """Betti numbers from degree 0 up to the last non-zero one."""
        nz = [g.dim for g in self.groups if g.betti and g.dim >= 0]
        return tuple(self.betti(k) for k in range(max(nz, default=-1) + 1))

    def is_trivial(self) -> bool:
        return all(g.is_zero() for g in self.groups)

    def signature(self) -> tuple:
        """Non-zero groups only, so results of different dimensions compare."""
        return tuple((g.dim, g.betti, g.torsion) for g in self.groups if not g.is_zero())

    def to_dict(self) -> dict:
        return {
            "coeff": self.coeff,
            "reduced": self.reduced,
            "groups": [
                {"dim": g.dim, "betti": g.betti, "torsion": list(g.torsion)}
                for g in self.groups
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def chain_homology(C: ChainComplex, coeff=None) -> HomologyResult:
    """Homology of a chain complex over Z (``coeff=None``) or a field."""
    ranks: dict[int, int] = {}
    torsion: dict[int, list[int]] = {}
    for k in C.degrees:
        d = C.boundary(k)
        if coeff is None:
            ranks[k], torsion[k] = integer_reduction(d)
        else:
            ranks[k], torsion[k] = field_rank(d, coeff), []
    top = C.top if C.valid_top is None else C.valid_top
    groups = []
    for k in C.degrees:
        if k > top:
            break
        betti = C.rank(k) - ranks[k] - ranks.get(k + 1, 0)
        groups.append(HomologyGroup(k, betti, tuple(torsion.get(k + 1, ()))))
    reduced = -1 in C.bases and C.bases[-1] == [()]
    return HomologyResult(reduced, tuple(groups), "z" if coeff is None else coeff.name)


def homology(K: SimplicialComplex, reduced: bool = False, coeff=None, **guards) -> HomologyResult:
    return chain_homology(chain_complex(K, reduced, **guards), coeff)
