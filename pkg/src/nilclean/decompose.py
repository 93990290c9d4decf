"""Clean and nil-clean element decompositions and the derived ideal predicates.

A decomposition of x is a pair (e, y) with e idempotent, e + y = x, and y
nilpotent (nil-clean kind) or a unit (clean kind).  Since y = x - e, every
decomposition is determined by its idempotent; the per-ring caches below
therefore store, for each element, the ascending tuple of admissible
idempotent indices, and everything else is rebuilt from that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .classify import idempotents, is_idempotent, nilpotency_index, units
from .errors import (
    InternalInvariantViolation,
    NotAlmostIdempotent,
    PreconditionViolated,
)
from .ideals import Ideal, is_nil_ideal
from .ring import Elem, ElemLike, FiniteRing

NIL_CLEAN = "nil-clean"
CLEAN = "clean"


@dataclass(frozen=True)
class Decomposition:
    """One witness pair for an element: idempotent + second = element."""

    element: Elem
    idempotent: Elem
    second: Elem
    kind: str
    commutes: bool
    nil_index: Optional[int] = None

    def verify(self) -> "Decomposition":
        ring = self.element.ring
        e, y = self.idempotent, self.second
        if e * e != e:
            raise InternalInvariantViolation("idempotent part fails e*e = e")
        if e + y != self.element:
            raise InternalInvariantViolation("parts do not sum to the element")
        if self.commutes != (e * y == y * e):
            raise InternalInvariantViolation("commutation flag is wrong")
        if self.kind == NIL_CLEAN:
            if nilpotency_index(ring, y) != self.nil_index:
                raise InternalInvariantViolation("stated nilpotency index is wrong")
        elif self.kind == CLEAN:
            if y.index not in units(ring):
                raise InternalInvariantViolation("second part is not a unit")
        else:
            raise InternalInvariantViolation(f"unknown kind {self.kind!r}")
        return self

    def to_json(self) -> dict:
        return {
            "element": self.element.index,
            "idempotent": self.idempotent.index,
            "second": self.second.index,
            "kind": self.kind,
            "commutes": self.commutes,
            "nil_index": self.nil_index,
        }


# --------------------------------------------------------------------------
# per-ring idempotent caches


def _nil_e_lists(ring: FiniteRing) -> List[Tuple[int, ...]]:
    def fill():
        idem = sorted(idempotents(ring))
        out = []
        for x in range(ring.order):
            out.append(
                tuple(
                    e
                    for e in idem
                    if nilpotency_index(ring, ring.sub_i(x, e)) is not None
                )
            )
        return out

    return ring.cached("nil_e", fill)


def _clean_e_lists(ring: FiniteRing) -> List[Tuple[int, ...]]:
    def fill():
        idem = sorted(idempotents(ring))
        u = units(ring)
        return [
            tuple(e for e in idem if ring.sub_i(x, e) in u)
            for x in range(ring.order)
        ]

    return ring.cached("clean_e", fill)


def _commuting(ring: FiniteRing, e: int, y: int) -> bool:
    return ring.mul_i(e, y) == ring.mul_i(y, e)


def _strong_nil_e_lists(ring: FiniteRing) -> List[Tuple[int, ...]]:
    def fill():
        return [
            tuple(e for e in es if _commuting(ring, e, ring.sub_i(x, e)))
            for x, es in enumerate(_nil_e_lists(ring))
        ]

    return ring.cached("strong_nil_e", fill)


def _strong_clean_e_lists(ring: FiniteRing) -> List[Tuple[int, ...]]:
    def fill():
        return [
            tuple(e for e in es if _commuting(ring, e, ring.sub_i(x, e)))
            for x, es in enumerate(_clean_e_lists(ring))
        ]

    return ring.cached("strong_clean_e", fill)


def _make(ring: FiniteRing, x: int, e: int, kind: str) -> Decomposition:
    y = ring.sub_i(x, e)
    return Decomposition(
        element=ring.elem(x),
        idempotent=ring.elem(e),
        second=ring.elem(y),
        kind=kind,
        commutes=_commuting(ring, e, y),
        nil_index=nilpotency_index(ring, y) if kind == NIL_CLEAN else None,
    ).verify()


def nil_clean_decompositions(ring: FiniteRing, x: ElemLike) -> List[Decomposition]:
    """All pairs (e, x-e) with e idempotent and x-e nilpotent, by e ascending.

    An empty list means x is not nil-clean.
    """
    i = ring.index_of(x)
    return [_make(ring, i, e, NIL_CLEAN) for e in _nil_e_lists(ring)[i]]


def clean_decompositions(ring: FiniteRing, x: ElemLike) -> List[Decomposition]:
    """All pairs (e, x-e) with e idempotent and x-e a unit, by e ascending."""
    i = ring.index_of(x)
    return [_make(ring, i, e, CLEAN) for e in _clean_e_lists(ring)[i]]


def strongly_filter(decompositions: List[Decomposition]) -> List[Decomposition]:
    """Keep the decompositions whose two parts commute."""
    return [d for d in decompositions if d.commutes]


# --------------------------------------------------------------------------
# ideal- and ring-level predicates


def is_clean_ideal(ideal: Ideal) -> bool:
    lists = _clean_e_lists(ideal.ring)
    return all(lists[x] for x in ideal.indices)


def is_nil_clean_ideal(ideal: Ideal) -> bool:
    lists = _nil_e_lists(ideal.ring)
    return all(lists[x] for x in ideal.indices)


def is_strongly_nil_clean_ideal(ideal: Ideal) -> bool:
    lists = _strong_nil_e_lists(ideal.ring)
    return all(lists[x] for x in ideal.indices)


def is_strongly_clean_ideal(ideal: Ideal) -> bool:
    lists = _strong_clean_e_lists(ideal.ring)
    return all(lists[x] for x in ideal.indices)


def is_uniquely_nil_clean_ideal(ideal: Ideal) -> bool:
    """Exactly one admissible idempotent for every member."""
    lists = _nil_e_lists(ideal.ring)
    return all(len(lists[x]) == 1 for x in ideal.indices)


def is_uniquely_strongly_nil_clean_ideal(ideal: Ideal) -> bool:
    """Exactly one commuting decomposition for every member.

    The second part is x - e, so counting decompositions and counting their
    idempotents is the same count.
    """
    lists = _strong_nil_e_lists(ideal.ring)
    return all(len(lists[x]) == 1 for x in ideal.indices)


def is_uniquely_strongly_clean_ideal(ideal: Ideal) -> bool:
    lists = _strong_clean_e_lists(ideal.ring)
    return all(len(lists[x]) == 1 for x in ideal.indices)


def is_nil_clean_ring(ring: FiniteRing) -> bool:
    """True iff every element of the ring is nil-clean."""
    lists = _nil_e_lists(ring)
    return all(lists[x] for x in range(ring.order))


def decomposition_within_ideal(ideal: Ideal, x: ElemLike) -> List[Decomposition]:
    """Nil-clean decompositions of x whose both parts lie inside the ideal."""
    ring = ideal.ring
    i = ring.index_of(x)
    if i not in ideal:
        raise PreconditionViolated(f"element {i} is not in the ideal")
    out = []
    for e in _nil_e_lists(ring)[i]:
        if e in ideal and ring.sub_i(i, e) in ideal:
            out.append(_make(ring, i, e, NIL_CLEAN))
    return out


# --------------------------------------------------------------------------
# constructive idempotent lifting


def _cube_step(ring: FiniteRing, t: int) -> int:
    # t -> 3t^2 - 2t^3, the idempotent-refining polynomial step
    t2 = ring.mul_i(t, t)
    t3 = ring.mul_i(t2, t)
    three_t2 = ring.add_i(t2, ring.add_i(t2, t2))
    two_t3 = ring.add_i(t3, t3)
    return ring.sub_i(three_t2, two_t3)


def lift_idempotent_path(ring: FiniteRing, a: ElemLike) -> List[Elem]:
    """Iterates of t -> 3t^2 - 2t^3 from a down to a fixed idempotent.

    Requires a - a^2 nilpotent.  Each step squares the nilpotency order of
    t - t^2 (up to a commuting factor), so at most ceil(log2 v) + 1 steps are
    needed, v being the nilpotency index of a - a^2; the bound is asserted.
    """
    i = ring.index_of(a)
    defect = ring.sub_i(i, ring.mul_i(i, i))
    v = nilpotency_index(ring, defect)
    if v is None:
        raise NotAlmostIdempotent(
            f"{ring.spec}: a - a^2 is not nilpotent for element {i}"
        )
    bound = (v - 1).bit_length() + 1
    path = [ring.elem(i)]
    t = i
    steps = 0
    while ring.mul_i(t, t) != t:
        t = _cube_step(ring, t)
        steps += 1
        path.append(ring.elem(t))
        if steps > bound:
            raise InternalInvariantViolation(
                f"lifting exceeded {bound} steps on {ring.spec} element {i}"
            )
    if nilpotency_index(ring, ring.sub_i(i, t)) is None:
        raise InternalInvariantViolation(
            f"lifted idempotent is not congruent to {i} modulo nilpotents"
        )
    return path


def lift_idempotent(ring: FiniteRing, a: ElemLike) -> Elem:
    """An idempotent e, polynomial in a, with a - e nilpotent."""
    return lift_idempotent_path(ring, a)[-1]


def lift_idempotent_mod_nil(ring: FiniteRing, ideal: Ideal, x: ElemLike) -> Elem:
    """Lift x with x^2 - x in a nil ideal to an idempotent congruent mod it.

    The iteration only ever moves x by multiples of x - x^2, so the result
    stays congruent to x modulo the ideal; that containment is re-checked.
    """
    if ideal.ring is not ring:
        raise PreconditionViolated("ideal belongs to a different ring")
    if not is_nil_ideal(ideal):
        raise PreconditionViolated(f"{ring.spec}: the ideal is not nil")
    i = ring.index_of(x)
    defect = ring.sub_i(ring.mul_i(i, i), i)
    if defect not in ideal:
        raise PreconditionViolated(f"x^2 - x is not in the ideal for element {i}")
    e = lift_idempotent(ring, i)
    if ring.sub_i(e.index, i) not in ideal:
        raise InternalInvariantViolation(
            f"lift left the coset of {i} modulo the ideal"
        )
    return e
