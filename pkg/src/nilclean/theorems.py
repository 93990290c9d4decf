"""Registry of executable checks run over configurable ring families.

Each check evaluates one verified property (hypotheses first, then the
conclusion, both directions for equivalences) over every instance its
generator derives from the family, and reports a verdict with a serialized
witness on failure.  A counterexample verdict on any registered property is
treated as a bug in this implementation, never as a mathematical discovery:
that inversion is the harness's core contract.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .classify import (
    center,
    complete_orthogonal_central_sets,
    idempotents,
    is_central,
    is_idempotent,
    jacobson_radical,
    nilpotency_index,
    nilpotents,
    units,
)
from .construct import (
    TRI_POSITIONS,
    Caps,
    build,
    make_corner,
    make_quotient,
    make_zmod,
)
from .decompose import (
    clean_decompositions,
    decomposition_within_ideal,
    is_clean_ideal,
    is_nil_clean_ideal,
    is_nil_clean_ring,
    is_strongly_clean_ideal,
    is_strongly_nil_clean_ideal,
    is_uniquely_nil_clean_ideal,
    is_uniquely_strongly_clean_ideal,
    is_uniquely_strongly_nil_clean_ideal,
    lift_idempotent_mod_nil,
    nil_clean_decompositions,
)
from .errors import AxiomFailure, NilCleanError, NotAnIdeal, UnknownCheck
from .ideals import (
    Ideal,
    all_ideals,
    ideal_generated,
    ideal_intersect,
    ideal_product,
    image_ideal,
    is_nil_ideal,
    corner_ideal,
    unit_ideal,
    zero_ideal,
)
from .ring import EXHAUSTIVE_LIMIT, FiniteRing, is_commutative, verify_axioms

DEFAULT_FAMILY: Tuple[str, ...] = (
    "Z2",
    "Z3",
    "Z4",
    "Z6",
    "Z8",
    "Z9",
    "Z12",
    "Z16",
    "Z27",
    "Z4xZ3",
    "T2(Z2)",
    "T2(Z4)",
    "T3(Z2)",
    "Id(4,2)",
    "Id(8,2)",
    "Id(4,4)",
    "MZ(4,2,2)",
    "MZ(2,2,2)",
)


@dataclass
class SuiteConfig:
    """Configuration for a full run: ring family, caps, worker count."""

    family: Sequence = DEFAULT_FAMILY
    caps: Caps = field(default_factory=Caps)
    threads: Optional[int] = None  # None -> NILCLEAN_THREADS env var, else 1


@dataclass
class TheoremReport:
    id: str
    statement: str
    instances_tested: int
    hypotheses_met: int
    verdict: str  # verified | counterexample | vacuous | error
    witness: Optional[dict] = None
    details: Optional[dict] = None
    millis: float = 0.0

    def to_json(self, include_millis: bool = False) -> dict:
        out = {
            "id": self.id,
            "paper_result": self.statement,
            "instances_tested": self.instances_tested,
            "hypotheses_met": self.hypotheses_met,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details is not None:
            out["details"] = self.details
        if include_millis:
            out["millis"] = self.millis
        return out


@dataclass
class CheckOutcome:
    instances: int
    hypotheses_met: int
    witness: Optional[dict] = None
    details: Optional[dict] = None


@dataclass(frozen=True)
class CheckDef:
    id: str
    statement: str
    commutative_only: bool
    fn: Callable


def _w(ring: FiniteRing, reason: str, ideal=None, element=None, **extra) -> dict:
    out: dict = {"ring": ring.spec, "reason": reason}
    if ideal is not None:
        out["ideal"] = sorted(ideal.indices if isinstance(ideal, Ideal) else ideal)
    if element is not None:
        out["element"] = element
        out["element_label"] = ring.label(element)
    out.update(extra)
    return out


def _ideals(ring: FiniteRing, caps: Caps) -> List[Ideal]:
    return all_ideals(ring, cap=caps.ideal_cap)


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _of_structure(rings, tag: str):
    return [r for r in rings if r.structure[0] == tag]


# --------------------------------------------------------------------------
# ideal builders for structured rings


def _product_ideal(ring: FiniteRing, component_ideals) -> Ideal:
    members = [
        i
        for i in range(ring.order)
        if all(t in c for t, c in zip(ring.decode(i), component_ideals))
    ]
    return Ideal.from_members(ring, members)


def _tri_full_ideal(tri: FiniteRing, base_ideal: Ideal) -> Ideal:
    members = [
        i for i in range(tri.order) if all(t in base_ideal for t in tri.decode(i))
    ]
    return Ideal.from_members(tri, members)


def _tri2_pair_ideal(tri: FiniteRing, left: Ideal, right: Ideal) -> Ideal:
    # members (a, b, d) with a in left, d in right, middle entry free
    members = []
    for i in range(tri.order):
        a, _, d = tri.decode(i)
        if a in left and d in right:
            members.append(i)
    return Ideal.from_members(tri, members)


def _idealization_ideal(ring: FiniteRing, base_ideal: Ideal, d: int) -> Ideal:
    _, _, m = ring.structure
    members = []
    for i in range(ring.order):
        r, v = ring.decode(i)
        if r in base_ideal and v % d == 0:
            members.append(i)
    return Ideal.from_members(ring, members)


def _morita_projections(ring: FiniteRing, ideal: Ideal):
    a1, b1, m1, n1 = set(), set(), set(), set()
    for i in ideal.indices:
        r, s, m, n = ring.decode(i)
        a1.add(r)
        b1.add(s)
        m1.add(m)
        n1.add(n)
    return a1, b1, m1, n1


def _morita_block_members(ring: FiniteRing, a1, b1, m1, n1) -> List[int]:
    out = []
    for i in range(ring.order):
        r, s, m, n = ring.decode(i)
        if r in a1 and s in b1 and m in m1 and n in n1:
            out.append(i)
    return out


def _subgroups_mod(g: int) -> List[frozenset]:
    return [frozenset(range(0, g, d)) for d in _divisors(g)]


# --------------------------------------------------------------------------
# the checks


def _check_l1(rings, caps) -> CheckOutcome:
    inst = hyp = clean_not_nil = 0
    for ring in rings:
        one = ring.one_i
        for ideal in _ideals(ring, caps):
            inst += 1
            nil_clean = is_nil_clean_ideal(ideal)
            if is_clean_ideal(ideal) and not nil_clean:
                clean_not_nil += 1
            if not nil_clean:
                continue
            hyp += 1
            if not is_clean_ideal(ideal):
                bad = next(
                    x for x in ideal.indices if not clean_decompositions(ring, x)
                )
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "nil-clean ideal with a non-clean member", ideal, bad),
                )
            # the constructive pair: if -x = e + n then (1-e) + (-1-n) = x
            for x in ideal.indices:
                for d in nil_clean_decompositions(ring, ring.neg_i(x)):
                    e, n = d.idempotent.index, d.second.index
                    em = ring.sub_i(one, e)
                    um = ring.neg_i(ring.add_i(one, n))
                    if (
                        ring.add_i(em, um) != x
                        or ring.mul_i(em, em) != em
                        or um not in units(ring)
                    ):
                        return CheckOutcome(
                            inst,
                            hyp,
                            _w(
                                ring,
                                "constructed clean pair fails",
                                ideal,
                                x,
                                idempotent=em,
                                unit=um,
                            ),
                        )
    return CheckOutcome(inst, hyp, details={"clean_but_not_nil_clean": clean_not_nil})


def _check_ppp1(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        radical = jacobson_radical(ring)
        for ideal in _ideals(ring, caps):
            inst += 1
            if not is_nil_clean_ideal(ideal):
                continue
            hyp += 1
            meet = ideal_intersect(ideal, radical)
            if not is_nil_ideal(meet):
                bad = next(
                    x for x in meet.indices if nilpotency_index(ring, x) is None
                )
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "radical meet contains a non-nilpotent", ideal, bad),
                )
    return CheckOutcome(inst, hyp)


def _check_ppp1_cor(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        inst += 1
        if not is_nil_clean_ring(ring):
            continue
        hyp += 1
        radical = jacobson_radical(ring)
        nil = nilpotents(ring)
        for x in radical.indices:
            if x not in nil:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "radical member outside the nilpotents", radical, x),
                )
    return CheckOutcome(inst, hyp)


def _check_prod_ideals(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        ideals = _ideals(ring, caps)
        for left, right in itertools.combinations_with_replacement(ideals, 2):
            inst += 1
            if not (is_nil_clean_ideal(left) and is_nil_clean_ideal(right)):
                continue
            hyp += 1
            product = ideal_product(left, right)
            if not is_nil_clean_ideal(product):
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "product of nil-clean ideals is not nil-clean", product),
                )
    return CheckOutcome(inst, hyp)


def _check_strong_iff(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        for ideal in _ideals(ring, caps):
            inst += 1
            hyp += 1
            lhs = is_strongly_nil_clean_ideal(ideal)
            rhs = is_strongly_clean_ideal(ideal) and all(
                nilpotency_index(ring, ring.sub_i(x, ring.mul_i(x, x))) is not None
                for x in ideal.indices
            )
            if lhs != rhs:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(
                        ring,
                        "strongly nil-clean disagrees with strongly clean + nilpotent defect",
                        ideal,
                        direction="forward" if lhs else "backward",
                    ),
                )
    return CheckOutcome(inst, hyp)


def _check_strong_unique(rings, caps) -> CheckOutcome:
    inst = hyp = divergences = 0
    for ring in rings:
        for ideal in _ideals(ring, caps):
            inst += 1
            if is_uniquely_nil_clean_ideal(ideal) != is_uniquely_strongly_nil_clean_ideal(
                ideal
            ):
                divergences += 1
            if not is_strongly_nil_clean_ideal(ideal):
                continue
            hyp += 1
            if not is_uniquely_strongly_nil_clean_ideal(ideal):
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "strongly nil-clean but not uniquely so", ideal),
                )
            if not is_uniquely_strongly_clean_ideal(ideal):
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "strongly nil-clean but not uniquely strongly clean", ideal),
                )
    return CheckOutcome(
        inst, hyp, details={"unique_vs_strongly_unique_divergences": divergences}
    )


def _check_ttt1(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        radical = jacobson_radical(ring)
        radical_nil = is_nil_ideal(radical)
        _, projection = make_quotient(ring, radical)
        for ideal in _ideals(ring, caps):
            inst += 1
            if ideal.mask & radical.mask != radical.mask:
                continue  # needs the radical inside the ideal
            hyp += 1
            image = image_ideal(projection, ideal)
            lhs = radical_nil and all(
                image.ring.mul_i(x, x) == x for x in image.indices
            )
            rhs = is_nil_clean_ideal(ideal)
            if lhs != rhs:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(
                        ring,
                        "boolean-modulo-radical disagrees with nil-clean",
                        ideal,
                        direction="forward" if lhs else "backward",
                    ),
                )
    return CheckOutcome(inst, hyp)


def _check_central_idem(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        idem = idempotents(ring)
        for ideal in _ideals(ring, caps):
            inst += 1
            if not is_uniquely_nil_clean_ideal(ideal):
                continue
            hyp += 1
            for x in ideal.indices:
                if x in idem and not is_central(ring, x):
                    return CheckOutcome(
                        inst,
                        hyp,
                        _w(
                            ring,
                            "non-central idempotent in a uniquely nil-clean ideal",
                            ideal,
                            x,
                        ),
                    )
    return CheckOutcome(inst, hyp)


def _check_main1(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        for ideal in _ideals(ring, caps):
            inst += 1
            hyp += 1
            lhs = is_nil_clean_ideal(ideal)
            rhs = all(
                decomposition_within_ideal(ideal, x) for x in ideal.indices
            )
            if lhs != rhs:
                bad = next(
                    (
                        x
                        for x in ideal.indices
                        if not decomposition_within_ideal(ideal, x)
                    ),
                    None,
                )
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(
                        ring,
                        "nil-clean disagrees with both-parts-inside splitting",
                        ideal,
                        bad,
                    ),
                )
    return CheckOutcome(inst, hyp)


def _check_local_cor(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        if idempotents(ring) != frozenset({ring.zero_i, ring.one_i}):
            continue
        for ideal in _ideals(ring, caps):
            inst += 1
            if not (ideal.is_proper and is_nil_clean_ideal(ideal)):
                continue
            hyp += 1
            if not is_nil_ideal(ideal):
                bad = next(
                    x for x in ideal.indices if nilpotency_index(ring, x) is None
                )
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "proper nil-clean ideal that is not nil", ideal, bad),
                )
    return CheckOutcome(inst, hyp)


def _check_mmm(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        radical = jacobson_radical(ring)
        for ideal in _ideals(ring, caps):
            inst += 1
            hyp += 1
            meet = ideal_intersect(ideal, radical)
            _, projection = make_quotient(ring, meet)
            image = image_ideal(projection, ideal)
            lhs = is_nil_clean_ideal(ideal)
            rhs = is_nil_ideal(meet) and all(
                image.ring.mul_i(x, x) == x for x in image.indices
            )
            if lhs != rhs:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(
                        ring,
                        "nil-clean disagrees with boolean-modulo-meet splitting",
                        ideal,
                        direction="forward" if lhs else "backward",
                    ),
                )
    return CheckOutcome(inst, hyp)


def _check_main(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        inst += 1
        hyp += 1
        exists = False
        for e in sorted(idempotents(ring) & center(ring)):
            part = ideal_generated(ring, [e])
            co_part = ideal_generated(ring, [ring.sub_i(ring.one_i, e)])
            if is_nil_clean_ideal(part) and is_nil_clean_ideal(co_part):
                exists = True
                break
        if exists != is_nil_clean_ring(ring):
            return CheckOutcome(
                inst,
                hyp,
                _w(
                    ring,
                    "splitting central idempotent disagrees with nil-clean ring",
                    direction="forward" if exists else "backward",
                ),
            )
    return CheckOutcome(inst, hyp)


def _check_complete_set(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        inst += 1
        hyp += 1
        exists = any(
            all(is_nil_clean_ideal(ideal_generated(ring, [e])) for e in combo)
            for combo in complete_orthogonal_central_sets(ring)
        )
        if exists != is_nil_clean_ring(ring):
            return CheckOutcome(
                inst,
                hyp,
                _w(
                    ring,
                    "complete-set generation disagrees with nil-clean ring",
                    direction="forward" if exists else "backward",
                ),
            )
    return CheckOutcome(inst, hyp)


def _check_corner(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        combos = complete_orthogonal_central_sets(ring)
        for ideal in _ideals(ring, caps):
            inst += 1
            hyp += 1
            lhs = is_nil_clean_ideal(ideal)
            rhs = any(
                all(
                    is_nil_clean_ideal(corner_ideal(ring, e, ideal)) for e in combo
                )
                for combo in combos
            )
            if lhs != rhs:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(
                        ring,
                        "corner cuts disagree with nil-clean",
                        ideal,
                        direction="forward" if lhs else "backward",
                    ),
                )
    return CheckOutcome(inst, hyp)


def _check_lift_mod_nil(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        ideals = _ideals(ring, caps)
        for nil in (i for i in ideals if is_nil_ideal(i)):
            _, projection = make_quotient(ring, nil)
            for outer in ideals:
                if outer.mask & nil.mask != nil.mask:
                    continue
                inst += 1
                hyp += 1
                image = image_ideal(projection, outer)
                lhs = is_nil_clean_ideal(outer)
                rhs = is_nil_clean_ideal(image)
                if lhs != rhs:
                    return CheckOutcome(
                        inst,
                        hyp,
                        _w(
                            ring,
                            "nil-clean does not transfer along the nil quotient",
                            outer,
                            modulo=sorted(nil.indices),
                            direction="forward" if lhs else "backward",
                        ),
                    )
                # exercise the lifting mechanism the backward direction uses
                for x in outer.indices:
                    if ring.sub_i(ring.mul_i(x, x), x) in nil:
                        try:
                            lift_idempotent_mod_nil(ring, nil, x)
                        except NilCleanError as exc:
                            return CheckOutcome(
                                inst,
                                hyp,
                                _w(
                                    ring,
                                    f"idempotent lift failed: {exc}",
                                    outer,
                                    x,
                                ),
                            )
    return CheckOutcome(inst, hyp)


def _check_hom_image(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in rings:
        ideals = _ideals(ring, caps)
        for kernel in ideals:
            if not kernel.is_proper:
                continue
            _, projection = make_quotient(ring, kernel)
            for ideal in ideals:
                inst += 1
                if not is_nil_clean_ideal(ideal):
                    continue
                hyp += 1
                image = image_ideal(projection, ideal)
                if not is_nil_clean_ideal(image):
                    return CheckOutcome(
                        inst,
                        hyp,
                        _w(
                            ring,
                            "projected nil-clean ideal stops being nil-clean",
                            ideal,
                            kernel=sorted(kernel.indices),
                        ),
                    )
    return CheckOutcome(inst, hyp)


def _check_fin_prod(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in _of_structure(rings, "product"):
        parts = ring.structure[1]
        per_part = [_ideals(part, caps) for part in parts]
        for combo in itertools.product(*per_part):
            inst += 1
            hyp += 1
            product = _product_ideal(ring, combo)
            lhs = all(is_nil_clean_ideal(c) for c in combo)
            rhs = is_nil_clean_ideal(product)
            if lhs != rhs:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(
                        ring,
                        "componentwise nil-clean disagrees with the product ideal",
                        product,
                        direction="forward" if lhs else "backward",
                    ),
                )
    return CheckOutcome(inst, hyp)


def _check_dirsum(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in _of_structure(rings, "product"):
        parts = ring.structure[1]
        if len(parts) != 2:
            continue
        inst += 1
        first, second = parts
        if not (is_nil_clean_ring(first) and not is_nil_clean_ring(second)):
            continue
        hyp += 1
        if is_nil_clean_ring(ring):
            return CheckOutcome(
                inst, hyp, _w(ring, "mixed product ring is unexpectedly nil-clean")
            )
        strip = _product_ideal(ring, [unit_ideal(first), zero_ideal(second)])
        if not is_nil_clean_ideal(strip):
            return CheckOutcome(
                inst,
                hyp,
                _w(ring, "first-factor strip is not a nil-clean ideal", strip),
            )
    return CheckOutcome(inst, hyp)


def _check_nilindex_growth(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for n in range(1, 11):
        inst += 1
        hyp += 1
        modulus = 2 ** n
        ring = make_zmod(modulus, cap=max(caps.order_cap, modulus))
        index = nilpotency_index(ring, 2 % modulus)
        if index != n:
            return CheckOutcome(
                inst,
                hyp,
                _w(ring, f"index of 2 is {index}, expected {n}", element=2 % modulus),
            )
    return CheckOutcome(inst, hyp)


def _check_d211(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for tri in _of_structure(rings, "tri"):
        n, base = tri.structure[1], tri.structure[2]
        diag_slots = [
            t for t, (r, c) in enumerate(TRI_POSITIONS[n]) if r == c
        ]
        for i in range(tri.order):
            inst += 1
            hyp += 1
            entries = tri.decode(i)
            diag = [entries[t] for t in diag_slots]
            if is_idempotent(tri, i) and any(
                base.mul_i(d, d) != d for d in diag
            ):
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(tri, "idempotent matrix with non-idempotent diagonal", element=i),
                )
            lhs = nilpotency_index(tri, i) is not None
            rhs = all(nilpotency_index(base, d) is not None for d in diag)
            if lhs != rhs:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(
                        tri,
                        "matrix nilpotency disagrees with diagonal nilpotency",
                        element=i,
                    ),
                )
    return CheckOutcome(inst, hyp)


def _check_tt1(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for tri in _of_structure(rings, "tri"):
        base = tri.structure[2]
        for ideal in _ideals(base, caps):
            inst += 1
            hyp += 1
            lifted = _tri_full_ideal(tri, ideal)
            lhs = is_nil_clean_ideal(ideal)
            rhs = is_nil_clean_ideal(lifted)
            if lhs != rhs:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(
                        tri,
                        "entrywise ideal disagrees with its base ideal",
                        lifted,
                        base_ideal=sorted(ideal.indices),
                        direction="forward" if lhs else "backward",
                    ),
                )
    return CheckOutcome(inst, hyp)


def _check_rm(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in _of_structure(rings, "idealization"):
        _, n, m = ring.structure
        base = make_zmod(n)
        for i in range(ring.order):
            inst += 1
            hyp += 1
            r, v = ring.decode(i)
            for k in range(1, 9):
                expected = (pow(r, k, n)) * m + (k * pow(r, k - 1, n) * v) % m
                if ring.pow_i(i, k) != expected:
                    return CheckOutcome(
                        inst,
                        hyp,
                        _w(ring, f"power formula fails at exponent {k}", element=i),
                    )
            pair_nil = nilpotency_index(ring, i) is not None
            first_nil = nilpotency_index(base, r) is not None
            if pair_nil != first_nil:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "nilpotency does not reduce to the first coordinate", element=i),
                )
            pair_idem = is_idempotent(ring, i)
            first_idem = base.mul_i(r, r) == r and v == 0
            if pair_idem != first_idem:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "idempotency does not reduce to (idempotent, 0)", element=i),
                )
    return CheckOutcome(inst, hyp)


def _check_rm1(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in _of_structure(rings, "idealization"):
        _, n, m = ring.structure
        base = make_zmod(n)
        for ideal in _ideals(base, caps):
            for d in _divisors(m):
                inst += 1
                try:
                    lifted = _idealization_ideal(ring, ideal, d)
                except NotAnIdeal:
                    # the pair set is only an ideal when ideal * module lands
                    # inside the submodule; other pairs carry no claim
                    continue
                hyp += 1
                lhs = is_nil_clean_ideal(ideal)
                rhs = is_nil_clean_ideal(lifted)
                if lhs != rhs:
                    return CheckOutcome(
                        inst,
                        hyp,
                        _w(
                            ring,
                            "pairing with a submodule changes nil-cleanness",
                            lifted,
                            base_ideal=sorted(ideal.indices),
                            submodule_step=d,
                            direction="forward" if lhs else "backward",
                        ),
                    )
    return CheckOutcome(inst, hyp)


def _morita_containments(a: int, b: int, g: int, a1, b1, m1, n1) -> bool:
    full = range(g)
    # bottom-left strip: hit by the B ideal from the left and by the A ideal
    # from the right, and closed under both full actions
    for w in full:
        if any((s * w) % g not in m1 for s in b1):
            return False
        if any((w * r) % g not in m1 for r in a1):
            return False
        if any((r * w) % g not in n1 for r in a1):
            return False
        if any((w * s) % g not in n1 for s in b1):
            return False
    for w in m1:
        if any((s * w) % g not in m1 for s in range(b)):
            return False
        if any((w * r) % g not in m1 for r in range(a)):
            return False
    for w in n1:
        if any((r * w) % g not in n1 for r in range(a)):
            return False
        if any((w * s) % g not in n1 for s in range(b)):
            return False
    return True


def _check_morita_proj(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in _of_structure(rings, "morita_zero"):
        _, a, b, g = ring.structure
        ring_a = make_zmod(a)
        ring_b = make_zmod(b)
        known = {ideal.mask for ideal in _ideals(ring, caps)}
        for ideal in _ideals(ring, caps):
            inst += 1
            hyp += 1
            a1, b1, m1, n1 = _morita_projections(ring, ideal)
            block = _morita_block_members(ring, a1, b1, m1, n1)
            if tuple(block) != ideal.indices:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "ideal is not the block set of its projections", ideal),
                )
            try:
                Ideal.from_members(ring_a, a1)
                Ideal.from_members(ring_b, b1)
            except NilCleanError:
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "diagonal projection is not an ideal", ideal),
                )
            if not _morita_containments(a, b, g, a1, b1, m1, n1):
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "projections violate the block containments", ideal),
                )
        # converse: every containment-satisfying quadruple gives an ideal
        for ia in _ideals(ring_a, caps):
            for ib in _ideals(ring_b, caps):
                for m1 in _subgroups_mod(g):
                    for n1 in _subgroups_mod(g):
                        a1 = set(ia.indices)
                        b1 = set(ib.indices)
                        if not _morita_containments(a, b, g, a1, b1, m1, n1):
                            continue
                        inst += 1
                        hyp += 1
                        members = _morita_block_members(ring, a1, b1, m1, n1)
                        try:
                            block = Ideal.from_members(ring, members)
                        except NilCleanError:
                            return CheckOutcome(
                                inst,
                                hyp,
                                _w(
                                    ring,
                                    "containment-satisfying block set is not an ideal",
                                    ideal=members,
                                ),
                            )
                        if block.mask not in known:
                            return CheckOutcome(
                                inst,
                                hyp,
                                _w(ring, "block ideal missing from the ideal list", block),
                            )
    return CheckOutcome(inst, hyp)


_MORITA_NOTE = "second diagonal conclusion read as the lower-right block"


def _morita_diagonal_ideals(ring: FiniteRing, ideal: Ideal, ring_a, ring_b):
    a1, b1, _, _ = _morita_projections(ring, ideal)
    return Ideal.from_members(ring_a, a1), Ideal.from_members(ring_b, b1)


def _check_morita_corner(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for ring in _of_structure(rings, "morita_zero"):
        _, a, b, _ = ring.structure
        ring_a = make_zmod(a)
        ring_b = make_zmod(b)
        for ideal in _ideals(ring, caps):
            inst += 1
            if not is_strongly_nil_clean_ideal(ideal):
                continue
            hyp += 1
            left, right = _morita_diagonal_ideals(ring, ideal, ring_a, ring_b)
            if not is_strongly_nil_clean_ideal(left):
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "upper-left projection not strongly nil-clean", ideal),
                )
            if not is_strongly_nil_clean_ideal(right):
                return CheckOutcome(
                    inst,
                    hyp,
                    _w(ring, "lower-right projection not strongly nil-clean", ideal),
                )
    return CheckOutcome(inst, hyp, details={"interpretation": _MORITA_NOTE})


def _check_morita_zero_iff(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    strong_witness = plain_witness = None
    for ring in _of_structure(rings, "morita_zero"):
        _, a, b, _ = ring.structure
        ring_a = make_zmod(a)
        ring_b = make_zmod(b)
        for ideal in _ideals(ring, caps):
            inst += 1
            hyp += 1
            left, right = _morita_diagonal_ideals(ring, ideal, ring_a, ring_b)
            rhs = is_strongly_nil_clean_ideal(left) and is_strongly_nil_clean_ideal(
                right
            )
            if strong_witness is None and is_strongly_nil_clean_ideal(ideal) != rhs:
                strong_witness = _w(
                    ring, "strong reading fails", ideal, reading="strong"
                )
            if plain_witness is None and is_nil_clean_ideal(ideal) != rhs:
                plain_witness = _w(ring, "plain reading fails", ideal, reading="plain")
    details = {
        "strong_reading": "counterexample" if strong_witness else "verified",
        "plain_reading": "counterexample" if plain_witness else "verified",
        "interpretation": _MORITA_NOTE,
    }
    witness = strong_witness or plain_witness
    return CheckOutcome(inst, hyp, witness, details)


def _check_tri_cor(rings, caps) -> CheckOutcome:
    inst = hyp = 0
    for tri in _of_structure(rings, "tri"):
        if tri.structure[1] != 2:
            continue
        base = tri.structure[2]
        ideals = _ideals(base, caps)
        for left in ideals:
            for right in ideals:
                inst += 1
                hyp += 1
                lifted = _tri2_pair_ideal(tri, left, right)
                lhs = is_nil_clean_ideal(left) and is_nil_clean_ideal(right)
                rhs = is_nil_clean_ideal(lifted)
                if lhs != rhs:
                    return CheckOutcome(
                        inst,
                        hyp,
                        _w(
                            tri,
                            "corner pair disagrees with the triangular ideal",
                            lifted,
                            direction="forward" if lhs else "backward",
                        ),
                    )
    return CheckOutcome(inst, hyp)


CHECKS: Dict[str, CheckDef] = {
    c.id: c
    for c in [
        CheckDef(
            "L1",
            "every nil-clean ideal is a clean ideal",
            False,
            _check_l1,
        ),
        CheckDef(
            "PPP1",
            "a nil-clean ideal meets the radical in a nil ideal",
            False,
            _check_ppp1,
        ),
        CheckDef(
            "PPP1_cor",
            "in a nil-clean ring the radical sits inside the nilpotents",
            False,
            _check_ppp1_cor,
        ),
        CheckDef(
            "prod_ideals",
            "products of nil-clean ideals stay nil-clean (commutative)",
            True,
            _check_prod_ideals,
        ),
        CheckDef(
            "strong_iff",
            "strongly nil-clean = strongly clean with nilpotent a - a^2",
            False,
            _check_strong_iff,
        ),
        CheckDef(
            "strong_unique",
            "strongly nil-clean ideals are uniquely strongly (nil-)clean",
            False,
            _check_strong_unique,
        ),
        CheckDef(
            "TTT1",
            "with the radical inside: nil-clean = boolean modulo a nil radical",
            True,
            _check_ttt1,
        ),
        CheckDef(
            "central_idem",
            "idempotents of uniquely nil-clean ideals are central",
            False,
            _check_central_idem,
        ),
        CheckDef(
            "main1",
            "nil-clean ideals split with both parts inside the ideal",
            False,
            _check_main1,
        ),
        CheckDef(
            "local_cor",
            "without nontrivial idempotents, proper nil-clean ideals are nil",
            False,
            _check_local_cor,
        ),
        CheckDef(
            "mmm",
            "nil-clean = boolean modulo a nil meet with the radical (commutative)",
            True,
            _check_mmm,
        ),
        CheckDef(
            "main",
            "nil-clean ring = some central idempotent splits it into nil-clean ideals",
            False,
            _check_main,
        ),
        CheckDef(
            "complete_set",
            "nil-clean ring = a complete central set generates nil-clean ideals",
            False,
            _check_complete_set,
        ),
        CheckDef(
            "corner",
            "nil-clean ideal = nil-clean in every corner of a complete set",
            False,
            _check_corner,
        ),
        CheckDef(
            "lift_mod_nil",
            "nil-clean transfers both ways across a nil-ideal quotient",
            False,
            _check_lift_mod_nil,
        ),
        CheckDef(
            "hom_image",
            "projections of nil-clean ideals are nil-clean",
            False,
            _check_hom_image,
        ),
        CheckDef(
            "fin_prod",
            "finite product ideals are nil-clean iff every component is",
            False,
            _check_fin_prod,
        ),
        CheckDef(
            "dirsum",
            "a nil-clean-by-not product ring is not nil-clean but its first strip is",
            False,
            _check_dirsum,
        ),
        CheckDef(
            "nilindex_growth",
            "the nilpotency index of 2 modulo 2^n is exactly n",
            False,
            _check_nilindex_growth,
        ),
        CheckDef(
            "D211",
            "triangular idempotents/nilpotents are controlled by the diagonal",
            False,
            _check_d211,
        ),
        CheckDef(
            "TT1",
            "entrywise triangular ideals are nil-clean iff the base ideal is",
            False,
            _check_tt1,
        ),
        CheckDef(
            "RM",
            "idealization powers, nilpotency, idempotency reduce to the first slot",
            False,
            _check_rm,
        ),
        CheckDef(
            "RM1",
            "idealization ideals are nil-clean iff the base ideal is",
            False,
            _check_rm1,
        ),
        CheckDef(
            "morita_proj",
            "context ideals are exactly the containment-closed block sets",
            False,
            _check_morita_proj,
        ),
        CheckDef(
            "morita_corner",
            "strongly nil-clean context ideals have strongly nil-clean diagonals",
            False,
            _check_morita_corner,
        ),
        CheckDef(
            "morita_zero_iff",
            "zero pairing: context ideal nil-clean iff both diagonals are (both readings)",
            False,
            _check_morita_zero_iff,
        ),
        CheckDef(
            "tri_cor",
            "2x2 triangular pair ideals are nil-clean iff both corners are",
            False,
            _check_tri_cor,
        ),
    ]
}


def _as_rings(family, caps: Caps) -> List[FiniteRing]:
    return [entry if isinstance(entry, FiniteRing) else build(entry, caps) for entry in family]


def _gate(rings: List[FiniteRing]) -> None:
    """Verify every family ring's axioms before any check runs."""
    for ring in rings:
        mode = "exhaustive" if ring.order <= EXHAUSTIVE_LIMIT else "sampled"
        report = verify_axioms(ring, mode=mode, count=10_000)
        if not report.ok:
            raise AxiomFailure(report)


def _run_one(check: CheckDef, rings: List[FiniteRing], caps: Caps) -> TheoremReport:
    usable = [r for r in rings if not check.commutative_only or is_commutative(r)]
    start = time.perf_counter()
    if not usable:
        outcome = CheckOutcome(0, 0)
    else:
        try:
            outcome = check.fn(usable, caps)
        except NilCleanError as exc:
            return TheoremReport(
                check.id,
                check.statement,
                0,
                0,
                "error",
                witness={"reason": str(exc)},
                millis=(time.perf_counter() - start) * 1000.0,
            )
    millis = (time.perf_counter() - start) * 1000.0
    if outcome.witness is not None:
        verdict = "counterexample"
    elif outcome.hypotheses_met == 0:
        verdict = "vacuous"
    else:
        verdict = "verified"
    return TheoremReport(
        check.id,
        check.statement,
        outcome.instances,
        outcome.hypotheses_met,
        verdict,
        outcome.witness,
        outcome.details,
        millis,
    )


def run_check(check_id: str, family=DEFAULT_FAMILY, caps: Caps = Caps()) -> TheoremReport:
    """Evaluate one registered check over the given family."""
    if check_id not in CHECKS:
        raise UnknownCheck(check_id)
    rings = _as_rings(family, caps)
    return _run_one(CHECKS[check_id], rings, caps)


def thread_count(requested: Optional[int] = None) -> int:
    if requested is not None:
        return max(1, requested)
    raw = os.environ.get("NILCLEAN_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def run_all(
    config: SuiteConfig = SuiteConfig(), ids: Optional[Sequence[str]] = None
) -> List[TheoremReport]:
    """Run the selected checks (default all) over the configured family.

    Family rings pass the axiom gate first.  Reports come back ordered by
    check id regardless of how many workers ran them.
    """
    selected = sorted(ids) if ids is not None else sorted(CHECKS)
    for check_id in selected:
        if check_id not in CHECKS:
            raise UnknownCheck(check_id)
    rings = _as_rings(config.family, config.caps)
    _gate(rings)
    workers = thread_count(config.threads)
    if workers > 1 and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {
                check_id: pool.submit(_run_one, CHECKS[check_id], rings, config.caps)
                for check_id in selected
            }
            return [futures[check_id].result() for check_id in selected]
    return [_run_one(CHECKS[check_id], rings, config.caps) for check_id in selected]


def explore_noncommutative(
    family: Sequence[str] = ("T2(Z2)", "T2(Z4)", "T3(Z2)"), caps: Caps = Caps()
) -> List[dict]:
    """Probe the boolean-modulo-radical splittings on triangular rings.

    The splitting characterizations above are only asserted for commutative
    rings; this sweep reports whether the two sides agree on noncommutative
    triangular instances without treating disagreement as a failure.
    """
    findings = []
    for spec in family:
        ring = build(spec, caps)
        radical = jacobson_radical(ring)
        radical_nil = is_nil_ideal(radical)
        _, projection = make_quotient(ring, radical)
        for ideal in all_ideals(ring, cap=caps.ideal_cap):
            if ideal.mask & radical.mask != radical.mask:
                continue
            image = image_ideal(projection, ideal)
            boolean_side = radical_nil and all(
                image.ring.mul_i(x, x) == x for x in image.indices
            )
            nil_clean_side = is_nil_clean_ideal(ideal)
            findings.append(
                {
                    "ring": ring.spec,
                    "ideal": list(ideal.indices),
                    "boolean_modulo_radical": boolean_side,
                    "nil_clean": nil_clean_side,
                    "agree": boolean_side == nil_clean_side,
                }
            )
    return findings
