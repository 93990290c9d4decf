"""Ring constructors and the ring-spec mini-language.

Grammar (whitespace-insensitive)::

    spec    := atom ('x' atom)*          -- product of the atoms
    atom    := 'Z' int                   -- integers modulo n
             | 'T' int '(' spec ')'      -- upper-triangular matrices, n in {2,3}
             | 'Id' '(' int ',' int ')'  -- idealization of Z_n by Z_m, m | n
             | 'MZ' '(' int ',' int ',' int ')'
                                         -- zero-pairing context ring over
                                            Z_a, Z_b with both strips Z_g
             | 'Q' '(' spec ';' '[' ints ']' ')'
                                         -- quotient by the ideal the listed
                                            element indices generate
             | 'C' '(' spec ';' int ')'  -- corner cut at a central idempotent

Every constructor fixes a bijection between its structured elements and the
indices ``0..order-1`` (mixed radix, first coordinate most significant), so
membership sets and tables stay uniform across families.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Tuple, Union

from .errors import (
    BadParameter,
    NotCentralIdempotent,
    OrderCapExceeded,
    ParseError,
)
from .ring import MATERIALIZE_CAP, Elem, FiniteRing

DEFAULT_ORDER_CAP = 4096
DEFAULT_IDEAL_CAP = 512

TRI_POSITIONS = {
    2: ((0, 0), (0, 1), (1, 1)),
    3: ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)),
}


@dataclass(frozen=True)
class Caps:
    """Enumeration limits shared by constructors, ideal listing, and the CLI."""

    order_cap: int = DEFAULT_ORDER_CAP
    ideal_cap: int = DEFAULT_IDEAL_CAP


# --------------------------------------------------------------------------
# spec abstract syntax


@dataclass(frozen=True)
class Zmod:
    n: int

    def __str__(self):
        return f"Z{self.n}"


@dataclass(frozen=True)
class Product:
    parts: Tuple["RingSpec", ...]

    def __str__(self):
        return "x".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Tri:
    n: int
    base: "RingSpec"

    def __str__(self):
        return f"T{self.n}({self.base})"


@dataclass(frozen=True)
class Idealization:
    n: int
    m: int

    def __str__(self):
        return f"Id({self.n},{self.m})"


@dataclass(frozen=True)
class MoritaZero:
    a: int
    b: int
    g: int

    def __str__(self):
        return f"MZ({self.a},{self.b},{self.g})"


@dataclass(frozen=True)
class Quotient:
    base: "RingSpec"
    gens: Tuple[int, ...]

    def __str__(self):
        return f"Q({self.base};[{','.join(str(g) for g in self.gens)}])"


@dataclass(frozen=True)
class Corner:
    base: "RingSpec"
    e: int

    def __str__(self):
        return f"C({self.base};{self.e})"


RingSpec = Union[Zmod, Product, Tri, Idealization, MoritaZero, Quotient, Corner]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, literal: str):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            self.error(f"expected {literal!r}")
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def spec(self) -> RingSpec:
        parts = [self.atom()]
        while self.peek() == "x":
            self.take("x")
            parts.append(self.atom())
        if len(parts) == 1:
            return parts[0]
        flat: list = []
        for p in parts:
            flat.extend(p.parts if isinstance(p, Product) else [p])
        return Product(tuple(flat))

    def atom(self) -> RingSpec:
        self.skip_ws()
        rest = self.text[self.pos :]
        if rest.startswith("Id"):
            self.take("Id")
            self.take("(")
            n = self.integer()
            self.take(",")
            m = self.integer()
            self.take(")")
            return Idealization(n, m)
        if rest.startswith("MZ"):
            self.take("MZ")
            self.take("(")
            a = self.integer()
            self.take(",")
            b = self.integer()
            self.take(",")
            g = self.integer()
            self.take(")")
            return MoritaZero(a, b, g)
        if rest.startswith("Q"):
            self.take("Q")
            self.take("(")
            base = self.spec()
            self.take(";")
            self.take("[")
            gens = []
            if self.peek() != "]":
                gens.append(self.integer())
                while self.peek() == ",":
                    self.take(",")
                    gens.append(self.integer())
            self.take("]")
            self.take(")")
            return Quotient(base, tuple(gens))
        if rest.startswith("C"):
            self.take("C")
            self.take("(")
            base = self.spec()
            self.take(";")
            e = self.integer()
            self.take(")")
            return Corner(base, e)
        if rest.startswith("T"):
            self.take("T")
            n = self.integer()
            self.take("(")
            base = self.spec()
            self.take(")")
            return Tri(n, base)
        if rest.startswith("Z"):
            self.take("Z")
            return Zmod(self.integer())
        self.error("expected a ring spec")


def parse_ring_spec(text: str) -> RingSpec:
    """Parse the mini-language; raises ParseError with the failing position."""
    parser = _Parser(text)
    spec = parser.spec()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input after spec")
    return spec


# --------------------------------------------------------------------------
# constructors


def make_zmod(n: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """The ring of integers modulo n; index i is the residue i."""
    if n < 2:
        raise BadParameter(f"modulus must be at least 2, got {n}")
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds cap {cap}")
    if n <= MATERIALIZE_CAP:
        add = [[(i + j) % n for j in range(n)] for i in range(n)]
        mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    else:
        add = lambda i, j: (i + j) % n
        mul = lambda i, j: (i * j) % n
    return FiniteRing(
        order=n,
        zero=0,
        one=1,
        spec=f"Z{n}",
        structure=("zmod", n),
        add=add,
        mul=mul,
        neg=lambda i: (-i) % n,
    )


def make_product(parts, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Componentwise product; index = mixed radix over the part orders."""
    parts = tuple(parts)
    if not parts:
        raise BadParameter("a product needs at least one part")
    order = 1
    for p in parts:
        order *= p.order
        if order > cap:
            raise OrderCapExceeded(f"product order exceeds cap {cap}")
    strides = []
    acc = 1
    for p in reversed(parts):
        strides.append(acc)
        acc *= p.order
    strides.reverse()

    def decode(i: int) -> tuple:
        out = []
        for p, s in zip(parts, strides):
            out.append((i // s) % p.order)
        return tuple(out)

    def encode(tup) -> int:
        return sum(t * s for t, s in zip(tup, strides))

    def add(i, j):
        return encode(
            tuple(p.add_i(a, b) for p, a, b in zip(parts, decode(i), decode(j)))
        )

    def mul(i, j):
        return encode(
            tuple(p.mul_i(a, b) for p, a, b in zip(parts, decode(i), decode(j)))
        )

    def neg(i):
        return encode(tuple(p.neg_i(a) for p, a in zip(parts, decode(i))))

    def labeler(i):
        return "(" + ",".join(p.label(a) for p, a in zip(parts, decode(i))) + ")"

    return FiniteRing(
        order=order,
        zero=encode(tuple(p.zero_i for p in parts)),
        one=encode(tuple(p.one_i for p in parts)),
        spec="x".join(p.spec for p in parts),
        structure=("product", parts),
        add=add,
        mul=mul,
        neg=neg,
        decode=decode,
        labeler=labeler,
    )


def make_upper_triangular(base: FiniteRing, n: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """n-by-n upper-triangular matrices over `base`, n in {2, 3}.

    Entries are stored row-major over the upper triangle, first entry most
    significant in the index encoding.
    """
    if n not in TRI_POSITIONS:
        raise BadParameter(f"triangular size must be 2 or 3, got {n}")
    positions = TRI_POSITIONS[n]
    k = len(positions)
    order = base.order ** k
    if order > cap:
        raise OrderCapExceeded(f"order {order} exceeds cap {cap}")
    pos_index = {pos: t for t, pos in enumerate(positions)}
    b = base.order

    def decode(i: int) -> tuple:
        out = []
        for t in range(k - 1, -1, -1):
            out.append(i % b)
            i //= b
        out.reverse()
        return tuple(out)

    def encode(entries) -> int:
        i = 0
        for e in entries:
            i = i * b + e
        return i

    def add(i, j):
        x, y = decode(i), decode(j)
        return encode(tuple(base.add_i(a, c) for a, c in zip(x, y)))

    def neg(i):
        return encode(tuple(base.neg_i(a) for a in decode(i)))

    def mul(i, j):
        x, y = decode(i), decode(j)
        out = []
        for (r, c) in positions:
            acc = base.zero_i
            for t in range(r, c + 1):
                acc = base.add_i(acc, base.mul_i(x[pos_index[(r, t)]], y[pos_index[(t, c)]]))
            out.append(acc)
        return encode(out)

    one_entries = [base.one_i if r == c else base.zero_i for (r, c) in positions]

    def labeler(i):
        entries = decode(i)
        rows = []
        for r in range(n):
            cells = []
            for c in range(n):
                if c < r:
                    cells.append(base.label(base.zero_i))
                else:
                    cells.append(base.label(entries[pos_index[(r, c)]]))
            rows.append(" ".join(cells))
        return "[" + "; ".join(rows) + "]"

    return FiniteRing(
        order=order,
        zero=0,
        one=encode(one_entries),
        spec=f"T{n}({base.spec})",
        structure=("tri", n, base),
        add=add,
        mul=mul,
        neg=neg,
        decode=decode,
        labeler=labeler,
    )


def make_idealization(n: int, m: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Ring on Z_n x Z_m with (r,v)(r',v') = (rr', rv' + r'v); needs m | n.

    Index encoding: (r, v) -> r*m + v.
    """
    if n < 2:
        raise BadParameter(f"base modulus must be at least 2, got {n}")
    if m < 1 or n % m != 0:
        raise BadParameter(f"module modulus must divide {n}, got {m}")
    order = n * m
    if order > cap:
        raise OrderCapExceeded(f"order {order} exceeds cap {cap}")

    def decode(i: int) -> tuple:
        return (i // m, i % m)

    def add(i, j):
        r, v = decode(i)
        s, w = decode(j)
        return ((r + s) % n) * m + (v + w) % m

    def mul(i, j):
        r, v = decode(i)
        s, w = decode(j)
        return ((r * s) % n) * m + (r * w + s * v) % m

    def neg(i):
        r, v = decode(i)
        return ((-r) % n) * m + (-v) % m

    return FiniteRing(
        order=order,
        zero=0,
        one=1 * m + 0,
        spec=f"Id({n},{m})",
        structure=("idealization", n, m),
        add=add,
        mul=mul,
        neg=neg,
        decode=decode,
        labeler=lambda i: f"({i // m},{i % m})",
    )


def make_morita_zero(a: int, b: int, g: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Formal 2x2 matrices [r n; m s] over (Z_a, Z_b) with both strips Z_g.

    Both cross pairings are identically zero, so the diagonal of a product
    never sees the strips.  Requires g | gcd(a, b) so that both diagonal
    rings act on the strips by multiplication mod g.  Index encoding:
    (r, s, m, n) -> ((r*b + s)*g + m)*g + n.
    """
    if a < 2 or b < 2:
        raise BadParameter("diagonal moduli must be at least 2")
    if g < 1 or gcd(a, b) % g != 0:
        raise BadParameter(f"strip modulus {g} must divide gcd({a},{b})")
    order = a * b * g * g
    if order > cap:
        raise OrderCapExceeded(f"order {order} exceeds cap {cap}")

    def decode(i: int) -> tuple:
        i, nn = divmod(i, g)
        i, mm = divmod(i, g)
        r, s = divmod(i, b)
        return (r, s, mm, nn)

    def encode(r, s, mm, nn) -> int:
        return ((r * b + s) * g + mm) * g + nn

    def add(i, j):
        r1, s1, m1, n1 = decode(i)
        r2, s2, m2, n2 = decode(j)
        return encode((r1 + r2) % a, (s1 + s2) % b, (m1 + m2) % g, (n1 + n2) % g)

    def mul(i, j):
        r1, s1, m1, n1 = decode(i)
        r2, s2, m2, n2 = decode(j)
        return encode(
            (r1 * r2) % a,
            (s1 * s2) % b,
            (m1 * r2 + s1 * m2) % g,
            (r1 * n2 + n1 * s2) % g,
        )

    def neg(i):
        r, s, mm, nn = decode(i)
        return encode((-r) % a, (-s) % b, (-mm) % g, (-nn) % g)

    def labeler(i):
        r, s, mm, nn = decode(i)
        return f"[{r} {nn}; {mm} {s}]"

    return FiniteRing(
        order=order,
        zero=0,
        one=encode(1, 1, 0, 0),
        spec=f"MZ({a},{b},{g})",
        structure=("morita_zero", a, b, g),
        add=add,
        mul=mul,
        neg=neg,
        decode=decode,
        labeler=labeler,
    )


@dataclass(frozen=True)
class QuotientMap:
    """Canonical surjection onto a quotient ring, with a representative section."""

    domain: FiniteRing
    codomain: FiniteRing
    index_map: tuple
    reps: tuple

    def __call__(self, x) -> Elem:
        return self.codomain.elem(self.index_map[self.domain.index_of(x)])

    def section(self, y) -> Elem:
        return self.domain.elem(self.reps[self.codomain.index_of(y)])

    def image_index(self, i: int) -> int:
        return self.index_map[i]


def make_quotient(ring: FiniteRing, ideal) -> tuple:
    """Quotient ring with smallest-index coset representatives, plus the map.

    Memoized on the parent ring keyed by the ideal's membership mask, so
    repeated quotients by the same ideal share one object.
    """
    from .ideals import Ideal, verify_ideal

    if ideal.ring is not ring:
        raise BadParameter("ideal belongs to a different ring")
    verify_ideal(ring, ideal.mask)
    if ideal.mask == (1 << ring.order) - 1:
        raise BadParameter("quotient by the whole ring would be the zero ring")

    def build():
        n = ring.order
        members = ideal.indices
        rep_of = [-1] * n
        reps = []
        for x in range(n):
            if rep_of[x] >= 0:
                continue
            reps.append(x)
            for i in members:
                rep_of[ring.add_i(x, i)] = x
        q_index = {rep: qi for qi, rep in enumerate(reps)}
        index_map = tuple(q_index[rep_of[x]] for x in range(n))

        def qadd(i, j):
            return index_map[ring.add_i(reps[i], reps[j])]

        def qmul(i, j):
            return index_map[ring.mul_i(reps[i], reps[j])]

        def qneg(i):
            return index_map[ring.neg_i(reps[i])]

        gens = ideal.generators if ideal.generators is not None else ideal.indices
        spec = f"Q({ring.spec};[{','.join(str(g) for g in gens)}])"
        quotient = FiniteRing(
            order=len(reps),
            zero=index_map[ring.zero_i],
            one=index_map[ring.one_i],
            spec=spec,
            structure=("quotient", ring, ideal.mask),
            add=qadd,
            mul=qmul,
            neg=qneg,
            decode=lambda i: reps[i],
            labeler=lambda i: f"{ring.label(reps[i])}+I",
        )
        return quotient, QuotientMap(ring, quotient, index_map, tuple(reps))

    return ring.cached(("quotient", ideal.mask), build)


@dataclass(frozen=True)
class CornerEmbedding:
    """Embedding of a corner ring eRe back into its parent."""

    domain: FiniteRing
    codomain: FiniteRing
    parent_index: tuple

    def __call__(self, x) -> Elem:
        return self.codomain.elem(self.parent_index[self.domain.index_of(x)])

    def to_corner_index(self, i: int) -> int:
        # parent_index is ascending, so membership is a binary-search away;
        # corners are small enough that a dict would be overkill.
        lo, hi = 0, len(self.parent_index)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.parent_index[mid] < i:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(self.parent_index) or self.parent_index[lo] != i:
            raise BadParameter(f"index {i} is not inside the corner")
        return lo


def make_corner(ring: FiniteRing, e) -> tuple:
    """Corner ring eRe for a nonzero central idempotent e, with its embedding."""
    from .classify import is_central, is_idempotent

    e_i = ring.index_of(e)
    if e_i == ring.zero_i:
        raise BadParameter("corner identity must be nonzero")
    if not is_idempotent(ring, e_i) or not is_central(ring, e_i):
        raise NotCentralIdempotent(f"element {e_i} of {ring.spec}")

    def build():
        members = sorted({ring.mul_i(ring.mul_i(e_i, x), e_i) for x in range(ring.order)})
        sub = {x: t for t, x in enumerate(members)}

        def cadd(i, j):
            return sub[ring.add_i(members[i], members[j])]

        def cmul(i, j):
            return sub[ring.mul_i(members[i], members[j])]

        def cneg(i):
            return sub[ring.neg_i(members[i])]

        corner = FiniteRing(
            order=len(members),
            zero=sub[ring.zero_i],
            one=sub[e_i],
            spec=f"C({ring.spec};{e_i})",
            structure=("corner", ring, e_i),
            add=cadd,
            mul=cmul,
            neg=cneg,
            decode=lambda i: members[i],
            labeler=lambda i: ring.label(members[i]),
        )
        return corner, CornerEmbedding(corner, ring, tuple(members))

    return ring.cached(("corner", e_i), build)


def make_table_ring(add, mul, zero: int, one: int, name: str = "") -> FiniteRing:
    """Ring defined directly by Cayley tables (the JSON import path).

    Only shape and index-range validity are enforced here; run
    :func:`nilclean.ring.verify_axioms` to check the algebra.
    """
    order = len(add)
    if order < 2:
        raise BadParameter("table order must be at least 2")
    for label, table in (("add", add), ("mul", mul)):
        if len(table) != order or any(len(row) != order for row in table):
            raise BadParameter(f"{label} table is not {order}x{order}")
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < order:
                    raise BadParameter(f"{label} table entry {v!r} out of range")
    if not 0 <= zero < order or not 0 <= one < order:
        raise BadParameter("zero/one index out of range")
    return FiniteRing(
        order=order,
        zero=zero,
        one=one,
        spec=name or f"table{order}",
        structure=("table",),
        add=add,
        mul=mul,
    )


def spec_order(spec: RingSpec) -> int:
    """Order the spec would have, before any quotient/corner shrinking.

    Quotients and corners return their base order (an upper bound)."""
    if isinstance(spec, Zmod):
        return spec.n
    if isinstance(spec, Product):
        out = 1
        for p in spec.parts:
            out *= spec_order(p)
        return out
    if isinstance(spec, Tri):
        k = len(TRI_POSITIONS.get(spec.n, ()))
        if k == 0:
            raise BadParameter(f"triangular size must be 2 or 3, got {spec.n}")
        return spec_order(spec.base) ** k
    if isinstance(spec, Idealization):
        return spec.n * spec.m
    if isinstance(spec, MoritaZero):
        return spec.a * spec.b * spec.g * spec.g
    if isinstance(spec, (Quotient, Corner)):
        return spec_order(spec.base)
    raise BadParameter(f"unknown spec node {spec!r}")


def build(spec, caps: Caps = Caps()) -> FiniteRing:
    """Materialize a RingSpec (or spec text) into a ring, enforcing caps."""
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    if isinstance(spec, FiniteRing):
        return spec
    if spec_order(spec) > caps.order_cap:
        raise OrderCapExceeded(
            f"spec {spec} has order {spec_order(spec)} above cap {caps.order_cap}"
        )
    if isinstance(spec, Zmod):
        return make_zmod(spec.n, cap=caps.order_cap)
    if isinstance(spec, Product):
        return make_product([build(p, caps) for p in spec.parts], cap=caps.order_cap)
    if isinstance(spec, Tri):
        return make_upper_triangular(build(spec.base, caps), spec.n, cap=caps.order_cap)
    if isinstance(spec, Idealization):
        return make_idealization(spec.n, spec.m, cap=caps.order_cap)
    if isinstance(spec, MoritaZero):
        return make_morita_zero(spec.a, spec.b, spec.g, cap=caps.order_cap)
    if isinstance(spec, Quotient):
        from .ideals import ideal_generated

        base = build(spec.base, caps)
        ideal = ideal_generated(base, spec.gens)
        return make_quotient(base, ideal)[0]
    if isinstance(spec, Corner):
        base = build(spec.base, caps)
        return make_corner(base, spec.e)[0]
    raise BadParameter(f"cannot build {spec!r}")
