"""The five informational monads on finite sets, with law checkers.

Each monad is represented by explicit finite elements:

* lift        -- an adjoined "missing information" point alongside plain values
* pplus       -- non-empty finite sets of alternatives
* pomega      -- finite sets of alternatives (possibly empty)
* dist        -- finitely-supported rational weights summing to exactly 1
* subdist     -- finitely-supported rational weights summing to at most 1

Weight maps never store zero entries and keep their support sorted by a
canonical key, so structural equality of elements coincides with semantic
equality.  All values are immutable and hashable; elements nest freely, which
is how T(T X) and deeper layers are formed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import DomainError, EmptinessError, StructureError, WeightError
from .reports import Report


class MonadTag(Enum):
    LIFT = "lift"
    PPLUS = "pplus"
    POMEGA = "pomega"
    DIST = "dist"
    SUBDIST = "subdist"

    @classmethod
    def from_name(cls, name: str) -> "MonadTag":
        for tag in cls:
            if tag.value == name:
                return tag
        raise ValueError(f"unknown model tag {name!r}")


SET_TAGS = (MonadTag.PPLUS, MonadTag.POMEGA)
WEIGHT_TAGS = (MonadTag.DIST, MonadTag.SUBDIST)


class _Bottom:
    """Singleton marker for the lift monad's adjoined point."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOTTOM"


BOTTOM = _Bottom()


def canon_key(x) -> str:
    """A deterministic, injective-on-our-values sort key.

    Type prefixes keep e.g. the string "(a,b)" and the tuple ("a", "b")
    from colliding.
    """
    if x is BOTTOM:
        return "!bot"
    if isinstance(x, MonadElement):
        return "e:" + serialize_element(x)
    key = getattr(x, "key", None)
    if key is not None:
        return "m:" + key
    if isinstance(x, tuple):
        return "(" + ",".join(canon_key(c) for c in x) + ")"
    if isinstance(x, str):
        return "s:" + x
    if isinstance(x, bool):
        return "b:" + str(x)
    if isinstance(x, int):
        return "i:" + str(x)
    if isinstance(x, Fraction):
        return "q:" + str(x)
    return "r:" + repr(x)


def show_value(x) -> str:
    if x is BOTTOM:
        return "bot"
    if isinstance(x, MonadElement):
        return serialize_element(x)
    key = getattr(x, "key", None)
    if key is not None:
        return key
    if isinstance(x, tuple):
        return "(" + ",".join(show_value(c) for c in x) + ")"
    return str(x)


@dataclass(frozen=True)
class MonadElement:
    """An explicit element of T X for one of the five monads."""

    tag: MonadTag
    value: object

    def __post_init__(self):
        tag, value = self.tag, self.value
        if tag in SET_TAGS:
            if not isinstance(value, frozenset):
                raise StructureError(f"{tag.value} element needs a frozenset")
            if tag is MonadTag.PPLUS and not value:
                raise EmptinessError("pplus element must be non-empty")
        elif tag in WEIGHT_TAGS:
            if not isinstance(value, tuple):
                raise StructureError(f"{tag.value} element needs weight pairs")
            total = Fraction(0)
            for pair in value:
                _, w = pair
                if not isinstance(w, Fraction) or w <= 0 or w > 1:
                    raise WeightError(f"weight {w} outside (0,1]")
                total += w
            if tag is MonadTag.DIST and total != 1:
                raise WeightError(f"dist weights total {total}, expected 1")
            if tag is MonadTag.SUBDIST and total > 1:
                raise WeightError(f"subdist weights total {total} > 1")

    def support(self) -> tuple:
        """The underlying elements with the tag's wrapping stripped."""
        if self.tag is MonadTag.LIFT:
            return () if self.value is BOTTOM else (self.value,)
        if self.tag in SET_TAGS:
            return tuple(sorted(self.value, key=canon_key))
        return tuple(x for x, _ in self.value)

    def weight_of(self, x) -> Fraction:
        if self.tag not in WEIGHT_TAGS:
            raise StructureError("weights only exist for dist/subdist elements")
        for y, w in self.value:
            if y == x:
                return w
        return Fraction(0)

    @property
    def total_weight(self) -> Fraction:
        if self.tag not in WEIGHT_TAGS:
            raise StructureError("weights only exist for dist/subdist elements")
        return sum((w for _, w in self.value), Fraction(0))

    def __repr__(self):
        return f"<{self.tag.value}:{serialize_element(self)}>"


def serialize_element(m: MonadElement) -> str:
    if m.tag is MonadTag.LIFT:
        return "bot" if m.value is BOTTOM else show_value(m.value)
    if m.tag in SET_TAGS:
        inner = ", ".join(show_value(x) for x in sorted(m.value, key=canon_key))
        return "{" + inner + "}"
    if not m.value:
        return "0"
    return " + ".join(f"{w}|{show_value(x)}>" for x, w in m.value)


def lift_value(x) -> MonadElement:
    return MonadElement(MonadTag.LIFT, x)


def lift_bottom() -> MonadElement:
    return MonadElement(MonadTag.LIFT, BOTTOM)


def set_element(tag: MonadTag, items: Iterable) -> MonadElement:
    if tag not in SET_TAGS:
        raise StructureError(f"{tag.value} is not a powerset monad")
    return MonadElement(tag, frozenset(items))


def weighted(tag: MonadTag, pairs: Iterable[tuple]) -> MonadElement:
    """Collect terms: merge equal elements, drop zero weights, sort support."""
    if tag not in WEIGHT_TAGS:
        raise StructureError(f"{tag.value} does not carry weights")
    merged: dict[str, list] = {}
    for x, w in pairs:
        w = Fraction(w)
        if w == 0:
            continue
        if w < 0:
            raise WeightError(f"negative weight {w}")
        slot = merged.setdefault(canon_key(x), [x, Fraction(0)])
        slot[1] += w
    support = tuple(
        (merged[k][0], merged[k][1]) for k in sorted(merged)
    )
    return MonadElement(tag, support)


def point_mass(tag: MonadTag, x) -> MonadElement:
    return weighted(tag, [(x, Fraction(1))])


def empty_sum() -> MonadElement:
    return MonadElement(MonadTag.SUBDIST, ())


def _apply(f, x):
    if callable(f):
        try:
            return f(x)
        except KeyError as exc:
            raise DomainError(f"function undefined at {show_value(x)}") from exc
    try:
        return f[x]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"function undefined at {show_value(x)}") from exc


def t_unit(tag: MonadTag, x) -> MonadElement:
    """eta: the value itself / a singleton / a point mass."""
    if tag is MonadTag.LIFT:
        return lift_value(x)
    if tag in SET_TAGS:
        return set_element(tag, [x])
    return point_mass(tag, x)


def t_map(tag: MonadTag, f, t: MonadElement) -> MonadElement:
    """Functor action; weights of merged preimages are summed."""
    _expect(tag, t)
    if tag is MonadTag.LIFT:
        if t.value is BOTTOM:
            return t
        return lift_value(_apply(f, t.value))
    if tag in SET_TAGS:
        if not t.value:
            return t
        return set_element(tag, (_apply(f, x) for x in t.value))
    return weighted(tag, ((_apply(f, x), w) for x, w in t.value))


def t_mult(tag: MonadTag, tt: MonadElement) -> MonadElement:
    """mu: collapse one layer of nesting (union / weighted flattening)."""
    _expect(tag, tt)
    if tag is MonadTag.LIFT:
        if tt.value is BOTTOM:
            return tt
        return _inner(tag, tt.value)
    if tag in SET_TAGS:
        members = [_inner(tag, x) for x in tt.value]
        return set_element(tag, itertools.chain.from_iterable(m.value for m in members))
    flat = []
    for inner, outer_w in tt.value:
        inner = _inner(tag, inner)
        flat.extend((x, outer_w * w) for x, w in inner.value)
    return weighted(tag, flat)


def _expect(tag: MonadTag, t: MonadElement) -> None:
    if not isinstance(t, MonadElement):
        raise StructureError(f"expected a monad element, got {t!r}")
    if t.tag is not tag:
        raise StructureError(f"expected a {tag.value} element, got {t.tag.value}")


def _inner(tag: MonadTag, x) -> MonadElement:
    if not isinstance(x, MonadElement) or x.tag is not tag:
        raise StructureError(f"malformed nesting: inner value {x!r} is not {tag.value}")
    return x


def t_strength(tag: MonadTag, x, t: MonadElement) -> MonadElement:
    """st: X x T Y -> T(X x Y), pairing x with every element of t."""
    return t_map(tag, lambda y: (x, y), t)


def t_costrength(tag: MonadTag, t: MonadElement, y) -> MonadElement:
    """cst: T X x Y -> T(X x Y), pairing every element of t with y."""
    return t_map(tag, lambda x: (x, y), t)


def t_double_strength(tag: MonadTag, t: MonadElement, u: MonadElement) -> MonadElement:
    """dst = mu . T(cst) . st, one of the two composites that must agree
    for a commutative monad."""
    paired = t_strength(tag, t, u)
    expanded = t_map(tag, lambda p: t_costrength(tag, p[0], p[1]), paired)
    return t_mult(tag, expanded)


def t_double_strength_flipped(tag: MonadTag, t: MonadElement, u: MonadElement) -> MonadElement:
    """mu . T(st) . cst, the other commutativity composite."""
    paired = t_costrength(tag, t, u)
    expanded = t_map(tag, lambda p: t_strength(tag, p[0], p[1]), paired)
    return t_mult(tag, expanded)


# ---------------------------------------------------------------------------
# enumeration and sampling

def enumerable(tag: MonadTag) -> bool:
    return tag not in WEIGHT_TAGS


def t_size(tag: MonadTag, n: int) -> int | None:
    """|T X| for |X| = n, or None when the carrier is infinite."""
    if tag is MonadTag.LIFT:
        return n + 1
    if tag is MonadTag.PPLUS:
        return 2**n - 1
    if tag is MonadTag.POMEGA:
        return 2**n
    return None


def enumerate_t(tag: MonadTag, carrier) -> Iterator[MonadElement]:
    """All of T X for the enumerable monads; DomainError for dist/subdist."""
    items = list(carrier)
    if tag is MonadTag.LIFT:
        yield lift_bottom()
        for x in items:
            yield lift_value(x)
    elif tag in SET_TAGS:
        start = 1 if tag is MonadTag.PPLUS else 0
        for r in range(start, len(items) + 1):
            for combo in itertools.combinations(items, r):
                yield set_element(tag, combo)
    else:
        raise DomainError(f"{tag.value} elements cannot be enumerated")


def random_element(tag: MonadTag, carrier, rng) -> MonadElement:
    """A seeded random element of T X with small rational weights."""
    items = list(carrier)
    if tag is MonadTag.LIFT:
        if not items or rng.random() < 0.25:
            return lift_bottom()
        return lift_value(rng.choice(items))
    if tag in SET_TAGS:
        low = 1 if tag is MonadTag.PPLUS else 0
        size = rng.randint(low, min(3, len(items))) if items else low
        if size == 0:
            return set_element(tag, [])
        return set_element(tag, rng.sample(items, size))
    if tag is MonadTag.SUBDIST and (not items or rng.random() < 0.125):
        return empty_sum()
    size = rng.randint(1, min(3, len(items)))
    support = rng.sample(items, size)
    weights = [rng.randint(1, 6) for _ in support]
    slack = rng.randint(1, 4) if tag is MonadTag.SUBDIST and rng.random() < 0.5 else 0
    den = sum(weights) + slack
    return weighted(tag, [(x, Fraction(w, den)) for x, w in zip(support, weights)])


def random_nested(tag: MonadTag, carrier, rng, depth: int) -> MonadElement:
    """A seeded random element of T^depth X."""
    if depth <= 1:
        return random_element(tag, carrier, rng)
    inner = [random_nested(tag, carrier, rng, depth - 1) for _ in range(3)]
    # distinct inner elements so powerset sizes vary
    distinct = list({canon_key(e): e for e in inner}.values())
    return random_element(tag, distinct, rng)


def corner_elements(tag: MonadTag, carrier) -> list[MonadElement]:
    """Hand-picked corner cases used alongside random sampling."""
    items = list(carrier)
    out = [t_unit(tag, x) for x in items]
    if tag is MonadTag.LIFT:
        out.append(lift_bottom())
    elif tag is MonadTag.POMEGA:
        out.append(set_element(tag, []))
    elif tag is MonadTag.SUBDIST:
        out.append(empty_sum())
        if items:
            out.append(weighted(tag, [(items[0], Fraction(1, 2))]))
    if tag in WEIGHT_TAGS and len(items) >= 2:
        out.append(weighted(tag, [(items[0], Fraction(1, 2)), (items[1], Fraction(1, 2))]))
    return out


def _level_elements(tag, carrier, depth, rng, samples, cap):
    """Exhaustive T^depth X when its size is at most cap, else seeded samples."""
    if enumerable(tag):
        n = len(list(carrier))
        size = n
        for _ in range(depth):
            size = t_size(tag, size)
        if size <= cap:
            level = list(carrier)
            for _ in range(depth):
                level = list(enumerate_t(tag, level))
            return level, True
    out = corner_elements(tag, carrier) if depth == 1 else []
    out.extend(random_nested(tag, carrier, rng, depth) for _ in range(samples))
    return out, False


# ---------------------------------------------------------------------------
# law checking

def check_monad_laws(
    tag: MonadTag,
    carrier,
    seed: int = 0,
    samples: int = 100,
    cap: int = 70000,
    _mult: Callable | None = None,
) -> Report:
    """Verify the three monad axioms pointwise.

    Enumerable monads are checked exhaustively as long as the relevant
    iterated carrier stays under ``cap`` elements; otherwise (and always for
    dist/subdist) a deterministic sample is used.  ``_mult`` substitutes a
    (possibly corrupted) multiplication, for negative controls.
    """
    import random as _random

    rng = _random.Random(seed)
    mult = _mult if _mult is not None else t_mult
    report = Report(f"monad laws: {tag.value}")

    level1, _ = _level_elements(tag, carrier, 1, rng, samples, cap)
    bad = None
    for t in level1:
        if mult(tag, t_unit(tag, t)) != t:
            bad = f"mu(eta({serialize_element(t)})) != itself"
            break
    report.add(f"{tag.value}/left-unit", len(level1), bad is None, bad)

    bad = None
    for t in level1:
        if mult(tag, t_map(tag, lambda x: t_unit(tag, x), t)) != t:
            bad = f"mu(T eta)({serialize_element(t)}) != itself"
            break
    report.add(f"{tag.value}/right-unit", len(level1), bad is None, bad)

    level3, _ = _level_elements(tag, carrier, 3, rng, samples, cap)
    bad = None
    for ttt in level3:
        lhs = mult(tag, mult(tag, ttt))
        rhs = mult(tag, t_map(tag, lambda tt: mult(tag, tt), ttt))
        if lhs != rhs:
            bad = (
                f"mu.mu != mu.Tmu at {serialize_element(ttt)}: "
                f"{serialize_element(lhs)} vs {serialize_element(rhs)}"
            )
            break
    report.add(f"{tag.value}/associativity", len(level3), bad is None, bad)
    return report


def check_commutativity(
    tag: MonadTag,
    carrier_x,
    carrier_y,
    seed: int = 0,
    samples: int = 60,
    cap: int = 400,
) -> tuple[bool, str | None, int]:
    """Compare the two double-strength composites on (sampled) pairs.

    Returns (verdict, witness, instance count); the witness describes the
    first disagreeing pair, if any.
    """
    import random as _random

    rng = _random.Random(seed)
    xs, _ = _level_elements(tag, carrier_x, 1, rng, samples, cap)
    ys, _ = _level_elements(tag, carrier_y, 1, rng, samples, cap)
    pairs = list(itertools.product(xs, ys))
    if len(pairs) > cap * cap:
        pairs = pairs[: cap * cap]
    for t, u in pairs:
        one = t_double_strength(tag, t, u)
        other = t_double_strength_flipped(tag, t, u)
        if one != other:
            witness = (
                f"t={serialize_element(t)} u={serialize_element(u)}: "
                f"{serialize_element(one)} vs {serialize_element(other)}"
            )
            return False, witness, len(pairs)
    return True, None, len(pairs)


def list_monad_commutativity_witness() -> str:
    """The sequence-monad negative control.

    The list monad (unit = one-element list, multiplication = concatenation)
    is implemented inline on plain tuples, only far enough to evaluate both
    commutativity composites and exhibit a concrete disagreeing pair.
    """
    def lmap(f, t):
        return tuple(f(x) for x in t)

    def lmult(tt):
        return tuple(itertools.chain.from_iterable(tt))

    def lst(x, t):
        return lmap(lambda y: (x, y), t)

    def lcst(t, y):
        return lmap(lambda x: (x, y), t)

    for t in [("a", "b")]:
        for u in [("c", "d")]:
            one = lmult(lmap(lambda p: lcst(p[0], p[1]), lst(t, u)))
            other = lmult(lmap(lambda p: lst(p[0], p[1]), lcst(t, u)))
            if one != other:
                return f"t={t} u={u}: {one} vs {other}"
    raise AssertionError("list monad unexpectedly commuted on the probe pair")


# ---------------------------------------------------------------------------
# Eilenberg-Moore algebras

@dataclass(frozen=True)
class EMAlgebraSpec:
    """A carrier with a structure map T(carrier) -> carrier."""

    carrier: tuple
    structure: Callable[[MonadElement], object]


def check_em_algebra(
    spec: EMAlgebraSpec,
    tag: MonadTag,
    seed: int = 0,
    samples: int = 40,
    cap: int = 5000,
) -> bool:
    """Verify a.eta = id and a.mu = a.Ta pointwise on the (sampled) carrier."""
    import random as _random

    rng = _random.Random(seed)

    def structure(t):
        try:
            value = spec.structure(t)
        except (KeyError, LookupError) as exc:
            raise DomainError(f"structure map undefined at {serialize_element(t)}") from exc
        if value is None:
            raise DomainError(f"structure map undefined at {serialize_element(t)}")
        return value

    for x in spec.carrier:
        if structure(t_unit(tag, x)) != x:
            return False
    level2, _ = _level_elements(tag, spec.carrier, 2, rng, samples, cap)
    for tt in level2:
        via_mult = structure(t_mult(tag, tt))
        via_map = structure(t_map(tag, structure, tt))
        if via_mult != via_map:
            return False
    return True


def em_join_semilattice(carrier, join, bottom=None) -> EMAlgebraSpec:
    """The powerset algebra induced by a (possibly bounded) join semilattice."""
    def structure(t: MonadElement):
        items = t.support()
        if not items:
            if bottom is None:
                raise DomainError("empty join needs a bottom element")
            return bottom
        out = items[0]
        for x in items[1:]:
            out = join(out, x)
        return out

    return EMAlgebraSpec(tuple(carrier), structure)


def em_convex_barycenter(carrier) -> EMAlgebraSpec:
    """Rational numbers with the barycenter map as a convex algebra."""
    def structure(t: MonadElement):
        return sum((w * x for x, w in t.value), Fraction(0))

    return EMAlgebraSpec(tuple(carrier), structure)


# ---------------------------------------------------------------------------
# affine and relevant monads

def terminal_analysis(tag: MonadTag) -> tuple[bool, str]:
    """Whether eta at the one-element carrier is an isomorphism.

    For the enumerable monads T(1) is inspected directly.  For dist, the
    canonical form (positive weights, total exactly 1) forces T(1) to be a
    single point mass; for subdist the empty formal sum is a second element.
    """
    star = "*"
    if enumerable(tag):
        elems = list(enumerate_t(tag, [star]))
        others = [e for e in elems if e != t_unit(tag, star)]
        if others:
            return False, (
                f"|T(1)| = {len(elems)}; extra element {serialize_element(others[0])}"
            )
        return True, "|T(1)| = 1"
    if tag is MonadTag.DIST:
        return True, "only the point mass 1|*> has positive weights summing to 1"
    return False, f"extra element {serialize_element(empty_sum())}"


def is_affine(tag: MonadTag) -> bool:
    return terminal_analysis(tag)[0]


def check_relevant(tag: MonadTag, carrier, seed: int = 0, samples: int = 60) -> bool:
    """Whether dst(t, t) agrees with T(diagonal) on every (sampled) element."""
    import random as _random

    rng = _random.Random(seed)
    level1, _ = _level_elements(tag, carrier, 1, rng, samples, cap=5000)
    for t in level1:
        if t_double_strength(tag, t, t) != t_map(tag, lambda x: (x, x), t):
            return False
    return True


# ---------------------------------------------------------------------------
# composite-monad isomorphisms

def pomega_to_lifted(m: MonadElement) -> MonadElement:
    """Pomega X -> (P+ X)_bot, sending the empty set to bottom."""
    _expect(MonadTag.POMEGA, m)
    if not m.value:
        return lift_bottom()
    return lift_value(set_element(MonadTag.PPLUS, m.value))


def lifted_to_pomega(m: MonadElement) -> MonadElement:
    _expect(MonadTag.LIFT, m)
    if m.value is BOTTOM:
        return set_element(MonadTag.POMEGA, [])
    inner = _inner(MonadTag.PPLUS, m.value)
    return set_element(MonadTag.POMEGA, inner.value)


def subdist_to_dist(m: MonadElement) -> MonadElement:
    """S X -> D(X_bot): the missing mass becomes the weight of BOTTOM."""
    _expect(MonadTag.SUBDIST, m)
    missing = 1 - m.total_weight
    pairs = list(m.value)
    if missing > 0:
        pairs.append((BOTTOM, missing))
    return weighted(MonadTag.DIST, pairs)


def dist_to_subdist(m: MonadElement) -> MonadElement:
    _expect(MonadTag.DIST, m)
    return weighted(MonadTag.SUBDIST, [(x, w) for x, w in m.value if x is not BOTTOM])


def _flatten_lifted_pplus(e: MonadElement) -> MonadElement:
    """Multiplication of the composite (P+ (-))_bot, forced by the empty-set
    <-> bottom correspondence: bottoms contribute nothing, and a layer with
    no surviving alternatives collapses to bottom."""
    _expect(MonadTag.LIFT, e)
    if e.value is BOTTOM:
        return lift_bottom()
    outer = _inner(MonadTag.PPLUS, e.value)
    collected = set()
    for member in outer.value:
        member = _inner(MonadTag.LIFT, member)
        if member.value is BOTTOM:
            continue
        collected.update(_inner(MonadTag.PPLUS, member.value).value)
    if not collected:
        return lift_bottom()
    return lift_value(set_element(MonadTag.PPLUS, collected))


def _flatten_dist_lift(e: MonadElement) -> MonadElement:
    """Multiplication of the composite D((-)_bot), forced by the mass
    bookkeeping: an inner bottom behaves as the point mass at bottom."""
    _expect(MonadTag.DIST, e)

    def as_dist(x):
        if x is BOTTOM:
            return point_mass(MonadTag.DIST, BOTTOM)
        return _inner(MonadTag.DIST, x)

    return t_mult(MonadTag.DIST, t_map(MonadTag.DIST, as_dist, e))


def check_iso_pomega(carrier, cap: int = 70000) -> Report:
    """Round trips plus unit/multiplication agreement for Pomega <-> lifted P+."""
    report = Report("iso: pomega ~ lifted pplus")
    elems = list(enumerate_t(MonadTag.POMEGA, carrier))

    bad = None
    for m in elems:
        if lifted_to_pomega(pomega_to_lifted(m)) != m:
            bad = serialize_element(m)
            break
    report.add("iso-pomega/round-trip", len(elems), bad is None, bad)

    bad = None
    for x in carrier:
        lhs = pomega_to_lifted(t_unit(MonadTag.POMEGA, x))
        rhs = lift_value(t_unit(MonadTag.PPLUS, x))
        if lhs != rhs:
            bad = show_value(x)
            break
    report.add("iso-pomega/unit", len(list(carrier)), bad is None, bad)

    nested = list(enumerate_t(MonadTag.POMEGA, elems)) if t_size(
        MonadTag.POMEGA, len(elems)
    ) <= cap else []
    bad = None
    for tt in nested:
        native = pomega_to_lifted(t_mult(MonadTag.POMEGA, tt))
        transported = _flatten_lifted_pplus(
            t_map(MonadTag.LIFT, lambda s: t_map(MonadTag.PPLUS, pomega_to_lifted, s),
                  pomega_to_lifted(tt))
        )
        if native != transported:
            bad = serialize_element(tt)
            break
    report.add("iso-pomega/multiplication", len(nested), bad is None, bad)
    return report


def check_iso_subdist(carrier, seed: int = 0, samples: int = 100) -> Report:
    """Round trips plus unit/multiplication agreement for S <-> D((-)_bot)."""
    import random as _random

    rng = _random.Random(seed)
    report = Report("iso: subdist ~ dist over lifted carrier")

    elems = corner_elements(MonadTag.SUBDIST, carrier)
    elems += [random_element(MonadTag.SUBDIST, carrier, rng) for _ in range(samples)]
    bad = None
    for m in elems:
        image = subdist_to_dist(m)
        if image.total_weight != 1:
            bad = f"{serialize_element(m)} maps to non-normalized {serialize_element(image)}"
            break
        if dist_to_subdist(image) != m:
            bad = serialize_element(m)
            break
    report.add("iso-subdist/round-trip", len(elems), bad is None, bad)

    bad = None
    for x in carrier:
        if subdist_to_dist(t_unit(MonadTag.SUBDIST, x)) != point_mass(MonadTag.DIST, x):
            bad = show_value(x)
            break
    report.add("iso-subdist/unit", len(list(carrier)), bad is None, bad)

    nested = [random_nested(MonadTag.SUBDIST, carrier, rng, 2) for _ in range(samples)]
    bad = None
    for ss in nested:
        native = subdist_to_dist(t_mult(MonadTag.SUBDIST, ss))
        transported = _flatten_dist_lift(
            t_map(
                MonadTag.DIST,
                lambda s: subdist_to_dist(s) if isinstance(s, MonadElement) else s,
                subdist_to_dist(ss),
            )
        )
        if native != transported:
            bad = (
                f"{serialize_element(ss)}: {serialize_element(native)} "
                f"vs {serialize_element(transported)}"
            )
            break
    report.add("iso-subdist/multiplication", len(nested), bad is None, bad)
    return report
