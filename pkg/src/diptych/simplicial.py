"""Maps between finite cardinals, the simplicial generators and their relations.

A cardinal ``n`` stands for the set ``{0, ..., n-1}``.  In the simplicial
notation the object with ``n + 1`` vertices is written ``.n``; that shift is
only a matter of display here, every function takes plain cardinals.

Generators follow Mac Lane's indexing on cardinals::

    delta(n, j): n -> n+1   (0 <= j <= n)    monotone injection skipping j
    sigma(n, j): n+1 -> n   (0 <= j <= n-1)  monotone surjection repeating j
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from . import finmap
from .errors import (IndexOutOfRange, InputError, InvalidRelation, NotInjective,
                     NotMonotone, NotSurjective)


@dataclass(frozen=True)
class CardinalArrow:
    source: int
    target: int
    table: tuple

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if self.source < 0 or self.target < 0 or len(table) != self.source:
            raise InputError("table length must equal the source cardinal")
        if any(not 0 <= v < self.target for v in table):
            raise InputError("table value outside the target cardinal")

    def __call__(self, i: int) -> int:
        return self.table[i]

    @property
    def is_monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.table, self.table[1:]))

    def is_injective(self) -> bool:
        return len(set(self.table)) == self.source

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target

    def to_finmap(self) -> finmap.FiniteMap:
        return finmap.FiniteMap(finmap.cardinal(self.source), finmap.cardinal(self.target),
                                tuple(str(v) for v in self.table))

    def __repr__(self):
        return f"{self.source}->{self.target}{list(self.table)}"


@dataclass(frozen=True)
class Star:
    """An arrow read in the opposite category (source and target exchanged)."""

    arrow: CardinalArrow

    @property
    def source(self) -> int:
        return self.arrow.target

    @property
    def target(self) -> int:
        return self.arrow.source

    def __repr__(self):
        return f"({self.arrow!r})*"


def compose(g: CardinalArrow, f: CardinalArrow) -> CardinalArrow:
    """g after f."""
    if f.target != g.source:
        raise InputError("arrows are not composable")
    return CardinalArrow(f.source, g.target, tuple(g(v) for v in f.table))


def compose_star(g: Star, f: Star) -> Star:
    """g after f in the opposite category."""
    return Star(compose(f.arrow, g.arrow))


def identity(n: int) -> CardinalArrow:
    return CardinalArrow(n, n, tuple(range(n)))


def all_arrows(m: int, n: int) -> Iterator[CardinalArrow]:
    for t in itertools.product(range(n), repeat=m):
        yield CardinalArrow(m, n, t)


def delta(n: int, j: int) -> CardinalArrow:
    if not 0 <= j <= n:
        raise IndexOutOfRange(f"delta({n},{j}) needs 0 <= j <= {n}")
    return CardinalArrow(n, n + 1, tuple(i if i < j else i + 1 for i in range(n)))


def sigma(n: int, j: int) -> CardinalArrow:
    if not 0 <= j <= n - 1:
        raise IndexOutOfRange(f"sigma({n},{j}) needs 0 <= j <= {n - 1}")
    return CardinalArrow(n + 1, n, tuple(i if i <= j else i - 1 for i in range(n + 1)))


def transposition(n: int, j: int) -> CardinalArrow:
    """Swap of j and j+1 in n; with the generators it spans every map of cardinals."""
    if not 0 <= j < n - 1:
        raise IndexOutOfRange(f"transposition({n},{j})")
    t = list(range(n))
    t[j], t[j + 1] = t[j + 1], t[j]
    return CardinalArrow(n, n, tuple(t))


@dataclass(frozen=True)
class GeneratorSymbol:
    kind: str
    level: int
    index: int

    def __post_init__(self):
        if self.kind not in ("delta", "sigma"):
            raise InputError(f"unknown generator kind {self.kind!r}")
        hi = self.level if self.kind == "delta" else self.level - 1
        if not 0 <= self.index <= hi:
            raise IndexOutOfRange(f"{self.kind}({self.level},{self.index})")

    def arrow(self) -> CardinalArrow:
        return (delta if self.kind == "delta" else sigma)(self.level, self.index)


def normal_form(f: CardinalArrow) -> list[GeneratorSymbol]:
    """Generators of a monotone map in application order.

    Sigmas come first with strictly decreasing indices, then deltas with
    strictly increasing indices.
    """
    if not f.is_monotone:
        raise NotMonotone(f"{f!r} is not monotone")
    n, m = f.source, f.target
    repeats = [x for x in range(n - 1) if f(x) == f(x + 1)]
    k = n - len(repeats)
    missing = sorted(set(range(m)) - set(f.table))
    word = []
    level = n - 1
    for j in reversed(repeats):
        word.append(GeneratorSymbol("sigma", level, j))
        level -= 1
    level = k
    for c in missing:
        word.append(GeneratorSymbol("delta", level, c))
        level += 1
    return word


def from_word(word: list[GeneratorSymbol], source: int) -> CardinalArrow:
    out = identity(source)
    for g in word:
        out = compose(g.arrow(), out)
    return out


# duality between monotone injections and surjections

def _check_monotone(a: CardinalArrow):
    if not a.is_monotone:
        raise NotMonotone(f"{a!r} is not monotone")


def phi(a: CardinalArrow) -> Star:
    """Image of a monotone injection n -> m: a surjection m+1 -> n+1 read backwards."""
    _check_monotone(a)
    if not a.is_injective():
        raise NotInjective(f"{a!r} is not injective")
    out = Star(identity(a.source + 1))
    for g in normal_form(a):
        out = compose_star(Star(sigma(g.level + 1, g.index)), out)
    return out


def psi(b: CardinalArrow) -> Star:
    """Image of a monotone surjection n+1 -> m+1: an injection m -> n read backwards."""
    _check_monotone(b)
    if not b.is_surjective():
        raise NotSurjective(f"{b!r} is not surjective")
    if b.source == 0:
        raise IndexOutOfRange("psi is defined on the cardinals >= 1")
    out = Star(identity(b.source - 1))
    for g in normal_form(b):
        out = compose_star(Star(delta(g.level - 1, g.index)), out)
    return out


# relation squares

@dataclass(frozen=True)
class RelationSquare:
    """Commuting square top: A'->B', left: A'->A, bottom: A->B, right: B'->B."""

    kind: str
    indices: tuple
    top: CardinalArrow
    left: CardinalArrow
    bottom: CardinalArrow
    right: CardinalArrow

    def to_square(self) -> finmap.SquareData:
        return finmap.SquareData(self.top.to_finmap(), self.left.to_finmap(),
                                 self.bottom.to_finmap(), self.right.to_finmap())

    @property
    def cardinals(self) -> tuple:
        return (self.top.source, self.left.target, self.top.target, self.bottom.target)


SQUARE_KINDS = ("delta-delta", "delta-sigma", "sigma-sigma")


def relation_square(kind: str, indices) -> RelationSquare:
    """The square of a simplicial identity.

    ``delta-delta (n, i, j)``, i < j <= n+1:
        delta(n+1, j) delta(n, i) = delta(n+1, i) delta(n, j-1)
    ``sigma-sigma (n, i, j)``, i <= j <= n-1:
        sigma(n, j) sigma(n+1, i) = sigma(n, i) sigma(n+1, j+1)
    ``delta-sigma (n, i, j)``, i < j or i > j+1:
        sigma(n, j) delta(n, i) = delta(n-1, i) sigma(n-1, j-1)     (i < j)
        sigma(n, j) delta(n, i) = delta(n-1, i-1) sigma(n-1, j)     (i > j+1)
    """
    try:
        n, i, j = (int(v) for v in indices)
        if kind == "delta-delta":
            if not 0 <= i < j <= n + 1:
                raise InvalidRelation(f"delta-delta needs 0 <= i < j <= n+1, got {indices}")
            top, right = delta(n, i), delta(n + 1, j)
            left, bottom = delta(n, j - 1), delta(n + 1, i)
        elif kind == "sigma-sigma":
            if not 0 <= i <= j <= n - 1:
                raise InvalidRelation(f"sigma-sigma needs 0 <= i <= j <= n-1, got {indices}")
            top, right = sigma(n + 1, i), sigma(n, j)
            left, bottom = sigma(n + 1, j + 1), sigma(n, i)
        elif kind == "delta-sigma":
            if not (0 <= j <= n - 1 and 0 <= i <= n) or i in (j, j + 1):
                raise InvalidRelation(f"delta-sigma needs i < j or i > j+1, got {indices}")
            top, right = delta(n, i), sigma(n, j)
            if i < j:
                left, bottom = sigma(n - 1, j - 1), delta(n - 1, i)
            else:
                left, bottom = sigma(n - 1, j), delta(n - 1, i - 1)
        else:
            raise InvalidRelation(f"unknown square kind {kind!r}")
    except IndexOutOfRange as exc:
        raise InvalidRelation(str(exc)) from exc
    sq = RelationSquare(kind, (n, i, j), top, left, bottom, right)
    if compose(sq.bottom, sq.left) != compose(sq.right, sq.top):
        raise AssertionError(f"relation square {kind}{indices} does not commute")
    return sq


def relation_squares(kind: str, max_n: int, min_cardinal: int = 0) -> list[RelationSquare]:
    """All relation squares of a kind with level n <= max_n.

    ``min_cardinal=1`` drops the squares touching the empty cardinal.
    """
    out = []
    for n in range(max_n + 1):
        for i in range(n + 2):
            for j in range(n + 2):
                try:
                    sq = relation_square(kind, (n, i, j))
                except InvalidRelation:
                    continue
                if min(sq.cardinals) >= min_cardinal:
                    out.append(sq)
    return out


def generating_square_status(kind: str, indices) -> dict:
    """Pushout/pullback status in N_c of a relation square, from fibre counting.

    Every relation square is a pushout.  Pullbacks: the squares with deltas
    alone or mixed are pullbacks; among the sigma-only ones, exactly those
    with i == j fail, since the doubled fibre then has four points.
    """
    sq = relation_square(kind, indices)
    _, i, j = sq.indices
    pullback = not (kind == "sigma-sigma" and i == j)
    return {"pushout_in_Nc": True, "pullback_in_Nc": pullback}


def square_status_bruteforce(sq: RelationSquare) -> dict:
    s = sq.to_square()
    return {"pushout_in_Nc": finmap.is_pushout(s), "pullback_in_Nc": finmap.is_pullback(s)}
