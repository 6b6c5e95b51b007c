import itertools

import hypothesis
import hypothesis.strategies as st
import pytest

from diptych import finmap as fm
from diptych import simplicial as sx
from diptych.errors import IndexOutOfRange, InvalidRelation, NotInjective, NotMonotone, NotSurjective


def monotone(m, n):
    return [sx.CardinalArrow(m, n, t)
            for t in itertools.combinations_with_replacement(range(n), m)]


@st.composite
def monotone_maps(draw, max_size=5):
    m = draw(st.integers(0, max_size))
    n = draw(st.integers(1 if m else 0, max_size))
    return draw(st.sampled_from(monotone(m, n)))


@st.composite
def injections(draw, max_size=5):
    n = draw(st.integers(0, max_size))
    image = draw(st.sets(st.integers(0, n - 1), max_size=n)) if n else set()
    return sx.CardinalArrow(len(image), n, tuple(sorted(image)))


@st.composite
def surjections(draw, max_size=5):
    n = draw(st.integers(1, max_size))
    counts = draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
    table = tuple(y for y, c in enumerate(counts) for _ in range(c))
    return sx.CardinalArrow(len(table), n, table)


def phi_oracle(a):
    # y |-> number of points hit strictly below y
    return tuple(sum(1 for v in a.table if v < y) for y in range(a.target + 1))


def psi_oracle(b):
    # i |-> last point whose value is at most i
    return tuple(max(x for x in range(b.source) if b(x) <= i) for i in range(b.target - 1))


def test_generator_tables():
    assert sx.delta(1, 0).table == (1,)
    assert sx.sigma(1, 0).table == (0, 0)
    assert sx.delta(3, 1).table == (0, 2, 3)
    assert sx.sigma(3, 1).table == (0, 1, 1, 2)
    with pytest.raises(IndexOutOfRange):
        sx.delta(2, 3)
    with pytest.raises(IndexOutOfRange):
        sx.sigma(2, 2)


def test_cosimplicial_identity_by_table():
    for n in range(4):
        for i in range(n + 1):
            for j in range(i, n + 1):
                lhs = sx.compose(sx.delta(n + 1, i), sx.delta(n, j))
                rhs = sx.compose(sx.delta(n + 1, j + 1), sx.delta(n, i))
                assert lhs == rhs


@hypothesis.given(monotone_maps())
def test_normal_form_roundtrip(f):
    word = sx.normal_form(f)
    assert sx.from_word(word, f.source) == f
    sig = [g.index for g in word if g.kind == "sigma"]
    dlt = [g.index for g in word if g.kind == "delta"]
    assert word[:len(sig)] == [g for g in word if g.kind == "sigma"]
    assert sig == sorted(sig, reverse=True) and len(set(sig)) == len(sig)
    assert dlt == sorted(dlt) and len(set(dlt)) == len(dlt)


def test_normal_form_rejects_non_monotone():
    with pytest.raises(NotMonotone):
        sx.normal_form(sx.CardinalArrow(2, 2, (1, 0)))


def test_phi_psi_examples():
    assert sx.phi(sx.delta(1, 0)) == sx.Star(sx.sigma(2, 0))
    assert sx.psi(sx.sigma(2, 0)) == sx.Star(sx.delta(1, 0))
    assert sx.psi(sx.sigma(1, 0)) == sx.Star(sx.delta(0, 0))
    with pytest.raises(NotInjective):
        sx.phi(sx.sigma(1, 0))
    with pytest.raises(NotSurjective):
        sx.psi(sx.delta(1, 0))


def test_phi_psi_on_generators():
    for n in range(5):
        for j in range(n + 1):
            assert sx.phi(sx.delta(n, j)) == sx.Star(sx.sigma(n + 1, j))
            assert sx.psi(sx.sigma(n + 1, j)) == sx.Star(sx.delta(n, j))


@hypothesis.given(injections())
def test_phi_matches_closed_form(a):
    assert sx.phi(a).arrow.table == phi_oracle(a)


@hypothesis.given(surjections())
def test_psi_matches_closed_form(b):
    assert b.is_surjective()
    assert sx.psi(b).arrow.table == psi_oracle(b)


def test_phi_psi_functorial_on_composites():
    for n in range(5):
        for m in range(n, 6):
            for k in range(m, 6):
                for f in monotone(n, m):
                    if not f.is_injective():
                        continue
                    for g in monotone(m, k):
                        if g.is_injective():
                            assert sx.phi(sx.compose(g, f)) == sx.compose_star(sx.phi(g), sx.phi(f))
    for n in range(1, 6):
        for m in range(1, n + 1):
            for k in range(1, m + 1):
                for f in monotone(n, m):
                    if not f.is_surjective():
                        continue
                    for g in monotone(m, k):
                        if g.is_surjective():
                            assert sx.psi(sx.compose(g, f)) == sx.compose_star(sx.psi(g), sx.psi(f))


def test_phi_psi_inverse_on_generators():
    for n in range(5):
        for j in range(n + 1):
            d = sx.delta(n, j)
            assert sx.psi(sx.phi(d).arrow).arrow == d


def test_relation_square_validation():
    with pytest.raises(InvalidRelation):
        sx.relation_square("delta-sigma", (2, 1, 1))
    with pytest.raises(InvalidRelation):
        sx.relation_square("sigma-sigma", (1, 1, 0))
    with pytest.raises(InvalidRelation):
        sx.relation_square("bogus", (1, 0, 0))


def test_square_status_examples():
    assert sx.generating_square_status("delta-delta", (1, 0, 1)) == \
        {"pushout_in_Nc": True, "pullback_in_Nc": True}
    assert sx.generating_square_status("sigma-sigma", (1, 0, 0)) == \
        {"pushout_in_Nc": True, "pullback_in_Nc": False}
    assert sx.generating_square_status("delta-sigma", (2, 0, 1)) == \
        {"pushout_in_Nc": True, "pullback_in_Nc": True}


@pytest.mark.parametrize("kind", sx.SQUARE_KINDS)
def test_square_status_agrees_with_finite_sets(kind):
    squares = sx.relation_squares(kind, 4)
    assert squares
    for sq in squares:
        assert sx.square_status_bruteforce(sq) == sx.generating_square_status(kind, sq.indices)


def test_square_status_small_cases_by_enumeration():
    for kind in sx.SQUARE_KINDS:
        for sq in sx.relation_squares(kind, 2):
            s = sq.to_square()
            want = sx.generating_square_status(kind, sq.indices)
            assert fm.is_pullback_bruteforce(s, bound=3) == want["pullback_in_Nc"]
            if max(sq.cardinals) <= 3:
                assert fm.is_pushout(s, method="bruteforce") == want["pushout_in_Nc"]
