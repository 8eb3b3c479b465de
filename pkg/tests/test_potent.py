import itertools
import random

import pytest

from kpotent.counting import CharGuardFailed
from kpotent.field import parse_field, potent_codes
from kpotent.incmat import UpperMatrix, is_potent
from kpotent.poset import poset_chain, poset_rhombus, poset_star, poset_y
from kpotent.potent import (DiagonalAssignment, ExtraFreeValue, MissingFreeValue, NotPotentScalar,
                            ZeroDiagonalCase, complete_potent, count_by_construction,
                            count_by_construction_slow, enumerate_potents,
                            forced_entry_closed_form, forced_pairs, free_slot_polynomial,
                            free_slots)

F5, F7 = parse_field("5"), parse_field("7")


def _random_instance(rng, poset, f, k):
    diag = [rng.choice(potent_codes(f, k)) for _ in range(poset.n)]
    d = DiagonalAssignment(poset, f, k, diag)
    return d, {ij: rng.randrange(f.q) for ij in free_slots(d)}


def test_free_slots_examples():
    P = poset_chain(3)
    d = DiagonalAssignment(P, F5, 2, [1, 4, 1])
    assert free_slots(d).pairs == ((0, 1), (1, 2))
    assert forced_pairs(d) == ((0, 2),)
    d = DiagonalAssignment(poset_rhombus(1, 1), F5, 2, [0, 1, 4, 0])
    assert set(free_slots(d)) == {(0, 1), (0, 2), (1, 3), (2, 3)}


def test_not_potent_scalar():
    with pytest.raises(NotPotentScalar):
        DiagonalAssignment(poset_chain(2), F5, 2, [2, 1])


def test_diagonal_only():
    P = poset_chain(3)
    d = DiagonalAssignment(P, F5, 2, [4, 4, 4])
    assert complete_potent(d, {}) == UpperMatrix.from_dense(P, F5, [[4, 0, 0], [0, 4, 0], [0, 0, 4]])


@pytest.mark.parametrize("poset", [poset_chain(5), poset_star(1, [2, 1]), poset_rhombus(2, 1),
                                   poset_y(2, 1, 2)])
@pytest.mark.parametrize("name, k", [("5", 2), ("7", 3), ("9", 4), ("13", 3), ("3", 1)])
def test_soundness(poset, name, k):
    f = parse_field(name)
    rng = random.Random(f"{poset.n}-{name}-{k}")
    for _ in range(15):
        d, free = _random_instance(rng, poset, f, k)
        a = complete_potent(d, free)
        assert is_potent(a, k)
        assert a.diagonal() == d.values
        assert all(a.code(*ij) == v for ij, v in free.items())


def test_forced_entries_are_unique():
    # changing any single forced entry breaks potency
    rng = random.Random(11)
    P = poset_chain(4)
    for _ in range(30):
        d, free = _random_instance(rng, P, F7, 3)
        a = complete_potent(d, free)
        for ij in forced_pairs(d):
            for delta in range(1, 7):
                b = a.with_entries({ij: F7.add(a.code(*ij), delta)})
                assert not is_potent(b, 3)


def test_free_entries_are_arbitrary():
    P = poset_chain(3)
    d = DiagonalAssignment(P, F5, 2, [1, 4, 0])
    for vals in itertools.product(range(5), repeat=3):
        assert is_potent(complete_potent(d, dict(zip(free_slots(d), vals))), 2)


def test_closed_form_agrees_with_completion():
    rng = random.Random(2)
    checked = 0
    while checked < 500:
        f, k = rng.choice([(F5, 2), (F7, 3), (F7, 2), (parse_field("13"), 4), (parse_field("9"), 4)])
        n = rng.randint(2, 5)
        d, free = _random_instance(rng, poset_chain(n), f, k)
        a = complete_potent(d, free)
        for ij in forced_pairs(d):
            if d.values[ij[0]] == 0:
                continue
            assert forced_entry_closed_form(d, a, ij) == a[ij]
            checked += 1


def test_closed_form_zero_diagonal():
    d = DiagonalAssignment(poset_chain(3), F5, 2, [0, 1, 0])
    a = complete_potent(d, {(0, 1): 2, (1, 2): 3})
    with pytest.raises(ZeroDiagonalCase):
        forced_entry_closed_form(d, a, (0, 2))
    # here the forced value is simply the path product
    assert a.code(0, 2) == F5.mul(2, 3)


def test_free_value_errors():
    d = DiagonalAssignment(poset_chain(3), F5, 2, [1, 4, 1])
    with pytest.raises(MissingFreeValue):
        complete_potent(d, {(0, 1): 1})
    with pytest.raises(ExtraFreeValue):
        complete_potent(d, {(0, 1): 1, (1, 2): 1, (0, 2): 1})


def test_char_guard():
    d = DiagonalAssignment(poset_chain(2), F5, 4, [1, 1])
    with pytest.raises(CharGuardFailed):
        complete_potent(d, {})
    with pytest.raises(CharGuardFailed):
        count_by_construction(poset_chain(2), parse_field("4"), 1)


def test_enumeration_is_injective_and_sized():
    P = poset_chain(2)
    mats = list(enumerate_potents(P, F5, 2))
    assert len(mats) == len(set(mats)) == 33
    assert all(is_potent(m, 2) for m in mats)


@pytest.mark.parametrize("poset, name, k, expect", [
    (poset_chain(1), "3", 1, 2), (poset_chain(2), "3", 1, 8), (poset_chain(3), "3", 1, 56),
    (poset_chain(2), "5", 2, 33), (poset_chain(3), "5", 2, 1203), (poset_chain(2), "7", 3, 88),
    (poset_star(1, [1]), "5", 2, 363), (poset_y(1, 1, 1), "5", 2, 363),
    (poset_rhombus(1, 1), "5", 2, 44553), (poset_chain(2), "9", 4, 185),
])
def test_count_by_construction(poset, name, k, expect):
    f = parse_field(name)
    assert count_by_construction(poset, f, k) == expect
    assert count_by_construction_slow(poset, f, k) == expect


def test_free_slot_polynomial_pins():
    P = poset_chain(2)
    assert str(free_slot_polynomial(P, 3)) == "6q+3"
    assert str(free_slot_polynomial(P, 3, fixed={0: 0})) == "2q+1"
