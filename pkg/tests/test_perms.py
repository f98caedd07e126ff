import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hatkit.errors import DegreeMismatch, NotInvariant, VertexOutOfRange
from hatkit.perms import (
    PermGroup,
    centralizes,
    compose,
    cycle_string,
    from_cycles,
    identity,
    induced_action,
    inverse,
    is_identity,
    membership_test,
    schreier_sims,
)


def closure(gens):
    """Naive breadth-first closure; the independent order oracle."""
    n = len(gens[0])
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = compose(g, s)
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    return seen


def test_compose_convention():
    p = from_cycles(3, [(0, 1)])
    q = from_cycles(3, [(1, 2)])
    # left to right: 0 -> 1 under p, then 1 -> 2 under q
    assert compose(p, q)[0] == 2
    assert compose(p, identity(3)) == p


def test_inverse_three_cycle():
    p = from_cycles(3, [(0, 1, 2)])
    assert inverse(p) == from_cycles(3, [(0, 2, 1)])
    assert cycle_string(inverse(p)) == "(0 2 1)"


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity(3), identity(4))


@settings(max_examples=60)
@given(st.permutations(list(range(6))), st.permutations(list(range(6))))
def test_group_laws(p, q):
    p, q = tuple(p), tuple(q)
    assert compose(p, inverse(p)) == identity(6)
    assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))
    assert is_identity(compose(p, inverse(p)))


def test_schreier_sims_s4():
    group = schreier_sims([from_cycles(4, [(0, 1)]), from_cycles(4, [(0, 1, 2, 3)])])
    assert group.order == 24


def test_schreier_sims_cyclic():
    group = schreier_sims([from_cycles(5, [(0, 1, 2, 3, 4)])])
    assert group.order == 5


def test_schreier_sims_trivial():
    group = schreier_sims([], degree=7)
    assert group.order == 1
    assert group.contains(identity(7))
    with pytest.raises(ValueError):
        schreier_sims([])


@pytest.mark.parametrize("gens", [
    [[(0, 1)], [(0, 1, 2)]],                      # S3
    [[(0, 1, 2)], [(1, 2, 3)]],                   # A4
    [[(0, 1, 2, 3, 4, 5)], [(1, 5), (2, 4)]],     # D6
    [[(0, 1, 2, 3, 4, 5, 6)]],                    # C7
    [[(0, 1), (2, 3)], [(4, 5)]],                 # Klein-ish
])
def test_order_matches_closure(gens):
    degree = 1 + max(x for cyc in gens for c in cyc for x in c)
    perms = [from_cycles(degree, cyc) for cyc in gens]
    group = schreier_sims(perms)
    assert group.order == len(closure(perms))


def test_order_matches_closure_random():
    rng = random.Random(41)
    for _ in range(15):
        n = rng.randint(3, 6)
        perms = []
        for _ in range(2):
            images = list(range(n))
            rng.shuffle(images)
            perms.append(tuple(images))
        group = schreier_sims(perms)
        assert group.order == len(closure(perms))


def test_membership():
    g3 = schreier_sims([from_cycles(3, [(0, 1, 2)])])
    assert membership_test(g3, identity(3))
    assert not membership_test(g3, from_cycles(3, [(0, 1)]))
    with pytest.raises(DegreeMismatch):
        membership_test(g3, identity(4))


def test_membership_random_products():
    rng = random.Random(99)
    gens = [from_cycles(6, [(0, 1, 2, 3, 4, 5)]), from_cycles(6, [(0, 1)])]
    group = schreier_sims(gens)
    elems = closure(gens)
    for _ in range(40):
        word = identity(6)
        for _ in range(rng.randint(0, 6)):
            word = compose(word, rng.choice(gens))
        assert group.contains(word)
    # a certified non-member, when one exists
    alt = schreier_sims([from_cycles(6, [(0, 1, 2)]), from_cycles(6, [(1, 2, 3, 4, 5)])])
    non_member = from_cycles(6, [(0, 1)])
    assert non_member not in closure(alt.generators)
    assert not alt.contains(non_member)


def test_orbit():
    g = schreier_sims([from_cycles(5, [(0, 1, 2)])])
    assert g.orbit(0) == (0, 1, 2)
    assert g.orbit(3) == (3,)
    with pytest.raises(VertexOutOfRange):
        g.orbit(5)
    trivial = schreier_sims([], degree=4)
    assert trivial.orbit_partition() == ((0,), (1,), (2,), (3,))


def test_orbit_sizes_divide_order():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(3, 7)
        images = list(range(n))
        rng.shuffle(images)
        group = schreier_sims([tuple(images)])
        for orbit in group.orbit_partition():
            assert group.order % len(orbit) == 0


def test_centralizes():
    rot = schreier_sims([from_cycles(3, [(0, 1, 2)])])
    assert centralizes(identity(3), rot)
    assert not centralizes(from_cycles(3, [(0, 1)]), rot)
    s = from_cycles(3, [(0, 1)])
    lhs = compose(s, from_cycles(3, [(0, 1, 2)]))
    rhs = compose(from_cycles(3, [(0, 1, 2)]), s)
    assert lhs != rhs  # definitional cross-check


def test_induced_action_singletons():
    group = schreier_sims([from_cycles(4, [(0, 1, 2, 3)])])
    induced, faithful = induced_action(group, [{i} for i in range(4)])
    assert faithful and induced.order == group.order


def test_induced_action_kernel():
    group = schreier_sims([from_cycles(4, [(0, 1), (2, 3)])])
    induced, faithful = induced_action(group, [{0, 1}, {2, 3}])
    assert induced.order == 1 and not faithful


def test_induced_action_not_invariant():
    group = schreier_sims([from_cycles(4, [(0, 1, 2, 3)])])
    with pytest.raises(NotInvariant):
        induced_action(group, [{0, 1}, {2, 3}])
    with pytest.raises(ValueError):
        induced_action(group, [{0, 1}, {1, 2}])


def test_json_round_trip():
    group = schreier_sims([from_cycles(4, [(0, 1)]), from_cycles(4, [(0, 1, 2, 3)])])
    data = json.loads(json.dumps(group.to_json_dict()))
    back = PermGroup.from_json_dict(data)
    assert back.order == 24 and back.degree == 4


def test_every_generator_sifts():
    gens = [from_cycles(5, [(0, 1, 2, 3, 4)]), from_cycles(5, [(1, 4), (2, 3)])]
    group = schreier_sims(gens)
    for gen in group.generators:
        assert group.contains(gen)
