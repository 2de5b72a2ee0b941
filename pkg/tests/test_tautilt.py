import pytest

from nakayama.algebra import ZERO, make_cyclic, make_gamma, make_linear
from nakayama.errors import NotCyclicConnected, NotInDomain, NotTauTilting
from nakayama.modcat import Indec, all_tau_rigid_indecs, pair_tau_rigid
from nakayama.tautilt import (
    SttPair,
    drop_to_proper_part,
    enumerate_ps_tau_tilt,
    enumerate_stt,
    enumerate_tau_tilt,
    is_support_tau_tilting,
    lift_proper_to_tau_tilting,
    np_part,
    pr_part,
    shift_killed,
    split_at_source,
    unsplit_at_source,
)

L33 = make_cyclic(3, 3)

# the full landscape over the 3-vertex self-injective algebra of Loewy length 3,
# transcribed module by module (10 proper + 10 tau-tilting)
EXPECTED_L33 = [
    set(),
    {(1, 1)},
    {(2, 1)},
    {(3, 1)},
    {(1, 2), (1, 1)},
    {(1, 2), (3, 1)},
    {(2, 2), (2, 1)},
    {(2, 2), (1, 1)},
    {(3, 2), (3, 1)},
    {(3, 2), (2, 1)},
    {(1, 3), (2, 3), (3, 3)},
    {(1, 1), (1, 3), (2, 3)},
    {(2, 1), (2, 3), (3, 3)},
    {(3, 1), (3, 3), (1, 3)},
    {(1, 2), (1, 1), (1, 3)},
    {(1, 2), (3, 1), (1, 3)},
    {(2, 2), (2, 1), (2, 3)},
    {(2, 2), (1, 1), (2, 3)},
    {(3, 2), (3, 1), (3, 3)},
    {(3, 2), (2, 1), (3, 3)},
]


def _modules(pairs):
    return {frozenset((s.top, s.length) for s in p.module) for p in pairs}


def test_enumerate_l33_matches_transcribed_list():
    pairs = enumerate_stt(L33)
    assert len(pairs) == 20
    assert _modules(pairs) == {frozenset(m) for m in EXPECTED_L33}


def test_enumerate_split_counts():
    assert len(enumerate_tau_tilt(L33)) == 10
    assert len(enumerate_ps_tau_tilt(L33)) == 10
    assert len(enumerate_tau_tilt(make_cyclic(4, 3))) == 15
    assert len(enumerate_tau_tilt(make_gamma(5, 3))) == 18
    assert len(enumerate_stt(make_cyclic(4, 4))) == 70


def test_enumerate_zero_algebra():
    assert enumerate_stt(ZERO) == [SttPair((), ())]


def test_is_support_tau_tilting_examples():
    full = is_support_tau_tilting(L33, [Indec(1, 3), Indec(2, 3), Indec(3, 3)])
    assert full is not None and full.killed == ()
    simple = is_support_tau_tilting(L33, [Indec(2, 1)])
    assert simple is not None and simple.killed == (1, 3)
    # a tau-rigid pair with matching support count is accepted (it appears
    # in the transcribed landscape above)
    both = is_support_tau_tilting(L33, [Indec(1, 1), Indec(1, 2)])
    assert both is not None and both.killed == (2,)
    # non-rigid input is refused
    assert is_support_tau_tilting(L33, [Indec(1, 1), Indec(2, 1)]) is None
    # rigid but support too large
    assert is_support_tau_tilting(L33, [Indec(1, 2)]) is None


def test_killed_set_is_support_complement():
    for pair in enumerate_stt(make_cyclic(4, 4)):
        from nakayama.modcat import support

        assert set(pair.killed) == set(range(1, 5)) - support(make_cyclic(4, 4), pair.module)


def test_np_pr_split():
    m = (Indec(2, 1), Indec(2, 3), Indec(1, 3))
    assert np_part(L33, m) == (Indec(2, 1),)
    assert pr_part(L33, m) == (Indec(2, 3), Indec(1, 3))
    allproj = (Indec(1, 3), Indec(2, 3))
    assert np_part(L33, allproj) == ()
    assert pr_part(L33, allproj) == allproj
    assert pr_part(L33, (Indec(1, 1),)) == ()


def test_shift_killed():
    assert shift_killed(L33, {1, 3}) == {3, 2}
    assert shift_killed(L33, set()) == set()
    assert shift_killed(L33, {1, 2, 3}) == {1, 2, 3}
    with pytest.raises(NotCyclicConnected):
        shift_killed(make_linear([1, 2]), {1})


def test_lift_example():
    n = SttPair((Indec(2, 1),), (1, 3))
    m = lift_proper_to_tau_tilting(L33, n)
    assert set(m.module) == {Indec(2, 1), Indec(2, 3), Indec(3, 3)}
    assert m.killed == ()


def test_lift_of_empty_pair_is_whole_algebra():
    empty = SttPair((), (1, 2, 3))
    m = lift_proper_to_tau_tilting(L33, empty)
    assert set(m.module) == {Indec(1, 3), Indec(2, 3), Indec(3, 3)}


def test_lift_drop_roundtrips():
    for alg in (L33, make_cyclic(3, 4), make_cyclic(4, 4), make_cyclic(4, 5)):
        tt = enumerate_tau_tilt(alg)
        ps = enumerate_ps_tau_tilt(alg)
        assert len(tt) == len(ps)
        for p in ps:
            assert drop_to_proper_part(alg, lift_proper_to_tau_tilting(alg, p)) == p
        for m in tt:
            assert lift_proper_to_tau_tilting(alg, drop_to_proper_part(alg, m)) == m


def test_proper_modules_have_no_projectives_when_loewy_large():
    # with every Loewy length >= n, proper pairs carry no projective summand
    for alg in [make_cyclic(n, r) for n in range(1, 5) for r in (n, n + 1)]:
        for p in enumerate_ps_tau_tilt(alg):
            assert not pr_part(alg, p.module)


def test_tau_tilting_has_projective_summand():
    for n in range(1, 5):
        for r in range(1, 6):
            alg = make_cyclic(n, r)
            for m in enumerate_tau_tilt(alg):
                assert pr_part(alg, m.module)


def test_split_at_source_partition():
    g = make_gamma(3, 2)
    tt = enumerate_tau_tilt(g)
    assert len(tt) == 3
    buckets = {}
    for m in tt:
        v, sub = split_at_source(g, m)
        buckets.setdefault(v, []).append(sub)
        assert unsplit_at_source(g, v, sub) == m
    # one class per reachable killed vertex, sizes 2 + 1
    assert sorted(len(b) for b in buckets.values()) == [1, 2]


def test_split_partition_sizes_match_quotient_counts():
    from nakayama.algebra import quotient_by_idempotent
    from nakayama.verify import valid_linear_series

    for n in range(1, 6):
        for ks in valid_linear_series(n, 5):
            alg = make_linear(list(ks))
            if not alg.is_connected():
                continue
            s = alg.source_vertex()
            seen = {}
            for m in enumerate_tau_tilt(alg):
                v, sub = split_at_source(alg, m)
                seen[v] = seen.get(v, 0) + 1
                assert unsplit_at_source(alg, v, sub) == m
            total = 0
            for i in range(alg.loewy[s]):
                v = s - i
                total += len(enumerate_tau_tilt(quotient_by_idempotent(alg, {v})))
            assert sum(seen.values()) == len(enumerate_tau_tilt(alg)) == total


def test_hereditary_two_vertex_tilts_contain_source_projective():
    a2 = make_linear([1, 2])
    assert {frozenset(m.module) for m in enumerate_tau_tilt(a2)} == {
        frozenset({Indec(1, 1), Indec(2, 2)}),
        frozenset({Indec(2, 1), Indec(2, 2)}),
    }


def test_radical_square_zero_tilting_lists():
    # transcribed module lists for the 3- and 4-vertex radical-square-zero
    # linear algebras (path source carries the largest label here)
    g3 = make_gamma(3, 2)
    assert {frozenset(m.module) for m in enumerate_tau_tilt(g3)} == {
        frozenset({Indec(1, 1), Indec(2, 2), Indec(3, 2)}),
        frozenset({Indec(2, 1), Indec(2, 2), Indec(3, 2)}),
        frozenset({Indec(3, 1), Indec(1, 1), Indec(3, 2)}),
    }
    g4 = make_gamma(4, 2)
    assert {frozenset(m.module) for m in enumerate_tau_tilt(g4)} == {
        frozenset({Indec(1, 1), Indec(2, 2), Indec(4, 1), Indec(4, 2)}),
        frozenset({Indec(2, 1), Indec(2, 2), Indec(4, 1), Indec(4, 2)}),
        frozenset({Indec(1, 1), Indec(2, 2), Indec(3, 2), Indec(4, 2)}),
        frozenset({Indec(2, 1), Indec(2, 2), Indec(3, 2), Indec(4, 2)}),
        frozenset({Indec(3, 1), Indec(1, 1), Indec(3, 2), Indec(4, 2)}),
    }


def test_enumeration_distributes_over_components():
    from nakayama.algebra import components, quotient_by_idempotent

    alg = quotient_by_idempotent(make_linear([1, 2, 3, 4, 5]), {3})
    parts = components(alg)
    assert len(parts) == 2
    product = 1
    for c in parts:
        product *= len(enumerate_stt(c))
    assert len(enumerate_stt(alg)) == product


def test_every_tau_rigid_set_extends_to_tau_tilting():
    for alg in [make_cyclic(n, r) for n in range(1, 5) for r in range(1, 5)]:
        rigid = all_tau_rigid_indecs(alg)
        tilts = [set(m.module) for m in enumerate_tau_tilt(alg)]
        sets = [[]]
        for i, x in enumerate(rigid):
            new = []
            for s in sets:
                if all(pair_tau_rigid(alg, x, y) for y in s):
                    new.append(s + [x])
            sets.extend(new)
        for s in sets:
            assert any(set(s) <= t for t in tilts), s


def test_split_requires_tau_tilting():
    g = make_gamma(3, 2)
    with pytest.raises(NotTauTilting):
        split_at_source(g, SttPair((Indec(1, 1),), (2, 3)))


def test_lift_requires_proper_nonprojective():
    with pytest.raises(NotInDomain):
        lift_proper_to_tau_tilting(L33, SttPair((Indec(1, 3), Indec(2, 3), Indec(3, 3)), ()))
    # a proper pair with a projective summand is outside the domain
    l32 = make_cyclic(3, 2)
    pair = is_support_tau_tilting(l32, [Indec(1, 2), Indec(3, 1)])
    assert pair is not None and pair.killed == (2,)
    with pytest.raises(NotInDomain):
        lift_proper_to_tau_tilting(l32, pair)


def test_pair_json_roundtrip():
    for pair in enumerate_stt(L33):
        assert SttPair.from_json(pair.to_json()) == pair
