"""Instance model, normalization, generators, and file round-trips."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from icx.errors import BadParams, CannotNormalize, ParseError
from icx.model import (
    Destination,
    FamilyTag,
    Instance,
    RateVector,
    gen_neighboring_antidotes,
    gen_neighboring_interference,
    gen_x_network,
    instance_to_json,
    normalize,
    parse_instance,
    serialize_instance,
    validate,
    x_network_sets,
)


def make_instance(num_messages, dests, family=None):
    return Instance(
        num_messages,
        tuple(Destination(i + 1, frozenset(w), frozenset(h)) for i, (w, h) in enumerate(dests)),
        family,
    )


# The five-destination notation example: every destination wants its own
# message and holds two specific others.
NOTATION_EXAMPLE = make_instance(
    5,
    [
        ({1}, {5, 2}),
        ({2}, {1, 4}),
        ({3}, {2, 4}),
        ({4}, {3, 5}),
        ({5}, {4, 1}),
    ],
)


def test_validate_ok_on_notation_example():
    assert validate(NOTATION_EXAMPLE) == []


def test_validate_overlap():
    inst = make_instance(3, [({1}, {1})])
    msgs = validate(inst)
    assert any("message 1 both desired and held" in v for v in msgs)


def test_validate_unknown_id():
    inst = make_instance(5, [({1}, {7})])
    msgs = validate(inst)
    assert any("unknown message id 7" in v for v in msgs)


def test_validate_empty_wants():
    inst = make_instance(2, [(set(), {1})])
    assert any("desires no message" in v for v in validate(inst))


# ----------------------------------------------------------------------
# normalize
# ----------------------------------------------------------------------


def test_normalize_split_sliding_windows():
    inst = make_instance(3, [({1, 2, 3}, set())])
    out = normalize(inst, 2)
    assert [sorted(d.wants) for d in out.destinations] == [[1, 2], [2, 3]]
    assert all(d.has == frozenset() for d in out.destinations)
    assert validate(out) == []


def test_normalize_split_idempotent():
    inst = make_instance(4, [({1, 2}, {3}), ({3, 4}, set())])
    assert normalize(inst, 2) is inst


def test_normalize_split_too_few_wants():
    inst = make_instance(3, [({1}, set())])
    with pytest.raises(CannotNormalize):
        normalize(inst, 2)


def test_normalize_groupcast_small():
    # two messages, three destinations, middle one wants both
    inst = make_instance(2, [({1}, set()), ({1, 2}, set()), ({2}, set())])
    out = normalize(inst, 2, variant="groupcast")
    assert out.num_destinations == 4
    assert [sorted(d.wants) for d in out.destinations] == [[1], [1], [2], [2]]
    counts = {m: 0 for m in (1, 2)}
    for d in out.destinations:
        counts[next(iter(d.wants))] += 1
    assert counts == {1: 2, 2: 2}
    assert validate(out) == []


def test_normalize_groupcast_adds_virtual_destinations():
    inst = make_instance(2, [({1}, {2}), ({2}, set())])
    out = normalize(inst, 2, variant="groupcast")
    # each message now desired twice; virtual copies reuse the original antidotes
    assert out.num_destinations == 4
    assert [sorted(d.wants) for d in out.destinations] == [[1], [1], [2], [2]]
    assert out.destinations[0].has == out.destinations[1].has == frozenset({2})


def test_normalize_groupcast_undesired_message():
    inst = make_instance(2, [({1}, set())])
    with pytest.raises(CannotNormalize):
        normalize(inst, 1, variant="groupcast")


def test_normalize_preserves_validity_random():
    rnd = random.Random(7)
    for _ in range(50):
        M = rnd.randrange(2, 6)
        dests = []
        for _ in range(rnd.randrange(1, 5)):
            wants = set(rnd.sample(range(1, M + 1), rnd.randrange(2, M + 1)))
            rest = [m for m in range(1, M + 1) if m not in wants]
            has = set(m for m in rest if rnd.random() < 0.5)
            dests.append((wants, has))
        inst = make_instance(M, dests)
        out = normalize(inst, 2)
        assert validate(out) == []
        assert out.demand_sizes() == {2}


# ----------------------------------------------------------------------
# generators
# ----------------------------------------------------------------------


def test_gen_neighboring_antidotes_5_1_1():
    inst = gen_neighboring_antidotes(5, 1, 1)
    assert inst.num_messages == 5
    for d in inst.destinations:
        k = d.id
        assert d.wants == frozenset({k})
        prev = (k - 2) % 5 + 1
        nxt = k % 5 + 1
        assert d.has == frozenset({prev, nxt})
    assert validate(inst) == []


def test_gen_neighboring_antidotes_8_1_2():
    inst = gen_neighboring_antidotes(8, 1, 2)
    d3 = inst.destination(3)
    assert d3.has == frozenset({2, 4, 5})
    assert all(len(d.has) == 3 for d in inst.destinations)


def test_gen_neighboring_antidotes_complete():
    inst = gen_neighboring_antidotes(3, 0, 2)
    for d in inst.destinations:
        assert d.has == frozenset(range(1, 4)) - d.wants


def test_gen_neighboring_antidotes_bad_params():
    with pytest.raises(BadParams):
        gen_neighboring_antidotes(3, 2, 1)  # U > D
    with pytest.raises(BadParams):
        gen_neighboring_antidotes(3, 1, 2)  # A = K


def test_gen_neighboring_antidotes_circular_invariance():
    K, U, D = 7, 1, 2
    inst = gen_neighboring_antidotes(K, U, D)
    shift = {d.id: d for d in inst.destinations}
    for d in inst.destinations:
        nd = shift[d.id % K + 1]
        assert nd.has == frozenset((h % K) + 1 for h in d.has)


def test_gen_neighboring_interference_6_0_1():
    inst = gen_neighboring_interference(6, 0, 1)
    for d in inst.destinations:
        missing = frozenset(range(1, 7)) - d.has - d.wants
        assert missing == frozenset({d.id % 6 + 1})


def test_gen_neighboring_interference_9_1_2():
    inst = gen_neighboring_interference(9, 1, 2)
    d5 = inst.destination(5)
    assert frozenset(range(1, 10)) - d5.has == frozenset({4, 5, 6, 7})


def test_gen_neighboring_interference_divisibility():
    with pytest.raises(BadParams):
        gen_neighboring_interference(8, 0, 2)


def test_gen_x_network_degenerate_unicast():
    inst = gen_x_network(4, 1)
    assert inst.num_messages == 4
    for d in inst.destinations:
        assert d.wants == frozenset({d.id})
        assert d.has == frozenset(range(1, 5)) - {d.id}


def test_gen_x_network_6_2():
    inst = gen_x_network(6, 2)
    assert inst.num_messages == 12
    for d in inst.destinations:
        assert len(d.wants) == 2
        interference = inst.interferers(d)
        assert len(interference) == 2  # L^2 - L
    assert inst.is_multiple_unicast()
    assert validate(inst) == []


def test_gen_x_network_rejects_5_3():
    with pytest.raises(BadParams):
        gen_x_network(5, 3)


def test_x_network_sets_match_direct_construction():
    # anti-diagonal wants are inside the L^2 window
    for K, L in [(6, 2), (8, 3), (10, 4)]:
        for k in range(1, K + 1):
            wants, window = x_network_sets(K, L, k)
            assert wants <= window
            assert len(window) == L * L and len(wants) == L


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=5))
def test_generators_validate(L, mult):
    K = (L + 1) * mult
    if K >= 2 * L:
        inst = gen_x_network(K, L)
        assert validate(inst) == []
        assert inst.is_multiple_unicast()
        assert inst.num_messages == K * L
    if K >= 3:
        inst = gen_neighboring_antidotes(K, 0, min(1, K - 1))
        assert validate(inst) == []


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------


def test_roundtrip_identity():
    inst = gen_neighboring_antidotes(5, 1, 1)
    text = serialize_instance(inst)
    again = parse_instance(text)
    assert again == inst
    assert serialize_instance(again) == text
    assert text.endswith("\n")


def test_parse_feasibility_example_file():
    text = serialize_instance(
        make_instance(4, [({1, 2}, set()), ({1, 3}, {4}), ({2, 4}, {3})])
    )
    inst = parse_instance(text)
    assert validate(inst) == []
    assert inst.destination(2).has == frozenset({4})


def test_parse_rejects_overlap():
    bad = '{"messages": 2, "destinations": [{"id": 1, "wants": [1], "has": [1]}]}'
    with pytest.raises(ParseError):
        parse_instance(bad)


def test_parse_rejects_unknown_keys():
    bad = '{"messages": 2, "capacity": 1, "destinations": []}'
    with pytest.raises(ParseError):
        parse_instance(bad)
    bad2 = '{"messages": 2, "destinations": [{"id": 1, "wants": [1], "has": [], "x": 0}]}'
    with pytest.raises(ParseError):
        parse_instance(bad2)


def test_parse_rejects_bad_json():
    with pytest.raises(ParseError):
        parse_instance("{not json")


def test_family_tag_roundtrip():
    inst = gen_x_network(6, 2)
    again = parse_instance(serialize_instance(inst))
    assert again.family == FamilyTag.make("x-network", K=6, L=2)


def test_rate_vector_bounds():
    RateVector((0, 1, "1/2"))
    with pytest.raises(ValueError):
        RateVector((2,))
