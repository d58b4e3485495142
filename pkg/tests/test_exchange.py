from fractions import Fraction as F

import pytest

from aerolam.coding import W, upper_arc
from aerolam.errors import EmptyRegion, MultipleActiveComponents
from aerolam.exchange import (
    BASIC_TRACE_TABLE,
    ScenarioConfig,
    basic_trace_claims,
    build_dprime,
    choose_z,
    component_for_prefix,
    first_move_claims,
    in_strip,
    lift_component,
    mating_trace_claims,
    orbit_words,
    s_image_claims,
    scenario_basic,
    scenario_level,
    scenario_mating,
    scenario_mixed,
    seed_component,
    side_strip_claims,
    strip_hits,
    trace_scenario,
)
from aerolam.families import build_level

V0U0 = W("32r32r2r32r32c")
W0U0 = W("32r3333332r32c")


def test_build_dprime_examples():
    dp = build_dprime(W0U0, V0U0)
    assert F(2, 7) < dp.interval.lo < dp.interval.hi < F(33, 112)
    dp2 = build_dprime(W("32r33333"), W("32r32r2r"))
    assert dp2.interval.lo < dp2.interval.hi
    with pytest.raises(EmptyRegion):
        build_dprime(V0U0, V0U0)


def test_strip_hits_basic():
    dp = build_dprime(W0U0, V0U0)
    assert strip_hits(V0U0, dp) == (8,)
    assert strip_hits(W0U0, dp) == (8,)


def test_choose_z_basic():
    cfg = scenario_basic()
    z = choose_z(cfg)
    assert z.chars == "32r32r2c"
    dp = build_dprime(cfg.x_word, cfg.y_word)
    arc = upper_arc(z)
    assert arc.hi <= dp.interval.lo  # right of the strip
    assert arc.hi <= upper_arc(cfg.y_word).lo  # right of the y region
    for entry in orbit_words(z):
        assert not in_strip(entry, dp)


def test_choose_z_refined_replay():
    from aerolam.exchange import _z_bound

    cfg = scenario_level(1)
    z = choose_z(cfg)
    bound = _z_bound(cfg)
    assert upper_arc(z).hi <= bound
    # right of the branch images of the hull and of the branch fixed point
    from aerolam.coding import arc_under_prefix, periodic_leaf
    from aerolam.exchange import _union_hull

    hull = _union_hull(cfg)
    branch = build_level(1).w
    image = arc_under_prefix(branch, hull)
    assert upper_arc(z).hi <= image.lo
    assert upper_arc(z).hi <= periodic_leaf(branch).upper


def test_seed_component():
    dp = build_dprime(W0U0, V0U0)
    comp = seed_component(dp)
    assert comp.row() == (("3", "bot"), ("r", "top"))
    assert comp.sweep_contains(F(0))
    # the two discs are the halves of the strip preimage
    from aerolam.coding import arc_under_prefix

    assert comp.left.trace == arc_under_prefix(W("3"), dp.interval)
    assert comp.right.trace == arc_under_prefix(W("r"), dp.interval)


def test_lift_reproduces_second_row():
    dp = build_dprime(W0U0, V0U0)
    children = lift_component(seed_component(dp), dp)
    rows = {child.row() for child in children}
    assert (("33", "top"), ("2r", "bot")) in rows
    for child in children:
        assert abs(child.sweep) == abs(seed_component(dp).sweep) / 2


def test_component_reconstruction():
    dp = build_dprime(W0U0, V0U0)
    comp = component_for_prefix(W("32r32r2r"), dp)
    assert {comp.left.prefix.chars, comp.right.prefix.chars} == {
        "32r32r2r",
        "32r33333",
    }


def test_basic_trace_table_and_swap():
    res = trace_scenario(scenario_basic())
    assert res.m0 == 5 and res.m == 13
    for step, expected in BASIC_TRACE_TABLE.items():
        got = {pair for row in res.rows[step] for pair in row}
        assert got == expected, f"step {step}"
    assert res.steps_of("endpointSwap") == [12]
    assert res.final_beta.chars == scenario_basic().x_word.chars
    assert res.max_active == 1
    assert all(c["status"] == "pass" for c in basic_trace_claims())


def test_mating_trace_events():
    cfg = scenario_mating(0, 0)
    assert len(cfg.y_word) - 1 == 33 == len(cfg.x_word) - 1
    res = trace_scenario(cfg)
    assert res.path_event_steps("beta") == [14, 32]
    assert res.path_event_steps("zeta") == [7, 15]
    assert res.final_zeta.chars == "r" + "32r33333" + "32r3332c"
    assert all(c["status"] == "pass" for c in mating_trace_claims(0, 0))


def test_level_traces_close():
    for k in (0, 1):
        cfg = scenario_level(k)
        res = trace_scenario(cfg)
        assert res.steps_of("endpointSwap") == [res.m - 1]
        assert res.final_beta.chars == cfg.x_word.chars
        assert res.max_active == 1


def test_mixed_traces_close_and_hook_ledger():
    for k, n in ((0, 1), (0, 2), (1, 2)):
        cfg = scenario_mixed(k, n)
        res = trace_scenario(cfg)
        assert res.final_beta.chars == cfg.x_word.chars
        doubles = sum(1 for e in res.events if e.kind == "hookDouble")
        assert res.hook_count == 2 * doubles


def test_mixed_swap_counts():
    # one swap per order-sandwich window of the endpoint chain
    for k, n in ((0, 1), (1, 2)):
        res = trace_scenario(scenario_mixed(k, n))
        assert len(res.steps_of("endpointSwap")) == 2 ** (n - k + 1) - 1


def test_strict_single_enforcement():
    cfg = scenario_mixed(0, 1)
    strict = ScenarioConfig(
        name=cfg.name,
        x_word=cfg.x_word,
        y_word=cfg.y_word,
        path_kind=cfg.path_kind,
        strict_single=True,
        s_branch=cfg.s_branch,
        k=cfg.k,
        n=cfg.n,
    )
    with pytest.raises(MultipleActiveComponents):
        trace_scenario(strict)


def test_predicate_claims():
    assert all(c["status"] == "pass" for c in side_strip_claims())
    assert all(c["status"] == "pass" for c in s_image_claims(2))
    claims = first_move_claims(3)
    assert all(c["status"] == "pass" for c in claims)
    assert claims[0]["witness"]["first_hit"] == 8  # literal |v_0|


def test_mating_general_levels():
    for k, n in ((0, 1), (1, 1)):
        cfg = scenario_mating(k, n)
        res = trace_scenario(cfg)
        assert res.final_beta.chars == cfg.x_word.chars
        assert res.final_zeta.chars == cfg.zeta_x_word.chars


def test_basic_prefix_length_parity():
    # step-k component prefixes carry exactly k - 4 letters
    res = trace_scenario(scenario_basic())
    for step, rows in res.rows.items():
        for (lp, _), (rp, _) in rows:
            assert len(lp) == len(rp) == step - 4


def test_verify_predicates_dispatch():
    from aerolam.exchange import verify_predicates

    assert all(
        c["status"] == "pass" for c in verify_predicates(scenario_basic())
    )
    assert all(
        c["status"] == "pass" for c in verify_predicates(scenario_mixed(0, 2))
    )
