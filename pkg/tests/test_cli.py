import json

import pytest
from hypothesis import given, settings, strategies as st

from aerolam.cli import main
from aerolam.coding import W, Word


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_itinerary(capsys):
    code, out, _ = run(capsys, "itinerary", "5/16", "--depth", "6")
    assert code == 0 and out.strip() == "L3 L2 C L1 R1 R1"


def test_arc(capsys):
    code, out, _ = run(capsys, "arc", "L3.L2.R3.L3")
    assert code == 0 and out.strip() == "(2/7, 33/112)"


def test_order(capsys):
    code, out, _ = run(
        capsys, "order", "L3 L2 R3 L3 L2 R3 L2 R3", "L3.L2.R3.L3^5"
    )
    assert code == 0 and out.strip().endswith("< L3.L2.R3.L3^5")


def test_usage_error(capsys):
    assert run(capsys, "itinerary")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2


def test_boundary_angle_fails(capsys):
    code, _, err = run(capsys, "itinerary", "3/7")
    assert code == 1 and "boundary" in err


def test_matings_json(capsys):
    code, out, _ = run(capsys, "matings", "--level", "0", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [m["period"] for m in payload["matings"]] == [18, 18]
    assert all("/" in m["q"] for m in payload["matings"])


def test_verify_order_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "order", "--max-level", "3")
    assert code == 0 and "PASS" in out
    # the length ledger contains flagged rows: --strict turns them into failure
    code, _, _ = run(capsys, "verify", "lengths", "--max-level", "3")
    assert code == 0
    code, _, _ = run(capsys, "verify", "lengths", "--max-level", "3", "--strict")
    assert code == 1


def test_verify_json_deterministic(capsys):
    a = run(capsys, "verify", "order", "--max-level", "4", "--json")
    b = run(capsys, "verify", "order", "--max-level", "4", "--json")
    assert a[0] == b[0] == 0
    assert a[1] == b[1]
    payload = json.loads(a[1])
    assert payload["schema"] == 1 and payload["timing"] is None


def test_exchange_json_lines(capsys):
    code, out, _ = run(capsys, "exchange", "--scenario", "2.1", "--json")
    assert code == 0
    events = [json.loads(line) for line in out.splitlines() if line]
    swaps = [e for e in events if e["kind"] == "endpointSwap"]
    assert len(swaps) == 1 and swaps[0]["step"] == 12


def test_render_lamination_chord_count(tmp_path, capsys):
    out_file = tmp_path / "lam.svg"
    code, _, _ = run(
        capsys, "render", "lamination", "--depth", "8", "-o", str(out_file)
    )
    assert code == 0
    text = out_file.read_text()
    # all layers drawn: 2^9 - 1 chords inside the unit circle
    assert text.count("<line") == 2**9 - 1
    assert text.count("<circle") == 1


def test_render_scenario(tmp_path, capsys):
    out_file = tmp_path / "sc.svg"
    code, _, _ = run(capsys, "render", "scenario", "--scenario", "2.1", "-o", str(out_file))
    assert code == 0
    text = out_file.read_text()
    assert text.count("step ") == 8  # the eight replayed rows


def test_render_regions(tmp_path, capsys):
    out_file = tmp_path / "reg.svg"
    code, _, _ = run(capsys, "render", "regions", "-o", str(out_file))
    assert code == 0
    text = out_file.read_text()
    for name in ("R1", "R2", "R3", "C", "L3", "L2", "L1"):
        assert f">{name}<" in text
    assert text.count("<line") == 6  # chords at r/14, 1 <= r <= 6


def _admissible_words(draw):
    from aerolam.coding import TARGETS, Letter

    length = draw(st.integers(1, 12))
    letters = [draw(st.sampled_from(sorted(TARGETS, key=lambda l: l.name)))]
    while len(letters) < length:
        nxt = sorted(TARGETS[letters[-1].coarse], key=lambda l: l.name)
        letters.append(draw(st.sampled_from(nxt)))
    return Word.of(*letters)


@given(st.composite(_admissible_words)())
@settings(max_examples=80)
def test_word_round_trip(word):
    assert Word.parse(str(word)).chars == word.chars
