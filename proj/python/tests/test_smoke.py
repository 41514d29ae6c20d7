import pytest

import twistcert


def test_presets_are_bundled():
    assert set(twistcert.preset_names()) == {"genus10", "genus17"}


def test_genus10_certifies_sixteen():
    cert = twistcert.certify("genus10")
    assert cert["conclusion"]["emitted"] is True
    assert cert["conclusion"]["m1"] == 16


def test_genus17_certifies_twenty_one():
    cert = twistcert.certify("genus17")
    assert cert["conclusion"]["emitted"] is True
    assert cert["conclusion"]["m1"] == 21


def test_short_classes_of_the_237_group():
    doc = twistcert.classes(2, 3, 7, "9/5")
    assert len(doc["classes"]) == 2
    lo, hi = doc["classes"][0]["length"]
    assert float(lo) == pytest.approx(0.9839865622075822, abs=1e-15)
    assert float(hi) == pytest.approx(0.9839865622075822, abs=1e-15)


def test_group_orders():
    assert twistcert.group("genus10")["order"] == 432
    assert twistcert.group("genus17")["order"] == 1344


def test_chartable_degrees_square_sum_to_order():
    table = twistcert.chartable("genus10")
    assert table["order"] == 432
    assert len(table["complexRows"]) == len(table["classes"])
    assert sum(row["degree"] ** 2 for row in table["complexRows"]) == 432


def test_unknown_preset_raises_input_error():
    with pytest.raises(twistcert.InputError):
        twistcert.certify("genus3")


def test_cli_exit_codes():
    code, out, _ = twistcert.run_cli("certify", "--preset", "genus17")
    assert code == 0
    assert "21" in out
    code, _, err = twistcert.run_cli("certify", "--preset", "nope")
    assert code == 3
    assert "unknown preset" in err


def test_selftest_detects_dropped_class():
    results = {r["name"]: r for r in twistcert.selftest(inject=["drop-class"])}
    assert results["completeness"]["pass"] is False
    assert results["quotient"]["pass"] is True
