import io
import json
from pathlib import Path

import pytest
from hypothesis import given

from conftest import automata
from covertsynth import cli, modelfile
from covertsynth.dot import export_dot
from covertsynth.examples import tank_alphabet, tank_attack, water_tank
from covertsynth.fsa import ModelError, language_equal
from covertsynth.modelfile import ModelFileError
from covertsynth.pipeline import build_all, synth_attacker

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
TANK = FIXTURES / "watertank.json"


def tank_text():
    return TANK.read_text(encoding="utf-8")


def with_automaton(block, role="plant"):
    data = json.loads(tank_text())
    data["automata"][role] = block
    return json.dumps(data)


# --- model files ------------------------------------------------------------

@pytest.mark.parametrize("name", ["watertank.json", "tiny.json"])
def test_fixture_round_trip_is_byte_identical(name):
    text = (FIXTURES / name).read_text(encoding="utf-8")
    assert modelfile.dumps(modelfile.loads(text)) == text


def test_fixture_matches_builtin_instance():
    mf = modelfile.loads(tank_text())
    g, m_o, ac = water_tank()
    assert language_equal(mf.require("plant"), g, marked=True)
    assert language_equal(mf.require("observations"), m_o)
    assert mf.alphabet == ac.alphabet
    assert mf.attack == ac


def test_intermediates_reload_as_isomorphic_automata():
    g, m_o, ac = water_tank()
    for name, a in build_all(g, m_o, ac).items():
        text = modelfile.dumps(modelfile.single(name, a, ac.alphabet, ac))
        back = modelfile.loads(text, allow_reserved=True).require(name)
        assert back.n_states == a.n_states
        assert language_equal(a, back, marked=True)
        assert modelfile.dumps(modelfile.single(name, back, ac.alphabet, ac)) == text


@given(automata())
def test_random_automata_round_trip(a):
    text = modelfile.dumps(modelfile.single("x", a))
    back = modelfile.loads(text).require("x")
    assert language_equal(a, back, marked=True)
    assert modelfile.dumps(modelfile.single("x", back)) == text


def test_generated_commands_are_not_written():
    text = json.dumps({"format": modelfile.FORMAT, "alphabet": {"events": [
        {"name": "a", "observable": True}, {"name": "c", "observable": True, "controllable": True}]}})
    mf = modelfile.loads(text)
    assert len(mf.alphabet.gamma) == 2
    assert "commands" not in json.loads(modelfile.dumps(mf))["alphabet"]


def test_empty_automaton_has_no_initial_state():
    text = with_automaton({"events": [], "states": []})
    with pytest.raises(ModelFileError, match="no initial state"):
        modelfile.loads(text)


@pytest.mark.parametrize("block, message", [
    ({"events": ["L"], "states": [{"name": "detect"}], "initial": "detect"}, "reserved"),
    ({"events": ["L"], "states": [{"name": "a"}], "initial": "b"}, "unknown state"),
    ({"events": ["L"], "states": [{"name": "a"}], "initial": "a",
      "transitions": [["a", "L", "a"], ["a", "L", "b"]]}, "unknown state"),
    ({"events": ["nope"], "states": [{"name": "a"}], "initial": "a"}, "not declared"),
    ({"events": ["L"], "states": [{"name": "a"}, {"name": "b"}], "initial": "a",
      "transitions": [["a", "L", "a"], ["a", "L", "b"]]}, "second 'L' transition"),
])
def test_schema_errors_name_the_field(block, message):
    with pytest.raises(ModelFileError, match=message) as exc:
        modelfile.loads(with_automaton(block))
    assert str(exc.value).startswith("automata.plant")


def test_reserved_event_names_rejected():
    data = json.loads(tank_text())
    data["alphabet"]["events"].append({"name": "stop"})
    with pytest.raises(ModelFileError, match="reserved"):
        modelfile.loads(json.dumps(data))
    data["alphabet"]["events"][-1] = {"name": "L#"}
    with pytest.raises(ModelFileError, match="reserved"):
        modelfile.loads(json.dumps(data))


def test_json_syntax_error_reports_position():
    with pytest.raises(ModelFileError, match="line 2 column"):
        modelfile.loads('{\n  "format": ,\n}')


def test_atomic_save_leaves_no_temporary_files(tmp_path):
    target = tmp_path / "out" / "m.json"
    modelfile.save(target, modelfile.loads(tank_text()))
    assert target.read_text(encoding="utf-8") == tank_text()
    assert [p.name for p in target.parent.iterdir()] == ["m.json"]


# --- DOT --------------------------------------------------------------------

def test_dot_styles_marked_and_highlighted_states():
    out = synth_attacker(*water_tank())
    g = out.intermediates["P"].meta["factors"][0]
    hl = cli._damage_states(out.attacker, out.intermediates["P"], g)
    assert hl
    text = export_dot(out.attacker, hl, "attacker")
    assert text.count('fillcolor="#9ecae1"') == len(hl)
    assert text == export_dot(out.attacker, hl, "attacker")
    plant_dot = export_dot(g)
    assert plant_dot.count("doublecircle") == 2


def test_dot_merges_parallel_edges():
    text = export_dot(build_all(*water_tank())["AC"])
    assert text.count("s0 -> s0") == 1


# --- CLI --------------------------------------------------------------------

def run(argv, capsys):
    code = cli.main([str(a) for a in argv])
    return code, capsys.readouterr()


def test_synth_attacker_writes_outputs(tmp_path, capsys):
    out = tmp_path / "attacker.json"
    code, cap = run(["synth-attacker", TANK, "-o", out, "--dot", "--emit-intermediates", tmp_path / "mid"],
                    capsys)
    assert code == 0
    assert "attacker:" in cap.out
    assert out.exists() and out.with_suffix(".dot").exists()
    assert (tmp_path / "mid" / "OCNS_A.json").exists()
    assert (tmp_path / "mid" / "OCNS_A.dot").exists()


def test_synth_attacker_without_attack_surface(tmp_path, capsys):
    data = json.loads(tank_text())
    data["attack"] = {"compromised": [], "attackable": []}
    model = tmp_path / "m.json"
    model.write_text(json.dumps(data), encoding="utf-8")
    code, cap = run(["synth-attacker", model], capsys)
    assert code == 1
    assert "no solution" in cap.out


def test_input_errors_exit_two(tmp_path, capsys):
    model = tmp_path / "m.json"
    model.write_text(with_automaton({"events": [], "states": []}), encoding="utf-8")
    code, cap = run(["synth-attacker", model], capsys)
    assert code == 2 and "no initial state" in cap.err
    code, _ = run(["synth-ns", tmp_path / "missing.json"], capsys)
    assert code == 2


def test_verify_and_consistent(tmp_path, capsys):
    att = tmp_path / "a.json"
    assert run(["synth-attacker", TANK, "-o", att], capsys)[0] == 0
    code, cap = run(["verify", att, TANK, "--bound", "3"], capsys)
    assert code == 0 and "0 counterexamples" in cap.out
    sups = tmp_path / "sups"
    code, cap = run(["enumerate-sup", TANK, "--bound", "2", "-o", sups], capsys)
    assert code == 0
    first = sorted(sups.iterdir())[0]
    code, cap = run(["consistent", first, TANK], capsys)
    assert code == 0 and cap.out.strip() == "consistent"


def test_enumeration_bound_exit_code(capsys):
    code, cap = run(["enumerate-sup", TANK, "--bound", "3", "--count-bound", "5"], capsys)
    assert code == 3 and "truncated" in cap.out


def test_build_models_subset(tmp_path, capsys):
    code, cap = run(["build-models", TANK, "--only", "AC,CE_A,S_down_A_bar", "--emit-intermediates", tmp_path],
                    capsys)
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["AC.json", "CE_A.json", "S_down_A_bar.json"]
    assert "S_down_A_bar: 6 states" in cap.out
    assert run(["build-models", TANK, "--only", "nope"], capsys)[0] == 2


def test_synth_ns(capsys):
    code, cap = run(["synth-ns", TANK], capsys)
    assert code == 0 and cap.out.startswith("NS:")


def test_cli_runs_are_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(["synth-attacker", TANK, "-o", a], capsys)
    run(["synth-attacker", TANK, "-o", b], capsys)
    assert a.read_bytes() == b.read_bytes()


class FakeTty(io.StringIO):
    def isatty(self):
        return True


def test_colour_only_on_terminals(monkeypatch):
    monkeypatch.delenv("NO_COLOR", raising=False)
    assert "\033[" in cli._colour("x", "1", FakeTty())
    assert cli._colour("x", "1", io.StringIO()) == "x"
    monkeypatch.setenv("NO_COLOR", "1")
    assert cli._colour("x", "1", FakeTty()) == "x"


def test_command_limit_flag(tmp_path, capsys):
    events = [{"name": f"e{i}", "observable": True, "controllable": True} for i in range(13)]
    model = tmp_path / "big.json"
    model.write_text(json.dumps({"format": modelfile.FORMAT, "alphabet": {"events": events},
                                 "automata": {"plant": {"events": [], "states": [{"name": "s"}],
                                                        "initial": "s"}}}), encoding="utf-8")
    code, cap = run(["synth-ns", model], capsys)
    assert code == 2 and "commands" in cap.err


def test_attack_block_requires_alphabet():
    with pytest.raises(ModelError):
        modelfile.loads(json.dumps({"format": modelfile.FORMAT, "attack": {}}))


def test_alphabet_and_attack_survive_round_trip():
    mf = modelfile.loads(tank_text())
    assert mf.alphabet == tank_alphabet()
    assert mf.attack == tank_attack()
