"""Python smoke tests: the extension module end to end, plus schema checks
on the CLI's JSON outputs."""

import json
import os
import subprocess
from pathlib import Path

import pytest

orbitcc = pytest.importorskip("orbitcc")

REPO = Path(os.environ.get("ORBITCC_REPO", Path(__file__).resolve().parents[2]))
CLI = os.environ.get("ORBITCC_CLI")


def data(rel: str) -> str:
    return str(REPO / "data" / rel)


def test_generate_and_solve_rank_one():
    scenario, oracle_cc, oracle_n = orbitcc.generate_rank_one("torus")
    assert scenario.name == "a1t"
    assert orbitcc.validate(scenario) == []
    sol = orbitcc.solve(scenario)
    assert sol.status == "unique"
    assert sol.entries == oracle_cc
    assert sol.n_values == {(0, "o0", "oOpen"): 1, (0, "oInf", "oOpen"): 1}
    assert sol.chi("oOpen", "xiMinus") == 1
    assert sol.audit() == []


def test_scenario_introspection_and_classification():
    s = orbitcc.load_scenario(data("scenarios/a2.json"))
    assert orbitcc.validate(s) == []
    assert s.rank == 2
    assert s.dim_X == 3
    assert s.open_orbit == "O4"
    assert {o["id"] for o in s.orbits} == {"O1", "O2", "O3", "O4"}
    assert orbitcc.classify(s, "O2", 0) == "horizontal"
    assert orbitcc.classify(s, "O2", 1) == "vertical"
    assert orbitcc.horizontal_witness(s, "O1") in (0, 1)
    with pytest.raises(ValueError):
        orbitcc.classify(s, "nope", 0)


def test_packets_and_genericity():
    s = orbitcc.load_scenario(data("scenarios/a1t.json"))
    sol = orbitcc.solve(s)
    assert orbitcc.l_packet(s, "oOpen") == {"xiPlus", "xiMinus"}
    assert orbitcc.micro_packet(s, sol, "o0") == {"xi0", "xiMinus"}
    assert orbitcc.is_generic(s, "xiPlus")
    assert not orbitcc.is_generic(s, "xiMinus")
    assert orbitcc.verify_generic_membership(s, sol) == []
    verdicts = orbitcc.shahidi_check(s, sol)
    assert all(v["pass"] for v in verdicts)
    tau_d, tau_rep = orbitcc.tau_invariant(s, "xiPlus")
    assert tau_d == {0} and tau_rep == set()


def test_ambiguous_fixture_reports_free_directions():
    s = orbitcc.load_scenario(data("fixtures/a1t_nosym.json"))
    sol = orbitcc.solve(s)
    assert sol.status == "ambiguous"
    assert "chi[xiMinus][o0]" in sol.description
    with pytest.raises(RuntimeError):
        orbitcc.micro_packet(s, sol, "o0")


def test_translation_transport():
    pairing = orbitcc.load_pairing(data("pairings/a1_pairing.json"))
    sing = orbitcc.load_scenario(data("scenarios/a1_point.json"))
    reg = orbitcc.load_scenario(data("scenarios/a1t.json"))
    assert orbitcc.validate_pairing(pairing, sing, reg) == []
    assert orbitcc.pull_orbit(pairing, "oPt") == "oOpen"
    sol = orbitcc.solve(reg)
    table = orbitcc.transport_cc(pairing, sing, reg, sol)
    assert table.chi("oPt", "xiPt") == 1
    flags = orbitcc.transport_genericity(pairing, sing, {
        p["id"]: orbitcc.is_generic(reg, p["id"]) for p in reg.parameters
    })
    assert flags == {"xiPt": True}
    packet = orbitcc.transport_packet(pairing, sing, orbitcc.micro_packet(reg, sol, "oOpen"))
    assert packet == {"xiPt"}


def test_product_matches_shipped_file():
    a1t, _, _ = orbitcc.generate_rank_one("torus")
    prod = orbitcc.product(a1t, a1t)
    shipped = orbitcc.load_scenario(data("scenarios/a1xa1.json"))
    assert {o["id"] for o in prod.orbits} == {o["id"] for o in shipped.orbits}
    assert orbitcc.solve(prod).entries == orbitcc.solve(shipped).entries


def test_algebra_utilities():
    assert orbitcc.root_pairing("A1", 0, ["1"]) == "1"
    assert orbitcc.root_pairing("A1", 0, ["0"]) == "0"
    assert orbitcc.weyl_act("A2", [0, 1, 0], ["1", "1"]) == ["-1", "-1"]
    assert orbitcc.is_regular_lambda("A1", ["1"])
    assert not orbitcc.is_regular_lambda("A1", ["0"])
    p = orbitcc.parabolic("A2", ["1", "0"])
    assert p["levi_roots"] and not p["regular"]


@pytest.mark.skipif(CLI is None, reason="ORBITCC_CLI not set")
class TestCliJsonSchemas:
    @pytest.fixture(scope="class")
    def schemas(self):
        jsonschema = pytest.importorskip("jsonschema")
        with open(REPO / "schemas" / "cli_outputs.schema.json") as f:
            doc = json.load(f)
        def check(kind, payload):
            schema = {"$ref": f"#/definitions/{kind}", "definitions": doc["definitions"]}
            jsonschema.validate(payload, schema)
        return check

    def run_cli(self, *args):
        proc = subprocess.run([CLI, *args], capture_output=True, text=True)
        return proc

    def test_outputs_validate(self, schemas):
        a1t = data("scenarios/a1t.json")
        for kind, args in [
            ("validate", ["validate", "--json", a1t]),
            ("orbits", ["orbits", "--json", a1t]),
            ("cc", ["cc", "--json", a1t]),
            ("waction", ["waction", "--json", a1t]),
            ("packets", ["packets", "--json", a1t]),
            ("shahidi", ["shahidi", "--json", a1t]),
        ]:
            proc = self.run_cli(*args)
            assert proc.returncode == 0, proc.stderr
            schemas(kind, json.loads(proc.stdout))

    def test_translate_output_validates(self, schemas):
        proc = self.run_cli(
            "translate", "--json", data("scenarios/a1_point.json"),
            data("scenarios/a1t.json"), "--pairing", data("pairings/a1_pairing.json"))
        assert proc.returncode == 0, proc.stderr
        schemas("translate", json.loads(proc.stdout))

    def test_scenario_files_validate_against_schema(self):
        jsonschema = pytest.importorskip("jsonschema")
        with open(REPO / "schemas" / "scenario.schema.json") as f:
            schema = json.load(f)
        for rel in ["a1t.json", "a1n.json", "a1xa1.json", "a2.json", "b2.json",
                    "a1_point.json", "a1xa1_wall.json"]:
            with open(data(f"scenarios/{rel}")) as f:
                jsonschema.validate(json.load(f), schema)
        with open(REPO / "schemas" / "pairing.schema.json") as f:
            pschema = json.load(f)
        for rel in ["a1_pairing.json", "a1t_identity_pairing.json",
                    "a1xa1_wall_pairing.json"]:
            with open(data(f"pairings/{rel}")) as f:
                jsonschema.validate(json.load(f), pschema)

    def test_exit_codes(self):
        assert self.run_cli("orbits", data("scenarios/missing.json")).returncode == 1
        assert self.run_cli("cc", data("fixtures/a1t_nosym.json")).returncode == 3
        assert self.run_cli("cc", data("fixtures/cc_infeasible.json")).returncode == 4
        assert self.run_cli("shahidi", data("fixtures/a1t_badpsi.json")).returncode == 1
