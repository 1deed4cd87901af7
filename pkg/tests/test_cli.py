"""The qdk command surface: payloads, determinism and exit codes."""

import importlib.util
import json

import pytest

from config.settings import default_config
from src.cli import commands, dump_payload, run, validate_payload
from src.cli.serialization import SCHEMA, PAYLOAD_SCHEMAS, rational
from src.utils.result_types import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE_ERROR

from . import get_project_root


def ok(argv, config=None):
    result = run(argv, config)
    assert result.exit_code == EXIT_OK, result.payload
    return result.payload


class TestPayloads:

    def test_gaussian(self):
        payload = ok(["gaussian", "--n", "4", "--k", "2", "--q", "2"])
        assert list(payload)[:3] == ["schema", "command", "status"]
        assert payload["schema"] == SCHEMA
        assert payload["command"] == "gaussian"
        assert payload["value"] == "35"

    def test_design_verify_all(self):
        payload = ok(["design", "verify", "--blocks", "all", "--n", "3", "--k", "2", "--q", "2", "--t", "1"])
        assert payload["is_design"] is True
        assert payload["lambda"] == "3"
        assert payload["histogram"] == {"3": "7"}

    def test_design_verify_from_file(self, tmp_path):
        blocks = tmp_path / "blocks.txt"
        blocks.write_text("# one point\n1 0 0\n", encoding="utf-8")
        payload = ok(["design", "verify", "--blocks", str(blocks), "--n", "3", "--k", "1", "--q", "2", "--t", "1"])
        assert payload["is_design"] is False
        assert payload["lambda"] is None
        assert payload["histogram"] == {"0": "6", "1": "1"}

    def test_design_profile_fixture(self, fixtures_dir):
        payload = ok(["design", "profile", "--blocks", str(fixtures_dir / "fano_planes.txt"),
                      "--n", "3", "--k", "2", "--q", "2"])
        assert [report["lambda"] for report in payload["reports"]] == ["7", "3", "1"]

    def test_field_create(self):
        payload = ok(["field", "create", "--p", "2", "--m", "3"])
        assert payload["modulus"] == "x^3+x+1"
        assert payload["primitive_element"] == "0,1,0"

    def test_field_inspect(self):
        payload = ok(["field", "inspect", "--q", "4"])
        assert payload["elements"] == ["0,0", "1,0", "0,1", "1,1"]
        assert payload["modulus"] == "x^2+x+1"

    def test_factor_and_cosets(self):
        payload = ok(["poly", "factor-xn1", "--n", "7", "--q", "2"])
        assert payload["factors"] == ["x+1", "x^3+x+1", "x^3+x^2+1"]
        assert payload["splitting_field"] == 8
        payload = ok(["poly", "cosets", "--n", "7", "--q", "2"])
        assert payload["cosets"] == [[0], [1, 2, 4], [3, 5, 6]]

    def test_count_split(self):
        payload = ok(["poly", "count-split", "--n", "2", "--q", "3"])
        assert payload["count"] == "3"
        assert payload["binomial"] == "3"
        assert payload["formula"] == "3/2"
        assert payload["formula_integral"] is False

    def test_grassmann_enumerate(self):
        payload = ok(["grassmann", "enumerate", "--n", "3", "--k", "1", "--q", "2"])
        assert payload["count"] == "7"
        assert payload["subspaces"][0] == "1 0 0"

    def test_group_builtins(self):
        payload = ok(["group", "singer", "--p", "2", "--n", "2"])
        assert payload["matrix"] == "0 1;1 1"
        assert payload["order"] == "3"
        payload = ok(["group", "closure", "--group", "singer:2,1,3"])
        assert payload["order"] == "7"

    def test_group_file(self, fixtures_dir):
        payload = ok(["group", "closure", "--group-file", str(fixtures_dir / "dihedral_gf3.txt"), "--q", "3"])
        assert payload["order"] == "6"
        assert payload["generators"] == ["0 2;1 2", "0 1;1 0"]

    def test_sympower(self):
        payload = ok(["group", "sympower", "--q", "2", "--matrix", "1 1;0 1", "--deg", "2"])
        assert payload["matrix"] == "1 0 0;1 1 0;1 0 1"

    def test_orbit(self):
        payload = ok(["group", "orbit", "--group", "singer:2,1,2", "--subspace", "1 0"])
        assert payload["size"] == "3"
        assert payload["group_order"] == "3"

    def test_invariant_and_triangle(self):
        flags = ["--group", "dihedral:3,3", "--sym-deg", "2", "--k", "1"]
        payload = ok(["group", "invariant", *flags])
        assert payload["count"] == "1"
        assert payload["subspaces"] == ["1 2 1"]
        payload = ok(["design", "triangle", *flags, "--t", "1"])
        assert payload["is_design"] is False
        assert payload["lambda"] is None
        assert payload["histogram"] == {"0": "12", "1": "1"}
        assert payload["num_t_subspaces"] == "13"

    def test_splitting(self):
        payload = ok(["design", "splitting", "--p", "2", "--r", "1", "--s", "2", "--t", "1", "--count-bases"])
        assert (payload["S"], payload["N"], payload["gl_order"]) == ("3", "3", "1")
        assert payload["quotient_check"] is True
        assert payload["report"]["lambda"] == "1"
        payload = ok(["design", "splitting", "--p", "2", "--r", "2", "--s", "2", "--conjugate", "1"])
        assert (payload["S"], payload["gl_order"]) == ("20", "6")
        assert "N" not in payload
        assert "report" not in payload

    def test_splitting_without_bases_stays_under_small_caps(self):
        config = default_config.with_overrides(enumeration_cap=100)
        payload = ok(["design", "splitting", "--p", "2", "--r", "2", "--s", "2", "--t", "1"], config)
        assert payload["S"] == "20"
        result = run(["design", "splitting", "--p", "2", "--r", "2", "--s", "2", "--count-bases"], config)
        assert result.exit_code == EXIT_DOMAIN_ERROR
        assert result.error_kind == "CapExceeded"

    def test_pg_lines(self):
        payload = ok(["design", "pg-lines", "--m", "4"])
        assert (payload["v"], payload["b"], payload["is_steiner"]) == (15, 35, True)

    def test_cyclic_code(self):
        payload = ok(["code", "cyclic", "--n", "7", "--q", "2", "--roots", "1,2,4", "--min-distance"])
        assert payload["generator_poly"] == "x^3+x+1"
        assert (payload["n"], payload["k"], payload["d"]) == (7, 4, 3)
        assert payload["parity_check_poly"] == "x^4+x^2+x+1"

    def test_cyclic_alias(self):
        argv = ["--n", "7", "--q", "2", "--roots", "1,2,4"]
        assert ok(["cyclic", *argv]) == ok(["code", "cyclic", *argv])

    def test_rs_and_min_distance(self):
        payload = ok(["code", "rs", "--q", "4", "--k", "2", "--len", "5", "--min-distance"])
        assert (payload["n"], payload["k"], payload["d"], payload["mds"]) == (5, 2, 4, True)
        payload = ok(["code", "min-distance", "--q", "2", "--n", "3", "--matrix", "1 1 1"])
        assert (payload["d"], payload["mds"]) == (3, True)

    def test_arc(self, fixtures_dir):
        payload = ok(["code", "arc", "--q", "3", "--r", "3", "--nrc-deg", "2"])
        assert (payload["num_points"], payload["is_arc"]) == (4, True)

    def test_count_cyclic(self):
        payload = ok(["code", "count-cyclic", "--n", "7", "--q", "2"])
        assert payload["oracle"] == "8"
        assert payload["num_cosets"] == 3
        assert payload["formula_values"][0] == "1/2"

    def test_every_command_has_a_schema(self):
        assert len(PAYLOAD_SCHEMAS) == 22


EVERY_COMMAND = [
    ["field", "create", "--p", "3", "--m", "2"],
    ["field", "inspect", "--q", "8"],
    ["poly", "factor-xn1", "--n", "8", "--q", "3"],
    ["poly", "cosets", "--n", "15", "--q", "2"],
    ["poly", "count-split", "--n", "3", "--q", "5"],
    ["gaussian", "--n", "6", "--k", "3", "--q", "4"],
    ["grassmann", "enumerate", "--n", "4", "--k", "2", "--q", "2"],
    ["group", "closure", "--group", "dihedral:3,3"],
    ["group", "singer", "--p", "3", "--n", "3"],
    ["group", "sympower", "--q", "3", "--matrix", "1 2;0 1", "--deg", "3"],
    ["group", "orbit", "--group", "singer:2,1,3", "--subspace", "1 0 0;0 1 0"],
    ["group", "invariant", "--group", "dihedral:3,3", "--sym-deg", "2", "--k", "1"],
    ["design", "verify", "--blocks", "all", "--n", "4", "--k", "2", "--q", "2", "--t", "1"],
    ["design", "profile", "--blocks", str(get_project_root() / "tests" / "fixtures" / "fano_planes.txt"),
     "--n", "3", "--k", "2", "--q", "2"],
    ["design", "splitting", "--p", "2", "--r", "2", "--s", "2", "--t", "1", "--count-bases"],
    ["design", "pg-lines", "--m", "4"],
    ["design", "triangle", "--group", "dihedral:3,3", "--sym-deg", "2", "--k", "1", "--t", "1"],
    ["code", "cyclic", "--n", "15", "--q", "2", "--roots", "1,2,4,8", "--min-distance"],
    ["code", "rs", "--q", "8", "--k", "3", "--len", "9", "--min-distance"],
    ["code", "min-distance", "--q", "3", "--n", "4", "--matrix", "1 0 1 1;0 1 1 2"],
    ["code", "arc", "--q", "5", "--r", "3", "--nrc-deg", "2"],
    ["code", "count-cyclic", "--n", "15", "--q", "2"],
]


class TestDeterminism:

    @pytest.mark.parametrize("argv", EVERY_COMMAND)
    def test_threads_do_not_change_bytes(self, argv):
        serial = run(argv + ["--threads", "1"])
        assert serial.exit_code == EXIT_OK, serial.payload
        threaded = dump_payload(run(argv + ["--threads", "4"]).payload)
        assert dump_payload(serial.payload) == threaded
        assert threaded == dump_payload(run(argv).payload)

    def test_every_command_is_covered(self):
        covered = {" ".join(argv[:1] if argv[0] == "gaussian" else argv[:2]) for argv in EVERY_COMMAND}
        assert covered == set(PAYLOAD_SCHEMAS)


class TestErrors:

    def test_unknown_command(self):
        result = run(["frobnicate"])
        assert result.exit_code == EXIT_USAGE_ERROR
        assert result.payload["error_kind"] == "UnknownCommand"
        assert list(result.payload) == ["schema", "status", "error_kind", "message"]

    def test_missing_argument(self):
        result = run(["gaussian", "--n", "4"])
        assert result.exit_code == EXIT_USAGE_ERROR
        assert result.payload["status"] == "error"

    def test_domain_error(self):
        result = run(["field", "create", "--p", "4"])
        assert result.exit_code == EXIT_DOMAIN_ERROR
        assert result.payload["error_kind"] == "NotPrime"

    def test_cap_exceeded(self):
        config = default_config.with_overrides(enumeration_cap=100)
        result = run(["grassmann", "enumerate", "--n", "6", "--k", "3", "--q", "2"], config)
        assert result.exit_code == EXIT_DOMAIN_ERROR
        assert result.error_kind == "CapExceeded"

    def test_not_coset_closed(self):
        result = run(["cyclic", "--n", "7", "--q", "2", "--roots", "1"])
        assert result.payload["error_kind"] == "NotCosetClosed"

    def test_group_file_needs_field(self, fixtures_dir):
        result = run(["group", "closure", "--group-file", str(fixtures_dir / "dihedral_gf3.txt")])
        assert result.exit_code == EXIT_USAGE_ERROR

    def test_missing_file(self, tmp_path):
        result = run(["design", "verify", "--blocks", str(tmp_path / "absent.txt"),
                      "--n", "3", "--k", "1", "--q", "2", "--t", "1"])
        assert result.exit_code == EXIT_USAGE_ERROR

    def test_bad_roots(self):
        result = run(["cyclic", "--n", "7", "--q", "2", "--roots", "a,b"])
        assert result.exit_code == EXIT_USAGE_ERROR

    def test_bad_thread_count(self):
        result = run(["gaussian", "--n", "4", "--k", "2", "--q", "2", "--threads", "0"])
        assert result.exit_code == EXIT_USAGE_ERROR

    def test_help(self):
        result = run(["--help"])
        assert result.exit_code == EXIT_OK
        assert result.payload["command"] == "help"

    @pytest.mark.parametrize("q", ["0", "1", "6"])
    def test_gaussian_needs_a_prime_power(self, q):
        result = run(["gaussian", "--n", "4", "--k", "2", "--q", q])
        assert result.exit_code == EXIT_DOMAIN_ERROR
        assert result.error_kind == "NotPrime"

    def test_negative_conjugate(self):
        result = run(["design", "splitting", "--p", "2", "--r", "1", "--s", "2", "--conjugate", "-1"])
        assert result.exit_code == EXIT_USAGE_ERROR
        assert result.payload["status"] == "error"

    def test_unexpected_failure_is_reported(self, monkeypatch):
        def broken(args, config):
            raise ZeroDivisionError("integer division or modulo by zero")

        monkeypatch.setattr(commands, "_gaussian", broken)
        result = run(["gaussian", "--n", "4", "--k", "2", "--q", "2"])
        assert result.exit_code == EXIT_DOMAIN_ERROR
        assert result.error_kind == "InternalError"
        assert result.payload["message"].startswith("ZeroDivisionError")


class TestSchemaValidation:

    def test_missing_key(self):
        payload = {"schema": SCHEMA, "command": "gaussian", "status": "ok", "n": 4, "k": 2, "q": 2}
        check = validate_payload("gaussian", payload)
        assert not check.is_valid

    def test_wrong_type(self):
        payload = {"schema": SCHEMA, "command": "gaussian", "status": "ok", "n": 4, "k": 2, "q": 2, "value": 35}
        assert not validate_payload("gaussian", payload).is_valid

    def test_unknown_command(self):
        assert not validate_payload("teleport", {}).is_valid

    def test_rational(self):
        from fractions import Fraction
        assert rational(Fraction(6, 4)) == "3/2"
        assert rational(Fraction(4, 2)) == "2"


def test_script_entry_point(capsys):
    path = get_project_root() / "scripts" / "qdk.py"
    spec = importlib.util.spec_from_file_location("qdk_script", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)

    code = module.main(["gaussian", "--n", "4", "--k", "2", "--q", "2"])
    assert code == 0
    out = capsys.readouterr().out.strip()
    assert json.loads(out)["value"] == "35"
    assert out == dump_payload(run(["gaussian", "--n", "4", "--k", "2", "--q", "2"]).payload)
