"""Command-line interface: exit codes, JSON round trips, witnesses."""

import json

import pytest

from properads.cli import run


def invoke(tmp_path, argv, payload=None):
    files = []
    if payload is not None:
        path = tmp_path / "in.json"
        path.write_text(json.dumps(payload))
        argv = argv + ["--input", str(path)]
    out = tmp_path / "out.json"
    argv = argv + ["--output", str(out)]
    code = run(argv)
    text = out.read_text() if out.exists() else ""
    try:
        return code, json.loads(text)
    except json.JSONDecodeError:
        return code, text


IDENTITY_COSPAN = {"left": {"dom": 1, "cod": 1, "table": [0]},
                   "right": {"dom": 1, "cod": 1, "table": [0]}}


def test_compose_identity_cospans(tmp_path):
    code, out = invoke(tmp_path, ["compose", "cospan"],
                       {"first": IDENTITY_COSPAN, "second": IDENTITY_COSPAN})
    assert code == 0
    assert out == IDENTITY_COSPAN


def test_compose_mismatch_is_a_parse_error(tmp_path):
    bad = {"first": IDENTITY_COSPAN,
           "second": {"left": {"dom": 2, "cod": 2, "table": [0, 1]},
                      "right": {"dom": 2, "cod": 2, "table": [0, 1]}}}
    code, _ = invoke(tmp_path, ["compose", "cospan"], bad)
    assert code == 2


def test_canonical_reports_automorphisms(tmp_path):
    two_points = {"left": {"dom": 0, "cod": 2, "table": []},
                  "right": {"dom": 0, "cod": 2, "table": []}}
    code, out = invoke(tmp_path, ["canonical"],
                       {"kind": "cospan", "object": two_points})
    assert code == 0
    assert out["aut_order"] == 2


def test_classify_hom_tags(tmp_path):
    code, out = invoke(tmp_path, ["classify-hom"],
                       {"src": 1, "dst": 2, "matrix": [[2, 1]]})
    assert code == 0
    assert out["tag"] == "mixed"
    assert "transfer" in out and "free" in out


def test_check_free_submonoid_witness(tmp_path):
    code, out = invoke(tmp_path, ["check-free-submonoid"],
                       {"ambient": 2, "generators": [[1, 1], [2, 0], [0, 2]]})
    assert code == 1
    assert out["kind"] == "submonoid_not_free"


def test_admissible_check_witness(tmp_path):
    code, out = invoke(tmp_path, ["admissible", "check"],
                       {"members": [[1, 1], [2, 2]], "box": 3})
    assert code == 1
    assert out["kind"] == "not_admissible"
    assert out["witness"] == [2, 2, 2, 1]


def test_admissible_enumerate(tmp_path):
    code, out = invoke(tmp_path, ["admissible", "enumerate", "--box", "2"])
    assert code == 0
    assert {"box": 2, "members": []} in out["admissible"]


def test_check_properad_endo(tmp_path):
    code, out = invoke(tmp_path, ["check-properad", "--bound", "2"],
                       {"type": "endo", "monoid": {"size": 2, "zero": 0,
                                                   "table": [[0, 1], [1, 0]]},
                        "max_arity": 2})
    assert code == 0
    assert out["ok"] is True


def test_free_properad_listing(tmp_path):
    code, out = invoke(tmp_path, ["free-properad"],
                       {"generators": [{"name": "g", "inputs": [0, 0], "outputs": [0]}],
                        "max_vertices": 2})
    assert code == 0
    assert any(op["vertices"] == 2 for op in out["ops"])


def test_realize_emits_dot(tmp_path):
    payload = {"levels": [2, 1, 1],
               "maps": [{"dom": 2, "cod": 1, "table": [0, 0]},
                        {"dom": 1, "cod": 1, "table": [0]}]}
    code, out = invoke(tmp_path, ["realize"], payload)
    assert code == 0
    assert isinstance(out, str) and out.strip().startswith("digraph")


def test_check_pre_properad_span_witness(tmp_path):
    code, out = invoke(tmp_path, ["check-pre-properad"],
                       {"source": "span", "size_bound": 4})
    assert code == 1
    assert out["kind"] == "pre_properad"
    assert out["violation"] == "d1_not_free"


def test_is_complete(tmp_path):
    code, out = invoke(tmp_path, ["is-complete"],
                       {"type": "endo", "monoid": {"size": 1, "zero": 0,
                                                   "table": [[0]]},
                        "max_arity": 2})
    assert code == 0
    assert out["complete"] is True


def test_unknown_command_is_exit_2():
    assert run(["no-such-command"]) == 2
