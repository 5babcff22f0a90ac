import json

from supertorsion.cli import EXIT_MATH_FAIL, EXIT_OK, EXIT_USAGE, dispatch


def run(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    lines = [json.loads(line) for line in captured.out.splitlines() if line.strip()]
    return code, lines, captured.err


def test_family_slack0(capsys):
    code, docs, _ = run(capsys, "family", "slack0", "--n", "4", "--d", "3",
                        "--field", "Q")
    assert code == EXIT_OK
    assert docs[0]["f"] == ["1", "0", "3", "0", "3"]
    assert docs[0]["m0"] == 6


def test_family_slack1_and_verify_round_trip(capsys):
    code, docs, _ = run(capsys, "family", "slack1", "--n", "3", "--d", "2",
                        "--B", "1", "--B1", "1", "--field", "Q")
    assert code == EXIT_OK
    cert_doc = docs[0]
    assert cert_doc["order_d_point"] == {"x": "-1", "y": "0"}
    code, docs, _ = run(capsys, "verify", "--oracle", "--cert",
                        json.dumps(cert_doc))
    assert code == EXIT_OK
    assert docs[0]["passed"] is True
    assert docs[0]["oracle_order"] == 4


def test_construct_then_normalize(capsys):
    code, docs, _ = run(capsys, "construct", "--n", "3", "--d", "2",
                        "--a", "1", "--B", "1", "--q", "1,1", "--field", "Q")
    assert code == EXIT_OK
    code, docs, _ = run(capsys, "normalize", "--cert", json.dumps(docs[0]))
    assert code == EXIT_OK
    assert docs[0]["a"] == "0"
    assert docs[0]["b_tilde"] == "1/2"


def test_order_backends(capsys):
    curve = json.dumps({"d": 2, "field": {"kind": "Q"},
                        "f": ["1", "2", "3", "2"]})
    for backend in ("rr", "cantor", "elliptic"):
        code, docs, _ = run(capsys, "order", "--curve", curve,
                            "--point", "0,1", "--backend", backend)
        assert code == EXIT_OK
        assert docs[0]["order"] == 4


def test_order_exceeding_max(capsys):
    curve = json.dumps({"d": 2, "field": {"kind": "Q"},
                        "f": ["1", "2", "3", "2"]})
    code, docs, _ = run(capsys, "order", "--curve", curve, "--point", "0,1",
                        "--max-k", "3")
    assert code == EXIT_MATH_FAIL
    assert docs[0]["order"] is None


def test_reachability(capsys):
    code, docs, _ = run(capsys, "reachability", "--n", "5", "--d", "2", "--m", "4")
    assert code == EXIT_OK
    assert docs[0]["status"] == "impossible"


def test_elliptic4_build_and_kubert(capsys):
    code, docs, _ = run(capsys, "elliptic4", "build", "--B", "1", "--B1", "1")
    assert code == EXIT_OK
    assert docs[0]["order_Q0"] == 4 and docs[0]["order_Q2"] == 2
    assert docs[0]["b"] == "-1/2"
    code, docs, _ = run(capsys, "elliptic4", "from-kubert", "--b", "-2")
    assert code == EXIT_OK
    assert docs[0]["B"] == "1" and docs[0]["B1"] == "1/2"
    assert docs[0]["marked_point_image"] == {"x": "0", "y": "1"}


def test_two_packet_admissible(capsys):
    code, docs, _ = run(capsys, "two-packet", "admissible", "--n", "9", "--d", "2")
    assert code == EXIT_OK
    assert docs[0]["verdict"] == "exempt"


def test_two_packet_build_and_bad_lambdas(capsys):
    code, docs, _ = run(capsys, "two-packet", "build", "--p", "13", "--n", "3",
                        "--I", "0,1", "--lambda", "6", "--equal")
    assert code == EXIT_OK
    assert docs[0]["f"] == ["10", "6", "5", "5"]
    code, docs, _ = run(capsys, "two-packet", "bad-lambdas", "--p", "13",
                        "--n", "3", "--I", "0,1", "--C", "1")
    assert code == EXIT_OK
    assert docs[0]["contained"] is True
    assert 1 in docs[0]["candidate_bad"] and 12 in docs[0]["candidate_bad"]
    assert set(docs[0]["confirmed_bad"]) <= set(docs[0]["candidate_bad"])


def test_two_packet_build_bad_lambda_exit(capsys):
    code, docs, _ = run(capsys, "two-packet", "build", "--p", "13", "--n", "3",
                        "--I", "0,1", "--lambda", "5", "--equal")
    assert code == EXIT_MATH_FAIL
    assert docs[0]["error"] in ("NotSquarefree", "DegreeNotNormalized")


def test_usage_errors(capsys):
    code, _, err = run(capsys, "order", "--curve", "{not json", "--point", "0,1")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "two-packet", "build", "--n", "3")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "nonsense")
    assert code == EXIT_USAGE


def test_manifest_written_and_deterministic(tmp_path, capsys):
    path = tmp_path / "manifest.json"
    blobs = []
    for _ in range(2):
        code = dispatch(["--manifest", str(path), "family", "slack0",
                         "--n", "4", "--d", "3", "--field", "Q"])
        capsys.readouterr()
        assert code == EXIT_OK
        blobs.append(path.read_bytes())
    assert blobs[0] == blobs[1]
    doc = json.loads(blobs[0])
    assert doc["command"] == "family"
    assert doc["parameters"]["n"] == 4
    assert len(doc["results"]) == 1
    assert doc["checks_failed"] == 0


def test_manifest_counts_verify_checks(tmp_path, capsys):
    code, docs, _ = run(capsys, "family", "slack1", "--n", "3", "--d", "2",
                        "--B", "1", "--B1", "1", "--field", "Q")
    path = tmp_path / "m.json"
    code = dispatch(["--manifest", str(path), "verify", "--cert",
                     json.dumps(docs[0])])
    capsys.readouterr()
    assert code == EXIT_OK
    doc = json.loads(path.read_text())
    assert doc["checks_passed"] >= 5 and doc["checks_failed"] == 0


def test_determinism_byte_identical(capsys):
    outs = []
    for _ in range(2):
        dispatch(["two-packet", "sweep", "--p", "13", "--n", "3", "--C", "1,2"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    assert outs[0]  # nonempty: the sweep found families


def test_sweep_families_reverify(capsys):
    dispatch(["two-packet", "sweep", "--p", "13", "--n", "3"])
    out = capsys.readouterr().out
    docs = [json.loads(line) for line in out.splitlines()]
    assert docs
    from supertorsion import GF, Poly, SuperellipticCurve, elliptic_order
    for doc in docs:
        F = GF(doc["p"])
        f = Poly(F, [int(c) for c in doc["f"]])
        curve = SuperellipticCurve(F, 2, f)
        for x0 in (F(0), -F(1)):
            for pt in curve.points_above(x0):
                assert elliptic_order(f, pt, 8) == 4
