import io
import json
import subprocess
import sys

import pytest

from ssetlab.cli import main
from ssetlab.textformat import FIXTURE, load


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def report(*argv):
    code, out, _ = run("--format", "json-report", *argv)
    return code, json.loads(out)


@pytest.fixture
def corrupted(tmp_path):
    p = tmp_path / "bad.sset"
    p.write_text(FIXTURE.read_text().replace("d2=x@[0,0]", "d2=y@[0,0]", 1))
    return p


def test_paper_accepts_every_item(tmp_path):
    path = tmp_path / "r.json"
    code, rep = report("paper", "--report", str(path))
    assert code == 0
    assert rep["status"] == "accepted" and rep["ledger_version"] == "1"
    assert all(i["status"] == "accepted" for i in rep["items"])
    assert json.loads(path.read_text()) == rep


def test_json_report_is_deterministic():
    a = run("--format", "json-report", "paper")
    b = run("paper", "--format", "json-report")
    assert a == b
    assert "seconds" not in a[1]
    code, out, _ = run("--format", "json-report", "--timings", "census", "--object", "S")
    assert code == 0 and '"seconds"' in out


def test_corrupted_fixture(corrupted):
    code, rep = report("paper", "-f", str(corrupted))
    assert code == 1
    first = rep["items"][0]
    assert first["item"] == "S-valid" and first["status"] == "rejected"
    assert "alpha" in first["detail"]
    code, _, err = run("census", str(corrupted), "--object", "S")
    assert code == 2 and "alpha" in err
    code, rep = report("validate", str(corrupted))
    assert code == 1
    assert {i["item"]: i["status"] for i in rep["items"]}["validate:S"] == "rejected"


def test_validate_fixture():
    code, rep = report("validate")
    assert code == 0 and len(rep["items"]) == len(load(FIXTURE).items)


def test_census():
    code, rep = report("census", "--object", "S")
    w = rep["items"][0]["witness"]
    assert code == 0 and w["census"] == [2, 2, 1] and w["generators"]["1"] == ["f", "g"]
    assert report("census", "--object", "Horn3_1")[1]["items"][0]["witness"]["census"] == [4, 6, 3]


def test_absent_and_usage_errors():
    assert run("census", "--object", "Nope")[0] == 1
    assert run("census", "--object", "f")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("census")[0] == 2
    assert run("qcat", "--object", "S", "--max-dim", "1")[0] == 2
    assert run("certify", "--cert", "f")[0] == 2
    assert run("compose", "--left", "f", "--right", "f")[0] == 2
    assert run("pushout", "--left", "bang", "--right", "d2")[0] == 2
    code, _, err = run("-f", "/nonexistent/x.sset", "census", "--object", "S")
    assert code == 2 and "cannot read" in err


def test_hom():
    code, rep = report("hom", "--from", "S", "--to", "Delta1", "--list")
    w = rep["items"][0]["witness"]
    assert code == 0 and w["count"] == 3 and len(w["maps"]) == 3
    code, rep = report("hom", "--from", "Delta1", "--to", "Boundary2", "--count")
    assert rep["items"][0]["witness"]["count"] == 6


def test_empty_hom_exits_1(tmp_path):
    p = tmp_path / "e.sset"
    p.write_text("sset E { }\n")
    code, rep = report("-f", str(p), "hom", "--from", "Delta0", "--to", "E")
    assert code == 1 and rep["items"][0]["witness"]["count"] == 0


def test_lift_and_rlp():
    code, rep = report("lift", "--i", "incl_Horn2_1", "--p", "term_Delta2", "--u", "incl_Horn2_1", "--v", "term_Delta2")
    assert code == 0 and rep["items"][0]["witness"]["filler"]["012"] == "012"
    code, _, err = run("lift", "--i", "f", "--p", "r", "--u", "id_Delta1", "--v", "bang")
    assert code == 2 and "commute" in err
    code, rep = report("rlp", "--p", "f", "--i", "f")
    w = rep["items"][0]["witness"]
    assert code == 1 and w["u_is_identity"] and w["v_is_identity"]
    assert run("rlp", "--p", "r", "--i", "incl_Horn2_1")[0] == 0


def test_fibrations_and_qcat():
    code, rep = report("innerfib", "--map", "f")
    assert code == 0 and rep["items"][0]["bounded"]
    assert run("innerfib", "--map", "g")[0] == 1
    code, rep = report("qcat", "--object", "S", "--exhaustive")
    assert code == 1
    fails = rep["items"][0]["witness"]["failures"]
    assert set(fails) == {"Lambda3_1", "Lambda3_2"}
    assert fails["Lambda3_2"]["faces"] == {"d0": "alpha", "d1": "g@[0,0,1]", "d3": "x@[0,0,0]"}
    assert run("qcat", "--object", "Delta2")[0] == 0


def test_tau1():
    code, rep = report("tau1", "--object", "S")
    w = rep["items"][0]["witness"]
    assert code == 0 and w["count"] == 3 and w["edges"]["g"] == "f"


def test_tau1_cap(tmp_path):
    p = tmp_path / "c.sset"
    p.write_text("sset C { dim 0: v; dim 1: e [d0=v, d1=v]; }\n")
    code, rep = report("-f", str(p), "tau1", "--object", "C", "--cap", "10")
    assert code == 1 and set(rep["items"][0]["witness"]["word"]) == {"e"}


def test_certify():
    for name in ("f_weak_equivalence", "f_inner_fibration", "f_not_inner_anodyne", "f_not_fibration", "f_ho_iso"):
        assert run("certify", "--cert", name)[0] == 0, name
    code, out, _ = run("certify", "--cert", "f_ho_iso")
    assert "accepted" in out


def test_certify_rejects_tampered(tmp_path):
    p = tmp_path / "t.sset"
    p.write_text(FIXTURE.read_text().replace("[n=2, k=1, along=h]", "[n=2, k=0, along=h]"))
    code, rep = report("-f", str(p), "certify", "--cert", "f_weak_equivalence")
    assert code == 1 and rep["items"][0]["witness"]["failing_node"] == "g_anodyne"


def test_outputs_reload(tmp_path):
    out = tmp_path / "po.sset"
    assert run("pushout", "--left", "d2", "--right", "bang", "--name", "T", "--out", str(out))[0] == 0
    doc = load(out)
    assert doc.ssets["T"].census() == (2, 2, 1)
    code, text, _ = run("pullback", "--left", "f", "--right", "alpha")
    assert code == 0 and "map Q_to_Delta1" in text
    out = tmp_path / "c.sset"
    assert run("compose", "--left", "alpha", "--right", "d1", "--out", str(out))[0] == 0
    assert load(out).maps["alpha_o_d1"].assignment == load(FIXTURE).maps["f"].assignment
    out = tmp_path / "fill.sset"
    code, rep = report("fill", "--object", "S", "--steps", "2", "--out", str(out))
    assert code == 0 and rep["items"][0]["witness"]["attached_per_step"] == [3, 22]
    doc = load(out)
    assert doc.ssets["S_filled"].census() == (2, 2, 26, 25)
    assert run("-f", str(out), "validate")[0] == 0


def test_fill_overflow():
    code, rep = report("fill", "--object", "S", "--steps", "3", "--cap", "10")
    assert code == 1 and rep["items"][0]["status"] == "rejected"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ssetlab", "census", "--object", "S"], capture_output=True, text=True)
    assert res.returncode == 0 and "census: [2, 2, 1]" in res.stdout
