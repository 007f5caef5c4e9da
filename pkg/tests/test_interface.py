import json

import pytest
from fastapi.testclient import TestClient

from story2uml.cli import main
from story2uml.diagram import emit_plantuml
from story2uml.project import model_from_dict
from story2uml.service import create_app

from conftest import CAR_REPAIR_STORY, SIMPLE_PLANTUML, SIMPLE_STORY


@pytest.fixture()
def story_file(tmp_path):
    path = tmp_path / "story.txt"
    path.write_text(SIMPLE_STORY, encoding="utf-8")
    return path


@pytest.fixture()
def client(tmp_path):
    app = create_app(data_dir=tmp_path / "data")
    with TestClient(app) as test_client:
        yield test_client


# --- CLI --------------------------------------------------------------------

def test_generate_reference_block(story_file, capsys):
    assert main(["generate", str(story_file), "--no-filter", "--system", "System"]) == 0
    assert capsys.readouterr().out == SIMPLE_PLANTUML


def test_generate_byte_identical_across_runs(story_file, capsys):
    main(["generate", str(story_file), "--no-filter"])
    first = capsys.readouterr().out
    main(["generate", str(story_file), "--no-filter"])
    assert capsys.readouterr().out == first


def test_generate_json_output(story_file, capsys):
    assert main(["generate", str(story_file), "--no-filter", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["plantuml"] == SIMPLE_PLANTUML
    assert payload["corrected_text"] == SIMPLE_STORY
    assert [a["key"] for a in payload["filtered_model"]["actors"]] == ["customer"]


def test_generate_out_file_and_save_project(story_file, tmp_path, capsys):
    out = tmp_path / "diagram.puml"
    proj = tmp_path / "project.json"
    code = main(["generate", str(story_file), "--no-filter",
                 "--out", str(out), "--save-project", str(proj)])
    assert code == 0
    assert out.read_text() == SIMPLE_PLANTUML
    assert json.loads(proj.read_text())["schema_version"] == 1


def test_generate_custom_system_name(story_file, capsys):
    main(["generate", str(story_file), "--no-filter", "--system", "Web Shop"])
    assert 'rectangle "Web Shop" {' in capsys.readouterr().out


def test_generate_missing_file_is_input_error(capsys):
    assert main(["generate", "/nonexistent/story.txt"]) == 1


def test_unknown_subcommand_exits_one(capsys):
    assert main(["frobnicate"]) == 1


def test_train_then_generate_with_model(story_file, tmp_path, capsys):
    dataset = tmp_path / "data.csv"
    dataset.write_text("phrase,label\nbuy product,true\noil change,false\n")
    model_path = tmp_path / "model.bin"
    assert main(["train", "--data", str(dataset), "--alpha", "0.5",
                 "--out", str(model_path)]) == 0
    capsys.readouterr()
    assert main(["generate", str(story_file), "--model", str(model_path)]) == 0
    assert capsys.readouterr().out == SIMPLE_PLANTUML


def test_evaluate_prints_count_table(capsys):
    assert main(["evaluate", "--no-filter"]) == 0
    out = capsys.readouterr().out
    assert "user stories" in out and "8" in out
    assert "actual actors" in out and "15" in out
    assert "identified actors" in out and "(86.67%)" in out
    assert "identified use cases" in out and "(71.43%)" in out


def test_evaluate_ml_test_table(tmp_path, capsys):
    test_csv = tmp_path / "test.csv"
    test_csv.write_text("phrase,label\nbuy product,true\noil change,false\n")
    assert main(["evaluate", "--no-filter", "--ml-test", str(test_csv)]) == 0
    out = capsys.readouterr().out
    assert "accuracy" in out and "f1" in out and "TP" in out


def test_evaluate_report_dir_writes_csv_and_figures(tmp_path, capsys):
    test_csv = tmp_path / "test.csv"
    test_csv.write_text("phrase,label\nbuy product,true\noil change,false\n")
    report_dir = tmp_path / "report"
    assert main(["evaluate", "--no-filter", "--ml-test", str(test_csv),
                 "--report-dir", str(report_dir)]) == 0
    names = sorted(p.name for p in report_dir.iterdir())
    assert names == ["confusion_matrix.png", "extraction_report.csv",
                     "extraction_report.png", "ml_metrics.csv"]
    header, actors_row, ucs_row = (report_dir / "extraction_report.csv").read_text().splitlines()
    assert header == "category,actual,identified,pct"
    assert actors_row == "actors,15,13,86.67"
    assert ucs_row == "use_cases,28,20,71.43"
    assert (report_dir / "extraction_report.png").stat().st_size > 1000


def test_edit_repl_round_trip(story_file, tmp_path, capsys, monkeypatch):
    import io
    save_path = tmp_path / "project.json"
    commands = "\n".join([
        "add-actor Manager",
        'add-usecase manager "approve invoice"',
        "show",
        "uml",
        "undo",
        "quit",
    ]) + "\n"
    monkeypatch.setattr("sys.stdin", io.StringIO(commands))
    assert main(["edit", str(story_file), "--no-filter", "--save", str(save_path)]) == 0
    out = capsys.readouterr().out
    assert "revision 1" in out and "revision 2" in out
    assert "Manager" in out and "approve invoice" in out
    assert save_path.exists()
    payload = json.loads(save_path.read_text())
    assert payload["session"]["revision"] == 1
    keys = [a["key"] for a in payload["session"]["model"]["actors"]]
    assert keys == ["customer", "manager"]


def test_edit_repl_reports_errors(story_file, capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("remove-actor ghost\nquit\n"))
    assert main(["edit", str(story_file), "--no-filter"]) == 0
    assert "no actor with key 'ghost'" in capsys.readouterr().err


# --- HTTP API ----------------------------------------------------------------

def create_project(client, story=SIMPLE_STORY, **extra):
    response = client.post("/api/projects", json={"story": story,
                                                  "filter": False, **extra})
    assert response.status_code == 201
    return response.json()


def test_post_project_reference_block(client):
    created = create_project(client)
    assert created["result"]["plantuml"] == SIMPLE_PLANTUML
    assert created["revision"] == 0
    assert created["project_id"]


def test_get_project_round_trip(client):
    created = create_project(client, story=CAR_REPAIR_STORY)
    fetched = client.get(f"/api/projects/{created['project_id']}")
    assert fetched.status_code == 200
    assert fetched.json()["result"] == created["result"]
    assert fetched.json()["revision"] == 0


def test_get_unknown_project_404(client):
    response = client.get("/api/projects/nope")
    assert response.status_code == 404
    assert response.json()["code"] == "unknown_project"


def test_edit_rename_actor(client):
    created = create_project(client)
    pid = created["project_id"]
    response = client.post(f"/api/projects/{pid}/edits", json={
        "expected_revision": 0,
        "command": {"kind": "rename_actor", "key": "customer", "new_name": "Client"},
    })
    assert response.status_code == 200
    body = response.json()
    assert body["revision"] == 1
    assert 'actor "Client"' in body["plantuml"]
    assert body["plantuml"] == emit_plantuml(model_from_dict(body["model"]))
    plain = client.get(f"/api/projects/{pid}/plantuml")
    assert plain.status_code == 200
    assert plain.text == body["plantuml"]


def test_edit_with_stale_revision_conflicts(client):
    created = create_project(client)
    pid = created["project_id"]
    command = {"kind": "add_actor", "name": "Manager"}
    first = client.post(f"/api/projects/{pid}/edits",
                        json={"expected_revision": 0, "command": command})
    assert first.status_code == 200
    second = client.post(f"/api/projects/{pid}/edits",
                         json={"expected_revision": 0,
                               "command": {"kind": "add_actor", "name": "Owner"}})
    assert second.status_code == 409
    assert second.json()["code"] == "revision_conflict"


def test_edit_validation_maps_to_422(client):
    created = create_project(client)
    pid = created["project_id"]
    response = client.post(f"/api/projects/{pid}/edits", json={
        "expected_revision": 0,
        "command": {"kind": "add_actor", "name": "Customer"},
    })
    assert response.status_code == 422
    assert response.json()["code"] == "duplicate_actor"
    response = client.post(f"/api/projects/{pid}/edits", json={
        "expected_revision": 0,
        "command": {"kind": "warp_core", "name": "x"},
    })
    assert response.status_code == 422
    assert response.json()["code"] == "invalid_command"


def test_reassign_on_car_repair_moves_arrow(client):
    created = create_project(client, story=CAR_REPAIR_STORY)
    pid = created["project_id"]
    response = client.post(f"/api/projects/{pid}/edits", json={
        "expected_revision": 0,
        "command": {"kind": "reassign_use_case", "phrase": "schedule appointment",
                    "from_key": "receptionist", "to_key": "customer"},
    })
    assert response.status_code == 200
    model = model_from_dict(response.json()["model"])
    assert [uc.phrase for uc in model.associations["customer"]] == [
        "call shop", "schedule appointment"]


def test_undo_endpoint(client):
    created = create_project(client)
    pid = created["project_id"]
    client.post(f"/api/projects/{pid}/edits",
                json={"expected_revision": 0,
                      "command": {"kind": "add_actor", "name": "Manager"}})
    response = client.post(f"/api/projects/{pid}/undo")
    assert response.status_code == 200
    assert response.json()["revision"] == 0
    empty = client.post(f"/api/projects/{pid}/undo")
    assert empty.status_code == 422
    assert empty.json()["code"] == "nothing_to_undo"


def test_delete_project(client):
    created = create_project(client)
    pid = created["project_id"]
    assert client.delete(f"/api/projects/{pid}").status_code == 204
    assert client.get(f"/api/projects/{pid}").status_code == 404


def test_get_does_not_change_revision(client):
    created = create_project(client)
    pid = created["project_id"]
    for _ in range(3):
        assert client.get(f"/api/projects/{pid}").json()["revision"] == 0
        client.get(f"/api/projects/{pid}/plantuml")
    assert client.get(f"/api/projects/{pid}").json()["revision"] == 0


def test_projects_persist_across_app_restarts(tmp_path):
    data_dir = tmp_path / "store"
    with TestClient(create_app(data_dir=data_dir)) as first:
        created = create_project(first)
        pid = created["project_id"]
        first.post(f"/api/projects/{pid}/edits",
                   json={"expected_revision": 0,
                         "command": {"kind": "add_actor", "name": "Manager"}})
    with TestClient(create_app(data_dir=data_dir)) as second:
        fetched = second.get(f"/api/projects/{pid}")
        assert fetched.status_code == 200
        assert fetched.json()["revision"] == 1
        keys = [a["key"] for a in fetched.json()["result"]["filtered_model"]["actors"]]
        assert keys == ["customer", "manager"]


def test_pipeline_error_becomes_diagnostic_not_500(client):
    created = create_project(client, story="He buys a product.")
    diagnostics = created["result"]["diagnostics"]
    assert any(d["severity"] == "error" for d in diagnostics)
    assert created["result"]["filtered_model"]["actors"] == []
