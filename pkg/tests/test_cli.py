import json


from floodit.cli import main

LINE = {"height": 1, "width": 3, "colours": 3, "cells": [1, 2, 1]}


def _write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_rand_board_is_reproducible(capsys):
    code, first = _run(capsys, "rand-board", "--height", "2", "--width", "3",
                       "--colours", "4", "--seed", "7")
    assert code == 0
    code, second = _run(capsys, "rand-board", "--height", "2", "--width", "3",
                        "--colours", "4", "--seed", "7")
    assert first == second
    doc = json.loads(first)
    assert doc["height"] == 2 and doc["width"] == 3
    assert all(1 <= c <= 4 for c in doc["cells"])


def test_solve_board(tmp_path, capsys):
    path = _write(tmp_path, "board.json", LINE)
    code, out = _run(capsys, "solve", path)
    doc = json.loads(out)
    assert code == 0
    assert doc["optimum"] == 1
    assert doc["witness"] == [{"vertex": 1, "colour": 1}]


def test_solve_fixed_with_pivot(tmp_path, capsys):
    path = _write(tmp_path, "board.json", LINE)
    code, out = _run(capsys, "solve", path, "--variant", "fixed", "--pivot", "0")
    assert json.loads(out)["optimum"] == 2
    code, out = _run(capsys, "solve", path, "--variant", "fixed", "--pivot", "1")
    assert json.loads(out)["optimum"] == 1


def test_solve_with_target(tmp_path, capsys):
    path = _write(tmp_path, "board.json", LINE)
    code, out = _run(capsys, "solve", path, "--target", "2")
    assert json.loads(out)["optimum"] == 2


def test_link_single_value(tmp_path, capsys):
    graph = {"colours": 2, "vertices": [1, 2, 1], "edges": [[0, 1], [1, 2]]}
    path = _write(tmp_path, "graph.json", graph)
    code, out = _run(capsys, "link", path, "--u", "0", "--v", "2", "--d", "1")
    assert code == 0 and json.loads(out) == 1
    code, out = _run(capsys, "link", path, "--u", "0", "--v", "2")
    assert json.loads(out) == 1


def test_link_full_table(tmp_path, capsys):
    graph = {"colours": 2, "vertices": [1, 2], "edges": [[0, 1]]}
    path = _write(tmp_path, "graph.json", graph)
    code, out = _run(capsys, "link", path, "--all")
    pairs = json.loads(out)["pairs"]
    assert {"u": 0, "v": 1, "d": 1, "m": 1} in pairs
    assert len(pairs) == 3 * 2  # unordered pairs incl. diagonal x colours


def test_approx(tmp_path, capsys):
    path = _write(tmp_path, "board.json", LINE)
    code, out = _run(capsys, "approx", path)
    doc = json.loads(out)
    assert (doc["lower"], doc["upper"]) == (1, 1)
    assert doc["witness"] == [{"vertex": 1, "colour": 1}]


def test_reduce_then_verify(tmp_path, capsys):
    instance = {"strings": ["1", "2"], "l": 2, "variant": "fixed"}
    path = _write(tmp_path, "instance.json", instance)
    code, out = _run(capsys, "reduce", path)
    doc = json.loads(out)
    assert code == 0
    assert doc["board"]["height"] == 3
    assert doc["claimed_threshold"] == 7
    assert doc["gadget_spans"]["mirror"] is None
    assert len(doc["gadget_spans"]["gadgets"]) == 2

    code, out = _run(capsys, "verify", path)
    report = json.loads(out)
    assert code == 0
    assert report["passed"]
    assert report["checks"]["flood_count_matches"]


def test_verify_free_variant(tmp_path, capsys):
    instance = {"strings": ["1"], "l": 1, "variant": "free"}
    path = _write(tmp_path, "instance.json", instance)
    code, out = _run(capsys, "verify", path)
    report = json.loads(out)
    assert report["passed"]
    assert report["checks"]["end_to_end_regions"]


def test_error_exit_codes(tmp_path, capsys):
    graph = {"colours": 2, "vertices": [1, 2], "edges": []}
    path = _write(tmp_path, "graph.json", graph)
    code, _ = _run(capsys, "link", path, "--u", "0", "--v", "1")
    assert code == 2

    board = _write(tmp_path, "board.json", {"height": 1, "width": 3, "colours": 3,
                                            "cells": [1, 2, 3]})
    code, _ = _run(capsys, "solve", board, "--budget", "1")
    assert code == 3
