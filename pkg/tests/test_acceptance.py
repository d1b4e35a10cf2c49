"""Acceptance suite: one test per release criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import itertools
import json
import random
import time
from contextlib import contextmanager

import pytest
from fastapi.testclient import TestClient

from floodit.api import create_app
from floodit.connection import compute_table
from floodit.core import (
    ColouredGraph,
    FloodState,
    Move,
    apply_sequence,
    board_from_json,
    random_board,
)
from floodit.oracle import link_exact, solve_free_exact
from floodit.reduction import ScsInstance, verify_reduction
from floodit.service import GameService, ServiceConfig
from floodit.solvers import approx_board, solve_path, solve_two_colour

from conftest import random_proper_graph, random_spanning_subgraph, random_two_coloured_graph
from test_solvers import _radius_by_bfs


@contextmanager
def criterion(name, limit=None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"\n[acceptance] {name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    if limit is not None:
        assert elapsed < limit, f"{name} took {elapsed:.1f}s, limit {limit}s"
    print(f"\n[acceptance] {name}: PASS ({elapsed:.1f}s)")


@pytest.fixture(scope="module")
def dp_suite():
    """200 seeded random connected proper graphs (4-8 vertices, 2-3 colours) with tables."""
    rng = random.Random(0xF100D)
    suite = []
    for _ in range(200):
        graph = random_proper_graph(rng, 4, 8, rng.choice((2, 3)))
        suite.append((graph, compute_table(graph)))
    return suite


def test_dp_oracle_equivalence(dp_suite):
    with criterion("dp-oracle equivalence (200 graphs, all pairs and colours)", limit=60):
        for graph, table in dp_suite:
            for u in range(graph.vertex_count):
                for v in range(u, graph.vertex_count):
                    for d in range(graph.colour_count):
                        assert table.query_link(u, v, d) == link_exact(graph, u, v, d).optimum


def test_self_link_case_table(dp_suite):
    with criterion("self-link case table (0 iff own colour, else 1)"):
        for graph, table in dp_suite:
            for v in range(graph.vertex_count):
                for d in range(graph.colour_count):
                    expected = 0 if graph.colours[v] == d else 1
                    assert table.query_link(v, v, d) == expected


def test_two_colour_equals_radius():
    with criterion("two-colour optimum = radius = exhaustive (100 graphs)", limit=60):
        rng = random.Random(0x2C01)
        for _ in range(100):
            graph = random_two_coloured_graph(rng, rng.randint(1, 12))
            result = solve_two_colour(graph)
            assert result.optimum == _radius_by_bfs(graph)
            assert result.optimum == solve_free_exact(graph).optimum
            final = apply_sequence(FloodState.from_graph(graph), result.witness)
            assert final.flooded and final.moves_played == result.optimum


def test_path_solver():
    with criterion("path solver = exhaustive + deletion/concatenation laws (200 paths)",
                   limit=60):
        rng = random.Random(0x9A7B)
        for _ in range(200):
            n = rng.randint(1, 10)
            cc = rng.choice((2, 3))
            colours = [rng.randrange(cc) for _ in range(n)]
            graph = ColouredGraph(cc, tuple(colours),
                                  frozenset((i, i + 1) for i in range(n - 1)))
            assert solve_path(colours) == solve_free_exact(graph).optimum
            for d in range(cc):
                base = solve_path(colours, target=d)
                for i in range(n):
                    if n > 1:
                        assert solve_path(colours[:i] + colours[i + 1:], target=d) <= base
                for i in range(1, n):
                    left = solve_path(colours[:i], target=d)
                    right = solve_path(colours[i:], target=d)
                    assert base <= left + right


def test_triangle_and_subgraph(dp_suite):
    with criterion("triangle inequality on every edge + subgraph monotonicity (50 pairs)"):
        for graph, table in dp_suite:
            values = table.values
            for x, y in graph.edges:
                for d in range(graph.colour_count):
                    via = values[:, x, d][:, None] + values[y, :, d][None, :]
                    assert (values[:, :, d] <= via).all()
                    via = values[:, y, d][:, None] + values[x, :, d][None, :]
                    assert (values[:, :, d] <= via).all()
        rng = random.Random(0x5AB6)
        for graph, table in dp_suite[:50]:
            sub = random_spanning_subgraph(rng, graph)
            assert (compute_table(sub).values >= table.values).all()


def test_board_approximation_sandwich():
    with criterion("board approximation sandwich + witness replay (120 boards)", limit=120):
        rng = random.Random(0xB0A2D)
        for i in range(120):
            height = rng.randint(1, 3)
            width = rng.randint(1, 6)
            colours = rng.choice((2, 3))
            board = random_board(height, width, colours, seed=0xB0A2D + i)
            result = approx_board(board)
            present = len(set(board.cells))
            assert result.upper == result.lower + present * (height - 1)
            exact = solve_free_exact(FloodState.from_board(board).graph).optimum
            assert result.lower <= exact <= result.upper
            final = apply_sequence(FloodState.from_board(board), result.witness)
            assert final.flooded and len(result.witness) <= result.upper


def _small_instances():
    pieces = ["", "1", "2", "11", "12", "21", "22"]
    for k in (1, 2):
        for combo in itertools.combinations_with_replacement(pieces, k):
            for l in range(4):
                yield ScsInstance(combo, l)


def test_reduction_equivalence_fixed():
    with criterion("fixed-board reduction equivalence (all small instances)", limit=300):
        for instance in _small_instances():
            report = verify_reduction(instance, "fixed")
            assert not report.partial
            assert report.checks["flood_count_matches"], (instance, report.details)
            if report.scs_length <= instance.target_length:
                assert report.checks["sequence_floods"], (instance, report.details)
            assert report.passed


def test_free_board_structure():
    with criterion("free-board path-area structure 4l+7 + constructive replay"):
        for instance in _small_instances():
            report = verify_reduction(instance, "free")
            assert report.details["end_to_end_regions"] == 4 * instance.target_length + 7
            assert report.checks["area_lower_bound"]
            if report.scs_length <= instance.target_length:
                assert report.checks["sequence_floods"], (instance, report.details)
            assert report.passed


def test_service_replay_determinism(tmp_path):
    with criterion("service replay determinism (1000 API interactions)"):
        service = GameService(ServiceConfig(data_dir=tmp_path / "sessions"))
        client = TestClient(create_app(service))
        rng = random.Random(0x5E55)
        sessions = []
        for i in range(8):
            board = random_board(3, 4, 3, seed=900 + i)
            payload = {
                "board": {
                    "height": 3, "width": 4, "colours": 3,
                    "cells": [c + 1 for c in board.cells],
                },
                "variant": "fixed" if i % 2 else "free",
            }
            response = client.post("/games", json=payload)
            assert response.status_code == 200
            sessions.append(response.json()["id"])
        interactions = 0
        while interactions < 1000:
            sid = rng.choice(sessions)
            roll = rng.random()
            if roll < 0.25:
                response = client.post(f"/games/{sid}/undo")
            else:
                move = {"vertex": rng.randrange(12), "colour": rng.randint(1, 3)}
                response = client.post(f"/games/{sid}/moves", json=move)
            assert response.status_code in (200, 400, 409)
            interactions += 1
            # independently replay the persisted document
            doc = json.loads((tmp_path / "sessions" / f"{sid}.json").read_text())
            board = board_from_json(doc["board"])
            state = FloodState.from_board(board)
            for m in doc["history"]:
                if doc["variant"] == "fixed":
                    vertex = doc["pivot"]
                else:
                    vertex = m["vertex"]
                state = apply_sequence(state, [Move(vertex, m["colour"] - 1)])
            replayed = [state.colour_of(i) + 1 for i in range(len(board.cells))]
            assert replayed == doc["cells"], f"replay mismatch after {interactions} interactions"
