import random
from collections import deque

import pytest
from hypothesis import given
from hypothesis import strategies as st

from floodit.core import Board, ColouredGraph, FloodState, apply_sequence
from floodit.oracle import solve_free_exact
from floodit.solvers import approx_board, solve_path, solve_two_colour

from conftest import boards, path_colourings, random_two_coloured_graph


def _radius_by_bfs(graph):
    best = None
    for source in range(graph.vertex_count):
        dist = {source: 0}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for w in graph.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        best = max(dist.values()) if best is None else min(best, max(dist.values()))
    return best


class TestTwoColour:
    def test_star_floods_in_one(self):
        g = ColouredGraph(2, (0, 1, 1, 1), {(0, 1), (0, 2), (0, 3)})
        result = solve_two_colour(g)
        assert result.optimum == 1
        assert result.centre == 0

    def test_alternating_five_path(self):
        g = ColouredGraph(2, (0, 1, 0, 1, 0), {(i, i + 1) for i in range(4)})
        result = solve_two_colour(g)
        assert result.optimum == 2 == solve_free_exact(g).optimum

    def test_single_vertex(self):
        assert solve_two_colour(ColouredGraph(2, (1,), frozenset())).optimum == 0

    def test_three_colours_rejected(self):
        with pytest.raises(ValueError):
            solve_two_colour(ColouredGraph(3, (0, 1, 2), {(0, 1), (1, 2)}))

    def test_two_colours_with_sparse_ids(self):
        g = ColouredGraph(3, (0, 2, 0), {(0, 1), (1, 2)})
        result = solve_two_colour(g)
        assert result.optimum == 1
        assert apply_sequence(FloodState.from_graph(g), result.witness).flooded

    def test_improper_input_contracted_first(self):
        g = ColouredGraph(2, (0, 0, 1), {(0, 1), (1, 2)})
        assert solve_two_colour(g).optimum == 1

    def test_random_graphs_match_radius_and_oracle(self):
        rng = random.Random(37)
        for _ in range(40):
            g = random_two_coloured_graph(rng, rng.randint(1, 10))
            result = solve_two_colour(g)
            assert result.optimum == _radius_by_bfs(g)
            assert result.optimum == solve_free_exact(g).optimum
            final = apply_sequence(FloodState.from_graph(g), result.witness)
            assert final.flooded
            assert all(m.vertex == result.centre for m in result.witness)


class TestPath:
    def test_single_cell(self):
        assert solve_path([0]) == 0

    def test_short_palindrome(self):
        assert solve_path([0, 1, 0]) == 1

    def test_rainbow(self):
        assert solve_path([0, 1, 2]) == 2

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            solve_path([])

    def test_target_variant(self):
        assert solve_path([0, 1, 0], target=0) == 1
        assert solve_path([0, 1, 0], target=1) == 2
        assert solve_path([0], target=1) == 1

    @given(path_colourings())
    def test_matches_oracle(self, colours):
        n = len(colours)
        graph = ColouredGraph(
            max(colours) + 1, tuple(colours), frozenset((i, i + 1) for i in range(n - 1))
        )
        assert solve_path(colours) == solve_free_exact(graph).optimum

    @given(path_colourings(max_length=8))
    def test_deleting_a_vertex_never_hurts(self, colours):
        cc = max(colours) + 1
        for d in range(cc):
            base = solve_path(colours, target=d)
            for i in range(len(colours)):
                if len(colours) > 1:
                    shorter = colours[:i] + colours[i + 1:]
                    assert solve_path(shorter, target=d) <= base

    @given(path_colourings(max_length=8))
    def test_concatenation_subadditive(self, colours):
        cc = max(colours) + 1
        for d in range(cc):
            whole = solve_path(colours, target=d)
            for i in range(1, len(colours)):
                left = solve_path(colours[:i], target=d)
                right = solve_path(colours[i:], target=d)
                assert whole <= left + right


class TestApprox:
    def test_line_board_bound_is_tight(self):
        result = approx_board(Board(1, 3, 3, (0, 1, 0)))
        assert (result.lower, result.upper) == (1, 1)

    def test_checkerboard(self):
        board = Board(2, 2, 2, (0, 1, 1, 0))
        result = approx_board(board)
        assert (result.lower, result.upper) == (1, 3)
        exact = solve_free_exact(FloodState.from_board(board).graph).optimum
        assert exact == 2
        assert result.lower <= exact <= result.upper

    def test_monochromatic_board(self):
        result = approx_board(Board(3, 4, 2, (1,) * 12))
        assert result.lower == 0
        assert result.upper == 1 * (3 - 1)
        assert result.witness == ()

    @given(boards(min_colours=2))
    def test_sandwich_and_witness(self, board):
        result = approx_board(board)
        present = len(set(board.cells))
        assert result.upper == result.lower + present * (board.height - 1)
        exact = solve_free_exact(FloodState.from_board(board).graph).optimum
        assert result.lower <= exact <= result.upper
        final = apply_sequence(FloodState.from_board(board), result.witness)
        assert final.flooded
        assert len(result.witness) <= result.upper
