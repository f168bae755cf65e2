"""Square-code construction, grid relations, rank lemma, optimal distance."""

from __future__ import annotations

from random import Random

import pytest

from locrep import (
    DomainError,
    GF2m,
    LemmaCheck,
    LinearCode,
    build_square_code,
    check_rank_lemma,
    coordinate_of,
    grid_of,
    grid_regsets,
    min_distance,
    s_value,
    verify_grid_relations,
    verify_locality,
    verify_optimal_distance,
)

from oracles import gf2_rank, random_admissible_grid_subset


def test_grid_coordinate_bijection():
    for r in (2, 3, 5):
        seen = set()
        for i in range(1, r + 2):
            for j in range(1, r + 2):
                c = coordinate_of(r, i, j)
                assert grid_of(r, c) == (i, j)
                seen.add(c)
        assert seen == set(range(1, (r + 1) ** 2 + 1))
    with pytest.raises(DomainError):
        coordinate_of(2, 0, 1)
    with pytest.raises(DomainError):
        grid_of(2, 10)


def test_build_square_r2_m3_betas(square_r2_m3):
    sc = square_r2_m3
    # first basis monomials inside, zero-sum boundary outside
    assert sc.betas[0][:2] == (1, 2)
    assert sc.betas[1][:2] == (4, 8)
    assert sc.betas[0][2] == 3  # 1 + z: characteristic-2 negation is identity
    assert sc.code.n == 9 and sc.code.M == 3
    assert sc.field.degree == 4


def test_build_rejects_bad_parameters():
    with pytest.raises(DomainError):
        build_square_code(1, 2)
    with pytest.raises(DomainError):
        build_square_code(2, 2)  # below r+1
    with pytest.raises(DomainError):
        build_square_code(2, 5)  # above r^2
    with pytest.raises(DomainError):
        build_square_code(2, 3, field=GF2m(3))  # degree < r^2


def test_build_accepts_larger_field():
    # the degree may exceed r^2; the construction only needs r^2
    # independent elements
    sc = build_square_code(2, 3, field=GF2m(5))
    assert verify_grid_relations(sc)
    assert verify_locality(sc.code, 2, 3)


def test_grid_relations_hold_by_construction(square_r2_m3, square_r2_m4, square_r3_m9):
    for sc in (square_r2_m3, square_r2_m4, square_r3_m9):
        assert verify_grid_relations(sc)


def test_grid_relations_detect_perturbation(square_r2_m3):
    sc = square_r2_m3
    cols = [list(col) for col in sc.code.columns]
    cols[4][0] ^= 1  # add a basis vector to one column
    broken = LinearCode(sc.field, sc.code.n, sc.code.M, cols)
    from locrep.square import SquareCode

    perturbed = SquareCode(
        r=sc.r, M=sc.M, field=sc.field, betas=sc.betas, code=broken
    )
    assert not verify_grid_relations(perturbed)


def test_grid_regsets_cell_11(square_r2_m3):
    row, col = grid_regsets(square_r2_m3, 1, 1)
    assert row.sorted_members() == (1, 2, 3)
    assert col.sorted_members() == (1, 4, 7)
    assert row.members & col.members == {1}


def test_grid_regsets_sizes_and_intersections(square_r3_m9):
    sc = square_r3_m9
    for i in range(1, sc.r + 2):
        for j in range(1, sc.r + 2):
            row, col = grid_regsets(sc, i, j)
            assert len(row.members) == sc.r + 1
            assert len(col.members) == sc.r + 1
            target = coordinate_of(sc.r, i, j)
            assert row.members & col.members == {target}


def test_rank_lemma_example_holds(square_r2_m3):
    # rows 1 and 2 minus one cell each, row 3 untouched
    X = {1, 2, 4, 5}
    assert check_rank_lemma(square_r2_m3, X) is LemmaCheck.HOLDS


def test_rank_lemma_hypotheses_unmet(square_r2_m3):
    assert check_rank_lemma(square_r2_m3, set()) is LemmaCheck.HYPOTHESES_UNMET
    # touches all three grid rows
    all_rows = {1, 4, 7}
    assert (
        check_rank_lemma(square_r2_m3, all_rows) is LemmaCheck.HYPOTHESES_UNMET
    )
    # one full row of r+1 cells exceeds the per-row cap
    full_row = {1, 2, 3, 4}
    assert (
        check_rank_lemma(square_r2_m3, full_row) is LemmaCheck.HYPOTHESES_UNMET
    )


def test_rank_lemma_random_admissible_subsets(square_r2_m4, square_r3_m9):
    rng = Random(83)
    for sc in (square_r2_m4, square_r3_m9):
        for _ in range(200):
            X = random_admissible_grid_subset(rng, sc.r, sc.M)
            assert check_rank_lemma(sc, X) is LemmaCheck.HOLDS


def test_row_spaces_sum_directly():
    # dropping any one grid row leaves beta values spanning everything
    for r, M in ((2, 3), (3, 9)):
        sc = build_square_code(r, M)
        for omit in range(r + 1):
            vecs = [
                sc.betas[i][j]
                for i in range(r + 1)
                if i != omit
                for j in range(r + 1)
            ]
            assert gf2_rank(vecs) == r * r


def test_optimal_distance_r2(square_r2_m3, square_r2_m4):
    assert verify_optimal_distance(square_r2_m3)
    assert verify_optimal_distance(square_r2_m4)


def test_optimal_distance_r3_m9(square_r3_m9):
    # s = 4, so the distance must come out at 16 - 9 + 1 - 4 = 4
    assert s_value(9, 3) == 4
    assert verify_optimal_distance(square_r3_m9)


def test_built_codes_are_repairable(square_r2_m3, square_r3_m9):
    for sc in (square_r2_m3, square_r3_m9):
        assert min_distance(sc.code) >= 2


def test_locality_of_built_codes(square_r2_m3, square_r2_m4):
    for sc in (square_r2_m3, square_r2_m4):
        assert verify_locality(sc.code, sc.r, 3)
