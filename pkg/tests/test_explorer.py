import random

import pytest

from invlab import (
    SymMatGF2,
    Tournament,
    canonical_form,
    decode,
    dijoin,
    encode,
    enumerate_tournaments,
    family_to_matrix,
    replay,
    run_scan,
    scan_inv_lower_bound,
    scan_schur_3x3,
    scan_tmr_additivity,
    schur_probe,
    solve_inv,
    verify_dijoin_theorems,
    VertexFamily,
)
from invlab.explorer import _decycling_offdiag_masks, _rows_from_pair_mask

C3 = decode("3:101")


def _relabeled(T, sigma):
    return decode(
        f"{T.n};" + ",".join(f"{sigma[u]}>{sigma[v]}" for u, v in T.arcs())
    )


def test_canonical_form_is_relabeling_invariant():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randrange(1, 7)
        T = Tournament(n, rng.randrange(1 << (n * (n - 1) // 2)))
        sigma = list(range(n))
        rng.shuffle(sigma)
        assert canonical_form(T) == canonical_form(_relabeled(T, sigma))


def test_canonical_form_examples():
    forms = {canonical_form(_relabeled(C3, sigma)) for sigma in [[0, 1, 2], [1, 2, 0], [2, 1, 0]]}
    assert len(forms) == 1
    assert canonical_form(decode("3:111")) == canonical_form(decode("3:000"))
    with pytest.raises(ValueError):
        canonical_form(Tournament(9))
    with pytest.raises(TypeError):
        canonical_form(decode("3;0>1"))


def test_enumeration_counts():
    expected = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56}
    for n, count in expected.items():
        assert len(list(enumerate_tournaments(n))) == count
    assert len(list(enumerate_tournaments(3, up_to_iso=False))) == 8
    with pytest.raises(ValueError):
        list(enumerate_tournaments(8, up_to_iso=True))


def test_enumeration_matches_dedup_oracle_n_le_5():
    for n in range(1, 6):
        seen = {canonical_form(t) for t in enumerate_tournaments(n, up_to_iso=False)}
        reps = [encode(t) for t in enumerate_tournaments(n)]
        assert sorted(seen) == sorted(reps)
        assert len(set(reps)) == len(reps)


def test_verify_dijoin_theorems_small():
    report = verify_dijoin_theorems(max_each=3)
    assert report.violations == []
    assert report.inconclusive == []
    assert report.evidence["checks_run"]["dijoin-switch"] > 0
    assert report.evidence["checks_run"]["three-join-identity"] > 0


def test_transitive_first_operand_keeps_inv():
    for n2 in range(1, 4):
        for d2 in enumerate_tournaments(n2):
            j = dijoin(decode("2:1"), d2)
            assert solve_inv(j).value == solve_inv(d2).value


def test_switch_identity_c3_c3():
    assert solve_inv(dijoin(C3, C3)).value == 2 == solve_inv(dijoin(C3, C3)).value


def test_scan_tmr_additivity_small():
    report = scan_tmr_additivity(3, 3)
    assert report.violations == []
    assert report.evidence["counterexamples"] == []
    assert report.evidence["asserted_pairs"] > 0
    # evidence pairs at these sizes all come out additive
    assert report.evidence["evidence_equal"] == report.evidence["evidence_pairs"]


def test_scan_inv_lower_bound_small():
    report = scan_inv_lower_bound(3, 3)
    assert report.violations == []
    assert report.evidence["bound_counterexamples"] == []
    cells = report.evidence["equality_cells"]
    assert sum(cells.values()) == report.instances_checked


def test_reports_replay_identically():
    for report in [
        verify_dijoin_theorems(max_each=3),
        scan_tmr_additivity(3, 3),
        scan_inv_lower_bound(3, 3),
        scan_schur_3x3(n2_max=2),
    ]:
        again = replay(report)
        assert again.scope == report.scope
        assert again.instances_checked == report.instances_checked
        assert again.violations == report.violations
        assert again.evidence == report.evidence


def test_run_scan_rejects_unknown_id():
    with pytest.raises(ValueError, match="unknown scan"):
        run_scan("nope")


def test_schur_probe_block_diagonal():
    A = family_to_matrix(VertexFamily.from_sets(3, [[0, 1]]))
    M = SymMatGF2.block_diag(A, A)
    rec = schur_probe(C3, C3, M)
    assert rec.cross_zero
    assert rec.b_prime_decycles
    assert rec.a_prime_decycles_induced


def test_schur_probe_full_rank_3x3():
    # A-block of full rank: identity diagonal with one flipped pair
    rows = _rows_from_pair_mask(4, _decycling_offdiag_masks(dijoin(C3, decode("1:")))[0], 0b111)
    M = SymMatGF2(4, rows)
    rec = schur_probe(C3, decode("1:"), M)
    if rec.a_rank == 3:
        assert rec.a_prime_decycles_c3 is not None
        assert rec.a_prime_class is not None


def test_schur_probe_validates_input():
    with pytest.raises(ValueError):
        schur_probe(C3, C3, SymMatGF2.zeros(6))
    with pytest.raises(ValueError):
        schur_probe(C3, C3, SymMatGF2.zeros(5))


def test_schur_scan_sampled_matches_example():
    report = scan_schur_3x3(n2_max=3, samples=100, seed=0)
    assert report.violations == []
    # 2 classes of D1 x 4 of D2, 100 samples plus 2 optimal certificates each
    assert report.instances_checked == 102 * 8


def test_schur_scan_exhaustive_small():
    report = scan_schur_3x3(n2_max=2)
    assert all(v["name"] != "schur-rank-le-2-must-hold" for v in report.violations)
    assert all(v["name"] != "schur-safe-direction" for v in report.violations)


def test_decycling_matrix_enumeration_is_complete_and_sound():
    # every mask decycles; distinct orders give distinct masks
    T = decode("4:010011")
    masks = _decycling_offdiag_masks(T)
    assert len(masks) == 24 and len(set(masks)) == 24
    from invlab import is_decycling_matrix

    for mask in masks:
        M = SymMatGF2(4, _rows_from_pair_mask(4, mask, 0))
        assert is_decycling_matrix(T, M)


def test_theorem_checks_reduce_oriented_operands_to_tournaments():
    from invlab.explorer import _dijoin_pair_task

    # a non-tournament operand is extended (same inv) before the checks run
    res = _dijoin_pair_task(("3;0>1,1>2", "3:101", None))
    assert res["inconclusive"] == []
    for chk in res["checks"]:
        assert chk["expected"] == chk["observed"]

    res = _dijoin_pair_task(("4;0>1,1>2,2>3,3>0", "3:101", None))
    assert all(c["expected"] == c["observed"] for c in res["checks"])


def test_scans_parallel_match_sequential():
    seq = scan_tmr_additivity(3, 3)
    par = scan_tmr_additivity(3, 3, workers=2)
    assert seq.violations == par.violations
    assert seq.evidence == par.evidence
    assert seq.instances_checked == par.instances_checked
