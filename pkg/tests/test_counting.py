import math

from nakayama.algebra import make_cyclic, make_gamma, make_linear, quotient_by_idempotent
from nakayama.counting import (
    CountReport,
    catalan,
    central_binomial,
    count_gamma_recurrence,
    count_stt_gamma2_jasso,
    enumerated_counts,
    verify_tables,
)
from nakayama.sequences import enumerate_Z
from nakayama.tautilt import enumerate_stt, enumerate_tau_tilt
from nakayama.verify import valid_linear_series


def test_catalan_values():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_central_binomial_values():
    assert central_binomial(5) == 252
    assert central_binomial(0) == 1


def test_gamma_recurrence_values():
    assert count_gamma_recurrence(4, 3) == 9
    assert count_gamma_recurrence(5, 2) == 8
    for r in range(1, 6):
        assert count_gamma_recurrence(1, r) == 1
    # hereditary diagonal
    for n in range(1, 6):
        assert count_gamma_recurrence(n, n) == catalan(n)


def test_jasso_recurrence_values():
    assert count_stt_gamma2_jasso(3) == 12
    assert count_stt_gamma2_jasso(4) == 29
    assert count_stt_gamma2_jasso(5) == 70


def test_verify_tables_all_ok():
    reports = verify_tables()
    assert len(reports) == 50
    assert all(r.ok for r in reports)


def test_table_spot_values():
    tt, _, stt = enumerated_counts(make_cyclic(5, 3))
    assert (tt, stt) == (31, 132)
    tt, _, stt = enumerated_counts(make_gamma(5, 4))
    assert (tt, stt) == (28, 118)
    for n in range(1, 6):
        assert enumerated_counts(make_cyclic(n, 1))[2] == 2 ** n


def test_self_injective_closed_form():
    for n in range(1, 7):
        assert len(enumerate_stt(make_cyclic(n, n))) == central_binomial(n)


def test_hereditary_tilting_catalan():
    for n in range(1, 8):
        alg = make_linear(list(range(1, n + 1)))
        assert len(enumerate_tau_tilt(alg)) == catalan(n)


def test_sequence_count_identities():
    for n in range(1, 7):
        size = len(enumerate_Z(n))
        assert size == math.comb(2 * n - 1, n - 1)
        assert 2 * size == central_binomial(n)


def test_source_projective_recurrence_general():
    # tau-tilting count = sum over reach of the source projective of
    # catalan-weighted counts of the truncated algebras
    pool = [
        ks
        for n in range(1, 6)
        for ks in valid_linear_series(n, 5)
        if make_linear(list(ks)).is_connected()
    ]
    assert len(pool) >= 20
    for ks in pool:
        alg = make_linear(list(ks))
        s = alg.source_vertex()
        total = 0
        for i in range(1, alg.loewy[s] + 1):
            killed = set(range(s, s - i, -1))
            sub = quotient_by_idempotent(alg, killed)
            total += catalan(i - 1) * len(enumerate_tau_tilt(sub))
        assert total == len(enumerate_tau_tilt(alg))


def test_report_formatting():
    rep = CountReport("cyclic n=3 r=3", (10, 10, 20), "enumerated", (10, 10, 20))
    assert rep.ok
    assert "ok" in str(rep)
    bad = CountReport("cyclic n=3 r=3", (10, 10, 20), "enumerated", (9, 11, 20))
    assert not bad.ok and "MISMATCH" in str(bad)
