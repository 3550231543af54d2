"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with the elapsed time and
the time budget, so ``pytest -v`` output doubles as a report. Run the module
directly (``python3 tests/test_acceptance.py``) for the lines alone.
"""

import itertools
import sys
import time
from contextlib import contextmanager

import pytest

from homhom.census import CliConfig, canonical_forms, enumerate_tournaments, run_census
from homhom.classifier import verify_against_bruteforce
from homhom.configurations import circular_tournament, cycle_c3, henson_B
from homhom.graph import (
    blowup,
    direct_power,
    embeds,
    empty_graph,
    is_isomorphic,
    is_strongly_connected,
    k_copies,
)
from homhom.homogeneity import check_minimal_witness, is_hh, refute_ph_via_K
from homhom.localorder import (
    all_words,
    is_local_order,
    is_local_order_by_forbidden,
    tournament_to_word,
    word_to_tournament,
    word_to_tournament_geometric,
)

C3 = cycle_c3()


_writer = print


@pytest.fixture(autouse=True)
def _terminal(request):
    # write through pytest's reporter so the lines survive output capture
    global _writer
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None:
        _writer = lambda line: (reporter.ensure_newline(), reporter.write_line(line))
    yield
    _writer = print


def _emit(line):
    _writer(line)


@contextmanager
def criterion(number, title, budget):
    """Time the body; fail when it raises or overruns ``budget`` seconds."""
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        _emit(f"FAIL [{number:2d}] {title} ({elapsed:.3f}s / {budget}s): {type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed <= budget
    _emit(f"{'PASS' if ok else 'FAIL'} [{number:2d}] {title} ({elapsed:.3f}s / {budget}s)")
    assert ok, f"criterion {number} took {elapsed:.3f}s, budget {budget}s"


def test_01_word_codec_figure():
    with criterion(1, "word 0101 arcs and isomorphism with 1011", 0.001):
        t = word_to_tournament("0101")
        one_based = {(u + 1, v + 1) for u, v in t.arcs}
        assert one_based == {(2, 1), (1, 3), (4, 1), (3, 2), (2, 4), (4, 3)}
        assert is_isomorphic(t, word_to_tournament("1011"))


def test_02_blowup_example():
    with criterion(2, "blowup(C3, (1,2,3)) has the 11 listed arcs", 0.001):
        g = blowup(C3, (1, 2, 3))
        s1, s23, s456 = [0], [1, 2], [3, 4, 5]
        expected = {(a, b) for a in s1 for b in s23}
        expected |= {(a, b) for a in s23 for b in s456}
        expected |= {(a, b) for a in s456 for b in s1}
        assert len(expected) == 11 and g.arcs == expected


def test_03_power_identity():
    with criterion(3, "direct_power(k C3, n) is (k^n 3^(n-1)) C3", 1.0):
        for k, n in [(1, 2), (1, 3), (2, 2)]:
            power = direct_power(k_copies(C3, k), n)
            assert is_isomorphic(power, k_copies(C3, k**n * 3 ** (n - 1))), (k, n)


def _hh_census(nmax):
    found = {}
    for n in range(1, nmax + 1):
        found[n] = [f for f in canonical_forms(n) if is_hh(f.graph())]
    return found


def _expected_hh(n):
    expected = [empty_graph(n)]
    if n % 3 == 0:
        expected.append(k_copies(C3, n // 3))
    return expected


def _check_census(found):
    for n, forms in found.items():
        graphs = [f.graph() for f in forms]
        expected = _expected_hh(n)
        assert len(graphs) == len(expected)
        assert all(any(is_isomorphic(g, e) for g in graphs) for e in expected)


def test_04_finite_classification_census():
    title = "HH census is I_n plus k C3 for n<=6, counts [1,1,2,1,1,2]"
    budgets = (10.0, 300.0)
    start = time.perf_counter()
    try:
        small = _hh_census(5)
        t_small = time.perf_counter() - start
        assert [len(small[n]) for n in range(1, 6)] == [1, 1, 2, 1, 1]
        _check_census(small)
        start = time.perf_counter()
        assert len(canonical_forms(6)) == 21480
        six = {6: [f for f in canonical_forms(6) if is_hh(f.graph())]}
        t_six = time.perf_counter() - start
        assert len(six[6]) == 2
        _check_census(six)
    except BaseException as exc:
        _emit(f"FAIL [ 4] {title}: {type(exc).__name__}: {exc}")
        raise
    ok = t_small <= budgets[0] and t_six <= budgets[1]
    _emit(f"{'PASS' if ok else 'FAIL'} [ 4] {title} "
          f"(n<=5 {t_small:.3f}s / {budgets[0]}s, n=6 {t_six:.3f}s / {budgets[1]}s)")
    assert ok


def test_05_oracle_cross_validation():
    with criterion(5, "verify_against_bruteforce(5) is empty over 634 classes", 30.0):
        assert sum(len(canonical_forms(n)) for n in range(1, 6)) == 634
        assert verify_against_bruteforce(5) == []


def test_06_minimal_witness_lemma():
    with criterion(6, "minimal witness items (1)-(4) for C3 blow-ups of size <= 6", 10.0):
        checked = 0
        for m in itertools.product(range(1, 5), repeat=3):
            if sum(m) > 6 or m == (1, 1, 1):
                continue
            report = check_minimal_witness(C3, m)
            assert report.lemma_holds, m
            assert not embeds(report.b_hat, C3)
            checked += 1
        assert checked == 19


def test_07_local_order_equivalence():
    with criterion(7, "local-order tests agree and the codec roundtrips on all 76 tournaments, n<=6", 60.0):
        seen = 0
        for n in range(1, 7):
            for t in enumerate_tournaments(n):
                seen += 1
                lo = is_local_order(t)
                assert lo == is_local_order_by_forbidden(t)
                if lo:
                    assert is_isomorphic(word_to_tournament(tournament_to_word(t)), t)
        assert seen == 76


def test_08_geometric_oracle():
    with criterion(8, "geometric and combinatorial codec agree on 510 words, both signs", 10.0):
        words = [w for n in range(1, 9) for w in all_words(n)]
        assert len(words) == 510
        for w in words:
            t = word_to_tournament(w)
            for side in (1, -1):
                assert word_to_tournament_geometric(w, side=side) == t, (w, side)


def test_09_ph_refutation():
    with criterion(9, "K certificate in S(5) gives an induced 2-path in the square", 5.0):
        s5 = circular_tournament(2)
        cert = refute_ph_via_K(s5)
        assert cert is not None
        square = direct_power(s5, 2)
        assert cert.verify(s5, square)
        assert not is_hh(square, cap=square.order)


def test_10_henson_antichain():
    with criterion(10, "henson_B(i) does not embed into henson_B(j); B_n strongly connected", 30.0):
        for i, j in itertools.combinations(range(1, 5), 2):
            assert not embeds(henson_B(i), henson_B(j)), (i, j)
        for n in range(1, 7):
            assert is_strongly_connected(henson_B(n)), n


def test_11_determinism(tmp_path):
    with criterion(11, "census nmax=5 with 1 and 8 workers is byte-identical", 60.0):
        preds = ("hh", "ph2", "homog", "tournament", "localorder")
        for fmt in ("csv", "json"):
            a, b = tmp_path / f"w1.{fmt}", tmp_path / f"w8.{fmt}"
            run_census(CliConfig(nmax=5, predicates=preds, out=a, format=fmt, workers=1))
            run_census(CliConfig(nmax=5, predicates=preds, out=b, format=fmt, workers=8))
            assert a.read_bytes() == b.read_bytes()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
