"""Acceptance suite: one test per exit criterion, exact tolerances throughout.

Every expected value is either computed by an independent oracle inside the
test (exhaustive enumeration, object-level linear algebra) or frozen from a
hand evaluation.  Run with ``pytest tests/test_acceptance.py -v -s`` to see
one pass line with wall-clock time per criterion.
"""

import itertools
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from conftest import gabidulin_family
from rankcodes import bounds as bnd
from rankcodes import cli
from rankcodes.codes import (
    analyze,
    cartesian_power,
    default_generator_vector,
    iter_codewords,
    make_code,
    make_gabidulin,
)
from rankcodes.counting import count_rank_weight
from rankcodes.coverage import covering_radius, find_extension_vector, is_maximal
from rankcodes.field import make_field
from rankcodes.linalg import RankVector, rank_distance, rank_weight


@contextmanager
def criterion(num, desc):
    """Print exactly one pass/fail line for the criterion, with wall time."""
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {num}: {desc} ({time.perf_counter() - t0:.2f}s)")
        raise
    print(f"PASS criterion {num}: {desc} ({time.perf_counter() - t0:.2f}s)")


def _gab(field, n, k, a=1):
    return make_gabidulin(field, default_generator_vector(field, n), k, a)


def _square_cartesians():
    """Cartesian powers of n = m MRD codes within the 2^26 ambient budget."""
    out = []
    for m, ls in ((2, (2, 3, 4)), (3, (2,))):
        field = make_field(2, m)
        for k in range(1, m + 1):
            for l in ls:
                out.append(cartesian_power(_gab(field, m, k), l))
    return out


def test_criterion_1_counting_oracle():
    t0 = time.perf_counter()
    for m in range(1, 4):
        field = make_field(2, m)
        for n in range(1, 4):
            hist = [0] * (min(n, m) + 1)
            for codes in itertools.product(range(field.order), repeat=n):
                hist[rank_weight(RankVector.from_ints(field, codes))] += 1
            for w, observed in enumerate(hist):
                assert count_rank_weight(2, m, n, w).value == observed, (m, n, w)
    for q in (2, 3):
        for m in range(1, 7):
            for n in range(1, 7):
                total = sum(
                    count_rank_weight(q, m, n, w).value for w in range(min(n, m) + 1)
                )
                assert total == q ** (m * n), (q, m, n)
    _passed(1, "rank counts match exhaustive enumeration; total mass exact", t0)


def test_criterion_2_mrd_attainment():
    t0 = time.perf_counter()
    checked = 0
    for code in gabidulin_family(max_m=4):
        ana = analyze(code)
        assert ana.d_rank == code.n - code.k + 1, code
        assert ana.d_rank == ana.singleton_dmax and ana.is_mrd, code
        checked += 1
    assert checked == 36  # every (m, n, k, a) combination with m <= 4
    _passed(2, f"d_rank = n-k+1 = Singleton cap for all {checked} Gabidulin codes", t0)


def test_criterion_3_mrd_codes_are_maximal():
    t0 = time.perf_counter()
    checked = 0
    for code in gabidulin_family(max_m=4):
        assert code.field.order**code.n <= 1 << 26
        assert is_maximal(code), code
        checked += 1
    for code in _square_cartesians():
        assert is_maximal(code), code
        checked += 1
    _passed(3, f"all {checked} MRD instances are maximal codes", t0)


def test_criterion_4_cartesian_cube_not_maximal():
    t0 = time.perf_counter()
    field = make_field(2, 3)
    cube = cartesian_power(_gab(field, 2, 1), 3)
    witness = find_extension_vector(cube)
    assert witness is not None and len(witness) == 6
    words = list(iter_codewords(cube))
    assert len(words) == 512
    # independent re-check through object-level linear algebra
    assert min(rank_distance(witness, c) for c in words) >= 2
    assert not is_maximal(cube)
    _passed(4, f"C^3 over GF(8) admits extension vector {witness.to_ints()}", t0)


def test_criterion_5_covering_radius_of_gabidulin_codes():
    t0 = time.perf_counter()
    for code in gabidulin_family(max_m=4):
        rep = covering_radius(code)
        assert rep.radius == code.n - code.k, code
    gf4 = make_field(2, 2)
    rep_code = make_code(gf4, [(gf4.one(),) * 3])
    assert covering_radius(rep_code).radius == 2  # n - 1, over the maximal cap
    _passed(5, "r = n-k for every Gabidulin code; repetition code hits n-1", t0)


def test_criterion_6_supercode_chain():
    t0 = time.perf_counter()
    from rankcodes.coverage import translate_weights

    cases = [(make_field(2, 3), (2, 3)), (make_field(2, 4), (3, 4))]
    for field, lengths in cases:
        for n in lengths:
            for k in range(1, n):
                small, big = _gab(field, n, k), _gab(field, n, k + 1)
                tw = translate_weights(big, small)
                r = covering_radius(small).radius
                d_big = analyze(big).d_rank
                assert r >= tw.big_m >= tw.little_m >= d_big, (field.m, n, k)
    _passed(6, "r(C_k) >= M >= m >= d(C_{k+1}) on nested Gabidulin chains", t0)


def test_criterion_7_asymptotic_points_symmetry_ordering():
    t0 = time.perf_counter()
    assert bnd.asym_sphere_packing(1, 1) == Fraction(1, 4)
    assert bnd.asym_gv(1, 1) == 0
    assert bnd.asym_singleton(1, 1) == 0
    step = Fraction(1, 100)
    for b in (Fraction(1, 4), Fraction(4)):
        top = min(1, 1 / b)
        d = Fraction(0)
        while d <= top:
            assert bnd.asym_gv(b, d) == bnd.asym_gv(1 / b, b * d)
            assert bnd.asym_sphere_packing(b, d) == bnd.asym_sphere_packing(1 / b, b * d)
            d += step
    for b in (Fraction(1, 4), Fraction(1), Fraction(4)):
        for p in bnd.asym_curve(b, step):
            assert p.gv <= p.singleton <= p.sphere_packing
            if p.delta > 0:
                assert p.singleton < p.sphere_packing
    _passed(7, "point values, transpose symmetry, and ordering all exact", t0)


def test_criterion_8_figure4_reproduction(capsys, tmp_path):
    t0 = time.perf_counter()
    out = tmp_path / "f4.csv"
    assert cli.main(["figure", "--id", "vectors32", "--out", str(out)]) == 0
    capsys.readouterr()
    lines = out.read_text().splitlines()
    assert lines[0] == "r,rank_count,hamming_count"
    rows = [tuple(int(c) for c in ln.split(",")) for ln in lines[1:]]
    assert len(rows) == 33
    assert rows[1] == (1, (2**32 - 1) ** 2, 32 * (2**32 - 1))
    for r, rank_count, ham_count in rows[1:32]:
        assert rank_count > ham_count, r
    assert sum(r[1] for r in rows) == 2**1024
    assert sum(r[2] for r in rows) == 2**1024
    _passed(8, "exact 33-row table; rank counts dominate; both sum to 2^1024", t0)


def test_criterion_9_finite_bound_sandwich():
    t0 = time.perf_counter()
    codes = list(gabidulin_family(max_m=4)) + _square_cartesians()
    for code in codes:
        d = analyze(code).d_rank
        rep = bnd.finite_bounds(code.field.q, code.field.m, code.n, d)
        size = Fraction(code.size)
        assert rep.gilbert_lower <= size <= rep.sphere_packing_upper, code
    _passed(9, f"gilbert <= |C| <= sphere-packing for all {len(codes)} codes", t0)


def test_criterion_10_determinism(capsys, tmp_path):
    t0 = time.perf_counter()
    base = tmp_path / "base.code"
    cube = tmp_path / "cube.code"
    assert cli.main(
        ["mkcode", "gabidulin", "--field", "2^3", "--n", "2", "--k", "1",
         "--out", str(base)]
    ) == 0
    assert cli.main(
        ["mkcode", "cartesian", "--base", str(base), "--l", "3", "--out", str(cube)]
    ) == 0
    sup = tmp_path / "sup.code"
    assert cli.main(
        ["mkcode", "gabidulin", "--field", "2^3", "--n", "2", "--k", "2",
         "--out", str(sup)]
    ) == 0
    capsys.readouterr()

    suite = [
        ["count", "--q", "2", "--m", "3", "--n", "3", "--w", "2"],
        ["figure", "--id", "bounds-b1"],
        ["figure", "--id", "vectors32"],
        ["analyze", "--code", str(base)],
        ["weights", "--code", str(cube)],
        ["maximal", "--code", str(cube)],
        ["covering", "--code", str(cube)],
        ["translate", "--sub", str(base), "--super", str(sup)],
    ]

    def run_suite():
        chunks = []
        for argv in suite:
            assert cli.main(list(argv)) == 0
            chunks.append(capsys.readouterr().out)
        return "".join(chunks)

    first, second = run_suite(), run_suite()
    assert first == second

    # parallel vs single-threaded covering radius, library and CLI level
    code_obj = cartesian_power(
        _gab(make_field(2, 3), 2, 1), 3
    )
    assert covering_radius(code_obj, workers=1) == covering_radius(code_obj, workers=4)
    outs = []
    for w in ("1", "4"):
        assert cli.main(["covering", "--code", str(cube), "--workers", w]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]

    # and once through a real process, to cover the installed entry point
    cmd = [sys.executable, "-m", "rankcodes.cli", "figure", "--id", "bounds-b025"]
    r1 = subprocess.run(cmd, capture_output=True, check=True)
    r2 = subprocess.run(cmd, capture_output=True, check=True)
    assert r1.stdout == r2.stdout and r1.stdout
    _passed(10, "byte-identical reports across runs and worker counts", t0)
