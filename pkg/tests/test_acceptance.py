"""The ten acceptance criteria, each at its stated tolerance and time limit.

A one-line PASS/FAIL summary per criterion is printed at the end of the run
(see ``conftest.py``).
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import permutations
from math import comb

import pytest

from eqbs import schur
from eqbs.betti_tables import (
    CohomologyTable,
    MultBettiTable,
    PureTable,
    RankBettiTable,
    antichain_check,
    pairing,
    rank_defect,
)
from eqbs.bwb import Cohomology, Vanishes, cohomology
from eqbs.cone import (
    AntichainViolation,
    Member,
    NegativeEntry,
    NotMember,
    RankDefect,
    membership,
    resum,
)
from eqbs.efw import (
    ConditionFailed,
    Realization,
    box_setup,
    chain_realization,
    small_resolution,
    verify_linear_case,
)
from eqbs.schur import (
    MapType,
    cauchy_level,
    hom_dimension,
    lr_coefficient,
    map_type,
    partitions,
    pieri,
    ssyt_count,
    weyl_dim,
)
from eqbs.young_lattice import IdealSpec, Sequence, det_twist, enumerate_box, saturated_chain

from oracles import exhaustive_membership, greedy_lex_decomposition, lt

S = Sequence


@contextmanager
def within(seconds: float):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def rank_table(k, row0, row1):
    entries = {(0, S(lam)): v for lam, v in row0.items()}
    entries.update({(1, S(lam)): v for lam, v in row1.items()})
    return RankBettiTable(k, entries)


EXAMPLE = rank_table(3, {(1, 0, 0): 1, (2, 1, 0): 1}, {(3, 0, 0): 1, (1, 1, 1): 1})
FIXTURE_1 = rank_table(3, {(2, 1, 1): 1, (3, 1, 0): 1}, {(3, 1, 1): 1, (3, 2, 0): 1})
FIXTURE_2 = rank_table(3, {(2, 2, 0): 1, (3, 1, 0): 1}, {(3, 2, 0): 1, (3, 1, 1): 1})


@pytest.mark.criterion(1, "BWB fixtures for beta=(7,1,0), k=4")
def test_criterion_1_bwb_fixtures():
    with within(1):
        for d in (6, -1, -3):
            assert cohomology((7, 1, 0), d, 4) == Vanishes()
        h1 = cohomology((7, 1, 0), 1, 4)
        assert isinstance(h1, Cohomology)
        assert (h1.degree, h1.weight) == (1, S((6, 2, 1, 0)))
        h0 = cohomology((7, 1, 0), 0, 4)
        assert isinstance(h0, Cohomology)
        assert (h0.degree, h0.weight) == (1, S((6, 1, 1, 0)))


@pytest.mark.criterion(2, "EFW fixture box_setup((6,2,1,0), r=2)")
def test_criterion_2_efw_fixture():
    with within(1):
        data = box_setup((6, 2, 1, 0), 2)
        assert data.shapes == tuple(
            S(s) for s in [(1, 1, 1, 0), (6, 1, 1, 0), (6, 2, 1, 0), (6, 2, 2, 0), (6, 2, 2, 2)]
        )
        assert data.d == (6, 1, 0, -1, -3)
        assert data.beta == S((7, 1, 0))


@pytest.mark.criterion(3, "linear-case sweep k<=4, mu_1<=5, all rows")
def test_criterion_3_linear_case_sweep():
    checked = 0
    with within(30):
        for k in range(2, 5):
            for mu in enumerate_box(k, 0, 5):
                for r in range(1, k + 1):
                    below = mu[r] if r < k else 0
                    if mu[r - 1] == below:
                        continue
                    data = box_setup(mu, r)
                    R = verify_linear_case(data)
                    lam = data.lam
                    assert R.lo == lam and R.hi == mu
                    survivors = {}
                    for i, di in enumerate(data.d):
                        res = cohomology(data.beta, di, k)
                        if isinstance(res, Cohomology):
                            survivors[i] = res
                    assert set(survivors) == {r - 1, r}
                    assert all(res.degree == r - 1 for res in survivors.values())
                    assert {res.weight for res in survivors.values()} == {lam, mu}
                    checked += 1
    assert checked > 100


@pytest.mark.criterion(4, "violation certificate for the four-entry example")
def test_criterion_4_violation_certificate():
    with within(1):
        v = membership(EXAMPLE)
        assert isinstance(v, NotMember)
        assert isinstance(v.reason, AntichainViolation)
        assert v.reason.spec.generators == {S((3, 0, 0)), S((1, 1, 1))}
        assert (v.reason.lhs, v.reason.rhs) == (1, 2)
        for lam in EXAMPLE.support():
            assert antichain_check(EXAMPLE, IdealSpec.of(lam)).ok


def _rows(T):
    return ({tuple(l): v for l, v in T.row(0).items()},
            {tuple(l): v for l, v in T.row(1).items()})


def _perfect_matchings(T):
    left = sorted(T.row(0))
    right = sorted(T.row(1))
    return [
        sorted(zip(left, perm))
        for perm in permutations(right)
        if all(lt(l, r) for l, r in zip(left, perm))
    ]


@pytest.mark.criterion(5, "path-graph fixtures decompose uniquely; greedy fails on the second")
def test_criterion_5_matching_fixtures():
    with within(1):
        expected = {
            FIXTURE_1: [(S((2, 1, 1)), S((3, 1, 1))), (S((3, 1, 0)), S((3, 2, 0)))],
            FIXTURE_2: [(S((2, 2, 0)), S((3, 2, 0))), (S((3, 1, 0)), S((3, 1, 1)))],
        }
        for T, pairs in expected.items():
            assert _perfect_matchings(T) == [pairs]
            v = membership(T)
            assert isinstance(v, Member)
            assert sorted((p.lo, p.hi) for p in v.decomposition) == pairs
            assert all(p.scale == 1 for p in v.decomposition)
        assert greedy_lex_decomposition(*_rows(FIXTURE_1)) is not None
        assert greedy_lex_decomposition(*_rows(FIXTURE_2)) is None


# -- criterion 6 ----------------------------------------------------------------


def _random_seq(rng, k):
    return sorted((rng.randint(-2, 4) for _ in range(k)), reverse=True)


def _random_pure(rng, k):
    while True:
        a, b = _random_seq(rng, k), _random_seq(rng, k)
        lo = S(tuple(map(min, a, b)))
        hi = S(tuple(map(max, a, b)))
        if lo != hi:
            return PureTable(lo, hi, Fraction(rng.randint(1, 9), rng.randint(1, 6)))


def _random_member(rng):
    k = rng.randint(1, 4)
    parts = [_random_pure(rng, k) for _ in range(rng.randint(1, 8))]
    return resum(parts, k)


def _perturb(rng, T):
    keys = list(T.entries)
    kind = rng.randrange(4)
    delta = Fraction(rng.randint(1, 6), rng.randint(1, 3))
    if kind == 0:
        # move row-0 mass to another label: rank stays balanced
        src = rng.choice([key for key in keys if key[0] == 0])
        dst = (0, S(_random_seq(rng, T.k)))
        return T + RankBettiTable(T.k, {src: -delta, dst: delta})
    if kind == 1:
        src = rng.choice([key for key in keys if key[0] == 1])
        dst = (1, S(_random_seq(rng, T.k)))
        return T + RankBettiTable(T.k, {src: -delta, dst: delta})
    if kind == 2:
        # add an arbitrary balanced pair, comparable or not
        extra = {(0, S(_random_seq(rng, T.k))): delta}
        key = (1, S(_random_seq(rng, T.k)))
        extra[key] = extra.get(key, 0) + delta
        return T + RankBettiTable(T.k, extra)
    key = rng.choice(keys)
    return T + RankBettiTable(T.k, {key: delta if rng.random() < 0.5 else -delta})


def _check_verdict(T, v):
    if isinstance(v, Member):
        assert all(isinstance(p, PureTable) and p.scale > 0 for p in v.decomposition)
        assert resum(v.decomposition, T.k) == T
        return True
    reason = v.reason
    if isinstance(reason, AntichainViolation):
        assert antichain_check(T, reason.spec) == (reason.lhs, reason.rhs, False)
        assert reason.spec.generators <= set(T.row(1))
    elif isinstance(reason, RankDefect):
        assert reason.value == rank_defect(T) != 0
    else:
        assert isinstance(reason, NegativeEntry)
        assert T.value(reason.i, reason.lam) == reason.value < 0
    return False


@pytest.mark.criterion(6, "membership soundness and completeness on 500+500 random tables")
def test_criterion_6_membership_property():
    rng = random.Random(20240611)
    compared = 0
    outcomes = {True: 0, False: 0}
    with within(120):
        for _ in range(500):
            T = _random_member(rng)
            v = membership(T)
            assert isinstance(v, Member)
            _check_verdict(T, v)
            if len(T.row(1)) <= 6:
                assert exhaustive_membership(*_rows(T))
                compared += 1
        for _ in range(500):
            T = _perturb(rng, _random_member(rng))
            member = _check_verdict(T, membership(T))
            outcomes[member] += 1
            if len(T.row(1)) <= 6:
                assert exhaustive_membership(*_rows(T)) == member
                compared += 1
    assert outcomes[True] > 0 and outcomes[False] > 0
    assert compared >= 500


@pytest.mark.criterion(7, "weyl_dim equals ssyt_count; Cauchy identity")
def test_criterion_7_dimension_oracle():
    with within(30):
        for k in range(1, 5):
            for lam in enumerate_box(k, 0, 5):
                assert weyl_dim(lam, k) == ssyt_count(lam, k)
        for k in range(1, 4):
            for n in range(1, 4):
                for d in range(0, 7):
                    total = sum(a * b for _, a, b in cauchy_level(k, n, d))
                    assert total == comb(k * n + d - 1, d)


@pytest.mark.criterion(8, "hom/LR coherence in the k=n<=3, parts<=3 box")
def test_criterion_8_hom_lr_coherence():
    schur._lr.cache_clear()
    with within(60):
        for k in range(1, 4):
            box = enumerate_box(k, 0, 3)
            for mu in box:
                for lam in box:
                    hom = hom_dimension(mu, lam, k, k)
                    assert (hom > 0) == (map_type(mu, lam) is not MapType.NONE)
            for mu in box:
                for d in range(1, 4):
                    targets = partitions(mu.size + d, k, k)
                    coeffs = {nu: lr_coefficient(lam=S((d,) + (0,) * (k - 1)), mu=mu, nu=nu)
                              for nu in targets}
                    assert max(coeffs.values()) <= 1
                    assert set(pieri(mu, d, k)) == {nu for nu, c in coeffs.items() if c == 1}
            for lam in box:
                for mu in box:
                    for nu in partitions(lam.size + mu.size, k, k):
                        assert lr_coefficient(lam=lam, mu=mu, nu=nu) == lr_coefficient(
                            lam=mu, mu=lam, nu=nu
                        )


def _random_pair(rng):
    k = rng.randint(2, 4)
    while True:
        a, b = _random_seq(rng, k), _random_seq(rng, k)
        lo, hi = S(tuple(map(min, a, b))), S(tuple(map(max, a, b)))
        if lo != hi:
            return lo, hi


def _rank_identity(R: Realization):
    k = R.lo.k
    return R.c0 * weyl_dim(R.lo, k) == R.c1 * weyl_dim(R.hi, k)


@pytest.mark.criterion(9, "realization rank identity over 200 random comparable pairs")
def test_criterion_9_realization_rank_identity():
    rng = random.Random(97)
    small_hits = 0
    with within(30):
        for _ in range(200):
            lo, hi = _random_pair(rng)
            k = lo.k
            assert _rank_identity(chain_realization(lo, hi))
            res = small_resolution(lo, hi)
            if lo[0] <= hi[k - 1]:
                assert _rank_identity(res)
                small_hits += 1
            else:
                assert isinstance(res, ConditionFailed)
            chain = saturated_chain(lo, hi)
            for a, b in zip(chain, chain[1:]):
                r = next(i for i in range(k) if a[i] != b[i]) + 1
                # an empty row r of a partition needs a det twist first
                t = 1 if b[r - 1] == 0 else 0
                R = verify_linear_case(box_setup(det_twist(b, t), r))
                assert (det_twist(R.lo, -t), det_twist(R.hi, -t)) == (a, b)
                assert _rank_identity(R)
    assert small_hits > 0


@pytest.mark.criterion(10, "pairing bilinearity and hand convolution")
def test_criterion_10_pairing():
    with within(1):
        lam = S((2, 1, 0))
        B = MultBettiTable(3, {(0, lam): 1, (1, lam): 1})
        G = CohomologyTable(3, 4, {(0, lam): 1, (1, lam): 1})
        assert pairing(B, G) == RankBettiTable(3, {(-1, lam): 1, (0, lam): 2, (1, lam): 1})

        for p in range(-1, 3):
            for q in range(0, 3):
                b, c = Fraction(3, 2), Fraction(5, 7)
                out = pairing(MultBettiTable(3, {(p, lam): b}), CohomologyTable(3, 4, {(q, lam): c}))
                assert out.entries == {(p - q, lam): b * c}

        rng = random.Random(5)
        shapes = enumerate_box(3, 0, 2)

        def rand_mult():
            return MultBettiTable(3, {(rng.randint(-1, 2), rng.choice(shapes)): Fraction(rng.randint(1, 9), rng.randint(1, 4))
                                      for _ in range(5)})

        def rand_coh():
            return CohomologyTable(3, 4, {(rng.randint(0, 3), rng.choice(shapes)): Fraction(rng.randint(1, 9), rng.randint(1, 4))
                                          for _ in range(5)})

        for _ in range(30):
            B1, B2, G1, G2 = rand_mult(), rand_mult(), rand_coh(), rand_coh()
            a = Fraction(rng.randint(1, 5), rng.randint(1, 5))
            assert pairing(B1 + B2, G1) == pairing(B1, G1) + pairing(B2, G1)
            assert pairing(B1, G1 + G2) == pairing(B1, G1) + pairing(B1, G2)
            assert pairing(B1 * a, G1) == pairing(B1, G1) * a
