import pytest

from pkit.weights import Weight, q_parity
from pkit.grothendieck import BasisLabel, GVector, DELTA, NABLA, SIMPLE
from pkit.translation import (theta_delta, theta_nabla, apply_theta,
                              theta_proj, theta_simple, wedge_map,
                              WedgeVector, ef_op, verify_tl,
                              theta_proj_consistency, all_ball_tuples)


def W(*coords):
    return Weight(len(coords), tuple(coords))


def B(n, *balls):
    return Weight.from_balls(n, balls)


def test_theta_delta_example():
    # theta'_2 Delta(1,0) = Delta(1,1) + Pi.Delta(0,0)  (n=2, balls 2,0)
    v = theta_delta(2, W(1, 0))
    assert v == GVector([(BasisLabel(DELTA, W(1, 1), 0), 1),
                         (BasisLabel(DELTA, W(0, 0), 1), 1)])
    # ball at k-1 kills everything
    assert theta_delta(1, W(0, 0)) == GVector()
    # parity argument shifts uniformly
    assert theta_delta(2, W(1, 0), parity=1) == GVector(
        [(BasisLabel(DELTA, W(1, 1), 1), 1),
         (BasisLabel(DELTA, W(0, 0), 0), 1)])


def test_theta_nabla_example():
    # rank 1, ball at k: both neighbors free; leftward move flips parity
    k = 3
    v = theta_nabla(k, B(1, k))
    assert v == GVector([(BasisLabel(NABLA, B(1, k + 1), 0), 1),
                         (BasisLabel(NABLA, B(1, k - 1), 1), 1)])
    assert theta_nabla(k, B(1, k + 2)) == GVector()
    # no ball at k -> zero
    v2 = theta_nabla(1, W(1, 0))  # balls 2,0; theta'_1 needs ball at 1
    assert v2 == GVector()
    v3 = theta_nabla(2, W(1, 1))  # balls 2,1: k+1 free? no ball at 3 -> right
    assert v3 == GVector([(BasisLabel(NABLA, B(2, 3, 1), 0), 1)])


def test_apply_theta_linear():
    v = theta_delta(2, W(1, 0)).scale(3)
    out = apply_theta(3, v)
    assert all(c % 3 == 0 for c in out.terms.values())
    with pytest.raises(ValueError):
        apply_theta(0, GVector([(BasisLabel(SIMPLE, W(0)), 1)]))


def test_braid_spot_instance():
    # theta'_2 theta'_3 theta'_2 = theta'_2 on Delta(1,0), n=2, reduced
    v = theta_delta(2, W(1, 0)).reduced()
    assert apply_theta(2, apply_theta(3, v)).reduced() == v


def test_theta_proj_cases():
    lam = W(0, 0)  # balls 1, 0
    # (ball, empty) at (i-2, i-1): simple right move
    mu, s = theta_proj(3, lam)
    assert mu.balls == (2, 0)
    # (empty, ball): zero
    assert theta_proj(1, lam) is None
    # (ball, ball): ball i-2 jumps along the shortest solid arrow of i-1
    mu, s = theta_proj(2, lam)
    assert mu.balls == (1, -1)
    mu, s = theta_proj(4, W(1, 1, 0))  # balls 3,2,0: pattern at (2,3)=(●,●)
    assert mu.balls == (3, 1, 0)
    # (empty, empty): nearest balanced ball drops in from the right, if any
    mu, s = theta_proj(0, B(3, 4, 2, 0))
    assert mu.balls == (4, 2, -1)
    assert theta_proj(0, W(3, 3)) is None  # balls 4,3: no admissible drop


def test_theta_proj_parity_matches_kac_rule():
    # on a typical weight P = Delta, so the shift must agree with the
    # right-keeps / left-flips rule plus Pi^i
    for lam, i in [(W(2, 0), 2), (W(2, 0), 5), (W(5, 3, 0), 4)]:
        res = theta_proj(i, lam)
        if res is None:
            continue
        mu, s = res
        d = mu.size() - lam.size()
        assert d in (1, -1)
        assert s == (i + (0 if d == 1 else 1)) % 2
        # and with the intrinsic formula
        assert s == (i + q_parity(mu) + q_parity(lam) + mu.size() + 1) % 2


def test_theta_proj_chain_examples():
    # Theta_2 Theta_3 P(0) = P(omega) for n=2
    mu3, _ = theta_proj(3, W(0, 0))
    mu2, _ = theta_proj(2, mu3)
    assert mu2 == W(1, 1)
    # the four weights translating onto P(lambda), lambda balls {4,2,0}
    lam = B(3, 4, 2, 0)
    for mub in [(4, 2, -1), (4, 2, 1), (4, 3, 2), (5, 4, 2)]:
        res = theta_proj(1, B(3, *mub))
        assert res is not None and res[0] == lam, mub


def test_theta_simple_example():
    lam = B(3, 4, 2, 0)
    v = theta_simple(0, lam)
    assert {l.weight.balls for l in v.terms} == {
        (4, 2, -1), (4, 2, 1), (4, 3, 2), (5, 4, 2)}
    assert all(c == 1 for c in v.terms.values())
    with pytest.raises(ValueError):
        theta_simple(0, lam, window=(-2, 6))


def test_theta_simple_zero_and_chain_lengths():
    # empty pattern at (i-2, i-1) far from the other balls: zero
    assert theta_simple(8, B(2, 1, 0)) == GVector()
    # k-chain at i, i+2, ..., i+2k (other balls far left): length k+2
    i = 0
    for n in (1, 2, 3):
        for k in range(n):
            chain = [i + 2 * j for j in range(k + 1)]
            rest = [i - 10 - 2 * j for j in range(n - k - 1)]
            lam = B(n, *(chain + rest))
            assert len(theta_simple(i, lam).terms) == k + 2, (n, k)


def test_wedge_map_and_ef():
    v = GVector([(BasisLabel(DELTA, W(0, 0), 1), 2)])
    assert wedge_map(v) == WedgeVector([((1, 0), 2)])
    assert ef_op(2, "e", WedgeVector([((2, 0), 1)])) == WedgeVector([((1, 0), 1)])
    assert ef_op(1, "f", WedgeVector([((2, 0), 1)])) == WedgeVector([((2, 1), 1)])
    assert ef_op(5, "e", WedgeVector([((2, 0), 1)])) == WedgeVector()
    with pytest.raises(ValueError):
        ef_op(1, "x", WedgeVector())
    with pytest.raises(ValueError):
        WedgeVector([((0, 1), 1)])


def test_verify_tl_small():
    rep = verify_tl(2, (-5, 5))
    assert all(not r["failures"] for r in rep["relations"])
    assert all(r["checked"] > 0 for r in rep["relations"])


def test_theta_proj_consistency_small():
    rep = theta_proj_consistency(2, (-4, 4))
    assert rep["failures"] == [] and rep["checked"] > 0


def test_all_ball_tuples():
    ts = all_ball_tuples(2, (-1, 1))
    assert set(ts) == {(1, 0), (1, -1), (0, -1)}
