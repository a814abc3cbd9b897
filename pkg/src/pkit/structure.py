"""Duality on simples (the pairwise rightward-move procedure followed by
reflection), duals of Kac modules, and socle/cosocle combinatorics.
"""

from __future__ import annotations

import itertools

from .weights import Weight, weight_to_diagram, gamma, gamma_tilde
from .arrows import build_arrows


def _neg_rev(w: Weight) -> tuple:
    # -w0(lambda): negate and reverse the coordinates
    return tuple(-c for c in reversed(w.coords))


def dagger(w: Weight) -> Weight:
    """Run through ball pairs (a,b), a<b, in lexicographic order; with balls
    numbered right-to-left, move balls a and b one step right whenever both
    landing spots are currently free.  Positions are recomputed after every
    pair (the procedure is stateful)."""
    n = w.n
    cur = set(w.balls)
    for a in range(n - 1):
        for b in range(a + 1, n):
            p = sorted(cur, reverse=True)
            if p[a] + 1 not in cur and p[b] + 1 not in cur:
                cur.discard(p[a])
                cur.discard(p[b])
                cur.add(p[a] + 1)
                cur.add(p[b] + 1)
    return Weight.from_balls(n, cur)


def sharp(w: Weight):
    """(dual simple weight, parity m): reflect the dagger diagram at (n-1)/2."""
    n = w.n
    d = dagger(w)
    refl = Weight.from_balls(n, [(n - 1) - p for p in d.balls])
    total = refl.size() + w.size()
    assert total % 2 == 0
    m = (total // 2) % 2
    return refl, m


def dual_kac(family: str, w: Weight) -> Weight:
    """Highest weight of the dual of a Kac module: negate-reverse, then shift
    by -gamma_tilde (thick) or +gamma (thin)."""
    n = w.n
    base = _neg_rev(w)
    if family == "Delta":
        off = -gamma_tilde(n)[0]
    elif family == "Nabla":
        off = gamma(n)[0]
    else:
        raise ValueError("family must be 'Delta' or 'Nabla', got %r" % (family,))
    return Weight(n, tuple(c + off for c in base))


def max_solid_slide(t: Weight) -> Weight:
    """Send every ball through its longest solid arrow (min target); balls
    without solid arrows stay put."""
    ad = build_arrows(weight_to_diagram(t))
    new = [min(ad.solid[i]) if ad.solid[i] else i for i in t.balls]
    return Weight.from_balls(t.n, new)


def max_dashed_slide(t: Weight) -> Weight:
    """For every dashed source j, pull the ball at the far end max(targets)
    back to j."""
    ad = build_arrows(weight_to_diagram(t))
    cur = set(t.balls)
    for j, targets in ad.dashed.items():
        cur.discard(max(targets))
        cur.add(j)
    return Weight.from_balls(t.n, cur)


def _inverse_search(lam: Weight, slide) -> Weight:
    n = lam.n
    hits = []
    ranges = [range(b, b + 2 * n + 1) for b in lam.balls]
    for cand in itertools.product(*ranges):
        if any(a <= b for a, b in zip(cand, cand[1:])):
            continue
        t = Weight.from_balls(n, cand)
        if slide(t).balls == lam.balls:
            hits.append(t)
    if not hits:
        raise RuntimeError("no slide preimage of %r found in the 2n box" % (lam,))
    if len(hits) > 1:
        raise RuntimeError("slide preimage of %r not unique: %r" % (lam, hits))
    return hits[0]


def cosocle_nabla(lam: Weight) -> Weight:
    """Weight tau with L(tau) the cosocle of the thin Kac module of lam:
    the unique tau with max_solid_slide(tau) = lam.  Cross-checked against
    the closed form sharp(-w0(lam) - gamma_tilde) - 2*omega."""
    tau = _inverse_search(lam, max_solid_slide)
    mu = Weight(lam.n, tuple(c - (lam.n + 1) for c in _neg_rev(lam)))
    closed = sharp(mu)[0].shift(-2)
    if closed != tau:
        raise RuntimeError(
            "cosocle mismatch for %r: search %r vs closed form %r"
            % (lam, tau, closed))
    return tau


def socle_delta(lam: Weight) -> Weight:
    """Weight tau' with L(tau') the socle of the thick Kac module of lam:
    the unique tau' with max_dashed_slide(tau') = lam."""
    return _inverse_search(lam, max_dashed_slide)
