"""Arrow diagrams: solid and dashed arrows on a weight diagram, and the
move sets they generate.

Solid arrows start at balls and point left to empty positions j with
r+(i,j) = 0 and r+(i,s) >= 0 in between; dashed arrows start at empty
positions and point right to balls i with r-(i,j) = 0 and r-(s,j) >= 0 in
between.  Arrow lengths are bounded by 2n (a zero of r+/- needs equally
many balls and empties in the spanned interval).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .weights import Weight, WeightDiagram, check_same_rank, diagram_to_weight


@dataclass
class ArrowDiagram:
    base: WeightDiagram
    solid: dict   # ball position i -> tuple of targets j < i, ascending
    dashed: dict  # empty position j -> tuple of ball targets i > j, ascending

    def to_json(self) -> dict:
        return {
            "solid": {str(i): list(t) for i, t in sorted(self.solid.items())},
            "dashed": {str(j): list(t) for j, t in sorted(self.dashed.items())},
        }


def g(d: WeightDiagram, i: int) -> int:
    return 1 if i in d.ball_set else -1


def r_plus(d: WeightDiagram, i: int, j: int) -> int:
    if j >= i:
        raise ValueError("r_plus needs j < i, got i=%d j=%d" % (i, j))
    return sum(g(d, s) for s in range(j, i))


def r_minus(d: WeightDiagram, i: int, j: int) -> int:
    if j >= i:
        raise ValueError("r_minus needs j < i, got i=%d j=%d" % (i, j))
    return -sum(g(d, s) for s in range(j + 1, i + 1))


@lru_cache(maxsize=None)
def _arrows(n: int, balls: tuple):
    bs = frozenset(balls)
    solid = {}
    for i in balls:
        run = 0
        targets = []
        for s in range(i - 1, i - 2 * n - 1, -1):
            run += 1 if s in bs else -1  # run = r+(i, s)
            if run < 0:
                break
            if run == 0:
                targets.append(s)
        assert all(i - t < 2 * n for t in targets), \
            "solid arrow at search boundary for balls %r" % (balls,)
        solid[i] = tuple(sorted(targets))
    dashed = {}
    lo, hi = balls[-1] - 2 * n, balls[0]
    for j in range(lo, hi):
        if j in bs:
            continue
        run = 0
        targets = []
        for i in range(j + 1, j + 2 * n + 1):
            run -= 1 if i in bs else -1  # run = r-(i, j)
            if run < 0:
                break
            if run == 0:
                # zeros of r-(., j) land on balls (an empty zero would force
                # a negative value one step earlier)
                assert i in bs
                targets.append(i)
        assert all(i - j < 2 * n + 1 for i in targets)
        if targets:
            dashed[j] = tuple(targets)
    return solid, dashed


def build_arrows(d: WeightDiagram) -> ArrowDiagram:
    solid, dashed = _arrows(d.n, d.balls)
    return ArrowDiagram(d, dict(solid), dict(dashed))


@lru_cache(maxsize=None)
def up_ball_sets(n: int, balls: tuple) -> frozenset:
    """Ball tuples of all mu in the up-move set of the weight with this support."""
    solid, _ = _arrows(n, balls)
    choices = [(i,) + solid[i] for i in balls]
    out = set()
    for pick in itertools.product(*choices):
        out.add(tuple(sorted(pick, reverse=True)))
    return frozenset(out)


@lru_cache(maxsize=None)
def down_ball_sets(n: int, balls: tuple) -> frozenset:
    """Ball tuples of all mu obtained by sliding balls back along dashed arrows."""
    _, dashed = _arrows(n, balls)
    items = sorted(dashed.items())
    out = set()
    # per empty source j: either leave it, or pull one of its target balls back
    for pick in itertools.product(*[(None,) + t for j, t in items]):
        cur = set(balls)
        for (j, _t), ball in zip(items, pick):
            if ball is None:
                continue
            cur.discard(ball)
            cur.add(j)
        out.add(tuple(sorted(cur, reverse=True)))
    return frozenset(out)


def _sorted_weights(n, ball_sets):
    return sorted((Weight.from_balls(n, b) for b in ball_sets),
                  key=lambda w: w.balls, reverse=True)


def up_set(d: WeightDiagram) -> list:
    return _sorted_weights(d.n, up_ball_sets(d.n, d.balls))


def down_set(d: WeightDiagram) -> list:
    return _sorted_weights(d.n, down_ball_sets(d.n, d.balls))


def member_up(d: WeightDiagram, mu: Weight) -> bool:
    """Direct evaluation of the defining constraint of the up-move set:
    for every ball i of d, mu occupies exactly one of {i} + solid targets."""
    check_same_rank(diagram_to_weight(d), mu)
    solid, _ = _arrows(d.n, d.balls)
    ms = mu.balls
    mset = frozenset(ms)
    for i in d.balls:
        count = (1 if i in mset else 0) + sum(1 for j in solid[i] if j in mset)
        if count != 1:
            return False
    return True


def member_down(d: WeightDiagram, mu: Weight) -> bool:
    check_same_rank(diagram_to_weight(d), mu)
    _, dashed = _arrows(d.n, d.balls)
    mset = frozenset(mu.balls)
    for j, targets in dashed.items():
        count = (0 if j in mset else 1) + sum(1 for i in targets if i not in mset)
        if count != 1:
            return False
    # balls of mu outside all constrained positions would break the count
    # argument; the per-constraint check above already forces them out.
    allowed = set(d.balls)
    for j, targets in dashed.items():
        allowed.add(j)
    return all(b in allowed for b in mu.balls)


def arm_leg(w: Weight):
    """Arm and leg sequences of the Young diagram of a partition weight."""
    if any(c < 0 for c in w.coords):
        raise ValueError("arm_leg needs nonnegative coordinates, got %r" % (w.coords,))
    mu = w.coords
    r = sum(1 for i, m in enumerate(mu) if m >= i + 1)  # diagonal length
    arms = tuple(mu[i] - i for i in range(r))           # arm_i = mu_i - i (+1 -1 for the box itself): mu_i - (i+1) + 1
    conj = tuple(sum(1 for m in mu if m >= i + 1) for i in range(r))
    legs = tuple(conj[i] - i for i in range(r))
    return arms, legs


def arm_leg_condition(w: Weight) -> bool:
    """arm_i + 1 = leg_i along the whole diagonal."""
    arms, legs = arm_leg(w)
    return all(a + 1 == l for a, l in zip(arms, legs))


def no_zero_pair_sums(w: Weight) -> bool:
    """mu_i + n - i + mu_j - n + j != 0 for all i != j (1-based indices)."""
    n = w.n
    mu = w.coords
    for i in range(n):
        for j in range(n):
            if i != j and mu[i] + n - (i + 1) + mu[j] - n + (j + 1) == 0:
                return False
    return True


def render_arrows_ascii(ad: ArrowDiagram, window) -> str:
    """Diagram with position labels, then one text row per arc lane; solid
    arcs drawn with '-', dashed with '.', head marking the target."""
    from .weights import render_ascii

    lo, hi = window
    head = render_ascii(ad.base, window)
    positions = list(range(lo, hi + 1))
    labels = [str(i) for i in positions]
    col = {}
    x = 0
    for p, lab in zip(positions, labels):
        col[p] = x + (len(lab) - 1) // 2
        x += len(lab) + 1
    width = x - 1

    arcs = []  # (left, right, style, head_pos)
    for i, targets in sorted(ad.solid.items()):
        for j in targets:
            arcs.append((j, i, "-", j))  # solid: ball i -> empty j (leftward)
    for j, targets in sorted(ad.dashed.items()):
        for i in targets:
            arcs.append((j, i, ".", i))  # dashed: empty j -> ball i (rightward)
    arcs.sort(key=lambda a: (a[1] - a[0], a[0], a[2]))

    lanes = []
    for left, right, style, hp in arcs:
        if not (lo <= left and right <= hi):
            continue
        for lane in lanes:
            if all(right < l or r < left for l, r, *_ in lane):
                lane.append((left, right, style, hp))
                break
        else:
            lanes.append([(left, right, style, hp)])

    rows = []
    for lane in lanes:
        row = [" "] * width
        for left, right, style, hp in lane:
            for x in range(col[left], col[right] + 1):
                row[x] = style
            row[col[left]] = "<" if hp == left else "+"
            row[col[right]] = ">" if hp == right else "+"
        rows.append("".join(row).rstrip())
    return "\n".join([head] + rows)
