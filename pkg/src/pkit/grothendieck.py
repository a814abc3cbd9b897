"""Formal Grothendieck-group vectors and the basis changes between the
projective, standard (Delta), costandard (Nabla) and simple bases.

Coefficients are plain Python ints (arbitrary precision).  Every vector
carries labels (family, weight, parity); most identities from the source
combinatorics live in the parity-forgotten ("reduced") group, so the
comparison helpers reduce first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .weights import Weight, check_same_rank, weight_to_diagram
from .arrows import up_ball_sets, down_ball_sets, member_down, member_up

DELTA = "Delta"
NABLA = "Nabla"
SIMPLE = "Simple"
PROJ = "Proj"
FAMILIES = (DELTA, NABLA, SIMPLE, PROJ)


@dataclass(frozen=True)
class BasisLabel:
    family: str
    weight: Weight
    parity: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r" % (self.family,))
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1, got %r" % (self.parity,))

    def to_json(self) -> dict:
        return {"family": self.family, "weight": list(self.weight.coords),
                "parity": self.parity}


class GVector:
    """Finitely supported integer combination of basis labels, all sharing
    one family and one rank."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        it = terms.items() if isinstance(terms, dict) else terms
        for label, c in it:
            if not isinstance(label, BasisLabel):
                raise TypeError("expected BasisLabel, got %r" % (label,))
            acc[label] = acc.get(label, 0) + c
        self.terms = {l: c for l, c in acc.items() if c != 0}
        if len({l.family for l in self.terms}) > 1:
            raise ValueError("mixed families in one vector")
        if len({l.weight.n for l in self.terms}) > 1:
            raise ValueError("mixed ranks in one vector")

    @property
    def family(self):
        for l in self.terms:
            return l.family
        return None

    def coeff(self, label: BasisLabel) -> int:
        return self.terms.get(label, 0)

    def reduced_coeff(self, w: Weight) -> int:
        return sum(c for l, c in self.terms.items() if l.weight == w)

    def __add__(self, other):
        return GVector(list(self.terms.items()) + list(other.terms.items()))

    def scale(self, k: int):
        return GVector({l: k * c for l, c in self.terms.items()})

    def reduced(self):
        """Forget parity bits."""
        return GVector((BasisLabel(l.family, l.weight, 0), c)
                       for l, c in self.terms.items())

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda lc: (lc[0].weight.balls, lc[0].parity),
                      reverse=True)

    def weights(self):
        return {l.weight for l in self.terms}

    def __eq__(self, other):
        return isinstance(other, GVector) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> list:
        out = []
        for l, c in self.sorted_terms():
            d = l.to_json()
            d["coeff"] = c
            out.append(d)
        return out

    def __repr__(self):
        if not self.terms:
            return "GVector(0)"
        bits = ["%+d*%s%s(%s)" % (c, "Pi." if l.parity else "", l.family,
                                  ",".join(map(str, l.weight.coords)))
                for l, c in self.sorted_terms()]
        return "GVector(%s)" % " ".join(bits)


def proj_to_delta(w: Weight) -> GVector:
    """Delta-filtration multiplicities of the projective cover of L(w)."""
    return GVector((BasisLabel(DELTA, Weight.from_balls(w.n, b), 0), 1)
                   for b in up_ball_sets(w.n, w.balls))


def proj_to_nabla(w: Weight) -> GVector:
    """Nabla-filtration of the projective cover: costandard weights are the
    down-moves shifted by 2*omega."""
    return GVector((BasisLabel(NABLA, Weight.from_balls(w.n, b).shift(2), 0), 1)
                   for b in down_ball_sets(w.n, w.balls))


def _box_candidates(base_balls, lo_off, hi_off):
    """Strictly decreasing ball tuples with each coordinate within the given
    offsets of the base support."""
    ranges = [range(b + lo_off, b + hi_off + 1) for b in base_balls]
    for cand in itertools.product(*ranges):
        if all(a > b for a, b in zip(cand, cand[1:])):
            yield cand


def _check_window(w: Weight, window, lo_off, hi_off):
    if window is None:
        return
    lo, hi = window
    if lo > w.balls[-1] + lo_off or hi < w.balls[0] + hi_off:
        raise ValueError(
            "window [%d,%d] too small; need [%d,%d]"
            % (lo, hi, w.balls[-1] + lo_off, w.balls[0] + hi_off))


def delta_to_simple(mu: Weight, window=None) -> GVector:
    """Simple multiplicities of the standard module: L(lam) occurs once for
    each lam whose down-move set contains mu.  Complete search over the
    2n-box above mu's support."""
    n = mu.n
    _check_window(mu, window, 0, 2 * n)
    terms = []
    for cand in _box_candidates(mu.balls, 0, 2 * n):
        lam = Weight.from_balls(n, cand)
        if member_down(weight_to_diagram(lam), mu):
            terms.append((BasisLabel(SIMPLE, lam, 0), 1))
    return GVector(terms)


def nabla_to_simple(mu: Weight, window=None) -> GVector:
    # up-moves also slide balls leftward, so lam sits above mu's support
    n = mu.n
    _check_window(mu, window, 0, 2 * n)
    terms = []
    for cand in _box_candidates(mu.balls, 0, 2 * n):
        lam = Weight.from_balls(n, cand)
        if member_up(weight_to_diagram(lam), mu):
            terms.append((BasisLabel(SIMPLE, lam, 0), 1))
    return GVector(terms)


def hom_dim(lam: Weight, mu: Weight) -> int:
    """dim Hom between projective covers = |up(mu) & down(lam)|, always 0 or 1."""
    check_same_rank(lam, mu)
    common = up_ball_sets(mu.n, mu.balls) & down_ball_sets(lam.n, lam.balls)
    if len(common) > 1:
        raise RuntimeError(
            "hom bound violated: |up(%r) & down(%r)| = %d" % (mu, lam, len(common)))
    return len(common)


def pairing(a: GVector, b: GVector) -> int:
    """Euler pairing in the reduced group: Delta and Nabla are dual bases."""
    if a.family not in (None, DELTA):
        raise ValueError("left argument must be a Delta-family vector")
    if b.family not in (None, NABLA):
        raise ValueError("right argument must be a Nabla-family vector")
    total = 0
    for w in a.weights() & b.weights():
        total += a.reduced_coeff(w) * b.reduced_coeff(w)
    return total


def injective_hull(w: Weight):
    """(weight, parity) of the injective hull of L(w)."""
    return (w.shift(-2), w.n % 2)


def ext_possible(lam: Weight, mu: Weight) -> bool:
    """Necessary condition for a nonsplit extension between L(lam), L(mu)."""
    check_same_rank(lam, mu)
    return (member_down(weight_to_diagram(mu), lam)
            or member_up(weight_to_diagram(lam), mu))
