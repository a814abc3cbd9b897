"""Dominant integral weights of p(n) and their diagrams on the integer line.

A weight is a weakly decreasing integer tuple (l1, ..., ln).  Everything
downstream works with the rho-shifted support c = {l_i + n - i}, which is
strictly decreasing, so the diagram form (ball positions) is the primary
internal representation and the coordinate form is a view.
"""

from __future__ import annotations

from dataclasses import dataclass


def rho(n: int) -> tuple:
    return tuple(n - 1 - i for i in range(n))


def omega(n: int) -> tuple:
    return (1,) * n


# gamma = (1-n)*omega, gamma_tilde = (n+1)*omega
def gamma(n: int) -> tuple:
    return ((1 - n),) * n


def gamma_tilde(n: int) -> tuple:
    return ((n + 1),) * n


@dataclass(frozen=True)
class Weight:
    n: int
    coords: tuple

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("rank must be a positive integer, got %r" % (self.n,))
        coords = tuple(self.coords)
        if len(coords) != self.n:
            raise ValueError("expected %d coordinates, got %r" % (self.n, coords))
        if not all(isinstance(c, int) for c in coords):
            raise ValueError("coordinates must be integers: %r" % (coords,))
        if any(a < b for a, b in zip(coords, coords[1:])):
            raise ValueError("not dominant (coords must be weakly decreasing): %r" % (coords,))
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_balls(cls, n: int, balls) -> "Weight":
        balls = tuple(sorted(balls, reverse=True))
        if len(balls) != n or len(set(balls)) != n:
            raise ValueError("need %d distinct ball positions, got %r" % (n, balls))
        return cls(n, tuple(b - (n - 1 - i) for i, b in enumerate(balls)))

    @property
    def balls(self) -> tuple:
        # the support c_lambda, strictly decreasing
        n = self.n
        return tuple(c + n - 1 - i for i, c in enumerate(self.coords))

    def size(self) -> int:
        """|lambda| = sum of coordinates."""
        return sum(self.coords)

    def shift(self, k: int) -> "Weight":
        """w + k*omega."""
        return Weight(self.n, tuple(c + k for c in self.coords))

    def to_json(self) -> dict:
        return {"n": self.n, "coords": list(self.coords), "balls": list(self.balls)}

    def __repr__(self):
        return "Weight(%d, %r)" % (self.n, self.coords)


@dataclass(frozen=True)
class WeightDiagram:
    n: int
    balls: tuple  # strictly decreasing ball positions

    def __post_init__(self):
        balls = tuple(self.balls)
        if len(balls) != self.n:
            raise ValueError("expected %d balls, got %r" % (self.n, balls))
        if any(a <= b for a, b in zip(balls, balls[1:])):
            raise ValueError("ball positions must be strictly decreasing: %r" % (balls,))
        object.__setattr__(self, "balls", balls)

    @property
    def ball_set(self) -> frozenset:
        return frozenset(self.balls)

    def f(self, i: int) -> int:
        return 1 if i in self.ball_set else 0

    def __repr__(self):
        return "WeightDiagram(%d, %r)" % (self.n, self.balls)


def weight_to_diagram(w: Weight) -> WeightDiagram:
    return WeightDiagram(w.n, w.balls)


def diagram_to_weight(d: WeightDiagram) -> Weight:
    return Weight.from_balls(d.n, d.balls)


def check_same_rank(a: Weight, b: Weight):
    if a.n != b.n:
        raise ValueError("rank mismatch: %d vs %d" % (a.n, b.n))


def leq(a: Weight, b: Weight) -> bool:
    """a <= b in the highest-weight order, i.e. b_i <= a_i for all i."""
    check_same_rank(a, b)
    return all(y <= x for x, y in zip(a.coords, b.coords))


def is_typical(w: Weight) -> bool:
    # strictly decreasing coords == no two adjacent balls
    return all(a > b for a, b in zip(w.coords, w.coords[1:]))


def shift(w: Weight, k: int) -> Weight:
    return w.shift(k)


def gl_dim(w: Weight) -> int:
    """dim of the gl(n) irreducible V(lambda), Weyl dimension formula."""
    c = w.balls
    num = 1
    den = 1
    for i in range(w.n):
        for j in range(i + 1, w.n):
            num *= c[i] - c[j]
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0, "Weyl formula did not produce an integer for %r" % (w,)
    return q


def kac_dims(w: Weight) -> tuple:
    """(dim thin Kac module, dim thick Kac module)."""
    n = w.n
    d = gl_dim(w)
    return (2 ** (n * (n - 1) // 2) * d, 2 ** (n * (n + 1) // 2) * d)


def kappa(w: Weight) -> int:
    return sum(1 if i % 2 == 0 else -1 for i in w.balls)


def q_parity(w: Weight) -> int:
    return 0 if w.size() % 4 in (0, 1) else 1


def render_ascii(d: WeightDiagram, window) -> str:
    """Two lines: ball symbols over position labels, one column per position."""
    lo, hi = window
    if lo > hi:
        return ""
    bs = d.ball_set
    labels = [str(i) for i in range(lo, hi + 1)]
    syms = [("●" if i in bs else "○").center(len(lab))
            for i, lab in zip(range(lo, hi + 1), labels)]
    return " ".join(syms).rstrip() + "\n" + " ".join(labels)
