"""Foldings of a lambda-chain: signed root sequences, levels and weights."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PositionOutOfRange

__all__ = [
    "Folding",
    "LevelFunctionSamples",
    "folding_of",
    "g_alpha_from_signs",
    "g_alpha_samples",
    "inner_from_levels",
    "kappa",
    "level_sequence",
    "normalize_subset",
    "weight_mu",
]


def normalize_subset(chain, J):
    """Sorted tuple of distinct positions; raises if any is out of range."""
    J = tuple(sorted(set(J)))
    n = len(chain)
    for j in J:
        if not 0 <= j < n:
            raise PositionOutOfRange(f"position {j} outside 0..{n - 1}")
    return J


@dataclass(frozen=True)
class Folding:
    """The folded sequence ``Gamma(J)``.

    ``gammas[i]`` is a root index of ``chain.system`` (negative roots allowed),
    ``signs[i]`` is ``-1`` exactly on ``J``, ``gamma_inf = kappa(J)(rho)``.
    """

    chain: object = field(repr=False)
    J: tuple[int, ...]
    gammas: tuple[int, ...]
    signs: tuple[int, ...]
    gamma_inf: tuple
    levels: tuple[int, ...]

    @property
    def system(self):
        return self.chain.system

    def gamma(self, i):
        return self.system.roots[self.gammas[i]]

    def positions_of(self, alpha_index):
        """``I_alpha``: positions whose root is ``+-alpha`` (``alpha_index`` positive)."""
        neg = self.system.neg(alpha_index)
        return [i for i, g in enumerate(self.gammas) if g == alpha_index or g == neg]

    def phi(self, i):
        """The folding operator at position ``i``."""
        return folding_of(self.chain, set(self.J) ^ {i})


def _levels(N, gammas, signs):
    running = {}
    out = []
    for g, e in zip(gammas, signs):
        pos, sgn = (g, 1) if g < N else (g - N, -1)
        out.append((0 if sgn > 0 else -1) + running.get(pos, 0))
        if e == 1:
            running[pos] = running.get(pos, 0) + sgn
    return tuple(out)


def folding_of(chain, J):
    """Compute ``Gamma(J)`` for an arbitrary (not necessarily admissible) ``J``."""
    J = normalize_subset(chain, J)
    rs = chain.system
    Jset = set(J)
    cur = tuple(range(2 * rs.N))
    gammas, signs = [], []
    for i, b in enumerate(chain.betas):
        gammas.append(cur[b])
        if i in Jset:
            signs.append(-1)
            refl = rs.reflection_table(b)
            cur = tuple(cur[x] for x in refl)
        else:
            signs.append(1)
    mu = rs.rho
    for j in reversed(J):
        mu = rs.affine_reflect_index(chain.betas[j], 0, mu)
    return Folding(chain, J, tuple(gammas), tuple(signs), mu, _levels(rs.N, gammas, signs))


def level_sequence(f):
    """Levels ``l_i``: signed count of earlier unfolded occurrences of ``+-gamma_i``."""
    return _levels(f.system.N, f.gammas, f.signs)


def weight_mu(chain, J):
    """``mu(J)``: the affine reflections ``s_{beta_j, l_j^0}`` for ``j in J`` applied to lambda,
    the one with the largest position first."""
    J = normalize_subset(chain, J)
    rs = chain.system
    l0 = chain.initial_levels
    mu = chain.lam
    for j in reversed(J):
        mu = rs.affine_reflect_index(chain.betas[j], l0[j], mu)
    return mu


def kappa(chain, J):
    """``kappa(J) = r_{j_1} ... r_{j_s}`` as a Weyl element."""
    J = normalize_subset(chain, J)
    rs = chain.system
    w = rs.identity()
    for j in J:
        w = rs.compose(w, rs.reflection(chain.root(j)))
    return w


def _sgn(x):
    return (x > 0) - (x < 0)


def inner_from_levels(f, alpha):
    """``<mu(J), alpha^vee>`` recovered from the level sequence alone.

    Uses the last position ``m`` of ``I_alpha``, the sign of ``eps_m gamma_m``
    and the sign of ``<gamma_inf, alpha^vee>``.
    """
    rs = f.system
    a = rs.root_index(alpha)
    if a >= rs.N:
        raise ValueError("alpha must be a positive root")
    tail = _sgn(rs.pairing_index(f.gamma_inf, a))
    I = f.positions_of(a)
    if not I:
        return 0 if tail > 0 else -1
    m = I[-1]
    signed = f.signs[m] * (1 if f.gammas[m] < rs.N else -1)
    if signed > 0 and tail > 0:
        return f.levels[m] + 1
    if signed < 0 and tail < 0:
        return f.levels[m] - 1
    return f.levels[m]


@dataclass(frozen=True)
class LevelFunctionSamples:
    """The piecewise-linear level function ``g_alpha`` of a folding.

    ``sigmas`` holds ``(sgn gamma, eps * sgn gamma)`` per position of
    ``I_alpha`` followed by the final sign ``sgn <gamma_inf, alpha^vee>``.
    ``points`` are the breakpoints ``(x, g(x))`` at ``x = 0, 1/2, ..., n + 1/2``.
    """

    positions: tuple[int, ...]
    sigmas: tuple
    points: tuple

    @property
    def levels(self):
        """``g(k - 1/2)`` for ``k = 1..n``."""
        return tuple(v for x, v in self.points[1:-1:2])

    @property
    def endpoint(self):
        return self.points[-1][1]

    @property
    def maximum(self):
        return max(v for _, v in self.points)

    def c1_holds(self):
        return all(s in ((1, 1), (-1, -1), (1, -1)) for s in self.sigmas[:-1])

    def c2_holds(self):
        allowed = ((1, 1), (1, -1), 1)
        seq = self.sigmas
        if seq[0] not in allowed:
            return False
        return all(nxt in allowed for cur, nxt in zip(seq, seq[1:]) if cur == (1, 1))


def g_alpha_from_signs(sigmas):
    """Breakpoints of ``g_alpha`` from raw sign data (see :class:`LevelFunctionSamples`)."""
    half = Fraction(1, 2)
    y = -half
    pts = [(Fraction(0), y)]
    for k, (first, second) in enumerate(sigmas[:-1], start=1):
        y += first * half
        pts.append((k - half, y))
        y += second * half
        pts.append((Fraction(k), y))
    n = len(sigmas) - 1
    y += sigmas[-1] * half
    pts.append((n + half, y))
    return tuple(pts)


def g_alpha_samples(f, alpha):
    rs = f.system
    a = rs.root_index(alpha)
    if a >= rs.N:
        raise ValueError("alpha must be a positive root")
    I = f.positions_of(a)
    sig = []
    for i in I:
        s = 1 if f.gammas[i] < rs.N else -1
        sig.append((s, f.signs[i] * s))
    sig.append(_sgn(rs.pairing_index(f.gamma_inf, a)))
    return LevelFunctionSamples(tuple(I), tuple(sig), g_alpha_from_signs(sig))
