"""Finite-type geometry: alcove coordinates, gallery path points and LS chains."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .crystal import is_admissible
from .errors import NotAdmissible, NotIrreducible, NotLexChain, ShiViolation
from .folding import folding_of, normalize_subset, weight_mu

__all__ = [
    "AlcoveCoords",
    "GalleryPath",
    "LSChain",
    "LSValidation",
    "alcove_coords",
    "central_points",
    "coxeter_number",
    "is_central_point",
    "ls_chain_of",
    "orbit_rank",
    "path_difference_defects",
    "path_points",
    "validate_ls_chain",
]


def _require_irreducible(system):
    if not system.is_irreducible:
        raise NotIrreducible(f"{system!r} is not irreducible")


def _scale(v, c):
    return tuple(Fraction(x) * c for x in v)


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def coxeter_number(system):
    """``h = <rho, theta^vee> + 1`` with ``theta^vee`` the highest coroot."""
    _require_irreducible(system)
    return int(system.pairing(system.rho, system.highest_coroot())) + 1


@dataclass(frozen=True)
class AlcoveCoords:
    """``steps[i][a] = m_alpha^i`` for the positive root with index ``a``."""

    system: object = field(repr=False)
    steps: tuple

    def shi_defects(self):
        """``(i, (a, b, g), value)`` for every Shi value outside ``{0, 1}``."""
        out = []
        for i, m in enumerate(self.steps):
            for a, b, g in self.system.triples:
                v = m[g] - m[a] - m[b]
                if v not in (0, 1):
                    out.append((i, (a, b, g), v))
        return out

    def sequence(self, alpha):
        """``(m_alpha^0, ..., m_alpha^l)`` for a positive root ``alpha``."""
        a = self.system.root_index(alpha)
        return tuple(m[a] for m in self.steps)


def alcove_coords(chain):
    """Integer coordinates ``m_alpha^i = -#{j <= i : beta_j = alpha}`` of the alcove path.

    Raises :class:`ShiViolation` if some step fails the Shi condition.
    """
    rs = chain.system
    _require_irreducible(rs)
    cur = [0] * rs.N
    steps = [tuple(cur)]
    for b in chain.betas:
        cur[b] -= 1
        steps.append(tuple(cur))
    coords = AlcoveCoords(rs, tuple(steps))
    bad = coords.shi_defects()
    if bad:
        i, (a, b, g), v = bad[0]
        raise ShiViolation(f"step {i}: m_gamma - m_alpha - m_beta = {v} for {rs.roots[a]}, {rs.roots[b]}")
    return coords


def central_points(chain):
    """``zeta_{A_0} = rho/h`` and ``zeta_{A_i} = zeta_{A_{i-1}} - beta_i/h``."""
    rs = chain.system
    h = coxeter_number(rs)
    z = _scale(rs.rho, Fraction(1, h))
    out = [z]
    for i in range(len(chain)):
        z = _sub(z, _scale(rs.root_as_weight(chain.root(i)), Fraction(1, h)))
        out.append(z)
    return out


def is_central_point(system, zeta):
    """True iff ``zeta`` lies in ``Lambda/h`` and on no affine hyperplane ``H_{alpha,k}``."""
    h = coxeter_number(system)
    if any((Fraction(x) * h).denominator != 1 for x in zeta):
        return False
    return all(Fraction(system.pairing_index(zeta, i)).denominator != 1 for i in range(system.N))


@dataclass(frozen=True)
class GalleryPath:
    """Points ``eta'_0, ..., eta'_{2l+2}`` in fundamental-weight coordinates."""

    points: tuple
    h: int
    J: tuple = ()

    @property
    def endpoint(self):
        return self.points[-1]

    def __len__(self):
        return len(self.points)


def path_points(chain, J=()):
    """Fold the straight path of the empty subset along the faces indexed by ``J``.

    The unfolded points are ``0``, the central points, the midpoints between
    consecutive central points, and ``-lam``. Point ``n`` is moved by the
    reflections ``s_{beta_j, -l_j^0}`` over ``j in J`` whose face precedes it.
    """
    rs = chain.system
    h = coxeter_number(rs)
    J = normalize_subset(chain, J)
    if not is_admissible(chain, J):
        raise NotAdmissible(f"{J} is not admissible")
    zs = central_points(chain)
    l = len(chain)
    eta = [tuple(Fraction(0) for _ in range(rs.rank))]
    for i in range(l + 1):
        if i:
            eta.append(_scale(_add(zs[i - 1], zs[i]), Fraction(1, 2)))
        eta.append(zs[i])
    eta.append(tuple(Fraction(-x) for x in chain.lam))
    l0 = chain.initial_levels
    out = []
    for n, pt in enumerate(eta):
        # position j (0-based) folds points with index >= 2j + 3
        active = [j for j in J if 2 * (j + 1) < n]
        for j in reversed(active):
            pt = rs.affine_reflect_index(chain.betas[j], -l0[j], pt)
        out.append(tuple(Fraction(x) for x in pt))
    return GalleryPath(tuple(out), h, J)


def path_difference_defects(chain, J):
    """Differences between consecutive folded points that do not match the folding data."""
    rs = chain.system
    path = path_points(chain, J)
    f = folding_of(chain, J)
    h = path.h
    pts = path.points
    l = len(chain)
    bad = []
    for i in range(1, l + 1):
        g = rs.root_as_weight(f.gamma(i - 1))
        if _sub(pts[2 * i - 1], pts[2 * i]) != _scale(g, Fraction(1, 2 * h)):
            bad.append((2 * i - 1, 2 * i))
        if _sub(pts[2 * i], pts[2 * i + 1]) != _scale(g, Fraction(f.signs[i - 1], 2 * h)):
            bad.append((2 * i, 2 * i + 1))
    if _sub(pts[2 * l + 1], pts[2 * l + 2]) != _scale(f.gamma_inf, Fraction(1, h)):
        bad.append((2 * l + 1, 2 * l + 2))
    if pts[0] != _scale(rs.zero_weight(), 1) or pts[1] != _scale(rs.rho, Fraction(1, h)):
        bad.append((0, 1))
    if pts[-1] != tuple(Fraction(-x) for x in weight_mu(chain, J)):
        bad.append(("endpoint",))
    return bad


def orbit_rank(system, mu):
    """``#{alpha > 0 : <mu, alpha^vee> > 0}``; grows by one along each Bruhat cover in an orbit."""
    return sum(1 for i in range(system.N) if system.pairing_index(mu, i) > 0)


@dataclass(frozen=True)
class LSChain:
    """Weights ``nu_0 < ... < nu_l`` in the orbit of ``-lam`` with jump times ``0 < a_1 < ... < a_l < 1``.

    ``steps[k]`` lists the intermediate orbit weights from ``nu_{k}`` to
    ``nu_{k+1}`` (both ends included) together with the chain roots used.
    """

    weights: tuple
    times: tuple
    steps: tuple = field(repr=False, compare=False, default=())

    def endpoint(self):
        """``pi(1)``: the integral of the piecewise-constant direction map."""
        bounds = (Fraction(0),) + tuple(self.times) + (Fraction(1),)
        total = tuple(Fraction(0) for _ in self.weights[0])
        for k, w in enumerate(self.weights):
            total = _add(total, _scale(w, bounds[k + 1] - bounds[k]))
        return total


@dataclass
class LSValidation:
    orbit_form: list
    construction_form: list

    @property
    def ok(self):
        return not self.orbit_form and not self.construction_form

    @property
    def forms_agree(self):
        return bool(self.orbit_form) == bool(self.construction_form)


def ls_chain_of(chain, J):
    """The LS chain attached to an admissible subset of a lexicographic chain."""
    if chain.order is None:
        raise NotLexChain("LS chains are defined only for lexicographic chains")
    rs = chain.system
    J = normalize_subset(chain, J)
    if not is_admissible(chain, J):
        raise NotAdmissible(f"{J} is not admissible")
    t = {}
    for j in J:
        t[j] = Fraction(chain.initial_levels[j], rs.pairing_index(chain.lam, chain.betas[j]))
    groups = {}
    for j in J:
        groups.setdefault(t[j], []).append(j)
    if Fraction(0) not in groups:
        groups[Fraction(0)] = []
    times = sorted(groups)
    w = rs.identity()
    weights, steps = [], []
    for k, a in enumerate(times):
        seq = [(tuple(-x for x in w.act_on_weight(chain.lam)), None)]
        for j in groups[a]:
            w = rs.compose(w, rs.reflection(chain.root(j)))
            seq.append((tuple(-x for x in w.act_on_weight(chain.lam)), j))
        weights.append(seq[-1][0])
        steps.append((a, tuple(seq)))
    return LSChain(tuple(weights), tuple(times[1:]), tuple(steps))


def validate_ls_chain(chain, ls):
    """Check every step of ``ls`` in both integrality forms.

    Orbit form: the step is a Bruhat cover ``s_alpha(nu) < nu`` in the orbit and
    ``a <nu, alpha^vee>`` is an integer. Construction form: ``a <lam, beta_j^vee>``
    is an integer for the chain root ``beta_j`` used at that step.
    """
    rs = chain.system
    orbit, construct = [], []
    for a, seq in ls.steps:
        for (lo, _), (hi, j) in zip(seq, seq[1:]):
            found = None
            for i in range(rs.N):
                if rs.pairing_index(hi, i) > 0 and rs.affine_reflect_index(i, 0, hi) == lo:
                    found = i
                    break
            if found is None or orbit_rank(rs, hi) - orbit_rank(rs, lo) != 1:
                orbit.append((a, lo, hi, "not a Bruhat cover"))
            elif (a * rs.pairing_index(hi, found)).denominator != 1:
                orbit.append((a, lo, hi, "orbit integrality"))
            if (a * rs.pairing_index(chain.lam, chain.betas[j])).denominator != 1:
                construct.append((a, lo, hi, "construction integrality"))
    return LSValidation(orbit, construct)
