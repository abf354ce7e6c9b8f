"""Characters from admissible subsets, and classical oracles to check them against.

Characters and decompositions are :class:`collections.Counter` objects keyed by
weights in fundamental-weight coordinates.
"""

from __future__ import annotations

from collections import Counter, deque
from fractions import Fraction
from functools import lru_cache

from .chain import lex_lambda_chain
from .crystal import DEFAULT_CAP, build_crystal_graph, enumerate_admissible
from .errors import InternalInconsistency, InvalidColor, NotDominant, SizeCapExceeded
from .folding import weight_mu

__all__ = [
    "branch",
    "character",
    "freudenthal_multiplicities",
    "levi_recombine",
    "lex_character",
    "lr_decompose",
    "restricted_dominant",
    "tensor_oracle",
    "weyl_dimension",
]

WEIGHT_CAP = 5 * 10**6


def _clean(mu):
    return tuple(int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in mu)


def _check_dominant(system, lam, subset=None):
    lam = tuple(lam)
    if len(lam) != system.rank:
        raise ValueError(f"weight has {len(lam)} coordinates, expected {system.rank}")
    if not system.is_dominant(lam, subset) or any(Fraction(x).denominator != 1 for x in lam):
        raise NotDominant(f"{lam} is not a dominant integral weight")
    return _clean(lam)


def _check_subset(system, subset):
    subset = tuple(sorted(set(subset)))
    for p in subset:
        if not 0 <= p < system.rank:
            raise InvalidColor(f"color {p} outside 0..{system.rank - 1}")
    return subset


def character(chain, cap=DEFAULT_CAP):
    """Multiset ``{mu(J) : J admissible}``."""
    out = Counter()
    for a in enumerate_admissible(chain, cap):
        out[_clean(weight_mu(chain, a.positions))] += 1
    return out


def weyl_dimension(system, lam, subset=None):
    """``prod <lam + rho, alpha^vee> / <rho, alpha^vee>`` over the positive roots
    (of the parabolic subsystem on ``subset`` if given)."""
    subset = None if subset is None else _check_subset(system, subset)
    lam = _check_dominant(system, lam, subset)
    idx = range(system.N) if subset is None else system.subsystem_positive_indices(subset)
    num = den = 1
    for i in idx:
        c = system.coroot_of_index(i)
        num *= sum(x * (y + 1) for x, y in zip(c, lam))
        den *= sum(c)
    q = Fraction(num, den)
    if q.denominator != 1:
        raise InternalInconsistency(f"non-integral dimension {q}")
    return int(q)


def freudenthal_multiplicities(system, lam, subset=None, cap=WEIGHT_CAP):
    """Weight multiplicities of the irreducible module of highest weight ``lam``.

    With ``subset`` the module is the one of the Levi subalgebra generated by
    ``{alpha_p : p in subset}`` (``lam`` only needs to be dominant for those).
    Uses Freudenthal's recursion; no crystal data involved.
    """
    subset = tuple(range(system.rank)) if subset is None else _check_subset(system, subset)
    lam = _check_dominant(system, lam, subset)
    return Counter(dict(_freudenthal(system, lam, subset, cap)))


@lru_cache(maxsize=4096)
def _freudenthal(system, lam, subset, cap):
    r = system.rank
    outside = [q for q in range(r) if q not in subset]
    pos = system.subsystem_positive_indices(subset)
    alphas = [system.roots[i] for i in pos]
    alpha_w = [system.root_as_weight(a) for a in alphas]
    simple_w = {p: system.root_as_weight(system.simple_root(p)) for p in subset}

    rho = [Fraction(0)] * r
    for w in alpha_w:
        for q in range(r):
            rho[q] += Fraction(w[q], 2)
    rho = tuple(rho)

    def depth(mu):
        d = system.to_root_coords(tuple(x - y for x, y in zip(lam, mu)))
        if any(Fraction(x).denominator != 1 or x < 0 for x in d) or any(d[q] for q in outside):
            return None
        return int(sum(d))

    weights = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for p in subset:
            nu = _clean(tuple(x - y for x, y in zip(mu, simple_w[p])))
            if nu in weights:
                continue
            if depth(system.dominant_conjugate(nu, subset)) is None:
                continue
            weights.add(nu)
            if len(weights) > cap:
                raise SizeCapExceeded("weight set", cap)
            queue.append(nu)

    def shifted_norm(mu):
        v = tuple(x + y for x, y in zip(mu, rho))
        return system.form(v, v)

    top = shifted_norm(lam)
    dominant = sorted((mu for mu in weights if system.is_dominant(mu, subset)), key=lambda m: (depth(m), m))
    mult = {}
    for mu in dominant:
        if mu == lam:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for a, aw in zip(alphas, alpha_w):
            k = 1
            while True:
                nu = _clean(tuple(x + k * y for x, y in zip(mu, aw)))
                if nu not in weights:
                    break
                total += mult[system.dominant_conjugate(nu, subset)] * system.form(nu, aw)
                k += 1
        gap = top - shifted_norm(mu)
        if gap <= 0:
            raise InternalInconsistency(f"Freudenthal denominator {gap} at {mu}")
        m = 2 * total / gap
        if m.denominator != 1 or m < 0:
            raise InternalInconsistency(f"multiplicity {m} at {mu}")
        mult[mu] = int(m)
    return tuple(sorted((mu, mult[system.dominant_conjugate(mu, subset)]) for mu in weights if mult[system.dominant_conjugate(mu, subset)]))


def _extract(system, product, cap):
    """Decompose a W-invariant multiset into irreducible characters."""
    remaining = Counter(product)
    out = Counter()
    while remaining:
        dom = [mu for mu in remaining if system.is_dominant(mu)]
        top = max(dom, key=lambda m: (system.height(m), m))
        n = remaining[top]
        out[top] += n
        for mu, m in freudenthal_multiplicities(system, top, cap=cap).items():
            left = remaining[mu] - n * m
            if left < 0:
                raise InternalInconsistency(f"negative remainder at {mu}")
            if left:
                remaining[mu] = left
            else:
                del remaining[mu]
    return out


def tensor_oracle(system, lam, nu, cap=WEIGHT_CAP):
    """Decompose ``V(lam) (x) V(nu)`` from Freudenthal characters alone."""
    a = freudenthal_multiplicities(system, lam, cap=cap)
    b = freudenthal_multiplicities(system, nu, cap=cap)
    if sum(a.values()) * sum(b.values()) > cap:
        raise SizeCapExceeded("tensor product", cap)
    prod = Counter()
    for x, m in a.items():
        for y, n in b.items():
            prod[_clean(tuple(s + t for s, t in zip(x, y)))] += m * n
    return _extract(system, prod, cap)


def lr_decompose(chain, nu, cap=DEFAULT_CAP, graph=None):
    """``V(lam) (x) V(nu)`` as the multiset of ``nu + mu(J)`` over admissible ``J``
    with ``<nu + mu(J), alpha_p^vee> >= M(J, p)`` for every ``p``.

    Pass a prebuilt ``graph`` of ``chain`` to skip rebuilding it.
    """
    rs = chain.system
    nu = _check_dominant(rs, nu)
    if graph is None:
        graph = build_crystal_graph(chain, cap, cross_check=False)
    out = Counter()
    for node in graph.nodes.values():
        w = _clean(tuple(x + y for x, y in zip(nu, node.weight)))
        if all(w[p] >= node.eps[p] for p in range(rs.rank)):
            out[w] += 1
    return out


def branch(chain, subset, cap=DEFAULT_CAP, graph=None):
    """Restriction to the Levi subalgebra on ``subset``: the multiset of ``mu(J)``
    over admissible ``J`` with ``<mu(J), alpha_p^vee> = M(J, p)`` for ``p`` in ``subset``."""
    rs = chain.system
    subset = _check_subset(rs, subset)
    if graph is None:
        graph = build_crystal_graph(chain, cap, cross_check=False)
    out = Counter()
    for node in graph.nodes.values():
        if all(node.delta[p] == 0 for p in subset):
            out[_clean(node.weight)] += 1
    return out


def levi_recombine(system, decomposition, subset, cap=WEIGHT_CAP):
    """Sum of Levi characters ``mult * chi_P(mu)`` over a branching decomposition."""
    subset = _check_subset(system, subset)
    out = Counter()
    for mu, m in decomposition.items():
        for w, n in freudenthal_multiplicities(system, mu, subset, cap).items():
            out[w] += m * n
    return out


def restricted_dominant(system, lam, subset, cap=WEIGHT_CAP):
    """Oracle branching: decompose the full character of ``lam`` over the Levi subalgebra."""
    subset = _check_subset(system, subset)
    remaining = Counter(freudenthal_multiplicities(system, lam, cap=cap))
    out = Counter()
    while remaining:
        dom = [mu for mu in remaining if system.is_dominant(mu, subset)]
        top = max(dom, key=lambda m: (system.height(m), m))
        n = remaining[top]
        out[top] += n
        for mu, m in freudenthal_multiplicities(system, top, subset, cap).items():
            left = remaining[mu] - n * m
            if left < 0:
                raise InternalInconsistency(f"negative remainder at {mu}")
            if left:
                remaining[mu] = left
            else:
                del remaining[mu]
    return out


def lex_character(system, lam, order=None, cap=DEFAULT_CAP):
    """Shortcut: character of ``lam`` via its lexicographic chain."""
    return character(lex_lambda_chain(system, lam, order), cap)
