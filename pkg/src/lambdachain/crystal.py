"""Admissible subsets, root operators and the crystal graph they generate."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InternalInconsistency, InvalidColor, SizeCapExceeded
from .folding import folding_of, kappa, normalize_subset, weight_mu

__all__ = [
    "INFINITY",
    "AdmissibleSubset",
    "AuditReport",
    "ColorStats",
    "CrystalGraph",
    "CrystalNode",
    "build_crystal_graph",
    "color_stats",
    "delta",
    "e_op",
    "enumerate_admissible",
    "eps",
    "f_op",
    "graphs_isomorphic",
    "is_admissible",
    "m_stat",
    "stembridge_audit",
    "string_through",
]

INFINITY = math.inf
DEFAULT_CAP = 10**6


def is_admissible(chain, J):
    """True iff ``1 < r_{j_1} < r_{j_1} r_{j_2} < ...`` is a saturated Bruhat chain."""
    J = normalize_subset(chain, J)
    rs = chain.system
    perm = tuple(range(2 * rs.N))
    for j in J:
        perm = rs.cover_step(perm, chain.betas[j])
        if perm is None:
            return False
    return True


@dataclass(frozen=True)
class AdmissibleSubset:
    chain: object = field(repr=False, compare=False)
    positions: tuple[int, ...]

    @cached_property
    def kappa(self):
        return kappa(self.chain, self.positions)

    @cached_property
    def weight(self):
        return weight_mu(self.chain, self.positions)


def enumerate_admissible(chain, cap=DEFAULT_CAP):
    """All admissible subsets, in lexicographic order of their position lists."""
    rs = chain.system
    betas = chain.betas
    n = len(betas)
    found = [()]

    def extend(J, perm, start):
        for j in range(start, n):
            nxt = rs.cover_step(perm, betas[j])
            if nxt is not None:
                J2 = J + (j,)
                found.append(J2)
                if len(found) > cap:
                    raise SizeCapExceeded("number of admissible subsets", cap)
                extend(J2, nxt, j + 1)

    extend((), tuple(range(2 * rs.N)), 0)
    return [AdmissibleSubset(chain, J) for J in found]


@dataclass(frozen=True)
class ColorStats:
    """Level data of a folding along one simple root ``alpha_p``.

    ``m_F``/``m_E`` may be :data:`INFINITY`; unused fields are None.
    """

    p: int
    positions: tuple[int, ...]
    levels: tuple[int, ...]
    endpoint: int
    M: int
    m_F: float | int | None
    k_F: int | None
    k_E: int | None
    m_E: float | int | None

    @property
    def eps(self):
        return self.M

    @property
    def delta(self):
        return self.endpoint - self.M


def _check_color(chain, p):
    if not 0 <= p < chain.system.rank:
        raise InvalidColor(f"color {p} outside 0..{chain.system.rank - 1}")


def color_stats(chain, J, p, folding=None, mu=None):
    _check_color(chain, p)
    rs = chain.system
    f = folding if folding is not None else folding_of(chain, J)
    mu = mu if mu is not None else weight_mu(chain, f.J)
    a = rs.simple_indices[p]
    I = f.positions_of(a)
    L = [f.levels[i] for i in I]
    end = int(rs.pairing_index(mu, a))
    M = max(L + [end])
    m_F = k_F = k_E = m_E = None
    if M > 0:
        m_F = next((i for i, l in zip(I, L) if l == M), INFINITY)
        pos = len(I) if m_F == INFINITY else I.index(m_F)
        if pos == 0:
            raise InternalInconsistency(f"no predecessor for the F_{p} fold of {f.J}")
        k_F = I[pos - 1]
    if M > end:
        k_E = max(i for i, l in zip(I, L) if l == M)
        pos = I.index(k_E)
        m_E = I[pos + 1] if pos + 1 < len(I) else INFINITY
    return ColorStats(p, tuple(I), tuple(L), end, M, m_F, k_F, k_E, m_E)


def m_stat(chain, J, p):
    """``M(J, p)``: the largest ``alpha_p``-level, including the endpoint ``<mu(J), alpha_p^vee>``."""
    return color_stats(chain, J, p).M


def eps(chain, J, p):
    return color_stats(chain, J, p).eps


def delta(chain, J, p):
    return color_stats(chain, J, p).delta


def _flip(J, k, m):
    s = set(J) ^ {k}
    if m != INFINITY:
        s ^= {m}
    return tuple(sorted(s))


def f_op(chain, J, p, stats=None):
    """Lowering operator ``F_p``; returns the new position tuple or None."""
    st = stats if stats is not None else color_stats(chain, J, p)
    if st.M <= 0:
        return None
    return _flip(normalize_subset(chain, J), st.k_F, st.m_F)


def e_op(chain, J, p, stats=None):
    """Raising operator ``E_p``; returns the new position tuple or None."""
    st = stats if stats is not None else color_stats(chain, J, p)
    if st.k_E is None:
        return None
    return _flip(normalize_subset(chain, J), st.k_E, st.m_E)


def string_through(chain, J, p):
    """``(a, b)``: how many times ``F_p`` resp. ``E_p`` can be applied to ``J``."""
    J = normalize_subset(chain, J)
    a, x = 0, f_op(chain, J, p)
    while x is not None:
        a += 1
        x = f_op(chain, x, p)
    b, x = 0, e_op(chain, J, p)
    while x is not None:
        b += 1
        x = e_op(chain, x, p)
    return a, b


@dataclass(frozen=True)
class CrystalNode:
    subset: tuple[int, ...]
    weight: tuple
    eps: tuple[int, ...]
    delta: tuple[int, ...]
    stats: tuple = field(repr=False, compare=False, default=())


@dataclass
class CrystalGraph:
    """Nodes keyed by their position tuple; edges ``(src, dst, p)`` mean ``F_p(src) = dst``."""

    chain: object = field(repr=False)
    nodes: dict
    edges: list
    root: tuple = ()

    @property
    def system(self):
        return self.chain.system

    def __len__(self):
        return len(self.nodes)

    @cached_property
    def f_map(self):
        return {(s, p): d for s, d, p in self.edges}

    @cached_property
    def e_map(self):
        return {(d, p): s for s, d, p in self.edges}


def _make_node(chain, J):
    f = folding_of(chain, J)
    mu = weight_mu(chain, J)
    stats = tuple(color_stats(chain, J, p, folding=f, mu=mu) for p in range(chain.system.rank))
    return CrystalNode(f.J, mu, tuple(s.eps for s in stats), tuple(s.delta for s in stats), stats)


def build_crystal_graph(chain, cap=DEFAULT_CAP, cross_check=True):
    """Close ``{()}`` under all lowering operators ``F_p``.

    With ``cross_check`` the node set is compared against
    :func:`enumerate_admissible`, an independent generator.
    """
    r = chain.system.rank
    nodes = {(): _make_node(chain, ())}
    edges = []
    queue = deque([()])
    while queue:
        J = queue.popleft()
        node = nodes[J]
        for p in range(r):
            K = f_op(chain, J, p, stats=node.stats[p])
            if K is None:
                continue
            edges.append((J, K, p))
            if K not in nodes:
                nodes[K] = _make_node(chain, K)
                if len(nodes) > cap:
                    raise SizeCapExceeded("crystal", cap)
                queue.append(K)
    nodes = dict(sorted(nodes.items()))
    edges.sort()
    if cross_check:
        expected = [a.positions for a in enumerate_admissible(chain, cap)]
        if list(nodes) != expected:
            raise InternalInconsistency("root-operator closure differs from admissible enumeration")
    return CrystalGraph(chain, nodes, edges)


@dataclass
class AuditReport:
    """Failure messages per check; an empty list means the check passed."""

    checks: dict

    @property
    def ok(self):
        return all(not v for v in self.checks.values())

    def passed(self, name):
        return not self.checks[name]

    def lines(self):
        out = []
        for name, fails in self.checks.items():
            out.append(f"{name}: {'pass' if not fails else 'FAIL'}")
            out.extend(f"  {msg}" for msg in fails[:10])
        return out

    def __str__(self):
        return "\n".join(self.lines())


def stembridge_audit(graph):
    """Check the crystal axioms on a finite graph.

    A1-A3 and A5 are checked from the stored node data and edges only. A4 is
    checked by direct instantiation using the timing pattern ``t(J, p) = k_E``.
    ``inverse`` recomputes ``E_p`` from the chain, ``string`` checks
    ``a - b = <mu, alpha_p^vee>``.
    """
    chain = graph.chain
    rs = chain.system
    r = rs.rank
    nodes = graph.nodes
    checks = {k: [] for k in ("A1", "A2", "A3", "A4", "A5", "inverse", "string")}
    alpha_w = [rs.root_as_weight(rs.simple_root(p)) for p in range(r)]

    for key, node in nodes.items():
        for p in range(r):
            if node.eps[p] < 0 or node.delta[p] > 0:
                checks["A1"].append(f"{key} color {p}: eps={node.eps[p]}, delta={node.delta[p]}")

    out_deg, in_deg = {}, {}
    for s, d, p in graph.edges:
        out_deg[(s, p)] = out_deg.get((s, p), 0) + 1
        in_deg[(d, p)] = in_deg.get((d, p), 0) + 1
        if s not in nodes or d not in nodes:
            checks["A2"].append(f"edge {s} -> {d} leaves the node set")
    for k, v in list(out_deg.items()) + list(in_deg.items()):
        if v > 1:
            checks["A2"].append(f"{k}: {v} edges of one color")
    for p in range(r):
        sources = {s for (s, q) in out_deg if q == p}
        targets = {d for (d, q) in in_deg if q == p}
        want_src = {k for k, n in nodes.items() if n.eps[p] > 0}
        want_dst = {k for k, n in nodes.items() if n.delta[p] < 0}
        if sources != want_src:
            checks["A2"].append(f"color {p}: domain of F differs from {{eps > 0}}")
        if targets != want_dst:
            checks["A2"].append(f"color {p}: image of F differs from {{delta < 0}}")

    for s, d, p in graph.edges:
        if s not in nodes or d not in nodes:
            continue
        ns, nd = nodes[s], nodes[d]
        if tuple(x - y for x, y in zip(ns.weight, alpha_w[p])) != tuple(nd.weight):
            checks["A3"].append(f"{s} -{p}-> {d}: weight does not drop by alpha_{p}")
        if nd.delta[p] != ns.delta[p] - 1 or nd.eps[p] != ns.eps[p] - 1:
            checks["A3"].append(f"{s} -{p}-> {d}: depth/rise do not drop by 1")

    maximal = [k for k, n in nodes.items() if all(x == 0 for x in n.delta)]
    if maximal != [graph.root]:
        checks["A5"].append(f"maximal objects {maximal}, expected only {graph.root}")
    reach = {graph.root}
    todo = [graph.root]
    fm = graph.f_map
    while todo:
        x = todo.pop()
        for p in range(r):
            y = fm.get((x, p))
            if y is not None and y not in reach:
                reach.add(y)
                todo.append(y)
    if len(reach) != len(nodes):
        checks["A5"].append(f"{len(nodes) - len(reach)} nodes not below the root")

    em = graph.e_map
    for key, node in nodes.items():
        for p in range(r):
            st = node.stats[p] if node.stats else color_stats(chain, key, p)
            up = e_op(chain, key, p, stats=st)
            if up != em.get((key, p)):
                checks["inverse"].append(f"E_{p}{key} = {up}, graph says {em.get((key, p))}")
            if up is not None and f_op(chain, up, p) != key:
                checks["inverse"].append(f"F_{p}(E_{p}{key}) != {key}")
            down = fm.get((key, p))
            if down is not None and e_op(chain, down, p) != key:
                checks["inverse"].append(f"E_{p}(F_{p}{key}) != {key}")
            a = b = 0
            x = down
            while x is not None:
                a += 1
                x = fm.get((x, p))
            x = em.get((key, p))
            while x is not None:
                b += 1
                x = em.get((x, p))
            if a - b != rs.pairing(node.weight, rs.simple_root(p)):
                checks["string"].append(f"{key} color {p}: a-b={a - b}, <mu,alpha^vee>={node.weight[p]}")

    _audit_timing(graph, checks["A4"])
    return AuditReport(checks)


def _audit_timing(graph, fails):
    chain = graph.chain
    r = chain.system.rank
    nodes = graph.nodes
    fm, em = graph.f_map, graph.e_map

    def timing(key, p):
        node = nodes[key]
        st = node.stats[p] if node.stats else color_stats(chain, key, p)
        return st.k_E

    upward = {}

    def upward_profile(key, q):
        # (delta(y, q), t(y, q)) for y = E_q^k(key), k >= 0, with delta < 0
        if (key, q) in upward:
            return upward[(key, q)]
        out = []
        y = key
        while y is not None:
            d = nodes[y].delta[q]
            if d < 0:
                out.append((d, timing(y, q)))
            y = em.get((y, q))
        upward[(key, q)] = out
        return out

    for key, node in nodes.items():
        for p in range(r):
            if node.delta[p] >= 0 or node.eps[p] <= 0:
                continue
            down = fm.get((key, p))
            if down is None:
                continue
            t0 = timing(key, p)
            t1 = timing(down, p)
            if t1 is None or not t0 > t1:
                fails.append(f"t({key},{p})={t0} not > t(F_{p}{key},{p})={t1}")
            for q in range(r):
                if q == p:
                    continue
                here = {x for x in upward_profile(key, q) if x[1] >= t0}
                there = {x for x in upward_profile(down, q) if x[1] >= t0}
                if here != there:
                    fails.append(f"coherence fails at {key}, p={p}, q={q}")


def graphs_isomorphic(g1, g2):
    """Deterministic parallel traversal matching colored edges and weights."""
    if g1.system.rank != g2.system.rank or len(g1) != len(g2):
        return False
    r = g1.system.rank
    f1, f2 = g1.f_map, g2.f_map
    match = {g1.root: g2.root}
    used = {g2.root}
    todo = [g1.root]
    if tuple(g1.nodes[g1.root].weight) != tuple(g2.nodes[g2.root].weight):
        return False
    while todo:
        x = todo.pop()
        y = match[x]
        for p in range(r):
            x2, y2 = f1.get((x, p)), f2.get((y, p))
            if (x2 is None) != (y2 is None):
                return False
            if x2 is None:
                continue
            if x2 in match:
                if match[x2] != y2:
                    return False
                continue
            if y2 in used or tuple(g1.nodes[x2].weight) != tuple(g2.nodes[y2].weight):
                return False
            match[x2] = y2
            used.add(y2)
            todo.append(x2)
    return len(match) == len(g1)
