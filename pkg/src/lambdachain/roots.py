"""Finite crystallographic root systems, weights and Weyl group elements.

Conventions
-----------
* The Cartan matrix is stored as ``C[p][q] = <alpha_q, alpha_p^vee>`` so that
  ``s_p(alpha_q) = alpha_q - C[p][q] alpha_p``.
* Roots are integer tuples in the simple-root basis.  Coroots are integer
  tuples in the simple-coroot basis.
* Weights are tuples in the fundamental-weight basis whose entries are ``int``
  or ``Fraction``; every operation here is exact.
* Simple roots, colors and positions are 0-based in the Python API.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm

from .errors import NotFiniteType, NotIrreducible, RankZero

__all__ = [
    "CartanSpec",
    "RootSystem",
    "WeylElement",
    "build_root_system",
    "cartan_matrix",
    "root_system",
]


def cartan_matrix(letter, rank):
    """Cartan matrix of an irreducible finite type, Bourbaki numbering.

    In type G2 the first simple root is short; in B_r the last one is short,
    in C_r the last one is long.
    """
    letter = letter.upper()
    r = rank
    if r < 1:
        raise RankZero("rank must be positive")
    C = [[2 if p == q else 0 for q in range(r)] for p in range(r)]

    def link(p, q, pq=-1, qp=-1):
        C[p][q] = pq
        C[q][p] = qp

    if letter == "A":
        for p in range(r - 1):
            link(p, p + 1)
    elif letter in ("B", "C"):
        if r < 2:
            raise NotFiniteType(f"{letter}{r} is not a valid type; use A1")
        for p in range(r - 2):
            link(p, p + 1)
        if letter == "B":
            # alpha_r short: <alpha_r, alpha_{r-1}^vee> = -1, <alpha_{r-1}, alpha_r^vee> = -2
            link(r - 2, r - 1, pq=-1, qp=-2)
        else:
            link(r - 2, r - 1, pq=-2, qp=-1)
    elif letter == "D":
        if r < 4:
            raise NotFiniteType(f"D{r} is not a valid type (need rank >= 4)")
        for p in range(r - 2):
            link(p, p + 1)
        link(r - 3, r - 1)
    elif letter == "E":
        if r not in (6, 7, 8):
            raise NotFiniteType(f"E{r} is not a finite type")
        # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for p in range(2, r - 1):
            link(p, p + 1)
    elif letter == "F":
        if r != 4:
            raise NotFiniteType("type F exists only in rank 4")
        link(0, 1)
        link(1, 2, pq=-1, qp=-2)
        link(2, 3)
    elif letter == "G":
        if r != 2:
            raise NotFiniteType("type G exists only in rank 2")
        link(0, 1, pq=-3, qp=-1)
    else:
        raise NotFiniteType(f"unknown type letter {letter!r}")
    return tuple(tuple(row) for row in C)


@dataclass(frozen=True)
class CartanSpec:
    """Either a type label such as ``"G2"`` or an explicit integer matrix."""

    matrix: tuple[tuple[int, ...], ...]
    name: str | None = None

    @classmethod
    def from_type(cls, letter, rank):
        return cls(cartan_matrix(letter, rank), f"{letter.upper()}{rank}")

    @classmethod
    def parse(cls, label):
        """Parse labels like ``"A2"``, ``"G2"`` or products ``"A1xB2"``."""
        parts = re.split(r"[xX*× ]+", label.strip())
        blocks = []
        for part in parts:
            m = re.fullmatch(r"([A-Ga-g])(\d+)", part)
            if not m:
                raise NotFiniteType(f"cannot parse type label {label!r}")
            blocks.append(cartan_matrix(m.group(1), int(m.group(2))))
        if len(blocks) == 1:
            return cls(blocks[0], label.strip().upper())
        n = sum(len(b) for b in blocks)
        C = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for p, row in enumerate(b):
                for q, v in enumerate(row):
                    C[off + p][off + q] = v
            off += len(b)
        return cls(tuple(map(tuple, C)), label.strip().upper())

    @property
    def rank(self):
        return len(self.matrix)


def _components(C):
    r = len(C)
    seen = [False] * r
    comps = []
    for start in range(r):
        if seen[start]:
            continue
        comp, todo = [], [start]
        seen[start] = True
        while todo:
            p = todo.pop()
            comp.append(p)
            for q in range(r):
                if not seen[q] and (C[p][q] or C[q][p]):
                    seen[q] = True
                    todo.append(q)
        comps.append(sorted(comp))
    return comps


def _symmetrizer(C):
    """Integers d_p = <alpha_p, alpha_p>/2 with d_p C[p][q] symmetric, min 1 per component."""
    r = len(C)
    d = [None] * r
    for comp in _components(C):
        d[comp[0]] = Fraction(1)
        todo = [comp[0]]
        while todo:
            p = todo.pop()
            for q in comp:
                if q == p or (C[p][q] == 0 and C[q][p] == 0):
                    continue
                if C[p][q] == 0 or C[q][p] == 0:
                    raise NotFiniteType("Cartan matrix is not symmetrizable")
                dq = d[p] * C[p][q] / C[q][p]
                if d[q] is None:
                    d[q] = dq
                    todo.append(q)
                elif d[q] != dq:
                    raise NotFiniteType("Cartan matrix is not symmetrizable")
        lo = min(d[p] for p in comp)
        for p in comp:
            d[p] /= lo
        scale = lcm(*(d[p].denominator for p in comp))
        for p in comp:
            d[p] *= scale
    return tuple(int(x) for x in d)


def _is_positive_definite(B):
    n = len(B)
    A = [[Fraction(x) for x in row] for row in B]
    for k in range(n):
        if A[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            for j in range(k, n):
                A[i][j] -= f * A[k][j]
    return True


def _invert(M):
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(i for i in range(col, n) if A[i][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [x / pv for x in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return tuple(tuple(row[n:]) for row in A)


def _sign(root):
    for c in root:
        if c:
            return 1 if c > 0 else -1
    return 0


class RootSystem:
    """A finite root system built from Cartan data.

    Positive roots are indexed ``0..N-1`` and their negatives ``N..2N-1``;
    :meth:`neg` maps an index to the index of the opposite root.
    """

    def __init__(self, spec):
        C = spec.matrix
        r = len(C)
        if r == 0:
            raise RankZero("rank must be positive")
        if any(len(row) != r for row in C):
            raise NotFiniteType("Cartan matrix must be square")
        for p in range(r):
            if C[p][p] != 2:
                raise NotFiniteType("diagonal entries must equal 2")
            for q in range(r):
                if p != q and C[p][q] > 0:
                    raise NotFiniteType("off-diagonal entries must be <= 0")
        self.spec = spec
        self.name = spec.name
        self.cartan = tuple(tuple(int(x) for x in row) for row in C)
        self.rank = r
        self.symmetrizer = _symmetrizer(self.cartan)
        sym = [[self.symmetrizer[p] * C[p][q] for q in range(r)] for p in range(r)]
        if not _is_positive_definite(sym):
            raise NotFiniteType("symmetrized Cartan matrix is not positive definite")
        self.components = _components(self.cartan)
        self._cartan_inv = _invert(self.cartan)

        positives = self._generate_positive_roots()
        positives.sort(key=lambda a: (sum(a), tuple(-x for x in a)))
        self.positive_roots = tuple(positives)
        self.N = len(positives)
        self.roots = self.positive_roots + tuple(tuple(-x for x in a) for a in positives)
        self.index = {a: i for i, a in enumerate(self.roots)}
        self.simple_indices = tuple(self.index[self.simple_root(p)] for p in range(r))

        self._coroots = tuple(self._coroot_coords(a) for a in self.roots)
        self._root_weights = tuple(self._to_weight(a) for a in self.roots)
        # _refl[b][i] = index of s_{beta_b}(root_i) for positive b
        self._refl = tuple(
            tuple(self.index[self._reflect_root_coords(b, a)] for a in self.roots) for b in range(self.N)
        )
        self._cover_cache = {}

    # -- construction helpers -------------------------------------------------

    def _generate_positive_roots(self):
        r, C = self.rank, self.cartan
        simple = [tuple(int(p == q) for q in range(r)) for p in range(r)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for p in range(r):
                c = sum(beta[q] * C[p][q] for q in range(r))
                new = list(beta)
                new[p] -= c
                new = tuple(new)
                if _sign(new) > 0 and all(x >= 0 for x in new) and new not in seen:
                    seen.add(new)
                    queue.append(new)
        return list(seen)

    def _norm(self, a):
        # (a, a) / 2 using (alpha_p, alpha_q) = d_p C[p][q]
        d, C, r = self.symmetrizer, self.cartan, self.rank
        return Fraction(sum(a[p] * a[q] * d[p] * C[p][q] for p in range(r) for q in range(r)), 2)

    def _coroot_coords(self, a):
        da = self._norm(a)
        out = []
        for q in range(self.rank):
            c = Fraction(a[q] * self.symmetrizer[q]) / da
            if c.denominator != 1:
                raise NotFiniteType("non-integral coroot; Cartan data is not crystallographic")
            out.append(int(c))
        return tuple(out)

    def _to_weight(self, a):
        C, r = self.cartan, self.rank
        return tuple(sum(C[p][q] * a[q] for q in range(r)) for p in range(r))

    def _reflect_root_coords(self, b, a):
        beta = self.roots[b]
        c = self.pair_roots(a, beta)
        return tuple(x - c * y for x, y in zip(a, beta))

    # -- basic data -------------------------------------------------------------

    def __repr__(self):
        return f"RootSystem({self.name or self.cartan!r})"

    def simple_root(self, p):
        return tuple(int(p == q) for q in range(self.rank))

    @property
    def rho(self):
        return (1,) * self.rank

    def zero_weight(self):
        return (0,) * self.rank

    def fundamental_weight(self, p):
        return tuple(int(p == q) for q in range(self.rank))

    def neg(self, i):
        return i + self.N if i < self.N else i - self.N

    def is_positive(self, root):
        return _sign(root) > 0

    def root_index(self, root):
        return self.index[tuple(root)]

    def coroot(self, root):
        """Coroot coordinates of ``root`` in the simple-coroot basis."""
        return self._coroots[self.index[tuple(root)]]

    def coroot_of_index(self, i):
        return self._coroots[i]

    def root_as_weight(self, root):
        """Fundamental-weight coordinates of a root."""
        return self._root_weights[self.index[tuple(root)]]

    def root_norm(self, root):
        """``<alpha, alpha>/2`` in the normalization where short roots give 1."""
        return self._norm(tuple(root))

    def pair_roots(self, beta, alpha):
        """``<beta, alpha^vee>`` for two roots given in root coordinates."""
        C, r = self.cartan, self.rank
        c = self._coroots[self.index[tuple(alpha)]]
        return sum(c[q] * sum(beta[t] * C[q][t] for t in range(r)) for q in range(r))

    def pairing(self, mu, alpha):
        """``<mu, alpha^vee>`` for a weight ``mu`` and a root ``alpha``."""
        c = self._coroots[self.index[tuple(alpha)]]
        return sum(x * y for x, y in zip(c, mu))

    def pairing_index(self, mu, i):
        c = self._coroots[i]
        return sum(x * y for x, y in zip(c, mu))

    def reflect_weight(self, alpha, mu):
        """``s_alpha(mu) = mu - <mu, alpha^vee> alpha``."""
        i = self.index[tuple(alpha)]
        return self.affine_reflect_index(i, 0, mu)

    def reflect_root(self, alpha, beta):
        i = self.index[tuple(alpha)]
        if i >= self.N:
            i -= self.N
        return self.roots[self._refl[i][self.index[tuple(beta)]]]

    def affine_reflect(self, alpha, k, mu):
        """Reflection in the hyperplane ``<x, alpha^vee> = k``: ``s_alpha(mu) + k alpha``."""
        return self.affine_reflect_index(self.index[tuple(alpha)], k, mu)

    def affine_reflect_index(self, i, k, mu):
        c = self.pairing_index(mu, i) - k
        a = self._root_weights[i]
        return tuple(x - c * y for x, y in zip(mu, a))

    def reflection_table(self, b):
        """Permutation of root indices induced by ``s_{beta_b}`` for positive index ``b``."""
        return self._refl[b]

    # -- weights ----------------------------------------------------------------

    def to_root_coords(self, mu):
        """Express a weight in the simple-root basis (rational coordinates)."""
        Ci = self._cartan_inv
        return tuple(sum(Ci[p][q] * mu[q] for q in range(self.rank)) for p in range(self.rank))

    def height(self, mu):
        return sum(self.to_root_coords(mu))

    def is_dominant(self, mu, subset=None):
        idx = range(self.rank) if subset is None else subset
        return all(mu[p] >= 0 for p in idx)

    def dominant_conjugate(self, mu, subset=None):
        """Return the dominant element of the (parabolic) Weyl orbit of ``mu``."""
        idx = tuple(range(self.rank)) if subset is None else tuple(subset)
        mu = tuple(mu)
        while True:
            for p in idx:
                if mu[p] < 0:
                    mu = self.affine_reflect_index(self.simple_indices[p], 0, mu)
                    break
            else:
                return mu

    def form(self, mu, nu):
        """Symmetric bilinear form ``(mu, nu)`` on weights (exact rational)."""
        n = self.to_root_coords(nu)
        return sum(n[q] * self.symmetrizer[q] * mu[q] for q in range(self.rank))

    # -- Weyl group ---------------------------------------------------------------

    def identity(self):
        return WeylElement(self, tuple(range(2 * self.N)), 0)

    def reflection(self, alpha):
        i = self.index[tuple(alpha)]
        if i >= self.N:
            i -= self.N
        return self._element(self._refl[i])

    def simple_reflection(self, p):
        return self.reflection(self.simple_root(p))

    def _element(self, perm):
        return WeylElement(self, perm, sum(1 for i in range(self.N) if perm[i] >= self.N))

    def compose(self, u, w):
        """The product ``u w`` (apply ``w`` first)."""
        up = u.perm
        return self._element(tuple(up[i] for i in w.perm))

    def length(self, w):
        return w.length

    def from_word(self, word):
        w = self.identity()
        for p in word:
            w = self.compose(w, self.simple_reflection(p))
        return w

    def is_cover(self, w, beta):
        """True iff ``w s_beta`` covers ``w`` in Bruhat order."""
        b = self.index[tuple(beta)]
        return self.cover_step(w.perm, b) is not None

    def cover_step(self, perm, b):
        """Permutation of ``w s_{beta_b}`` if it covers ``w`` (given as a permutation), else None.

        Results are memoized; the number of distinct keys is bounded by |W| * N.
        """
        key = (perm, b)
        try:
            return self._cover_cache[key]
        except KeyError:
            pass
        N = self.N
        result = None
        if perm[b] < N:  # w(beta) > 0, so the length goes up
            refl = self._refl[b]
            new = tuple(perm[i] for i in refl)
            old_len = sum(1 for i in range(N) if perm[i] >= N)
            new_len = sum(1 for i in range(N) if new[i] >= N)
            if new_len == old_len + 1:
                result = new
        self._cover_cache[key] = result
        return result

    # -- irreducible data -----------------------------------------------------------

    @property
    def is_irreducible(self):
        return len(self.components) == 1

    def highest_coroot(self):
        if not self.is_irreducible:
            raise NotIrreducible(f"{self!r} is reducible")
        return max(self.positive_roots, key=lambda a: (sum(self.coroot(a)), self.coroot(a)))

    @cached_property
    def triples(self):
        """All ``(a, b, g)`` positive root indices, ``a < b``, with ``g^vee = a^vee + b^vee``."""
        by_coroot = {self._coroots[i]: i for i in range(self.N)}
        out = []
        for a in range(self.N):
            for b in range(a + 1, self.N):
                s = tuple(x + y for x, y in zip(self._coroots[a], self._coroots[b]))
                g = by_coroot.get(s)
                if g is not None:
                    out.append((a, b, g))
        return tuple(out)

    def subsystem_positive_indices(self, subset):
        """Positive roots of the parabolic subsystem generated by ``{alpha_p : p in subset}``."""
        subset = set(subset)
        return tuple(i for i, a in enumerate(self.positive_roots) if all(a[q] == 0 for q in range(self.rank) if q not in subset))


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element, stored as the permutation it induces on root indices."""

    system: RootSystem = field(repr=False)
    perm: tuple[int, ...]
    length: int

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.system is other.system and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __mul__(self, other):
        return self.system.compose(self, other)

    def inverse(self):
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return self.system._element(tuple(inv))

    def act_on_root(self, root):
        rs = self.system
        return rs.roots[self.perm[rs.index[tuple(root)]]]

    def act_on_weight(self, mu):
        M = self.weight_action
        return tuple(sum(M[p][q] * mu[q] for q in range(len(mu))) for p in range(len(mu)))

    @cached_property
    def root_action(self):
        """Integer matrix acting on simple-root coordinates (columns are images of simple roots)."""
        rs = self.system
        cols = [rs.roots[self.perm[rs.simple_indices[q]]] for q in range(rs.rank)]
        return tuple(tuple(cols[q][p] for q in range(rs.rank)) for p in range(rs.rank))

    @cached_property
    def weight_action(self):
        """Integer matrix acting on fundamental-weight coordinates, ``C A C^{-1}``."""
        rs = self.system
        r, C, Ci, A = rs.rank, rs.cartan, rs._cartan_inv, self.root_action
        CA = [[sum(C[p][t] * A[t][q] for t in range(r)) for q in range(r)] for p in range(r)]
        M = [[sum(CA[p][t] * Ci[t][q] for t in range(r)) for q in range(r)] for p in range(r)]
        return tuple(tuple(int(x) for x in row) for row in M)

    def reduced_word(self):
        """A reduced word ``(p_1, ..., p_l)`` with ``w = s_{p_1} ... s_{p_l}``."""
        rs = self.system
        w, word = self, []
        while w.length:
            p = next(p for p in range(rs.rank) if w.perm[rs.simple_indices[p]] >= rs.N)
            word.append(p)
            w = rs.compose(w, rs.simple_reflection(p))
        return tuple(reversed(word))


def build_root_system(spec):
    """Construct the root system for a :class:`CartanSpec`."""
    return RootSystem(spec)


_CACHE = {}


def root_system(label_or_matrix):
    """Convenience constructor: ``root_system("G2")`` or ``root_system([[2,-1],[-1,2]])``.

    Systems built from labels are cached, so repeated calls share Weyl-group caches.
    """
    if isinstance(label_or_matrix, str):
        key = label_or_matrix.strip().upper()
        if key not in _CACHE:
            _CACHE[key] = RootSystem(CartanSpec.parse(key))
        return _CACHE[key]
    if isinstance(label_or_matrix, CartanSpec):
        return RootSystem(label_or_matrix)
    return RootSystem(CartanSpec(tuple(tuple(int(x) for x in row) for row in label_or_matrix)))
