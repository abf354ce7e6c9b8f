"""Lambda-chains: construction of the lexicographic chain and validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import DuplicateKey, NotDominant

__all__ = [
    "LambdaChain",
    "ValidationReport",
    "counting_identity_check",
    "lex_lambda_chain",
    "validate_lambda_chain",
]


@dataclass(frozen=True)
class LambdaChain:
    """An ordered sequence of positive roots attached to a dominant weight.

    ``betas`` holds positive-root indices of ``system``; positions are 0-based.
    ``order`` is the simple-root order used by :func:`lex_lambda_chain`, or
    None for a user-supplied chain.
    """

    system: object = field(repr=False)
    lam: tuple
    betas: tuple[int, ...]
    order: tuple[int, ...] | None = None

    @classmethod
    def from_roots(cls, system, lam, roots):
        """Build a (not yet validated) chain from explicit root tuples."""
        idx = []
        for a in roots:
            i = system.root_index(a)
            if i >= system.N:
                raise ValueError(f"{a} is not a positive root")
            idx.append(i)
        return cls(system, tuple(lam), tuple(idx))

    def __len__(self):
        return len(self.betas)

    def root(self, i):
        return self.system.roots[self.betas[i]]

    @property
    def roots(self):
        return [self.system.roots[b] for b in self.betas]

    @cached_property
    def initial_levels(self):
        """``l_i^0 = #{j < i : beta_j = beta_i}``."""
        seen = {}
        out = []
        for b in self.betas:
            out.append(seen.get(b, 0))
            seen[b] = seen.get(b, 0) + 1
        return tuple(out)

    @property
    def entries(self):
        """List of ``(root, k)`` pairs, ``k`` the occurrence counter."""
        return [(self.root(i), k) for i, k in enumerate(self.initial_levels)]


def lex_lambda_chain(system, lam, order=None):
    """The lambda-chain obtained by sorting ``(alpha, k)`` lexicographically.

    Each index ``(alpha, k)`` with ``0 <= k < <lam, alpha^vee>`` gets the key
    ``(k, c_{order[0]}, ..., c_{order[r-1]}) / <lam, alpha^vee>`` where ``c`` are
    the coroot coordinates of ``alpha``.
    """
    lam = tuple(lam)
    r = system.rank
    if len(lam) != r:
        raise ValueError(f"weight has {len(lam)} coordinates, expected {r}")
    if any(x < 0 for x in lam):
        raise NotDominant(f"{lam} is not dominant")
    if any(Fraction(x).denominator != 1 for x in lam):
        raise NotDominant(f"{lam} is not integral")
    order = tuple(range(r)) if order is None else tuple(order)
    if sorted(order) != list(range(r)):
        raise ValueError(f"{order} is not a permutation of 0..{r - 1}")

    keyed = []
    for b in range(system.N):
        c = system.coroot_of_index(b)
        n = int(system.pairing_index(lam, b))
        for k in range(n):
            key = (Fraction(k, n),) + tuple(Fraction(c[q], n) for q in order)
            keyed.append((key, b))
    keyed.sort()
    for (k1, _), (k2, _) in zip(keyed, keyed[1:]):
        if k1 == k2:
            raise DuplicateKey(f"two chain indices share the key {k1}")
    return LambdaChain(system, lam, tuple(b for _, b in keyed), order)


@dataclass
class ValidationReport:
    """Per-root occurrence counts and per-triple interlacing results."""

    counts: dict  # root -> (occurrences, expected)
    interlacing: list  # (alpha, beta, gamma, ok)

    @property
    def counts_ok(self):
        return all(n == e for n, e in self.counts.values())

    @property
    def interlacing_ok(self):
        return all(ok for *_, ok in self.interlacing)

    @property
    def ok(self):
        return self.counts_ok and self.interlacing_ok

    def __bool__(self):
        return self.ok

    def failures(self):
        out = [f"root {a}: {n} occurrences, expected {e}" for a, (n, e) in self.counts.items() if n != e]
        out += [f"triple {a}, {b} -> {g}: not a concatenation of pairs" for a, b, g, ok in self.interlacing if not ok]
        return out


def _is_pair_concatenation(seq, a, b, g):
    if len(seq) % 2:
        return False
    for x, y in zip(seq[::2], seq[1::2]):
        if x not in (a, b) or y != g:
            return False
    return True


def validate_lambda_chain(chain):
    """Check occurrence counts and the finite-type interlacing condition."""
    rs = chain.system
    occ = {}
    for b in chain.betas:
        occ[b] = occ.get(b, 0) + 1
    counts = {}
    for b in range(rs.N):
        counts[rs.roots[b]] = (occ.get(b, 0), int(rs.pairing_index(chain.lam, b)))
    inter = []
    for a, b, g in rs.triples:
        sub = [x for x in chain.betas if x in (a, b, g)]
        inter.append((rs.roots[a], rs.roots[b], rs.roots[g], _is_pair_concatenation(sub, a, b, g)))
    return ValidationReport(counts, inter)


def counting_identity_check(chain):
    """For all positive ``alpha != beta`` and every ``i`` with ``beta_i = beta``:
    ``N_i(s_beta(alpha)) = N_i(alpha) - <beta, alpha^vee> N_i(beta)``,
    with ``N_i(-alpha) = 1 - N_i(alpha)``.
    """
    rs = chain.system
    N = rs.N
    counts = [0] * N
    for b in chain.betas:
        for a in range(N):
            if a == b:
                continue
            img = rs.reflection_table(b)[a]
            lhs = counts[img] if img < N else 1 - counts[img - N]
            rhs = counts[a] - rs.pair_roots(rs.roots[b], rs.roots[a]) * counts[b]
            if lhs != rhs:
                return False
        counts[b] += 1
    return True
