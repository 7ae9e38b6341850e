"""The mod-2 Steenrod algebra on the admissible basis.

A monomial ``Sq^{i1} ... Sq^{ik}`` is stored as a tuple of positive
integers; the empty tuple is the unit ``Sq^0 = 1``.  Operations are
F2-linear combinations of monomials, stored as a frozenset (coefficients
live in {0,1}, so duplicates cancel).

``adem_reduce`` rewrites any word into the admissible basis: whenever an
adjacent pair ``Sq^i Sq^j`` has ``i < 2j`` it is replaced by

    sum over t in [0, i/2] of  C(j-t-1, i-2t) Sq^{i+j-t} Sq^t   (mod 2),

always at the leftmost such pair.  Rewriting terminates because the moment
``sum_k k*i_k`` strictly decreases, and the admissible monomials are a
basis, so normal forms are unique.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

Monomial = tuple[int, ...]


def lucas_binom_mod2(a: int, b: int) -> int:
    """Binomial coefficient C(a, b) mod 2, for any integer arguments.

    Conventions: C(a, 0) = 1 for every a; C(a, b) = 0 for b < 0; for
    a >= b >= 0 the Lucas rule applies (1 iff the bits of b are a subset
    of the bits of a); for a < 0 < b the generating-function extension
    C(a, b) = C(b - a - 1, b) mod 2 is used.
    """
    if b == 0:
        return 1
    if b < 0:
        return 0
    if a < 0:
        a = b - a - 1
    if a < b:
        return 0
    return 1 if (a & b) == b else 0


def excess(mono: Monomial) -> int:
    """Excess ``2*i1 - sum(i)`` of a monomial; the unit has excess 0."""
    if not mono:
        return 0
    return 2 * mono[0] - sum(mono)


def degree(mono: Monomial) -> int:
    return sum(mono)


def is_admissible(mono: Monomial) -> bool:
    return all(mono[i] >= 2 * mono[i + 1] for i in range(len(mono) - 1))


@lru_cache(maxsize=None)
def _pair_rewrite(i: int, j: int) -> tuple[Monomial, ...]:
    """Replacement words for an inadmissible pair ``Sq^i Sq^j`` (i < 2j)."""
    out = []
    for t in range(i // 2 + 1):
        if lucas_binom_mod2(j - t - 1, i - 2 * t):
            out.append((i + j - t,) if t == 0 else (i + j - t, t))
    return tuple(out)


def _leftmost_inadmissible(mono: Monomial) -> int:
    for idx in range(len(mono) - 1):
        if mono[idx] < 2 * mono[idx + 1]:
            return idx
    return -1


_REDUCE_MEMO: dict[Monomial, frozenset[Monomial]] = {}


def reduce_monomial(mono: Iterable[int]) -> frozenset[Monomial]:
    """Admissible expansion of a single word (zero indices are dropped)."""
    start = tuple(i for i in mono if i != 0)
    if any(i < 0 for i in start):
        raise ValueError("negative Steenrod index")
    stack = [start]
    while stack:
        m = stack[-1]
        if m in _REDUCE_MEMO:
            stack.pop()
            continue
        idx = _leftmost_inadmissible(m)
        if idx < 0:
            _REDUCE_MEMO[m] = frozenset((m,))
            stack.pop()
            continue
        children = [
            tuple(v for v in m[:idx] + repl + m[idx + 2:] if v != 0)
            for repl in _pair_rewrite(m[idx], m[idx + 1])
        ]
        pending = [c for c in children if c not in _REDUCE_MEMO]
        if pending:
            stack.extend(pending)
            continue
        acc: set[Monomial] = set()
        for c in children:
            acc ^= _REDUCE_MEMO[c]
        _REDUCE_MEMO[m] = frozenset(acc)
        stack.pop()
    return _REDUCE_MEMO[start]


class SteenrodOp:
    """An F2-linear combination of Steenrod monomials, kept Adem-reduced."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Iterable[int]] = (), *, _reduced: bool = False):
        if _reduced:
            self.terms = frozenset(tuple(t) for t in terms)
            return
        acc: set[Monomial] = set()
        for t in terms:
            acc ^= reduce_monomial(t)
        self.terms = frozenset(acc)

    @classmethod
    def monomial(cls, *indices: int) -> "SteenrodOp":
        return cls([tuple(indices)])

    @classmethod
    def zero(cls) -> "SteenrodOp":
        return _ZERO

    @classmethod
    def one(cls) -> "SteenrodOp":
        return _ONE

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SteenrodOp) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __add__(self, other: "SteenrodOp") -> "SteenrodOp":
        return SteenrodOp(self.terms ^ other.terms, _reduced=True)

    def __mul__(self, other: "SteenrodOp") -> "SteenrodOp":
        acc: set[Monomial] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= reduce_monomial(a + b)
        return SteenrodOp(acc, _reduced=True)

    def degree(self) -> int:
        """Common degree of all terms; raises on inhomogeneous sums."""
        degs = {degree(t) for t in self.terms}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous operation: degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def truncate(self, excess_cap: int) -> "SteenrodOp":
        """Drop all terms of excess greater than ``excess_cap``."""
        return SteenrodOp(
            (t for t in self.terms if excess(t) <= excess_cap), _reduced=True
        )

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=lambda t: (degree(t), t))

    def __repr__(self) -> str:
        return f"SteenrodOp({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.sorted_terms():
            parts.append("Sq^0" if not t else " ".join(f"Sq^{i}" for i in t))
        return " + ".join(parts)


_ZERO = SteenrodOp((), _reduced=True)
_ONE = SteenrodOp([()], _reduced=True)


def adem_reduce(op: SteenrodOp) -> SteenrodOp:
    """Normal form of an operation (idempotent; constructors already reduce)."""
    return SteenrodOp(op.terms)


def parse_op(text: str) -> SteenrodOp:
    """Parse the textual notation produced by ``str``: e.g. ``"Sq^3 Sq^1 + Sq^4"``."""
    text = text.strip()
    if text == "0":
        return _ZERO
    terms = []
    for part in text.split("+"):
        part = part.strip()
        if part in ("1", "Sq^0"):
            terms.append(())
            continue
        indices = []
        for tok in part.split():
            if not tok.startswith("Sq^"):
                raise ValueError(f"cannot parse operation token {tok!r}")
            indices.append(int(tok[3:]))
        if any(i < 0 for i in indices):
            raise ValueError("negative Steenrod index")
        terms.append(tuple(i for i in indices if i != 0))
    return SteenrodOp(terms)


@lru_cache(maxsize=None)
def _admissibles_first_capped(total: int, first_cap: int) -> tuple[Monomial, ...]:
    """All admissible words of the given degree whose first index is <= cap."""
    if total == 0:
        return ((),)
    out: list[Monomial] = []
    for i1 in range(1, min(total, first_cap) + 1):
        if i1 == total:
            out.append((i1,))
            continue
        for rest in _admissibles_first_capped(total - i1, i1 // 2):
            if rest:
                out.append((i1,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def admissible_basis(deg: int, excess_cap: int) -> tuple[Monomial, ...]:
    """Admissible monomials of the given degree and excess <= cap, in
    lexicographic order on index sequences."""
    if deg < 0:
        return ()
    words = [m for m in _admissibles_first_capped(deg, deg) if excess(m) <= excess_cap]
    return tuple(sorted(words))


@lru_cache(maxsize=None)
def dim_free(m: int, n: int) -> int:
    """Dimension of the free unstable module F(m) in degree n.

    Equals the number of admissible monomials of degree ``n - m`` with
    excess at most ``m`` (these act freely on the degree-m generator).
    """
    if m < 0 or n < 0 or n < m:
        return 0
    return len(admissible_basis(n - m, m))


def admissible_count_by_partitions(deg: int, excess_cap: int) -> int:
    """Independent counter for ``len(admissible_basis(deg, cap))``.

    Counts admissible words recursively by their last index instead of the
    first, so the two enumerations share no code path.
    """

    @lru_cache(maxsize=None)
    def count(total: int, last_min: int, budget: int) -> int:
        # words (i1,...,ik), read right to left: each new index i >= 2*prev,
        # budget tracks the excess constraint 2*i1 <= total + cap.
        if total == 0:
            return 1 if last_min == 0 else 0
        acc = 0
        lo = max(last_min, 1)
        for i in range(lo, total + 1):
            if i == total:
                if 2 * i <= budget:
                    acc += 1
            else:
                acc += count(total - i, 2 * i, budget)
        return acc

    if deg == 0:
        return 1 if excess_cap >= 0 else 0
    return count(deg, 0, deg + excess_cap)


def multiply_words(a: Monomial, b: Monomial) -> SteenrodOp:
    return SteenrodOp(reduce_monomial(a + b), _reduced=True)
