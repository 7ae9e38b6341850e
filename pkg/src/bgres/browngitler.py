"""Brown-Gitler modules, their morphism calculus, and cochain complexes.

A BG module is a finite direct sum of Brown-Gitler modules J(n); we store
the multiset of indices in construction order (all engines in this package
construct summands deterministically, so matrices are reproducible).

A morphism between BG modules is a matrix of Steenrod operations: the
(i, j) entry is an operation of degree ``source_j - target_i`` inducing
J(source_j) -> J(target_i).  Entries are stored in normal form: Adem
reduced, then truncated by the excess rule.  An admissible monomial of
excess greater than ``m`` annihilates every class of degree ``m``, so it
induces the zero morphism into J(m); consequently two entries are equal as
morphisms exactly when their truncated normal forms coincide, and the
truncated admissibles of degree ``n - m`` and excess at most ``m`` form a
basis of Hom(J(n), J(m)).

Morphisms can be realized as exact F2 matrices in any internal degree d
via the duality J(n)^d = (F(d)^n)*: the realization of an entry theta is
the transpose of left multiplication by theta from F(d)^m to F(d)^n in the
admissible bases.  Composition concatenates operation words in path order
(the first arrow's label on the left), which makes realization functorial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .f2linalg import F2Matrix
from .steenrod import (
    SteenrodOp,
    admissible_basis,
    dim_free,
    excess,
    parse_op,
    reduce_monomial,
)


@lru_cache(maxsize=None)
def dim_j(n: int, m: int) -> int:
    """Dimension of J(n) in degree m: multisets of m powers of two summing to n.

    This count is independent of the admissible-monomial count behind
    ``dim_free``; the equality dim_j(n, m) == dim_free(m, n) is the duality
    between Brown-Gitler modules and free unstable modules.
    """
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    if m == 0:
        return 0

    @lru_cache(maxsize=None)
    def count(total: int, parts: int, max_exp: int) -> int:
        if parts == 0:
            return 1 if total == 0 else 0
        if total <= 0:
            return 0
        acc = 0
        e = max_exp
        while e >= 0:
            p = 1 << e
            if p * parts >= total and p <= total:
                acc += count(total - p, parts - 1, e)
            e -= 1
        return acc

    return count(n, m, n.bit_length())


def morphism_is_zero(theta: SteenrodOp, n: int, m: int) -> bool:
    """Whether the operation theta induces the zero morphism J(n) -> J(m)."""
    if theta.is_zero():
        return True
    if theta.degree() != n - m:
        raise ValueError(f"operation degree {theta.degree()} != {n} - {m}")
    return theta.truncate(m).is_zero()


class BGModule:
    """A finite direct sum of Brown-Gitler modules."""

    __slots__ = ("summands",)

    def __init__(self, summands: Iterable[int] = ()):
        self.summands = tuple(int(s) for s in summands)
        if any(s < 0 for s in self.summands):
            raise ValueError("negative Brown-Gitler index")

    def __len__(self) -> int:
        return len(self.summands)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BGModule) and self.summands == other.summands

    def __hash__(self) -> int:
        return hash(self.summands)

    def __add__(self, other: "BGModule") -> "BGModule":
        return BGModule(self.summands + other.summands)

    def dim(self, d: int) -> int:
        return sum(dim_free(d, s) for s in self.summands)

    def suspend_indices(self) -> "BGModule":
        """The module with every J(n) replaced by J(n+1)."""
        return BGModule(s + 1 for s in self.summands)

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        return "+".join(f"J({s})" for s in self.summands)

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "BGModule":
        text = text.strip()
        if text == "0":
            return cls()
        out = []
        for tok in text.split("+"):
            tok = tok.strip()
            if not (tok.startswith("J(") and tok.endswith(")")):
                raise ValueError(f"cannot parse summand {tok!r}")
            out.append(int(tok[2:-1]))
        return cls(out)


@lru_cache(maxsize=None)
def _entry_block(terms: frozenset, n: int, m: int, d: int) -> F2Matrix:
    """Realization block of the entry with the given terms, J(n) -> J(m),
    in internal degree d (transpose of left multiplication on F(d))."""
    src_basis = admissible_basis(n - d, d)  # basis of F(d)^n
    tgt_basis = admissible_basis(m - d, d)  # basis of F(d)^m
    src_pos = {w: i for i, w in enumerate(src_basis)}
    rows = [0] * len(tgt_basis)
    for k_idx, k_word in enumerate(tgt_basis):
        for t in terms:
            for w in reduce_monomial(t + k_word):
                if excess(w) <= d:
                    pos = src_pos.get(w)
                    if pos is not None:
                        rows[k_idx] ^= 1 << pos
    return F2Matrix(len(tgt_basis), len(src_basis), rows)


class BGMorphism:
    """A matrix of Steenrod operations between two BG modules.

    Entries are stored sparsely as ``entries[(i, j)]`` for target summand i
    and source summand j, always in truncated normal form; zero entries are
    absent.
    """

    __slots__ = ("source", "target", "entries")

    def __init__(
        self,
        source: BGModule,
        target: BGModule,
        entries: Optional[dict[tuple[int, int], SteenrodOp]] = None,
    ):
        self.source = source
        self.target = target
        store: dict[tuple[int, int], SteenrodOp] = {}
        for (i, j), op in (entries or {}).items():
            if op.is_zero():
                continue
            n, m = source.summands[j], target.summands[i]
            if op.degree() != n - m:
                raise ValueError(
                    f"entry ({i},{j}) has degree {op.degree()}, expected {n - m}"
                )
            trunc = op.truncate(m)
            if not trunc.is_zero():
                store[(i, j)] = trunc
        self.entries = store

    @classmethod
    def zero(cls, source: BGModule, target: BGModule) -> "BGMorphism":
        return cls(source, target)

    @classmethod
    def identity(cls, module: BGModule) -> "BGMorphism":
        one = SteenrodOp.one()
        return cls(module, module, {(i, i): one for i in range(len(module))})

    def entry(self, i: int, j: int) -> SteenrodOp:
        return self.entries.get((i, j), SteenrodOp.zero())

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BGMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.entries == other.entries
        )

    def __add__(self, other: "BGMorphism") -> "BGMorphism":
        if self.source != other.source or self.target != other.target:
            raise ValueError("shape mismatch in morphism sum")
        keys = set(self.entries) | set(other.entries)
        return BGMorphism(
            self.source,
            self.target,
            {k: self.entry(*k) + other.entry(*k) for k in keys},
        )

    def compose(self, first: "BGMorphism") -> "BGMorphism":
        """The composite ``self after first`` (apply ``first``, then ``self``).

        Operation words concatenate in path order: the first arrow's label
        sits on the left of the second's.
        """
        if first.target != self.source:
            raise ValueError("shape mismatch in composition")
        acc: dict[tuple[int, int], SteenrodOp] = {}
        by_source: dict[int, list[tuple[int, SteenrodOp]]] = {}
        for (mid, j), op in first.entries.items():
            by_source.setdefault(mid, []).append((j, op))
        for (i, mid), g_op in self.entries.items():
            for j, f_op in by_source.get(mid, ()):
                word = f_op * g_op
                if word.is_zero():
                    continue
                key = (i, j)
                acc[key] = acc.get(key, SteenrodOp.zero()) + word
        return BGMorphism(first.source, self.target, acc)

    def realize(self, d: int) -> F2Matrix:
        """Exact F2 matrix of the morphism in internal degree d."""
        src_dims = [dim_free(d, s) for s in self.source.summands]
        tgt_dims = [dim_free(d, s) for s in self.target.summands]
        src_off = [0]
        for v in src_dims:
            src_off.append(src_off[-1] + v)
        tgt_off = [0]
        for v in tgt_dims:
            tgt_off.append(tgt_off[-1] + v)
        rows = [0] * tgt_off[-1]
        for (i, j), op in self.entries.items():
            if src_dims[j] == 0 or tgt_dims[i] == 0:
                continue
            block = _entry_block(
                op.terms, self.source.summands[j], self.target.summands[i], d
            )
            for r in range(block.rows):
                rows[tgt_off[i] + r] ^= block.data[r] << src_off[j]
        return F2Matrix(tgt_off[-1], src_off[-1], rows)

    def restrict(self, target_rows: Sequence[int], source_cols: Sequence[int]) -> "BGMorphism":
        """Submatrix on the given summand indices."""
        rmap = {old: new for new, old in enumerate(target_rows)}
        cmap = {old: new for new, old in enumerate(source_cols)}
        ent = {
            (rmap[i], cmap[j]): op
            for (i, j), op in self.entries.items()
            if i in rmap and j in cmap
        }
        return BGMorphism(
            BGModule(self.source.summands[j] for j in source_cols),
            BGModule(self.target.summands[i] for i in target_rows),
            ent,
        )

    def dump(self) -> list[list[str]]:
        """Dense matrix of operation strings (rows = target summands)."""
        return [
            [str(self.entry(i, j)) for j in range(len(self.source))]
            for i in range(len(self.target))
        ]

    def __str__(self) -> str:
        lines = [f"{self.source} -> {self.target}"]
        for row in self.dump():
            lines.append("  [" + ", ".join(row) + "]")
        return "\n".join(lines)

    __repr__ = __str__


class BGComplex:
    """A cochain complex of BG modules with d^2 = 0 in normal form.

    ``tags`` optionally records the provenance of each summand of each
    term (the assembly and suspension engines use it to remember which
    block a summand came from); tags travel through reductions.
    """

    __slots__ = ("terms", "diffs", "tags")

    def __init__(
        self,
        terms: Sequence[BGModule],
        diffs: Sequence[BGMorphism],
        tags: Optional[Sequence[tuple]] = None,
        check: bool = True,
    ):
        self.terms = list(terms)
        self.diffs = list(diffs)
        if len(self.diffs) != max(len(self.terms) - 1, 0):
            raise ValueError("need exactly one differential per adjacent pair")
        for k, d in enumerate(self.diffs):
            if d.source != self.terms[k] or d.target != self.terms[k + 1]:
                raise ValueError(f"differential {k} does not match its terms")
        if tags is None:
            self.tags = [tuple(("summand", i) for i in range(len(t))) for t in self.terms]
        else:
            self.tags = [tuple(t) for t in tags]
            for t, tg in zip(self.terms, self.tags):
                if len(tg) != len(t):
                    raise ValueError("tag count does not match summand count")
        if check:
            for k in range(len(self.diffs) - 1):
                comp = self.diffs[k + 1].compose(self.diffs[k])
                if not comp.is_zero():
                    raise ValueError(f"d^2 != 0 between positions {k} and {k + 2}")

    def __len__(self) -> int:
        return len(self.terms)

    def term(self, k: int) -> BGModule:
        return self.terms[k] if 0 <= k < len(self.terms) else BGModule()

    def diff(self, k: int) -> BGMorphism:
        if 0 <= k < len(self.diffs):
            return self.diffs[k]
        return BGMorphism.zero(self.term(k), self.term(k + 1))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BGComplex)
            and self.terms == other.terms
            and self.diffs == other.diffs
        )

    # -- exact verification --------------------------------------------

    def realized_d2_max_rank(self, d_max: int) -> int:
        """Max rank of any realized composite differential for d <= d_max (0 = good)."""
        worst = 0
        for k in range(len(self.diffs) - 1):
            for d in range(d_max + 1):
                prod = self.diffs[k + 1].realize(d) @ self.diffs[k].realize(d)
                worst = max(worst, prod.rank())
        return worst

    def homology_dims(self, d: int) -> list[int]:
        """Cohomology dimensions per position, in internal degree d."""
        dims = [t.dim(d) for t in self.terms]
        ranks = [dv.realize(d).rank() for dv in self.diffs]
        out = []
        for k in range(len(self.terms)):
            r_in = ranks[k - 1] if k >= 1 else 0
            r_out = ranks[k] if k < len(ranks) else 0
            out.append(dims[k] - r_in - r_out)
        return out

    def euler(self, d: int) -> int:
        return sum((-1) ** k * t.dim(d) for k, t in enumerate(self.terms))

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "terms": [list(t.summands) for t in self.terms],
            "diffs": [
                {f"{i},{j}": str(op) for (i, j), op in sorted(dv.entries.items())}
                for dv in self.diffs
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BGComplex":
        terms = [BGModule(t) for t in data["terms"]]
        diffs = []
        for k, dd in enumerate(data["diffs"]):
            entries = {}
            for key, text in dd.items():
                i, j = (int(v) for v in key.split(","))
                entries[(i, j)] = parse_op(text)
            diffs.append(BGMorphism(terms[k], terms[k + 1], entries))
        return cls(terms, diffs)

    def __str__(self) -> str:
        return " -> ".join(str(t) for t in self.terms) if self.terms else "0"

    __repr__ = __str__


@dataclass(frozen=True)
class MahowaldData:
    """Suspension data for J(n): either an isomorphism or a length-1 resolution."""

    n: int
    iso: bool
    resolution: BGComplex

    def describe(self) -> str:
        if self.iso:
            return f"Sigma J({self.n}) ~ J({self.n + 1})"
        half = (self.n + 1) // 2
        return f"Sigma J({self.n}): J({self.n + 1}) --Sq^{half}--> J({half})"


def mahowald(n: int) -> MahowaldData:
    """Suspension of J(n): an isomorphism for even n, a two-term resolution
    J(n+1) -> J((n+1)/2) driven by Sq^{(n+1)/2} for odd n."""
    if n < 0:
        raise ValueError("negative Brown-Gitler index")
    if n % 2 == 0:
        return MahowaldData(n, True, BGComplex([BGModule([n + 1])], []))
    half = (n + 1) // 2
    top = BGModule([n + 1])
    bottom = BGModule([half])
    proj = BGMorphism(top, bottom, {(0, 0): SteenrodOp.monomial(half)})
    return MahowaldData(n, False, BGComplex([top, bottom], [proj]))


def mahowald_resolution(module: BGModule) -> BGComplex:
    """The canonical injective resolution of the suspension of a BG module.

    Level 0 is J(n+1) for each summand J(n); level 1 collects J((n+1)/2)
    for the odd summands, with the diagonal projections Sq^{(n+1)/2}.
    """
    level0 = module.suspend_indices()
    odd = [j for j, s in enumerate(module.summands) if s % 2 == 1]
    if not odd:
        return BGComplex([level0], [], tags=[tuple(("lift", j) for j in range(len(level0)))])
    level1 = BGModule((module.summands[j] + 1) // 2 for j in odd)
    entries = {
        (row, j): SteenrodOp.monomial((module.summands[j] + 1) // 2)
        for row, j in enumerate(odd)
    }
    proj = BGMorphism(level0, level1, entries)
    return BGComplex(
        [level0, level1],
        [proj],
        tags=[
            tuple(("lift", j) for j in range(len(level0))),
            tuple(("quot", j) for j in odd),
        ],
    )
