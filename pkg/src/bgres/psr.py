"""Resolution assembly for suspensions of BG complexes.

The machinery here answers one question in several guises: given a BG
complex ``B`` with a single nontrivial cohomology, produce an injective
resolution of the suspension of that cohomology out of resolutions of the
suspended terms, with lower-triangular connecting differentials solved by
exact linear algebra over the finite Hom spaces.

* ``assemble_psr`` is the general engine.  The within-resolution
  differentials come from the supplied bases; the level-0 connecting maps
  reuse the labels of ``B`` (any operation restricts to its own suspension
  on the embedded submodule, so label reuse is always a valid lift); every
  other block is found by solving ``X . A = RHS`` in coordinates on the
  truncated-admissible bases of the Hom spaces, taking the
  lexicographically smallest solution for reproducibility.
* ``suspend_complex`` assembles over the canonical length-one resolutions
  coming from the Mahowald sequences.
* ``build_graph`` constructs the same resolutions of suspended spheres and
  Brown-Gitler modules combinatorially: vertices are the admissible label
  sequences, and the edge set is completed by rewriting two-step paths to
  admissible words until composite differentials vanish.
* ``minimal_reduce`` cancels identity entries (Gaussian reduction of
  complexes), yielding the minimal injective resolution.
* ``ext_complex`` extracts the bigraded identity-entry complex whose slice
  homology computes Ext groups from suspended spheres.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .browngitler import BGComplex, BGModule, BGMorphism, mahowald_resolution
from .f2linalg import F2Matrix
from .steenrod import Monomial, SteenrodOp, admissible_basis, excess, reduce_monomial


class AssemblyError(RuntimeError):
    """A connecting-map linear system had no solution (the input was not a
    complex of resolutions), or an assembled complex failed d^2 = 0."""


# ---------------------------------------------------------------------------
# Poincaré classes


class PoincareClass:
    """Grothendieck-class bookkeeping: position -> multiset of J-indices."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[dict[int, Counter]] = None):
        self.coeffs = {k: Counter(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def of(cls, complex_: BGComplex) -> "PoincareClass":
        return cls(
            {k: Counter(t.summands) for k, t in enumerate(complex_.terms) if len(t)}
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PoincareClass) and self.coeffs == other.coeffs

    def __add__(self, other: "PoincareClass") -> "PoincareClass":
        out = {k: Counter(v) for k, v in self.coeffs.items()}
        for k, v in other.coeffs.items():
            out.setdefault(k, Counter()).update(v)
        return PoincareClass(out)

    def shifted(self, t: int) -> "PoincareClass":
        return PoincareClass({k + t: v for k, v in self.coeffs.items()})

    def degree(self, k: int) -> Counter:
        return Counter(self.coeffs.get(k, Counter()))

    def positions(self) -> list[int]:
        return sorted(self.coeffs)

    def to_json_dict(self) -> dict:
        return {
            str(k): sorted(self.coeffs[k].elements(), reverse=True)
            for k in self.positions()
        }

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in self.positions():
            body = "+".join(f"J({s})" for s in sorted(self.coeffs[k].elements(), reverse=True))
            parts.append(f"t^{k}·[{body}]")
        return " + ".join(parts)

    __repr__ = __str__


def poincare(complex_: BGComplex) -> PoincareClass:
    return PoincareClass.of(complex_)


# ---------------------------------------------------------------------------
# Hom-space linear solves


def _hom_basis(n: int, m: int) -> tuple[Monomial, ...]:
    """Basis of Hom(J(n), J(m)): admissibles of degree n - m, excess <= m."""
    if n < m:
        return ()
    return admissible_basis(n - m, m)


def solve_right_factor(a: BGMorphism, rhs: BGMorphism) -> BGMorphism:
    """Solve ``X . a = rhs`` for a morphism X : target(a) -> target(rhs).

    The unknown is written in the truncated-admissible bases of the entry
    Hom spaces; the equation is solved coordinate by coordinate on the
    value side (one block of coordinates per pair of a source summand of
    ``a`` and a target summand of ``rhs``).  The lexicographically smallest
    coefficient vector is returned.  Raises AssemblyError when the system
    is inconsistent.
    """
    if a.source != rhs.source:
        raise ValueError("factor equation sources differ")
    mid = a.target
    tgt = rhs.target

    unknowns: list[tuple[int, int, Monomial]] = []
    for i, t_i in enumerate(tgt.summands):
        for j, m_j in enumerate(mid.summands):
            for word in _hom_basis(m_j, t_i):
                unknowns.append((i, j, word))

    coords: dict[tuple[int, int, Monomial], int] = {}

    def coord(i: int, l: int, word: Monomial) -> int:
        key = (i, l, word)
        if key not in coords:
            coords[key] = len(coords)
        return coords[key]

    columns: list[dict[int, int]] = []
    by_source: dict[int, list[tuple[int, SteenrodOp]]] = {}
    for (j, l), op in a.entries.items():
        by_source.setdefault(j, []).append((l, op))
    for (i, j, word) in unknowns:
        col: dict[int, int] = {}
        cap = tgt.summands[i]
        for l, a_op in by_source.get(j, ()):
            for a_word in a_op.terms:
                for w in reduce_monomial(a_word + word):
                    if excess(w) <= cap:
                        pos = coord(i, l, w)
                        col[pos] = col.get(pos, 0) ^ 1
        columns.append({k: v for k, v in col.items() if v})

    rhs_vec: dict[int, int] = {}
    for (i, l), op in rhs.entries.items():
        for w in op.terms:
            pos = coord(i, l, w)
            rhs_vec[pos] = rhs_vec.get(pos, 0) ^ 1
    rhs_vec = {k: v for k, v in rhs_vec.items() if v}

    n_rows = len(coords)
    n_cols = len(unknowns)
    rows = [0] * n_rows
    for cidx, col in enumerate(columns):
        for ridx in col:
            rows[ridx] |= 1 << cidx
    system = F2Matrix(n_rows, n_cols, rows)
    b = F2Matrix(n_rows, 1, [1 if r in rhs_vec else 0 for r in range(n_rows)])
    sol = system.solve(b)
    if sol is None:
        raise AssemblyError("connecting-map system is inconsistent")
    entries: dict[tuple[int, int], SteenrodOp] = {}
    for cidx, (i, j, word) in enumerate(unknowns):
        if sol.entry(cidx, 0):
            key = (i, j)
            entries[key] = entries.get(key, SteenrodOp.zero()) + SteenrodOp([word])
    return BGMorphism(mid, tgt, entries)


def _check_zero(rhs: BGMorphism, context: str) -> None:
    if not rhs.is_zero():
        raise AssemblyError(f"no block available to balance {context}")


# ---------------------------------------------------------------------------
# The assembly engine


def _suspended_labels(
    diff: BGMorphism, source: BGModule, target: BGModule, shift: int
) -> BGMorphism:
    """Reuse the labels of ``diff`` between the shift-suspended modules."""
    entries = {key: op for key, op in diff.entries.items()}
    return BGMorphism(source, target, entries)


def assemble_psr(
    base: Sequence[BGComplex],
    top: BGComplex,
    shift: int = 1,
) -> BGComplex:
    """Total complex of resolutions ``base[k]`` of the ``shift``-fold
    suspensions of the terms of ``top``.

    Requires ``base[k]`` to start at the canonical injective hull (each
    J(n) summand of ``top`` term k replaced by J(n+shift), in order).  The
    result resolves the suspension of the lone cohomology of ``top``; its
    summands are tagged ``('psr', k, t)`` by block of origin.
    """
    K = len(top.terms)
    if len(base) != K:
        raise ValueError("need exactly one base resolution per top term")
    if shift < 1:
        raise ValueError("shift must be positive")
    for k in range(K):
        want = BGModule(s + shift for s in top.terms[k].summands)
        if base[k].term(0) != want:
            raise ValueError(
                f"base[{k}] starts at {base[k].term(0)}, expected hull {want}"
            )

    lengths = [len(b.terms) - 1 for b in base]

    def within(k: int, t: int) -> BGMorphism:
        return base[k].diff(t)

    def level(k: int, t: int) -> BGModule:
        return base[k].term(t)

    # blocks[(i, k, t)] : base[k] level t -> base[k+i+1] level (t - i);
    # i = 0 holds the chain maps lifting the suspended top differentials.
    blocks: dict[tuple[int, int, int], BGMorphism] = {}

    def block(i: int, k: int, t: int) -> BGMorphism:
        got = blocks.get((i, k, t))
        if got is not None:
            return got
        return BGMorphism.zero(level(k, t), level(k + i + 1, t - i))

    for k in range(K - 1):
        blocks[(0, k, 0)] = _suspended_labels(
            top.diffs[k], level(k, 0), level(k + 1, 0), shift
        )
        for t in range(1, lengths[k] + 1):
            rhs = within(k + 1, t - 1).compose(block(0, k, t - 1))
            if len(level(k + 1, t)) == 0:
                _check_zero(rhs, f"chain map lift at (k={k}, t={t})")
                continue
            blocks[(0, k, t)] = solve_right_factor(within(k, t - 1), rhs)

    max_len = max(lengths, default=0)
    for i in range(1, max_len + 1):
        for k in range(K - i - 1):
            for t in range(i, lengths[k] + 2):
                # d^2 balance from level (k, t-1) into base[k+i+1] level (t-i):
                # X . d = [lower-level products] + d . [previous level-i block]
                rhs = BGMorphism.zero(level(k, t - 1), level(k + i + 1, t - i))
                for a_low in range(i):
                    b_low = i - 1 - a_low
                    second = block(b_low, k + a_low + 1, t - 1 - a_low)
                    first = block(a_low, k, t - 1)
                    if first.is_zero() or second.is_zero():
                        continue
                    rhs = rhs + second.compose(first)
                prev = block(i, k, t - 1)
                if not prev.is_zero():
                    rhs = rhs + within(k + i + 1, t - i - 1).compose(prev)
                if t > lengths[k] or len(level(k + i + 1, t - i)) == 0:
                    _check_zero(rhs, f"connecting block (i={i}, k={k}, t={t})")
                    continue
                if rhs.is_zero():
                    continue
                blocks[(i, k, t)] = solve_right_factor(within(k, t - 1), rhs)

    # totalize: position l collects base[k] level l - k, ordered by k
    total_len = max((k + lengths[k] for k in range(K)), default=-1)
    terms: list[BGModule] = []
    tags: list[tuple] = []
    layout: list[list[tuple[int, int, int]]] = []  # (k, t, offset)
    for l in range(total_len + 1):
        summands: list[int] = []
        tag: list[tuple] = []
        lay: list[tuple[int, int, int]] = []
        for k in range(K):
            t = l - k
            if 0 <= t <= lengths[k]:
                lay.append((k, t, len(summands)))
                summands.extend(level(k, t).summands)
                tag.extend(("psr", k, t, idx) for idx in range(len(level(k, t))))
        terms.append(BGModule(summands))
        tags.append(tuple(tag))
        layout.append(lay)

    diffs: list[BGMorphism] = []
    for l in range(total_len):
        entries: dict[tuple[int, int], SteenrodOp] = {}
        for (k, t, src_off) in layout[l]:
            placements = []
            for (k2, t2, tgt_off) in layout[l + 1]:
                if k2 == k and t2 == t + 1:
                    placements.append((within(k, t), tgt_off))
                elif k2 > k:
                    placements.append((block(k2 - k - 1, k, t), tgt_off))
            for mor, tgt_off in placements:
                for (i, j), op in mor.entries.items():
                    entries[(tgt_off + i, src_off + j)] = op
        diffs.append(BGMorphism(terms[l], terms[l + 1], entries))

    try:
        return BGComplex(terms, diffs, tags=tags)
    except ValueError as exc:
        raise AssemblyError(f"assembled total complex failed validation: {exc}") from exc


def suspend_complex(b: BGComplex) -> BGComplex:
    """Resolution of the suspension, assembled over the Mahowald sequences.

    Position k of the output is (suspended level of b^k) + (quotient level
    of b^{k-1}); tags identify the two families as ('psr', k, 0, ·) and
    ('psr', k-1, 1, ·).
    """
    bases = [mahowald_resolution(t) for t in b.terms]
    return assemble_psr(bases, b, shift=1)


def iterate_suspension(b: BGComplex, times: int) -> BGComplex:
    for _ in range(times):
        b = suspend_complex(b)
    return b


# ---------------------------------------------------------------------------
# The graph model


@dataclass(frozen=True)
class GraphVertex:
    position: int
    labels: tuple[int, ...]  # the admissible label sequence from the root
    j_index: int

    @property
    def weight(self) -> int:
        return sum(self.labels)


@dataclass
class BGGraph:
    """Vertex/edge model of the resolution of the m-fold suspension of J(n).

    Vertices carry the resolution position, the J-index, and the label
    weight; edges connect consecutive positions and carry single ``Sq^k``
    labels (k = 0 allowed for closure edges).
    """

    m: int
    n: int
    vertices: list[GraphVertex]
    edges: dict[tuple[tuple[int, ...], tuple[int, ...]], int]
    max_weight: Optional[int] = None
    _by_position: dict[int, list[GraphVertex]] = field(default_factory=dict)

    def positions(self) -> list[int]:
        return sorted(self._by_position)

    def at_position(self, r: int) -> list[GraphVertex]:
        return self._by_position.get(r, [])

    def vertex_count(self) -> int:
        return len(self.vertices)

    def to_complex(self) -> BGComplex:
        order: dict[int, dict[tuple[int, ...], int]] = {}
        terms = []
        tags = []
        for r in self.positions():
            verts = self.at_position(r)
            order[r] = {v.labels: idx for idx, v in enumerate(verts)}
            terms.append(BGModule(v.j_index for v in verts))
            tags.append(tuple(("vertex",) + v.labels for v in verts))
        diffs = []
        for r in self.positions()[:-1]:
            entries = {}
            for (src, dst), k in self.edges.items():
                if len(src) != r:
                    continue
                entries[(order[r + 1][dst], order[r][src])] = SteenrodOp.monomial(k) if k else SteenrodOp.one()
            diffs.append(BGMorphism(terms[r], terms[r + 1], entries))
        return BGComplex(terms, diffs, tags=tags)

    def to_dot(self) -> str:
        lines = ["digraph bg {", "  rankdir=LR;"]
        names = {}
        for idx, v in enumerate(self.vertices):
            names[v.labels] = f"v{idx}"
            lines.append(
                f'  v{idx} [label="J({v.j_index})@{v.position}"];'
            )
        for (src, dst), k in sorted(self.edges.items()):
            lines.append(f'  {names[src]} -> {names[dst]} [label="Sq^{k}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


class GraphClosureError(RuntimeError):
    """Edge completion required an edge the vertex set cannot host."""


def _graph_vertices(m: int, n: int, max_weight: Optional[int]) -> list[GraphVertex]:
    total = m + n
    out = [GraphVertex(0, (), total)]
    frontier = [()]
    position = 0
    while frontier:
        position += 1
        nxt = []
        for seq in frontier:
            used = sum(seq)
            lo = (n // 2) + 1 if not seq else (seq[-1] // 2) + 1
            for k in range(lo, total - used + 1):
                if max_weight is not None and used + k > max_weight:
                    break
                j = total - used - k
                if j < k:
                    break
                child = seq + (k,)
                out.append(GraphVertex(position, child, j))
                nxt.append(child)
        frontier = nxt
    out.sort(key=lambda v: (v.position, v.labels))
    return out


def build_graph(m: int, n: int, max_weight: Optional[int] = None) -> BGGraph:
    """The labeled graph of the resolution of the m-fold suspension of J(n).

    Vertices are the admissible label sequences ``(k_0, ..., k_{r-1})``
    with ``2 k_0 > n``, ``2 k_{i+1} > k_i`` and ``m + n - sum(k) >= k_last``;
    the edge set starts from the defining paths and is closed under the
    two-step rewriting rule until every composite differential vanishes.

    ``max_weight`` truncates to label weight at most the bound; the
    truncated region is closed under the completion rule, so slices of
    bounded weight are computed exactly.
    """
    if n < 1 or m < 0:
        raise ValueError("need m >= 0 and n >= 1")
    vertices = _graph_vertices(m, n, max_weight)
    vert_set = {v.labels for v in vertices}
    j_index = {v.labels: v.j_index for v in vertices}
    by_pos: dict[int, list[GraphVertex]] = {}
    for v in vertices:
        by_pos.setdefault(v.position, []).append(v)

    edges: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    path_edges: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}
    for v in vertices:
        if v.labels:
            parent = v.labels[:-1]
            edges[(parent, v.labels)] = v.labels[-1]
            path_edges[(parent, v.labels[-1])] = v.labels

    out_edges: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]] = {}

    def rebuild_out() -> None:
        out_edges.clear()
        for (src, dst), k in edges.items():
            out_edges.setdefault(src, []).append((dst, k))

    rebuild_out()
    changed = True
    while changed:
        changed = False
        positions = sorted(by_pos)
        for r in positions:
            for v in by_pos[r]:
                sums: dict[tuple[int, ...], set[Monomial]] = {}
                for (mid, k1) in out_edges.get(v.labels, ()):
                    for (dst, k2) in out_edges.get(mid, ()):
                        acc = sums.setdefault(dst, set())
                        acc ^= reduce_monomial((k1, k2))
                for dst, words in sorted(sums.items()):
                    cap = j_index[dst]
                    for word in sorted(words):
                        if excess(word) > cap:
                            continue
                        if len(word) == 0:
                            continue  # unit composite; path edges never carry Sq^0
                        if len(word) == 1:
                            i1, i2 = word[0], 0
                        elif len(word) == 2:
                            i1, i2 = word
                        else:  # pair products reduce to words of length <= 2
                            raise GraphClosureError(f"unexpected word {word}")
                        z = v.labels + (i1,)
                        if z not in vert_set:
                            # no host for this term yet: it cancels against
                            # contributions of edges added in later sweeps,
                            # and the final d^2 = 0 validation is the gate
                            continue
                        existing = edges.get((z, dst))
                        if existing is None:
                            edges[(z, dst)] = i2
                            changed = True
        if changed:
            rebuild_out()

    graph = BGGraph(m, n, vertices, edges, max_weight)
    graph._by_position = by_pos
    return graph


# ---------------------------------------------------------------------------
# Minimal reduction (cancellation of identity entries)


def minimal_reduce(c: BGComplex) -> BGComplex:
    """Quotient by the maximal simple subcomplex.

    Repeatedly cancels an identity entry between J(r) summands in adjacent
    positions, updating the remaining entries by ``g1 + g2 . g3``; the
    output is quasi-isomorphic to the input and contains no identity
    entries, so for a resolution of a finite module it is the minimal
    injective resolution.
    """
    summands = [list(t.summands) for t in c.terms]
    tags = [list(tg) for tg in c.tags]
    diffs = [dict(d.entries) for d in c.diffs]
    one = SteenrodOp.one()

    while True:
        found = None
        for k, entries in enumerate(diffs):
            hits = [key for key, op in entries.items() if op == one]
            if hits:
                found = (k, min(hits))
                break
        if found is None:
            break
        k, (a_row, b_col) = found
        d_k = diffs[k]
        col_of_b = {
            i: op for (i, j), op in d_k.items() if j == b_col and i != a_row
        }
        row_of_a = {
            j: op for (i, j), op in d_k.items() if i == a_row and j != b_col
        }
        new_dk: dict[tuple[int, int], SteenrodOp] = {}
        for (i, j), op in d_k.items():
            if i == a_row or j == b_col:
                continue
            new_dk[(i, j)] = op
        for j, g3 in row_of_a.items():
            for i, g2 in col_of_b.items():
                word = g3 * g2  # path order: first into the pair, then out
                if word.is_zero():
                    continue
                cur = new_dk.get((i, j), SteenrodOp.zero()) + word
                cur = cur.truncate(summands[k + 1][i])
                if cur.is_zero():
                    new_dk.pop((i, j), None)
                else:
                    new_dk[(i, j)] = cur

        def dropped(entries: dict, *, row: Optional[int] = None, col: Optional[int] = None) -> dict:
            out = {}
            for (i, j), op in entries.items():
                if row is not None:
                    if i == row:
                        continue
                    i2 = i - 1 if i > row else i
                else:
                    i2 = i
                if col is not None:
                    if j == col:
                        continue
                    j2 = j - 1 if j > col else j
                else:
                    j2 = j
                out[(i2, j2)] = op
            return out

        diffs[k] = dropped(new_dk, row=a_row, col=b_col)
        if k >= 1:
            diffs[k - 1] = dropped(diffs[k - 1], row=b_col)
        if k + 1 < len(diffs):
            diffs[k + 1] = dropped(diffs[k + 1], col=a_row)
        del summands[k][b_col]
        del tags[k][b_col]
        del summands[k + 1][a_row]
        del tags[k + 1][a_row]

    while summands and not summands[-1]:
        summands.pop()
        tags.pop()
        if diffs:
            diffs.pop()
    terms = [BGModule(s) for s in summands]
    morphisms = [
        BGMorphism(terms[k], terms[k + 1], diffs[k]) for k in range(len(diffs))
    ]
    return BGComplex(terms, morphisms, tags=[tuple(t) for t in tags])


def is_minimal(c: BGComplex) -> bool:
    one = SteenrodOp.one()
    return not any(op == one for d in c.diffs for op in d.entries.values())


# ---------------------------------------------------------------------------
# The identity-entry slice complex


@dataclass
class SliceHomology:
    """Homology of the identity-entry complex, graded by (position, J-index)."""

    dims: dict[tuple[int, int], int]
    term_counts: dict[tuple[int, int], int]

    def dim(self, r: int, s: int) -> int:
        return self.dims.get((r, s), 0)


def ext_complex(c: BGComplex) -> SliceHomology:
    """Per-slice homology of the complex of summands with only identity
    entries retained.

    For a resolution of M, slice s in position r computes the dimension of
    Ext^r from the s-fold suspension of F2 into M; for a minimal complex
    the differential vanishes and the answer is the summand count.
    """
    term_counts: dict[tuple[int, int], int] = {}
    index_lists: list[dict[int, list[int]]] = []
    for r, t in enumerate(c.terms):
        per: dict[int, list[int]] = {}
        for idx, s in enumerate(t.summands):
            per.setdefault(s, []).append(idx)
            term_counts[(r, s)] = term_counts.get((r, s), 0) + 1
        index_lists.append(per)

    one = SteenrodOp.one()
    ranks: dict[tuple[int, int], int] = {}
    for r, d in enumerate(c.diffs):
        slices = set(index_lists[r]) & set(index_lists[r + 1])
        for s in slices:
            cols = index_lists[r][s]
            rows = index_lists[r + 1][s]
            cpos = {idx: pos for pos, idx in enumerate(cols)}
            rpos = {idx: pos for pos, idx in enumerate(rows)}
            data = [0] * len(rows)
            for (i, j), op in d.entries.items():
                if op == one and i in rpos and j in cpos:
                    data[rpos[i]] |= 1 << cpos[j]
            ranks[(r, s)] = F2Matrix(len(rows), len(cols), data).rank()

    dims: dict[tuple[int, int], int] = {}
    for (r, s), count in term_counts.items():
        h = count - ranks.get((r, s), 0) - ranks.get((r - 1, s), 0)
        if h:
            dims[(r, s)] = h
    return SliceHomology(dims, term_counts)


# ---------------------------------------------------------------------------
# Whole-complex verification


@dataclass
class ComplexReport:
    checked: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_resolution(
    c: BGComplex,
    d_max: int,
    h0_dims: Optional[dict[int, int]] = None,
) -> ComplexReport:
    """Check realized d^2 = 0, homology concentration in position 0, and
    Euler-characteristic agreement for all internal degrees <= d_max."""
    failures = []
    checked = 0
    for d in range(d_max + 1):
        mats = [dv.realize(d) for dv in c.diffs]
        for k in range(len(mats) - 1):
            checked += 1
            if not (mats[k + 1] @ mats[k]).is_zero():
                failures.append(f"d^2 != 0 at position {k}, degree {d}")
        dims = [t.dim(d) for t in c.terms]
        ranks = [m.rank() for m in mats]
        for k in range(len(c.terms)):
            r_in = ranks[k - 1] if k >= 1 else 0
            r_out = ranks[k] if k < len(ranks) else 0
            h = dims[k] - r_in - r_out
            checked += 1
            if k == 0:
                if h0_dims is not None and h != h0_dims.get(d, 0):
                    failures.append(
                        f"H^0 in degree {d} is {h}, expected {h0_dims.get(d, 0)}"
                    )
            elif h != 0:
                failures.append(f"H^{k} != 0 in degree {d} (dim {h})")
        if h0_dims is not None:
            checked += 1
            if c.euler(d) != h0_dims.get(d, 0):
                failures.append(f"Euler characteristic off in degree {d}")
    return ComplexReport(checked, failures)
