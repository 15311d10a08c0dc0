"""Woven graph codes with convolutional constituents.

The construction places one parity row per left vertex (the constituent
checks in column order) and one per right vertex (the same checks permuted
and routed along the graph).  On circulant bipartite graphs the whole code
collapses to a two-variable description: convolutional in D, wrapped in Z.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations, permutations

from .gf2 import (
    BinaryMatrix,
    BinaryPoly,
    BivariatePoly,
    BivariatePolyMatrix,
    PolyMatrix,
    kernel_basis,
    rank_over_rational_field,
    row_reduce,
    tailbite,
    tailbite_generator,
)
from .convcodes import ConvCode, block_distance_conv, free_distance, rate_half_subcodes
from .hypergraphs import Hypergraph, girth


class StructureError(ValueError):
    """The graph lacks the structure an operation requires."""


# ---------------------------------------------------------------------------
# assembly


def _edge_positions(g: Hypergraph) -> list[tuple[int, int]]:
    """(left vertex, slot) per edge, slot = rank within the left vertex's edges."""
    seen: dict[int, int] = {}
    out = []
    for e in g.edges:
        v = e[0]
        slot = seen.get(v, 0)
        seen[v] = slot + 1
        out.append((v, slot))
    return out


class WovenConvCode:
    """Woven graph code: bipartite graph plus a permuted convolutional check row."""

    def __init__(self, graph: Hypergraph, hc: PolyMatrix, perm: tuple[int, ...]):
        if graph.s != 2:
            raise StructureError("woven convolutional assembly needs a bipartite graph")
        if hc.cols != graph.c:
            raise ValueError(f"check row has {hc.cols} columns, graph degree is {graph.c}")
        if sorted(perm) != list(range(1, graph.c + 1)):
            raise ValueError(f"perm must rearrange 1..{graph.c}, got {perm}")
        self.graph = graph
        self.hc = hc
        self.perm = tuple(perm)
        self.n = graph.n
        self.c = graph.c
        self.H_wg = self._assemble()
        self._offsets: tuple[int, ...] | None | str = "unset"
        self._minimal: PolyMatrix | None = None

    # t-row polynomials: column slot j of the left blocks carries check j on
    # the left and check perm[j] on the right
    def t_polys(self) -> list[list[BinaryPoly]]:
        return [[self.hc.entries[i][p - 1] for p in self.perm] for i in range(self.hc.rows)]

    def _assemble(self) -> PolyMatrix:
        g, hc = self.graph, self.hc
        r = hc.rows
        zero = BinaryPoly(0)
        pos = _edge_positions(g)
        rows: list[list[BinaryPoly]] = []
        for v in range(g.n):
            incident = g.incident_edges(0, v)
            for i in range(r):
                row = [zero] * g.num_edges
                for slot, e in enumerate(incident):
                    row[e] = hc.entries[i][slot]
                rows.append(row)
        t = self.t_polys()
        for v in range(g.n):
            incident = sorted(g.incident_edges(1, v), key=lambda e: (pos[e][1], e))
            for i in range(r):
                row = [zero] * g.num_edges
                for slot, e in enumerate(incident):
                    row[e] = t[i][slot]
                rows.append(row)
        return PolyMatrix(rows)

    # -- circulant structure ----------------------------------------------

    def z_offsets(self) -> tuple[int, ...] | None:
        """Per-slot left-block offsets when the graph is circulant, else None.

        Requires edge j to belong to left vertex j // c, every right vertex
        to see each slot exactly once, and the slot offsets to be the same
        for every right vertex.
        """
        if self._offsets != "unset":
            return self._offsets  # type: ignore[return-value]
        g = self.graph
        result: tuple[int, ...] | None
        pos = _edge_positions(g)
        if any(e[0] != i // g.c for i, e in enumerate(g.edges)):
            result = None
        else:
            offsets: list[set[int]] = [set() for _ in range(g.c)]
            ok = True
            for v in range(g.n):
                slots_seen = set()
                for e in g.incident_edges(1, v):
                    left, slot = pos[e]
                    slots_seen.add(slot)
                    offsets[slot].add((left - v) % g.n)
                if slots_seen != set(range(g.c)):
                    ok = False
                    break
            if ok and all(len(o) == 1 for o in offsets):
                result = tuple(o.pop() for o in offsets)
            else:
                result = None
        self._offsets = result
        return result

    def __repr__(self) -> str:
        return f"WovenConvCode(n={self.n}, c={self.c}, perm={self.perm})"


def build_woven_conv(g: Hypergraph, hc: PolyMatrix,
                     perm: tuple[int, ...] | None = None) -> WovenConvCode:
    perm = perm or tuple(range(1, g.c + 1))
    return WovenConvCode(g, hc, tuple(perm))


# ---------------------------------------------------------------------------
# two-variable forms


def two_dim_forms(code: WovenConvCode) -> tuple[BivariatePolyMatrix, BivariatePolyMatrix]:
    """Check and generator matrices in the two formal variables D and Z.

    Only defined on circulant bipartite graphs with a single check row and
    degree 3.  The generator entries are the six pairwise products of check
    polynomials arranged so the product with the check transpose vanishes
    identically.
    """
    offsets = code.z_offsets()
    if offsets is None:
        raise StructureError("graph is not circulant; no two-variable form")
    if code.hc.rows != 1 or code.c != 3:
        raise StructureError("two-variable form implemented for one check row, degree 3")
    if offsets[0] != 0:
        raise StructureError("expected the first slot to have offset zero")
    h = list(code.hc.entries[0])
    t = code.t_polys()[0]
    o2, o3 = offsets[1], offsets[2]
    H = BivariatePolyMatrix([
        [BivariatePoly.mono(h[0]), BivariatePoly.mono(h[1]), BivariatePoly.mono(h[2])],
        [BivariatePoly.mono(t[0]), BivariatePoly.mono(t[1], o2), BivariatePoly.mono(t[2], o3)],
    ])
    pa, pb = h[2] * t[0], h[1] * t[0]
    pc, pd = h[1] * t[2], h[0] * t[2]
    pe, pf = h[2] * t[1], h[0] * t[1]
    G = BivariatePolyMatrix([[
        BivariatePoly.mono(pe, o2) + BivariatePoly.mono(pc, o3),
        BivariatePoly.mono(pa) + BivariatePoly.mono(pd, o3),
        BivariatePoly.mono(pb) + BivariatePoly.mono(pf, o2),
    ]])
    product = (G @ H.transpose()).reduce_z(code.n)
    if not product.is_zero():
        raise AssertionError("two-variable generator failed the orthogonality check")
    return H, G


def expanded_generator(code: WovenConvCode) -> PolyMatrix:
    """One-variable generator: the two-variable row wrapped over Z.

    Row r places the coefficient of Z^t at column block (r + o3 - t) mod n,
    keeping the row family aligned with the quasi-cyclic column layout.
    """
    _, G = two_dim_forms(code)
    offsets = code.z_offsets()
    assert offsets is not None
    o3 = offsets[2]
    n, c = code.n, code.c
    zero = BinaryPoly(0)
    rows = []
    for r in range(n):
        row = [zero] * (n * c)
        for j, entry in enumerate(G.entries[0]):
            for z_exp, bits in entry.terms.items():
                blk = (r + o3 - z_exp) % n
                row[blk * c + j] = row[blk * c + j] + BinaryPoly(bits)
        rows.append(row)
    gen = PolyMatrix(rows)
    syndrome = gen @ code.H_wg.transpose()
    if not syndrome.is_zero():
        raise AssertionError("expanded generator failed the parity check")
    return gen


@dataclass(frozen=True)
class GeneratorReport:
    raw: PolyMatrix
    minimal: PolyMatrix
    nu_raw: int
    nu_minimal: int
    code_dimension: int


def minimal_generator(code: WovenConvCode) -> PolyMatrix:
    """Minimal-basic generator of the full code, from the parity kernel."""
    if code._minimal is None:
        code._minimal = row_reduce(kernel_basis(code.H_wg))
    return code._minimal


def generator_report(code: WovenConvCode) -> GeneratorReport:
    raw = expanded_generator(code)
    minimal = minimal_generator(code)
    return GeneratorReport(
        raw=raw,
        minimal=minimal,
        nu_raw=raw.constraint_length,
        nu_minimal=minimal.constraint_length,
        code_dimension=minimal.rows,
    )


def is_generator_complete(code: WovenConvCode) -> bool:
    """True when the wrapped rows span the whole code (full-rank check side)."""
    return minimal_generator(code).rows == expanded_generator(code).rows


# ---------------------------------------------------------------------------
# distance bounds


@dataclass(frozen=True)
class DistanceReport:
    product_bound: int
    improved_bound: int | None
    witness_weight: int | None
    witness: tuple[BinaryPoly, ...] | None
    exhaustive: bool

    def chain_ok(self) -> bool:
        vals = [self.product_bound, self.improved_bound, self.witness_weight]
        present = [v for v in vals if v is not None]
        return all(a <= b for a, b in zip(present, present[1:]))


def distance_bounds(code: WovenConvCode, *, witness: "WitnessResult | None" = None
                    ) -> DistanceReport:
    """Product-type and subcode-improved lower bounds on the free distance.

    Bipartite product bound: max(girth/2, 2) times the constituent free
    distance.  The improved bound splits codewords by constituent support:
    fully block-weight-2 words live in the rate-1/2 subcodes and activate at
    least girth/2 constituents; anything else activates one more constituent
    at full free distance.
    """
    constituent = ConvCode.from_parity(code.hc)
    d_block = block_distance_conv(constituent)
    if d_block < 2:
        raise ValueError("constituent block distance must be at least 2")
    d_free_c = free_distance(constituent)
    g = girth(code.graph)
    if g is None:
        raise StructureError("acyclic graph has no product bound")
    active = max(g // 2, 2)
    product = active * d_free_c
    improved: int | None = None
    if d_block == 2 and code.c == 3 and code.hc.rows == 1:
        d_sub = min(free_distance(sc) for sc in rate_half_subcodes(constituent))
        improved = min(active * d_sub, (active + 1) * d_free_c)
    return DistanceReport(
        product_bound=product,
        improved_bound=improved,
        witness_weight=witness.weight if witness else None,
        witness=witness.word if witness else None,
        exhaustive=witness.exact if witness else False,
    )


# ---------------------------------------------------------------------------
# witness search


@dataclass(frozen=True)
class WitnessBudget:
    max_terms: int = 3
    max_shift: int = 12
    search_nodes: int = 200_000
    search_state_limit: int = 20


@dataclass(frozen=True)
class WitnessResult:
    weight: int
    word: tuple[BinaryPoly, ...]
    exact: bool
    nodes_expanded: int


class BudgetExhausted(RuntimeError):
    def __init__(self, message: str, result: WitnessResult):
        super().__init__(message)
        self.result = result


def _family_rows(code: WovenConvCode) -> list[list[int]]:
    rows = [
        [p.bits for p in row]
        for row in minimal_generator(code).entries
    ]
    try:
        raw = expanded_generator(code)
    except StructureError:
        return rows
    for row in raw.entries:
        cand = [p.bits for p in row]
        if cand not in rows:
            rows.append(cand)
    return rows


def witness_search(code: WovenConvCode, target: int | None = None,
                   budget: WitnessBudget | None = None) -> WitnessResult:
    """Lowest-weight codeword found under the budget.

    Enumerates combinations of D-shifted generator rows (at most
    ``max_terms`` terms, shifts up to ``max_shift``), then tries a
    weight-bounded bidirectional pass over the encoder state space.  The
    result is marked exact only when that pass finishes inside the budget;
    a codeword is normalized so some term uses shift zero.
    """
    budget = budget or WitnessBudget()
    rows = _family_rows(code)
    ncols = code.n * code.c
    best_vec: list[int] | None = None
    best_w = 1 << 60

    shifted = [(r, b) for r in range(len(rows)) for b in range(budget.max_shift + 1)]
    vecs = {t: [p << t[1] for p in rows[t[0]]] for t in shifted}
    zero_shift = [t for t in shifted if t[1] == 0]

    def consider(vec: list[int]) -> None:
        nonlocal best_vec, best_w
        w = sum(p.bit_count() for p in vec)
        if 0 < w < best_w:
            best_w = w
            best_vec = vec

    for base_t in zero_shift:
        base = vecs[base_t]
        consider(base)
        others = [t for t in shifted if t > base_t]
        for extra in range(1, budget.max_terms):
            for combo in combinations(others, extra):
                vec = list(base)
                for t in combo:
                    tv = vecs[t]
                    for j in range(ncols):
                        vec[j] ^= tv[j]
                consider(vec)

    if best_vec is None:
        raise ValueError("no nonzero codeword found; empty generator family")

    refined = _bidirectional_refine(code, best_w, budget)
    if refined is None:
        result = WitnessResult(
            weight=best_w,
            word=tuple(BinaryPoly(p) for p in best_vec),
            exact=False,
            nodes_expanded=0,
        )
    else:
        weight, word, nodes = refined
        if weight < best_w:
            result = WitnessResult(weight=weight, word=word, exact=True,
                                   nodes_expanded=nodes)
        else:
            result = WitnessResult(
                weight=best_w,
                word=tuple(BinaryPoly(p) for p in best_vec),
                exact=True,
                nodes_expanded=nodes,
            )
    if target is not None and result.weight > target:
        raise BudgetExhausted(
            f"no codeword of weight <= {target} found (best {result.weight})", result)
    return result


_INF = 1 << 60


def _bidirectional_refine(code: WovenConvCode, cap: int, budget: WitnessBudget
                          ) -> tuple[int, tuple[BinaryPoly, ...], int] | None:
    """Weight-bounded two-sided search for the exact lightest codeword.

    Forward distances start at the diverging branches, backward distances
    end at the remerging branches; both avoid the zero state in the
    interior, so stitching them at any state yields a valid single-event
    path.  Returns None, honestly, when the state space or node budget is
    exceeded; all expansions are pruned at the enumeration cap since
    heavier paths cannot improve it.
    """
    gen = minimal_generator(code)
    if gen.constraint_length > budget.search_state_limit:
        return None
    from .convcodes import _Trellis, _transition_table

    tr = _Trellis(gen)
    states, rows = _transition_table(tr)
    nodes = 0

    fwd = {}
    fwd_pred: dict[int, tuple[int, int]] = {}
    best_single = _INF
    best_single_u = None
    heap: list[tuple[int, int]] = []
    for u_idx, (nxt, w) in enumerate(rows[0]):
        if not any(tr.inputs[u_idx]):
            continue
        if nxt == 0:
            if w < best_single:
                best_single, best_single_u = w, u_idx
        elif w < cap and w < fwd.get(nxt, _INF):
            fwd[nxt] = w
            fwd_pred[nxt] = (0, u_idx)
            heapq.heappush(heap, (w, nxt))
    while heap:
        w, s = heapq.heappop(heap)
        if w > fwd.get(s, _INF):
            continue
        nodes += 1
        if nodes > budget.search_nodes:
            return None
        for u_idx, (nxt, bw) in enumerate(rows[s]):
            if nxt == 0:
                continue
            nw = w + bw
            if nw < cap and nw < fwd.get(nxt, _INF):
                fwd[nxt] = nw
                fwd_pred[nxt] = (s, u_idx)
                heapq.heappush(heap, (nw, nxt))

    back: dict[int, int] = {}
    back_succ: dict[int, tuple[int, int]] = {}
    rev: list[list[tuple[int, int, int]]] = [[] for _ in states]
    for s, outs in enumerate(rows):
        if s == 0:
            continue
        for u_idx, (nxt, w) in enumerate(outs):
            rev[nxt].append((s, u_idx, w))
    heap = []
    for s, u_idx, w in rev[0]:
        if w < cap and w < back.get(s, _INF):
            back[s] = w
            back_succ[s] = (0, u_idx)
            heapq.heappush(heap, (w, s))
    while heap:
        w, s = heapq.heappop(heap)
        if w > back.get(s, _INF):
            continue
        nodes += 1
        if nodes > budget.search_nodes:
            return None
        for prev, u_idx, bw in rev[s]:
            if prev == 0:
                continue
            nw = w + bw
            if nw < cap and nw < back.get(prev, _INF):
                back[prev] = nw
                back_succ[prev] = (s, u_idx)
                heapq.heappush(heap, (nw, prev))

    meet_state = None
    meet_w = best_single
    for s, wf in fwd.items():
        total = wf + back.get(s, _INF)
        if total < meet_w:
            meet_w = total
            meet_state = s
    if meet_w >= cap:
        return cap, (), nodes  # certification only; caller keeps its witness

    inputs: list[int] = []
    if meet_state is None:
        assert best_single_u is not None
        inputs = [best_single_u]
    else:
        chain = []
        s = meet_state
        while True:
            prev, u_idx = fwd_pred[s]
            chain.append(u_idx)
            if prev == 0:
                break
            s = prev
        inputs = chain[::-1]
        s = meet_state
        while s != 0:
            nxt, u_idx = back_succ[s]
            inputs.append(u_idx)
            s = nxt
    word = _encode_input_path(tr, inputs, code.n * code.c)
    return meet_w, word, nodes


def _encode_input_path(tr, input_indices: list[int], ncols: int) -> tuple[BinaryPoly, ...]:
    state = tr.zero
    cols = [0] * ncols
    for t, u_idx in enumerate(input_indices):
        u = tr.inputs[u_idx]
        hists = []
        nxt = []
        for i in range(tr.b):
            hist = (state[i] << 1) | u[i]
            hists.append(hist)
            nxt.append(hist & ((1 << tr.row_degs[i]) - 1))
        for j in range(ncols):
            bit = 0
            for i in range(tr.b):
                bit ^= (tr.taps[i][j] & hists[i]).bit_count() & 1
            cols[j] |= bit << t
        state = tuple(nxt)
    # flush the registers back to zero with zero inputs
    t = len(input_indices)
    while any(state):
        hists = []
        nxt = []
        for i in range(tr.b):
            hist = state[i] << 1
            hists.append(hist)
            nxt.append(hist & ((1 << tr.row_degs[i]) - 1))
        for j in range(ncols):
            bit = 0
            for i in range(tr.b):
                bit ^= (tr.taps[i][j] & hists[i]).bit_count() & 1
            cols[j] |= bit << t
        state = tuple(nxt)
        t += 1
    return tuple(BinaryPoly(p) for p in cols)


def orbit_multiplicity(code: WovenConvCode, word: tuple[BinaryPoly, ...]) -> int:
    """Distinct codewords among the n cyclic block shifts of a codeword."""
    vec = [p.bits for p in word]
    if len(vec) != code.n * code.c:
        raise ValueError("word length does not match the code")
    if not _is_codeword(code, vec):
        raise ValueError("input is not a codeword")
    seen = set()
    c = code.c
    cur = vec
    for _ in range(code.n):
        cur = cur[-c:] + cur[:-c]
        if not _is_codeword(code, cur):
            raise AssertionError("cyclic shift left the code; graph not circulant?")
        seen.add(tuple(cur))
    return len(seen)


def _is_codeword(code: WovenConvCode, vec: list[int]) -> bool:
    from .gf2 import clmul

    for row in code.H_wg.entries:
        acc = 0
        for p, v in zip(row, vec):
            acc ^= clmul(p.bits, v)
        if acc:
            return False
    return True


# ---------------------------------------------------------------------------
# streaming encoder


def encode_stream(code: WovenConvCode, info_bits, *, pad: bool = False) -> list[int]:
    """Encode a frame; info enters n bits per time instant, wrapped at frame end.

    The frame is tail-bitten at its level count, so the output of a frame of
    n*L info bits is n*c*L code bits with zero syndrome against
    tailbite(H_wg, L).  Work per output block is proportional to the number
    of constituent taps, the register-bank view of the wrapped generator.
    """
    bits = list(info_bits)
    k_per_level = code.n
    if len(bits) % k_per_level:
        if not pad:
            raise ValueError(
                f"info length {len(bits)} is not a multiple of {k_per_level}; "
                "pass pad=True to zero-pad")
        bits.extend([0] * (k_per_level - len(bits) % k_per_level))
    if not bits:
        raise ValueError("empty frame")
    levels = len(bits) // k_per_level
    gen = expanded_generator(code)
    grid = gen.bits()
    c, ncols = code.c, code.n * code.c
    # taps[t] = list of (input row, column, ) for coefficient of D^t
    taps: dict[int, list[tuple[int, int]]] = {}
    for i in range(gen.rows):
        for j in range(ncols):
            p = grid[i][j]
            t = 0
            while p:
                if p & 1:
                    taps.setdefault(t, []).append((i, j))
                p >>= 1
                t += 1
    u_levels = [bits[lvl * k_per_level:(lvl + 1) * k_per_level] for lvl in range(levels)]
    out = []
    for lvl in range(levels):
        block = [0] * ncols
        for t, pairs in taps.items():
            src = u_levels[(lvl + t) % levels]
            for i, j in pairs:
                if src[i]:
                    block[j] ^= 1
        out.extend(block)
    return out


# ---------------------------------------------------------------------------
# permutation sweep


@dataclass(frozen=True)
class SweepRow:
    perm: tuple[int, ...]
    nu_raw: int
    nu_minimal: int
    code_dimension: int
    product_bound: int
    improved_bound: int | None
    witness: int
    orbit: int
    flags: str


def _sweep_one(args) -> SweepRow:
    g, hc, perm, budget = args
    code = build_woven_conv(g, hc, perm)
    rep = generator_report(code)
    res = witness_search(code, budget=budget)
    orbit = orbit_multiplicity(code, res.word)
    bounds = distance_bounds(code, witness=res)
    flags = [] if rep.code_dimension == rep.raw.rows else ["rank-deficient"]
    return SweepRow(
        perm=perm,
        nu_raw=rep.nu_raw,
        nu_minimal=rep.nu_minimal,
        code_dimension=rep.code_dimension,
        product_bound=bounds.product_bound,
        improved_bound=bounds.improved_bound,
        witness=res.weight,
        orbit=orbit,
        flags=";".join(flags),
    )


def permutation_sweep(g: Hypergraph, hc: PolyMatrix,
                      budget: WitnessBudget | None = None,
                      threads: int = 1) -> list[SweepRow]:
    """All c! check permutations with structure, bounds, and witness columns.

    Permutation pairs whose expanded parity-check matrices match exactly
    under a graph automorphism are flagged as equivalent; the certification
    is conservative (unflagged pairs may still be equivalent).
    """
    budget = budget or WitnessBudget()
    perms = sorted(permutations(range(1, g.c + 1)))
    jobs = [(g, hc, perm, budget) for perm in perms]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_sweep_one, jobs))
    else:
        rows = [_sweep_one(job) for job in jobs]
    rows.sort(key=lambda r: r.perm)
    pairs = equivalent_permutation_pairs(g, hc, perms)
    partner: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for a, b in pairs:
        partner.setdefault(a, []).append(b)
        partner.setdefault(b, []).append(a)
    tagged = []
    for row in rows:
        extra = [f"equivalent-to:{','.join(map(str, other))}"
                 for other in partner.get(row.perm, [])]
        flags = ";".join(filter(None, [row.flags, *extra]))
        tagged.append(replace(row, flags=flags))
    return tagged


def equivalent_permutation_pairs(g: Hypergraph, hc: PolyMatrix,
                                 perms, *, max_vertices: int = 40
                                 ) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Permutation pairs certified equivalent by a graph automorphism.

    An automorphism permutes the edge columns; when the relabelled check
    rows of one permutation equal the rows of another as a multiset, the
    two codes are identical up to coordinate relabelling.  Unflagged pairs
    may still be equivalent through relabellings outside this family.
    """
    if 2 * g.n > max_vertices:
        return []
    autos = _bipartite_automorphisms(g)
    row_sets = {}
    mats = {}
    for perm in perms:
        code = build_woven_conv(g, hc, perm)
        mats[perm] = code.H_wg.entries
        row_sets[perm] = sorted(code.H_wg.entries)
    ncols = g.num_edges
    found = []
    for pa, pb in combinations(perms, 2):
        hit = False
        for edge_perm in autos:
            inverse = [0] * ncols
            for j, img in enumerate(edge_perm):
                inverse[img] = j
            mapped = sorted(
                tuple(row[inverse[j]] for j in range(ncols)) for row in mats[pa]
            )
            if mapped == row_sets[pb]:
                hit = True
                break
        if hit:
            found.append((pa, pb))
    return found


def _bipartite_automorphisms(g: Hypergraph) -> list[list[int]]:
    """Edge permutations induced by automorphisms of the bipartite graph."""
    n = g.n
    adj: list[set[int]] = [set() for _ in range(2 * n)]
    for (a, b) in g.edges:
        adj[a].add(n + b)
        adj[n + b].add(a)
    verts = list(range(2 * n))
    autos: list[dict[int, int]] = []

    def extend(mapping: dict[int, int], used: set[int]) -> None:
        if len(mapping) == len(verts):
            autos.append(dict(mapping))
            return
        v = max((x for x in verts if x not in mapping),
                key=lambda x: sum(1 for y in adj[x] if y in mapping))
        cands = set(verts) - used
        for y in adj[v]:
            if y in mapping:
                cands &= adj[mapping[y]]
        for cand in sorted(cands):
            if all((mapping[y] in adj[cand]) == (y in adj[v]) for y in mapping):
                mapping[v] = cand
                used.add(cand)
                extend(mapping, used)
                del mapping[v]
                used.discard(cand)

    extend({}, set())
    edge_index = {}
    for i, (a, b) in enumerate(g.edges):
        edge_index.setdefault((a, b), []).append(i)
    out = []
    for mapping in autos:
        image_index = {k: list(v) for k, v in edge_index.items()}
        per = [0] * g.num_edges
        ok = True
        for i, (a, b) in enumerate(g.edges):
            u, w = mapping[a], mapping[n + b]
            if u >= n:
                u, w = w, u
            bucket = image_index.get((u, w - n))
            if not bucket:
                ok = False
                break
            per[i] = bucket.pop()
        if ok:
            out.append(per)
    return out
