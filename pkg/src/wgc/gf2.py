"""Bit-packed linear algebra over GF(2), GF(2)[D], and the rational field GF(2)(D).

Polynomials are kept as plain ints (bit i = coefficient of D^i); matrices
store one int per row (bit j = column j).  Everything is immutable after
construction, so values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


# ---------------------------------------------------------------------------
# raw int polynomials


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[D] polynomials packed into ints."""
    out = 0
    while a:
        lsb = a & -a
        out ^= b << (lsb.bit_length() - 1)
        a ^= lsb
    return out


def _deg(a: int) -> int:
    return a.bit_length() - 1


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = _deg(b)
    while a and _deg(a) >= db:
        sh = _deg(a) - db
        q |= 1 << sh
        a ^= b << sh
    return q, a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _divmod(a, b)[1]
    return a


@dataclass(frozen=True, order=True)
class BinaryPoly:
    """Polynomial over GF(2), coefficient of D^i stored in bit i of ``bits``."""

    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise ValueError("coefficient payload must be nonnegative")

    @classmethod
    def parse(cls, text: str) -> "BinaryPoly":
        """Parse a 0/1 coefficient string, lowest degree first ("11001" = 1+D+D^4)."""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a coefficient string: {text!r}")
        return cls(int(text[::-1], 2))

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return None if self.bits == 0 else _deg(self.bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __add__(self, other: "BinaryPoly") -> "BinaryPoly":
        return BinaryPoly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPoly") -> "BinaryPoly":
        return BinaryPoly(clmul(self.bits, other.bits))

    def __divmod__(self, other: "BinaryPoly") -> tuple["BinaryPoly", "BinaryPoly"]:
        q, r = _divmod(self.bits, other.bits)
        return BinaryPoly(q), BinaryPoly(r)

    def __floordiv__(self, other: "BinaryPoly") -> "BinaryPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "BinaryPoly") -> "BinaryPoly":
        return divmod(self, other)[1]

    def shift(self, k: int) -> "BinaryPoly":
        """Multiply by D^k."""
        return BinaryPoly(self.bits << k)

    def coeff(self, i: int) -> int:
        return (self.bits >> i) & 1

    def to_string(self) -> str:
        """Coefficient string, lowest degree first; "0" for the zero polynomial."""
        if self.bits == 0:
            return "0"
        return format(self.bits, "b")[::-1]

    def __str__(self) -> str:
        return self.to_string()


def poly_mul(a: BinaryPoly, b: BinaryPoly) -> BinaryPoly:
    """Carry-less polynomial product over GF(2)."""
    return a * b


def poly_gcd(a: BinaryPoly, b: BinaryPoly) -> BinaryPoly:
    return BinaryPoly(_gcd(a.bits, b.bits))


# ---------------------------------------------------------------------------
# binary matrices


class BinaryMatrix:
    """Immutable bit-packed matrix over GF(2); row i is the int rows[i]."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[int], cols: int):
        payload = tuple(int(r) for r in data)
        mask = (1 << cols) - 1
        for r in payload:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the column range")
        object.__setattr__(self, "data", payload)
        object.__setattr__(self, "rows", len(payload))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BinaryMatrix":
        """Build from 0/1 strings; leftmost character is column 0."""
        if not rows:
            return cls((), 0)
        cols = len(rows[0])
        ints = []
        for s in rows:
            if len(s) != cols or set(s) - {"0", "1"}:
                raise ValueError(f"bad matrix row {s!r}")
            ints.append(int(s[::-1], 2))
        return cls(ints, cols)

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        """Parse the text format: first line "rows cols", then 0/1 rows."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        m, n = (int(x) for x in lines[0].split())
        if len(lines) - 1 != m:
            raise ValueError(f"expected {m} rows, got {len(lines) - 1}")
        mat = cls.from_strings(lines[1:])
        if mat.cols != n:
            raise ValueError(f"expected {n} columns, got {mat.cols}")
        return mat

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls((1 << i for i in range(n)), n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls((0,) * rows, cols)

    # -- basic queries -----------------------------------------------------

    def bit(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def row_weights(self) -> list[int]:
        return [r.bit_count() for r in self.data]

    def col_weights(self) -> list[int]:
        return [sum((r >> j) & 1 for r in self.data) for j in range(self.cols)]

    def transpose(self) -> "BinaryMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                lsb = r & -r
                out[lsb.bit_length() - 1] |= 1 << i
                r ^= lsb
        return BinaryMatrix(out, self.rows)

    def stack(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if other.cols != self.cols:
            raise ValueError("column mismatch")
        return BinaryMatrix(self.data + other.data, self.cols)

    def mul_vec(self, v: int) -> int:
        """Syndrome M v^T as an int with bit i = parity of row i AND v."""
        out = 0
        for i, r in enumerate(self.data):
            out |= ((r & v).bit_count() & 1) << i
        return out

    def permuted(self, row_perm: Sequence[int] | None = None,
                 col_perm: Sequence[int] | None = None) -> "BinaryMatrix":
        """Reorder rows/columns; col_perm[j] is the new position of column j."""
        rows = list(self.data)
        if col_perm is not None:
            moved = []
            for r in rows:
                nr = 0
                for j in range(self.cols):
                    if (r >> j) & 1:
                        nr |= 1 << col_perm[j]
                moved.append(nr)
            rows = moved
        if row_perm is not None:
            out = [0] * self.rows
            for i, r in enumerate(rows):
                out[row_perm[i]] = r
            rows = out
        return BinaryMatrix(rows, self.cols)

    def __matmul__(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = other.transpose()
        out = []
        for r in self.data:
            bits = 0
            for j, c in enumerate(ot.data):
                bits |= ((r & c).bit_count() & 1) << j
            out.append(bits)
        return BinaryMatrix(out, other.cols)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, BinaryMatrix)
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self) -> int:
        return hash((self.cols, self.data))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols})"

    def to_strings(self) -> list[str]:
        return [format(r, f"0{self.cols}b")[::-1] if self.cols else "" for r in self.data]

    def to_text(self) -> str:
        return "\n".join([f"{self.rows} {self.cols}"] + self.to_strings()) + "\n"


def rank(m: BinaryMatrix) -> int:
    """GF(2) row rank via elimination (first nonzero pivot in row-major scan)."""
    work = list(m.data)
    r = 0
    for col in range(m.cols):
        piv = next((i for i in range(r, len(work)) if (work[i] >> col) & 1), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        r += 1
    return r


def rref(m: BinaryMatrix) -> BinaryMatrix:
    """Reduced row echelon form; canonical for the row space under fixed columns."""
    work = list(m.data)
    r = 0
    for col in range(m.cols):
        piv = next((i for i in range(r, len(work)) if (work[i] >> col) & 1), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        r += 1
    return BinaryMatrix(work[:r], m.cols)


def row_space_equal(a: BinaryMatrix, b: BinaryMatrix) -> bool:
    return a.cols == b.cols and rref(a) == rref(b)


def nullspace_basis(m: BinaryMatrix) -> BinaryMatrix:
    """Basis of {v : M v^T = 0}; row count is cols - rank(M)."""
    work = list(m.data)
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        piv = next((i for i in range(r, len(work)) if (work[i] >> col) & 1), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> col) & 1:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for i, pc in enumerate(pivots):
            if (work[i] >> free) & 1:
                v |= 1 << pc
        basis.append(v)
    return BinaryMatrix(basis, m.cols)


# ---------------------------------------------------------------------------
# canonical form under row and column permutations


def canonical_form(m: BinaryMatrix) -> BinaryMatrix:
    """Canonical representative of M under independent row/column permutations.

    Iterative colour refinement on the row/column incidence structure plus
    branching on ambiguous cells; the minimum relabelled matrix is canonical.
    Exponential in the worst case, meant for the small matrices handled here.
    """
    nr, nc = m.rows, m.cols
    row_adj = [tuple(j for j in range(nc) if (m.data[i] >> j) & 1) for i in range(nr)]
    col_adj = [tuple(i for i in range(nr) if (m.data[i] >> j) & 1) for j in range(nc)]

    def refine(colors: list[int]) -> list[int]:
        while True:
            sigs = []
            for v in range(nr + nc):
                adj = row_adj[v] if v < nr else col_adj[v - nr]
                shift = nr if v < nr else 0
                sigs.append((colors[v], tuple(sorted(colors[u + shift] for u in adj))))
            order = {s: i for i, s in enumerate(sorted(set(sigs)))}
            new = [order[s] for s in sigs]
            if new == colors:
                return colors
            colors = new

    best: tuple[int, ...] | None = None

    def emit(colors: list[int]) -> tuple[int, ...]:
        rows_sorted = sorted(range(nr), key=lambda i: colors[i])
        cols_sorted = sorted(range(nc), key=lambda j: colors[nr + j])
        col_pos = {c: p for p, c in enumerate(cols_sorted)}
        out = []
        for i in rows_sorted:
            bits = 0
            for j in row_adj[i]:
                bits |= 1 << col_pos[j]
            out.append(bits)
        return tuple(out)

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = refine(colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((vs for c, vs in sorted(cells.items()) if len(vs) > 1), None)
        if target is None:
            cand = emit(colors)
            if best is None or cand < best:
                best = cand
            return
        fresh = max(colors) + 1
        for v in target:
            child = list(colors)
            child[v] = fresh
            search(child)

    search([0] * nr + [1] * nc)
    assert best is not None
    return BinaryMatrix(best, nc)


def permutation_equivalent(a: BinaryMatrix, b: BinaryMatrix) -> bool:
    """True when A equals B after some row and column permutation."""
    if (a.rows, a.cols) != (b.rows, b.cols):
        return False
    if sorted(a.row_weights()) != sorted(b.row_weights()):
        return False
    return canonical_form(a) == canonical_form(b)


# ---------------------------------------------------------------------------
# polynomial matrices


class PolyMatrix:
    """Immutable matrix over GF(2)[D], entries stored as BinaryPoly."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Iterable[Iterable[BinaryPoly | int]]):
        grid = tuple(
            tuple(e if isinstance(e, BinaryPoly) else BinaryPoly(e) for e in row)
            for row in entries
        )
        if grid and any(len(r) != len(grid[0]) for r in grid):
            raise ValueError("ragged polynomial matrix")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", len(grid[0]) if grid else 0)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def from_bits(cls, grid: Sequence[Sequence[int]]) -> "PolyMatrix":
        return cls(grid)

    @classmethod
    def from_text(cls, text: str) -> "PolyMatrix":
        """Parse: first line "rows cols", then one coefficient string per entry."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        m, n = (int(x) for x in lines[0].split())
        if len(lines) - 1 != m * n:
            raise ValueError(f"expected {m * n} entries, got {len(lines) - 1}")
        polys = [BinaryPoly.parse(ln) for ln in lines[1:]]
        return cls([polys[i * n:(i + 1) * n] for i in range(m)])

    def to_text(self) -> str:
        out = [f"{self.rows} {self.cols}"]
        for row in self.entries:
            out.extend(p.to_string() for p in row)
        return "\n".join(out) + "\n"

    def bits(self) -> list[list[int]]:
        return [[p.bits for p in row] for row in self.entries]

    @property
    def memory(self) -> int:
        """Largest entry degree (0 for an all-zero matrix)."""
        degs = [p.degree for row in self.entries for p in row if p]
        return max(degs) if degs else 0

    def row_degrees(self) -> list[int | None]:
        out = []
        for row in self.entries:
            degs = [p.degree for p in row if p]
            out.append(max(degs) if degs else None)
        return out

    @property
    def constraint_length(self) -> int:
        """Sum over rows of the largest entry degree."""
        return sum(d or 0 for d in self.row_degrees())

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.bits(), other.bits()
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = 0
                for k in range(self.cols):
                    acc ^= clmul(a[i][k], b[k][j])
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def is_zero(self) -> bool:
        return all(not p for row in self.entries for p in row)

    def constant_matrix(self) -> BinaryMatrix:
        """Degree-0 matrix reinterpreted over GF(2); error if any entry has D."""
        if self.memory != 0:
            raise ValueError("matrix has entries of positive degree")
        return BinaryMatrix(
            (sum(((row[j].bits & 1) << j) for j in range(self.cols)) for row in self.entries),
            self.cols,
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols}, memory={self.memory})"


def tailbite(h: PolyMatrix, length: int) -> BinaryMatrix:
    """Block-circulant expansion of a parity-type polynomial matrix.

    The coefficient of D^t in entry (i, j) lands in block-row s, block-column
    (s + t) mod length, for every level s.  Levels shorter than the memory
    wrap around and accumulate (XOR) into the same block column.
    """
    if length < 1:
        raise ValueError("tailbite length must be at least 1")
    m, n = h.rows, h.cols
    grid = h.bits()
    out = []
    for s in range(length):
        for i in range(m):
            bits = 0
            for j in range(n):
                p = grid[i][j]
                t = 0
                while p:
                    if p & 1:
                        bits ^= 1 << (n * ((s + t) % length) + j)
                    p >>= 1
                    t += 1
            out.append(bits)
    return BinaryMatrix(out, n * length)


def tailbite_generator(g: PolyMatrix, length: int) -> BinaryMatrix:
    """Generator-side wrap: coefficient of D^t lands in block-column (s - t).

    Rows stay orthogonal to tailbite(H, length) whenever G H^T = 0 over
    GF(2)[D], which is the pairing used throughout.
    """
    if length < 1:
        raise ValueError("tailbite length must be at least 1")
    m, n = g.rows, g.cols
    grid = g.bits()
    out = []
    for s in range(length):
        for i in range(m):
            bits = 0
            for j in range(n):
                p = grid[i][j]
                t = 0
                while p:
                    if p & 1:
                        bits ^= 1 << (n * ((s - t) % length) + j)
                    p >>= 1
                    t += 1
            out.append(bits)
    return BinaryMatrix(out, n * length)


# ---------------------------------------------------------------------------
# rational-field elimination


def rank_over_rational_field(m: PolyMatrix) -> int:
    """Rank of M over GF(2)(D) via fraction-free cross-multiplication."""
    work = [row[:] for row in m.bits()]
    nrows, ncols = m.rows, m.cols
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pv = work[r][col]
        for i in range(r + 1, nrows):
            if work[i][col]:
                f = work[i][col]
                work[i] = [clmul(a, pv) ^ clmul(b, f) for a, b in zip(work[i], work[r])]
                g = 0
                for a in work[i]:
                    g = _gcd(g, a)
                    if g == 1:
                        break
                if g > 1:
                    work[i] = [_divmod(a, g)[0] for a in work[i]]
        r += 1
    return r


class _Frac:
    """Tiny exact fraction of GF(2)[D] polynomials for back substitution."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            raise ZeroDivisionError
        g = _gcd(num, den) if num else den
        self.num = _divmod(num, g)[0] if num else 0
        self.den = _divmod(den, g)[0] if num else 1

    def __add__(self, o: "_Frac") -> "_Frac":
        return _Frac(clmul(self.num, o.den) ^ clmul(o.num, self.den),
                     clmul(self.den, o.den))

    def __mul__(self, o: "_Frac") -> "_Frac":
        return _Frac(clmul(self.num, o.num), clmul(self.den, o.den))

    def __truediv__(self, o: "_Frac") -> "_Frac":
        if o.num == 0:
            raise ZeroDivisionError
        return _Frac(clmul(self.num, o.den), clmul(self.den, o.num))

    def __bool__(self) -> bool:
        return self.num != 0


def nullspace_rational(m: PolyMatrix) -> PolyMatrix:
    """Polynomial basis rows of the GF(2)(D) nullspace {v : M v^T = 0}.

    Each returned row is a rational-nullspace vector with denominators
    cleared and the common polynomial content divided out.
    """
    nrows, ncols = m.rows, m.cols
    work = [[_Frac(b) for b in row] for row in m.bits()]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pv = work[r][col]
        work[r] = [e / pv for e in work[r]]
        for i in range(nrows):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [a + f * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        entries = [_Frac(0)] * ncols
        entries[free] = _Frac(1)
        for i, pc in enumerate(pivots):
            entries[pc] = work[i][free]
        den = 1
        for e in entries:
            if e.num:
                den = _divmod(clmul(den, e.den), _gcd(den, e.den))[0]
        row = [clmul(e.num, _divmod(den, e.den)[0]) for e in entries]
        content = 0
        for a in row:
            content = _gcd(content, a)
        if content > 1:
            row = [_divmod(a, content)[0] for a in row]
        basis.append(row)
    return PolyMatrix(basis)


def kernel_basis(h: PolyMatrix) -> PolyMatrix:
    """Module basis of {v in GF(2)[D]^cols : H v^T = 0}.

    Works on the stacked matrix [H^T | I] with unimodular row operations
    (Euclidean reduction per pivot column); rows whose left part vanishes
    form a basis of the kernel as a GF(2)[D] module.
    """
    m, n = h.rows, h.cols
    grid = h.bits()
    work = []
    for i in range(n):
        left = [grid[r][i] for r in range(m)]
        right = [0] * n
        right[i] = 1
        work.append(left + right)
    pivot_row = 0
    width = m + n
    for col in range(m):
        while True:
            live = [r for r in range(pivot_row, n) if work[r][col]]
            if not live:
                break
            if len(live) == 1:
                r = live[0]
                work[pivot_row], work[r] = work[r], work[pivot_row]
                pivot_row += 1
                break
            live.sort(key=lambda r: _deg(work[r][col]))
            base = live[0]
            for r in live[1:]:
                q, _ = _divmod(work[r][col], work[base][col])
                while q:
                    lsb = q & -q
                    sh = lsb.bit_length() - 1
                    q ^= lsb
                    wr, wb = work[r], work[base]
                    for cc in range(width):
                        wr[cc] ^= wb[cc] << sh
    rows = [work[r][m:] for r in range(n) if not any(work[r][:m])]
    return PolyMatrix(rows) if rows else PolyMatrix([])


def high_order_matrix(g: PolyMatrix) -> BinaryMatrix:
    """Row i holds the coefficients of D^(row degree i) across the columns."""
    out = []
    for row, d in zip(g.entries, g.row_degrees()):
        if d is None:
            raise ValueError("zero row has no high-order coefficients")
        bits = 0
        for j, p in enumerate(row):
            bits |= ((p.bits >> d) & 1) << j
        out.append(bits)
    return BinaryMatrix(out, g.cols)


def row_reduce(g: PolyMatrix) -> PolyMatrix:
    """Greedy high-order reduction preserving the GF(2)[D] row module.

    While the high-order coefficient matrix is rank deficient, the dependent
    row of largest degree is replaced by the D-shifted combination that
    cancels its leading coefficients.  Fixed point: high-order matrix has
    full row rank.
    """
    rows = [list(r) for r in (g.bits())]
    ncols = g.cols

    def rdeg(row: list[int]) -> int:
        d = -1
        for p in row:
            if p:
                d = max(d, _deg(p))
        return d

    while True:
        degs = [rdeg(r) for r in rows]
        if any(d < 0 for d in degs):
            raise ValueError("rank-deficient input: zero row produced")
        hi = []
        for row, d in zip(rows, degs):
            bits = 0
            for j, p in enumerate(row):
                bits |= ((p >> d) & 1) << j
            hi.append(bits)
        combo = _dependency(hi)
        if combo is None:
            return PolyMatrix(rows)
        members = [i for i in range(len(rows)) if (combo >> i) & 1]
        dmax = max(degs[i] for i in members)
        target = max(i for i in members if degs[i] == dmax)
        new = [0] * ncols
        for i in members:
            sh = dmax - degs[i]
            for j in range(ncols):
                new[j] ^= rows[i][j] << sh
        rows[target] = new


def _dependency(vecs: list[int]) -> int | None:
    """Nonzero combination (bitmask over rows) that XORs to zero, or None."""
    basis: list[tuple[int, int]] = []
    for i, v in enumerate(vecs):
        combo = 1 << i
        for bv, bc in basis:
            if v & (bv & -bv):
                v ^= bv
                combo ^= bc
        if v == 0:
            return combo
        basis.append((v, combo))
    return None


def minimal_basic(g: PolyMatrix) -> PolyMatrix:
    """Minimal-basic generator matrix of the rational row space of G.

    The row module is first saturated (replaced by every polynomial vector
    of the GF(2)(D) row space) via a kernel-basis computation, then reduced
    until the high-order coefficient matrix has full rank.  The overall
    constraint length of the result never exceeds that of the input.
    """
    if g.rows == 0:
        return g
    if rank_over_rational_field(g) != g.rows:
        raise ValueError("generator matrix is rank deficient over GF(2)(D)")
    checks = nullspace_rational(g)
    if checks.rows == 0:
        return PolyMatrix([[1 if i == j else 0 for j in range(g.cols)]
                           for i in range(g.rows)])
    basis = kernel_basis(checks)
    if basis.rows != g.rows:
        raise AssertionError("saturated kernel has unexpected rank")
    return row_reduce(basis)


def poly_row_space_equal(a: PolyMatrix, b: PolyMatrix) -> bool:
    """Equality of GF(2)(D) row spaces, certified by stacked-rank checks."""
    if a.cols != b.cols:
        return False
    ra = rank_over_rational_field(a)
    rb = rank_over_rational_field(b)
    if ra != rb:
        return False
    stacked = PolyMatrix(list(a.entries) + list(b.entries))
    return rank_over_rational_field(stacked) == ra


# ---------------------------------------------------------------------------
# bivariate polynomials (second formal variable wraps over a ring of levels)


class BivariatePoly:
    """Finite sum of terms p(D) * Z^k, stored as {k: bits(p)}."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        cleaned = {k: v for k, v in (terms or {}).items() if v}
        object.__setattr__(self, "terms", dict(sorted(cleaned.items())))

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePoly is immutable")

    @classmethod
    def mono(cls, poly: BinaryPoly | int, z: int = 0) -> "BivariatePoly":
        bits = poly.bits if isinstance(poly, BinaryPoly) else poly
        return cls({z: bits})

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) ^ v
        return BivariatePoly(out)

    def __mul__(self, other: "BivariatePoly") -> "BivariatePoly":
        out: dict[int, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) ^ clmul(v1, v2)
        return BivariatePoly(out)

    def reduce_z(self, length: int) -> "BivariatePoly":
        """Reduce modulo Z^length - 1."""
        out: dict[int, int] = {}
        for k, v in self.terms.items():
            kk = k % length
            out[kk] = out.get(kk, 0) ^ v
        return BivariatePoly(out)

    def subs_z_one(self) -> BinaryPoly:
        acc = 0
        for v in self.terms.values():
            acc ^= v
        return BinaryPoly(acc)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BivariatePoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for k, v in self.terms.items():
            p = BinaryPoly(v).to_string()
            bits.append(f"({p})Z^{k}" if k else f"({p})")
        return " + ".join(bits)


class BivariatePolyMatrix:
    """Matrix with BivariatePoly entries."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Iterable[Iterable[BivariatePoly]]):
        grid = tuple(tuple(row) for row in entries)
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", len(grid[0]) if grid else 0)

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePolyMatrix is immutable")

    def __matmul__(self, other: "BivariatePolyMatrix") -> "BivariatePolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = BivariatePoly()
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return BivariatePolyMatrix(out)

    def transpose(self) -> "BivariatePolyMatrix":
        return BivariatePolyMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def reduce_z(self, length: int) -> "BivariatePolyMatrix":
        return BivariatePolyMatrix(
            [[e.reduce_z(length) for e in row] for row in self.entries]
        )

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def subs_z_one(self) -> PolyMatrix:
        return PolyMatrix([[e.subs_z_one() for e in row] for row in self.entries])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BivariatePolyMatrix) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"BivariatePolyMatrix({self.rows}x{self.cols})"
