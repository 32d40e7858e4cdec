"""Exact cellular cohomology over Z and Z/r via Smith normal form.

Everything here is dense arbitrary-precision integer linear algebra: matrices
are rows of Python ints, Smith decompositions carry their unimodular change
of basis matrices together with explicit inverses, and cohomology groups come
with generating cochains so the connecting map of the coefficient sequence
Z -> Z -> Z/r can be evaluated on actual classes.

Conventions: the coboundary in degree k is the transpose of the boundary in
degree k+1, and cohomology generators live in the basis supplied by the V
matrix of the relevant Smith decomposition.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

from .stable_tables import FinAbGroup

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "smith_normal_form",
    "ChainComplex",
    "ComplexFormatError",
    "CohomologyGroup",
    "cohomology_Z",
    "cohomology_generators_Z",
    "cohomology_mod",
    "BocksteinMap",
    "bockstein",
    "bockstein_of_cocycle",
    "chain_complex_to_json",
    "chain_complex_from_json",
    "load_chain_complex",
    "bzr_skeleton_complex",
    "sphere_complex",
    "rp_complex",
]


class ComplexFormatError(ValueError):
    """Raised by chain-complex validation and the JSON loader."""


class IntMatrix:
    """Dense integer matrix; either dimension may be zero."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        if rows < 0 or cols < 0:
            raise ValueError(f"matrix dimensions must be >= 0, got {rows} x {cols}")
        if data is None:
            data = [[0] * cols for _ in range(rows)]
        else:
            data = [list(row) for row in data]
            if len(data) != rows or any(len(row) != cols for row in data):
                raise ValueError(f"data does not have shape {rows} x {cols}")
            for row in data:
                for x in row:
                    if not isinstance(x, int) or isinstance(x, bool):
                        raise ValueError(f"matrix entries must be integers, got {x!r}")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        m = cls(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def from_rows(cls, rows_list) -> "IntMatrix":
        rows_list = [list(r) for r in rows_list]
        cols = len(rows_list[0]) if rows_list else 0
        return cls(len(rows_list), cols, rows_list)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, self.data)

    def transpose(self) -> "IntMatrix":
        data = [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return IntMatrix(self.cols, self.rows, data)

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.data]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = IntMatrix(self.rows, other.cols)
        bt = list(zip(*other.data)) if other.rows and other.cols else []
        for i, row in enumerate(self.data):
            out_row = out.data[i]
            for j, col in enumerate(bt):
                out_row[j] = sum(a * b for a, b in zip(row, col))
        return out

    def apply(self, vec) -> list[int]:
        """Matrix-vector product."""
        vec = list(vec)
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} does not match {self.shape}")
        return [sum(a * b for a, b in zip(row, vec)) for row in self.data]

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [row[:] for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def to_lists(self) -> list[list[int]]:
        return [row[:] for row in self.data]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.shape == other.shape
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}, {self.cols}, {self.data!r})"


def _hconcat(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.rows != b.rows:
        raise ValueError("row mismatch in horizontal concatenation")
    return IntMatrix(a.rows, a.cols + b.cols, [ra + rb for ra, rb in zip(a.data, b.data)])


def _scaled_identity(n: int, c: int) -> IntMatrix:
    m = IntMatrix(n, n)
    for i in range(n):
        m.data[i][i] = c
    return m


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == D with U, V unimodular and D diagonal, nonnegative, zeros
    trailing, and d_1 | d_2 | ... along the diagonal.

    u_inv and v_inv are maintained alongside U and V during the reduction so
    consumers can change basis in both directions without re-inverting.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix
    rank: int

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D.data[i][i] for i in range(min(self.D.rows, self.D.cols)))

    def verify(self, a: IntMatrix) -> None:
        """Re-check every invariant against the source matrix; raises on failure."""
        if self.U @ a @ self.V != self.D:
            raise RuntimeError("Smith decomposition failed: U A V != D")
        if self.U @ self.u_inv != IntMatrix.identity(self.U.rows):
            raise RuntimeError("Smith decomposition failed: U inverse witness")
        if self.V @ self.v_inv != IntMatrix.identity(self.V.rows):
            raise RuntimeError("Smith decomposition failed: V inverse witness")
        diag = self.diagonal()
        for i, d in enumerate(diag):
            if d < 0:
                raise RuntimeError("Smith decomposition failed: negative diagonal")
            if i and diag[i - 1] == 0 and d != 0:
                raise RuntimeError("Smith decomposition failed: zeros must trail")
            if i and diag[i - 1] != 0 and d % diag[i - 1] != 0:
                raise RuntimeError("Smith decomposition failed: divisibility chain")
        for i in range(self.D.rows):
            for j in range(self.D.cols):
                if i != j and self.D.data[i][j] != 0:
                    raise RuntimeError("Smith decomposition failed: D not diagonal")
        if self.rank != sum(1 for d in diag if d):
            raise RuntimeError("Smith decomposition failed: rank mismatch")


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Pivoting always selects a minimal-absolute-value nonzero entry of the
    remaining block and reduces its row and column by floor division, so every
    round either clears the cross or strictly shrinks the pivot; a final fold
    guarantees the pivot divides the remaining block before advancing, which
    makes the divisibility chain automatic.  Entries are arbitrary-precision,
    so coefficient growth only ever costs time, never correctness.  The
    decomposition is re-verified by multiplication before being returned.
    """
    m, n = a.rows, a.cols
    s = [row[:] for row in a.data]
    u = IntMatrix.identity(m).data
    ui = IntMatrix.identity(m).data
    v = IntMatrix.identity(n).data
    vi = IntMatrix.identity(n).data

    def row_swap(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]
        for row in ui:
            row[i], row[j] = row[j], row[i]

    def col_swap(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vi[i], vi[j] = vi[j], vi[i]

    def row_negate(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]
        for row in ui:
            row[i] = -row[i]

    def row_addmul(dst, src, c):
        # row_dst += c * row_src on S and U; the inverse op acts on ui columns
        s[dst] = [x + c * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]
        for row in ui:
            row[src] -= c * row[dst]

    def col_addmul(dst, src, c):
        for row in s:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]
        vi[src] = [x - c * y for x, y in zip(vi[src], vi[dst])]

    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = s[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        if s[t][t] < 0:
            row_negate(t)
        pivot = s[t][t]
        dirty = False
        for i in range(t + 1, m):
            if s[i][t]:
                q = s[i][t] // pivot
                if q:
                    row_addmul(i, t, -q)
                if s[i][t]:
                    dirty = True
        if dirty:
            continue
        for j in range(t + 1, n):
            if s[t][j]:
                q = s[t][j] // pivot
                if q:
                    col_addmul(j, t, -q)
                if s[t][j]:
                    dirty = True
        if dirty:
            continue
        offender = None
        for i in range(t + 1, m):
            if any(s[i][j] % pivot for j in range(t + 1, n)):
                offender = i
                break
        if offender is not None:
            row_addmul(t, offender, 1)
            continue
        t += 1

    decomposition = SmithDecomposition(
        U=IntMatrix(m, m, u),
        D=IntMatrix(m, n, s),
        V=IntMatrix(n, n, v),
        u_inv=IntMatrix(m, m, ui),
        v_inv=IntMatrix(n, n, vi),
        rank=t,
    )
    decomposition.verify(a)
    return decomposition


class ChainComplex:
    """A finite complex of free Z-modules with validated boundary maps.

    boundaries[k-1] is the degree-k boundary, a cell_counts[k-1] by
    cell_counts[k] matrix; consecutive boundaries must compose to zero.
    """

    __slots__ = ("name", "cell_counts", "boundaries")

    def __init__(self, cell_counts, boundaries, name: str = ""):
        cell_counts = tuple(int(c) for c in cell_counts)
        boundaries = tuple(boundaries)
        if not cell_counts:
            raise ComplexFormatError("cell_counts must be nonempty")
        if any(c < 0 for c in cell_counts):
            raise ComplexFormatError(f"cell counts must be >= 0, got {cell_counts}")
        if len(boundaries) != len(cell_counts) - 1:
            raise ComplexFormatError(
                f"expected {len(cell_counts) - 1} boundary matrices, got {len(boundaries)}"
            )
        for k, b in enumerate(boundaries, start=1):
            if not isinstance(b, IntMatrix):
                raise ComplexFormatError(f"boundary {k} is not an IntMatrix")
            if b.shape != (cell_counts[k - 1], cell_counts[k]):
                raise ComplexFormatError(
                    f"boundary {k} has shape {b.shape}, expected "
                    f"({cell_counts[k - 1]}, {cell_counts[k]})"
                )
        for k in range(1, len(boundaries)):
            product = boundaries[k - 1] @ boundaries[k]
            for i, row in enumerate(product.data):
                for j, x in enumerate(row):
                    if x != 0:
                        raise ComplexFormatError(
                            f"boundary composition is nonzero at k={k}, row={i}, col={j}"
                        )
        self.name = name
        self.cell_counts = cell_counts
        self.boundaries = boundaries

    @property
    def top_dim(self) -> int:
        return len(self.cell_counts) - 1

    def boundary(self, k: int) -> IntMatrix:
        if not 1 <= k <= self.top_dim:
            raise ValueError(f"boundary degree {k} out of range 1..{self.top_dim}")
        return self.boundaries[k - 1]

    def coboundary(self, k: int) -> IntMatrix:
        """The degree-k coboundary: transpose of the degree-(k+1) boundary,
        the zero map out of the top degree."""
        if not 0 <= k <= self.top_dim:
            raise ValueError(f"degree {k} out of range 0..{self.top_dim}")
        if k == self.top_dim:
            return IntMatrix(0, self.cell_counts[k])
        return self.boundaries[k].transpose()

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.cell_counts))

    def __repr__(self) -> str:
        return f"ChainComplex(name={self.name!r}, cell_counts={self.cell_counts})"


@dataclass(frozen=True)
class CohomologyGroup:
    """A cohomology group in one degree: free rank plus torsion invariant
    factors forming a divisibility chain."""

    degree: int
    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")
        object.__setattr__(self, "torsion", tuple(self.torsion))
        # reuse the chain/positivity validation
        FinAbGroup(self.free_rank, self.torsion)

    def group(self) -> FinAbGroup:
        return FinAbGroup(self.free_rank, self.torsion)

    def __str__(self) -> str:
        return str(self.group())


def _check_degree(c: ChainComplex, k: int) -> None:
    if not 0 <= k <= c.top_dim:
        raise ValueError(f"degree {k} out of range 0..{c.top_dim}")


class _IntegralClasses:
    """Integral cohomology in one degree with explicit generator cochains.

    Kernel coordinates come from the V basis of the coboundary's Smith
    decomposition; quotient coordinates from the U basis of the Smith
    decomposition of the incoming image written in kernel coordinates.
    """

    def __init__(self, c: ChainComplex, k: int):
        _check_degree(c, k)
        n_k = c.cell_counts[k]
        snf_out = smith_normal_form(c.coboundary(k))
        rank = snf_out.rank
        dim_ker = n_k - rank
        kernel_basis = IntMatrix(n_k, dim_ker, [row[rank:] for row in snf_out.V.data])
        incoming = c.coboundary(k - 1) if k > 0 else IntMatrix(n_k, 0)
        w = snf_out.v_inv @ incoming
        for i in range(rank):
            if any(w.data[i]):
                raise RuntimeError("incoming image escapes the kernel; complex is invalid")
        image_in_kernel = IntMatrix(dim_ker, incoming.cols, w.data[rank:])
        snf_q = smith_normal_form(image_in_kernel)
        orders = [
            snf_q.D.data[i][i] if i < snf_q.rank else 0 for i in range(dim_ker)
        ]
        self.degree = k
        self._rank = rank
        self._v_inv = snf_out.v_inv
        self._kernel_basis = kernel_basis
        self._uq = snf_q.U
        self._uq_inv = snf_q.u_inv
        self._orders = orders
        self.group = CohomologyGroup(
            degree=k,
            free_rank=sum(1 for d in orders if d == 0),
            torsion=tuple(d for d in orders if d > 1),
        )

    def class_coordinates(self, cochain) -> tuple[int, ...]:
        """Coordinates of an integer cocycle in the generator basis: torsion
        coordinates reduced modulo their orders, then free coordinates."""
        full = self._v_inv.apply(cochain)
        if any(full[: self._rank]):
            raise ValueError("cochain is not a cocycle")
        quotient = self._uq.apply(full[self._rank :])
        coords = []
        for b, d in zip(quotient, self._orders):
            if d == 1:
                continue
            coords.append(b % d if d > 1 else b)
        return tuple(coords)

    def generators(self) -> list[tuple[list[int], int]]:
        """(cochain, order) pairs for the generators; order 0 means free."""
        out = []
        for i, d in enumerate(self._orders):
            if d == 1:
                continue
            out.append((self._kernel_basis.apply(self._uq_inv.column(i)), d))
        return out


class _ModClasses:
    """Mod-r cohomology in one degree, computed at the cochain level.

    A mod-r cocycle lifts to an integer cochain x with delta(x) divisible by
    r; those lifts form a lattice L spanned by suitably rescaled V columns of
    the coboundary's Smith decomposition, and the group is L modulo integral
    coboundaries and r times everything.
    """

    def __init__(self, c: ChainComplex, k: int, r: int):
        _check_degree(c, k)
        if r < 2:
            raise ValueError(f"modulus must be >= 2, got {r}")
        n_k = c.cell_counts[k]
        snf_out = smith_normal_form(c.coboundary(k))
        rank = snf_out.rank
        scales = [
            r // math.gcd(snf_out.D.data[i][i], r) if i < rank else 1 for i in range(n_k)
        ]
        lattice_basis = IntMatrix(
            n_k, n_k, [[x * scales[j] for j, x in enumerate(row)] for row in snf_out.V.data]
        )
        incoming = c.coboundary(k - 1) if k > 0 else IntMatrix(n_k, 0)
        sub_gens = _hconcat(incoming, _scaled_identity(n_k, r))
        w = snf_out.v_inv @ sub_gens
        x_rows = []
        for i, row in enumerate(w.data):
            if any(val % scales[i] for val in row):
                raise RuntimeError("sublattice escapes the mod-r cocycle lattice")
            x_rows.append([val // scales[i] for val in row])
        rel = IntMatrix(n_k, sub_gens.cols, x_rows)
        snf_q = smith_normal_form(rel)
        if snf_q.rank != n_k:
            raise RuntimeError("mod-r cohomology in one degree must be finite")
        orders = [snf_q.D.data[i][i] for i in range(n_k)]
        if any(r % d for d in orders):
            raise RuntimeError("mod-r cohomology must be annihilated by r")
        self.degree = k
        self.modulus = r
        self._rank = rank
        self._v_inv = snf_out.v_inv
        self._scales = scales
        self._lattice_basis = lattice_basis
        self._uq = snf_q.U
        self._uq_inv = snf_q.u_inv
        self._orders = orders
        self.group = CohomologyGroup(
            degree=k, free_rank=0, torsion=tuple(d for d in orders if d > 1)
        )

    def class_coordinates(self, cochain) -> tuple[int, ...]:
        full = self._v_inv.apply(cochain)
        lattice_coords = []
        for a, scale in zip(full, self._scales):
            if a % scale:
                raise ValueError("cochain is not a cocycle mod r")
            lattice_coords.append(a // scale)
        quotient = self._uq.apply(lattice_coords)
        return tuple(b % d for b, d in zip(quotient, self._orders) if d > 1)

    def generators(self) -> list[tuple[list[int], int]]:
        out = []
        for i, d in enumerate(self._orders):
            if d > 1:
                out.append((self._lattice_basis.apply(self._uq_inv.column(i)), d))
        return out


def cohomology_Z(c: ChainComplex, k: int) -> CohomologyGroup:
    """Integral cohomology of the dual cochain complex in degree k."""
    return _IntegralClasses(c, k).group


def cohomology_generators_Z(c: ChainComplex, k: int) -> list[tuple[list[int], int]]:
    """Generator cochains for the degree-k integral cohomology, as
    (cochain, order) pairs with order 0 for free generators."""
    return _IntegralClasses(c, k).generators()


def cohomology_mod(c: ChainComplex, k: int, r: int) -> CohomologyGroup:
    """Cohomology of the mod-r reduction of the cochain complex in degree k,
    reported as the underlying abelian group."""
    return _ModClasses(c, k, r).group


@dataclass(frozen=True)
class BocksteinMap:
    """The connecting map from degree-k mod-r cohomology to degree-(k+1)
    integral cohomology, as an integer matrix on the chosen generators.

    Rows are indexed by the target generators (torsion first, order in
    target_orders, 0 meaning free), columns by the source generators.
    """

    degree: int
    modulus: int
    source: CohomologyGroup
    target: CohomologyGroup
    matrix: IntMatrix
    source_orders: tuple[int, ...]
    target_orders: tuple[int, ...]

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_isomorphism(self) -> bool:
        """Brute-force bijectivity check; both groups must be finite."""
        if self.source.free_rank or self.target.free_rank:
            return False
        source_order = math.prod(self.source_orders) if self.source_orders else 1
        target_order = math.prod(self.target_orders) if self.target_orders else 1
        if source_order != target_order:
            return False
        if source_order > 10_000:
            raise ValueError("isomorphism check only supported for small groups")
        seen = set()
        for element in itertools.product(*(range(o) for o in self.source_orders)):
            image = tuple(
                sum(m * x for m, x in zip(row, element)) % d
                for row, d in zip(self.matrix.data, self.target_orders)
            )
            seen.add(image)
        return len(seen) == target_order


def _divide_cochain(vec: list[int], r: int) -> list[int]:
    if any(x % r for x in vec):
        raise ValueError("cochain is not a cocycle mod r")
    return [x // r for x in vec]


def bockstein_of_cocycle(c: ChainComplex, k: int, r: int, cochain) -> tuple[int, ...]:
    """Connecting-map image of one mod-r cocycle (given as an integer lift):
    apply the coboundary, divide by r, read off coordinates in the degree
    k+1 integral generators."""
    if not 0 <= k < c.top_dim:
        raise ValueError(f"degree {k} out of range 0..{c.top_dim - 1}")
    if r < 2:
        raise ValueError(f"modulus must be >= 2, got {r}")
    lifted = _divide_cochain(c.coboundary(k).apply(cochain), r)
    return _IntegralClasses(c, k + 1).class_coordinates(lifted)


def bockstein(c: ChainComplex, k: int, r: int) -> BocksteinMap:
    """The connecting map on degree-k mod-r cohomology.

    Every generator is lifted to an integer cochain, pushed through the
    coboundary, divided by r, and located in the integral cohomology one
    degree up.  Well-definedness is re-checked against representative
    perturbations (adding r times a cochain, adding an integral coboundary),
    and the image is confirmed to avoid the free part of the target.
    """
    if not 0 <= k < c.top_dim:
        raise ValueError(f"degree {k} out of range 0..{c.top_dim - 1}")
    source = _ModClasses(c, k, r)
    target = _IntegralClasses(c, k + 1)
    delta = c.coboundary(k)
    incoming = c.coboundary(k - 1) if k > 0 else IntMatrix(c.cell_counts[k], 0)

    def image_coords(x):
        return target.class_coordinates(_divide_cochain(delta.apply(x), r))

    columns = []
    source_orders = []
    for x, order in source.generators():
        coords = image_coords(x)
        if any(coords[len(target.group.torsion) :]):
            raise RuntimeError("connecting map image must be torsion")
        if c.cell_counts[k]:
            shifted = x[:]
            shifted[0] += r
            if image_coords(shifted) != coords:
                raise RuntimeError("connecting map is not well defined on classes")
        if incoming.cols:
            basis_vec = [0] * incoming.cols
            basis_vec[0] = 1
            shifted = [a + b for a, b in zip(x, incoming.apply(basis_vec))]
            if image_coords(shifted) != coords:
                raise RuntimeError("connecting map is not well defined on classes")
        columns.append(coords)
        source_orders.append(order)

    target_orders = tuple(target.group.torsion) + (0,) * target.group.free_rank
    matrix = IntMatrix(
        len(target_orders),
        len(columns),
        [[col[i] for col in columns] for i in range(len(target_orders))],
    )
    return BocksteinMap(
        degree=k,
        modulus=r,
        source=source.group,
        target=target.group,
        matrix=matrix,
        source_orders=tuple(source_orders),
        target_orders=target_orders,
    )


# --- JSON interchange -------------------------------------------------------

def chain_complex_to_json(c: ChainComplex) -> dict:
    """Serialize to the interchange format: boundaries are flat row-major
    integer arrays, empty when either dimension is zero."""
    return {
        "name": c.name,
        "cell_counts": list(c.cell_counts),
        "boundaries": [
            [x for row in b.data for x in row] for b in c.boundaries
        ],
    }


def chain_complex_from_json(obj) -> ChainComplex:
    """Parse and fully validate the interchange format.

    Dimension mismatches and nonzero boundary compositions are rejected with
    the offending position.
    """
    if not isinstance(obj, dict):
        raise ComplexFormatError("chain complex document must be a JSON object")
    for key in ("cell_counts", "boundaries"):
        if key not in obj:
            raise ComplexFormatError(f"missing key {key!r}")
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise ComplexFormatError("name must be a string")
    counts = obj["cell_counts"]
    if (
        not isinstance(counts, list)
        or not counts
        or any(not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in counts)
    ):
        raise ComplexFormatError("cell_counts must be a nonempty list of integers >= 0")
    flats = obj["boundaries"]
    if not isinstance(flats, list) or len(flats) != len(counts) - 1:
        raise ComplexFormatError(
            f"expected {len(counts) - 1} boundary arrays, got "
            f"{len(flats) if isinstance(flats, list) else type(flats).__name__}"
        )
    boundaries = []
    for k, flat in enumerate(flats, start=1):
        rows, cols = counts[k - 1], counts[k]
        if not isinstance(flat, list) or any(
            not isinstance(x, int) or isinstance(x, bool) for x in flat
        ):
            raise ComplexFormatError(f"boundary {k} must be a flat list of integers")
        if len(flat) != rows * cols:
            raise ComplexFormatError(
                f"boundary {k} has {len(flat)} entries, expected {rows}*{cols}"
            )
        data = [flat[i * cols : (i + 1) * cols] for i in range(rows)]
        boundaries.append(IntMatrix(rows, cols, data))
    return ChainComplex(counts, boundaries, name=name)


def load_chain_complex(path) -> ChainComplex:
    with open(path, encoding="utf-8") as fh:
        return chain_complex_from_json(json.load(fh))


# --- Fixture complexes ------------------------------------------------------

def bzr_skeleton_complex(r: int, top_dim: int, name: str | None = None) -> ChainComplex:
    """One cell per dimension with boundaries alternating 0, *r (the standard
    lens-type model of a skeleton of B Z/r shifted up a degree): integrally,
    cohomology is Z in degree 0, Z/r in positive even degrees, and zero in odd
    degrees below the top.  The top degree itself is distorted by truncation."""
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if top_dim < 1:
        raise ValueError(f"top_dim must be >= 1, got {top_dim}")
    boundaries = [
        IntMatrix(1, 1, [[r if k % 2 == 0 else 0]]) for k in range(1, top_dim + 1)
    ]
    return ChainComplex(
        (1,) * (top_dim + 1), boundaries, name=name or f"bzr-{r}-skeleton-{top_dim}"
    )


def sphere_complex(n: int) -> ChainComplex:
    """Minimal CW sphere: one 0-cell, one n-cell, all boundaries zero."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    counts = [1] + [0] * (n - 1) + [1]
    boundaries = [IntMatrix(counts[k - 1], counts[k]) for k in range(1, n + 1)]
    return ChainComplex(counts, boundaries, name=f"sphere-{n}")


def rp_complex(n: int) -> ChainComplex:
    """Real projective space with one cell per dimension: boundaries alternate
    0, *2 starting with the zero map in degree 1."""
    return bzr_skeleton_complex(2, n, name=f"rp-{n}")
