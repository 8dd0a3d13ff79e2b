"""Weight filtrations of nilpotent endomorphisms, over exact rationals.

Given a nilpotent N acting on a finite-dimensional rational vector space,
the weight filtration centered at 0 is the unique increasing filtration W
with N(W_k) contained in W_{k-2} such that N^k induces isomorphisms
gr_k -> gr_{-k}.  This module computes it by exact row reduction, extracts
Jordan block sizes from rank sequences, and, for a quasi-unipotent
automorphism h, computes the level polynomials Delta^[k]: the
characteristic polynomial of h acting on the k-th primitive subquotient,
whose degree is the number of Jordan blocks of size k+1 and whose roots
are those blocks' eigenvalues.

All matrices are tuples of tuples of Fraction; all arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycloDivisor, CycloProduct, _phi, expand
from .errors import InputError, InternalError

# ---------------------------------------------------------------------------
# exact matrices
# ---------------------------------------------------------------------------


def mat(rows) -> tuple:
    """Normalize to an immutable square matrix of Fractions.

    Accepts ints, Fractions, or "p/q" strings as entries.
    """
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    n = len(out)
    for row in out:
        if len(row) != n:
            raise InputError(f"matrix must be square, got row of length {len(row)} in {n} rows")
    return out


def mat_identity(n: int) -> tuple:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def mat_mul(a: tuple, b: tuple) -> tuple:
    n = len(a)
    bt = tuple(zip(*b)) if n else ()
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_sub(a: tuple, b: tuple) -> tuple:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_pow(a: tuple, e: int) -> tuple:
    n = len(a)
    result = mat_identity(n)
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


def mat_vec(a: tuple, v: tuple) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def rref(rows) -> tuple:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(work)):
            if work[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        inv = work[rank][col]
        work[rank] = [x / inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[rank])]
        pivots.append(col)
        rank += 1
    return tuple(tuple(r) for r in work[:rank]), tuple(pivots)


def span(rows) -> tuple:
    """Canonical (echelon) basis of the row span."""
    return rref(rows)[0]


def mat_rank(a: tuple) -> int:
    return len(span(a))


def kernel(a: tuple) -> tuple:
    """Canonical basis of the right null space {v : a v = 0}.

    Works for rectangular matrices; vectors have length = column count.
    """
    if not a:
        return ()
    ncols = len(a[0])
    basis_rows, pivots = rref(a)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    out = []
    for j in free:
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for row, p in zip(basis_rows, pivots):
            v[p] = -row[j]
        out.append(tuple(v))
    return span(out)


def image(a: tuple) -> tuple:
    """Canonical basis of the column space, as row vectors."""
    return span(tuple(zip(*a))) if a else ()


def subspace_sum(*spaces) -> tuple:
    rows = [r for s in spaces for r in s]
    return span(rows)


def subspace_intersect(u: tuple, v: tuple) -> tuple:
    """Intersection of two row spans."""
    if not u or not v:
        return ()
    stacked = tuple(u) + tuple(v)
    # (a, b) with a*u + b*v = 0  <=>  (a, b) in the left null space of the
    # stacked matrix; then a*u runs over the intersection.
    left_null = kernel(tuple(zip(*stacked)))
    out = []
    nu = len(u)
    dim = len(u[0])
    for coeffs in left_null:
        w = [Fraction(0)] * dim
        for c, row in zip(coeffs[:nu], u):
            for i, x in enumerate(row):
                w[i] += c * x
        out.append(tuple(w))
    return span(out)


def in_span(v: tuple, basis: tuple) -> bool:
    if all(x == 0 for x in v):
        return True
    if not basis:
        return False
    echelon, pivots = rref(basis)
    reduced = list(v)
    for row, p in zip(echelon, pivots):
        if reduced[p] != 0:
            factor = reduced[p]
            reduced = [x - factor * y for x, y in zip(reduced, row)]
    return all(x == 0 for x in reduced)


def solve_coordinates(basis: tuple, v: tuple):
    """Coordinates of v in the given (independent) basis rows, or None."""
    if not basis:
        return () if all(x == 0 for x in v) else None
    n = len(v)
    k = len(basis)
    # Solve the n x k system (basis^T) x = v by elimination on an
    # augmented matrix.
    aug = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    rank = 0
    pivot_cols = []
    for col in range(k):
        pivot_row = None
        for r in range(rank, n):
            if aug[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        aug[rank], aug[pivot_row] = aug[pivot_row], aug[rank]
        inv = aug[rank][col]
        aug[rank] = [x / inv for x in aug[rank]]
        for r in range(n):
            if r != rank and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[rank])]
        pivot_cols.append(col)
        rank += 1
    for r in range(rank, n):
        if aug[r][k] != 0:
            return None
    coords = [Fraction(0)] * k
    for row, col in zip(aug[:rank], pivot_cols):
        coords[col] = row[k]
    return tuple(coords)


# ---------------------------------------------------------------------------
# characteristic polynomial (exact, by interpolation)
# ---------------------------------------------------------------------------


def _det(a) -> Fraction:
    work = [list(r) for r in a]
    n = len(work)
    det = Fraction(1)
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if work[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        det *= work[col][col]
        inv = work[col][col]
        for r in range(col + 1, n):
            if work[r][col] != 0:
                factor = work[r][col] / inv
                for c in range(col, n):
                    work[r][c] -= factor * work[col][c]
    return det


def charpoly(a: tuple) -> list:
    """Characteristic polynomial det(tI - a), coefficients low-first.

    Computed exactly: evaluate the determinant at n+1 integer nodes and
    interpolate.  Returns a list of Fractions of length n+1, monic.
    """
    n = len(a)
    if n == 0:
        return [Fraction(1)]
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        shifted = tuple(
            tuple((Fraction(x) if i == j else Fraction(0)) - a[i][j] for j in range(n))
            for i in range(n)
        )
        ys.append(_det(shifted))
    # Newton's divided differences, then expand to monomial coefficients.
    coeffs = [Fraction(0)] * (n + 1)
    divided = list(ys)
    for level in range(1, n + 1):
        for i in range(n, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level])
    # p(t) = sum divided[i] * prod_{j<i} (t - xs[j])
    basis = [Fraction(1)]
    for i in range(n + 1):
        for power, c in enumerate(basis):
            coeffs[power] += divided[i] * c
        new_basis = [Fraction(0)] * (len(basis) + 1)
        for power, c in enumerate(basis):
            new_basis[power + 1] += c
            new_basis[power] -= xs[i] * c
        basis = new_basis
    return coeffs


# ---------------------------------------------------------------------------
# cyclotomic factorization of integer polynomials
# ---------------------------------------------------------------------------


def _int_poly_divide(num: list, den: list):
    """Exact division of integer polynomials (low-first), or None."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise InternalError("cyclotomic divisor must be monic")
    if len(num) - 1 < dn:
        return None
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dn] = c
        for j, d in enumerate(den):
            num[i - dn + j] -= c * d
    if any(x != 0 for x in num):
        return None
    return quot


def _cyclo_coeffs(n: int) -> list:
    """Integer coefficients (low-first) of the n-th cyclotomic polynomial."""
    poly = expand(CycloDivisor({n: 1}).to_product())
    return list(poly.coeffs)


def cyclotomic_content(coeffs: list):
    """Factor a monic integer polynomial as a product of cyclotomics.

    Returns (content dict {order: multiplicity}, remainder coefficients).
    The remainder is [1] exactly when the polynomial is a product of
    cyclotomic polynomials.
    """
    work = [int(c) for c in coeffs]
    while len(work) > 1 and work[-1] == 0:
        work.pop()
    if not work or work[-1] != 1:
        raise InputError("cyclotomic content needs a monic integer polynomial")
    content = {}
    deg0 = len(work) - 1
    n = 1
    # phi(n) >= sqrt(n/2), so orders beyond 2*deg^2 cannot divide.
    while len(work) > 1 and n <= 2 * deg0 * deg0 + 2:
        if _phi(n) <= len(work) - 1:
            cyc = _cyclo_coeffs(n)
            while True:
                quot = _int_poly_divide(work, cyc)
                if quot is None:
                    break
                work = quot
                content[n] = content.get(n, 0) + 1
        n += 1
    return content, work


# ---------------------------------------------------------------------------
# vector weights and the filtration
# ---------------------------------------------------------------------------

NEG_INFINITY = None  # distinguished weight of the zero vector


def _check_nilpotent(n_mat: tuple):
    n = len(n_mat)
    if any(x != 0 for row in mat_pow(n_mat, n) for x in row):
        raise InputError("matrix is not nilpotent")


@dataclass(frozen=True)
class VectorWeights:
    alpha: object  # int, or None for the zero vector
    beta: object
    gamma: object


def vector_weights(n_mat: tuple, v) -> VectorWeights:
    """The (alpha, beta, gamma) weights of v under a nilpotent N.

    alpha is the largest a with N^a v != 0; beta is minus the largest b
    with v in the image of N^b; gamma = alpha + beta.  The zero vector
    gets the distinguished value None (standing for minus infinity) in
    all three slots.
    """
    n_mat = mat(n_mat)
    _check_nilpotent(n_mat)
    dim = len(n_mat)
    v = tuple(Fraction(x) for x in v)
    if len(v) != dim:
        raise InputError(f"vector length {len(v)} does not match dimension {dim}")
    if all(x == 0 for x in v):
        return VectorWeights(NEG_INFINITY, NEG_INFINITY, NEG_INFINITY)
    alpha = 0
    w = v
    while True:
        w = mat_vec(n_mat, w)
        if all(x == 0 for x in w):
            break
        alpha += 1
    beta = 0
    for b in range(dim, 0, -1):
        if in_span(v, image(mat_pow(n_mat, b))):
            beta = -b
            break
    return VectorWeights(alpha, beta, alpha + beta)


@dataclass(frozen=True)
class WeightFiltration:
    """Increasing filtration W_k, stored as canonical echelon bases.

    ``steps`` lists (level, basis) for every level from one below the
    first jump up to the top; bases are reduced-echelon row tuples, so
    filtrations compare by equality.
    """

    center: int
    dimension: int
    steps: tuple  # tuple of (level, basis rows)

    def level_basis(self, k: int) -> tuple:
        """Basis of W_k (levels below the range give the zero space)."""
        result = ()
        for level, basis in self.steps:
            if level <= k:
                result = basis
            else:
                break
        return result

    def gr_dims(self) -> dict:
        """Dimensions of the graded pieces, omitting zero ones."""
        out = {}
        prev = 0
        for level, basis in self.steps:
            d = len(basis) - prev
            if d:
                out[level] = d
            prev = len(basis)
        return out


def weight_filtration(n_mat, center: int = 0) -> WeightFiltration:
    """Weight filtration of a nilpotent matrix, centered as requested.

    W_k (centered at 0) is the span of the subspaces
    Im(N^b) ∩ Ker(N^{k+b+1}) over b >= max(0, -k); shifting by the center
    moves level k to k + center.  The construction is validated post-hoc
    against its two defining properties: N(W_k) ⊆ W_{k-2} and N^k
    inducing isomorphisms gr_k -> gr_{-k}.
    """
    n_mat = mat(n_mat)
    _check_nilpotent(n_mat)
    dim = len(n_mat)
    if dim == 0:
        return WeightFiltration(center, 0, ((center, ()),))

    powers = [mat_identity(dim)]
    for _ in range(dim + 1):
        powers.append(mat_mul(powers[-1], n_mat))
    images = [image(p) for p in powers]
    kernels = [kernel(p) for p in powers]

    def w_level(k: int) -> tuple:
        if k < -dim:
            return ()
        pieces = []
        for b in range(max(0, -k), dim + 1):
            depth = k + b + 1
            if depth <= 0:
                continue
            pieces.append(subspace_intersect(images[b], kernels[min(depth, dim + 1)]))
        return subspace_sum(*pieces)

    levels = {}
    for k in range(-dim, dim + 1):
        levels[k] = w_level(k)
    lo = -dim
    while lo < dim and not levels[lo]:
        lo += 1
    hi = dim
    while hi > lo and len(levels[hi - 1]) == dim:
        hi -= 1
    steps = tuple((k + center, levels[k]) for k in range(lo - 1, hi + 1))

    filt = WeightFiltration(center, dim, steps)
    _assert_weight_properties(n_mat, filt)
    return filt


def _assert_weight_properties(n_mat: tuple, filt: WeightFiltration):
    """Check N(W_k) ⊆ W_{k-2} and that N^k: gr_k -> gr_{-k} is bijective."""
    c = filt.center
    dim = filt.dimension
    for level, basis in filt.steps:
        lower = filt.level_basis(level - 2)
        for row in basis:
            if not in_span(mat_vec(n_mat, row), lower):
                raise InternalError(
                    f"filtration property N(W_{level}) ⊆ W_{level - 2} fails"
                )
    dims = filt.gr_dims()
    for level, d in dims.items():
        k = level - c
        if dims.get(c - k, 0) != d:
            raise InternalError(f"gr dimensions asymmetric at level {level}")
        if k <= 0:
            continue
        upper = filt.level_basis(level)
        nk = mat_pow(n_mat, k)
        mapped = [mat_vec(nk, row) for row in upper]
        low_in = filt.level_basis(c - k)
        low_below = filt.level_basis(c - k - 1)
        # rank of the induced map gr_k -> gr_{-k}
        combined = span(tuple(mapped) + low_below)
        induced_rank = len(combined) - len(low_below)
        if induced_rank != d:
            raise InternalError(
                f"N^{k} does not induce an isomorphism gr_{k} -> gr_{-k}"
            )
        for row in mapped:
            if not in_span(row, low_in):
                raise InternalError(f"N^{k} image escapes W_{c - k}")


def jordan_blocks(n_mat) -> tuple:
    """Jordan block sizes of a nilpotent matrix, descending.

    The number of blocks of size >= j is rank(N^{j-1}) - rank(N^j).
    """
    n_mat = mat(n_mat)
    _check_nilpotent(n_mat)
    dim = len(n_mat)
    if dim == 0:
        return ()
    ranks = [dim]
    power = mat_identity(dim)
    while ranks[-1] > 0:
        power = mat_mul(power, n_mat)
        ranks.append(mat_rank(power))
    at_least = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    sizes = []
    for j in range(len(at_least), 0, -1):
        exactly = at_least[j - 1] - (at_least[j] if j < len(at_least) else 0)
        sizes.extend([j] * exactly)
    out = tuple(sorted(sizes, reverse=True))
    if sum(out) != dim:
        raise InternalError(f"block sizes {out} do not sum to dimension {dim}")
    return out


# ---------------------------------------------------------------------------
# level polynomials of a quasi-unipotent automorphism
# ---------------------------------------------------------------------------


def _coeffs_poly_is_integral(coeffs) -> bool:
    return all(Fraction(c).denominator == 1 for c in coeffs)


def _quasi_unipotent_content(h: tuple) -> dict:
    """Cyclotomic content of charpoly(h), or reject the matrix."""
    coeffs = charpoly(h)
    if not _coeffs_poly_is_integral(coeffs):
        raise InputError(
            "matrix is not quasi-unipotent: characteristic polynomial is not integral"
        )
    content, remainder = cyclotomic_content([int(c) for c in coeffs])
    if len(remainder) > 1:
        pretty = _poly_str(remainder)
        raise InputError(
            f"matrix is not quasi-unipotent: non-cyclotomic factor {pretty}"
        )
    return content


def _poly_str(coeffs) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(f"{c:+d}")
        elif i == 1:
            terms.append(f"{c:+d}*t" if abs(c) != 1 else ("+t" if c > 0 else "-t"))
        else:
            terms.append(f"{c:+d}*t^{i}" if abs(c) != 1 else (f"+t^{i}" if c > 0 else f"-t^{i}"))
    s = " ".join(terms) if terms else "0"
    return s[1:] if s.startswith("+") else s


def _charpoly_to_cyclo(coeffs) -> CycloProduct:
    if not _coeffs_poly_is_integral(coeffs):
        raise InternalError("graded characteristic polynomial is not integral")
    content, remainder = cyclotomic_content([int(c) for c in coeffs])
    if len(remainder) > 1:
        raise InternalError(
            f"graded characteristic polynomial has non-cyclotomic factor {_poly_str(remainder)}"
        )
    return CycloDivisor(content).to_product()


def default_power(h) -> int:
    """The default power m for delta_k: lcm of the cyclotomic orders."""
    content = _quasi_unipotent_content(mat(h))
    m = 1
    for order in content:
        m = math.lcm(m, order)
    return m


def _induced_on_quotient(h: tuple, upper: tuple, lower: tuple) -> tuple:
    """Matrix of the action induced by h on span(upper)/span(lower).

    ``upper`` and ``lower`` are echelon bases with lower ⊆ upper (as
    spaces).  Complement vectors are the rows of ``upper`` whose pivots
    are not pivots of ``lower``; h must preserve both spaces.
    """
    _, piv_up = rref(upper)
    _, piv_lo = rref(lower)
    lower_pivots = set(piv_lo)
    complement = [row for row, p in zip(upper, piv_up) if p not in lower_pivots]
    k = len(complement)
    if k == 0:
        return ()
    basis = tuple(lower) + tuple(complement)
    cols = []
    for v in complement:
        hv = mat_vec(h, v)
        coords = solve_coordinates(basis, hv)
        if coords is None:
            raise InternalError("automorphism does not preserve the filtration")
        cols.append(coords[len(lower):])
    return tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))


def delta_k(h, k: int, m: int = None) -> CycloProduct:
    """The level-k polynomial of a quasi-unipotent automorphism h.

    Builds N = I - h^m (m defaulting to the lcm of the cyclotomic orders
    in the characteristic polynomial), takes the weight filtration of N
    centered at 0, and returns the characteristic polynomial of h acting
    on the level-k primitive subquotient

        P_k = ker(N^{k+1}: gr_k -> gr_{-k-2}),

    as a CycloProduct.  Its degree is the number of Jordan blocks of h of
    size k+1, and its roots are those blocks' eigenvalues.  A supplied m
    must make the characteristic polynomial of h^m a power of t-1.
    """
    if k < 0:
        raise InputError(f"level k must be >= 0, got {k}")
    h = mat(h)
    n = len(h)
    content = _quasi_unipotent_content(h)
    if m is None:
        m = 1
        for order in content:
            m = math.lcm(m, order)
    elif m < 1:
        raise InputError(f"power m must be >= 1, got {m}")

    hm = mat_pow(h, m)
    unipotent_coeffs = charpoly(hm)
    expected = _binomial_power_coeffs(n)
    if unipotent_coeffs != expected:
        raise InputError(
            f"m = {m} does not work: characteristic polynomial of h^{m} "
            "is not a power of t-1"
        )
    n_mat = mat_sub(mat_identity(n), hm)
    filt = weight_filtration(n_mat, center=0)
    _assert_graded_symmetry(h, filt)

    upper = filt.level_basis(k)
    below = filt.level_basis(k - 1)
    if len(upper) == len(below):
        return CycloProduct({})
    # primitive vectors: images under N^{k+1} fall into W_{-k-3}
    nk1 = mat_pow(n_mat, k + 1)
    deep = filt.level_basis(-k - 3)
    # Solve for combinations of the upper basis whose N^{k+1}-image lies
    # in ``deep``, working with residues modulo ``deep`` on the image side.
    constraints = []
    for v in upper:
        img = mat_vec(nk1, v)
        constraints.append(_residue(img, deep))
    primitive_coeff = kernel(tuple(zip(*constraints))) if constraints else ()
    primitive = span(
        tuple(
            tuple(sum(c * row[i] for c, row in zip(coeffs, upper)) for i in range(n))
            for coeffs in primitive_coeff
        )
        + below
    )
    induced = _induced_on_quotient(h, primitive, below)
    return _charpoly_to_cyclo(charpoly(induced))


def _residue(v: tuple, basis: tuple) -> tuple:
    """v reduced modulo an echelon basis (residue in a fixed complement)."""
    reduced = list(v)
    if basis:
        _, pivots = rref(basis)
        for row, p in zip(basis, pivots):
            if reduced[p] != 0:
                factor = reduced[p]
                reduced = [x - factor * y for x, y in zip(reduced, row)]
    return tuple(reduced)


def _binomial_power_coeffs(n: int) -> list:
    """Coefficients of (t-1)^n, low-first."""
    return [Fraction((-1) ** (n - i) * math.comb(n, i)) for i in range(n + 1)]


def _assert_graded_symmetry(h: tuple, filt: WeightFiltration):
    """charpoly of h on gr_k must match the one on gr_{-k}."""
    dims = filt.gr_dims()
    for level in dims:
        if level < 0:
            continue
        up_pos = _induced_on_quotient(h, filt.level_basis(level), filt.level_basis(level - 1))
        up_neg = _induced_on_quotient(
            h, filt.level_basis(-level), filt.level_basis(-level - 1)
        )
        if charpoly(up_pos) != charpoly(up_neg):
            raise InternalError(
                f"characteristic polynomials on gr_{level} and gr_{-level} differ"
            )


def delta_k_all(h, m: int = None) -> dict:
    """All nonzero level polynomials, {k: CycloProduct}."""
    h = mat(h)
    out = {}
    for k in range(len(h) + 1):
        poly = delta_k(h, k, m)
        if poly.factors:
            out[k] = poly
    return out


def monodromy_theorem_check(h, ambient_dim: int, m: int = None) -> dict:
    """Check the bounds the monodromy theorem imposes on the levels.

    For a monodromy acting on the cohomology of an n-dimensional Milnor
    fiber: Delta^[k] = 1 for k > n, and 1 is not a root of Delta^[n].
    Returns {"ok": bool, "violations": [...]} without raising.
    """
    from .cyclo import root_multiplicity

    if ambient_dim < 0:
        raise InputError(f"ambient dimension must be >= 0, got {ambient_dim}")
    h = mat(h)
    violations = []
    for k in range(len(h) + 1):
        poly = delta_k(h, k, m)
        if k > ambient_dim and poly.factors:
            violations.append(
                f"level {k} exceeds ambient dimension {ambient_dim} "
                f"but Delta^[{k}] = {poly} != 1"
            )
        if k == ambient_dim and root_multiplicity(poly, 1) != 0:
            violations.append(
                f"1 is a root of Delta^[{ambient_dim}] "
                f"(multiplicity {root_multiplicity(poly, 1)})"
            )
    return {"ok": not violations, "violations": violations}


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def matrix_from_json(data) -> tuple:
    """Parse a JSON array of arrays of "p/q" strings (or numbers)."""
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError("matrix JSON must be an array of arrays")
    try:
        return mat(data)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad matrix entry: {exc}") from exc


def matrix_to_json(a: tuple) -> list:
    return [[str(x) for x in row] for row in a]
