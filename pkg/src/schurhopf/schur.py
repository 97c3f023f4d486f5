"""Exact Schur-basis expansions of skew Schur functions.

Everything is integer or rational arithmetic; there is no floating point.
The monomial expansion is a deliberately independent oracle: it enumerates
fillings directly and never calls the Littlewood-Richardson machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import (
    Composition,
    Partition,
    SkewShape,
    check_partition,
    connected_components,
    partitions_of,
    ribbon_shape,
    skew_from_cells,
)


class SymFuncError(ValueError):
    pass


def _sorted_terms(coeffs: dict[Partition, int]):
    # descending lex = reverse-lexicographic order on partitions of equal size
    return sorted(coeffs.items(), key=lambda kv: kv[0], reverse=True)


@dataclass(frozen=True)
class SymFunc:
    """Homogeneous symmetric function in the Schur basis with integer coefficients."""

    degree: int
    coeffs: tuple[tuple[Partition, int], ...]

    @staticmethod
    def from_dict(degree: int, coeffs: dict[Partition, int]) -> "SymFunc":
        clean = {check_partition(p): int(c) for p, c in coeffs.items() if c != 0}
        for p in clean:
            if sum(p) != degree:
                raise SymFuncError(f"partition {p} does not have degree {degree}")
        return SymFunc(degree, tuple(_sorted_terms(clean)))

    @staticmethod
    def zero(degree: int) -> "SymFunc":
        return SymFunc(degree, ())

    @staticmethod
    def basis(partition) -> "SymFunc":
        p = check_partition(partition)
        return SymFunc(sum(p), ((p, 1),))

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.coeffs)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.degree != other.degree:
            raise SymFuncError("degree mismatch in sum")
        out = self.as_dict()
        for p, c in other.coeffs:
            out[p] = out.get(p, 0) + c
        return SymFunc.from_dict(self.degree, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, k: int) -> "SymFunc":
        return SymFunc.from_dict(self.degree, {p: k * c for p, c in self.coeffs})

    def is_zero(self) -> bool:
        return not self.coeffs

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for p, c in self.coeffs:
            name = "s[" + ",".join(str(x) for x in p) + "]"
            mag = abs(c)
            body = name if mag == 1 else f"{mag}*{name}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def to_json(self):
        return [{"partition": list(p), "coefficient": c} for p, c in self.coeffs]


@dataclass(frozen=True)
class MonomialPoly:
    """Polynomial in k variables as a map from exponent vectors to integers."""

    k: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    @staticmethod
    def from_dict(k: int, terms: dict[tuple[int, ...], int]) -> "MonomialPoly":
        clean = {e: c for e, c in terms.items() if c != 0}
        return MonomialPoly(k, tuple(sorted(clean.items())))

    def as_dict(self):
        return dict(self.terms)

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        if self.k != other.k:
            raise SymFuncError("variable count mismatch")
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return MonomialPoly.from_dict(self.k, out)

    def scale(self, factor: int) -> "MonomialPoly":
        return MonomialPoly.from_dict(self.k, {e: factor * c for e, c in self.terms})


def monomial_expansion(shape: SkewShape, k: int) -> MonomialPoly:
    """Sum over fillings of the shape with entries in 1..k.

    Fillings weakly increase along rows and strictly increase down columns.
    This is the independent oracle; it enumerates fillings directly.
    """
    if k < 1:
        raise SymFuncError("need at least one variable")
    cells = sorted(shape.cells)
    counts: dict[tuple[int, ...], int] = {}
    values: dict[tuple[int, int], int] = {}
    content = [0] * k

    def fill(idx: int):
        if idx == len(cells):
            key = tuple(content)
            counts[key] = counts.get(key, 0) + 1
            return
        r, c = cells[idx]
        lo = 1
        left = values.get((r, c - 1))
        if left is not None:
            lo = max(lo, left)
        above = values.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1)
        for v in range(lo, k + 1):
            values[(r, c)] = v
            content[v - 1] += 1
            fill(idx + 1)
            content[v - 1] -= 1
        values.pop((r, c), None)

    fill(0)
    return MonomialPoly.from_dict(k, counts)


def _row_spans(shape: SkewShape) -> list[tuple[int, int]]:
    """Column interval [lo, hi] of each row of the canonical cell set."""
    canon = skew_from_cells(shape.cells)
    spans = []
    for i, lam in enumerate(canon.outer):
        mu = canon.inner[i] if i < len(canon.inner) else 0
        spans.append((mu, lam - 1) if lam > mu else None)
    return spans


def _lattice_fillings(shape: SkewShape, content_cap: Partition | None = None):
    """Yield contents of Littlewood-Richardson fillings of a connected-or-not shape.

    Cells are visited in reading order (rows top to bottom, right to left);
    the ballot condition is enforced at every step, so entries in row i
    never exceed i + 1.
    """
    spans = _row_spans(shape)
    cells = []
    for r, span in enumerate(spans):
        if span is None:
            continue
        lo, hi = span
        for c in range(hi, lo - 1, -1):
            cells.append((r, c))
    n = shape.size
    maxe = len(spans)
    if content_cap is not None:
        maxe = min(maxe, len(content_cap))
    counts = [0] * (maxe + 2)
    values: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            out = []
            for e in range(1, maxe + 1):
                if counts[e] == 0:
                    break
                out.append(counts[e])
            yield tuple(out)
            return
        r, c = cells[idx]
        lo = 1
        above = values.get((r - 1, c))
        if above is not None:
            lo = above + 1
        hi = r + 1
        right = values.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        hi = min(hi, maxe)
        for v in range(lo, hi + 1):
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            if content_cap is not None and counts[v] >= content_cap[v - 1]:
                continue
            counts[v] += 1
            values[(r, c)] = v
            yield from rec(idx + 1)
            counts[v] -= 1
        values.pop((r, c), None)

    if n == 0:
        yield ()
        return
    yield from rec(0)


_expand_cache: dict[frozenset, SymFunc] = {}


def schur_expand(shape: SkewShape) -> SymFunc:
    """Expansion of the skew Schur function in the Schur basis.

    Connected shapes are expanded by enumerating Littlewood-Richardson
    fillings; disconnected shapes multiply their components' expansions.
    """
    key = shape.cells
    cached = _expand_cache.get(key)
    if cached is not None:
        return cached
    comps = connected_components(shape)
    if len(comps) <= 1:
        coeffs: dict[Partition, int] = {}
        for content in _lattice_fillings(shape):
            coeffs[content] = coeffs.get(content, 0) + 1
        result = SymFunc.from_dict(shape.size, coeffs)
    else:
        result = SymFunc.basis(())
        for comp in comps:
            result = multiply(result, schur_expand(comp))
    _expand_cache[key] = result
    return result


_lr_cache: dict[tuple[Partition, Partition], dict[Partition, int]] = {}


def _lr_products(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """All lambda with nonzero c^lambda_{mu,nu}, with their coefficients."""
    key = (mu, nu) if mu >= nu else (nu, mu)
    cached = _lr_cache.get(key)
    if cached is not None:
        return cached
    mu, nu = key
    n = sum(mu) + sum(nu)
    out: dict[Partition, int] = {}
    max_len = len(mu) + len(nu)
    max_first = (mu[0] if mu else 0) + (nu[0] if nu else 0)
    for lam in partitions_of(n, max_part=max_first, max_len=max_len):
        if len(lam) < len(mu) or any(lam[i] < mu[i] for i in range(len(mu))):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    _lr_cache[key] = out
    return out


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient by direct enumeration of fillings."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    nu = check_partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    try:
        shape = SkewShape(lam, mu)
    except ValueError:
        return 0
    return sum(1 for content in _lattice_fillings(shape, content_cap=nu) if content == nu)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product via Littlewood-Richardson coefficients; degrees add."""
    out: dict[Partition, int] = {}
    for mu, a in f.coeffs:
        for nu, b in g.coeffs:
            for lam, c in _lr_products(mu, nu).items():
                out[lam] = out.get(lam, 0) + a * b * c
    return SymFunc.from_dict(f.degree + g.degree, out)


def schur_of_shape_set(shapes) -> SymFunc:
    """Product of the expansions of a collection of shapes."""
    result = SymFunc.basis(())
    for shape in shapes:
        result = multiply(result, schur_expand(shape))
    return result


def connected_ribbons_of_size(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n in lexicographic order."""
    if n < 1:
        raise SymFuncError("ribbon size must be positive")

    def rec(remaining):
        if remaining == 0:
            yield ()
            return
        for first in range(1, remaining + 1):
            for rest in rec(remaining - first):
                yield (first,) + rest

    return sorted(rec(n))


def ribbon_product(a: Composition, b: Composition) -> tuple[Composition, Composition]:
    """The two ribbons whose Schur functions sum to the ribbon product.

    First the concatenation ribbon (b's bottom row extends a's top row to
    the right), then the stacking ribbon (b's bottom box sits directly
    above a's top-right box).
    """
    a = tuple(int(x) for x in a)
    b = tuple(int(x) for x in b)
    if not a or not b:
        raise SymFuncError("ribbon product needs nonempty ribbons")
    concat = b[:-1] + (b[-1] + a[0],) + a[1:]
    stacked = b + a
    return concat, stacked


def schur_equal(a: SkewShape, b: SkewShape, expand_limit: int = 18) -> bool:
    """Whether two shapes index the same skew Schur function.

    Small degrees compare Schur expansions; past expand_limit the
    Jacobi-Trudi h-expansions are compared instead, which is equivalent
    because the complete homogeneous functions are algebraically
    independent.  Tall shapes are conjugated first (conjugation is a ring
    automorphism, so equality is preserved) to keep the determinants
    small.
    """
    if a.size != b.size:
        return False
    if a.size <= expand_limit:
        return schur_expand(a) == schur_expand(b)

    def rows_cols(shape):
        canon = skew_from_cells(shape.cells)
        return len(canon.outer), canon.outer[0] if canon.outer else 0

    from .shapes import transpose

    ra, ca = rows_cols(a)
    rb, cb = rows_cols(b)
    if max(ra, rb) > max(ca, cb):
        a, b = transpose(a), transpose(b)
    return h_expansion(a) == h_expansion(b)


_h_cache: dict[frozenset, dict[Partition, int]] = {}


def h_expansion(shape: SkewShape) -> dict[Partition, int]:
    """Jacobi-Trudi determinant as a polynomial in the h-basis.

    Keys are partitions standing for products of complete homogeneous
    functions; values are integer coefficients.
    """
    key = shape.cells
    cached = _h_cache.get(key)
    if cached is not None:
        return dict(cached)
    canon = skew_from_cells(shape.cells)
    lam = canon.outer
    mu = canon.inner + (0,) * (len(lam) - len(canon.inner))
    ell = len(lam)
    if ell == 0:
        out = {(): 1}
        _h_cache[key] = dict(out)
        return out
    # det(h_{lam_i - mu_j - i + j}): the entry in row i, column j is nonzero
    # exactly when j >= t_i, and the thresholds t_i are non-decreasing, so
    # subdeterminants memoize on (row, free columns at or past the threshold)
    thresholds = []
    for i in range(ell):
        t = ell
        for j in range(ell):
            if mu[j] - j <= lam[i] - i:
                t = j
                break
        thresholds.append(t)

    memo: dict[tuple, dict[Partition, int]] = {}

    def subdet(i: int, free: tuple[int, ...]) -> dict[Partition, int]:
        if i == ell:
            return {(): 1}
        if free and free[0] < thresholds[i]:
            return {}  # a column can no longer be covered by any later row
        state = (i, free)
        cached = memo.get(state)
        if cached is not None:
            return cached
        acc: dict[Partition, int] = {}
        for idx, j in enumerate(free):
            d = lam[i] - mu[j] - i + j
            sub = subdet(i + 1, free[:idx] + free[idx + 1 :])
            if not sub:
                continue
            sign = 1 if idx % 2 == 0 else -1
            for p, c in sub.items():
                q = tuple(sorted(p + (d,), reverse=True)) if d > 0 else p
                acc[q] = acc.get(q, 0) + sign * c
        acc = {p: c for p, c in acc.items() if c != 0}
        memo[state] = acc
        return acc

    out = subdet(0, tuple(range(ell)))
    _h_cache[key] = dict(out)
    return out


def h_product(f: dict[Partition, int], g: dict[Partition, int]) -> dict[Partition, int]:
    """Product of two h-basis polynomials (multiset union of indices)."""
    out: dict[Partition, int] = {}
    for p, a in f.items():
        for q, b in g.items():
            key = tuple(sorted(p + q, reverse=True))
            out[key] = out.get(key, 0) + a * b
    return {p: c for p, c in out.items() if c != 0}


_oracle_cache: dict[tuple[Partition, int], MonomialPoly] = {}


def sym_to_monomials(f: SymFunc, k: int) -> MonomialPoly:
    """Evaluate a Schur-basis element into monomials using the oracle.

    Each straight-shape Schur function is expanded by monomial_expansion,
    so this stays on the oracle side of the dual-route check.
    """
    total = MonomialPoly.from_dict(k, {})
    for p, c in f.coeffs:
        key = (p, k)
        poly = _oracle_cache.get(key)
        if poly is None:
            poly = monomial_expansion(SkewShape(p, ()), k)
            _oracle_cache[key] = poly
        total = total + poly.scale(c)
    return total
