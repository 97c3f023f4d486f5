"""The shape Hopf algebra: interval coproduct, counit, taking out.

Elements are formal integer combinations of shape classes, where a class
is the multiset of connected components of a shape up to translation.
The coproduct of lambda/mu sums eta/mu (x) lambda/eta over the interval
mu <= eta <= lambda in Young's lattice.  The antipode is never needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import schur
from .shapes import (
    Composition,
    SkewShape,
    connected_components,
    is_connected_cells,
    is_ribbon,
    ribbon_composition_of,
    shape_sort_key,
    skew_from_cells,
)


@dataclass(frozen=True, eq=False)
class ShapeClass:
    """Multiset of connected nonempty shapes; the empty multiset is the unit."""

    components: tuple[SkewShape, ...]

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=shape_sort_key))
        object.__setattr__(self, "components", comps)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def is_empty(self) -> bool:
        return not self.components

    def is_connected_ribbon(self) -> bool:
        return len(self.components) == 1 and is_ribbon(self.components[0])

    def ribbon_composition(self) -> Composition:
        if len(self.components) != 1:
            raise ValueError("class is not a single connected shape")
        return ribbon_composition_of(self.components[0])

    def __mul__(self, other: "ShapeClass") -> "ShapeClass":
        return ShapeClass(self.components + other.components)

    def __eq__(self, other):
        if not isinstance(other, ShapeClass):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return tuple(c.cells for c in self.components)

    def __repr__(self):
        from .shapes import format_shape

        if not self.components:
            return "ShapeClass(1)"
        return "ShapeClass({%s})" % ", ".join(format_shape(c) for c in self.components)


UNIT_CLASS = ShapeClass(())


def shape_class(shape: SkewShape) -> ShapeClass:
    """Class of a shape: its multiset of connected components."""
    return ShapeClass(connected_components(shape))


def class_of_cells(cells) -> ShapeClass:
    return shape_class(skew_from_cells(cells))


def class_schur(cls: ShapeClass) -> schur.SymFunc:
    """Image of a class in symmetric functions."""
    return schur.schur_of_shape_set(cls.components)


def class_h_expansion(cls: ShapeClass) -> dict:
    """h-basis image of a class (product over components)."""
    out = {(): 1}
    for comp in cls.components:
        out = schur.h_product(out, schur.h_expansion(comp))
    return out


CoproductSum = dict  # (ShapeClass, ShapeClass) -> int


def _interval_splits(shape: SkewShape, left_size: int | None = None, emit: str = "both"):
    """Yield cell splits for every eta with mu <= eta <= lambda.

    Cell positions are given in the canonical frame of the input shape.
    When left_size is given, only splits whose left part has that many
    cells are produced.  emit selects (left, right) pairs or just one
    side's cell set.
    """
    canon = skew_from_cells(shape.cells)
    lam = canon.outer
    mu = canon.inner + (0,) * (len(lam) - len(canon.inner))
    ell = len(lam)
    total = shape.size
    if left_size is not None and not 0 <= left_size <= total:
        return

    # suffix sums of per-row capacities, for pruning when left_size is fixed
    caps = [lam[i] - mu[i] for i in range(ell)]
    suffix = [0] * (ell + 1)
    for i in range(ell - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]

    eta = [0] * ell
    want_left = emit in ("both", "left")
    want_right = emit in ("both", "right")

    def rec(i: int, upper_bound: int, taken: int):
        if i == ell:
            if left_size is None or taken == left_size:
                left = (
                    frozenset((r, c) for r in range(ell) for c in range(mu[r], eta[r]))
                    if want_left
                    else None
                )
                right = (
                    frozenset((r, c) for r in range(ell) for c in range(eta[r], lam[r]))
                    if want_right
                    else None
                )
                if emit == "both":
                    yield left, right
                else:
                    yield left if emit == "left" else right
            return
        lo, hi = mu[i], min(lam[i], upper_bound)
        for value in range(lo, hi + 1):
            t = taken + value - mu[i]
            if left_size is not None:
                if t > left_size or t + suffix[i + 1] < left_size:
                    continue
            eta[i] = value
            yield from rec(i + 1, value, t)

    yield from rec(0, lam[0] if lam else 0, 0)


def coproduct(shape: SkewShape) -> CoproductSum:
    """Interval coproduct, with both tensor factors collapsed to classes."""
    out: CoproductSum = {}
    for left, right in _interval_splits(shape):
        key = (class_of_cells(left), class_of_cells(right))
        out[key] = out.get(key, 0) + 1
    return out


def coproduct_slice(shape: SkewShape, left_size: int):
    """Terms of the coproduct whose left factor has exactly left_size cells.

    Returned positionally as (left_cells, right_cells) pairs so callers
    can recover placements.
    """
    return list(_interval_splits(shape, left_size))


def counit(cls: ShapeClass) -> int:
    """1 on the empty class, 0 on anything with at least one box."""
    return 1 if cls.is_empty() else 0


def coproduct_class(cls: ShapeClass) -> CoproductSum:
    """Coproduct of a class: product of the component coproducts."""
    total: CoproductSum = {(UNIT_CLASS, UNIT_CLASS): 1}
    for comp in cls.components:
        piece = coproduct(comp)
        merged: CoproductSum = {}
        for (a1, b1), m1 in total.items():
            for (a2, b2), m2 in piece.items():
                key = (a1 * a2, b1 * b2)
                merged[key] = merged.get(key, 0) + m1 * m2
        total = merged
    return total


def take_out_left(shape: SkewShape, m: ShapeClass) -> dict[ShapeClass, int]:
    """Right factors of coproduct terms whose left factor equals m."""
    out: dict[ShapeClass, int] = {}
    for (a, b), mult in coproduct(shape).items():
        if a == m:
            out[b] = out.get(b, 0) + mult
    return out


def take_out_right(shape: SkewShape, m: ShapeClass) -> dict[ShapeClass, int]:
    """Left factors of coproduct terms whose right factor equals m."""
    out: dict[ShapeClass, int] = {}
    for (a, b), mult in coproduct(shape).items():
        if b == m:
            out[a] = out.get(a, 0) + mult
    return out


def removable_ribbons(
    shape: SkewShape, n: int, side: str
) -> list[tuple[Composition, frozenset]]:
    """Connected ribbons of size n removable on one side, with positions.

    side "left": the removed cells form eta/mu for some eta; side
    "right": they form lambda/eta.  Distinct eta give distinct entries.

    A removable connected ribbon can never cover a cell whose diagonal
    neighbor toward the removal side is still in the shape (a 2x2 would
    appear), so for a connected shape the candidates are exactly the
    contiguous windows of the corresponding rim; disconnected shapes fall
    back to scanning interval splits.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if n < 1:
        raise ValueError("ribbon size must be positive")
    if shape.size < n:
        return []
    if not is_connected_cells(shape.cells):
        return _removable_ribbons_by_slices(shape, n, side)
    from .shapes import rim_ribbon

    canon = skew_from_cells(shape.cells)
    lam = canon.outer
    mu = canon.inner + (0,) * (len(lam) - len(canon.inner))
    rim = rim_ribbon(canon, "NW" if side == "left" else "SE")
    out = []
    for start in range(len(rim) - n + 1):
        window = rim[start : start + n]
        by_row: dict[int, list[int]] = {}
        for r, c in window:
            by_row.setdefault(r, []).append(c)
        eta = list(mu) if side == "left" else list(lam)
        ok = True
        for r, cols in by_row.items():
            lo, hi = min(cols), max(cols)
            if hi - lo + 1 != len(cols):
                ok = False
                break
            if side == "left":
                if lo != mu[r]:
                    ok = False
                    break
                eta[r] = hi + 1
            else:
                if hi != lam[r] - 1:
                    ok = False
                    break
                eta[r] = lo
        if not ok or any(eta[i] < eta[i + 1] for i in range(len(eta) - 1)):
            continue
        rows = sorted(by_row)
        comp = tuple(len(by_row[r]) for r in rows)
        out.append((comp, frozenset(window)))
    out.sort(key=lambda item: tuple(sorted(item[1])))
    return out


def _removable_ribbons_by_slices(shape: SkewShape, n: int, side: str):
    """Reference implementation scanning every interval split."""
    if side == "left":
        picked = _interval_splits(shape, n, emit="left")
    else:
        picked = _interval_splits(shape, shape.size - n, emit="right")
    out = []
    for cells in picked:
        if len(cells) != n or not is_connected_cells(cells):
            continue
        piece = skew_from_cells(cells)
        if not is_ribbon(piece):
            continue
        out.append((ribbon_composition_of(piece), cells))
    out.sort(key=lambda item: tuple(sorted(item[1])))
    return out


def _triple_expand(first_then: bool, terms: CoproductSum) -> dict:
    """(Delta x id) or (id x Delta) applied to a coproduct sum."""
    out: dict = {}
    for (a, b), m in terms.items():
        inner = coproduct_class(a if first_then else b)
        for (x, y), mm in inner.items():
            key = (x, y, b) if first_then else (a, x, y)
            out[key] = out.get(key, 0) + m * mm
    return {k: v for k, v in out.items() if v != 0}


def check_coassociativity(shape: SkewShape) -> bool:
    """(Delta x id) Delta == (id x Delta) Delta on one shape."""
    terms = coproduct(shape)
    return _triple_expand(True, terms) == _triple_expand(False, terms)


def check_counit_laws(shape: SkewShape) -> bool:
    """Collapsing either factor with the counit recovers the class."""
    cls = shape_class(shape)
    left: dict[ShapeClass, int] = {}
    right: dict[ShapeClass, int] = {}
    for (a, b), m in coproduct(shape).items():
        if counit(a):
            left[b] = left.get(b, 0) + m
        if counit(b):
            right[a] = right.get(a, 0) + m
    expected = {cls: 1}
    return left == expected and right == expected


def is_shape_level_cocommutative(shape: SkewShape) -> bool:
    """Swap-symmetry of the coproduct at the class level (usually false)."""
    terms = coproduct(shape)
    return all(terms.get((b, a), 0) == m for (a, b), m in terms.items())


_class_schur_cache: dict[ShapeClass, schur.SymFunc] = {}


def _schur_cached(cls: ShapeClass) -> schur.SymFunc:
    f = _class_schur_cache.get(cls)
    if f is None:
        f = class_schur(cls)
        _class_schur_cache[cls] = f
    return f


_class_h_cache: dict[ShapeClass, dict] = {}


def _h_cached(cls: ShapeClass) -> dict:
    f = _class_h_cache.get(cls)
    if f is None:
        f = class_h_expansion(cls)
        _class_h_cache[cls] = f
    return f


def _combos_equal_as_symfuncs(lhs: dict[ShapeClass, int], rhs: dict[ShapeClass, int]) -> bool:
    """Whether two integer class combinations map to the same symmetric function.

    Classes cancel symbolically first; any residue is compared through the
    h-basis, where equality of symmetric functions is plain dict equality.
    """
    residue: dict[ShapeClass, int] = dict(lhs)
    for cls, m in rhs.items():
        residue[cls] = residue.get(cls, 0) - m
    residue = {c: m for c, m in residue.items() if m != 0}
    if not residue:
        return True
    total: dict = {}
    for cls, m in residue.items():
        for p, c in _h_cached(cls).items():
            total[p] = total.get(p, 0) + m * c
    return all(v == 0 for v in total.values())


def image_cocommutativity(shape: SkewShape, slice_size: int | None = None) -> bool:
    """Swap-symmetry of the coproduct after mapping to symmetric functions.

    With slice_size=k only the bidegree (k, n-k) component is compared
    against the swapped (n-k, k) component; the small-side factors are
    expanded in the Schur basis and the large-side factors are compared
    exactly through the h-basis.
    """
    n = shape.size
    if slice_size is None:
        acc: dict = {}
        for (a, b), m in coproduct(shape).items():
            fa = _schur_cached(a)
            fb = _schur_cached(b)
            for pa, ca in fa.coeffs:
                for pb, cb in fb.coeffs:
                    key = (pa, pb)
                    acc[key] = acc.get(key, 0) + m * ca * cb
        acc = {k: v for k, v in acc.items() if v != 0}
        return all(acc.get((pb, pa), 0) == v for (pa, pb), v in acc.items())

    k = slice_size
    small_is_left = k <= n - k
    # bucket big-side class combinations by small-side Schur coordinates
    def bucket(slice_terms, left_small: bool):
        buckets: dict = {}
        for left, right in slice_terms:
            small = class_of_cells(left if left_small else right)
            big = class_of_cells(right if left_small else left)
            for p, c in _schur_cached(small).coeffs:
                buckets.setdefault(p, {})
                buckets[p][big] = buckets[p].get(big, 0) + c
        return buckets

    if small_is_left:
        lhs = bucket(coproduct_slice(shape, k), True)
        rhs = bucket(coproduct_slice(shape, n - k), False)
    else:
        lhs = bucket(coproduct_slice(shape, k), False)
        rhs = bucket(coproduct_slice(shape, n - k), True)
    keys = set(lhs) | set(rhs)
    return all(
        _combos_equal_as_symfuncs(lhs.get(p, {}), rhs.get(p, {})) for p in keys
    )


def coproduct_to_json(terms: CoproductSum):
    from .shapes import format_shape

    rows = []
    for (a, b), m in terms.items():
        rows.append(
            {
                "left": [format_shape(c) for c in a.components],
                "right": [format_shape(c) for c in b.components],
                "mult": m,
            }
        )
    rows.sort(key=lambda r: (r["left"], r["right"]))
    return rows
