"""Cell-level geometry of partitions and skew shapes.

Shapes are identified up to translation: every shape exposes a canonical
cell set whose minimal row and column are both zero, and two shapes are
equal exactly when those cell sets coincide.  Rows grow downward and
columns grow rightward, so "northeast" means up and to the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

Cell = tuple[int, int]
Partition = tuple[int, ...]
Composition = tuple[int, ...]


class ShapeError(ValueError):
    """Base class for geometry errors."""


class NotSkewError(ShapeError):
    """A cell set that no partition pair lambda/mu realizes."""


class NotConnectedRibbonError(ShapeError):
    """Shape is not a connected ribbon."""


class DisconnectedError(ShapeError):
    """Operation requires a connected shape."""


def check_partition(parts) -> Partition:
    """Normalize an iterable of row lengths into a partition tuple.

    Trailing zeros are dropped; anything non-monotone or negative is
    rejected.
    """
    out = []
    for p in parts:
        q = int(p)
        if q < 0:
            raise ShapeError(f"negative part {q!r}")
        out.append(q)
    while out and out[-1] == 0:
        out.pop()
    for a, b in zip(out, out[1:]):
        if b > a:
            raise ShapeError(f"parts not weakly decreasing: {tuple(out)}")
    if any(p == 0 for p in out):
        raise ShapeError(f"interior zero part in {tuple(out)}")
    return tuple(out)


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None):
    """Yield all partitions of n, largest part first, in descending lex order."""
    if n == 0:
        yield ()
        return
    if max_len is not None and max_len <= 0:
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions_of(n - first, first, rest_len):
            yield (first,) + rest


def partitions_in_box(rows: int, cols: int):
    """Yield every partition fitting in a rows x cols box (including the empty one)."""

    def rec(row, bound):
        if row == rows:
            yield ()
            return
        for part in range(bound, -1, -1):
            if part == 0:
                yield ()
                continue
            for rest in rec(row + 1, part):
                yield (part,) + rest

    seen = set()
    for lam in rec(0, cols):
        if lam not in seen:
            seen.add(lam)
            yield lam


def canonicalize_cells(cells) -> frozenset[Cell]:
    """Translate a cell set so its minimal row and column are zero."""
    cells = frozenset(cells)
    if not cells:
        return cells
    dr = min(r for r, _ in cells)
    dc = min(c for _, c in cells)
    if dr == 0 and dc == 0:
        return cells
    return frozenset((r - dr, c - dc) for r, c in cells)


@dataclass(frozen=True, eq=False)
class SkewShape:
    """A skew shape lambda/mu; equality is translation-invariant cell equality."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer = check_partition(self.outer)
        inner = check_partition(self.inner)
        if len(inner) > len(outer):
            raise ShapeError(f"inner has more rows than outer: {inner} > {outer}")
        for i, m in enumerate(inner):
            if m > outer[i]:
                raise ShapeError(f"inner exceeds outer in row {i}: {inner} vs {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @cached_property
    def cells(self) -> frozenset[Cell]:
        raw = set()
        for i, lam in enumerate(self.outer):
            mu = self.inner[i] if i < len(self.inner) else 0
            for j in range(mu, lam):
                raw.add((i, j))
        return canonicalize_cells(raw)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def __eq__(self, other):
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"SkewShape({format_shape(self)!r})"

    def is_partition_shape(self) -> bool:
        return not self.inner or all(m == 0 for m in self.inner)


EMPTY_SHAPE = SkewShape((), ())


def shape_sort_key(shape: SkewShape):
    """Deterministic total order on shapes: by size, then by cell layout."""
    return (shape.size, tuple(sorted(shape.cells)))


def cells_of(shape: SkewShape) -> frozenset[Cell]:
    """Canonical cell set of a shape."""
    return shape.cells


def skew_from_cells(cells) -> SkewShape:
    """Recover the minimal lambda/mu realizing a cell set, or raise NotSkewError.

    Each nonempty row must be a contiguous column interval; the left and
    right endpoints must weakly decrease going down; and across a run of
    empty rows the upper row must end strictly right of where the lower
    row starts (l_i - 1 >= r_k).  The inner partition is chosen as small
    as monotonicity allows, which makes the representative unique.
    """
    cells = canonicalize_cells(cells)
    if not cells:
        return EMPTY_SHAPE
    nrows = max(r for r, _ in cells) + 1
    spans: list[tuple[int, int] | None] = [None] * nrows
    by_row: dict[int, list[int]] = {}
    for r, c in cells:
        by_row.setdefault(r, []).append(c)
    for r, cols in by_row.items():
        lo, hi = min(cols), max(cols)
        if hi - lo + 1 != len(cols):
            raise NotSkewError(f"row {r} is not a contiguous interval")
        spans[r] = (lo, hi)
    prev = None  # last nonempty (row, lo, hi)
    for r in range(nrows):
        if spans[r] is None:
            continue
        lo, hi = spans[r]
        if prev is not None:
            plo, phi, prow = prev
            if lo > plo or hi > phi:
                raise NotSkewError("row boundaries must weakly decrease downward")
            if r - prow > 1 and plo - 1 < hi:
                raise NotSkewError("empty row requires upper row strictly right of lower")
        prev = (lo, hi, r)
    lam = [0] * nrows
    mu = [0] * nrows
    for r in range(nrows - 1, -1, -1):
        if spans[r] is None:
            lam[r] = mu[r] = lam[r + 1]
        else:
            lo, hi = spans[r]
            lam[r] = hi + 1
            mu[r] = lo
    return SkewShape(tuple(lam), tuple(mu))


def rotate180(shape: SkewShape) -> SkewShape:
    """Rotate a shape half a turn; an involution on shapes."""
    cells = shape.cells
    if not cells:
        return EMPTY_SHAPE
    mr = max(r for r, _ in cells)
    mc = max(c for _, c in cells)
    return skew_from_cells((mr - r, mc - c) for r, c in cells)


def transpose(shape: SkewShape) -> SkewShape:
    """Reflect a shape across the main diagonal (conjugate shape)."""
    return skew_from_cells((c, r) for r, c in shape.cells)


def _neighbors(cell: Cell):
    r, c = cell
    return ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1))


def components_of_cells(cells) -> list[frozenset[Cell]]:
    """Edge-adjacency components of a cell set, as uncanonicalized cell sets."""
    cells = set(cells)
    out = []
    while cells:
        seed = cells.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            cur = frontier.pop()
            for nb in _neighbors(cur):
                if nb in cells:
                    cells.remove(nb)
                    comp.add(nb)
                    frontier.append(nb)
        out.append(frozenset(comp))
    return out


def is_connected_cells(cells) -> bool:
    cells = frozenset(cells)
    if not cells:
        return True
    return len(components_of_cells(cells)) == 1


def connected_components(shape: SkewShape) -> tuple[SkewShape, ...]:
    """Connected components as canonical shapes, in deterministic order."""
    comps = [skew_from_cells(c) for c in components_of_cells(shape.cells)]
    return tuple(sorted(comps, key=shape_sort_key))


def is_connected(shape: SkewShape) -> bool:
    return is_connected_cells(shape.cells)


def is_ribbon(shape: SkewShape) -> bool:
    """True when no four cells form a 2x2 block."""
    cells = shape.cells
    return not any(
        (r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) in cells
        for r, c in cells
    )


def ribbon_composition_of(shape: SkewShape) -> Composition:
    """Row lengths of a connected ribbon, top row first."""
    if shape.size == 0 or not is_connected(shape) or not is_ribbon(shape):
        raise NotConnectedRibbonError(f"not a connected ribbon: {shape!r}")
    cells = shape.cells
    nrows = max(r for r, _ in cells) + 1
    return tuple(sum(1 for rr, _ in cells if rr == r) for r in range(nrows))


def ribbon_shape(comp: Composition) -> SkewShape:
    """Canonical shape of a connected ribbon given by row lengths, top first.

    Consecutive rows overlap in exactly one column.
    """
    comp = tuple(int(a) for a in comp)
    if not comp or any(a <= 0 for a in comp):
        raise ShapeError(f"bad ribbon composition {comp!r}")
    k = len(comp)
    cells = set()
    start = 0  # column where the current row begins, built bottom-up
    for i in range(k - 1, -1, -1):
        for j in range(start, start + comp[i]):
            cells.add((i, j))
        start += comp[i] - 1
    return skew_from_cells(cells)


def diagonal(cell: Cell) -> int:
    """Diagonal index row - col; constant along each antidiagonal."""
    return cell[0] - cell[1]


def rim_ribbon(shape: SkewShape, side: str) -> list[Cell]:
    """Boundary ribbon of a connected shape, ordered southwest to northeast.

    side "NW": cells whose upper-left diagonal neighbor is absent;
    side "SE": cells whose lower-right diagonal neighbor is absent.
    Either rim meets every diagonal of the shape exactly once.
    """
    if not is_connected(shape):
        raise DisconnectedError(f"rim of a disconnected shape: {shape!r}")
    cells = shape.cells
    if side == "NW":
        rim = [(r, c) for r, c in cells if (r - 1, c - 1) not in cells]
    elif side == "SE":
        rim = [(r, c) for r, c in cells if (r + 1, c + 1) not in cells]
    else:
        raise ValueError(f"side must be 'NW' or 'SE', got {side!r}")
    rim.sort(key=lambda cell: cell[1] - cell[0])
    return rim


def ne_box(shape: SkewShape) -> Cell:
    """Rightmost cell of the top row."""
    cells = shape.cells
    if not cells:
        raise ShapeError("empty shape has no northeasternmost box")
    top = min(r for r, _ in cells)
    return (top, max(c for r, c in cells if r == top))


def sw_box(shape: SkewShape) -> Cell:
    """Bottom cell of the leftmost column."""
    cells = shape.cells
    if not cells:
        raise ShapeError("empty shape has no southwesternmost box")
    left = min(c for _, c in cells)
    return (max(r for r, c in cells if c == left), left)


def _placements(w: SkewShape, a: SkewShape, target: Cell) -> list[frozenset[Cell]]:
    if not is_connected(w):
        raise DisconnectedError("placed shape must be connected")
    wcells = w.cells
    acells = a.cells
    out = []
    seen = set()
    for r0, c0 in wcells:
        dr, dc = target[0] - r0, target[1] - c0
        placed = frozenset((r + dr, c + dc) for r, c in wcells)
        if placed not in seen and placed <= acells:
            seen.add(placed)
            out.append(placed)
    out.sort(key=lambda s: tuple(sorted(s)))
    return out


def lies_in_top(w: SkewShape, a: SkewShape) -> list[frozenset[Cell]]:
    """Translations of w inside a that contain a's northeasternmost box."""
    if not a.cells or not w.cells:
        return []
    return _placements(w, a, ne_box(a))


def lies_in_bottom(w: SkewShape, a: SkewShape) -> list[frozenset[Cell]]:
    """Translations of w inside a that contain a's southwesternmost box."""
    if not a.cells or not w.cells:
        return []
    return _placements(w, a, sw_box(a))


def translate_cells(cells, delta: Cell) -> frozenset[Cell]:
    dr, dc = delta
    return frozenset((r + dr, c + dc) for r, c in cells)


def parse_shape(text: str) -> SkewShape:
    """Parse "4,4,2,2/2,1", "3,1" or "0" (the empty partition)."""

    def parse_partition(part: str) -> Partition:
        part = part.strip()
        if part == "0" or part == "":
            return ()
        try:
            nums = tuple(int(tok.strip()) for tok in part.split(","))
        except ValueError as exc:
            raise ShapeError(f"cannot parse partition {part!r}") from exc
        if any(n <= 0 for n in nums):
            raise ShapeError(f"parts must be positive in {part!r}")
        return check_partition(nums)

    text = text.strip()
    if "/" in text:
        outer_text, inner_text = text.split("/", 1)
        return SkewShape(parse_partition(outer_text), parse_partition(inner_text))
    return SkewShape(parse_partition(text), ())


def format_shape(shape: SkewShape) -> str:
    """Inverse of parse_shape, on the minimal canonical representative."""
    canon = skew_from_cells(shape.cells)
    if not canon.outer:
        return "0"
    outer = ",".join(str(p) for p in canon.outer)
    if canon.inner:
        return f"{outer}/{','.join(str(p) for p in canon.inner)}"
    return outer


def connected_shapes(n: int):
    """Yield every connected skew shape with exactly n cells, canonically.

    Shapes are built as stacks of row intervals whose consecutive rows
    overlap in at least one column.
    """
    if n <= 0:
        return

    def rec(remaining, rows):
        # rows: list of (lo, hi) from top to bottom
        if remaining == 0:
            lo_min = min(lo for lo, _ in rows)
            yield tuple((lo - lo_min, hi - lo_min) for lo, hi in rows)
            return
        plo, phi = rows[-1]
        # next row: lo <= plo, hi <= phi, and overlap with the row above: hi >= plo
        for hi in range(plo, phi + 1):
            min_len = hi - plo + 1
            for length in range(min_len, remaining + 1):
                yield from rec(remaining - length, rows + [(hi - length + 1, hi)])

    for top_width in range(1, n + 1):
        for spans in rec(n - top_width, [(0, top_width - 1)]):
            cells = set()
            for r, (lo, hi) in enumerate(spans):
                for c in range(lo, hi + 1):
                    cells.add((r, c))
            yield skew_from_cells(cells)


def box_bounded_shapes(max_cells: int, box: int):
    """Distinct shapes lambda/mu with lambda in a box x box square, size <= max_cells.

    This is the finite family used by the exhaustive identity checks;
    translation classes of skew shapes are infinite in general because
    disconnected components admit arbitrarily wide gaps.
    """
    seen = set()
    for lam in partitions_in_box(box, box):
        for mu in _subpartitions(lam, max_deficit=max_cells):
            shape = SkewShape(lam, mu)
            if shape.cells not in seen:
                seen.add(shape.cells)
                yield shape


def _subpartitions(lam: Partition, max_deficit: int | None = None):
    """Partitions mu below lam, optionally with |lam| - |mu| <= max_deficit."""

    def rec(i, bound, deficit):
        if i == len(lam):
            yield ()
            return
        top = min(bound, lam[i])
        floor = 0 if max_deficit is None else max(0, lam[i] - (max_deficit - deficit))
        for part in range(top, floor - 1, -1):
            d = deficit + lam[i] - part
            if part == 0:
                if max_deficit is None or d + sum(lam[i + 1 :]) <= max_deficit:
                    yield ()
                continue
            for rest in rec(i + 1, part, d):
                yield (part,) + rest

    yield from rec(0, lam[0] if lam else 0, 0)
