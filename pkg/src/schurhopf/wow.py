"""W->O->W / W^O^W structures, amalgamation, composition, key ribbons.

A structure records a connected shape gamma together with two designated
translates of a connected shape W, one in the top (containing the
northeasternmost box) and one in the bottom, separated by at least one
diagonal, whose removal singly or jointly leaves connected shapes, with
the orientation-specific adjacency between O and the W copies, and with
W maximal on its diagonals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import hopf
from .shapes import (
    Cell,
    Composition,
    DisconnectedError,
    NotSkewError,
    SkewShape,
    canonicalize_cells,
    diagonal,
    is_connected,
    is_connected_cells,
    ne_box,
    rim_ribbon,
    ribbon_composition_of,
    shape_sort_key,
    skew_from_cells,
    sw_box,
    translate_cells,
)

RR = "RR"  # W -> O -> W (horizontal adjacency)
UU = "UU"  # W ^ O ^ W (vertical adjacency)


class StructureError(ValueError):
    """Candidate (gamma, W placements) violates the structure axioms."""


class InconsistentPlacementError(ValueError):
    """Grid propagation produced conflicting copy translations."""


def _try_shape(cells) -> SkewShape | None:
    try:
        return skew_from_cells(cells)
    except NotSkewError:
        return None


def _is_valid_connected_piece(cells) -> bool:
    return is_connected_cells(cells) and _try_shape(cells) is not None


def _extreme_box(cells, kind: str) -> Cell:
    if kind == "ne":
        top = min(r for r, _ in cells)
        return (top, max(c for r, c in cells if r == top))
    left = min(c for _, c in cells)
    return (max(r for r, c in cells if c == left), left)


@dataclass(frozen=True, eq=False)
class WowStructure:
    gamma: SkewShape
    orientation: str
    upper_w: frozenset[Cell]
    lower_w: frozenset[Cell]
    o_cells: frozenset[Cell] = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "o_cells", frozenset(self.gamma.cells - self.upper_w - self.lower_w)
        )

    @cached_property
    def w_shape(self) -> SkewShape:
        return skew_from_cells(self.upper_w)

    @cached_property
    def o_shape(self) -> SkewShape:
        return skew_from_cells(self.o_cells)

    @cached_property
    def amalg_shift(self) -> Cell:
        """Translation taking the lower W copy onto the upper one."""
        ur = min(r for r, _ in self.upper_w)
        uc = min(c for _, c in self.upper_w)
        lr = min(r for r, _ in self.lower_w)
        lc = min(c for _, c in self.lower_w)
        return (ur - lr, uc - lc)

    @cached_property
    def dot_shift(self) -> Cell:
        """Translation used by the shifted overlay; NW step for RR, SE for UU."""
        dr, dc = self.amalg_shift
        step = -1 if self.orientation == RR else 1
        return (dr + step, dc + step)

    def validate(self):
        gamma = self.gamma
        cells = gamma.cells
        if not is_connected(gamma):
            raise StructureError("gamma must be connected")
        if not (self.upper_w <= cells and self.lower_w <= cells):
            raise StructureError("W copies must lie inside gamma")
        upper = skew_from_cells(self.upper_w)
        lower = skew_from_cells(self.lower_w)
        if upper.cells != lower.cells:
            raise StructureError("the two W copies must be translates of one shape")
        if not is_connected(upper):
            raise StructureError("W must be connected")
        if ne_box(gamma) not in self.upper_w:
            raise StructureError("upper W must lie in the top of gamma")
        if sw_box(gamma) not in self.lower_w:
            raise StructureError("lower W must lie in the bottom of gamma")
        for removed in (self.upper_w, self.lower_w):
            if not _is_valid_connected_piece(cells - removed):
                raise StructureError("removing a W copy must leave a connected shape")
        if not _is_valid_connected_piece(self.o_cells):
            raise StructureError("O must be a connected shape")
        if min(diagonal(c) for c in self.lower_w) - max(
            diagonal(c) for c in self.upper_w
        ) < 2:
            raise StructureError("need a diagonal strictly between the W copies")
        if self.orientation not in (RR, UU):
            raise StructureError(f"unknown orientation {self.orientation!r}")
        if not _adjacency_holds(self.o_cells, self.upper_w, self.lower_w, self.orientation):
            raise StructureError("O / W adjacency fails for this orientation")

    def describe(self) -> str:
        from .shapes import format_shape

        arrow = "->" if self.orientation == RR else "^"
        ur, uc = min(self.upper_w)
        lr, lc = min(self.lower_w)
        return (
            f"W {arrow} O {arrow} W: gamma={format_shape(self.gamma)}; "
            f"W={format_shape(self.w_shape)}"
            f"@top({ur},{uc})/bottom({lr},{lc})"
        )

    def to_json(self):
        from .shapes import format_shape

        return {
            "gamma": format_shape(self.gamma),
            "orientation": self.orientation,
            "w": format_shape(self.w_shape),
            "upper_w": sorted(self.upper_w),
            "lower_w": sorted(self.lower_w),
            "o_cells": sorted(self.o_cells),
        }

    def __eq__(self, other):
        if not isinstance(other, WowStructure):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.gamma.cells, self.orientation, self.upper_w, self.lower_w)

    def __repr__(self):
        return f"WowStructure({self.describe()!r})"


def _adjacency_holds(o_cells, upper_w, lower_w, orientation) -> bool:
    if not o_cells:
        return False
    osw = _extreme_box(o_cells, "sw")
    one = _extreme_box(o_cells, "ne")
    r1, c1 = osw
    r2, c2 = one
    if orientation == RR:
        return (r1, c1 - 1) in lower_w and (r2, c2 + 1) in upper_w
    return (r1 + 1, c1) in lower_w and (r2 - 1, c2) in upper_w


def _connected_subsets(cells, anchor, max_size):
    """Connected subsets of cells containing anchor, each yielded once.

    Polynomial-delay enumeration: at each step the first frontier cell is
    either included or banned for the rest of the branch.
    """

    def rec(current: set, frontier: list, banned: set):
        yield frozenset(current)
        if len(current) >= max_size:
            return
        for idx, cand in enumerate(frontier):
            new_banned = banned | set(frontier[: idx + 1])
            current.add(cand)
            tail = frontier[idx + 1 :]
            tail_set = set(tail)
            grown = tail + [
                nb
                for nb in _cell_neighbors(cand)
                if nb in cells
                and nb not in current
                and nb not in new_banned
                and nb not in tail_set
            ]
            yield from rec(current, grown, new_banned)
            current.remove(cand)

    start = [nb for nb in _cell_neighbors(anchor) if nb in cells]
    yield from rec({anchor}, start, set())


def _cell_neighbors(cell: Cell):
    r, c = cell
    return ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1))


def detect_wow(gamma: SkewShape) -> list[WowStructure]:
    """All valid structures on gamma, largest W first.

    Candidate W placements are connected valid-shape subsets containing
    the extreme box whose removal leaves a connected shape; pairs of
    matching top and bottom placements are filtered through the axioms
    and then through maximality (no strictly larger W on the same
    diagonals with both placements intact).
    """
    if gamma.size == 0:
        return []
    if not is_connected(gamma):
        raise DisconnectedError("detect_wow requires a connected gamma")
    cells = gamma.cells
    max_w = (gamma.size - 1) // 2

    def placement_pool(anchor):
        pool: dict[frozenset, set[frozenset]] = {}
        for subset in _connected_subsets(cells, anchor, max_w):
            if _try_shape(subset) is None:
                continue
            if not _is_valid_connected_piece(cells - subset):
                continue
            pool.setdefault(canonicalize_cells(subset), set()).add(subset)
        return pool

    tops = placement_pool(ne_box(gamma))
    bottoms = placement_pool(sw_box(gamma))

    candidates = []
    for key in sorted(tops.keys() & bottoms.keys(), key=sorted):
        for t in sorted(tops[key], key=sorted):
            for b in sorted(bottoms[key], key=sorted):
                if min(diagonal(c) for c in b) - max(diagonal(c) for c in t) < 2:
                    continue
                o = cells - t - b
                if not _is_valid_connected_piece(o):
                    continue
                for orientation in (RR, UU):
                    if _adjacency_holds(o, t, b, orientation):
                        candidates.append((orientation, t, b))

    def valid_extensions(placed):
        """Supersets of placed on the same diagonals, both axioms 1-2 intact."""
        band = {
            c
            for c in cells
            if diagonal(c) in {diagonal(x) for x in placed} and c not in placed
        }
        extras = sorted(band)
        out = []
        for mask in range(1, 1 << len(extras)):
            extended = frozenset(placed | {extras[i] for i in range(len(extras)) if mask >> i & 1})
            if not is_connected_cells(extended) or _try_shape(extended) is None:
                continue
            if not _is_valid_connected_piece(cells - extended):
                continue
            out.append(extended)
        return out

    def maximal(t, b):
        bigger_tops = {canonicalize_cells(t2) for t2 in valid_extensions(t)}
        if not bigger_tops:
            return True
        bigger_bottoms = {canonicalize_cells(b2) for b2 in valid_extensions(b)}
        return not (bigger_tops & bigger_bottoms)

    out = []
    for orientation, t, b in candidates:
        if not maximal(t, b):
            continue
        structure = WowStructure(gamma, orientation, t, b)
        structure.validate()
        out.append(structure)
    out.sort(
        key=lambda s: (-len(s.upper_w), s.orientation, sorted(s.upper_w), sorted(s.lower_w))
    )
    return out


def amalgamate(
    a1: SkewShape,
    a2: SkewShape,
    w: SkewShape,
    top_placement: frozenset[Cell],
    bottom_placement: frozenset[Cell],
) -> SkewShape:
    """Overlay a1 and a2 with the W copies identified.

    top_placement is a copy of w in the top of a1 (in a1's canonical
    frame); bottom_placement a copy in the bottom of a2.  The overlap of
    the two cell sets must be exactly the identified W.
    """
    from .shapes import lies_in_bottom, lies_in_top

    if top_placement not in lies_in_top(w, a1):
        raise ValueError("w does not lie in the top of a1 at the given placement")
    if bottom_placement not in lies_in_bottom(w, a2):
        raise ValueError("w does not lie in the bottom of a2 at the given placement")
    dr = min(r for r, _ in top_placement) - min(r for r, _ in bottom_placement)
    dc = min(c for _, c in top_placement) - min(c for _, c in bottom_placement)
    moved = translate_cells(a2.cells, (dr, dc))
    union = a1.cells | moved
    if a1.cells & moved != top_placement:
        raise NotSkewError("amalgamation overlap is not exactly the W copy")
    return skew_from_cells(union)


def self_amalgam_cells(structure: WowStructure) -> frozenset[Cell]:
    """gamma || _W gamma with the first copy in gamma's own frame."""
    shifted = translate_cells(structure.gamma.cells, structure.amalg_shift)
    union = structure.gamma.cells | shifted
    if structure.gamma.cells & shifted != structure.upper_w:
        raise NotSkewError("self-amalgamation overlap is not exactly W")
    return frozenset(union)


def dot_w(a1: SkewShape, a2: SkewShape, structure: WowStructure) -> SkewShape:
    """Shifted overlay of two copies of structure.gamma.

    The second copy's lower W lands one diagonal step beyond the first
    copy's upper W (northwest for RR, southeast for UU).  The union may
    legitimately overlap away from the W copies.
    """
    if a1 != structure.gamma or a2 != structure.gamma:
        raise ValueError("dot_w arguments must be copies of structure.gamma")
    moved = translate_cells(structure.gamma.cells, structure.dot_shift)
    return skew_from_cells(structure.gamma.cells | moved)


def compose_layout(
    alpha: SkewShape, structure: WowStructure
) -> tuple[SkewShape, dict[Cell, Cell], Cell]:
    """Composition together with the copy translations and canonical shift.

    Returns (shape, offsets, shift): offsets maps each cell of alpha to
    the translation of its gamma copy in the raw frame (the copy for
    alpha's cell (0, 0) frame would sit at the origin), and shift is the
    translation applied to reach the returned canonical shape.
    """
    structure.validate()
    acells = alpha.cells
    if not acells:
        raise ValueError("alpha must be nonempty")
    dr_e, dc_e = (
        structure.amalg_shift if structure.orientation == RR else structure.dot_shift
    )
    dr_n, dc_n = (
        structure.dot_shift if structure.orientation == RR else structure.amalg_shift
    )
    offsets: dict[Cell, Cell] = {}
    for r, c in acells:
        offsets[(r, c)] = (c * dr_e - r * dr_n, c * dc_e - r * dc_n)
    for r, c in acells:
        east = (r, c + 1)
        if east in acells:
            got = (offsets[east][0] - offsets[(r, c)][0], offsets[east][1] - offsets[(r, c)][1])
            if got != (dr_e, dc_e):
                raise InconsistentPlacementError("east adjacency produced a conflict")
        north = (r - 1, c)
        if north in acells:
            got = (offsets[north][0] - offsets[(r, c)][0], offsets[north][1] - offsets[(r, c)][1])
            if got != (dr_n, dc_n):
                raise InconsistentPlacementError("north adjacency produced a conflict")
    union: set[Cell] = set()
    gcells = structure.gamma.cells
    for off in offsets.values():
        union |= translate_cells(gcells, off)
    shape = skew_from_cells(union)
    min_r = min(r for r, _ in union)
    min_c = min(c for _, c in union)
    return shape, offsets, (-min_r, -min_c)


def compose(alpha: SkewShape, structure: WowStructure) -> SkewShape:
    """One gamma copy per box of alpha, overlapped by the two overlay rules."""
    shape, _, _ = compose_layout(alpha, structure)
    return shape


@dataclass(frozen=True)
class KeyRibbons:
    top: Composition
    bottom: Composition
    size: int
    top_footprint: frozenset[Cell]
    bottom_footprint: frozenset[Cell]


def key_ribbons(structure: WowStructure) -> KeyRibbons:
    """Key ribbons of gamma, read off the rims of gamma || _W gamma.

    The footprints are the ribbons mapped into gamma's own frame: the
    amalgam ribbon lies inside one of the two copies in each of the four
    orientation/side cases.
    """
    structure.validate()
    amalgam = self_amalgam_cells(structure)
    amalgam_shape = skew_from_cells(amalgam)
    shift = structure.amalg_shift
    o1 = structure.o_cells
    o2 = translate_cells(o1, shift)

    def extract(side: str, start_after_o1: bool):
        rim = rim_ribbon(amalgam_shape, side)
        # rim cells are produced in the amalgam's canonical frame; map back
        min_r = min(r for r, _ in amalgam)
        min_c = min(c for _, c in amalgam)
        rim = [(r + min_r, c + min_c) for r, c in rim]
        idx_o1 = [i for i, c in enumerate(rim) if c in o1]
        idx_o2 = [i for i, c in enumerate(rim) if c in o2]
        if not idx_o1 or not idx_o2:
            raise StructureError("O leaves no cells on the rim")
        if start_after_o1:
            start, end = idx_o1[-1] + 1, idx_o2[-1]
        else:
            start, end = idx_o1[0], idx_o2[0] - 1
        return rim[start : end + 1]

    if structure.orientation == RR:
        top_cells = extract("NW", True)
        bottom_cells = extract("SE", False)
        top_fp = translate_cells(top_cells, (-shift[0], -shift[1]))
        bottom_fp = frozenset(bottom_cells)
    else:
        top_cells = extract("NW", False)
        bottom_cells = extract("SE", True)
        top_fp = frozenset(top_cells)
        bottom_fp = translate_cells(bottom_cells, (-shift[0], -shift[1]))
    if not (top_fp <= structure.gamma.cells and bottom_fp <= structure.gamma.cells):
        raise StructureError("key ribbon footprint fell outside gamma")
    top = ribbon_composition_of(skew_from_cells(top_cells))
    bottom = ribbon_composition_of(skew_from_cells(bottom_cells))
    if sum(top) != sum(bottom) or len(top) != len(bottom):
        raise StructureError("key ribbons disagree in size or row count")
    return KeyRibbons(top, bottom, sum(top), top_fp, bottom_fp)


@dataclass(frozen=True)
class LooseEnds:
    found: bool
    witnesses: tuple[tuple[Composition, frozenset[Cell]], ...]

    def __bool__(self):
        return self.found


def has_loose_end_ribbons(structure: WowStructure) -> LooseEnds:
    """Removable key-size ribbons positioned beyond the key footprints.

    RR: a left-removable ribbon beginning strictly left of the top key
    footprint (in NW rim order) or a right-removable one ending strictly
    right of the bottom key footprint; UU mirrors the comparisons.
    """
    keys = key_ribbons(structure)
    n = keys.size
    gamma = structure.gamma
    nw = {cell: i for i, cell in enumerate(rim_ribbon(gamma, "NW"))}
    se = {cell: i for i, cell in enumerate(rim_ribbon(gamma, "SE"))}

    def window(index_map, cells):
        spots = [index_map[c] for c in cells]
        return min(spots), max(spots)

    top_window = window(nw, keys.top_footprint)
    bottom_window = window(se, keys.bottom_footprint)
    witnesses = []
    for comp, cells in hopf.removable_ribbons(gamma, n, "left"):
        start, end = window(nw, cells)
        if structure.orientation == RR:
            if start < top_window[0]:
                witnesses.append((comp, cells))
        else:
            if end > top_window[1]:
                witnesses.append((comp, cells))
    for comp, cells in hopf.removable_ribbons(gamma, n, "right"):
        start, end = window(se, cells)
        if structure.orientation == RR:
            if end > bottom_window[1]:
                witnesses.append((comp, cells))
        else:
            if start < bottom_window[0]:
                witnesses.append((comp, cells))
    return LooseEnds(bool(witnesses), tuple(witnesses))


def rotate_structure(structure: WowStructure) -> WowStructure:
    """Half-turn of the whole structure; the W roles swap ends.

    The literal adjacency conditions are re-derived on the rotated data;
    rotation carries each condition onto its partner, so the orientation
    label is preserved.
    """
    cells = structure.gamma.cells
    mr = max(r for r, _ in cells)
    mc = max(c for _, c in cells)

    def rot(cs):
        return frozenset((mr - r, mc - c) for r, c in cs)

    gamma2 = skew_from_cells(rot(cells))
    upper2 = rot(structure.lower_w)
    lower2 = rot(structure.upper_w)
    o2 = rot(structure.o_cells)
    for orientation in (structure.orientation, RR, UU):
        if _adjacency_holds(o2, upper2, lower2, orientation):
            out = WowStructure(gamma2, orientation, upper2, lower2)
            out.validate()
            return out
    raise StructureError("rotated structure satisfies neither orientation")


def wow_catalog(max_size: int):
    """All structures on connected gammas with at most max_size cells."""
    from .shapes import connected_shapes

    out = []
    for n in range(1, max_size + 1):
        for gamma in sorted(connected_shapes(n), key=shape_sort_key):
            out.extend(detect_wow(gamma))
    return out
