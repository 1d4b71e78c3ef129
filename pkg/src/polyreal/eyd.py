"""Extended Young diagrams and their assignment maps.

An extended Young diagram of charge k is a weakly increasing integer sequence
(y_t)_{t>=0} with y_t <= k and y_t = k for large t; column t has depth
k - y_t.  Corners live on diagonals d = x + y: a concave corner sits at
(0, y_0) and at every (t+1, y_{t+1}) with y_t < y_{t+1}; the matching convex
corner sits at (t+1, y_t).  The assignment map sends a diagram to the sum of
x_{s + P^k(x+y) + min(k-y, x), c(x+y)} over concave corners minus the same
expression over convex corners, with c the folded color.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from .root_data import AdaptedSequence, RootDataError, fold, p_table
from .forms import LinearForm


class EYDError(ValueError):
    """Invalid extended Young diagram data."""


class Corner(NamedTuple):
    kind: str  # "concave" or "convex"
    x: int
    y: int

    @property
    def diagonal(self) -> int:
        return self.x + self.y


@dataclass(frozen=True)
class ExtendedYoungDiagram:
    """Charge plus the stored column values, trimmed of trailing charges."""

    charge: int
    ys: Tuple[int, ...]

    def y(self, t: int) -> int:
        return self.ys[t] if t < len(self.ys) else self.charge

    def boxes(self) -> int:
        return sum(self.charge - v for v in self.ys)

    def to_json(self) -> dict:
        return {"charge": self.charge, "ys": list(self.ys)}

    @classmethod
    def from_json(cls, data: dict) -> "ExtendedYoungDiagram":
        return make_eyd(int(data["charge"]), [int(v) for v in data["ys"]])


def make_eyd(charge: int, ys: Sequence[int]) -> ExtendedYoungDiagram:
    """Validate and canonicalize column values."""
    vals = [int(v) for v in ys]
    for a, b in zip(vals, vals[1:]):
        if a > b:
            raise EYDError(f"column values must be weakly increasing, got {vals}")
    if vals and vals[-1] > charge:
        raise EYDError(f"column values must not exceed the charge {charge}")
    while vals and vals[-1] == charge:
        vals.pop()
    return ExtendedYoungDiagram(charge, tuple(vals))


def corners(T: ExtendedYoungDiagram) -> List[Corner]:
    """All corners ordered by x, concave before convex at equal x."""
    out = [Corner("concave", 0, T.y(0))]
    for t in range(len(T.ys)):
        if T.y(t) < T.y(t + 1):
            out.append(Corner("concave", t + 1, T.y(t + 1)))
            out.append(Corner("convex", t + 1, T.y(t)))
    return out


def corner_address(
    seq: AdaptedSequence, charge: int, x: int, y: int, fold_kind: str, s: int
) -> Tuple[int, int]:
    """The (occurrence, color) pair a corner contributes to the assignment."""
    d = x + y
    occ = s + p_table(seq, fold_kind, charge, d) + min(charge - y, x)
    return occ, fold(fold_kind, seq.root_system.n, d)


def _assign(
    seq: AdaptedSequence, T: ExtendedYoungDiagram, s: int, fold_kind: str
) -> LinearForm:
    total = LinearForm.zero()
    for c in corners(T):
        occ, color = corner_address(seq, T.charge, c.x, c.y, fold_kind, s)
        term = LinearForm.x(occ, color)
        total = total + term if c.kind == "concave" else total - term
    return total


def _require_family(seq: AdaptedSequence, family: str) -> None:
    fam = seq.root_system.algebra.family
    if fam != family:
        raise RootDataError(f"assignment needs family {family}, got {fam}")


def assign_a1(seq: AdaptedSequence, T: ExtendedYoungDiagram, s: int) -> LinearForm:
    """Assignment map for the cyclic family, folding diagonals with period n."""
    _require_family(seq, "A1")
    return _assign(seq, T, s, "overline")


def assign_d2(seq: AdaptedSequence, T: ExtendedYoungDiagram, s: int) -> LinearForm:
    """Assignment map for the D2 family, folding diagonals with period 2n-2."""
    _require_family(seq, "D2")
    return _assign(seq, T, s, "pi")


def toggle_concave(T: ExtendedYoungDiagram, corner: Corner) -> ExtendedYoungDiagram:
    """Add a box at a concave corner."""
    if corner not in corners(T) or corner.kind != "concave":
        raise EYDError(f"{corner} is not a concave corner of {T}")
    vals = list(T.ys)
    while len(vals) <= corner.x:
        vals.append(T.charge)
    vals[corner.x] -= 1
    return make_eyd(T.charge, vals)


def toggle_convex(T: ExtendedYoungDiagram, corner: Corner) -> ExtendedYoungDiagram:
    """Remove the box at a convex corner."""
    if corner not in corners(T) or corner.kind != "convex":
        raise EYDError(f"{corner} is not a convex corner of {T}")
    vals = list(T.ys)
    vals[corner.x - 1] += 1
    return make_eyd(T.charge, vals)


def _partitions(m: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def enumerate_eyd(charge: int, max_boxes: int) -> List[ExtendedYoungDiagram]:
    """All diagrams of the given charge with at most max_boxes boxes."""
    out = []
    for m in range(max_boxes + 1):
        for depths in _partitions(m, m):
            out.append(make_eyd(charge, [charge - d for d in depths]))
    return out


def render_eyd(T: ExtendedYoungDiagram) -> str:
    """ASCII picture, top row at height charge, one cell per box."""
    if not T.ys:
        return "(empty)"
    lines = []
    for level in range(T.charge, min(T.ys), -1):
        width = sum(1 for v in T.ys if v <= level - 1)
        lines.append("[]" * width + f"   y={level}..{level - 1}")
    return "\n".join(lines)
