"""Structure-preserving decompositions between the partition families.

Three reversible constructions connect the families, and each carries a
rational weight along with it:

* ``inflate`` / ``contract``: a connected partition is exactly a
  no-neighbor connected base whose atoms have been widened into runs of
  consecutive atoms.  ``contract`` reads the runs of equal block index
  off the rgs; their lengths form the composition.

* ``cover_decompose`` / ``cover_assemble``: an arbitrary partition is
  exactly a noncrossing cover together with one connected piece per
  cover block, embedded order-preservingly.

* ``gap_decompose`` / ``gap_assemble``: splitting off the cover block
  that contains atom 1 leaves a connected core and one arbitrary
  partition per gap between consecutive core atoms (the last gap runs to
  atom n; gaps may be empty).

Weights start from an assignment on the purely crossing family (weight 1
where unassigned) and are transported outward: a no-neighbor connected
partition either is purely crossing already or arises from one by
adjoining atom n to the block of atom 1; a connected partition reads the
weight of its contracted base; an arbitrary partition multiplies the
weights of its cover pieces, the empty partition weighing 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .partition import Partition

_ONE = Fraction(1)


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive interval lengths."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("a composition needs at least one part")
        for k in self.parts:
            if not isinstance(k, int) or isinstance(k, bool) or k < 1:
                raise ValueError(f"composition part {k!r} is not a positive integer")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def intervals(self) -> list[range]:
        """The consecutive runs of atoms, one per part."""
        out = []
        start = 1
        for k in self.parts:
            out.append(range(start, start + k))
            start += k
        return out


@dataclass(frozen=True)
class PcPlusCase:
    """Outcome of :func:`pc_plus_decompose`.

    ``adjoined`` is False when the input is purely crossing itself (then
    ``base`` is the input); True when the input arises from the purely
    crossing ``base`` by adjoining the last atom to the block of atom 1.
    """

    adjoined: bool
    base: Partition


@dataclass(frozen=True)
class CoverDecomposition:
    """A noncrossing cover plus one connected piece per cover block, the
    piece sizes matching the block sizes."""

    cover: Partition
    pieces: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not self.cover.is_noncrossing():
            raise ValueError(f"cover {self.cover} is crossing")
        if len(self.pieces) != len(self.cover.blocks):
            raise ValueError(
                f"{len(self.pieces)} pieces for {len(self.cover.blocks)} cover blocks"
            )
        for block, piece in zip(self.cover.blocks, self.pieces):
            if piece.n != len(block):
                raise ValueError(
                    f"piece of size {piece.n} against cover block of size {len(block)}"
                )
            if not piece.is_connected():
                raise ValueError(f"piece {piece} is not connected")

    @property
    def n(self) -> int:
        return self.cover.n


@dataclass(frozen=True)
class GapDecomposition:
    """A connected core plus one (possibly empty) partition per core atom,
    filling the gap to the next core atom (the last gap runs to atom n)."""

    core: Partition
    gaps: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, "gaps", tuple(self.gaps))
        if self.core.n < 1:
            raise ValueError("core must have at least one atom")
        if not self.core.is_connected():
            raise ValueError(f"core {self.core} is not connected")
        if len(self.gaps) != self.core.n:
            raise ValueError(f"{len(self.gaps)} gaps for a core of {self.core.n} atoms")

    @property
    def n(self) -> int:
        return self.core.n + sum(g.n for g in self.gaps)


# -- the no-neighbor connected family ---------------------------------


def adjoin_last_atom(sigma: Partition) -> Partition:
    """Append atom n + 1 and put it in the block of atom 1."""
    if sigma.n < 1:
        raise ValueError("need at least one atom to adjoin to")
    blocks = [list(b) for b in sigma.blocks]
    blocks[0].append(sigma.n + 1)
    return Partition(sigma.n + 1, blocks)


def pc_plus_decompose(pi: Partition) -> PcPlusCase:
    """Split a no-neighbor connected partition on whether atoms 1 and n
    share a block.  If they do not, the partition is purely crossing; if
    they do, dropping atom n leaves a purely crossing partition one size
    down.  Undefined on a single atom."""
    if pi.n < 2:
        raise ValueError("decomposition needs at least two atoms")
    if not pi.is_pc_plus():
        raise ValueError(f"{pi} is not connected or has a block with adjacent atoms")
    if pi.rgs[-1] != 0:
        return PcPlusCase(adjoined=False, base=pi)
    return PcPlusCase(adjoined=True, base=pi.restrict(range(1, pi.n)))


# -- connected <-> (no-neighbor connected base, composition) ----------


def inflate(base: Partition, comp: Composition) -> Partition:
    """Widen the j-th atom of the base into ``comp.parts[j]`` consecutive
    atoms; blocks become unions of the corresponding runs.  The result is
    connected, and every connected partition arises exactly once."""
    if not base.is_pc_plus():
        raise ValueError(f"base {base} is not in the no-neighbor connected family")
    if len(comp.parts) != base.n:
        raise ValueError(
            f"composition has {len(comp.parts)} parts for {base.n} base atoms"
        )
    runs = comp.intervals()
    blocks = [[a for j in block for a in runs[j - 1]] for block in base.blocks]
    return Partition(comp.n, blocks)


def contract(pi: Partition) -> tuple[Partition, Composition]:
    """Inverse of :func:`inflate`: collapse the maximal runs of atoms that
    lie inside one block.  Requires a connected input."""
    if not pi.is_connected() or pi.n < 1:
        raise ValueError(f"{pi} is not connected")
    values = []
    lengths = []
    for v in pi.rgs:
        if values and values[-1] == v:
            lengths[-1] += 1
        else:
            values.append(v)
            lengths.append(1)
    return Partition.from_rgs(values), Composition(tuple(lengths))


# -- arbitrary <-> (noncrossing cover, connected pieces) --------------


def cover_decompose(pi: Partition) -> CoverDecomposition:
    """Split a partition into its noncrossing cover and the connected
    restriction to each cover block."""
    cover = pi.noncrossing_cover()
    pieces = tuple(pi.restrict(block) for block in cover.blocks)
    return CoverDecomposition(cover, pieces)


def cover_assemble(dec: CoverDecomposition) -> Partition:
    """Embed each piece into its cover block order-preservingly and take
    the union of the resulting blocks."""
    blocks = []
    for block, piece in zip(dec.cover.blocks, dec.pieces):
        for piece_block in piece.blocks:
            blocks.append([block[a - 1] for a in piece_block])
    return Partition(dec.n, blocks)


# -- arbitrary <-> (connected core, gap partitions) -------------------


def gap_decompose(pi: Partition) -> GapDecomposition:
    """Split off the cover block containing atom 1 as the connected core;
    the remaining atoms fall into the gaps between consecutive core atoms
    and keep their blocks, relabeled to start at 1."""
    if pi.n < 1:
        raise ValueError("ground set must be nonempty")
    anchor = pi.noncrossing_cover().blocks[0]
    core = pi.restrict(anchor)
    gaps = []
    for j, s in enumerate(anchor):
        end = anchor[j + 1] - 1 if j + 1 < len(anchor) else pi.n
        gaps.append(pi.restrict(range(s + 1, end + 1)))
    return GapDecomposition(core, tuple(gaps))


def gap_assemble(dec: GapDecomposition) -> Partition:
    """Inverse of :func:`gap_decompose`: lay out core atoms and gap blocks
    left to right and undo the relabeling."""
    positions = []
    p = 0
    for j in range(dec.core.n):
        p += 1
        positions.append(p)
        p += dec.gaps[j].n
    blocks = [[positions[a - 1] for a in block] for block in dec.core.blocks]
    for j, gap in enumerate(dec.gaps):
        offset = positions[j]
        for block in gap.blocks:
            blocks.append([a + offset for a in block])
    return Partition(p, blocks)


# -- weights ----------------------------------------------------------


class WeightAssignment:
    """Rational weights on purely crossing partitions; unassigned members
    weigh 1.  ``w[pi]`` performs the defaulted lookup.

    The JSON form is a list of ``{"partition": "1,3|2,4", "weight":
    "7/2"}`` entries, weights as exact fraction strings.
    """

    __slots__ = ("_weights",)

    def __init__(self, weights=None):
        table = {}
        if weights:
            entries = weights.items() if hasattr(weights, "items") else weights
            for pi, value in entries:
                if not isinstance(pi, Partition) or not pi.is_purely_crossing():
                    raise ValueError(f"{pi} is not a purely crossing partition")
                if isinstance(value, float):
                    raise TypeError("float weights are not allowed; use Fraction or str")
                table[pi] = Fraction(value)
        self._weights = table

    def __getitem__(self, pi: Partition) -> Fraction:
        return self._weights.get(pi, _ONE)

    def __len__(self) -> int:
        return len(self._weights)

    def __contains__(self, pi) -> bool:
        return pi in self._weights

    def items(self):
        """Assigned entries, ordered by partition for deterministic output."""
        return sorted(self._weights.items(), key=lambda kv: (kv[0].n, kv[0].rgs))

    def to_json(self) -> list[dict]:
        return [
            {"partition": str(pi), "weight": str(value)} for pi, value in self.items()
        ]

    @classmethod
    def from_json(cls, data) -> "WeightAssignment":
        entries = []
        for item in data:
            try:
                text, value = item["partition"], item["weight"]
            except (TypeError, KeyError) as exc:
                raise ValueError(
                    f"weight entry needs 'partition' and 'weight': {item!r}"
                ) from exc
            if isinstance(value, float):
                raise ValueError(
                    f"weight {value!r} is a float; write it as a fraction string"
                )
            entries.append((Partition.parse(text), Fraction(value)))
        return cls(entries)


@cache
def _pc_plus_weight_key(pi):
    # The purely crossing partition whose assigned weight this member
    # reads, or None for the fixed weight 1 of the single atom.
    if pi.n == 1:
        if not pi.is_pc_plus():
            raise ValueError(f"{pi} is not in the no-neighbor connected family")
        return None
    return pc_plus_decompose(pi).base


@cache
def _connected_weight_key(pi):
    base, _ = contract(pi)
    return _pc_plus_weight_key(base)


@cache
def _partition_weight_keys(pi):
    if pi.n == 0:
        return ()
    cover = pi.noncrossing_cover()
    return tuple(_connected_weight_key(pi.restrict(b)) for b in cover.blocks)


def pc_plus_weight(pi: Partition, w: WeightAssignment) -> Fraction:
    """Weight of a no-neighbor connected partition: 1 for the single atom,
    otherwise the assigned weight of its purely crossing base."""
    key = _pc_plus_weight_key(pi)
    return _ONE if key is None else w[key]


def connected_weight(pi: Partition, w: WeightAssignment) -> Fraction:
    """Weight of a connected partition: the weight of its contracted base."""
    key = _connected_weight_key(pi)
    return _ONE if key is None else w[key]


def partition_weight(pi: Partition, w: WeightAssignment) -> Fraction:
    """Weight of an arbitrary partition: the product over its cover pieces;
    the empty partition weighs 1."""
    result = _ONE
    for key in _partition_weight_keys(pi):
        if key is not None:
            result *= w[key]
    return result
