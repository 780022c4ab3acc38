"""Set partitions of {1, ..., n} in canonical form.

A partition is stored both as a tuple of blocks (blocks sorted by their
minimum, atoms ascending inside each block) and as its restricted-growth
string ``rgs``, where ``rgs[i]`` is the index of the block containing atom
``i + 1`` and blocks are numbered in order of first appearance.  The two
forms are mutually derivable; the rgs is the canonical key used for
hashing and ordering.

The predicates defined here classify a partition into the families the
rest of the package enumerates and transforms: noncrossing, connected
(no proper subinterval of the ground set is a union of blocks), the
no-neighbor connected family, and the purely crossing family (connected,
no block contains two adjacent atoms, and the first and last atoms are
in different blocks).

>>> pi = Partition.parse("1,3|2,4")
>>> pi.is_noncrossing(), pi.is_connected(), pi.is_purely_crossing()
(False, True, True)
>>> str(pi.noncrossing_cover())
'1,2,3,4'
"""

import re
from functools import cache


class PartitionError(ValueError):
    """Raised when block data does not describe a partition of {1, ..., n}."""


class ParseError(PartitionError):
    """Raised on malformed partition text; ``pos`` is the offset into ``text``."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(message)
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"\d+|[,|]")


def _canonical_blocks(n: int, raw_blocks) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Validate and canonicalize raw block data; return (blocks, rgs)."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise PartitionError(f"ground set size {n!r} is not an integer")
    if n < 0:
        raise PartitionError(f"ground set size {n} is negative")
    seen = [False] * (n + 1)
    cleaned = []
    for block in raw_blocks:
        atoms = list(block)
        if not atoms:
            raise PartitionError("empty block")
        for a in atoms:
            if not isinstance(a, int) or isinstance(a, bool):
                raise PartitionError(f"atom {a!r} is not an integer")
            if a < 1 or a > n:
                raise PartitionError(f"atom {a} out of range 1..{n}")
            if seen[a]:
                raise PartitionError(f"atom {a} appears in more than one block")
            seen[a] = True
        cleaned.append(tuple(sorted(atoms)))
    for a in range(1, n + 1):
        if not seen[a]:
            raise PartitionError(f"atom {a} uncovered")
    cleaned.sort()
    index = {}
    for bi, block in enumerate(cleaned):
        for a in block:
            index[a] = bi
    rgs = tuple(index[a] for a in range(1, n + 1))
    return tuple(cleaned), rgs


class Partition:
    """A set partition of {1, .., n}; immutable, hashable, totally ordered.

    Construct from blocks (any iterable of iterables), a restricted-growth
    string, or the text format ``"1,3|2,4"``.  The empty partition of the
    empty ground set exists as ``Partition.empty()``; it only occurs as a
    gap filler in decompositions, never in enumeration streams.
    """

    __slots__ = ("n", "blocks", "rgs", "_hash")

    def __init__(self, n: int, blocks):
        self.blocks, self.rgs = _canonical_blocks(n, blocks)
        self.n = n
        self._hash = hash((n, self.rgs))

    @classmethod
    def _raw(cls, n, blocks, rgs):
        # Internal fast path for data already in canonical form.
        self = object.__new__(cls)
        self.n = n
        self.blocks = blocks
        self.rgs = rgs
        self._hash = hash((n, rgs))
        return self

    @classmethod
    def from_rgs(cls, rgs) -> "Partition":
        """Build from a restricted-growth string (``rgs[0] == 0``, each value
        at most one more than the running maximum)."""
        blocks: list[list[int]] = []
        for i, b in enumerate(rgs):
            if b == len(blocks):
                blocks.append([i + 1])
            elif 0 <= b < len(blocks):
                blocks[b].append(i + 1)
            else:
                raise PartitionError(
                    f"value {b} at position {i} breaks restricted growth"
                )
        return cls._raw(len(rgs), tuple(tuple(b) for b in blocks), tuple(rgs))

    @classmethod
    def empty(cls) -> "Partition":
        """The partition of the empty ground set."""
        return cls._raw(0, (), ())

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        """The finest partition: every atom alone."""
        return cls.from_rgs(tuple(range(n)))

    @classmethod
    def whole(cls, n: int) -> "Partition":
        """The coarsest partition: one block {1, .., n}."""
        if n < 1:
            raise PartitionError("whole(n) needs n >= 1")
        return cls.from_rgs((0,) * n)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the text format ``"1,3|2,4"``.

        Atoms are comma separated inside a block, blocks are separated by
        ``|``; whitespace around tokens is ignored and the ground set is
        1 .. max atom.  An empty (or all-space) string parses to the empty
        partition.  Reports the offset of the first offending character on
        bad syntax.

        >>> Partition.parse("1,3|2,4").blocks
        ((1, 3), (2, 4))
        """
        if not text.strip():
            return cls.empty()
        blocks: list[list[int]] = []
        current: list[int] = []
        expect_atom = True
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ParseError("unexpected character", text, pos)
            tok = m.group()
            if tok.isdigit():
                if not expect_atom:
                    raise ParseError("expected ',' or '|'", text, pos)
                if int(tok) == 0:
                    raise ParseError("atom numbers start at 1", text, pos)
                current.append(int(tok))
                expect_atom = False
            elif tok == ",":
                if expect_atom:
                    raise ParseError("expected an atom number", text, pos)
                expect_atom = True
            else:
                if expect_atom:
                    raise ParseError("expected an atom number", text, pos)
                blocks.append(current)
                current = []
                expect_atom = True
            pos = m.end()
        if expect_atom:
            raise ParseError("expected an atom number", text, pos)
        blocks.append(current)
        n = max(a for b in blocks for a in b)
        return cls(n, blocks)

    @classmethod
    def from_json(cls, obj) -> "Partition":
        """Build from the JSON form ``{"n": 4, "blocks": [[1, 3], [2, 4]]}``."""
        try:
            n = obj["n"]
            blocks = obj["blocks"]
        except (TypeError, KeyError) as exc:
            raise PartitionError(f"partition JSON needs 'n' and 'blocks': {obj!r}") from exc
        return cls(n, blocks)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    def text(self) -> str:
        """Canonical text form; inverse of :meth:`parse`."""
        return "|".join(",".join(str(a) for a in block) for block in self.blocks)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        if self.n == 0:
            return "Partition.empty()"
        return f"Partition.parse({self.text()!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.n == other.n and self.rgs == other.rgs

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return (self.n, self.rgs) < (other.n, other.rgs)

    def __le__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return (self.n, self.rgs) <= (other.n, other.rgs)

    # -- predicates ---------------------------------------------------

    def same_block(self, i: int, j: int) -> bool:
        for a in (i, j):
            if not 1 <= a <= self.n:
                raise PartitionError(f"atom {a} out of range 1..{self.n}")
        return self.rgs[i - 1] == self.rgs[j - 1]

    def splits(self, atoms) -> bool:
        """True iff ``atoms`` is a union of blocks (equivalently: every block
        meeting ``atoms`` lies inside it).  The empty set and the whole
        ground set always split.

        >>> Partition.parse("1,3|2,5|4,6").splits({4, 6})
        True
        """
        s = set()
        for a in atoms:
            if not isinstance(a, int) or isinstance(a, bool):
                raise PartitionError(f"atom {a!r} is not an integer")
            if a < 1 or a > self.n:
                raise PartitionError(f"atom {a} out of range 1..{self.n}")
            s.add(a)
        if not s:
            return True
        for block in self.blocks:
            hit = s.intersection(block)
            if hit and len(hit) != len(block):
                return False
        return True

    def is_noncrossing(self) -> bool:
        """True iff no atoms i < j < k < l have i, k in one block and j, l
        in a different block."""
        return _rgs_noncrossing(self.rgs)

    def has_neighbors(self) -> bool:
        """True iff some block contains two adjacent atoms k, k + 1."""
        rgs = self.rgs
        return any(rgs[i] == rgs[i + 1] for i in range(len(rgs) - 1))

    def is_connected(self) -> bool:
        """True iff no proper subinterval {p+1, .., p+q} (q < n) splits the
        partition.  Vacuously true for n <= 1."""
        return _rgs_connected(self.rgs)

    def is_pc_plus(self) -> bool:
        """Connected with no block containing adjacent atoms.  The one-atom
        partition qualifies; the empty partition does not."""
        if self.n < 1:
            return False
        return not self.has_neighbors() and self.is_connected()

    def is_purely_crossing(self) -> bool:
        """In the no-neighbor connected family, with atoms 1 and n in
        different blocks.  False for n <= 1: the one-atom partition keeps
        1 and n together by convention."""
        if self.n == 0:
            return False
        return self.rgs[-1] != 0 and self.is_pc_plus()

    # -- operations ---------------------------------------------------

    def noncrossing_cover(self) -> "Partition":
        """The least noncrossing partition lying above this one, obtained by
        merging crossing block pairs until none remain.

        >>> str(Partition.parse("1,3|2,4|5").noncrossing_cover())
        '1,2,3,4|5'
        """
        return _cover(self)

    def rotate(self, r: int) -> "Partition":
        """Relabel every atom i to ((i - 1 + r) mod n) + 1 and recanonicalize."""
        if self.n == 0:
            return self
        r %= self.n
        if r == 0:
            return self
        n = self.n
        return Partition(n, [[(a - 1 + r) % n + 1 for a in b] for b in self.blocks])

    def restrict(self, atoms) -> "Partition":
        """Intersect blocks with ``atoms`` and relabel order-preservingly to
        {1, .., len(atoms)}.  Restricting to no atoms gives the empty
        partition."""
        kept = sorted(set(atoms))
        if not kept:
            return Partition.empty()
        for a in kept:
            if not isinstance(a, int) or isinstance(a, bool):
                raise PartitionError(f"atom {a!r} is not an integer")
            if a < 1 or a > self.n:
                raise PartitionError(f"atom {a} out of range 1..{self.n}")
        relabel = {a: k + 1 for k, a in enumerate(kept)}
        keep = set(kept)
        new_blocks = []
        for block in self.blocks:
            nb = [relabel[a] for a in block if a in keep]
            if nb:
                new_blocks.append(nb)
        return Partition(len(kept), new_blocks)

    def is_refinement_of(self, other: "Partition") -> bool:
        """True iff every block of ``other`` is a union of blocks of self."""
        if not isinstance(other, Partition):
            raise TypeError("expected a Partition")
        if self.n != other.n:
            raise PartitionError("partitions of different ground sets")
        return all(self.splits(block) for block in other.blocks)


# -- rgs-level predicate kernels (shared with the enumeration module) --


def _rgs_noncrossing(rgs) -> bool:
    """Stack check on the arc diagram joining consecutive atoms of a block."""
    n = len(rgs)
    nxt = [-1] * n
    seen: dict[int, int] = {}
    for i in range(n - 1, -1, -1):
        b = rgs[i]
        nxt[i] = seen.get(b, -1)
        seen[b] = i
    stack: list[int] = []
    closed = set()
    for i in range(n):
        if rgs[i] in closed:
            if not stack or stack[-1] != i:
                return False
            stack.pop()
        if nxt[i] != -1:
            stack.append(nxt[i])
            closed.add(rgs[i])
    return True


def _rgs_connected(rgs) -> bool:
    """Scan for a proper subinterval that is a union of blocks."""
    n = len(rgs)
    if n <= 1:
        return True
    nb = 0
    for v in rgs:
        if v >= nb:
            nb = v + 1
    first = [-1] * nb
    last = [0] * nb
    for i in range(n):
        b = rgs[i]
        if first[b] < 0:
            first[b] = i
        last[b] = i
    for a in range(n):
        if first[rgs[a]] != a:
            continue
        # Grow the interval starting at a until it is block-closed or leaks.
        b = last[rgs[a]]
        i = a + 1
        ok = True
        while i <= b:
            v = rgs[i]
            if first[v] < a:
                ok = False
                break
            lv = last[v]
            if lv > b:
                b = lv
            i += 1
        if ok and b - a + 1 < n:
            return False
    return True


def _blocks_cross(a, b) -> bool:
    """True iff the two disjoint sorted blocks interleave.

    Walking both in merged order, crossing means the block label switches
    at least three times (pattern a..b..a..b or b..a..b..a).
    """
    i = j = 0
    la, lb = len(a), len(b)
    switches = 0
    last = -1
    while i < la or j < lb:
        if j >= lb or (i < la and a[i] < b[j]):
            lab = 0
            i += 1
        else:
            lab = 1
            j += 1
        if lab != last:
            if last >= 0:
                switches += 1
                if switches >= 3:
                    return True
            last = lab
    return False


@cache
def _cover(pi: Partition) -> Partition:
    blocks = list(pi.blocks)
    while True:
        pair = None
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                if _blocks_cross(blocks[i], blocks[j]):
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break
        i, j = pair
        merged = tuple(sorted(blocks[i] + blocks[j]))
        del blocks[j]
        del blocks[i]
        blocks.append(merged)
    return Partition(pi.n, blocks)
