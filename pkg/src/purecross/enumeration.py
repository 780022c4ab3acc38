"""Streams and exact counts for the five partition families.

Enumeration walks restricted-growth strings in lexicographic order.  The
no-neighbor families prune every prefix that already repeats a value in
adjacent positions; the noncrossing family only ever extends a prefix with
a block that is still "open" on the nesting stack.  Connectivity and the
first-atom/last-atom condition are checked on complete strings only.

Counting never materializes Partition objects and can split the work over
processes by fixed-length rgs prefixes; the result is independent of the
worker count.
"""

from enum import Enum
from multiprocessing import Pool

from .partition import Partition, _rgs_connected


class PartitionClass(Enum):
    """The families this package enumerates; values double as CLI names."""

    ALL = "all"
    NONCROSSING = "nc"
    CONNECTED = "co"
    PC_PLUS = "pc+"
    PURELY_CROSSING = "pc"


# Below this size the work does not justify spawning processes.
_PARALLEL_MIN_N = 8
_PREFIX_LEN = 6


def _iter_rgs_plain(n, prefix=()):
    """All restricted-growth strings of length n extending ``prefix``, in
    lexicographic order.  Yields one shared list; callers must copy."""
    length = len(prefix)
    rgs = list(prefix) + [0] * (n - length)
    maxp = [0] * n
    m = 0
    for j in range(n):
        if rgs[j] > m:
            m = rgs[j]
        maxp[j] = m
    floor = length if length > 0 else 1
    while True:
        yield rgs
        i = n - 1
        while i >= floor and rgs[i] > maxp[i - 1]:
            i -= 1
        if i < floor:
            return
        rgs[i] += 1
        maxp[i] = maxp[i - 1] if maxp[i - 1] >= rgs[i] else rgs[i]
        for j in range(i + 1, n):
            rgs[j] = 0
            maxp[j] = maxp[j - 1]


def _iter_rgs_no_neighbors(n, prefix=()):
    """Restricted-growth strings with no two adjacent equal values."""
    length = len(prefix)
    rgs = list(prefix) + [0] * (n - length)
    for j in range(max(length, 1), n):
        rgs[j] = 0 if rgs[j - 1] != 0 else 1
    maxp = [0] * n
    m = 0
    for j in range(n):
        if rgs[j] > m:
            m = rgs[j]
        maxp[j] = m
    floor = length if length > 0 else 1
    while True:
        yield rgs
        i = n - 1
        while i >= floor:
            v = rgs[i] + 1
            if v == rgs[i - 1]:
                v += 1
            if v <= maxp[i - 1] + 1:
                break
            i -= 1
        if i < floor:
            return
        rgs[i] = v
        maxp[i] = maxp[i - 1] if maxp[i - 1] >= v else v
        for j in range(i + 1, n):
            rgs[j] = 0 if rgs[j - 1] != 0 else 1
            maxp[j] = maxp[j - 1] if maxp[j - 1] >= rgs[j] else rgs[j]


def _iter_rgs_noncrossing(n, prefix=()):
    """Restricted-growth strings of noncrossing partitions.

    An atom may only rejoin a block on the nesting stack; doing so closes
    every block stacked above it.  Trying stack blocks bottom-up and then
    a fresh block keeps the stream lexicographic.
    """
    rgs = list(prefix) + [0] * (n - len(prefix))
    stack: list[int] = []
    blocks = 0
    for v in prefix:
        if v == blocks:
            stack.append(v)
            blocks += 1
        else:
            del stack[stack.index(v) + 1:]
    yield from _nc_extend(rgs, len(prefix), n, stack, blocks)


def _nc_extend(rgs, i, n, stack, blocks):
    if i == n:
        yield rgs
        return
    for k in range(len(stack)):
        rgs[i] = stack[k]
        yield from _nc_extend(rgs, i + 1, n, stack[: k + 1], blocks)
    rgs[i] = blocks
    yield from _nc_extend(rgs, i + 1, n, stack + [blocks], blocks + 1)


def _count_serial(n, cls, prefix=()):
    total = 0
    if cls is PartitionClass.ALL:
        for _ in _iter_rgs_plain(n, prefix):
            total += 1
    elif cls is PartitionClass.NONCROSSING:
        for _ in _iter_rgs_noncrossing(n, prefix):
            total += 1
    elif cls is PartitionClass.CONNECTED:
        connected = _rgs_connected
        for rgs in _iter_rgs_plain(n, prefix):
            if connected(rgs):
                total += 1
    elif cls is PartitionClass.PC_PLUS:
        connected = _rgs_connected
        for rgs in _iter_rgs_no_neighbors(n, prefix):
            if connected(rgs):
                total += 1
    elif cls is PartitionClass.PURELY_CROSSING:
        connected = _rgs_connected
        for rgs in _iter_rgs_no_neighbors(n, prefix):
            if rgs[-1] != 0 and connected(rgs):
                total += 1
    else:
        raise ValueError(f"unknown partition class {cls!r}")
    return total


def _count_chunk(args):
    n, cls_value, prefixes = args
    cls = PartitionClass(cls_value)
    return sum(_count_serial(n, cls, prefix) for prefix in prefixes)


def _prefixes(n, cls, length):
    if cls in (PartitionClass.PC_PLUS, PartitionClass.PURELY_CROSSING):
        gen = _iter_rgs_no_neighbors(length)
    elif cls is PartitionClass.NONCROSSING:
        gen = _iter_rgs_noncrossing(length)
    else:
        gen = _iter_rgs_plain(length)
    return [tuple(p) for p in gen]


def iterate(n, cls=PartitionClass.ALL):
    """Yield the members of the family in lexicographic rgs order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    cls = PartitionClass(cls)
    return _iterate(n, cls)


def _iterate(n, cls):
    if cls is PartitionClass.ALL:
        for rgs in _iter_rgs_plain(n):
            yield Partition.from_rgs(rgs)
    elif cls is PartitionClass.NONCROSSING:
        for rgs in _iter_rgs_noncrossing(n):
            yield Partition.from_rgs(rgs)
    elif cls is PartitionClass.CONNECTED:
        for rgs in _iter_rgs_plain(n):
            if _rgs_connected(rgs):
                yield Partition.from_rgs(rgs)
    elif cls is PartitionClass.PC_PLUS:
        for rgs in _iter_rgs_no_neighbors(n):
            if _rgs_connected(rgs):
                yield Partition.from_rgs(rgs)
    else:
        for rgs in _iter_rgs_no_neighbors(n):
            if rgs[-1] != 0 and _rgs_connected(rgs):
                yield Partition.from_rgs(rgs)


def count(n, cls=PartitionClass.ALL, workers=1):
    """Exact family size, by enumeration.

    With ``workers > 1`` the rgs tree is split at a fixed prefix depth and
    the subtrees are counted in separate processes; the total does not
    depend on the worker count.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    cls = PartitionClass(cls)
    if workers == 1 or n < _PARALLEL_MIN_N:
        return _count_serial(n, cls)
    length = min(_PREFIX_LEN, n - 2)
    prefixes = _prefixes(n, cls, length)
    chunks = [prefixes[w::workers] for w in range(workers)]
    chunks = [c for c in chunks if c]
    with Pool(processes=len(chunks)) as pool:
        parts = pool.map(_count_chunk, [(n, cls.value, chunk) for chunk in chunks])
    return sum(parts)


def orbit_size(pi: Partition) -> int:
    """Number of distinct rotations of the partition."""
    if pi.n == 0:
        return 1
    return len({pi.rotate(r) for r in range(pi.n)})
