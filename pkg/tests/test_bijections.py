"""The three reversible decompositions and the weight transport."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from purecross import (
    Composition,
    CoverDecomposition,
    GapDecomposition,
    Partition,
    PartitionClass,
    PcPlusCase,
    WeightAssignment,
    adjoin_last_atom,
    connected_weight,
    contract,
    cover_assemble,
    cover_decompose,
    gap_assemble,
    gap_decompose,
    inflate,
    iterate,
    partition_weight,
    pc_plus_decompose,
    pc_plus_weight,
)


def compositions(n, parts):
    """All ways to write n as an ordered sum of ``parts`` positive terms."""
    for cuts in combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def weak_compositions(n, parts):
    """Ordered sums allowing zero terms, as plain tuples."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for head in range(n + 1):
        for rest in weak_compositions(n - head, parts - 1):
            yield (head,) + rest


class TestComposition:
    def test_basic(self):
        comp = Composition((2, 1, 3))
        assert comp.n == 6
        assert comp.intervals() == [range(1, 3), range(3, 4), range(4, 7)]

    def test_validation(self):
        with pytest.raises(ValueError):
            Composition(())
        with pytest.raises(ValueError):
            Composition((2, 0))
        with pytest.raises(ValueError):
            Composition((1, -1))
        with pytest.raises(ValueError):
            Composition((1, 2.0))

    def test_counting(self):
        assert sum(1 for _ in compositions(6, 3)) == 10


class TestPcPlusSplit:
    def test_purely_crossing_case(self):
        pi = Partition.parse("1,3|2,4")
        assert pc_plus_decompose(pi) == PcPlusCase(adjoined=False, base=pi)

    def test_adjoined_case(self):
        case = pc_plus_decompose(Partition.parse("1,3,5|2,4"))
        assert case == PcPlusCase(adjoined=True, base=Partition.parse("1,3|2,4"))

    def test_adjoin_last_atom(self):
        assert adjoin_last_atom(Partition.parse("1,3|2,4")) == Partition.parse(
            "1,3,5|2,4"
        )
        assert adjoin_last_atom(Partition.whole(1)) == Partition.whole(2)

    def test_errors(self):
        with pytest.raises(ValueError):
            pc_plus_decompose(Partition.whole(1))
        with pytest.raises(ValueError):
            pc_plus_decompose(Partition.whole(2))
        with pytest.raises(ValueError):
            pc_plus_decompose(Partition.parse("1,3|2|4"))
        with pytest.raises(ValueError):
            adjoin_last_atom(Partition.empty())

    def test_families_split_exactly(self):
        # Every no-neighbor connected partition of n >= 2 atoms is either
        # purely crossing or the adjoining of one with n - 1 atoms.
        for n in range(2, 9):
            members = set(iterate(n, PartitionClass.PC_PLUS))
            crossing = set(iterate(n, PartitionClass.PURELY_CROSSING))
            adjoined = {
                adjoin_last_atom(sigma)
                for sigma in iterate(n - 1, PartitionClass.PURELY_CROSSING)
            }
            assert crossing <= members
            assert crossing.isdisjoint(adjoined)
            assert crossing | adjoined == members
            for pi in members:
                case = pc_plus_decompose(pi)
                if case.adjoined:
                    assert adjoin_last_atom(case.base) == pi
                else:
                    assert case.base == pi


class TestInflateContract:
    def test_inflate_example(self):
        got = inflate(Partition.parse("1,3|2,4"), Composition((2, 1, 1, 1)))
        assert got == Partition.parse("1,2,4|3,5")

    def test_contract_example(self):
        base, comp = contract(Partition.parse("1,2,4|3,5"))
        assert base == Partition.parse("1,3|2,4")
        assert comp == Composition((2, 1, 1, 1))

    def test_whole_block_contracts_to_single_atom(self):
        base, comp = contract(Partition.whole(4))
        assert base == Partition.whole(1)
        assert comp == Composition((4,))

    def test_errors(self):
        with pytest.raises(ValueError):
            inflate(Partition.whole(2), Composition((1, 1)))
        with pytest.raises(ValueError):
            inflate(Partition.parse("1,3|2,4"), Composition((1, 1, 1)))
        with pytest.raises(ValueError):
            contract(Partition.singletons(2))
        with pytest.raises(ValueError):
            contract(Partition.empty())

    def test_roundtrip_from_connected(self):
        for n in range(1, 9):
            for pi in iterate(n, PartitionClass.CONNECTED):
                base, comp = contract(pi)
                assert base.is_pc_plus()
                assert not base.has_neighbors()
                assert comp.n == n
                assert inflate(base, comp) == pi

    def test_bijection_onto_connected(self):
        for n in range(1, 8):
            produced = []
            for m in range(1, n + 1):
                for base in iterate(m, PartitionClass.PC_PLUS):
                    for comp in compositions(n, m):
                        produced.append(inflate(base, comp))
            connected = list(iterate(n, PartitionClass.CONNECTED))
            assert len(produced) == len(set(produced)) == len(connected)
            assert set(produced) == set(connected)


class TestCoverDecomposition:
    def test_example(self):
        dec = cover_decompose(Partition.parse("1,3|2,4|5"))
        assert dec.cover == Partition.parse("1,2,3,4|5")
        assert dec.pieces == (Partition.parse("1,3|2,4"), Partition.whole(1))
        assert dec.n == 5
        assert cover_assemble(dec) == Partition.parse("1,3|2,4|5")

    def test_validation(self):
        with pytest.raises(ValueError, match="crossing"):
            CoverDecomposition(
                Partition.parse("1,3|2,4"),
                (Partition.whole(2), Partition.whole(2)),
            )
        with pytest.raises(ValueError, match="pieces"):
            CoverDecomposition(Partition.whole(3), ())
        with pytest.raises(ValueError, match="size"):
            CoverDecomposition(Partition.whole(3), (Partition.whole(2),))
        with pytest.raises(ValueError, match="not connected"):
            CoverDecomposition(Partition.whole(2), (Partition.singletons(2),))

    def test_roundtrip(self):
        for n in range(1, 9):
            for pi in iterate(n, PartitionClass.ALL):
                assert cover_assemble(cover_decompose(pi)) == pi

    def test_bijection_onto_all(self):
        for n in range(1, 7):
            produced = []
            for tau in iterate(n, PartitionClass.NONCROSSING):
                stacks = [list(iterate(len(b), PartitionClass.CONNECTED))
                          for b in tau.blocks]
                indices = [0] * len(stacks)
                while True:
                    pieces = tuple(stack[i] for stack, i in zip(stacks, indices))
                    produced.append(
                        cover_assemble(CoverDecomposition(tau, pieces))
                    )
                    for j in range(len(stacks) - 1, -1, -1):
                        indices[j] += 1
                        if indices[j] < len(stacks[j]):
                            break
                        indices[j] = 0
                    else:
                        break
            everything = list(iterate(n, PartitionClass.ALL))
            assert len(produced) == len(set(produced)) == len(everything)
            assert set(produced) == set(everything)


class TestGapDecomposition:
    def test_example(self):
        dec = gap_decompose(Partition.parse("1,5|2,4|3"))
        assert dec.core == Partition.whole(2)
        assert dec.gaps == (Partition.parse("1,3|2"), Partition.empty())
        assert dec.n == 5
        assert gap_assemble(dec) == Partition.parse("1,5|2,4|3")

    def test_connected_input_is_its_own_core(self):
        pi = Partition.parse("1,3|2,4")
        dec = gap_decompose(pi)
        assert dec.core == pi
        assert all(g == Partition.empty() for g in dec.gaps)

    def test_validation(self):
        with pytest.raises(ValueError, match="not connected"):
            GapDecomposition(Partition.singletons(2), (Partition.empty(),) * 2)
        with pytest.raises(ValueError, match="gaps"):
            GapDecomposition(Partition.whole(2), (Partition.empty(),))
        with pytest.raises(ValueError, match="at least one atom"):
            GapDecomposition(Partition.empty(), ())
        with pytest.raises(ValueError):
            gap_decompose(Partition.empty())

    def test_roundtrip(self):
        for n in range(1, 9):
            for pi in iterate(n, PartitionClass.ALL):
                assert gap_assemble(gap_decompose(pi)) == pi

    def test_bijection_onto_all(self):
        partitions_by_size = {0: [Partition.empty()]}
        for m in range(1, 6):
            partitions_by_size[m] = list(iterate(m, PartitionClass.ALL))
        for n in range(1, 7):
            produced = []
            for m in range(1, n + 1):
                for core in iterate(m, PartitionClass.CONNECTED):
                    for sizes in weak_compositions(n - m, m):
                        stacks = [partitions_by_size[s] for s in sizes]
                        indices = [0] * len(stacks)
                        while True:
                            gaps = tuple(
                                stack[i] for stack, i in zip(stacks, indices)
                            )
                            produced.append(
                                gap_assemble(GapDecomposition(core, gaps))
                            )
                            for j in range(len(stacks) - 1, -1, -1):
                                indices[j] += 1
                                if indices[j] < len(stacks[j]):
                                    break
                                indices[j] = 0
                            else:
                                break
            everything = list(iterate(n, PartitionClass.ALL))
            assert len(produced) == len(set(produced)) == len(everything)
            assert set(produced) == set(everything)


class TestWeights:
    def example_assignment(self):
        return WeightAssignment({Partition.parse("1,3|2,4"): Fraction(7, 2)})

    def test_defaulted_lookup(self):
        w = self.example_assignment()
        assert w[Partition.parse("1,3|2,4")] == Fraction(7, 2)
        assert w[Partition.parse("1,3,5|2,4,6")] == 1
        assert len(w) == 1
        assert Partition.parse("1,3|2,4") in w
        assert Partition.parse("1,3,5|2,4,6") not in w

    def test_rejects_bad_keys_and_floats(self):
        with pytest.raises(ValueError):
            WeightAssignment({Partition.whole(2): Fraction(1)})
        with pytest.raises(TypeError):
            WeightAssignment({Partition.parse("1,3|2,4"): 0.5})

    def test_accepts_strings_and_integers(self):
        pi = Partition.parse("1,3|2,4")
        assert WeightAssignment({pi: "7/2"})[pi] == Fraction(7, 2)
        assert WeightAssignment({pi: 3})[pi] == Fraction(3)
        assert WeightAssignment([(pi, Fraction(1, 3))])[pi] == Fraction(1, 3)

    def test_json_roundtrip(self):
        w = WeightAssignment(
            {
                Partition.parse("1,3|2,4"): Fraction(7, 2),
                Partition.parse("1,4|2,5|3,6"): Fraction(-2, 9),
            }
        )
        data = w.to_json()
        assert data == [
            {"partition": "1,3|2,4", "weight": "7/2"},
            {"partition": "1,4|2,5|3,6", "weight": "-2/9"},
        ]
        back = WeightAssignment.from_json(data)
        assert back.items() == w.items()
        with pytest.raises(ValueError):
            WeightAssignment.from_json([{"partition": "1,3|2,4"}])

    def test_weight_examples(self):
        w = self.example_assignment()
        assert pc_plus_weight(Partition.parse("1,3|2,4"), w) == Fraction(7, 2)
        assert pc_plus_weight(Partition.parse("1,3,5|2,4"), w) == Fraction(7, 2)
        assert pc_plus_weight(Partition.whole(1), w) == 1
        assert connected_weight(Partition.parse("1,2,4|3,5"), w) == Fraction(7, 2)
        assert connected_weight(Partition.whole(3), w) == 1
        assert partition_weight(Partition.parse("1,3|2,4|5"), w) == Fraction(7, 2)
        assert partition_weight(Partition.singletons(4), w) == 1
        assert partition_weight(Partition.empty(), w) == 1

    def test_weight_errors(self):
        w = self.example_assignment()
        with pytest.raises(ValueError):
            pc_plus_weight(Partition.whole(2), w)
        with pytest.raises(ValueError):
            connected_weight(Partition.singletons(2), w)

    def _random_assignment(self, rnd, max_n=7):
        support = [
            pi
            for n in range(4, max_n + 1)
            for pi in iterate(n, PartitionClass.PURELY_CROSSING)
        ]
        return WeightAssignment(
            {pi: Fraction(rnd.randint(-9, 9), rnd.randint(1, 9)) for pi in support}
        )

    def test_transport_consistency(self):
        # The cached weight functions agree with recomputing through the
        # decompositions step by step.
        rnd = random.Random(7)
        w = self._random_assignment(rnd)
        for n in range(1, 8):
            for pi in iterate(n, PartitionClass.CONNECTED):
                base, _ = contract(pi)
                assert connected_weight(pi, w) == pc_plus_weight(base, w)
                if base.n >= 2:
                    case = pc_plus_decompose(base)
                    assert pc_plus_weight(base, w) == w[case.base]
        for n in range(1, 7):
            for pi in iterate(n, PartitionClass.ALL):
                dec = cover_decompose(pi)
                expected = Fraction(1)
                for piece in dec.pieces:
                    expected *= connected_weight(piece, w)
                assert partition_weight(pi, w) == expected

    def test_inflation_preserves_weight(self):
        rnd = random.Random(11)
        w = self._random_assignment(rnd)
        for n in range(1, 7):
            for m in range(1, n + 1):
                for base in iterate(m, PartitionClass.PC_PLUS):
                    for comp in compositions(n, m):
                        assert connected_weight(inflate(base, comp), w) == (
                            pc_plus_weight(base, w)
                        )

    def test_gap_multiplicativity(self):
        rnd = random.Random(13)
        w = self._random_assignment(rnd)
        for n in range(1, 8):
            for pi in iterate(n, PartitionClass.ALL):
                dec = gap_decompose(pi)
                expected = connected_weight(dec.core, w)
                for gap in dec.gaps:
                    expected *= partition_weight(gap, w)
                assert partition_weight(pi, w) == expected
