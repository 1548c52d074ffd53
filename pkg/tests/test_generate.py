import pytest

from obelisk.generate import SHAPES, SplitMix64, generate
from obelisk.graph import Shape, classify_shape, is_tree
from obelisk.recognizers import is_unidicyclic


def test_splitmix_reference_values():
    # first outputs for seed 0 of the reference SplitMix64
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4


def test_below_is_in_range():
    rng = SplitMix64(7)
    draws = [rng.below(5) for _ in range(500)]
    assert set(draws) == {0, 1, 2, 3, 4}
    with pytest.raises(ValueError):
        rng.below(0)


@pytest.mark.parametrize("shape", SHAPES)
def test_same_seed_same_graph(shape):
    assert generate(shape, 6, 42) == generate(shape, 6, 42)


def test_shapes_are_what_they_claim():
    for seed in range(30):
        assert is_tree(generate("tree", 7, seed))
        assert classify_shape(generate("cycle", 6, seed)) in (Shape.DICYCLE, Shape.ORIENTED_CYCLE)
        assert classify_shape(generate("dicycle", 5, seed)) == Shape.DICYCLE
        g = generate("unidicyclic", 8, seed)
        assert is_unidicyclic(g) and sorted(g.vertices) == list(range(1, 9))
        assert is_tree(generate("fountain", 3, seed))


def test_unknown_shape():
    with pytest.raises(ValueError):
        generate("blob", 4, 1)
