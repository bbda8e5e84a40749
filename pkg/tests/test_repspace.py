"""Word enumeration, rank/unrank, actions, canonicalization."""

from fractions import Fraction

import pytest

from leibniz_homology import (
    BoostY,
    Chain,
    RotationX,
    SpaceMismatchError,
    Translation,
    act,
    act_mixed,
    act_tensor,
    act_wedge,
    assemble_action,
    enumerate_basis,
    mixed_space,
    random_chain,
    sort_wedge,
    tensor_space,
    wedge_space,
)


def t(h, i):
    return h.index(Translation(i))


def test_basis_counts(h22):
    assert tensor_space(h22, 3).dim == 1000
    assert wedge_space(h22, 2).dim == 6
    assert mixed_space(h22, 2, lead=range(h22.dim)).dim == 60
    assert wedge_space(h22, 5).dim == 0  # k > d is empty, not an error
    assert tensor_space(h22, 0).dim == 1


def test_rank_unrank_roundtrip_exhaustive(h22):
    spaces = [
        tensor_space(h22, 3),
        wedge_space(h22, 3),
        mixed_space(h22, 2, lead=h22.so_indices),
        mixed_space(h22, 4, lead=range(h22.dim)),
    ]
    for sp in spaces:
        words = enumerate_basis(sp)
        assert len(words) == sp.dim
        for r, w in enumerate(words):
            assert sp.rank_word(w) == r
            assert sp.unrank_word(r) == w


def test_rank_unrank_sampled_large(h22, rng):
    sp = tensor_space(h22, 6)  # 10^6 words
    assert sp.dim == 10**6
    for _ in range(2000):
        r = rng.randrange(sp.dim)
        assert sp.rank_word(sp.unrank_word(r)) == r


def test_sort_wedge_signs():
    assert sort_wedge((1, 2, 3)) == ((1, 2, 3), 1)
    assert sort_wedge((2, 1, 3)) == ((1, 2, 3), -1)
    assert sort_wedge((3, 2, 1)) == ((1, 2, 3), -1)
    assert sort_wedge((1, 1, 3))[1] == 0


def test_act_wedge_examples(h22):
    sp = wedge_space(h22, 2)
    c = sp.basis_chain((t(h22, 1), t(h22, 2)))
    out = act_wedge(h22.index(BoostY(1, 3)), c)
    assert out == Chain(sp, {(t(h22, 2), t(h22, 3)): Fraction(-1)})
    # translations act as zero on translation wedges
    assert act_wedge(t(h22, 3), c).is_zero()
    # the volume wedge is killed by every rotation
    vol = wedge_space(h22, 4).basis_chain(tuple(t(h22, i) for i in (1, 2, 3, 4)))
    assert act_wedge(h22.index(RotationX(1, 2)), vol).is_zero()


def test_act_mixed_example(h31):
    sp = mixed_space(h31, 2, lead=h31.so_indices)
    x12 = h31.index(RotationX(1, 2))
    c = sp.basis_chain((x12, t(h31, 1), t(h31, 2)))
    assert act_mixed(x12, c).is_zero()


def test_act_tensor_examples(h22, h31):
    sp = tensor_space(h22, 2)
    c = sp.basis_chain((t(h22, 1), t(h22, 1)))
    out = act_tensor(h22.index(RotationX(1, 2)), c)
    assert out == Chain(
        sp,
        {
            (t(h22, 2), t(h22, 1)): Fraction(-1),
            (t(h22, 1), t(h22, 2)): Fraction(-1),
        },
    )
    # translations kill translation-only tensors
    assert act_tensor(t(h22, 3), c).is_zero()


def test_act_kind_guards(h22):
    c = tensor_space(h22, 2).basis_chain((0, 1))
    with pytest.raises(SpaceMismatchError):
        act_wedge(0, c)
    with pytest.raises(SpaceMismatchError):
        act_mixed(0, c)


def test_space_escape_raises(h22):
    # acting on an so-lead space by a translation pushes the lead out of so
    sp = mixed_space(h22, 1, lead=h22.so_indices)
    c = sp.basis_chain((h22.index(RotationX(1, 2)), t(h22, 3)))
    with pytest.raises(SpaceMismatchError):
        act_mixed(t(h22, 1), c)


def test_module_law_on_random_chains(h22, rng):
    # act(x, m) = [m, x] is a right action: acting by a then b, minus b then
    # a, equals acting by [b, a].
    for sp in (tensor_space(h22, 3), wedge_space(h22, 3)):
        for _ in range(25):
            a = rng.randrange(h22.dim)
            b = rng.randrange(h22.dim)
            if sp.kind == "wedge":
                a, b = rng.choice(h22.so_indices), rng.choice(h22.so_indices)
            ch = random_chain(sp, rng)
            lhs = act(a, act(b, ch)) - act(b, act(a, ch))
            rhs = sp.zero()
            for c, s in h22.bracket(b, a).items():
                rhs = rhs + s * act(c, ch)
            assert lhs == rhs


def test_canonicalization_order_independent(h22, rng):
    # expanding the derivation on a permuted word and canonicalizing at the
    # end agrees with acting on the canonical representative
    sp = wedge_space(h22, 3)
    for _ in range(40):
        word = tuple(rng.sample(range(4), 3))
        canon, sgn = sort_wedge(word)
        x = rng.choice(h22.so_indices)
        direct = act(x, sp.basis_chain(canon, sgn))
        acc = sp.zero()
        for pos in range(3):
            for c, s in h22.bracket(word[pos], x).items():
                w2, s2 = sort_wedge(word[:pos] + (c,) + word[pos + 1 :])
                if s2:
                    acc = acc + (s * s2) * sp.basis_chain(w2)
        assert acc == direct


def test_assembled_matrix_agrees_with_matrix_free(h22, rng):
    sp = mixed_space(h22, 2, lead=h22.so_indices)
    for x in h22.so_indices[:3]:
        entries = assemble_action(sp, x)
        for _ in range(10):
            ch = random_chain(sp, rng)
            vec = {sp.rank_word(w): c for w, c in ch.coeffs.items()}
            image: dict[int, Fraction] = {}
            for (i, j), v in entries.items():
                if j in vec:
                    image[i] = image.get(i, Fraction(0)) + v * vec[j]
            image = {i: v for i, v in image.items() if v}
            direct = {sp.rank_word(w): c for w, c in act(x, ch).coeffs.items()}
            assert image == direct


def test_chain_arithmetic(h22):
    sp = wedge_space(h22, 2)
    a = sp.basis_chain((0, 1), 2)
    b = sp.basis_chain((0, 1), -2)
    assert (a + b).is_zero()
    assert (Fraction(1, 2) * a).coeffs == {(0, 1): Fraction(1)}
    c = a.scaled_integral()
    assert c.coeffs == {(0, 1): Fraction(2)}
    assert Fraction(1, 3) * a != a
