import itertools
import random

import pytest
from fractions import Fraction

from ambicat.base import (
    FinSetObj,
    MatObj,
    UNIT_MAT,
    UNIT_REL,
    associator,
    cap,
    compose,
    cup,
    dagger,
    finset,
    identity,
    left_unitor,
    mat,
    rel,
    rel_from_fn,
    rel_from_pairs,
    relabeling,
    rel_scalar,
    right_unitor,
    snake_left,
    snake_right,
    tensor,
    tensor_obj,
)
from ambicat.errors import CompositionError, ShapeError


def all_relations(src, tgt):
    cells = len(src) * len(tgt)
    for bits in itertools.product([False, True], repeat=cells):
        matrix = tuple(
            tuple(bits[i * len(src) + j] for j in range(len(src)))
            for i in range(len(tgt))
        )
        yield rel(src, tgt, matrix)


def random_rel(rng, src, tgt):
    return rel(
        src,
        tgt,
        [[rng.random() < 0.5 for _ in range(len(src))] for _ in range(len(tgt))],
    )


def random_mat(rng, src_dim, tgt_dim):
    return mat(
        src_dim,
        tgt_dim,
        [
            [Fraction(rng.randint(-2, 2), rng.randint(1, 3)) for _ in range(src_dim)]
            for _ in range(tgt_dim)
        ],
    )


X3 = finset("X", ["0", "1", "2"])


class TestObjects:
    def test_duplicate_elements_rejected(self):
        with pytest.raises(ValueError):
            FinSetObj("A", ("a", "a"))

    def test_tensor_elements_are_pairs_in_row_major_order(self):
        a = finset("A", ["a", "b"])
        b = finset("B", ["x", "y"])
        ab = tensor_obj(a, b)
        assert ab.elements == ("(a,x)", "(a,y)", "(b,x)", "(b,y)")

    def test_unit_has_one_element(self):
        assert len(UNIT_REL) == 1
        assert len(UNIT_MAT) == 1


class TestCompose:
    def test_identity_law(self):
        f = rel_from_pairs(X3, X3, [("0", "1"), ("1", "2"), ("2", "2")])
        assert compose(identity(X3), f) == f
        assert compose(f, identity(X3)) == f

    def test_relational_product_by_hand(self):
        # f = {(0,1),(1,2),(2,2)}; pointwise: f∘f = {(0,2),(1,2),(2,2)}
        f = rel_from_pairs(X3, X3, [("0", "1"), ("1", "2"), ("2", "2")])
        ff = compose(f, f)
        assert ff.pairs() == frozenset({("0", "2"), ("1", "2"), ("2", "2")})

    def test_zero_matrix_absorbs(self):
        zero = mat(2, 2, [[0, 0], [0, 0]])
        g = mat(2, 2, [[1, 2], [3, 4]])
        assert compose(zero, g) == zero
        assert compose(g, zero) == zero

    def test_object_mismatch_raises(self):
        a = finset("A", ["a"])
        f = identity(a)
        g = identity(X3)
        with pytest.raises(CompositionError):
            compose(g, f)

    def test_base_mismatch_raises(self):
        with pytest.raises(CompositionError):
            compose(identity(MatObj(1)), identity(UNIT_REL))


class TestIdentity:
    def test_two_element_diagonal(self):
        a = finset("A", ["a", "b"])
        assert identity(a).matrix == ((True, False), (False, True))

    def test_unit_identity(self):
        assert identity(UNIT_REL).matrix == ((True,),)

    def test_empty_object(self):
        e = finset("E", [])
        assert identity(e).matrix == ()


class TestTensor:
    def test_id_tensor_id_is_id(self):
        a = finset("A", ["a", "b"])
        b = finset("B", ["x"])
        assert tensor(identity(a), identity(b)) == identity(tensor_obj(a, b))

    def test_bifunctoriality_on_random_relations(self):
        rng = random.Random(11)
        a = finset("A", ["a", "b"])
        for _ in range(60):
            f = random_rel(rng, a, a)
            g = random_rel(rng, a, a)
            h = random_rel(rng, a, a)
            k = random_rel(rng, a, a)
            lhs = tensor(compose(g, f), compose(k, h))
            rhs = compose(tensor(g, k), tensor(f, h))
            assert lhs == rhs

    def test_tensor_with_unit_is_relabeling(self):
        f = rel_from_pairs(X3, X3, [("0", "1")])
        fu = tensor(f, identity(UNIT_REL))
        assert fu.matrix == f.matrix
        assert compose(right_unitor(X3), compose(fu, dagger(right_unitor(X3)))) == f


class TestDagger:
    def test_involution(self):
        rng = random.Random(3)
        f = random_rel(rng, X3, X3)
        assert dagger(dagger(f)) == f

    def test_identity_fixed(self):
        assert dagger(identity(X3)) == identity(X3)

    def test_converse_of_single_pair(self):
        a = finset("A", ["0", "1"])
        f = rel_from_pairs(a, a, [("0", "1")])
        assert dagger(f).pairs() == frozenset({("1", "0")})

    def test_contravariance(self):
        rng = random.Random(5)
        for _ in range(40):
            f = random_rel(rng, X3, X3)
            g = random_rel(rng, X3, X3)
            assert dagger(compose(g, f)) == compose(dagger(f), dagger(g))

    def test_mat_transpose(self):
        m = mat(2, 3, [[1, 2], [3, 4], [5, 6]])
        assert dagger(m).matrix == ((1, 3, 5), (2, 4, 6))


class TestCupsAndCaps:
    def test_yanking_two_elements(self):
        a = finset("A", ["a", "b"])
        assert snake_left(a) == identity(a)
        assert snake_right(a) == identity(a)

    def test_cap_cup_scalar_is_dimension_in_finmat(self):
        # trace of the identity: cap ∘ cup = |A| as a 1×1 matrix
        a = MatObj(3)
        scalar = compose(cap(a), cup(a))
        assert scalar.matrix == ((Fraction(3),),)

    def test_cap_cup_scalar_is_true_in_finrel(self):
        for size in (1, 2, 3):
            a = finset("A", [str(i) for i in range(size)])
            assert compose(cap(a), cup(a)) == rel_scalar(True)

    def test_cap_is_dagger_of_cup(self):
        a = finset("A", ["a", "b", "c"])
        assert cap(a) == dagger(cup(a))

    @pytest.mark.parametrize("size", [0, 1, 2, 3])
    def test_snakes_all_small_objects_rel(self, size):
        a = finset("A", [str(i) for i in range(size)])
        assert snake_left(a) == identity(a)
        assert snake_right(a) == identity(a)

    @pytest.mark.parametrize("dim", [0, 1, 2, 3])
    def test_snakes_all_small_objects_mat(self, dim):
        a = MatObj(dim)
        assert snake_left(a) == identity(a)
        assert snake_right(a) == identity(a)


class TestCategoryLaws:
    def test_associativity_exhaustive_size_2(self):
        a = finset("A", ["0", "1"])
        rels = list(all_relations(a, a))
        for f in rels:
            for g in rels:
                for h in rels:
                    assert compose(h, compose(g, f)) == compose(compose(h, g), f)

    def test_identity_exhaustive_size_2(self):
        a = finset("A", ["0", "1"])
        b = finset("B", ["x", "y"])
        for f in all_relations(a, b):
            assert compose(f, identity(a)) == f
            assert compose(identity(b), f) == f

    def test_associativity_random_triples_size_4(self):
        rng = random.Random(17)
        objs = [finset(f"O{n}", [str(i) for i in range(n)]) for n in (1, 2, 3, 4)]
        for _ in range(200):
            a, b, c, d = (rng.choice(objs) for _ in range(4))
            f = random_rel(rng, a, b)
            g = random_rel(rng, b, c)
            h = random_rel(rng, c, d)
            assert compose(h, compose(g, f)) == compose(compose(h, g), f)

    def test_mat_associativity_random(self):
        rng = random.Random(23)
        for _ in range(60):
            dims = [rng.randint(0, 3) for _ in range(4)]
            f = random_mat(rng, dims[0], dims[1])
            g = random_mat(rng, dims[1], dims[2])
            h = random_mat(rng, dims[2], dims[3])
            assert compose(h, compose(g, f)) == compose(compose(h, g), f)


class TestZeroObject:
    def test_zero_dimension_is_absorbing(self):
        z = MatObj(0)
        to_z = mat(2, 0, [])
        from_z = mat(0, 3, [[], [], []])
        through = compose(from_z, to_z)
        assert through.matrix == ((Fraction(0), Fraction(0)),) * 3
        anything = mat(3, 2, [[1, 1, 1], [2, 2, 2]])
        assert compose(anything, through).matrix == ((Fraction(0),) * 2,) * 2
        assert identity(z).matrix == ()


class TestCoherence:
    def test_associator_is_identity_matrix(self):
        a = finset("A", ["a", "b"])
        b = finset("B", ["x"])
        c = finset("C", ["u", "v"])
        alpha = associator(a, b, c)
        assert alpha.matrix == identity(tensor_obj(a, tensor_obj(b, c))).matrix

    def test_unitors(self):
        a = finset("A", ["a", "b"])
        lam, rho = left_unitor(a), right_unitor(a)
        assert lam.src == tensor_obj(UNIT_REL, a) and lam.tgt == a
        assert rho.src == tensor_obj(a, UNIT_REL) and rho.tgt == a

    def test_relabeling_size_mismatch(self):
        with pytest.raises(ShapeError):
            relabeling(finset("A", ["a"]), finset("B", ["x", "y"]))

    def test_rel_from_fn(self):
        f = rel_from_fn(X3, X3, lambda x: "2")
        assert f.pairs() == frozenset({("0", "2"), ("1", "2"), ("2", "2")})
