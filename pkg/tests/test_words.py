"""Factorization words: moves, homomorphisms, conjugation, text formats."""
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitz.perms import Perm
from hurwitz.words import Factorization, Move, TypeVector, load_words, save_words

import oracle


def W(d, text):
    return Factorization.parse_word(d, text)


def words(max_degree=5, max_len=6):
    def build(args):
        d, n, seed = args
        rng = random.Random(seed)
        pool = [Perm(p) for p in __import__("itertools").permutations(range(1, d + 1))]
        pool = [p for p in pool if not p.is_identity()]
        return Factorization(d, tuple(rng.choice(pool) for _ in range(n)))
    return st.tuples(st.integers(2, max_degree), st.integers(1, max_len),
                     st.integers(0, 10**6)).map(build)


class TestConstruction:
    def test_rejects_identity_factor(self):
        with pytest.raises(ValueError):
            Factorization(3, (Perm.identity(3),))

    def test_builder_drops_identity(self):
        w = Factorization.of(3, ["(1,2)", "()", "(2,3)"], drop_identity=True)
        assert len(w) == 2

    def test_mixed_degrees_rejected(self):
        with pytest.raises(ValueError):
            Factorization(3, (Perm.identity(4),))

    def test_empty_word(self):
        w = Factorization.empty(3)
        assert len(w) == 0
        assert w.product().is_identity()
        assert w.type_vector().counts == ()


class TestHomomorphisms:
    def test_product_examples(self):
        assert Factorization.empty(3).product().is_identity()
        assert W(3, "(1,2)(2,3)").product() == Perm.parse("(1,2,3)", 3)
        h3 = W(3, "(1,2)(2,3)").repeated(3)
        assert h3.product().is_identity()

    def test_type_and_length(self):
        w = W(3, "(1,2)(2,3)(1,3)")
        assert w.type_vector() == TypeVector.single((2, 1), 3)
        assert len(w) == 3

    def test_generated_subgroup_examples(self):
        assert len(W(3, "(1,2)").generated_subgroup()) == 2
        assert len(W(3, "(1,2)(2,3)").generated_subgroup()) == 6
        klein = Factorization.of(4, ["(1,2)(3,4)", "(1,3)(2,4)"])
        assert len(klein.generated_subgroup()) == 4

    @given(words())
    def test_concat_is_product_homomorphism(self, w):
        half = len(w) // 2
        s1 = Factorization(w.degree, w.factors[:half])
        s2 = Factorization(w.degree, w.factors[half:])
        assert s1.concat(s2).product() == s1.product() * s2.product()

    def test_predicates(self):
        w = W(3, "(1,2)(2,3)")
        assert w.generates(w.generated_subgroup())
        assert W(3, "(1,2)(1,2)").product_in([Perm.identity(3)])
        assert not Factorization.of(4, ["(1,2)(3,4)"]).is_transitive()
        assert w.is_transitive()


class TestMoves:
    def test_move_examples(self):
        w = W(3, "(1,2)(2,3)")
        assert w.apply_move(Move(1, "R")) == W(3, "(1,3)(1,2)")
        fixed = W(3, "(1,2)(1,2)")
        assert fixed.apply_move(Move(1, "R")) == fixed

    def test_position_out_of_range(self):
        with pytest.raises(ValueError):
            W(3, "(1,2)(2,3)").apply_move(Move(2, "R"))
        with pytest.raises(ValueError):
            Move(0, "R")
        with pytest.raises(ValueError):
            Move(1, "X")

    @given(words(max_len=6), st.randoms(use_true_random=False))
    def test_left_right_cancel_at_every_position(self, w, rng):
        for pos in range(1, len(w)):
            assert w.apply_move(Move(pos, "R")).apply_move(Move(pos, "L")) == w
            assert w.apply_move(Move(pos, "L")).apply_move(Move(pos, "R")) == w

    @given(words(max_len=8), st.integers(0, 10**6))
    @settings(max_examples=60)
    def test_random_moves_preserve_invariants(self, w, seed):
        rng = random.Random(seed)
        before = (w.product(), w.type_vector(), len(w), w.generated_subgroup())
        out = w
        for _ in range(rng.randint(1, 30)):
            if len(out) < 2:
                break
            out = out.apply_move(Move(rng.randint(1, len(out) - 1), rng.choice("LR")))
        assert (out.product(), out.type_vector(), len(out), out.generated_subgroup()) == before

    @given(words(max_len=6))
    def test_moves_match_oracle(self, w):
        if len(w) < 2:
            return
        for i in range(len(w) - 1):
            got = w.apply_move(Move(i + 1, "R"))
            want = oracle.o_move_r(oracle.from_word(w.factors), i)
            assert oracle.from_word(got.factors) == want
            got = w.apply_move(Move(i + 1, "L"))
            want = oracle.o_move_l(oracle.from_word(w.factors), i)
            assert oracle.from_word(got.factors) == want


class TestConjugation:
    def test_rho_examples(self):
        w = W(3, "(1,2)(2,3)")
        assert w.conjugated_by(Perm.identity(3)) == w
        assert w.conjugated_by(Perm.parse("(1,3)", 3)) == W(3, "(2,3)(1,2)")

    def test_rho_covariance(self):
        w = W(3, "(1,2)(2,3)")
        g = Perm.parse("(1,3)", 3)
        assert w.conjugated_by(g).product() == g * w.product() * g.inverse()

    @given(words(), st.integers(0, 10**6))
    def test_rho_covariance_random(self, w, seed):
        rng = random.Random(seed)
        images = list(range(1, w.degree + 1))
        rng.shuffle(images)
        g = Perm(images)
        assert w.conjugated_by(g).product() == g * w.product() * g.inverse()
        assert w.conjugated_by(g).type_vector() == w.type_vector()

    @given(words(max_len=6), st.integers(0, 10**6))
    def test_rho_commutes_with_moves(self, w, seed):
        if len(w) < 2:
            return
        rng = random.Random(seed)
        images = list(range(1, w.degree + 1))
        rng.shuffle(images)
        g = Perm(images)
        m = Move(rng.randint(1, len(w) - 1), rng.choice("LR"))
        assert w.apply_move(m).conjugated_by(g) == w.conjugated_by(g).apply_move(m)


class TestTypeVector:
    def test_parse_format(self):
        tv = TypeVector.parse("2,1,1:6", 4)
        assert tv == TypeVector.single((2, 1, 1), 6)
        assert str(tv) == "2,1,1:6"
        multi = TypeVector.parse("3,1:2;2,1,1:6", 4)
        assert multi.total() == 8
        assert str(multi) == "2,1,1:6;3,1:2"

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            TypeVector.parse("2,1", 3)
        with pytest.raises(ValueError):
            TypeVector.parse("", 3)
        with pytest.raises(ValueError):
            TypeVector.single((2, 1), 0)


class TestFiles:
    def test_roundtrip(self, tmp_path):
        ws = [W(3, "(1,2) (2,3) (1,3)"), W(3, "(1,2,3)"), Factorization.empty(3)]
        path = tmp_path / "words.txt"
        save_words(path, 3, ws)
        degree, back = load_words(path)
        assert degree == 3
        assert back == ws

    def test_header_required(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("(1,2)\n")
        with pytest.raises(ValueError):
            load_words(path)

    def test_inline_forms(self):
        assert len(W(4, "(1,2)(2,3)")) == 2          # unspaced: one factor per bracket
        w = W(4, "(1,2)(3,4) (1,3)")                  # spaced: multi-cycle factor
        assert len(w) == 2
        assert w.factors[0] == Perm.parse("(1,2)(3,4)", 4)
        assert len(W(4, "[2,1,4,3]")) == 1
        assert len(W(4, "()")) == 0
        with pytest.raises(ValueError):
            W(4, "(1,2")
