"""Words, presentations and coset enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tpg.fpgrp import (
    R1,
    R2,
    R3,
    R4,
    R5,
    CosetTable,
    Presentation,
    Word,
    coset_action,
    evaluate_word,
    parse_presentation,
    parse_word,
    todd_coxeter,
    tp_presentation,
    verify_presentation,
)
from tpg.permgrp import (
    CapacityError,
    Perm,
    cyclic_group,
    dihedral_group,
    direct_product,
    generate,
    isomorphic,
    symmetric_group,
)


def perms(degree, *cycle_strs):
    return [Perm.parse(s, degree) for s in cycle_strs]


def images(degree, sa, sb, sc):
    a, b, c = perms(degree, sa, sb, sc)
    return {"a": a, "b": b, "c": c}


# The explicit generator triple for the order-216 group S3 x S3 x S3.
IMAGES_S3CUBED = images(9, "(1,2)(4,5)", "(4,5)(7,8)", "(1,3)(4,6)(7,9)")

# The explicit generator triple for the order-3840 group 2^5:S5.
IMAGES_BIG = images(
    12,
    "(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)",
    "(1,3)(2,4)(5,8)(6,7)(9,12)(10,11)",
    "(1,7)(2,6)(3,9)(4,11)(5,10)(8,12)",
)


class TestWord:
    def test_relator_letter_strings(self):
        assert str(R1) == "acbc"
        assert str(R2) == "abcbc"
        assert str(R3) == "abcac"
        assert str(R4) == "cacbca"
        assert str(R5) == "acacbcbc"

    def test_algebra(self):
        w = Word("ab") * Word("c")
        assert w == Word("abc")
        assert w.inverse() == Word("cba")
        assert Word("ac") ** 3 == Word("acacac")
        assert Word("ac") ** 0 == Word()
        assert Word("ac") ** -1 == Word("ca")
        assert Word("a").conj(Word("ca")) == Word("acaca")
        assert len(Word("abc")) == 3
        assert str(Word()) == "1"

    def test_reduced(self):
        assert Word("abba").reduced() == Word()
        assert Word("aabccb").reduced() == Word()
        assert Word("acbc").reduced() == Word("acbc")
        assert Word("abccba").reduced() == Word()

    def test_validation(self):
        with pytest.raises(ValueError):
            Word("ad")
        with pytest.raises(AttributeError):
            Word("a").letters = ()

    def test_parse_basics(self):
        assert parse_word("abc") == Word("abc")
        assert parse_word("a*b*c") == Word("abc")
        assert parse_word("(ab)^2") == Word("abab")
        assert parse_word("b^(ca)") == Word("acbca")
        assert parse_word("a^-1") == Word("a")
        assert parse_word("(ac)^-2") == Word("caca")
        assert parse_word("1") == Word()
        assert parse_word("a^b^c") == Word("a").conj(Word("b")).conj(Word("c"))

    def test_parse_errors(self):
        for bad in ("d", "(ab", "ab)", "a^", "2", "a^()b??"):
            with pytest.raises(ValueError):
                parse_word(bad)

    @given(st.lists(st.sampled_from("abc"), max_size=12))
    def test_parse_print_round_trip(self, letters):
        w = Word(letters)
        assert parse_word(str(w)) == w

    @given(
        st.lists(st.sampled_from("abc"), max_size=8),
        st.lists(st.sampled_from("abc"), max_size=8),
    )
    def test_inverse_antihomomorphism(self, xs, ys):
        u, v = Word(xs), Word(ys)
        assert (u * v).inverse() == v.inverse() * u.inverse()
        assert u.inverse().inverse() == u

    @given(st.lists(st.sampled_from("abc"), max_size=10))
    def test_reduction_preserves_evaluation(self, letters):
        w = Word(letters)
        lhs = evaluate_word(w, IMAGES_S3CUBED)
        assert lhs == evaluate_word(w.reduced(), IMAGES_S3CUBED)
        assert w.reduced().reduced() == w.reduced()

    @given(
        st.lists(st.sampled_from("abc"), max_size=8),
        st.lists(st.sampled_from("abc"), max_size=6),
    )
    def test_conjugation_matches_permutations(self, xs, ys):
        w, y = Word(xs), Word(ys)
        pw = evaluate_word(w, IMAGES_S3CUBED)
        py = evaluate_word(y, IMAGES_S3CUBED)
        assert evaluate_word(w.conj(y), IMAGES_S3CUBED) == pw.conj(py)


class TestPresentation:
    def test_tp_presentation_relators(self):
        p = tp_presentation(4, 4, 4)
        assert p.relators == (
            (Word("a"), 2),
            (Word("b"), 2),
            (Word("c"), 2),
            (Word("ab"), 2),
            (Word("ac"), 4),
            (Word("bc"), 4),
            (Word("abc"), 4),
        )

    def test_added_relations(self):
        p = tp_presentation(6, 6, 6, (6, 6, 6, None, 3))
        assert p.relators[-4:] == ((R1, 6), (R2, 6), (R3, 6), (R5, 3))

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            tp_presentation(0, 4, 4)
        with pytest.raises(ValueError):
            tp_presentation(4, 7, 4)
        with pytest.raises(ValueError):
            tp_presentation(4, 4, 4, (1, 2))
        with pytest.raises(ValueError):
            tp_presentation(4, 4, 4, (7, None, None, None, None))

    def test_with_relator_validation(self):
        p = tp_presentation(4, 4, 4)
        with pytest.raises(ValueError):
            p.with_relator(Word(), 2)
        with pytest.raises(ValueError):
            p.with_relator(Word("ac"), 0)

    def test_text_round_trip(self):
        p = tp_presentation(4, 5, 6, (4, None, None, None, 3))
        p = p.with_relator(Word("cacbca"), 1)
        assert parse_presentation(p.to_text()) == p

    def test_parse_with_comments(self):
        text = """
        gens a b c;   # generators
        rel (a)^2; rel (b)^2;  # involutions
        rel (c)^2;
        rel acbc;
        """
        p = parse_presentation(text)
        assert p.relators == (
            (Word("a"), 2),
            (Word("b"), 2),
            (Word("c"), 2),
            (Word("acbc"), 1),
        )

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_presentation("gens a b; rel (a)^2;")
        with pytest.raises(ValueError):
            parse_presentation("gens a b c; relator (a)^2;")


class TestEvaluate:
    def test_single_letter(self):
        assert evaluate_word(Word("a"), IMAGES_S3CUBED) == IMAGES_S3CUBED["a"]

    def test_cube_values_in_s3_cubed(self):
        vals = {
            "(ac)^3": "(7,9)",
            "(bc)^3": "(1,3)",
            "(abc)^3": "(4,6)",
        }
        for expr, cyc in vals.items():
            got = evaluate_word(parse_word(expr), IMAGES_S3CUBED)
            assert got == Perm.parse(cyc, 9)
        assert evaluate_word(Word("ac"), IMAGES_S3CUBED).order() == 6

    def test_relator_orders_pin_conjugation_convention(self):
        # the 2^5:S5 triple satisfies added relations (5,5,5,4): any other
        # reading of x^y would change these orders
        assert evaluate_word(R1, IMAGES_BIG).order() == 5
        assert evaluate_word(R2, IMAGES_BIG).order() == 5
        assert evaluate_word(R3, IMAGES_BIG).order() == 5
        assert evaluate_word(R4, IMAGES_BIG).order() == 4

    def test_identity_word(self):
        assert evaluate_word(Word(), IMAGES_BIG).is_identity()

    def test_degree_mismatch(self):
        bad = dict(IMAGES_BIG)
        bad["c"] = Perm.identity(5)
        with pytest.raises(ValueError):
            evaluate_word(Word("abc"), bad)


class TestToddCoxeter:
    def test_m1_collapse(self):
        t = todd_coxeter(tp_presentation(1, 6, 6))
        assert t.coset_count == 4
        G = coset_action(t)
        assert G.order == 4
        assert G.is_elementary_abelian_2()

    def test_m2_collapse(self):
        t = todd_coxeter(tp_presentation(2, 6, 6))
        assert t.coset_count == 24
        G = coset_action(t)
        ref = direct_product(cyclic_group(2), dihedral_group(12))
        assert isomorphic(G, ref)

    def test_m3_collapse(self):
        t = todd_coxeter(tp_presentation(3, 6, 6))
        assert t.coset_count == 108

    @pytest.mark.parametrize("r4,count", [(1, 12), (5, 12), (3, 108), (2, 216), (4, 216)])
    def test_r4_collapses(self, r4, count):
        t = todd_coxeter(tp_presentation(6, 6, 6, (6, 6, 6, r4, None)))
        assert t.coset_count == count
        if count == 12:
            assert isomorphic(coset_action(t), dihedral_group(12))

    def test_r4_3_matches_m3(self):
        a = coset_action(todd_coxeter(tp_presentation(6, 6, 6, (6, 6, 6, 3, None))))
        b = coset_action(todd_coxeter(tp_presentation(3, 6, 6)))
        assert isomorphic(a, b)

    def test_wreath_group_order(self):
        t = todd_coxeter(tp_presentation(4, 4, 4))
        assert t.coset_count == 64
        gens = perms(8, "(1,2)(3,4)", "(1,3)(2,4)(5,6)(7,8)", "(1,5)(2,7)")
        assert generate(8, gens).order == 64

    def test_subgroup_enumeration(self):
        t = todd_coxeter(tp_presentation(1, 6, 6), subgroup=[Word("a")])
        assert t.coset_count == 2
        assert t.subgroup == (Word("a"),)

    def test_capacity_error(self):
        free = Presentation(((Word("a"), 2), (Word("b"), 2), (Word("c"), 2)))
        with pytest.raises(CapacityError):
            todd_coxeter(free, capacity=500)

    def test_square_relators_required(self):
        bad = Presentation(((Word("a"), 2), (Word("b"), 2)))
        with pytest.raises(ValueError):
            todd_coxeter(bad)

    def test_determinism(self):
        p = tp_presentation(2, 6, 6)
        assert todd_coxeter(p).rows == todd_coxeter(p).rows

    def test_table_structure(self):
        t = todd_coxeter(tp_presentation(2, 6, 6))
        n = t.coset_count
        for letter in "abc":
            col = t.column(letter)
            assert sorted(col) == list(range(n))
            assert all(col[col[i]] == i for i in range(n))

    def test_coset_action_on_incomplete_table(self):
        t = CosetTable(rows=((0, 0, 0),), complete=False)
        with pytest.raises(ValueError):
            coset_action(t)


class TestPaperGroups:
    def test_trio_of_order_72_presentations_pairwise_isomorphic(self):
        actions = []
        for r in [(2, 6, 6), (6, 2, 6), (6, 6, 2)]:
            t = todd_coxeter(tp_presentation(6, 6, 6, r + (None, None)))
            assert t.coset_count == 72
            actions.append(coset_action(t))
        assert isomorphic(actions[0], actions[1])
        assert isomorphic(actions[1], actions[2])

    def test_s6_presentation(self):
        x = parse_word("(bc)^3 * b^(ca)")
        pres = tp_presentation(6, 6, 5, (4, None, None, None, None)).with_relator(x, 3)
        imgs = images(6, "(1,2)(3,4)(5,6)", "(5,6)", "(2,3)(4,5)")
        assert verify_presentation(pres, imgs, symmetric_group(6))
        assert todd_coxeter(pres).coset_count == 720

    def test_s6_verify_rejects_identity_images(self):
        x = parse_word("(bc)^3 * b^(ca)")
        pres = tp_presentation(6, 6, 5, (4, None, None, None, None)).with_relator(x, 3)
        ident = {g: Perm.identity(6) for g in "abc"}
        assert not verify_presentation(pres, ident, symmetric_group(6))

    def test_order_216_presentation(self):
        y = parse_word("a * c^(bc)")
        pres = tp_presentation(6, 6, 6, (6, 6, 6, None, 3)).with_relator(y, 2)
        imgs = images(11, "(1,4)(2,6)(3,5)(8,9)", "(1,4)(2,8)(6,9)(10,11)", "(2,7)(3,4)(5,9)")
        t = todd_coxeter(pres)
        assert t.coset_count == 216
        H = generate(11, list(imgs.values()))
        assert H.order == 216
        assert verify_presentation(pres, imgs, H)

    def test_verify_rejects_degree_mismatch(self):
        pres = tp_presentation(1, 6, 6)
        imgs = {g: Perm.identity(4) for g in "abc"}
        assert not verify_presentation(pres, imgs, symmetric_group(6))
