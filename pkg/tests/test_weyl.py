from fractions import Fraction

import pytest

from weylcert.partitions import partitions_of, transpose
from weylcert.weyl import (ClassFunction, ConjugacyClass, WeylType,
                           conjugacy_classes, dimension, elliptic_pairing,
                           elliptic_span_member, group_order, identity_index,
                           inner_product, irr_character, irreducible_labels,
                           lr_coefficient, minus1_elliptic_classes,
                           reflection_character, sign_label, sign_twist_label,
                           symmetric_group_character, tensor, trivial_label,
                           wedge_character)

S4 = WeylType("A", 4)
S5 = WeylType("A", 5)
B3 = WeylType("B", 3)
B4 = WeylType("B", 4)
D4 = WeylType("D", 4)
D5 = WeylType("D", 5)


def test_group_orders():
    assert group_order(S5) == 120
    assert group_order(WeylType("A", 6)) == 720
    assert group_order(B4) == 384
    assert group_order(D4) == 192
    assert group_order(WeylType("B", 6)) == 46080


def test_class_sizes_sum_to_group_order():
    for t in (S4, B3, B4, D4, D5):
        assert sum(size for _, size in conjugacy_classes(t)) == group_order(t)


def test_class_counts():
    assert len(conjugacy_classes(S4)) == 5          # p(4)
    assert len(conjugacy_classes(B3)) == 10         # sum p(a)p(b), a+b=3
    assert len(conjugacy_classes(D4)) == 13
    for t in (S4, B3, B4, D4, D5):
        assert len(irreducible_labels(t)) == len(conjugacy_classes(t))


def test_identity_class():
    for t in (S4, B3, D4):
        cls, size = conjugacy_classes(t)[identity_index(t)]
        assert size == 1
        assert cls.mu == (1,) * t.rank and cls.nu == ()


S4_TABLE = {
    # rows of the S4 character table, one per irreducible shape
    (4,): {(4,): 1, (3, 1): 1, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1},
    (3, 1): {(4,): -1, (3, 1): 0, (2, 2): -1, (2, 1, 1): 1,
             (1, 1, 1, 1): 3},
    (2, 2): {(4,): 0, (3, 1): -1, (2, 2): 2, (2, 1, 1): 0,
             (1, 1, 1, 1): 2},
    (2, 1, 1): {(4,): 1, (3, 1): 0, (2, 2): -1, (2, 1, 1): -1,
                (1, 1, 1, 1): 3},
    (1, 1, 1, 1): {(4,): -1, (3, 1): 1, (2, 2): 1, (2, 1, 1): -1,
                   (1, 1, 1, 1): 1},
}


def test_symmetric_group_character_table_s4():
    for lam, row in S4_TABLE.items():
        for mu, value in row.items():
            assert symmetric_group_character(lam, mu) == value


def test_symmetric_group_character_size_mismatch():
    with pytest.raises(ValueError):
        symmetric_group_character((2, 1), (2, 2))


def test_dimension_squares_sum():
    for t in (S4, B3, B4, D4):
        assert sum(dimension(t, lab) ** 2
                   for lab in irreducible_labels(t)) == group_order(t)


def test_orthonormality_small():
    for t in (S4, B3, D4):
        labels = irreducible_labels(t)
        chars = [irr_character(t, lab) for lab in labels]
        for i, f in enumerate(chars):
            for j in range(i, len(chars)):
                assert inner_product(f, chars[j]) == int(i == j)


def test_trivial_and_sign():
    assert trivial_label(S4) == (4,)
    assert sign_label(S4) == (1, 1, 1, 1)
    assert trivial_label(B3) == ((3,), ())
    assert sign_label(B3) == ((), (1, 1, 1))
    assert trivial_label(D4) == ((4,), ())
    assert sign_label(D4) == ((1, 1, 1, 1), ())
    for t in (S4, B3, D4):
        assert all(v == 1 for v in irr_character(t, trivial_label(t)).values)


def test_reflection_character_values():
    # trace of the natural matrix: fixed points count, signed in B/D
    for t in (S4, B3, B4, D4, D5):
        refl = reflection_character(t)
        for (cls, _), value in zip(conjugacy_classes(t), refl.values):
            m1_pos = sum(1 for x in cls.mu if x == 1)
            m1_neg = sum(1 for x in cls.nu if x == 1)
            if t.family == "A":
                assert value == m1_pos - 1
            else:
                assert value == m1_pos - m1_neg


def test_wedge_support_and_values():
    for t in (S4, B3, B4, D4, D5):
        wedge = wedge_character(t)
        for (cls, _), value in zip(conjugacy_classes(t), wedge.values):
            if t.family == "A":
                elliptic = all(x % 2 for x in cls.mu)
                expect = 2 ** (len(cls.mu) - 1) if elliptic else 0
            else:
                elliptic = (all(x % 2 for x in cls.mu)
                            and all(x % 2 == 0 for x in cls.nu))
                expect = 2 ** (len(cls.mu) + len(cls.nu)) if elliptic else 0
            assert value == expect


def test_sign_is_one_on_elliptic_classes():
    for t in (S4, WeylType("A", 6), B3, B4, D4, D5):
        sgn = irr_character(t, sign_label(t))
        classes = [c for c, _ in conjugacy_classes(t)]
        for cls in minus1_elliptic_classes(t):
            assert sgn.values[classes.index(cls)] == 1


def test_no_split_class_is_elliptic():
    for t in (D4, D5, WeylType("D", 6)):
        for cls in minus1_elliptic_classes(t):
            assert cls.tag is None


def test_elliptic_pairing_matches_definition():
    refl = reflection_character(B3)
    sgn = irr_character(B3, sign_label(B3))
    wedge = wedge_character(B3)
    assert elliptic_pairing(refl, sgn) == inner_product(refl,
                                                        tensor(sgn, wedge))


def test_elliptic_span_member_basics():
    triv = irr_character(B3, trivial_label(B3))
    sgn = irr_character(B3, sign_label(B3))
    refl = reflection_character(B3)
    assert elliptic_span_member(triv, (triv,)) is not None
    # sgn agrees with triv on every elliptic class
    assert elliptic_span_member(sgn, (triv,)) is not None
    assert elliptic_span_member(refl, (triv,)) is None
    # empty basis detects elliptic vanishing only
    assert elliptic_span_member(triv, ()) is None


def test_lr_pieri_row():
    assert lr_coefficient((4,), (2,), (2,)) == 1
    assert lr_coefficient((3, 1), (2,), (2,)) == 1
    assert lr_coefficient((2, 2), (2,), (2,)) == 1
    assert lr_coefficient((2, 1, 1), (2,), (2,)) == 0


def test_lr_multiplicity_two():
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2


def test_lr_size_mismatch():
    with pytest.raises(ValueError):
        lr_coefficient((3, 1), (2,), (3,))


def test_sign_twist_labels():
    assert sign_twist_label(S5, (3, 2)) == (2, 2, 1)
    assert sign_twist_label(B3, ((2,), (1,))) == ((1,), (1, 1))
    assert sign_twist_label(B3, trivial_label(B3)) == sign_label(B3)
    assert sign_twist_label(D4, trivial_label(D4)) == sign_label(D4)
    for t in (S4, B3, B4, D4, D5):
        for lab in irreducible_labels(t):
            tw = sign_twist_label(t, lab)
            assert sign_twist_label(t, tw) == lab
            assert dimension(t, tw) == dimension(t, lab)


def test_sign_twist_is_tensor_with_sign():
    for t in (S4, B3, D4):
        sgn = irr_character(t, sign_label(t))
        for lab in irreducible_labels(t):
            twisted = tensor(irr_character(t, lab), sgn)
            assert twisted.values == irr_character(
                t, sign_twist_label(t, lab)).values


def test_d_split_halves_sum_to_b_restriction():
    t, tb = D4, B4
    b_classes = [c for c, _ in conjugacy_classes(tb)]
    d_classes = [c for c, _ in conjugacy_classes(t)]
    for lab in irreducible_labels(t):
        if len(lab) != 3:
            continue
        alpha = lab[0]
        whole = irr_character(tb, (alpha, alpha))
        plus = irr_character(t, (alpha, alpha, "+"))
        minus = irr_character(t, (alpha, alpha, "-"))
        for idx, cls in enumerate(d_classes):
            b_idx = b_classes.index(ConjugacyClass(cls.mu, cls.nu))
            assert (plus.values[idx] + minus.values[idx]
                    == whole.values[b_idx])


def test_class_function_arithmetic():
    triv = irr_character(B3, trivial_label(B3))
    sgn = irr_character(B3, sign_label(B3))
    s = triv + sgn
    assert inner_product(s, triv) == 1
    assert inner_product(s - sgn, sgn) == 0
    assert inner_product(triv.scaled(Fraction(3, 2)), triv) == Fraction(3, 2)
