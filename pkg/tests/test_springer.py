from fractions import Fraction

import pytest

from weylcert.orbits import HypothesisError, exceptional, sl, so, sp
from weylcert.partitions import (distinct_partitions_of, partitions_of,
                                 transpose)
from weylcert.springer import (d_value_A, exceptional_sign_twist, good_set,
                               good_set_via_span, kostka_foulkes, p_matrix_A,
                               poly_eval, q_matrix_at_minus1_A,
                               spin_multiplicity_B, tau_data, x_minus1_A)
from weylcert.orbits import weyl_group
from weylcert.weyl import (WeylType, elliptic_pairing, irreducible_labels,
                           sign_label, sign_twist_label, trivial_label)


KF_PINS = [
    ((2,), (1, 1), (0, 1)),                 # q
    ((2, 1), (1, 1, 1), (0, 1, 1)),         # q + q^2
    ((2, 2), (1, 1, 1, 1), (0, 0, 1, 0, 1)),  # q^2 + q^4
    ((2, 2), (2, 1, 1), (0, 1)),            # q
    ((3, 1), (2, 2), (0, 1)),               # q
]


def test_kostka_foulkes_pins():
    for lam, mu, poly in KF_PINS:
        assert kostka_foulkes(lam, mu) == poly


def test_kostka_foulkes_diagonal_and_triangularity():
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert kostka_foulkes(lam, lam) == (1,)
        for i, lam in enumerate(partitions_of(n)):
            for j, mu in enumerate(partitions_of(n)):
                if j < i:
                    assert kostka_foulkes(lam, mu) == ()


def test_kostka_foulkes_size_mismatch():
    with pytest.raises(ValueError):
        kostka_foulkes((2, 1), (2, 2))


def test_p_matrix_unitriangular():
    for n in range(2, 7):
        m = p_matrix_A(n)
        k = len(m.labels)
        for i in range(k):
            assert poly_eval(m.entries[i][i], 1) == 1
            for j in range(i):
                assert m.entries[i][j] == ()


def test_q_matrix_inverts_p_at_minus1():
    for n in range(2, 8):
        labels = partitions_of(n)
        p = [[poly_eval(e, -1) for e in row] for row in p_matrix_A(n).entries]
        q = q_matrix_at_minus1_A(n)
        k = len(labels)
        for i in range(k):
            for j in range(k):
                s = sum(p[i][t] * q[t][j] for t in range(k))
                assert s == int(i == j)


def test_q_matrix_n4_rows():
    assert q_matrix_at_minus1_A(4) == (
        (1, 1, 0, 1, 1),
        (0, 1, 1, 1, 0),
        (0, 0, 1, 1, -1),
        (0, 0, 0, 1, 1),
        (0, 0, 0, 0, 1),
    )


def test_d_value_pins():
    # trivial and sign reach the regular-orbit norm
    for n, reg in ((4, Fraction(5)), (5, 10), (6, Fraction(35, 2)), (7, 28)):
        assert d_value_A((n,)) == reg
        assert d_value_A((1,) * n) == reg
    assert d_value_A((2, 2)) == 2
    assert d_value_A((3, 1)) == d_value_A((2, 1, 1))


def test_x_minus1_gram_diagonal_small():
    for n in range(2, 6):
        t = WeylType("A", n)
        dps = distinct_partitions_of(n)
        xs = [x_minus1_A(lam) for lam in dps]
        for i, lam in enumerate(dps):
            for j in range(len(dps)):
                expect = 2 ** (len(lam) - 1) if i == j else 0
                assert elliptic_pairing(xs[i], xs[j]) == expect


def test_tau_data_carried_cases():
    for t, which, count in ((sl(5), "regular", 1), (sl(5), "subregular", 1),
                            (sl(5), "subsubregular", 1),
                            (sp(8), "regular", 1), (sp(8), "subregular", 2),
                            (so(9), "regular", 1), (so(9), "subregular", 1),
                            (so(9), "subsubregular", 2),
                            (so(8), "regular", 1), (so(8), "subregular", 1)):
        data = tau_data(t, which)
        assert len(data) == count
        for datum in data:
            assert datum.class_function.weyl_type == weyl_group(t)


def test_tau_data_refusals():
    with pytest.raises(ValueError):
        tau_data(sp(8), "subsubregular")
    with pytest.raises(ValueError):
        tau_data(so(8), "subsubregular")


def test_good_regular_everywhere():
    for t in (sl(5), sl(8), sp(6), sp(12), so(7), so(13), so(8), so(12)):
        w = weyl_group(t)
        assert good_set(t, "regular") == {trivial_label(w), sign_label(w)}


def test_good_subregular_rank3_special_cases():
    # rank <= 3 type A and C: every type is good
    for t in (sl(4), sp(6)):
        w = weyl_group(t)
        assert good_set(t, "subregular") == set(irreducible_labels(w))


def test_good_subregular_sl():
    for n in (5, 6, 7):
        expect = {(n,), (1,) * n, (n - 1, 1), (2,) + (1,) * (n - 2)}
        assert good_set(sl(n), "subregular") == expect


def test_good_subregular_sp8_list():
    expect = {((4,), ()), ((1, 1, 1, 1), ()), ((), (4,)), ((), (1, 1, 1, 1)),
              ((3, 1), ()), ((), (2, 1, 1)), ((3,), (1,)), ((1,), (1, 1, 1))}
    assert good_set(sp(8), "subregular") == expect


def test_good_subregular_so7_list():
    expect = {((3,), ()), ((), (1, 1, 1)), ((2, 1), ()), ((), (2, 1)),
              ((2,), (1,)), ((1,), (1, 1))}
    assert good_set(so(7), "subregular") == expect


def test_good_subregular_so8_list():
    expect = {((4,), ()), ((1, 1, 1, 1), ()), ((3, 1), ()),
              ((2, 1, 1), ()), ((3,), (1,)), ((1, 1, 1), (1,))}
    assert good_set(so(8), "subregular") == expect


def test_good_sets_never_emit_split_labels():
    for t in (so(8), so(10), so(12)):
        for which in ("regular", "subregular"):
            assert all(len(lab) == 2 for lab in good_set(t, which))


def test_good_refusals():
    with pytest.raises(ValueError):
        good_set(sp(8), "subsubregular")
    with pytest.raises(HypothesisError):
        good_set(so(6), "subregular")


def test_good_sgn_closed():
    for t in (sl(6), sp(8), so(9), so(8)):
        w = weyl_group(t)
        for which in ("regular", "subregular"):
            g = good_set(t, which)
            assert {sign_twist_label(w, lab) for lab in g} == g


def test_dual_route_sl_small():
    for n in (4, 5, 6):
        for which in ("regular", "subregular"):
            assert good_set(sl(n), which) == good_set_via_span(sl(n), which)


def test_exceptional_good_statics():
    g2 = exceptional("G2")
    assert good_set(g2, "regular") == {"phi(1,0)", "phi(1,6)"}
    assert len(good_set(g2, "subregular")) == 6
    f4 = exceptional("F4")
    assert good_set(f4, "subregular") == {
        "phi(1,0)", "phi(4,1)", "phi(4,13)", "phi(2,4)'", "phi(2,16)''",
        "phi(1,24)"}
    assert len(good_set(f4, "subsubregular")) == 14
    e6 = exceptional("E6")
    assert good_set(e6, "subregular") == {"phi(1,0)", "phi(6,1)",
                                          "phi(6,25)", "phi(1,36)"}
    assert good_set(e6, "subsubregular") - good_set(e6, "subregular") == {
        "phi(20,2)", "phi(20,20)"}
    with pytest.raises(ValueError):
        good_set(g2, "subsubregular")


def test_exceptional_good_sgn_closed():
    for fam in ("G2", "F4", "E6", "E7", "E8"):
        t = exceptional(fam)
        for which in ("regular", "subregular", "subsubregular"):
            try:
                g = good_set(t, which)
            except ValueError:
                continue
            assert {exceptional_sign_twist(fam, lab) for lab in g} == g


def test_spin_multiplicity_pins():
    # multiplicity of lam in the product of alpha with beta transposed
    assert spin_multiplicity_B(((2,), (1, 1)), (2, 2)) == 1
    assert spin_multiplicity_B(((2,), (1, 1)), (4,)) == 1
    assert spin_multiplicity_B(((2,), (1, 1)), (2, 1, 1)) == 0
    with pytest.raises(ValueError):
        spin_multiplicity_B(((2,), (1,)), (4,))
