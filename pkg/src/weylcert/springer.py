"""Springer-side combinatorics: graded transition matrices and Good sets.

Type A is fully computable: Kostka-Foulkes polynomials (charge statistic)
assemble the unitriangular matrix P(q), its inverse Q(q) at q = -1 drives
both the d-values and the Theta-hit tests.  For sp/so only a handful of
X_{-1} class functions are carried (regular, subregular, and the odd-so
subsubregular orbits); Good sets there are computed by exact elliptic
span membership against that basis.  Exceptional Good sets are static.

The q-grading convention inside p_matrix_A is frozen by a single test:
the elliptic Gram matrix of {x_minus1_A(lam)} must be diagonal exactly
on the distinct-part columns with entries 2^(len(lam)-1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from .orbits import (DualType, HypothesisError, Orbit, h_half_norm_sq,
                     is_classical, nsol_orbits, orbit, special_orbit,
                     weyl_group)
from .partitions import (Partition, as_partition, distinct_partitions_of,
                         partitions_of, transpose)
from .weyl import (ClassFunction, WeylType, elliptic_span_member,
                   irr_character, irreducible_labels, lr_coefficient)

# Coefficients in ascending degree; () is the zero polynomial.
IntPolynomial = tuple[int, ...]


def poly_eval(p: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Charge and Kostka-Foulkes polynomials

def _charge(word: tuple[int, ...]) -> int:
    """Charge of a word with partition content.

    Standard subwords are split off right to left: take the rightmost 1,
    then for each next letter the rightmost occurrence strictly to its
    left, wrapping around (and bumping the counter) when there is none.
    """
    remaining = dict(enumerate(word))
    total = 0
    while remaining:
        ones = [p for p, v in remaining.items() if v == 1]
        if not ones:
            raise ArithmeticError(f"content of {word} is not a partition")
        cur = max(ones)
        del remaining[cur]
        c = 0
        target = 2
        while True:
            cands = [p for p, v in remaining.items() if v == target]
            if not cands:
                break
            left = [p for p in cands if p < cur]
            if left:
                pick = max(left)
            else:
                pick = max(cands)
                c += 1
            total += c
            del remaining[pick]
            cur = pick
            target += 1
    return total


def _ssyt(lam: Partition, mu: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """All semistandard tableaux of shape lam and content mu."""
    nletters = len(mu)
    remaining = list(mu)
    rows: list[tuple[int, ...]] = []
    out: list[tuple[tuple[int, ...], ...]] = []

    def build_row(r: int, row: list[int]) -> None:
        c = len(row)
        if c == lam[r]:
            rows.append(tuple(row))
            fill(r + 1)
            rows.pop()
            return
        lo = row[c - 1] if c else 1
        if r:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, nletters + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                row.append(v)
                build_row(r, row)
                row.pop()
                remaining[v - 1] += 1

    def fill(r: int) -> None:
        if r == len(lam):
            out.append(tuple(rows))
            return
        build_row(r, [])

    fill(0)
    return out


def _reading_word(tab) -> tuple[int, ...]:
    word: list[int] = []
    for row in reversed(tab):
        word.extend(row)
    return tuple(word)


@lru_cache(maxsize=None)
def kostka_foulkes(lam, mu) -> IntPolynomial:
    """K_{lam,mu}(q): charge generating function over SSYT(lam, mu)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    hist: dict[int, int] = {}
    for tab in _ssyt(lam, mu):
        d = _charge(_reading_word(tab))
        hist[d] = hist.get(d, 0) + 1
    if not hist:
        return ()
    top = max(hist)
    return tuple(hist.get(d, 0) for d in range(top + 1))


# ---------------------------------------------------------------------------
# Transition matrices for type A

class GradedTransition(NamedTuple):
    n: int
    labels: tuple[Partition, ...]   # orbit partitions, dominance-compatible
    entries: tuple[tuple[IntPolynomial, ...], ...]


@lru_cache(maxsize=None)
def p_matrix_A(n: int) -> GradedTransition:
    """P(q) with entry (i, j) = K_{labels[i], labels[j]}(q).

    Rows index shapes, columns index contents; the reverse-lexicographic
    label order refines dominance, so the matrix is unitriangular with
    off-diagonal entries in q Z_{>=0}[q].
    """
    if n < 1:
        raise ValueError("n must be positive")
    labels = partitions_of(n)
    entries = tuple(tuple(kostka_foulkes(li, lj) for lj in labels)
                    for li in labels)
    for i, row in enumerate(entries):
        for j, e in enumerate(row):
            if i == j and e != (1,):
                raise AssertionError("diagonal must be the constant 1")
            if i > j and e != ():
                raise AssertionError("lower triangle must vanish")
            if i < j and e and e[0]:
                raise AssertionError("off-diagonal constant terms must vanish")
    return GradedTransition(n, labels, entries)


@lru_cache(maxsize=None)
def q_matrix_at_minus1_A(n: int) -> tuple[tuple[int, ...], ...]:
    """Exact integer inverse of P(-1), by back substitution."""
    trans = p_matrix_A(n)
    size = len(trans.labels)
    m = [[poly_eval(e, -1) for e in row] for row in trans.entries]
    q = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    for j in range(size):
        for i in range(j - 1, -1, -1):
            q[i][j] = -sum(m[i][k] * q[k][j] for k in range(i + 1, j + 1))
    return tuple(tuple(row) for row in q)


def springer_label_A(lam) -> Partition:
    """W-type attached to an sl orbit: the transpose partition.

    Sends the zero orbit (1^n) to the trivial type (n) and the regular
    orbit (n) to the sign type (1^n).
    """
    return transpose(as_partition(lam))


@lru_cache(maxsize=None)
def x_minus1_A(lam) -> ClassFunction:
    """The virtual character sum_i P(-1)[i][lam] * sigma(labels[i]^T)."""
    lam = as_partition(lam)
    n = sum(lam)
    trans = p_matrix_A(n)
    col = trans.labels.index(lam)
    w = WeylType("A", n)
    nclasses = len(irr_character(w, (n,)).values)
    total = ClassFunction(w, (Fraction(0),) * nclasses)
    for i, li in enumerate(trans.labels):
        c = poly_eval(trans.entries[i][col], -1)
        if c:
            total = total + irr_character(w, transpose(li)).scaled(c)
    return total


@lru_cache(maxsize=None)
def d_value_A(mu) -> Fraction:
    """Smallest orbit norm |h/2|^2 visible from the W-type sigma_mu.

    sigma_mu expands as sum over orbits lam of Q(-1)[lam][transpose(mu)]
    times X_{-1}(O_lam), so the scan runs over the distinct-part rows of
    the transpose(mu) column; emptiness would contradict the
    nonvanishing of the carried spin data, so it raises.
    """
    mu = as_partition(mu)
    n = sum(mu)
    if n < 2:
        raise ValueError("needs at least two boxes")
    labels = partitions_of(n)
    col = labels.index(transpose(mu))
    q = q_matrix_at_minus1_A(n)
    from .orbits import sl
    t = sl(n)
    norms = [h_half_norm_sq(t, orbit(t, lam))
             for lam in distinct_partitions_of(n)
             if q[labels.index(lam)][col]]
    if not norms:
        raise ArithmeticError(f"no distinct-part support in the Q(-1) "
                              f"column of {mu}")
    return min(norms)


# ---------------------------------------------------------------------------
# Carried X_{-1} data for sp/so

class TauDatum(NamedTuple):
    orbit: Orbit
    local_system: str           # 'trivial' | 'sign' | 'unique'
    class_function: ClassFunction


def _bip(t: DualType, alpha, beta) -> ClassFunction:
    w = weyl_group(t)
    return irr_character(w, (as_partition(alpha), as_partition(beta)))


@lru_cache(maxsize=None)
def tau_data(t: DualType, which: str) -> tuple[TauDatum, ...]:
    """The X_{-1} class functions carried at the named orbit.

    sl has all three via x_minus1_A; sp and so carry regular and
    subregular, odd so additionally subsubregular.  Anything else is an
    honest refusal.
    """
    o = special_orbit(t, which)
    if t.family == "sl":
        return (TauDatum(o, "unique", x_minus1_A(o.data)),)
    n = weyl_group(t).rank if is_classical(t) else 0
    if t.family == "sp":
        if which == "regular":
            return (TauDatum(o, "trivial", _bip(t, (n,), ())),)
        if which == "subregular":
            return (TauDatum(o, "trivial", _bip(t, (n - 1, 1), ())),
                    TauDatum(o, "sign", _bip(t, (1,) * n, ())))
    if t.family == "so":
        if which == "regular":
            return (TauDatum(o, "trivial", _bip(t, (n,), ())),)
        if which == "subregular":
            return (TauDatum(o, "unique", _bip(t, (n - 1, 1), ())),)
        if t.param % 2 and which == "subsubregular":
            return (TauDatum(o, "trivial", _bip(t, (n - 2, 1, 1), ())),
                    TauDatum(o, "sign", _bip(t, (n - 2, 2), ())))
    raise ValueError(
        f"tau data not carried for {t.family}({t.param}) {which}")


def _even_so_span_guard(t: DualType, threshold: Fraction) -> None:
    """Span membership over so(2n) needs the four-row orbit O1 to sit
    strictly below the threshold; otherwise its missing X_{-1} datum
    could intersect the span."""
    n = t.param // 2
    k = n // 2
    if n % 2:
        parts = (k + 2, k + 2, k - 1, k - 1)
    else:
        parts = (k + 1, k + 1, k - 1, k - 1)
    o1 = orbit(t, tuple(p for p in parts if p))
    if not threshold > h_half_norm_sq(t, o1):
        raise HypothesisError(
            f"span hypothesis fails for so({t.param}): the orbit "
            f"{o1.data} does not sit strictly below the threshold")


# ---------------------------------------------------------------------------
# Static exceptional data (Carter labels phi(d,b) with trailing primes)

_EXC_COXETER_SGN_B = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}

_EXC_SUBREG_GOOD = {
    "G2": frozenset({"phi(1,0)", "phi(1,6)", "phi(1,3)'", "phi(1,3)''",
                     "phi(2,1)", "phi(2,2)"}),
    "F4": frozenset({"phi(1,0)", "phi(4,1)", "phi(4,13)", "phi(2,4)'",
                     "phi(2,16)''", "phi(1,24)"}),
    "E6": frozenset({"phi(1,0)", "phi(6,1)", "phi(6,25)", "phi(1,36)"}),
    "E7": frozenset({"phi(1,0)", "phi(7,1)", "phi(7,46)", "phi(1,63)"}),
    "E8": frozenset({"phi(1,0)", "phi(8,1)", "phi(8,91)", "phi(1,120)"}),
}

_EXC_SUBSUB_EXTRA = {
    "F4": frozenset({"phi(9,2)", "phi(9,10)", "phi(8,3)''", "phi(8,3)'",
                     "phi(8,9)'", "phi(8,9)''", "phi(2,4)''", "phi(2,16)'"}),
    "E6": frozenset({"phi(20,2)", "phi(20,20)"}),
    "E7": frozenset({"phi(27,2)", "phi(27,37)", "phi(21,3)", "phi(21,36)"}),
    "E8": frozenset({"phi(35,2)", "phi(35,74)"}),
}

# Tensor-with-sign pairing; only the labels the shipped lists need.  The
# F4 pairs are forced by matching the dual rows of the static F4 table,
# the others by dimension counts within their lists.
_EXC_SGN_PAIRS = {
    "G2": (("phi(1,0)", "phi(1,6)"), ("phi(1,3)'", "phi(1,3)''"),
           ("phi(2,1)", "phi(2,1)"), ("phi(2,2)", "phi(2,2)")),
    "F4": (("phi(1,0)", "phi(1,24)"), ("phi(4,1)", "phi(4,13)"),
           ("phi(2,4)'", "phi(2,16)''"), ("phi(2,4)''", "phi(2,16)'"),
           ("phi(9,2)", "phi(9,10)"), ("phi(8,3)'", "phi(8,9)''"),
           ("phi(8,3)''", "phi(8,9)'"), ("phi(9,6)'", "phi(9,6)''"),
           ("phi(12,4)", "phi(12,4)"), ("phi(16,5)", "phi(16,5)"),
           ("phi(6,6)'", "phi(6,6)'"), ("phi(6,6)''", "phi(6,6)''"),
           ("phi(1,12)'", "phi(1,12)''"), ("phi(4,7)'", "phi(4,7)''"),
           ("phi(4,8)", "phi(4,8)")),
    "E6": (("phi(1,0)", "phi(1,36)"), ("phi(6,1)", "phi(6,25)"),
           ("phi(20,2)", "phi(20,20)")),
    "E7": (("phi(1,0)", "phi(1,63)"), ("phi(7,1)", "phi(7,46)"),
           ("phi(27,2)", "phi(27,37)"), ("phi(21,3)", "phi(21,36)")),
    "E8": (("phi(1,0)", "phi(1,120)"), ("phi(8,1)", "phi(8,91)"),
           ("phi(35,2)", "phi(35,74)")),
}


def exceptional_sign_twist(family: str, label: str) -> str:
    pairs = _EXC_SGN_PAIRS.get(family)
    if pairs is None:
        raise ValueError(f"unknown exceptional family {family!r}")
    for a, b in pairs:
        if label == a:
            return b
        if label == b:
            return a
    raise ValueError(f"sign twist not carried for {family} label {label!r}")


def _exceptional_good(t: DualType, which: str) -> frozenset:
    fam = t.family
    b = _EXC_COXETER_SGN_B[fam]
    if which == "regular":
        return frozenset({"phi(1,0)", f"phi(1,{b})"})
    if which == "subregular":
        return _EXC_SUBREG_GOOD[fam]
    if which == "subsubregular" and fam in _EXC_SUBSUB_EXTRA:
        return _EXC_SUBREG_GOOD[fam] | _EXC_SUBSUB_EXTRA[fam]
    raise ValueError(f"good set not carried for {fam} {which}")


# ---------------------------------------------------------------------------
# Good sets

@lru_cache(maxsize=None)
def good_set(t: DualType, which: str) -> frozenset:
    """W-types whose Dirac bound clears the norm of the named orbit.

    sl: the d-value route.  sp/so: exact elliptic span membership in the
    carried X_{-1} data at or above the threshold, guarded by a runtime
    check that no other solvable-centralizer orbit reaches the threshold.
    Exceptional families: static lists.

    Split labels of even so are never emitted: no split class is
    (-1)-elliptic, so the span route sees the two halves identically and
    cannot certify either one.
    """
    if not is_classical(t):
        return _exceptional_good(t, which)
    target = special_orbit(t, which)
    threshold = h_half_norm_sq(t, target)
    w = weyl_group(t)
    if t.family == "sl":
        return frozenset(lab for lab in irreducible_labels(w)
                         if d_value_A(lab) >= threshold)
    if t.family == "so" and t.param % 2 == 0:
        _even_so_span_guard(t, threshold)
    basis: list[ClassFunction] = []
    covered: list[Orbit] = []
    for step in ("regular", "subregular", "subsubregular"):
        try:
            data = tau_data(t, step)
        except (ValueError, HypothesisError):
            break
        if h_half_norm_sq(t, data[0].orbit) >= threshold:
            basis.extend(d.class_function for d in data)
            covered.append(data[0].orbit)
        if step == which:
            break
    for o in nsol_orbits(t):
        if h_half_norm_sq(t, o) >= threshold and o not in covered:
            raise HypothesisError(
                f"span basis incomplete for {t.family}({t.param}) {which}: "
                f"orbit {o.data} reaches the threshold but carries no data")
    return frozenset(
        lab for lab in irreducible_labels(w)
        if len(lab) == 2
        and elliptic_span_member(irr_character(w, lab), tuple(basis))
        is not None)


def good_set_via_span(t: DualType, which: str) -> frozenset:
    """Type-A Good set by elliptic span membership instead of d-values.

    The basis is every x_minus1_A(lam) whose orbit norm clears the
    threshold.  Kept separate from good_set so the two routes stay
    independently checkable.
    """
    if t.family != "sl":
        raise ValueError("the span route here is the type-A cross-check")
    threshold = h_half_norm_sq(t, special_orbit(t, which))
    n = t.param
    basis = tuple(x_minus1_A(lam) for lam in partitions_of(n)
                  if h_half_norm_sq(t, orbit(t, lam)) >= threshold)
    w = weyl_group(t)
    return frozenset(
        lab for lab in irreducible_labels(w)
        if elliptic_span_member(irr_character(w, lab), basis) is not None)


def spin_multiplicity_B(ab, lam) -> int:
    """Spin-tensor multiplicity for W(B_n): the LR number c^lam_{alpha,
    beta^T}."""
    alpha, beta = as_partition(ab[0]), as_partition(ab[1])
    lam = as_partition(lam)
    if sum(alpha) + sum(beta) != sum(lam):
        raise ValueError("size mismatch")
    return lr_coefficient(lam, alpha, transpose(beta))
