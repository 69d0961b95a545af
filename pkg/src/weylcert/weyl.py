"""Exact character theory for the classical Weyl groups.

Families:

* ``A`` rank n: the symmetric group S_n (Weyl group of type A_{n-1});
  classes and irreducibles indexed by partitions of n.
* ``B`` rank n: the signed-permutation group of order 2^n n!, the common
  Weyl group of the B_n and C_n root systems; indexed by bipartitions
  (positive-cycle partition, negative-cycle partition).
* ``D`` rank n: the index-two subgroup with an even number of negative
  cycles.  Classes (mu, ()) with every part of mu even split in two
  (tags ``+``/``-``), as do the labels (alpha, alpha).

All character values are integers, computed by Murnaghan-Nakayama
recursion plus the bipartition extension; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterator, NamedTuple, Optional, Sequence

from .partitions import (
    Partition,
    as_partition,
    contains,
    multiplicities,
    partitions_of,
    transpose,
)


class WeylType(NamedTuple):
    family: str  # 'A', 'B' or 'D'; 'B' covers both B and C root systems
    rank: int    # number of letters acted on (A rank n means S_n)


class ConjugacyClass(NamedTuple):
    mu: Partition            # positive cycle lengths (type A: all cycles)
    nu: Partition = ()       # negative cycle lengths
    tag: Optional[str] = None  # '+' or '-' on split type-D classes


def _check_type(t: WeylType) -> None:
    if t.family not in ("A", "B", "D"):
        raise ValueError(f"unknown family {t.family!r}")
    if t.rank < 1:
        raise ValueError("rank must be positive")
    if t.family == "D" and t.rank < 2:
        raise ValueError("family D needs rank >= 2")


def group_order(t: WeylType) -> int:
    _check_type(t)
    if t.family == "A":
        return factorial(t.rank)
    if t.family == "B":
        return factorial(t.rank) << t.rank
    return factorial(t.rank) << (t.rank - 1)


def _z(p: Partition) -> int:
    """Centralizer order of cycle type p in the symmetric group."""
    out = 1
    for part, m in multiplicities(p).items():
        out *= part ** m * factorial(m)
    return out


def _splits_in_d(mu: Partition, nu: Partition) -> bool:
    return not nu and bool(mu) and all(x % 2 == 0 for x in mu)


@lru_cache(maxsize=None)
def conjugacy_classes(t: WeylType) -> tuple[tuple[ConjugacyClass, int], ...]:
    """All conjugacy classes with their sizes, in canonical order.

    Canonical order: type A follows partitions_of(n); types B and D run
    |mu| from n down to 0 with mu, nu each in reverse-lexicographic
    order; split type-D classes appear adjacently as +, -.
    """
    _check_type(t)
    n = t.rank
    if t.family == "A":
        order = factorial(n)
        return tuple(
            (ConjugacyClass(mu), order // _z(mu)) for mu in partitions_of(n)
        )
    out = []
    for a in range(n, -1, -1):
        for mu in partitions_of(a):
            for nu in partitions_of(n - a):
                cent = _z(mu) * (1 << len(mu)) * _z(nu) * (1 << len(nu))
                size_b = (factorial(n) << n) // cent
                if t.family == "B":
                    out.append((ConjugacyClass(mu, nu), size_b))
                    continue
                if len(nu) % 2:
                    continue
                if _splits_in_d(mu, nu):
                    out.append((ConjugacyClass(mu, (), "+"), size_b // 2))
                    out.append((ConjugacyClass(mu, (), "-"), size_b // 2))
                else:
                    out.append((ConjugacyClass(mu, nu), size_b))
    return tuple(out)


@lru_cache(maxsize=None)
def identity_index(t: WeylType) -> int:
    one = ConjugacyClass((1,) * t.rank)
    for i, (c, _) in enumerate(conjugacy_classes(t)):
        if c == one:
            return i
    raise AssertionError("identity class missing")


# ---------------------------------------------------------------------------
# Symmetric-group characters (Murnaghan-Nakayama on beta-sets)

def _beta_set(lam: Partition) -> tuple[int, ...]:
    L = len(lam)
    return tuple(sorted(lam[i] + (L - 1 - i) for i in range(L)))


def _strip_staircase(beta: tuple[int, ...]) -> tuple[int, ...]:
    j = 0
    while j < len(beta) and beta[j] == j:
        j += 1
    return tuple(b - j for b in beta[j:])


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], mu: Partition) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    members = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in members:
            continue
        crossed = sum(1 for x in beta if c < x < b)
        succ = _strip_staircase(tuple(sorted((members - {b}) | {c})))
        total += (-1) ** crossed * _mn(succ, rest)
    return total


def symmetric_group_character(lam: Partition, mu: Partition) -> int:
    """chi^lam(mu) in S_n, by rim-hook removal on the beta-set of lam."""
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    return _mn(_strip_staircase(_beta_set(lam)), mu)


# ---------------------------------------------------------------------------
# Signed-permutation characters

def _sub_multisets(p: Partition) -> Iterator[tuple[Partition, Partition, int]]:
    """(subset, complement, number of ways) over multiset splits of p."""
    items = sorted(multiplicities(p).items(), reverse=True)
    for picks in product(*(range(m + 1) for _, m in items)):
        sub: list[int] = []
        rest: list[int] = []
        ways = 1
        for (part, m), k in zip(items, picks):
            sub += [part] * k
            rest += [part] * (m - k)
            ways *= comb(m, k)
        yield tuple(sub), tuple(rest), ways


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


@lru_cache(maxsize=None)
def _signed_char(alpha: Partition, beta: Partition,
                 mu: Partition, nu: Partition) -> int:
    """chi^{alpha x beta}(mu, nu) in the rank |alpha|+|beta| signed group.

    Negative cycles routed to the beta factor each contribute a sign.
    """
    a = sum(alpha)
    total = 0
    for mu1, mu2, wm in _sub_multisets(mu):
        need = a - sum(mu1)
        if need < 0:
            continue
        for nu1, nu2, wn in _sub_multisets(nu):
            if sum(nu1) != need:
                continue
            sign = -1 if len(nu2) % 2 else 1
            total += (wm * wn * sign
                      * symmetric_group_character(alpha, _merge(mu1, nu1))
                      * symmetric_group_character(beta, _merge(mu2, nu2)))
    return total


# ---------------------------------------------------------------------------
# Class functions

@dataclass(frozen=True)
class ClassFunction:
    weyl_type: WeylType
    values: tuple  # ints or Fractions, aligned with conjugacy_classes

    def __post_init__(self):
        k = len(conjugacy_classes(self.weyl_type))
        if len(self.values) != k:
            raise ValueError(f"expected {k} values, got {len(self.values)}")

    def _match(self, other: "ClassFunction") -> None:
        if self.weyl_type != other.weyl_type:
            raise ValueError("mismatched Weyl types")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._match(other)
        return ClassFunction(
            self.weyl_type,
            tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._match(other)
        return ClassFunction(
            self.weyl_type,
            tuple(a - b for a, b in zip(self.values, other.values)))

    def scaled(self, c) -> "ClassFunction":
        return ClassFunction(self.weyl_type, tuple(c * v for v in self.values))


def tensor(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    f._match(g)
    return ClassFunction(
        f.weyl_type, tuple(a * b for a, b in zip(f.values, g.values)))


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """(1/|W|) sum over classes of size * f * g (all values real)."""
    f._match(g)
    total = sum(size * a * b for (_, size), a, b
                in zip(conjugacy_classes(f.weyl_type), f.values, g.values))
    return Fraction(total, group_order(f.weyl_type))


# ---------------------------------------------------------------------------
# Irreducible characters

def trivial_label(t: WeylType):
    if t.family == "A":
        return (t.rank,)
    return ((t.rank,), ())


def sign_label(t: WeylType):
    """Label of the determinant character of the reflection representation."""
    n = t.rank
    if t.family == "A":
        return (1,) * n
    if t.family == "B":
        return ((), (1,) * n)
    # on D the two B-labels ((),(1^n)) and ((1^n),()) restrict identically
    return ((1,) * n, ())


def _validate_label(t: WeylType, label) -> None:
    n = t.rank
    if t.family == "A":
        if sum(as_partition(label)) != n:
            raise ValueError(f"label {label!r} is not a partition of {n}")
        return
    if t.family == "B":
        if len(label) != 2:
            raise ValueError(f"bad label {label!r}")
        alpha, beta = label
        if sum(as_partition(alpha)) + sum(as_partition(beta)) != n:
            raise ValueError(f"label {label!r} has total size != {n}")
        return
    if len(label) == 2:
        alpha, beta = label
        if alpha == beta:
            raise ValueError("equal pair needs a '+'/'-' tag")
    elif len(label) == 3:
        alpha, beta = label[0], label[1]
        if alpha != beta or label[2] not in ("+", "-"):
            raise ValueError(f"bad split label {label!r}")
    else:
        raise ValueError(f"bad label {label!r}")
    if sum(as_partition(alpha)) + sum(as_partition(beta)) != n:
        raise ValueError(f"label {label!r} has total size != {n}")


@lru_cache(maxsize=None)
def irreducible_labels(t: WeylType) -> tuple:
    """One canonical label per irreducible character.

    Type D non-split pairs are listed with the larger (by size, then
    lexicographic) partition first; split labels as (alpha, alpha, +/-).
    """
    _check_type(t)
    n = t.rank
    if t.family == "A":
        return partitions_of(n)
    out = []
    for a in range(n, -1, -1):
        for alpha in partitions_of(a):
            for beta in partitions_of(n - a):
                if t.family == "B":
                    out.append((alpha, beta))
                elif (sum(alpha), alpha) > (sum(beta), beta):
                    out.append((alpha, beta))
                elif alpha == beta:
                    out.append((alpha, alpha, "+"))
                    out.append((alpha, alpha, "-"))
    return tuple(out)


def _exact_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return int(x)


@lru_cache(maxsize=None)
def irr_character(t: WeylType, label) -> ClassFunction:
    """Exact character of the irreducible representation named by label."""
    _check_type(t)
    _validate_label(t, label)
    classes = conjugacy_classes(t)
    if t.family == "A":
        lam = tuple(label)
        return ClassFunction(
            t, tuple(symmetric_group_character(lam, c.mu) for c, _ in classes))
    if t.family == "B":
        alpha, beta = label
        return ClassFunction(
            t, tuple(_signed_char(alpha, beta, c.mu, c.nu) for c, _ in classes))
    alpha, beta = label[0], label[1]
    if len(label) == 2:
        # restriction of the B character; either pair order gives the same values
        return ClassFunction(
            t, tuple(_signed_char(alpha, beta, c.mu, c.nu) for c, _ in classes))
    s = 1 if label[2] == "+" else -1
    vals = []
    for c, _ in classes:
        half = Fraction(_signed_char(alpha, alpha, c.mu, c.nu), 2)
        if c.tag is not None:
            lam = tuple(x // 2 for x in c.mu)
            eps = 1 if c.tag == "+" else -1
            half += Fraction(
                s * eps * (1 << len(lam)) * symmetric_group_character(alpha, lam),
                2)
        vals.append(_exact_int(half))
    return ClassFunction(t, tuple(vals))


def dimension(t: WeylType, label) -> int:
    return irr_character(t, label).values[identity_index(t)]


def reflection_character(t: WeylType) -> ClassFunction:
    """Character of the reflection representation (dim n-1 for A, n for B/D).

    Not irreducible for D rank 2, hence returned as a plain class function.
    """
    _check_type(t)

    def m1(p: Partition) -> int:
        return sum(1 for x in p if x == 1)

    if t.family == "A":
        vals = tuple(m1(c.mu) - 1 for c, _ in conjugacy_classes(t))
    else:
        vals = tuple(m1(c.mu) - m1(c.nu) for c, _ in conjugacy_classes(t))
    return ClassFunction(t, vals)


def sign_twist_label(t: WeylType, label):
    """Label of (the irreducible named by label) tensored with sign."""
    _check_type(t)
    if t.family == "A":
        return transpose(tuple(label))
    if t.family == "B":
        alpha, beta = label
        return (transpose(beta), transpose(alpha))
    if len(label) == 2:
        a, b = transpose(label[1]), transpose(label[0])
        return (a, b) if (sum(a), a) > (sum(b), b) else (b, a)
    alpha = transpose(label[0])
    twisted = tensor(irr_character(t, label), irr_character(t, sign_label(t)))
    for tag in ("+", "-"):
        if irr_character(t, (alpha, alpha, tag)).values == twisted.values:
            return (alpha, alpha, tag)
    raise AssertionError("sign twist of a split label must be split")


# ---------------------------------------------------------------------------
# The wedge character and the (-1)-elliptic pairing

@lru_cache(maxsize=None)
def wedge_character(t: WeylType) -> ClassFunction:
    """det(1+w) on the reflection representation, as a class function.

    A positive l-cycle contributes 2 when l is odd, else 0; a negative
    l-cycle contributes 2 when l is even, else 0.  For type A the full
    permutation module has one extra trivial summand, so its product is
    halved.
    """
    _check_type(t)
    vals = []
    for c, _ in conjugacy_classes(t):
        if t.family == "A":
            v = (1 << (len(c.mu) - 1)) if all(x % 2 for x in c.mu) else 0
        elif all(x % 2 for x in c.mu) and all(x % 2 == 0 for x in c.nu):
            v = 1 << (len(c.mu) + len(c.nu))
        else:
            v = 0
        vals.append(v)
    return ClassFunction(t, tuple(vals))


def minus1_elliptic_classes(t: WeylType) -> tuple[ConjugacyClass, ...]:
    """Classes where det(1+w) does not vanish."""
    wedge = wedge_character(t)
    return tuple(c for (c, _), v
                 in zip(conjugacy_classes(t), wedge.values) if v)


@lru_cache(maxsize=None)
def _elliptic_indices(t: WeylType) -> tuple[int, ...]:
    wedge = wedge_character(t)
    return tuple(i for i, v in enumerate(wedge.values) if v)


def elliptic_pairing(f: ClassFunction, g: ClassFunction) -> Fraction:
    """inner_product(f, g tensor wedge); sees only (-1)-elliptic classes."""
    return inner_product(f, tensor(g, wedge_character(g.weyl_type)))


def elliptic_span_member(
        f: ClassFunction,
        basis: Sequence[ClassFunction]) -> Optional[list[Fraction]]:
    """Coefficients writing f as a combination of basis functions on the
    (-1)-elliptic classes, or None when no exact solution exists.

    With an empty basis, membership means f vanishes on every elliptic
    class.  Free coefficients are set to zero.
    """
    t = f.weyl_type
    for b in basis:
        f._match(b)
    idx = _elliptic_indices(t)
    k = len(basis)
    aug = [[Fraction(b.values[i]) for b in basis] + [Fraction(f.values[i])]
           for i in idx]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, len(aug)) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col]:
                c = aug[i][col]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == len(aug):
            break
    if any(row[k] for row in aug[r:]):
        return None
    coeffs = [Fraction(0)] * k
    for row_i, col in enumerate(pivots):
        coeffs[col] = aug[row_i][k]
    return coeffs


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule

def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of sigma_lam in the induction of sigma_mu x sigma_nu.

    Counts semistandard fillings of lam/mu with content nu whose reverse
    reading word is a lattice word; the lattice constraint is checked
    incrementally while backtracking.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(mu) + sum(nu) != sum(lam):
        raise ValueError("size mismatch")
    if not contains(lam, mu):
        return 0
    rows = len(lam)
    inner = tuple(mu[i] if i < len(mu) else 0 for i in range(rows))
    cells = [(r, c) for r in range(rows)
             for c in range(lam[r] - 1, inner[r] - 1, -1)]
    nletters = len(nu)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * nletters
    remaining = list(nu)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        above = filling.get((r - 1, c))
        lo = above + 1 if above is not None else 1
        right = filling.get((r, c + 1))
        hi = right if right is not None else nletters
        total = 0
        for v in range(lo, hi + 1):
            if not remaining[v - 1]:
                continue
            if v > 1 and counts[v - 1] + 1 > counts[v - 2]:
                continue
            counts[v - 1] += 1
            remaining[v - 1] -= 1
            filling[(r, c)] = v
            total += place(k + 1)
            del filling[(r, c)]
            counts[v - 1] -= 1
            remaining[v - 1] += 1
        return total

    return place(0)
