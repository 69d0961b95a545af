"""Nilpotent-orbit bookkeeping for the dual Lie algebras sl(n), sp(2n), so(m).

Classical orbits are Jordan partitions, so everything reduces to partition
arithmetic: validity, dominance closure, the h-eigenvalue multiset of a
Lie triple, the solvable-centralizer condition, and the distinguished
small orbits (regular, subregular, subsubregular, and the minimum of the
solvable family).  Exceptional types carry static label data only; no
h arithmetic is done for them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence, Union

from .partitions import (
    Partition,
    as_partition,
    dominance_leq,
    multiplicities,
    partitions_of,
)
from .weyl import WeylType

EXCEPTIONAL_FAMILIES = ("G2", "F4", "E6", "E7", "E8")


class HypothesisError(ValueError):
    """A requested quantity is undefined under the stated hypotheses
    (wrong rank, non-simple algebra, or an excluded family)."""


class DualType(NamedTuple):
    family: str               # 'sl', 'sp', 'so', or an exceptional name
    param: Optional[int] = None  # matrix size for the classical families


def sl(n: int) -> DualType:
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    return DualType("sl", n)


def sp(m: int) -> DualType:
    if m < 2 or m % 2:
        raise ValueError("sp(m) needs even m >= 2")
    return DualType("sp", m)


def so(m: int) -> DualType:
    if m < 3:
        raise ValueError("so(m) needs m >= 3")
    return DualType("so", m)


def exceptional(family: str) -> DualType:
    if family not in EXCEPTIONAL_FAMILIES:
        raise ValueError(f"unknown exceptional family {family!r}")
    return DualType(family, None)


def is_classical(t: DualType) -> bool:
    return t.family in ("sl", "sp", "so")


def is_simple(t: DualType) -> bool:
    if t.family == "so":
        return t.param != 4
    return True


def lie_rank(t: DualType) -> int:
    if t.family == "sl":
        return t.param - 1
    if t.family == "sp":
        return t.param // 2
    if t.family == "so":
        return (t.param - 1) // 2 if t.param % 2 else t.param // 2
    return int(t.family[1])


def weyl_group(t: DualType) -> WeylType:
    """The Weyl group acting on the coordinates that carry nu and h/2."""
    if t.family == "sl":
        return WeylType("A", t.param)
    if t.family == "sp":
        return WeylType("B", t.param // 2)
    if t.family == "so":
        if t.param % 2:
            return WeylType("B", (t.param - 1) // 2)
        return WeylType("D", t.param // 2)
    raise ValueError("exceptional Weyl groups are not carried")


class Orbit(NamedTuple):
    dual_type: DualType
    data: Union[Partition, str]  # Jordan partition, or a static label


def orbit(t: DualType, data) -> Orbit:
    if is_classical(t):
        p = as_partition(data)
        if not is_valid_orbit(t, p):
            raise ValueError(f"{p} is not a valid {t.family}({t.param}) orbit")
        return Orbit(t, p)
    if not isinstance(data, str):
        raise ValueError("exceptional orbits are named by label strings")
    return Orbit(t, data)


def _parts(o_or_p) -> Partition:
    if isinstance(o_or_p, Orbit):
        return as_partition(o_or_p.data)
    return as_partition(o_or_p)


def is_valid_orbit(t: DualType, p) -> bool:
    if not is_classical(t):
        raise ValueError("use static table")
    p = as_partition(p)
    if sum(p) != t.param:
        return False
    mult = multiplicities(p)
    if t.family == "sp":
        return all(m % 2 == 0 for part, m in mult.items() if part % 2)
    if t.family == "so":
        return all(m % 2 == 0 for part, m in mult.items() if part % 2 == 0)
    return True


# Exceptional static data: one descending closure chain per family covering
# exactly the labels this artifact carries, plus the solvable markers.
_CHAIN = {
    "G2": ("G2", "G2(a1)"),
    "F4": ("F4", "F4(a1)", "F4(a2)", "F4(a3)"),
    "E6": ("E6", "E6(a1)", "D5", "D4(a1)"),
    "E7": ("E7", "E7(a1)", "E7(a2)", "A4+A1"),
    "E8": ("E8", "E8(a1)", "E8(a2)", "E8(a7)"),
}
_O_MIN_LABEL = {
    "G2": "G2(a1)",
    "F4": "F4(a3)",
    "E6": "D4(a1)",
    "E7": "A4+A1",
    "E8": "E8(a7)",
}


def is_in_nsol(t: DualType, o) -> bool:
    """Whether the orbit's centralizer has solvable identity component."""
    if not is_classical(t):
        label = o.data if isinstance(o, Orbit) else o
        if label == t.family or label == _O_MIN_LABEL[t.family]:
            return True
        raise ValueError(
            f"solvable-centralizer data not carried for {t.family} orbit {label!r}")
    p = _parts(o)
    if not is_valid_orbit(t, p):
        raise ValueError(f"invalid orbit {p} for {t.family}({t.param})")
    mult = multiplicities(p)
    if t.family == "sl":
        return all(m == 1 for m in mult.values())
    if t.family == "sp":
        return all(part % 2 == 0 and m <= 2 for part, m in mult.items())
    return all(part % 2 == 1 and m <= 2 for part, m in mult.items())


@lru_cache(maxsize=None)
def nsol_orbits(t: DualType) -> tuple[Orbit, ...]:
    """All solvable-centralizer orbits, reverse-lexicographic order."""
    if not is_classical(t):
        raise ValueError("use static table")
    return tuple(Orbit(t, p) for p in partitions_of(t.param)
                 if is_valid_orbit(t, p) and is_in_nsol(t, p))


def closure_leq(o1: Orbit, o2: Orbit) -> bool:
    """Orbit-closure containment; dominance of Jordan types classically."""
    if o1.dual_type != o2.dual_type:
        raise ValueError("orbits live in different algebras")
    t = o1.dual_type
    if is_classical(t):
        return dominance_leq(_parts(o1), _parts(o2))
    chain = _CHAIN[t.family]
    try:
        return chain.index(o1.data) >= chain.index(o2.data)
    except ValueError:
        raise ValueError(
            f"closure data not carried for {t.family} orbits "
            f"{o1.data!r}, {o2.data!r}") from None


def h_vector(t: DualType, o) -> tuple[int, ...]:
    """Semisimple element of a Lie triple, as its coordinate multiset.

    Each Jordan part p contributes the string p-1, p-3, ..., 1-p.  Type A
    stores the full zero-sum vector; sp/so store the nonnegative half
    (all positives plus half of the zeros), of length the Lie rank.
    """
    if not is_classical(t):
        raise ValueError("h vectors are not carried for exceptional types")
    p = _parts(o)
    if not is_valid_orbit(t, p):
        raise ValueError(f"invalid orbit {p} for {t.family}({t.param})")
    full = sorted((part - 1 - 2 * i for part in p for i in range(part)),
                  reverse=True)
    if t.family == "sl":
        return tuple(full)
    half = [x for x in full if x > 0]
    half += [0] * (sum(1 for x in full if x == 0) // 2)
    if len(half) != lie_rank(t):
        raise AssertionError("half-vector length must equal the rank")
    return tuple(half)


def h_half(t: DualType, o) -> tuple[Fraction, ...]:
    return tuple(Fraction(x, 2) for x in h_vector(t, o))


def h_half_norm_sq(t: DualType, o) -> Fraction:
    return sum((Fraction(x, 2) ** 2 for x in h_vector(t, o)), Fraction(0))


_WHICH = ("regular", "subregular", "subsubregular")


def special_orbit(t: DualType, which: str) -> Orbit:
    """The regular, subregular or subsubregular orbit.

    Subregular needs a simple algebra; subsubregular additionally needs
    rank >= 4 and is undefined for sp and even so (no single orbit plays
    that role there), and for G2.
    """
    if which not in _WHICH:
        raise ValueError(f"which must be one of {_WHICH}")
    if which != "regular" and not is_simple(t):
        raise HypothesisError(f"{t.family}({t.param}) is not simple")
    if not is_classical(t):
        fam = t.family
        if which == "regular":
            return Orbit(t, fam)
        if which == "subregular":
            return Orbit(t, f"{fam}(a1)")
        statics = {"F4": "F4(a2)", "E6": "D5", "E7": "E7(a2)", "E8": "E8(a2)"}
        if fam not in statics:
            raise HypothesisError("subsubregular needs rank >= 4")
        return Orbit(t, statics[fam])
    m = t.param
    if t.family == "sl":
        if which == "regular":
            return orbit(t, (m,))
        if which == "subregular":
            return orbit(t, (m - 1, 1))
        if m < 5:
            raise HypothesisError("subsubregular needs rank >= 4")
        return orbit(t, (m - 2, 2))
    if t.family == "sp":
        if which == "regular":
            return orbit(t, (m,))
        if which == "subregular":
            if m < 4:
                raise HypothesisError("subregular of sp needs rank >= 2")
            return orbit(t, (m - 2, 2))
        raise HypothesisError("subsubregular is undefined in type sp")
    if m % 2:  # odd so
        if which == "regular":
            return orbit(t, (m,))
        if which == "subregular":
            return orbit(t, (m - 2, 1, 1))
        if m < 9:
            raise HypothesisError("subsubregular needs rank >= 4")
        return orbit(t, (m - 4, 3, 1))
    # even so
    if which == "regular":
        return orbit(t, (m - 1, 1))
    if which == "subregular":
        return orbit(t, (m - 3, 3))
    raise HypothesisError("subsubregular is undefined in even type so")


def o_min(t: DualType) -> Orbit:
    """Minimum of the solvable-centralizer orbits under closure order."""
    if not is_simple(t):
        raise HypothesisError(f"{t.family}({t.param}) is not simple")
    if not is_classical(t):
        return Orbit(t, _O_MIN_LABEL[t.family])
    if t.family == "sl":
        n = t.param
        ell = 1
        while ell * (ell + 1) // 2 < n:
            ell += 1
        k = ell * (ell + 1) // 2 - n
        parts = [i for i in range(ell, 0, -1) if i != k]
        return orbit(t, tuple(parts))
    if t.family == "sp":
        n = t.param // 2
        ell = 1
        while ell * (ell + 1) < n:
            ell += 1
        k = ell * (ell + 1) - n
        start = [2 * i for i in range(1, ell + 1) for _ in range(2)]
        if k == 0:
            removals = []
        elif k <= ell:
            removals = [2 * k]
        else:
            removals = [2 * (k - ell), 2 * ell]
        for r in removals:
            start.remove(r)
        return orbit(t, tuple(sorted(start, reverse=True)))
    m = t.param
    if m % 2:  # odd so: start (1,1,3,3,...,2l-1,2l-1,2l+1)
        n = (m - 1) // 2
        ell = 1
        while ell * (ell + 1) < n:
            ell += 1
        k = ell * (ell + 1) - n
        start = [2 * i - 1 for i in range(1, ell + 1) for _ in range(2)]
        start.append(2 * ell + 1)
        if k == 0:
            removals = []
        elif k <= ell:
            removals = [1, 2 * k - 1]
        else:
            removals = [2 * (k - ell) - 1, 2 * ell + 1]
    else:  # even so: start (1,1,3,3,...,2l-1,2l-1)
        n = m // 2
        ell = 1
        while ell * ell < n:
            ell += 1
        k = ell * ell - n
        start = [2 * i - 1 for i in range(1, ell + 1) for _ in range(2)]
        if k == 0:
            removals = []
        elif k <= ell:
            removals = [1, 2 * k - 1]
        else:
            removals = [2 * (k - ell) + 1, 2 * ell - 1]
    for r in removals:
        start.remove(r)
    return orbit(t, tuple(sorted(start, reverse=True)))


def w_orbit_contains(t: DualType, nu: Sequence, target: Sequence) -> bool:
    """Whether nu lies on the Weyl orbit of the point with coordinates
    target (type A: a full vector; sp/so: the nonnegative half)."""
    w = weyl_group(t)
    expect = t.param if t.family == "sl" else w.rank
    if len(nu) != expect:
        raise ValueError(f"nu must have length {expect}")
    if len(target) != expect:
        raise ValueError(f"target must have length {expect}")
    nu_f = [Fraction(x) for x in nu]
    tgt = sorted((Fraction(x) for x in target), reverse=True)
    if t.family == "sl":
        return sorted(nu_f, reverse=True) == tgt
    # sp/so: compare absolute values against the stored nonnegative half
    return sorted((abs(x) for x in nu_f), reverse=True) == tgt
