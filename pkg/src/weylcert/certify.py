"""Certificate engine for declared module profiles.

A profile names a classical dual type, a rational central character nu,
and the W-types known to occur in the module.  The engine applies, in
order: the global norm bound at the regular orbit; the good-type test at
every covered orbit whose norm nu reaches; and the equality-rigidity
test, which needs an explicit spin-side hit before it constrains nu to
the orbit.  Verdicts are one-sided: the engine never asserts unitarity.

Split labels of even so are set aside with a log note rather than used
as evidence; the carried spin data cannot tell the two halves apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .orbits import (DualType, HypothesisError, Orbit, h_half, h_half_norm_sq,
                     is_classical, is_simple, lie_rank, special_orbit,
                     w_orbit_contains, weyl_group)
from .partitions import as_partition, partitions_of, transpose
from .springer import good_set, q_matrix_at_minus1_A, tau_data
from .weyl import (elliptic_pairing, inner_product, irr_character,
                   reflection_character, sign_twist_label, tensor)

NON_UNITARY = "NonUnitary"
CONSTRAINED = "ConstrainedToOrbit"
INCONCLUSIVE = "Inconclusive"

_WHICH = ("regular", "subregular", "subsubregular")


class Witness(NamedTuple):
    orbit: Optional[Orbit]
    rule: str                     # 'global-bound' | 'good-type' |
                                  # 'theta-hit' | 'orbit-rigidity' |
                                  # 'no-hermitian-form'
    wtype: Optional[object]
    nu_norm_sq: Fraction
    h_half_norm_sq: Optional[Fraction]


@dataclass(frozen=True)
class CertificateReport:
    verdict: str
    witnesses: tuple[Witness, ...]
    region: str
    log: tuple[str, ...]

    def __post_init__(self):
        if self.verdict == NON_UNITARY and not self.witnesses:
            raise AssertionError("a NonUnitary report needs a witness")


def _is_split(label) -> bool:
    return (isinstance(label, tuple) and len(label) == 3
            and isinstance(label[2], str))


@dataclass(frozen=True)
class ModuleProfile:
    dual_type: DualType
    nu: tuple[Fraction, ...]
    wtypes: tuple
    is_hermitian: bool = True

    def __post_init__(self):
        t = self.dual_type
        if not is_classical(t):
            raise ValueError("profiles carry classical dual types only")
        object.__setattr__(self, "nu",
                           tuple(Fraction(x) for x in self.nu))
        expect = t.param if t.family == "sl" else weyl_group(t).rank
        if len(self.nu) != expect:
            raise ValueError(f"nu must have {expect} coordinates")
        if not self.wtypes:
            raise ValueError("wtypes must be nonempty")
        w = weyl_group(t)
        for lab in self.wtypes:
            irr_character(w, lab)   # validates the label

    def nu_norm_sq(self) -> Fraction:
        return sum((x * x for x in self.nu), Fraction(0))

    def sign_twisted(self) -> "ModuleProfile":
        w = weyl_group(self.dual_type)
        return ModuleProfile(self.dual_type, self.nu,
                             tuple(sign_twist_label(w, lab)
                                   for lab in self.wtypes),
                             self.is_hermitian)


def _theta_hit(t: DualType, o: Orbit, label) -> bool:
    """Whether the W-type has nonzero spin-side pairing at the orbit."""
    if t.family == "sl":
        labels = partitions_of(t.param)
        q = q_matrix_at_minus1_A(t.param)
        row = labels.index(as_partition(o.data))
        col = labels.index(transpose(as_partition(label)))
        return q[row][col] != 0
    w = weyl_group(t)
    f = irr_character(w, label)
    for datum in tau_data(t, _which_of(t, o)):
        if elliptic_pairing(f, datum.class_function):
            return True
    return False


def _which_of(t: DualType, o: Orbit) -> str:
    for which in _WHICH:
        try:
            if special_orbit(t, which) == o:
                return which
        except HypothesisError:
            continue
    raise ValueError(f"{o.data} is not a covered orbit")


def _region_text(t: DualType, norm_sq: Fraction) -> str:
    try:
        g = spectral_gap(t, norm_sq)
        return f"{g.region}: {g.annotation}"
    except HypothesisError as e:
        return f"unclassified: {e}"


def certify(p: ModuleProfile) -> CertificateReport:
    t = p.dual_type
    nn = p.nu_norm_sq()
    region = _region_text(t, nn)
    log: list[str] = []
    if not p.is_hermitian:
        w = Witness(None, "no-hermitian-form", None, nn, None)
        log.append("profile declares no invariant hermitian form")
        return CertificateReport(NON_UNITARY, (w,), region, tuple(log))
    plain = []
    for lab in p.wtypes:
        if _is_split(lab):
            log.append(f"split label {lab} set aside: certificates "
                       "do not use it")
        else:
            plain.append(lab)

    covered: list[tuple[str, Orbit, Fraction]] = []
    for which in _WHICH:
        try:
            o = special_orbit(t, which)
        except HypothesisError as e:
            log.append(f"{which} orbit not covered: {e}")
            continue
        covered.append((which, o, h_half_norm_sq(t, o)))

    if covered and covered[0][0] == "regular" and nn > covered[0][2]:
        w = Witness(covered[0][1], "global-bound", None, nn, covered[0][2])
        log.append("the size of nu exceeds the regular orbit bound")
        return CertificateReport(NON_UNITARY, (w,), region, tuple(log))

    for which, o, nrm in covered:
        if nn >= nrm:
            try:
                good = good_set(t, which)
            except (HypothesisError, ValueError) as e:
                log.append(f"good set unavailable for {which}: {e}")
                continue
            offenders = [lab for lab in plain if lab not in good]
            if offenders:
                ws = tuple(Witness(o, "good-type", lab, nn, nrm)
                           for lab in offenders)
                return CertificateReport(NON_UNITARY, ws, region, tuple(log))
        if nn == nrm:
            try:
                hit = next((lab for lab in plain if _theta_hit(t, o, lab)),
                           None)
            except (HypothesisError, ValueError) as e:
                log.append(f"spin data unavailable for {which}: {e}")
                continue
            if hit is None:
                continue
            inside = w_orbit_contains(t, p.nu, h_half(t, o))
            if inside:
                log.append(f"nu lies in the W-orbit of h/2 for {o.data}")
                w = Witness(o, "theta-hit", hit, nn, nrm)
                return CertificateReport(CONSTRAINED, (w,), region,
                                         tuple(log))
            log.append(f"nu does not lie in the W-orbit of h/2 "
                       f"for {o.data}")
            w = Witness(o, "orbit-rigidity", hit, nn, nrm)
            return CertificateReport(NON_UNITARY, (w,), region, tuple(log))
    return CertificateReport(INCONCLUSIVE, (), region, tuple(log))


# ---------------------------------------------------------------------------
# Spectral gap classification

class GapClassification(NamedTuple):
    region: str
    annotation: str
    endpoints: tuple[tuple[str, Fraction], ...]


def spectral_gap(t: DualType, norm_sq) -> GapClassification:
    """Locate a squared central-character norm among the orbit norms.

    Regions, from the top: above-regular, equals-regular, (sr,r)-gap,
    equals-subregular, (ssr,sr)-gap, equals-subsubregular, and
    below-subsubregular (where nothing is asserted).  The region below
    the subregular norm is refused for sp and even so, and for rank < 4;
    complementary series cross it there.
    """
    norm_sq = Fraction(norm_sq)
    if norm_sq < 0:
        raise ValueError("norm_sq must be nonnegative")
    if not is_classical(t):
        raise HypothesisError("orbit norms are not carried for "
                              "exceptional types")
    if not is_simple(t):
        raise HypothesisError(f"{t.family}({t.param}) is not simple")
    if lie_rank(t) < 2:
        raise HypothesisError("the gap classification needs rank >= 2")
    r = h_half_norm_sq(t, special_orbit(t, "regular"))
    sr = h_half_norm_sq(t, special_orbit(t, "subregular"))
    ends = [("regular", r), ("subregular", sr)]
    if norm_sq > r:
        return GapClassification(
            "above-regular", "no unitary modules at this size", tuple(ends))
    if norm_sq == r:
        return GapClassification(
            "equals-regular", "endpoint: only the trivial and Steinberg "
            "modules", tuple(ends))
    if norm_sq > sr:
        return GapClassification(
            "(sr,r)-gap", "no unitary subquotients", tuple(ends))
    if norm_sq == sr:
        return GapClassification(
            "equals-subregular", "endpoint: tempered modules attached to "
            "the subregular orbit", tuple(ends))
    if t.family == "sp":
        raise HypothesisError("below the subregular norm the gap "
                              "hypothesis excludes symplectic types")
    if t.family == "so" and t.param % 2 == 0:
        raise HypothesisError("below the subregular norm the gap "
                              "hypothesis excludes even orthogonal types")
    if lie_rank(t) < 4:
        raise HypothesisError("the gap below the subregular norm needs "
                              "rank >= 4")
    ssr = h_half_norm_sq(t, special_orbit(t, "subsubregular"))
    ends.append(("subsubregular", ssr))
    if norm_sq > ssr:
        return GapClassification(
            "(ssr,sr)-gap", "no unitary subquotients", tuple(ends))
    if norm_sq == ssr:
        return GapClassification(
            "equals-subsubregular", "endpoint: tempered modules attached "
            "to the subsubregular orbit", tuple(ends))
    return GapClassification(
        "below-subsubregular", "no assertion at this size", tuple(ends))


# ---------------------------------------------------------------------------
# The reflection-tensor link graph

class ReflLinkGraph(NamedTuple):
    vertices: tuple
    edges: tuple[tuple[object, object], ...]
    h_set: frozenset
    l_set: frozenset
    obstruction_holds: bool


def _springer_types_near_top(t: DualType) -> frozenset:
    """W-types attached to the regular and subregular orbits."""
    n = weyl_group(t).rank
    if t.family == "sl":
        return frozenset({(1,) * n, (2,) + (1,) * (n - 2)})
    if t.family == "sp":
        return frozenset({((), (1,) * n), ((1,), (1,) * (n - 1)),
                          ((1,) * n, ())})
    if t.param % 2:
        return frozenset({((), (1,) * n), ((1,), (1,) * (n - 1)),
                          ((), (2,) + (1,) * (n - 2))})
    return frozenset({((1,) * n, ()), ((1,) * (n - 1), (1,))})


def refl_link_graph(t: DualType, wtypes=None) -> ReflLinkGraph:
    """Edges join W-types whose reflection tensor product meet.

    H holds the vertices attached to the regular or subregular orbit, L
    their sign twists.  The obstruction verdict says whether a module
    whose W-structure stays inside the vertex set and avoids lowest
    types at the top two orbits is forced to break the chain condition:
    that needs the vertex set to be exhausted by H and L, the two to be
    disjoint, and no edge to join them.
    """
    if not is_classical(t):
        raise ValueError("the link graph needs a classical dual type")
    w = weyl_group(t)
    if wtypes is None:
        wtypes = sorted(good_set(t, "subregular"))
    vertices = tuple(wtypes)
    refl = reflection_character(w)
    chars = {lab: irr_character(w, lab) for lab in vertices}
    edges = []
    for i, a in enumerate(vertices):
        fa = tensor(chars[a], refl)
        for b in vertices[i:]:
            if inner_product(fa, chars[b]):
                edges.append((a, b))
    h_full = _springer_types_near_top(t)
    h_set = frozenset(v for v in vertices if v in h_full)
    l_set = frozenset(v for v in vertices
                      if sign_twist_label(w, v) in h_full)
    linked = any((a in h_set and b in l_set) or (a in l_set and b in h_set)
                 for a, b in edges)
    exhausted = all(v in h_set or v in l_set for v in vertices)
    obstruction = exhausted and h_set.isdisjoint(l_set) and not linked
    return ReflLinkGraph(vertices, tuple(edges), h_set, l_set, obstruction)
