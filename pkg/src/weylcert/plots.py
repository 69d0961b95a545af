"""Figure rendering for gap reports and certificates.

Figures are built on explicit Figure objects, never pyplot, so the
library works headless and leaks no global state.  Exact rationals are
converted to float here only; exactness lives in the reports.
"""

from __future__ import annotations

from fractions import Fraction

from matplotlib.figure import Figure

from .certify import CertificateReport, ModuleProfile, spectral_gap
from .orbits import (DualType, HypothesisError, h_half_norm_sq, special_orbit)

def _carried_endpoints(t: DualType) -> list[tuple[str, Fraction]]:
    ends = []
    for which in ("regular", "subregular", "subsubregular"):
        try:
            ends.append((which, h_half_norm_sq(t, special_orbit(t, which))))
        except HypothesisError:
            break
    return ends


def gap_figure(t: DualType, norm_sq=None) -> Figure:
    """Number line of carried orbit norms, with an optional query mark."""
    ends = _carried_endpoints(t)
    fig = Figure(figsize=(7.0, 2.4))
    ax = fig.add_subplot(111)
    top = float(ends[0][1])
    for (_, lo), (_, hi) in zip(ends[1:], ends):
        ax.axvspan(float(lo), float(hi), color="tab:orange", alpha=0.25)
    for name, value in ends:
        x = float(value)
        ax.axvline(x, color="tab:blue", linewidth=1.2)
        ax.annotate(f"{name}\n{value}", (x, 1.02), xycoords=("data", "axes fraction"),
                    ha="center", fontsize=8)
    if norm_sq is not None:
        q = float(Fraction(norm_sq))
        ax.plot([q], [0.5], marker="v", color="tab:red", markersize=9)
        label = f"|nu|^2 = {Fraction(norm_sq)}"
        try:
            g = spectral_gap(t, norm_sq)
            label += f"\n{g.region}"
        except HypothesisError:
            label += "\nunclassified"
        ax.annotate(label, (q, 0.38), ha="center", fontsize=8, color="tab:red")
    ax.set_xlim(-0.05 * top, 1.2 * top)
    ax.set_ylim(0, 1)
    ax.set_yticks([])
    ax.set_xlabel("squared norm")
    ax.set_title(f"{t.family}({t.param}): orbit-norm gaps", fontsize=10)
    fig.tight_layout()
    return fig


def certificate_figure(report: CertificateReport,
                       profile: ModuleProfile) -> Figure:
    """Bar chart of covered orbit norms against the profile's |nu|^2."""
    t = profile.dual_type
    ends = _carried_endpoints(t)
    witness_orbits = {w.orbit.data for w in report.witnesses
                      if w.orbit is not None}
    fig = Figure(figsize=(6.0, 3.6))
    ax = fig.add_subplot(111)
    names, values, colors = [], [], []
    for which, value in ends:
        o = special_orbit(t, which)
        names.append(f"{which}\n{o.data}")
        values.append(float(value))
        colors.append("tab:red" if o.data in witness_orbits else "tab:blue")
    ax.bar(range(len(values)), values, color=colors, alpha=0.7)
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, fontsize=8)
    nu2 = profile.nu_norm_sq()
    ax.axhline(float(nu2), color="black", linewidth=1.2, linestyle="--")
    ax.annotate(f"|nu|^2 = {nu2}", (len(values) - 0.5, float(nu2)),
                ha="right", va="bottom", fontsize=9)
    ax.set_ylabel("squared norm")
    ax.set_title(f"{report.verdict}  [{report.region}]", fontsize=10)
    fig.tight_layout()
    return fig


def save_figure(fig: Figure, path: str) -> None:
    fig.savefig(path, dpi=150)
