"""Concrete models of finite flat O-module schemes at desk scale.

Three families: Raynaud (p,...,p)-schemes given by exact valuation data,
torsion of the Lubin-Tate modules LT_A, and split subgroups of mu-ordinary
products.  Everything is a descriptor: heights, levels, and one exact
partial degree per embedding.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import EnumerationCapExceeded, InternalInvariantBreach, MufiltError
from .signature_core import (
    Signature,
    _is_prime,
    ladder_index,
    mu_ordinary_decomposition,
)

DEFAULT_ENUM_CAP = 10**6


@dataclass(frozen=True)
class RaynaudDatum:
    """Valuation datum of a Raynaud scheme: v(delta_i) per slot.

    The companion parameters satisfy gamma_i delta_i = (element of
    valuation 1), so v(gamma_i) = 1 - v(delta_i).
    """

    f: int
    p: int
    vdelta: tuple[Fraction, ...]

    def __post_init__(self):
        if self.f < 1:
            raise MufiltError(f"f must be positive, got {self.f!r}")
        if not _is_prime(self.p):
            raise MufiltError(f"p must be prime, got {self.p!r}")
        vd = tuple(Fraction(v) for v in self.vdelta)
        object.__setattr__(self, "vdelta", vd)
        if len(vd) != self.f:
            raise MufiltError(f"need f={self.f} slot valuations, got {len(vd)}")
        for i, v in enumerate(vd):
            if not 0 <= v <= 1:
                raise MufiltError(f"vdelta[{i}]={v} outside [0, 1]")

    @property
    def vgamma(self) -> tuple[Fraction, ...]:
        return tuple(1 - v for v in self.vdelta)


@dataclass(frozen=True)
class FiniteOModuleDesc:
    """Descriptor (O-height, partial degrees, torsion level)."""

    o_height: int
    deg: tuple[Fraction, ...]
    level: int

    def __post_init__(self):
        object.__setattr__(
            self, "deg", tuple(Fraction(d) for d in self.deg)
        )
        if self.o_height < 0:
            raise MufiltError(f"o_height must be >= 0, got {self.o_height!r}")
        if self.level < 0:
            raise MufiltError(f"level must be >= 0, got {self.level!r}")
        for t, d in enumerate(self.deg):
            if d < 0:
                raise MufiltError(f"deg[{t}]={d} must be >= 0")

    @property
    def f(self) -> int:
        return len(self.deg)

    @property
    def total_degree(self) -> Fraction:
        return sum(self.deg, Fraction(0))


@dataclass(frozen=True)
class SplitSubgroupDesc(FiniteOModuleDesc):
    """Descriptor of a split subgroup, tagged with its per-factor torsion
    exponents.  Containment of two split subgroups of the same product is
    componentwise comparison of these exponents."""

    torsion: tuple[int, ...] = ()

    def contains(self, other: "SplitSubgroupDesc") -> bool:
        if len(self.torsion) != len(other.torsion):
            raise MufiltError("torsion keys of different products")
        return all(a >= b for a, b in zip(self.torsion, other.torsion))


@dataclass(frozen=True)
class LTProductGroup:
    """Product of Lubin-Tate factors LT_{A_l}^{mult_l}, truncated at p^level.

    The factor subsets must be strictly increasing along the sequence.
    """

    f: int
    factors: tuple[tuple[frozenset[int], int], ...]
    level: int

    def __post_init__(self):
        facs = tuple((frozenset(A), int(m)) for A, m in self.factors)
        object.__setattr__(self, "factors", facs)
        if self.level < 0:
            raise MufiltError(f"level must be >= 0, got {self.level!r}")
        prev: frozenset[int] | None = None
        for A, m in facs:
            if not A <= frozenset(range(self.f)):
                raise MufiltError(f"factor subset {sorted(A)} outside 0..{self.f - 1}")
            if m < 1:
                raise MufiltError(f"factor multiplicity {m} must be >= 1")
            if prev is not None and not (prev < A):
                raise MufiltError(
                    "factor subsets must be strictly increasing along the sequence"
                )
            prev = A


# === Raynaud schemes ========================================================

def raynaud_degrees(d: RaynaudDatum) -> FiniteOModuleDesc:
    """Degree descriptor of the Raynaud scheme: deg slot i is v(gamma_i)."""
    return FiniteOModuleDesc(o_height=1, deg=d.vgamma, level=1)


def raynaud_dual(d: RaynaudDatum) -> RaynaudDatum:
    """Cartier dual swaps the gamma and delta parameters slotwise."""
    return RaynaudDatum(d.f, d.p, d.vgamma)


def raynaud_hodge_tate_coker_degree(d: RaynaudDatum, tau: int) -> Fraction:
    """Valuation of the Hodge-Tate cokernel at a slot.

    Closed form: the Frobenius-weighted degree at tau divided by p^f - 1,
    with deg_{sigma^j tau_i} = v(gamma_{i+j}).  Cross-checked on every call
    against the point-valuation recursion coming from the defining
    equations x_i^p = gamma_{i+1} x_{i+1}; a mismatch would mean the index
    convention broke.
    """
    if not 0 <= tau < d.f:
        raise MufiltError(f"slot {tau!r} out of range 0..{d.f - 1}")
    f, p = d.f, d.p
    vg = d.vgamma
    weighted = sum(p ** (f - j) * vg[(tau + j) % f] for j in range(1, f + 1))
    formula = weighted / (p**f - 1)
    oracle = _raynaud_point_valuation(p, vg, tau)
    if formula != oracle:
        raise InternalInvariantBreach(
            f"Raynaud cokernel mismatch at slot {tau}: {formula} vs {oracle}"
        )
    return formula


def _raynaud_point_valuation(p: int, vgamma, slot: int) -> Fraction:
    # v(x_i) solves p v_i = v(gamma_{i+1}) + v_{i+1} around the cycle of
    # length f; unrolling gives v_slot = sum_k v(gamma_{slot+k+1}) p^{-(k+1)}
    # + p^{-f} v_slot, solved for v_slot.
    f = len(vgamma)
    total = Fraction(0)
    for k in range(f):
        total += Fraction(vgamma[(slot + k + 1) % f], p ** (k + 1))
    return total / (1 - Fraction(1, p**f))


# === Lubin-Tate torsion and mu-ordinary products ============================

def lt_torsion_desc(
    f: int, A: frozenset[int], m: int, n_cap: int
) -> FiniteOModuleDesc:
    """Descriptor of LT_A[p^m] inside an ambient p^n_cap-torsion group."""
    A = frozenset(A)
    if not A <= frozenset(range(f)):
        raise MufiltError(f"subset {sorted(A)} outside 0..{f - 1}")
    if m < 0:
        raise MufiltError(f"torsion level m={m!r} must be >= 0")
    if m > n_cap:
        raise MufiltError(f"torsion level m={m} exceeds ambient level {n_cap}")
    deg = tuple(Fraction(m if t in A else 0) for t in range(f))
    return FiniteOModuleDesc(o_height=m, deg=deg, level=m)


def mu_ordinary_product(sig: Signature, n: int) -> LTProductGroup:
    """The mu-ordinary product group of a signature, truncated at p^n."""
    if n < 1:
        raise MufiltError(f"level n must be >= 1, got {n!r}")
    return LTProductGroup(sig.f, mu_ordinary_decomposition(sig), n)


def enumeration_cap() -> int:
    raw = os.environ.get("MUFILT_ENUM_CAP")
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise MufiltError(f"MUFILT_ENUM_CAP={raw!r} is not an integer")
    if cap < 1:
        raise MufiltError(f"MUFILT_ENUM_CAP={cap} must be >= 1")
    return cap


def enumerate_split_subgroups(
    G: LTProductGroup, cap: int | None = None
) -> list[SplitSubgroupDesc]:
    """All split subgroups Prod_l LT_{A_l}[p^{s_l}] of the product.

    The mult_l copies of one factor contribute interchangeably, so a
    subgroup is determined by the total torsion s_l in [0, n*mult_l] per
    factor.  Output sorted by (height, total degree, degree sequence).
    """
    if cap is None:
        cap = enumeration_cap()
    n = G.level
    ranges = [n * m + 1 for _, m in G.factors]
    required = 1
    for r in ranges:
        required *= r
    if required > cap:
        raise EnumerationCapExceeded(cap, required)
    subsets = [A for A, _ in G.factors]
    seen: dict[tuple, tuple[int, ...]] = {}
    out = []
    for sums in product(*(range(r) for r in ranges)):
        ht = sum(sums)
        deg = [Fraction(0)] * G.f
        for A, s in zip(subsets, sums):
            for t in A:
                deg[t] += s
        key = (ht, tuple(deg))
        if key in seen:
            raise InternalInvariantBreach(
                f"split descriptors {seen[key]} and {sums} collide on {key}"
            )
        seen[key] = sums
        out.append(
            SplitSubgroupDesc(
                o_height=ht, deg=tuple(deg), level=n, torsion=sums
            )
        )
    out.sort(key=lambda s: (s.o_height, s.total_degree, s.deg, s.torsion))
    return out


def mu_ord_canonical_filtration(
    sig: Signature, n: int
) -> list[tuple[tuple[int, ...], FiniteOModuleDesc]]:
    """Canonical filtration steps of the mu-ordinary group at level n.

    One step per distinct q-value: the step for tau is the product of the
    full n-torsion of every factor containing tau.  Degrees are accumulated
    factor by factor, which keeps this path independent of the closed
    min(p_tau, p_tau') formula used elsewhere.  Returned in increasing
    height order, each step tagged with its class of embeddings.
    """
    if n < 1:
        raise MufiltError(f"level n must be >= 1, got {n!r}")
    factors = mu_ordinary_decomposition(sig)
    classes: dict[int, list[int]] = {}
    for t in range(sig.f):
        classes.setdefault(sig.q[t], []).append(t)
    steps = []
    for qval in sorted(classes, reverse=True):
        members = classes[qval]
        l_tau = ladder_index(sig, members[0])
        ht = 0
        deg = [Fraction(0)] * sig.f
        for l in range(l_tau, len(factors)):
            A, mult = factors[l]
            ht += n * mult
            for t in A:
                deg[t] += n * mult
        steps.append(
            (
                tuple(members),
                FiniteOModuleDesc(o_height=ht, deg=tuple(deg), level=n),
            )
        )
    return steps
