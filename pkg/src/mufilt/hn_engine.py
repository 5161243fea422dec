"""Degree weightings, slopes, and Harder-Narasimhan filtrations over
explicit descriptor lattices.

Two degree functions are supported.  Classical mode sums the partial
degrees.  Tau mode computes the Frobenius-weighted sum
Deg_tau = sum over j = 1..f of p^{f-j} deg_{sigma^j tau}, so the tau slot
itself enters with weight 1 via j = f.  Either way the slope of a
descriptor is mu = Deg/(f * o_height).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AdditivityViolation,
    AmbiguousLattice,
    DimensionMismatch,
    HeightMismatch,
    InternalInvariantBreach,
    MufiltError,
    NegativeValuation,
    NotALattice,
    OrderViolation,
)
from .group_models import FiniteOModuleDesc, SplitSubgroupDesc
from .polygons import Polygon
from .signature_core import Signature, constants


@dataclass(frozen=True)
class DegreeWeighting:
    """Choice of degree function: classical or tau-weighted."""

    mode: str
    p: int
    f: int
    tau: int | None = None

    def __post_init__(self):
        if self.mode not in ("classical", "tau"):
            raise MufiltError(f"unknown weighting mode {self.mode!r}")
        if self.f < 1:
            raise MufiltError(f"f must be positive, got {self.f!r}")
        if self.mode == "tau":
            if self.tau is None or not 0 <= self.tau < self.f:
                raise MufiltError(
                    f"tau mode needs an embedding in 0..{self.f - 1}, got {self.tau!r}"
                )
        elif self.tau is not None:
            raise MufiltError("classical mode takes no embedding")


def classical_weighting(p: int, f: int) -> DegreeWeighting:
    return DegreeWeighting(mode="classical", p=p, f=f)


def tau_weighting(p: int, f: int, tau: int) -> DegreeWeighting:
    return DegreeWeighting(mode="tau", p=p, f=f, tau=tau)


def _weighted(deg, w: DegreeWeighting) -> Fraction:
    if len(deg) != w.f:
        raise DimensionMismatch(
            f"descriptor has {len(deg)} partial degrees, weighting expects {w.f}"
        )
    if w.mode == "classical":
        return sum(deg, Fraction(0))
    total = Fraction(0)
    for j in range(1, w.f + 1):
        total += w.p ** (w.f - j) * deg[(w.tau + j) % w.f]
    return total


def deg_weighted(desc: FiniteOModuleDesc, w: DegreeWeighting) -> Fraction:
    """Weighted degree of a descriptor under the chosen mode."""
    return _weighted(desc.deg, w)


def slope_mu(desc: FiniteOModuleDesc, w: DegreeWeighting) -> Fraction:
    """Slope mu = Deg/(f * o_height); needs positive height."""
    if desc.o_height <= 0:
        raise MufiltError("slope of a height-zero descriptor")
    return deg_weighted(desc, w) / (w.f * desc.o_height)


def mu_range_upper(w: DegreeWeighting) -> Fraction:
    """Largest possible slope: (p^f - 1)/(f (p - 1)) in tau mode, 1/f
    per height unit of multiplicative type in classical mode times f."""
    if w.mode == "classical":
        return Fraction(1)
    return Fraction(w.p**w.f - 1, w.f * (w.p - 1))


@dataclass(frozen=True)
class HNResult:
    """Filtration (starting at the zero object, ending at the top), the
    strictly decreasing quotient slopes, and the slope polygon."""

    polygon: Polygon
    filtration: tuple[FiniteOModuleDesc, ...]
    slopes: tuple[Fraction, ...]


def _containment_from_pairs(n: int, pairs) -> list[list[bool]]:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise MufiltError(f"containment pair ({i},{j}) out of range")
        leq[i][j] = True
    # reflexive-transitive closure, desk scale
    changed = True
    while changed:
        changed = False
        for i in range(n):
            row = leq[i]
            for j in range(n):
                if row[j] and i != j:
                    for k in range(n):
                        if leq[j][k] and not row[k]:
                            row[k] = True
                            changed = True
    return leq


def hn_from_lattice(nodes, w: DegreeWeighting, containment=None) -> HNResult:
    """Harder-Narasimhan filtration of the top object of a subobject lattice.

    nodes: descriptors closed under the containment order.  The order is
    taken from explicit (i, j) index pairs when given, from per-factor
    torsion keys when every node carries one, and from componentwise
    (height, degrees) comparison otherwise; the last fallback is only
    sound for chains and is meant for hand-written inputs.

    Selection: starting from the zero object, repeatedly pick the node
    above the current one whose quotient maximizes the slope, breaking
    ties by maximal height.  A residual tie between distinct descriptors
    raises AmbiguousLattice.  Quotient heights and partial degrees must be
    nonnegative along every chain the selection walks.
    """
    nodes = list(nodes)
    if not nodes:
        raise NotALattice("empty node set")
    for d in nodes:
        if d.f != w.f:
            raise DimensionMismatch(
                f"descriptor has {d.f} partial degrees, weighting expects {w.f}"
            )
    n = len(nodes)
    if containment is not None:
        leq_matrix = _containment_from_pairs(n, containment)

        def leq(i: int, j: int) -> bool:
            return leq_matrix[i][j]

    elif all(isinstance(d, SplitSubgroupDesc) for d in nodes):
        def leq(i: int, j: int) -> bool:
            return nodes[j].contains(nodes[i])

    else:
        def leq(i: int, j: int) -> bool:
            a, b = nodes[i], nodes[j]
            return a.o_height <= b.o_height and all(
                x <= y for x, y in zip(a.deg, b.deg)
            )

    bottoms = [
        i
        for i in range(n)
        if nodes[i].o_height == 0 and all(d == 0 for d in nodes[i].deg)
    ]
    if not bottoms:
        raise NotALattice("no zero object among the nodes")
    bottom = bottoms[0]
    tops = [j for j in range(n) if all(leq(i, j) for i in range(n))]
    if not tops:
        raise NotALattice("no top object among the nodes")
    top = tops[0]

    current = bottom
    filtration = [nodes[bottom]]
    slopes: list[Fraction] = []
    points = [(Fraction(0), Fraction(0))]
    x = Fraction(0)
    y = Fraction(0)
    while current != top:
        best = None
        best_slope = None
        best_dht = None
        tie = False
        cur = nodes[current]
        for j in range(n):
            if j == current or not leq(current, j):
                continue
            cand = nodes[j]
            dht = cand.o_height - cur.o_height
            ddeg = tuple(a - b for a, b in zip(cand.deg, cur.deg))
            if dht < 0 or any(d < 0 for d in ddeg):
                raise AdditivityViolation(
                    f"quotient of node {j} by node {current} has a negative component"
                )
            if dht == 0:
                # distinct subobjects of equal height cannot nest strictly
                raise AdditivityViolation(
                    f"nodes {current} and {j} are ordered but have equal height"
                )
            slope = _weighted(ddeg, w) / (w.f * dht)
            if (
                best is None
                or slope > best_slope
                or (slope == best_slope and dht > best_dht)
            ):
                best, best_slope, best_dht = j, slope, dht
                tie = False
            elif slope == best_slope and dht == best_dht and j != best:
                if (nodes[j].o_height, nodes[j].deg) != (
                    nodes[best].o_height,
                    nodes[best].deg,
                ):
                    tie = True
        if best is None:
            raise NotALattice(
                f"no node lies strictly above node {current} on the way to the top"
            )
        if tie:
            raise AmbiguousLattice(
                f"two distinct maximal-slope subobjects above node {current}"
            )
        if slopes and not best_slope < slopes[-1]:
            raise InternalInvariantBreach(
                "maximal-slope selection produced a non-decreasing slope"
            )
        cur_best = nodes[best]
        dht = cur_best.o_height - cur.o_height
        ddeg = tuple(a - b for a, b in zip(cur_best.deg, cur.deg))
        x += dht
        if w.mode == "classical":
            y += sum(ddeg, Fraction(0)) / w.f
        else:
            y += _weighted(ddeg, w)
        points.append((x, y))
        slopes.append(best_slope)
        filtration.append(cur_best)
        current = best
    polygon = Polygon(tuple(points), "concave")
    return HNResult(
        polygon=polygon, filtration=tuple(filtration), slopes=tuple(slopes)
    )


@dataclass(frozen=True)
class BreakCertificate:
    """Outcome of the break-point and cran tests at one abscissa."""

    break_ok: bool
    cran_ok: bool
    weighted_degree: Fraction
    break_bound: Fraction
    cran_bound: Fraction


def break_certificate(
    sig: Signature,
    n: int,
    w: DegreeWeighting,
    tau_prime: int,
    C: FiniteOModuleDesc,
) -> BreakCertificate:
    """Certify that C forces a polygon break at abscissa n*p_{tau'}.

    Tau mode compares Deg_tau(C) to
    n * sum_j p^{f-j} min(p_{tau'}, p_{sigma^j tau})
    minus half the weighted count of embeddings sigma^j tau with
    q = q_{tau'}; classical mode compares deg(C) to
    n * sum min(p_{tau'}, p_{tau''}) minus half the plain count.  The cran
    test replaces the subtracted term by (p-2)/(p-1) in both modes.
    """
    sig.check_embedding(tau_prime)
    if n < 1:
        raise MufiltError(f"level n must be >= 1, got {n!r}")
    if w.f != sig.f or w.p != sig.p:
        raise DimensionMismatch("weighting does not match the signature")
    pv = sig.p_values
    expected = n * pv[tau_prime]
    if C.o_height != expected:
        raise HeightMismatch(
            f"candidate has O-height {C.o_height}, abscissa needs {expected}"
        )
    value = deg_weighted(C, w)
    if w.mode == "classical":
        main = n * sum(min(pv[tau_prime], pt) for pt in pv)
        half = Fraction(sum(1 for qt in sig.q if qt == sig.q[tau_prime]), 2)
    else:
        main = 0
        half_num = 0
        for j in range(1, sig.f + 1):
            weight = sig.p ** (sig.f - j)
            main += weight * min(pv[tau_prime], pv[(w.tau + j) % sig.f])
            if sig.q[(w.tau + j) % sig.f] == sig.q[tau_prime]:
                half_num += weight
        main *= n
        half = Fraction(half_num, 2)
    break_bound = main - half
    cran_bound = main - Fraction(sig.p - 2, sig.p - 1)
    return BreakCertificate(
        break_ok=value > break_bound,
        cran_ok=value > cran_bound,
        weighted_degree=value,
        break_bound=break_bound,
        cran_bound=cran_bound,
    )


def bijakowski_containment(
    sig: Signature, n: int, d: int, c: int, degD: Fraction, degC: Fraction
) -> bool:
    """Degree certificate forcing D inside C for heights d <= c.

    True when degD + degC strictly exceeds
    sum_{tau'} (min(n p_{tau'}, d) + min(n p_{tau'}, c))
    - #{tau' : d - 1 < n p_{tau'} <= c}.

    The count needs the strict lower comparison: at the knife edge where
    D and C are incomparable with intersection height exactly d - 1 and
    some n p_{tau'} also equals d - 1, a weak comparison would fire the
    certificate on genuinely non-nested pairs (split products realize
    such pairs), while every slot with n p_{tau'} >= d supports it.
    Heights are integers, so the count set is {tau' : d <= n p_{tau'} <= c}.
    """
    if n < 1:
        raise MufiltError(f"level n must be >= 1, got {n!r}")
    if d > c:
        raise OrderViolation(f"need d <= c, got d={d}, c={c}")
    pv = sig.p_values
    total = sum(min(n * pt, d) + min(n * pt, c) for pt in pv)
    count = sum(1 for pt in pv if d <= n * pt <= c)
    return Fraction(degD) + Fraction(degC) > total - count


def fitting_degree(divisor_valuations) -> Fraction:
    """Degree of a finite module presented by elementary divisors: the sum
    of their valuations."""
    total = Fraction(0)
    for i, v in enumerate(divisor_valuations):
        v = Fraction(v)
        if v < 0:
            raise NegativeValuation(f"valuation {v} at position {i} is negative")
        total += v
    return total


@dataclass(frozen=True)
class DetDegreeCheck:
    ok: bool
    warning: bool


def det_degree_valid(det_val: Fraction, r: int) -> DetDegreeCheck:
    """Guard for reading degrees off a map of modules of rank r: sound when
    v(det f) < r, flagged when equality holds (the equality case can
    undercount)."""
    det_val = Fraction(det_val)
    return DetDegreeCheck(ok=det_val < r, warning=det_val == r)
