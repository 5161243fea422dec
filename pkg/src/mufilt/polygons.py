"""Exact piecewise-linear polygon calculus.

Polygons start at (0, 0), use Fraction breakpoints, and are stored in
canonical form: adjacent collinear segments are merged, so every interior
breakpoint is a genuine slope break.  Convex polygons have weakly
increasing slopes, concave ones weakly decreasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatch, InvalidMultiplicity, MufiltError
from .signature_core import Signature

Point = tuple[Fraction, Fraction]


def _merge_collinear(points: list[Point]) -> tuple[Point, ...]:
    out: list[Point] = []
    for pt in points:
        while len(out) >= 2:
            (x0, y0), (x1, y1) = out[-2], out[-1]
            # cross product of (x1-x0, y1-y0) and (pt-x0) detects collinearity
            if (x1 - x0) * (pt[1] - y0) == (pt[0] - x0) * (y1 - y0):
                out.pop()
            else:
                break
        out.append(pt)
    return tuple(out)


@dataclass(frozen=True)
class Polygon:
    points: tuple[Point, ...]
    convexity: str

    def __post_init__(self):
        if self.convexity not in ("convex", "concave"):
            raise MufiltError(f"unknown convexity {self.convexity!r}")
        pts = [
            (Fraction(x), Fraction(y)) for x, y in self.points
        ]
        if not pts or pts[0] != (Fraction(0), Fraction(0)):
            raise MufiltError("polygon must start at (0, 0)")
        for (x0, _), (x1, _) in zip(pts, pts[1:]):
            if not x1 > x0:
                raise MufiltError("abscissas must be strictly increasing")
        pts = list(_merge_collinear(pts))
        slopes = [
            (y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(pts, pts[1:])
        ]
        for s0, s1 in zip(slopes, slopes[1:]):
            if self.convexity == "convex" and s1 < s0:
                raise MufiltError("convex polygon with decreasing slopes")
            if self.convexity == "concave" and s1 > s0:
                raise MufiltError("concave polygon with increasing slopes")
        object.__setattr__(self, "points", tuple(pts))

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return (self.points[0][0], self.points[-1][0])

    @property
    def endpoint(self) -> Point:
        return self.points[-1]

    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(
            (y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(self.points, self.points[1:])
        )

    def value(self, x) -> Fraction:
        x = Fraction(x)
        lo, hi = self.domain
        if not lo <= x <= hi:
            raise DomainMismatch(f"abscissa {x} outside [{lo}, {hi}]")
        for (x0, y0), (x1, y1) in zip(self.points, self.points[1:]):
            if x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return self.points[-1][1]


@dataclass(frozen=True)
class DominanceReport:
    dominates: bool
    same_endpoints: bool
    contacts: tuple[Fraction, ...]


def hodge_polygon(sig: Signature) -> Polygon:
    """Convex polygon on [0, h] whose slope on [i, i+1] is #{q_tau <= i}/f."""
    pts: list[Point] = [(Fraction(0), Fraction(0))]
    y = Fraction(0)
    for i in range(sig.h):
        y += Fraction(sum(1 for qt in sig.q if qt <= i), sig.f)
        pts.append((Fraction(i + 1), y))
    return Polygon(tuple(pts), "convex")


def newton_from_slopes(slope_multiset) -> Polygon:
    """Convex polygon built from (slope, multiplicity) pairs.

    Slopes are sorted ascending and accumulated; multiplicities must be
    positive integers.
    """
    pairs = []
    for slope, mult in slope_multiset:
        if not isinstance(mult, int) or mult <= 0:
            raise InvalidMultiplicity(
                f"multiplicity {mult!r} for slope {slope} must be a positive integer"
            )
        pairs.append((Fraction(slope), mult))
    pairs.sort(key=lambda sm: sm[0])
    pts: list[Point] = [(Fraction(0), Fraction(0))]
    x = Fraction(0)
    y = Fraction(0)
    for slope, mult in pairs:
        x += mult
        y += slope * mult
        pts.append((x, y))
    if len(pts) == 1:
        raise InvalidMultiplicity("empty slope multiset")
    return Polygon(tuple(pts), "convex")


def lies_above(upper: Polygon, lower: Polygon) -> DominanceReport:
    """Pointwise comparison of two polygons over a shared domain.

    Checks upper(x) >= lower(x) at the union of both breakpoint sets, which
    settles dominance for piecewise-linear functions.  Contacts are the
    breakpoint abscissas where the values agree.
    """
    if upper.domain != lower.domain:
        raise DomainMismatch(
            f"domains differ: {upper.domain} vs {lower.domain}"
        )
    xs = sorted({x for x, _ in upper.points} | {x for x, _ in lower.points})
    dominates = True
    contacts = []
    for x in xs:
        du = upper.value(x)
        dl = lower.value(x)
        if du < dl:
            dominates = False
        if du == dl:
            contacts.append(x)
    return DominanceReport(
        dominates=dominates,
        same_endpoints=upper.endpoint == lower.endpoint,
        contacts=tuple(contacts),
    )


def reversed_hodge(sig: Signature) -> Polygon:
    """Concave polygon on [0, h]: slope on [b-1, b] is #{p_tau >= b}/f.

    Endpoint ordinate is the average degree (sum of p_tau)/f.
    """
    pv = sig.p_values
    pts: list[Point] = [(Fraction(0), Fraction(0))]
    y = Fraction(0)
    for b in range(1, sig.h + 1):
        y += Fraction(sum(1 for pt in pv if pt >= b), sig.f)
        pts.append((Fraction(b), y))
    return Polygon(tuple(pts), "concave")


def hn_mu_ordinary_tau(sig: Signature, tau: int) -> Polygon:
    """Concave polygon of the tau-weighted mu-ordinary profile.

    V(x) = (1/f) * sum over i = 1..f of p^{f-i} * min(x, p_{sigma^i tau}),
    evaluated at 0, the distinct p-values, and h.
    """
    sig.check_embedding(tau)
    f, p = sig.f, sig.p
    pv = sig.p_values
    xs = sorted({0, sig.h} | set(pv))

    def V(x: int) -> Fraction:
        acc = 0
        for i in range(1, f + 1):
            acc += p ** (f - i) * min(x, pv[(tau + i) % f])
        return Fraction(acc, f)

    return Polygon(tuple((Fraction(x), V(x)) for x in xs), "concave")


def renormalize(poly: Polygon, n: int) -> Polygon:
    """Rescale both axes by 1/n: Q(x) = P(n x)/n."""
    if not isinstance(n, int) or n < 1:
        raise DomainMismatch(f"renormalization level must be a positive integer, got {n!r}")
    return Polygon(
        tuple((x / n, y / n) for x, y in poly.points), poly.convexity
    )
