"""Signatures and their combinatorial constants.

A signature records an unramified degree f, a prime p, a height h, and one
partial Hodge number q_tau per embedding.  Embeddings are the residue
classes 0..f-1 and the Frobenius sigma acts by tau -> tau+1 mod f, so
sigma^{-j} tau is (tau - j) mod f.  The complementary numbers are
p_tau = h - q_tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateEmbedding, MufiltError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Signature:
    """Immutable signature datum (f, p, h, q)."""

    f: int
    p: int
    h: int
    q: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.f, int) or self.f < 1:
            raise MufiltError(f"f must be a positive integer, got {self.f!r}")
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise MufiltError(f"p must be prime, got {self.p!r}")
        if not isinstance(self.h, int) or self.h < 1:
            raise MufiltError(f"h must be a positive integer, got {self.h!r}")
        q = tuple(self.q)
        object.__setattr__(self, "q", q)
        if len(q) != self.f:
            raise MufiltError(
                f"need exactly f={self.f} partial Hodge numbers, got {len(q)}"
            )
        for t, qt in enumerate(q):
            if not isinstance(qt, int) or not 0 <= qt <= self.h:
                raise MufiltError(
                    f"q[{t}]={qt!r} must be an integer in [0, {self.h}]"
                )

    @property
    def p_values(self) -> tuple[int, ...]:
        """Complementary numbers p_tau = h - q_tau."""
        return tuple(self.h - qt for qt in self.q)

    def sigma(self, tau: int, j: int = 1) -> int:
        """Image of embedding tau under sigma^j (j may be negative)."""
        return (tau + j) % self.f

    def check_embedding(self, tau: int) -> int:
        if not isinstance(tau, int) or not 0 <= tau < self.f:
            raise MufiltError(
                f"embedding index {tau!r} out of range 0..{self.f - 1}"
            )
        return tau


@dataclass(frozen=True)
class SignatureConstants:
    """Per-embedding invariants, each a tuple indexed by embedding.

    k: integer defect sums max(0, q_tau - q_tau')
    K: Frobenius-weighted defect, in [0, 1) whenever q_tau <= p - 2
    r: count of embeddings with q_tau' <= q_tau
    n: count of embeddings with q_tau' == q_tau
    k_dual: defect sums of the dual signature, max(0, p_tau - p_tau')
    """

    k: tuple[int, ...]
    K: tuple[Fraction, ...]
    r: tuple[int, ...]
    n: tuple[int, ...]
    k_dual: tuple[int, ...]


def constants(sig: Signature) -> SignatureConstants:
    """All per-embedding constants of a signature.

    K_tau sums p^j max(0, q_tau - q_{sigma^{-j} tau}) over j = 1..f-1 and
    divides by p^f - 1.
    """
    f, p, q = sig.f, sig.p, sig.q
    pv = sig.p_values
    denom = p**f - 1
    k = []
    K = []
    r = []
    n = []
    kd = []
    for t in range(f):
        k.append(sum(max(0, q[t] - qu) for qu in q))
        acc = 0
        for j in range(1, f):
            acc += p**j * max(0, q[t] - q[(t - j) % f])
        K.append(Fraction(acc, denom))
        r.append(sum(1 for qu in q if qu <= q[t]))
        n.append(sum(1 for qu in q if qu == q[t]))
        kd.append(sum(max(0, pv[t] - pu) for pu in pv))
    return SignatureConstants(tuple(k), tuple(K), tuple(r), tuple(n), tuple(kd))


def dual_signature(sig: Signature) -> Signature:
    """Dual datum: swaps each q_tau with p_tau = h - q_tau."""
    return Signature(sig.f, sig.p, sig.h, sig.p_values)


def hasse_threshold(sig: Signature, tau: int, n: int) -> Fraction:
    """Level-n canonical-subgroup threshold at an embedding.

    Value: p^{-(n-1)f} * min(1/2, 1 + K_tau - 2 q_tau / (p - 1)).
    Requires q_tau outside {0, h}; the degenerate embeddings carry no
    threshold.
    """
    sig.check_embedding(tau)
    if n < 1:
        raise MufiltError(f"level n must be >= 1, got {n!r}")
    if sig.q[tau] in (0, sig.h):
        raise DegenerateEmbedding(
            f"embedding {tau} has q={sig.q[tau]}, no threshold is defined"
        )
    K = constants(sig).K[tau]
    base = min(Fraction(1, 2), 1 + K - Fraction(2 * sig.q[tau], sig.p - 1))
    return base / sig.p ** ((n - 1) * sig.f)


def threshold_h1(sig: Signature, tau: int) -> Fraction:
    """Level-one bound 1 + K_tau - 2 q_tau / (p - 1), without the 1/2 cap."""
    sig.check_embedding(tau)
    if sig.q[tau] in (0, sig.h):
        raise DegenerateEmbedding(
            f"embedding {tau} has q={sig.q[tau]}, no threshold is defined"
        )
    K = constants(sig).K[tau]
    return 1 + K - Fraction(2 * sig.q[tau], sig.p - 1)


def threshold_h3(sig: Signature, tau: int, n: int) -> Fraction:
    """Level-n refinement (1+K_tau)/p^{(n-1)f} - 2q_tau/(p^{nf}-p^{(n-1)f})."""
    sig.check_embedding(tau)
    if n < 1:
        raise MufiltError(f"level n must be >= 1, got {n!r}")
    if sig.q[tau] in (0, sig.h):
        raise DegenerateEmbedding(
            f"embedding {tau} has q={sig.q[tau]}, no threshold is defined"
        )
    f, p = sig.f, sig.p
    K = constants(sig).K[tau]
    return (1 + K) / p ** ((n - 1) * f) - Fraction(
        2 * sig.q[tau], p ** (n * f) - p ** ((n - 1) * f)
    )


def threshold_existence(sig: Signature, tau: int) -> Fraction:
    """Existence-only variant min(1/2, 1 + K_tau - q_tau/(p-1)).

    Weaker than the threshold used by hasse_threshold: a single q_tau/(p-1)
    term instead of two, enough for the subgroup to exist but not for the
    full degree identity.
    """
    sig.check_embedding(tau)
    if sig.q[tau] in (0, sig.h):
        raise DegenerateEmbedding(
            f"embedding {tau} has q={sig.q[tau]}, no threshold is defined"
        )
    K = constants(sig).K[tau]
    return min(Fraction(1, 2), 1 + K - Fraction(sig.q[tau], sig.p - 1))


def prime_admissible(sig: Signature) -> tuple[bool, list[str]]:
    """Check the two largeness conditions on p.

    Condition 1: p > max over embeddings with q_tau != h of
    2 q_tau / (1 + K_tau), plus 1.  An empty maximum passes vacuously.
    Condition 2: q_tau < p - 1 for every embedding with q_tau not in {0, h}.

    Returns (ok, diagnostics); each diagnostic names the violated condition
    and the embedding.
    """
    diags: list[str] = []
    K = constants(sig).K
    candidates = [
        Fraction(2 * sig.q[t]) / (1 + K[t])
        for t in range(sig.f)
        if sig.q[t] != sig.h
    ]
    if candidates:
        bound = max(candidates) + 1
        if not sig.p > bound:
            diags.append(
                f"p={sig.p} is not greater than the ratio bound {bound}"
            )
    for t in range(sig.f):
        if sig.q[t] in (0, sig.h):
            continue
        if not sig.q[t] < sig.p - 1:
            diags.append(
                f"embedding {t}: q={sig.q[t]} is not below p-1={sig.p - 1}"
            )
    return (not diags, diags)


def mu_ordinary_decomposition(
    sig: Signature,
) -> tuple[tuple[frozenset[int], int], ...]:
    """Slope factors of the mu-ordinary group attached to a signature.

    The ladder is 0, then the distinct q-values strictly between 0 and h,
    then h.  Each consecutive pair (lo, hi) contributes one factor with
    embedding set {tau : q_tau <= lo} and multiplicity hi - lo.  The sets
    are strictly increasing along the list and the multiplicities sum to h.
    Round trip: p_tau is the total multiplicity of factors containing tau.
    """
    ladder = mu_ordinary_ladder(sig)
    factors = []
    for lo, hi in zip(ladder, ladder[1:]):
        A = frozenset(t for t in range(sig.f) if sig.q[t] <= lo)
        factors.append((A, hi - lo))
    return tuple(factors)


def mu_ordinary_ladder(sig: Signature) -> list[int]:
    """Sorted value ladder [0, interior q-values, h]."""
    interior = sorted({qt for qt in sig.q if 0 < qt < sig.h})
    return [0] + interior + [sig.h]


def ladder_index(sig: Signature, tau: int) -> int:
    """Position l_tau of q_tau in the ladder.

    Factors are indexed 0..r; an embedding sits inside factor l exactly
    when l >= l_tau, so q_tau = h yields r + 1 and belongs to no factor.
    """
    sig.check_embedding(tau)
    return mu_ordinary_ladder(sig).index(sig.q[tau])
