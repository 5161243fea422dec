"""Symbolic exponent algebra of crystalline period monomials.

A monomial is t_O^a * prod_{j=1}^{f-1} (phi^j(t_O)/p)^{b_j} * p^c with
integer exponents; units are dropped throughout.  Frobenius permutes the
factors cyclically, turning t_O into p * (phi(t_O)/p) and phi^{f-1}(t_O)/p
back into t_O.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateEmbedding, MufiltError, NegativeExponent
from .signature_core import Signature, constants


@dataclass(frozen=True)
class PeriodMonomial:
    a: int
    b: tuple[int, ...]
    c: int = 0

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    @property
    def f(self) -> int:
        return len(self.b) + 1

    @staticmethod
    def one(f: int) -> "PeriodMonomial":
        return PeriodMonomial(0, (0,) * (f - 1), 0)

    def __mul__(self, other: "PeriodMonomial") -> "PeriodMonomial":
        if self.f != other.f:
            raise MufiltError("monomials over different f")
        return PeriodMonomial(
            self.a + other.a,
            tuple(x + y for x, y in zip(self.b, other.b)),
            self.c + other.c,
        )

    def times_p(self, k: int) -> "PeriodMonomial":
        return PeriodMonomial(self.a, self.b, self.c + k)

    def text(self) -> str:
        parts = []
        if self.a:
            parts.append(f"t_O^{self.a}")
        for j, bj in enumerate(self.b, start=1):
            if bj:
                parts.append(f"(phi^{j} t_O / p)^{bj}")
        if self.c:
            parts.append(f"p^{self.c}")
        return " * ".join(parts) if parts else "1"


def monomial_frobenius(m: PeriodMonomial) -> PeriodMonomial:
    """One Frobenius step: phi(t_O) = p*(phi(t_O)/p), the b-chain shifts up,
    and phi^{f-1}(t_O)/p closes back to t_O."""
    if m.f == 1:
        return PeriodMonomial(m.a, (), m.c + m.a)
    exps = [m.a] + list(m.b)
    rotated = [exps[-1]] + exps[:-1]
    return PeriodMonomial(rotated[0], tuple(rotated[1:]), m.c + m.a)


def graded_valuation(m: PeriodMonomial, p: int) -> tuple[int, Fraction]:
    """(filtration degree, valuation) of a monomial with a, b >= 0.

    t_O sits in filtration degree 1 with valuation 1/(p^f - 1); the factor
    phi^j(t_O)/p in degree 0 with valuation p^j/(p^f - 1); p in degree 0
    with valuation 1.
    """
    if m.a < 0 or any(bj < 0 for bj in m.b):
        raise NegativeExponent(
            f"monomial {m.text()} has a negative period exponent"
        )
    denom = p**m.f - 1
    val = Fraction(m.a, denom) + m.c
    for j, bj in enumerate(m.b, start=1):
        val += Fraction(bj * p**j, denom)
    return (m.a, val)


def t_monomial(f: int) -> PeriodMonomial:
    """The cyclotomic period t = t_O * prod_j phi^j(t_O)/p."""
    return PeriodMonomial(1, (1,) * (f - 1), 0)


def t_decomposition_check(f: int, p: int) -> bool:
    """The product decomposition of t: valuation 1/(p-1) and phi(t) = p t."""
    t = t_monomial(f)
    _, val = graded_valuation(t, p)
    if val != Fraction(1, p - 1):
        return False
    return monomial_frobenius(t) == t.times_p(1)


@dataclass(frozen=True)
class PeriodVector:
    """One monomial per embedding slot."""

    entries: tuple[PeriodMonomial, ...]

    @property
    def f(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class MultiplicationMap:
    coeffs: PeriodVector
    K_value: Fraction
    transport_ok: bool


def multiplication_coeff(sig: Signature, tau: int, tau_prime: int) -> PeriodMonomial:
    """Coefficient of the period multiplication map at slot tau'."""
    q = sig.q
    a = max(0, q[tau] - q[tau_prime])
    b = tuple(
        max(0, q[tau] - q[(tau_prime - j) % sig.f]) for j in range(1, sig.f)
    )
    return PeriodMonomial(a, b, 0)


def multiplication_map(sig: Signature, tau: int) -> MultiplicationMap:
    """Period multiplication map at an embedding with q_tau outside {0, h}.

    K_value is the graded valuation of the diagonal coefficient; transport
    replays the equivariance identity
    phi(coeff(tau')) * p^{min(q_tau, q_{tau'})} = coeff(sigma tau') * p^{q_tau}
    on exponent tuples for every slot.
    """
    sig.check_embedding(tau)
    if sig.q[tau] in (0, sig.h):
        raise DegenerateEmbedding(
            f"embedding {tau} has q={sig.q[tau]}, the multiplication map degenerates"
        )
    coeffs = tuple(
        multiplication_coeff(sig, tau, u) for u in range(sig.f)
    )
    _, K_value = graded_valuation(coeffs[tau], sig.p)
    transport_ok = True
    for u in range(sig.f):
        lhs = monomial_frobenius(coeffs[u]).times_p(min(sig.q[tau], sig.q[u]))
        rhs = coeffs[(u + 1) % sig.f].times_p(sig.q[tau])
        if lhs != rhs:
            transport_ok = False
    return MultiplicationMap(
        coeffs=PeriodVector(coeffs), K_value=K_value, transport_ok=transport_ok
    )


def d_matrix(sig: Signature, tau: int) -> tuple[int, ...]:
    """Diagonal p-exponents of the comparison matrix: block i holds
    min(q_tau, q_{sigma^{i-1} tau}) for the slot sigma^i tau, i = 0..f-1."""
    sig.check_embedding(tau)
    return tuple(
        min(sig.q[tau], sig.q[(tau + i - 1) % sig.f]) for i in range(sig.f)
    )


@dataclass(frozen=True)
class FaltingsMargin:
    value: Fraction
    margin_ok: bool


def faltings_margin(sig: Signature, tau: int) -> FaltingsMargin:
    """Injectivity margin K_tau/p + q_tau/(p(p-1)) + q_tau/p, with the
    predicate that it stays strictly below 1."""
    sig.check_embedding(tau)
    K = constants(sig).K[tau]
    p, qt = sig.p, sig.q[tau]
    value = K / p + Fraction(qt, p * (p - 1)) + Fraction(qt, p)
    return FaltingsMargin(value=value, margin_ok=value < 1)


def mod_fil1_valuation(sig: Signature, tau: int) -> Fraction:
    """Valuation of the multiplication coefficient modulo Fil^1: K_tau."""
    sig.check_embedding(tau)
    return constants(sig).K[tau]


def mod_p_filp_valuation(sig: Signature, tau: int) -> Fraction:
    """Valuation normalization modulo (p, Fil^p): K_tau/p."""
    sig.check_embedding(tau)
    return constants(sig).K[tau] / sig.p
