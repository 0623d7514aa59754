"""The two families of hyperquadratic continued fractions and their equations.

Family theta(t, k, lambda): blocks of Frobenius-power length over the two
letters lambda*T, mu*T (mu = 2 - lambda; in characteristic 2 the block is a
run of lambda*T), each block repeated k+1 times.  Family phi(t, ell,
lambdas, eps), characteristic 2 only: all letters are lambda_n*T where the
coefficient stream is generated by a Frobenius-twisted recursion.  Both
satisfy an explicit equation of degree r+1 in the value, built from early
convergents (and, for phi, the Fibonacci-style polynomials F_n).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Field, FieldElement, Poly, XPoly
from .contfrac import ContinuedFraction, Word, convergent_tail, convergents
from .errors import HypothesisViolatedError


# ---------------------------------------------------------------------------
# Fibonacci-style polynomials F_0 = 1, F_1 = T, F_{n+1} = T F_n + F_{n-1}

_fib_cache: dict = {}


def fib(field: Field, n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be >= 0")
    seq = _fib_cache.setdefault(id(field), [Poly.one(field), field.T])
    T = field.T
    while len(seq) <= n:
        seq.append(T * seq[-1] + seq[-2])
    return seq[n]


# ---------------------------------------------------------------------------
# parameters


@dataclass(frozen=True)
class ThetaParams:
    field: Field
    t: int
    k: int
    lam: FieldElement

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be >= 1")
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.lam.is_zero:
            raise ValueError("lambda must be nonzero")
        if self.field.p != 2 and self.lam == self.field.one + self.field.one:
            raise ValueError("lambda must differ from 2 in odd characteristic")

    @property
    def r(self) -> int:
        return self.field.q**self.t

    @property
    def mu(self) -> FieldElement:
        return self.field.one + self.field.one - self.lam


@dataclass(frozen=True)
class PhiParams:
    field: Field
    t: int
    lambdas: tuple
    eps: tuple

    def __post_init__(self):
        if self.field.p != 2:
            raise ValueError("this family lives in characteristic 2")
        if self.t < 1:
            raise ValueError("t must be >= 1")
        if not self.lambdas:
            raise ValueError("need at least one lambda")
        if any(x.is_zero for x in self.lambdas):
            raise ValueError("all lambda_i must be nonzero")
        if len(self.eps) != 2 or any(e.is_zero for e in self.eps):
            raise ValueError("eps must be a pair of nonzero field elements")

    @property
    def r(self) -> int:
        return 2**self.t

    @property
    def ell(self) -> int:
        return len(self.lambdas)


# ---------------------------------------------------------------------------
# theta: letter stream and defining equation


def _theta_stream(params: ThetaParams):
    field = params.field
    T = field.T
    lam_T = T.scaled(params.lam)
    r = params.r
    reps = params.k + 1
    for _ in range(params.k):
        yield T
    if field.p == 2:
        i = 1
        while True:
            run = r**i - 1
            for _ in range(reps):
                yield T
                for _ in range(run):
                    yield lam_T
            i += 1
    else:
        mu_T = T.scaled(params.mu)
        i = 1
        while True:
            half = (r**i - 1) // 2
            for _ in range(reps):
                yield T
                for _ in range(half):
                    yield lam_T
                    yield mu_T
            i += 1


def theta_letters(params: ThetaParams, n_letters: int = 0) -> ContinuedFraction:
    """The family continued fraction [0; ...], extended lazily on demand."""
    cf = ContinuedFraction.from_generator(Poly.zero(params.field), _theta_stream(params))
    if n_letters:
        cf.prefix(n_letters)
    return cf


def theta_block(params: ThetaParams, i: int) -> Word:
    """The i-th building block (T followed by the twisted run), length r^i."""
    field = params.field
    T = field.T
    lam_T = T.scaled(params.lam)
    r = params.r
    if field.p == 2:
        return Word((T,) + (lam_T,) * (r**i - 1))
    mu_T = T.scaled(params.mu)
    return Word((T,) + (lam_T, mu_T) * ((r**i - 1) // 2))


def theta_equation(params: ThetaParams) -> XPoly:
    """The degree r+1 equation satisfied by the theta value.

    Built from the convergents of the fraction itself at indices k and k+r:
    q_k X^(r+1) - p_k X^r + c (q_{k+r} X - p_{k+r}) with c = (lambda mu)^((r-1)/2)
    for odd characteristic and c = 1 in characteristic 2.
    """
    field = params.field
    r = params.r
    k = params.k
    cf = theta_letters(params)
    pairs = convergents(cf, k + r)
    p_k, q_k = pairs[k].p, pairs[k].q
    p_kr, q_kr = pairs[k + r].p, pairs[k + r].q
    if field.p == 2:
        c = field.one
    else:
        c = (params.lam * params.mu) ** ((r - 1) // 2)
    return XPoly.from_map(
        field,
        {
            r + 1: q_k,
            r: -p_k,
            1: q_kr.scaled(c),
            0: -(p_kr.scaled(c)),
        },
    )


# ---------------------------------------------------------------------------
# phi: coefficient stream, letters, and defining equation


class PhiStream:
    """Memoized coefficient sequence lambda_1, lambda_2, ... of the phi family."""

    def __init__(self, params: PhiParams):
        self.params = params
        self._lams = list(params.lambdas)

    def coefficient(self, n: int) -> FieldElement:
        """lambda_n, 1-based."""
        if n < 1:
            raise IndexError("coefficients are indexed from 1")
        params = self.params
        ell = params.ell
        r = params.r
        e1, e2 = params.eps
        lams = self._lams
        while len(lams) < n:
            j = len(lams) + 1
            offset = j - ell
            m, i = divmod(offset - 1, r)
            i += 1
            if i == 1:
                twist = e2.inverse() if m % 2 == 0 else e2
                lams.append((e2 / e1) * twist * lams[m] ** r)
            else:
                lams.append(e1 / e2 if i % 2 == 0 else e2 / e1)
        return lams[n - 1]


def phi_letters(params: PhiParams, n_letters: int = 0) -> ContinuedFraction:
    """The family continued fraction [lambda_1 T; lambda_2 T, ...]."""
    stream = PhiStream(params)
    T = params.field.T

    def gen():
        n = 2
        while True:
            yield T.scaled(stream.coefficient(n))
            n += 1

    cf = ContinuedFraction.from_generator(T.scaled(stream.coefficient(1)), gen())
    if n_letters:
        cf.prefix(n_letters)
    return cf


def phi_equation(params: PhiParams) -> XPoly:
    """The degree r+1 equation with the phi value as its unique large root.

    Uses the convergents of the head [lambda_1 T, ..., lambda_ell T] and the
    Fibonacci-style polynomials F_{r-1}, F_{r-2}.
    """
    field = params.field
    r = params.r
    ell = params.ell
    T = field.T
    head_letters = tuple(T.scaled(x) for x in params.lambdas)
    head = ContinuedFraction.from_word(head_letters[0], Word(head_letters[1:]))
    (p2, q2), (p1, q1) = convergent_tail(head, ell - 1)
    e1, e2 = params.eps
    f1 = fib(field, r - 1)
    f2 = fib(field, r - 2)
    return XPoly.from_map(
        field,
        {
            r + 1: q1,
            r: p1,
            1: q2.scaled(e1) * f1 + q1.scaled(e2) * f2,
            0: p2.scaled(e1) * f1 + p1.scaled(e2) * f2,
        },
    )
