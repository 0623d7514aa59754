"""Continued fractions with polynomial partial quotients.

Words are finite sequences of partial quotients (each of T-degree >= 1);
continued fractions carry a separate constant term a0 plus a letter source
that is either a finite word, an eventually periodic pair of words, or a
memoized generator.  Expansion of a series refuses to guess: when the
remainder is zero to its known precision the expansion stops with an
explicit precision marker instead of silently terminating the fraction.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .algebra import AbsExponent, Field, Poly
from .errors import (
    IdenticalPrefixError,
    InsufficientLettersError,
    PrecisionExhaustedError,
    SharedValueError,
)
from .laurent import LaurentSeries, series_from_rational


class Word:
    """A finite word of partial quotients, every letter of degree >= 1."""

    __slots__ = ("letters",)

    def __init__(self, letters):
        letters = tuple(letters)
        for a in letters:
            if a.degree < 1:
                raise ValueError(f"partial quotient {a} has degree < 1")
        self.letters = letters

    @classmethod
    def empty(cls) -> "Word":
        return cls(())

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        got = self.letters[i]
        return Word(got) if isinstance(i, slice) else got

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def power(self, n: int) -> "Word":
        if n < 0:
            raise ValueError("word power must be >= 0")
        return Word(self.letters * n)

    def degree_sum(self) -> int:
        return sum(a.degree for a in self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Word(" + ", ".join(str(a) for a in self.letters) + ")"


def concat(*words: Word) -> Word:
    out = ()
    for w in words:
        out += w.letters
    return Word(out)


def power(w: Word, n: int) -> Word:
    return w.power(n)


# letter-source truncation markers
_COMPLETE = None
_PRECISION = "precision"
_BUDGET = "budget"


class ContinuedFraction:
    """[a0; a1, a2, ...] with a lazily produced, memoized letter sequence."""

    __slots__ = ("a0", "_letters", "_trunc", "_gen", "_pre_len", "_period", "_lock")

    def __init__(self, a0: Poly, letters, trunc, gen, pre_len, period):
        self.a0 = a0
        self._letters = list(letters)
        self._trunc = trunc
        self._gen = gen
        self._pre_len = pre_len
        self._period = period
        self._lock = threading.Lock()

    # -- constructors

    @classmethod
    def from_word(cls, a0: Poly, word: Word, trunc=None) -> "ContinuedFraction":
        return cls(a0, word.letters, trunc, None, None, None)

    @classmethod
    def periodic(cls, a0: Poly, pre: Word, per: Word) -> "ContinuedFraction":
        if len(per) == 0:
            raise ValueError("period must be nonempty")
        return cls(a0, pre.letters, None, None, len(pre), per.letters)

    @classmethod
    def from_generator(cls, a0: Poly, gen) -> "ContinuedFraction":
        return cls(a0, (), None, iter(gen), None, None)

    # -- classification

    @property
    def is_periodic(self) -> bool:
        return self._period is not None

    @property
    def is_stream(self) -> bool:
        return self._gen is not None

    @property
    def preperiod(self) -> Word:
        return Word(self._letters[: self._pre_len])

    @property
    def period(self) -> Word:
        return Word(self._period)

    # -- letter access

    def _extend_to(self, n: int) -> None:
        if self._period is not None:
            while len(self._letters) < n:
                i = (len(self._letters) - self._pre_len) % len(self._period)
                self._letters.append(self._period[i])
            return
        if self._gen is None:
            return
        with self._lock:
            while len(self._letters) < n:
                try:
                    a = next(self._gen)
                except StopIteration:
                    self._gen = None
                    return
                if a.degree < 1:
                    raise ValueError(f"generator produced partial quotient {a} of degree < 1")
                self._letters.append(a)

    def prefix(self, n: int) -> tuple:
        """Up to n leading letters, as many as the source can supply."""
        if len(self._letters) < n:
            self._extend_to(n)
        return tuple(self._letters[:n])

    def letter(self, i: int) -> Poly:
        """Partial quotient a_i, 1-based."""
        if i < 1:
            raise IndexError("letters are indexed from 1")
        got = self.prefix(i)
        if len(got) < i:
            if self._trunc == _PRECISION:
                raise PrecisionExhaustedError(
                    f"letter {i} lies beyond the exactly determined prefix ({len(got)} letters)"
                )
            raise InsufficientLettersError(f"only {len(got)} letters available, need {i}")
        return got[i - 1]

    def letters(self, n: int) -> tuple:
        got = self.prefix(n)
        if len(got) < n:
            if self._trunc == _PRECISION:
                raise PrecisionExhaustedError(
                    f"only {len(got)} letters are exactly determined, need {n}"
                )
            raise InsufficientLettersError(f"only {len(got)} letters available, need {n}")
        return got

    @property
    def is_complete(self) -> bool:
        """True when the letters end and the value is exactly the last convergent."""
        return (
            self._period is None
            and self._gen is None
            and self._trunc is None
        )

    def known_length(self) -> int:
        """Letters currently available without extending a generator."""
        return len(self._letters)

    # -- derived forms

    def reciprocal(self) -> "ContinuedFraction":
        """The continued fraction of 1/value."""
        zero = Poly.zero(self.a0.field)
        if self.a0.is_zero:
            first = self.letter(1)
            if self._period is not None:
                if self._pre_len == 0:
                    rotated = Word(self._period[1:] + self._period[:1])
                    return ContinuedFraction.periodic(first, Word.empty(), rotated)
                return ContinuedFraction.periodic(
                    first, Word(self._letters[1 : self._pre_len]), Word(self._period)
                )
            if self._gen is None and self._period is None:
                return ContinuedFraction(
                    first, self._letters[1:], self._trunc, None, None, None
                )
            return ContinuedFraction.from_generator(first, _shifted_letters(self, 2))
        if self.a0.degree < 1:
            raise ValueError("reciprocal needs a0 of degree >= 1 or a0 = 0")
        if self._period is not None:
            return ContinuedFraction.periodic(
                zero, Word((self.a0,) + tuple(self._letters[: self._pre_len])), Word(self._period)
            )
        if self._gen is None:
            return ContinuedFraction(
                zero, (self.a0,) + tuple(self._letters), self._trunc, None, None, None
            )
        return ContinuedFraction.from_generator(zero, _prepended_letters(self.a0, self))

    def __str__(self):
        shown = [str(a) for a in self._letters[:12]]
        if self._period is not None:
            pre = ", ".join(str(a) for a in self._letters[: self._pre_len])
            per = ", ".join(str(a) for a in self._period)
            return f"[{self.a0}; {pre} | {per}]"
        tail = ", ..." if (self._gen is not None or len(self._letters) > 12) else ""
        return f"[{self.a0}; " + ", ".join(shown) + tail + "]"

    __repr__ = __str__


def _shifted_letters(cf: ContinuedFraction, start: int):
    i = start
    while True:
        try:
            yield cf.letter(i)
        except InsufficientLettersError:
            return
        i += 1


def _prepended_letters(first: Poly, cf: ContinuedFraction):
    yield first
    yield from _shifted_letters(cf, 1)


# ---------------------------------------------------------------------------
# convergents


@dataclass(frozen=True)
class ConvergentPair:
    index: int
    p: Poly
    q: Poly


def convergents(cf: ContinuedFraction, n: int) -> list:
    """Convergent pairs (p_i, q_i) for 0 <= i <= n via the three-term recurrence."""
    field = cf.a0.field
    letters = cf.letters(n)
    p_prev, p_cur = Poly.one(field), cf.a0
    q_prev, q_cur = Poly.zero(field), Poly.one(field)
    out = [ConvergentPair(0, p_cur, q_cur)]
    for i, a in enumerate(letters, start=1):
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        out.append(ConvergentPair(i, p_cur, q_cur))
    return out


def convergent_tail(cf: ContinuedFraction, n: int) -> tuple:
    """((p_{n-1}, q_{n-1}), (p_n, q_n)) without materializing the whole list."""
    field = cf.a0.field
    letters = cf.letters(n)
    p_prev, p_cur = Poly.one(field), cf.a0
    q_prev, q_cur = Poly.zero(field), Poly.one(field)
    for a in letters:
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    return (p_prev, q_prev), (p_cur, q_cur)


def denominator_degrees(cf: ContinuedFraction, n: int) -> list:
    """deg q_i for 0 <= i <= n, using |q_i| = |a_1|...|a_i|."""
    out = [0]
    for a in cf.letters(n):
        out.append(out[-1] + a.degree)
    return out


# ---------------------------------------------------------------------------
# expansion and evaluation


def expand(x: LaurentSeries, max_letters: int) -> ContinuedFraction:
    """Exact partial quotients of a series, as far as its precision supports.

    Stops with a precision marker once the remainder is zero to precision or
    the next quotient is no longer exactly determined; asking the returned
    fraction for letters beyond the marker raises PrecisionExhaustedError
    rather than silently truncating.
    """
    a0 = x.polynomial_part()
    y = x - LaurentSeries.from_poly(a0, x.prec)
    letters = []
    trunc = _BUDGET
    while len(letters) < max_letters:
        if y.is_zero_to_prec:
            trunc = _PRECISION
            break
        z = y.inverse()
        if z.prec < 1:
            trunc = _PRECISION
            break
        a = z.polynomial_part()
        letters.append(a)
        y = z - LaurentSeries.from_poly(a, z.prec)
    return ContinuedFraction.from_word(a0, Word(letters), trunc=trunc)


def eval_cf(cf: ContinuedFraction, n_letters, prec: int) -> LaurentSeries:
    """Series of the convergent p_n/q_n to prec; n_letters=None tracks the
    value itself, unrolling letters until the convergent is provably exact
    to the requested precision."""
    if n_letters is None:
        return cf_series(cf, prec)
    (_, _), (p, q) = convergent_tail(cf, n_letters)
    return series_from_rational(p, q, prec)


def cf_series(cf: ContinuedFraction, prec: int) -> LaurentSeries:
    """The exact series of the continued fraction value, valid below prec."""
    deg_sum = 0
    n = 0
    while 2 * deg_sum + 1 < prec:
        got = cf.prefix(n + 1)
        if len(got) <= n:
            if cf.is_complete:
                break
            if cf._trunc == _PRECISION:
                raise PrecisionExhaustedError(
                    "continued fraction letters are exhausted before the requested precision"
                )
            raise InsufficientLettersError(
                "letter source ended before the requested precision"
            )
        deg_sum += got[n].degree
        n += 1
    return eval_cf(cf, n, prec)


# ---------------------------------------------------------------------------
# exact distance via the first disagreeing partial quotient


def first_disagreement(x: ContinuedFraction, y: ContinuedFraction, max_scan: int) -> tuple:
    """(index k+1 of the first disagreement, sum of letter degrees before it).

    Raises IdenticalPrefixError when no disagreement is locatable within
    max_scan letters or within the available letters of either fraction.
    """
    deg_sum = 0
    step = 512
    pos = 0
    while pos < max_scan:
        hi = min(pos + step, max_scan)
        xa = x.prefix(hi)
        ya = y.prefix(hi)
        n = min(len(xa), len(ya))
        for i in range(pos, n):
            if xa[i] is ya[i] or xa[i] == ya[i]:
                deg_sum += xa[i].degree
            else:
                return i + 1, deg_sum
        if n < hi:
            raise IdenticalPrefixError(
                f"no disagreement within the {n} available letters"
            )
        pos = hi
    raise IdenticalPrefixError(f"no disagreement within the scan budget {max_scan}")


def cf_distance(x: ContinuedFraction, y: ContinuedFraction, max_scan: int = 200_000) -> AbsExponent:
    """Exponent of |x - y| from the first disagreeing partial quotients.

    Uses |x - y| = |a - b| / (|a b| |q_k|^2) where a, b are the first
    disagreeing quotients and q_k the shared convergent denominator; exact,
    with no series subtraction.
    """
    if not (x.a0.is_zero and y.a0.is_zero):
        raise ValueError("distance requires both fractions to start with a0 = 0")
    idx, deg_sum = first_disagreement(x, y, max_scan)
    a = x.letter(idx)
    b = y.letter(idx)
    diff = a - b
    if diff.is_zero:
        raise SharedValueError("disagreeing quotients compare equal")
    return AbsExponent(diff.degree - a.degree - b.degree - 2 * deg_sum)
