"""Exact arithmetic in F_q and F_q[T].

A Field instance is a concrete model of F_q = F_{p^s}: elements are
coordinate vectors over F_p modulo a fixed irreducible modulus, encoded as
integers in base p.  The modulus and the multiplicative generator are the
lexicographically smallest valid choices, so every run of the library works
in the same model and all downstream output is reproducible.

Polynomials over F_q (class Poly) and polynomials in X with Poly
coefficients (class XPoly) both live here, together with the subresultant
resultant, Frobenius powers, and the exact absolute-value exponent type.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, total_ordering

from .errors import NotAPowerOfPError, NotPrimeError, TooLargeError

MAX_FIELD_SIZE = 1 << 16


# ---------------------------------------------------------------------------
# absolute-value exponents


@total_ordering
class AbsExponent:
    """Exponent e of a non-archimedean absolute value q^e.

    The exponent is an exact rational (half-integers appear for conjugate
    gaps in odd characteristic).  `exp is None` encodes |x| = 0, the
    absorbing minimum; it arises only for the zero element.
    """

    __slots__ = ("exp",)

    def __init__(self, exp):
        if exp is not None and not isinstance(exp, Fraction):
            exp = Fraction(exp)
        self.exp = exp

    @classmethod
    def neg_inf(cls) -> "AbsExponent":
        return cls(None)

    @property
    def is_neg_inf(self) -> bool:
        return self.exp is None

    def as_int(self) -> int:
        if self.exp is None or self.exp.denominator != 1:
            raise ValueError(f"not an integer exponent: {self}")
        return int(self.exp)

    def __add__(self, other):
        other = _as_absexp(other)
        if self.exp is None or other.exp is None:
            return AbsExponent(None)
        return AbsExponent(self.exp + other.exp)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_absexp(other)
        if other.exp is None:
            raise ZeroDivisionError("cannot divide by an absolute value of 0")
        if self.exp is None:
            return AbsExponent(None)
        return AbsExponent(self.exp - other.exp)

    def __neg__(self):
        if self.exp is None:
            raise ValueError("cannot negate the -inf exponent")
        return AbsExponent(-self.exp)

    def scaled(self, factor) -> "AbsExponent":
        if self.exp is None:
            return AbsExponent(None)
        return AbsExponent(self.exp * factor)

    def __eq__(self, other):
        other = _as_absexp(other)
        return self.exp == other.exp

    def __lt__(self, other):
        other = _as_absexp(other)
        if self.exp is None:
            return other.exp is not None
        if other.exp is None:
            return False
        return self.exp < other.exp

    def __hash__(self):
        return hash(self.exp)

    def __str__(self):
        return "-inf" if self.exp is None else str(self.exp)

    def __repr__(self):
        return f"AbsExponent({self})"


def _as_absexp(v) -> AbsExponent:
    if isinstance(v, AbsExponent):
        return v
    if isinstance(v, (int, Fraction)):
        return AbsExponent(v)
    return NotImplemented


# ---------------------------------------------------------------------------
# F_p helpers used during field construction (coords are int lists, low first)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _fp_mod(num: list, den: list, p: int) -> list:
    """Remainder of num by monic den over F_p, trailing zeros stripped."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    while num and num[-1] % p == 0:
        num.pop()
    return [c % p for c in num]


def _fp_is_irreducible(modulus: list, p: int) -> bool:
    s = len(modulus) - 1
    for d in range(1, s // 2 + 1):
        for code in range(p**d):
            div = _digits(code, p, d) + [1]
            if not _fp_mod(modulus, div, p):
                return False
    return True


def _digits(code: int, p: int, width: int) -> list:
    out = []
    for _ in range(width):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _prime_factors(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# the field


class FieldElement:
    """An element of F_q, encoded as an integer in base p over the modulus."""

    __slots__ = ("field", "code")

    def __init__(self, field: "Field", code: int):
        self.field = field
        self.code = code

    @property
    def coords(self) -> tuple:
        return tuple(_digits(self.code, self.field.p, self.field.s))

    @property
    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __add__(self, other):
        f = self.field
        f._check(other)
        return f._elems[f._add_codes(self.code, other.code)]

    def __sub__(self, other):
        f = self.field
        f._check(other)
        return f._elems[f._add_codes(self.code, f._neg_codes(other.code))]

    def __neg__(self):
        f = self.field
        return f._elems[f._neg_codes(self.code)]

    def __mul__(self, other):
        f = self.field
        f._check(other)
        a, b = self.code, other.code
        if a == 0 or b == 0:
            return f._elems[0]
        return f._elems[f._pow_codes[(f._log[a] + f._log[b]) % f._qm1]]

    def __truediv__(self, other):
        f = self.field
        f._check(other)
        if other.code == 0:
            raise ZeroDivisionError("division by zero in F_q")
        if self.code == 0:
            return f._elems[0]
        return f._elems[f._pow_codes[(f._log[self.code] - f._log[other.code]) % f._qm1]]

    def inverse(self) -> "FieldElement":
        return self.field.one / self

    def __pow__(self, n: int) -> "FieldElement":
        f = self.field
        if self.code == 0:
            if n < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return f._elems[0] if n else f._elems[1]
        if f._qm1 == 0:
            return self
        return f._elems[f._pow_codes[(f._log[self.code] * n) % f._qm1]]

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.code == other.code
            and self.field is other.field
        )

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __str__(self):
        if self.code == 0:
            return "0"
        i = self.field._log[self.code]
        return "1" if i == 0 else f"g^{i}"

    def __repr__(self):
        return f"{self} in F_{self.field.q}"


class Field:
    """A deterministic model of F_q, q = p^s, with cached generator powers."""

    def __init__(self, p: int, s: int):
        if not _is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if s < 1:
            raise ValueError("s must be >= 1")
        q = p**s
        if q > MAX_FIELD_SIZE:
            raise TooLargeError(f"p^s = {q} exceeds the bound {MAX_FIELD_SIZE}")
        self.p = p
        self.s = s
        self.q = q
        self._qm1 = q - 1
        self.modulus = self._find_modulus()
        self._elems = [FieldElement(self, c) for c in range(q)]
        gen_code = self._find_generator()
        self._build_tables(gen_code)
        self.generator = self._elems[gen_code]

    # -- construction helpers (raw coordinate arithmetic, no tables yet)

    def _find_modulus(self) -> tuple:
        for code in range(self.q):
            cand = _digits(code, self.p, self.s) + [1]
            if _fp_is_irreducible(cand, self.p):
                return tuple(cand)
        raise AssertionError("no irreducible modulus found")

    def _raw_mul(self, a: int, b: int) -> int:
        p, s = self.p, self.s
        da = _digits(a, p, s)
        db = _digits(b, p, s)
        prod = [0] * (2 * s - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] += ca * cb
        rem = _fp_mod(prod, list(self.modulus), p)
        rem += [0] * (s - len(rem))
        return sum(c * p**i for i, c in enumerate(rem))

    def _raw_pow(self, a: int, n: int) -> int:
        result = 1
        while n:
            if n & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            n >>= 1
        return result

    def _find_generator(self) -> int:
        factors = _prime_factors(self._qm1)
        for code in range(1, self.q):
            if all(self._raw_pow(code, self._qm1 // f) != 1 for f in factors):
                return code
        raise AssertionError("no multiplicative generator found")

    def _build_tables(self, gen_code: int) -> None:
        pow_codes = [1]
        for _ in range(self._qm1 - 1):
            pow_codes.append(self._raw_mul(pow_codes[-1], gen_code))
        if self._qm1 > 0 and self._raw_mul(pow_codes[-1], gen_code) != 1:
            raise AssertionError("generator order is not q-1")
        self._pow_codes = pow_codes
        self._log = {c: i for i, c in enumerate(pow_codes)}
        if len(self._log) != max(1, self._qm1):
            raise AssertionError("generator order is not q-1")

    # -- code-level arithmetic

    def _add_codes(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * mult
            mult *= p
        return out

    def _neg_codes(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        while a:
            a, ra = divmod(a, p)
            out += (-ra % p) * mult
            mult *= p
        return out

    def _check(self, other) -> None:
        if not isinstance(other, FieldElement) or other.field is not self:
            if isinstance(other, FieldElement) and other.field == self:
                return
            raise TypeError(f"operand is not an element of F_{self.q}")

    # -- public element access

    @property
    def zero(self) -> FieldElement:
        return self._elems[0]

    @property
    def one(self) -> FieldElement:
        return self._elems[1]

    @property
    def T(self) -> "Poly":
        return Poly(self, (self._elems[0], self._elems[1]))

    def from_code(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for F_{self.q}")
        return self._elems[code]

    def from_coords(self, coords) -> FieldElement:
        coords = list(coords)
        if len(coords) != self.s:
            raise ValueError(f"need {self.s} coordinates")
        return self._elems[sum((c % self.p) * self.p**i for i, c in enumerate(coords))]

    def generator_power(self, i: int) -> FieldElement:
        if self._qm1 == 0:
            return self._elems[1]
        return self._elems[self._pow_codes[i % self._qm1]]

    def parse(self, text: str) -> FieldElement:
        """Parse "0", "1", "g" or "g^i" relative to the stored generator."""
        text = text.strip()
        if text == "0":
            return self.zero
        if text == "1":
            return self.one
        if text == "g":
            return self.generator
        if text.startswith("g^"):
            return self.generator_power(int(text[2:]))
        raise ValueError(f"cannot parse field element {text!r}")

    def elements(self):
        return iter(self._elems)

    def poly(self, coeffs) -> "Poly":
        """Build a Poly from a list of elements, codes, or element strings."""
        out = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                self._check(c)
                out.append(c)
            elif isinstance(c, int):
                out.append(self._elems[c % self.q] if 0 <= c < self.q else self.from_code(c))
            elif isinstance(c, str):
                out.append(self.parse(c))
            else:
                raise TypeError(f"bad coefficient {c!r}")
        return Poly(self, tuple(out))

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.s == other.s
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, s={self.s})"


@lru_cache(maxsize=None)
def field_make(p: int, s: int) -> Field:
    """The deterministic model of F_{p^s}; cached so equal calls share state."""
    return Field(p, s)


# ---------------------------------------------------------------------------
# polynomials over F_q


class Poly:
    """Element of F_q[T]: coefficients low degree first, no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple):
        n = len(coeffs)
        while n and coeffs[n - 1].code == 0:
            n -= 1
        self.field = field
        self.coeffs = tuple(coeffs[:n])

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (field.one,))

    @classmethod
    def const(cls, c: FieldElement) -> "Poly":
        return cls(c.field, (c,))

    @property
    def degree(self) -> int:
        """T-degree; -1 stands in for deg(0) (|0| handled as -inf upstream)."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def abs_exponent(self) -> AbsExponent:
        """Exponent of |P| = q^(deg P), -inf for the zero polynomial."""
        return AbsExponent(None) if self.is_zero else AbsExponent(len(self.coeffs) - 1)

    def __add__(self, other):
        self._check(other)
        return Poly(self.field, _vec_add(self.field, self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return Poly(self.field, _vec_sub(self.field, self.coeffs, other.coeffs))

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scaled(other)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.field)
        return Poly(self.field, _mul_coeffs(self.field, self.coeffs, other.coeffs))

    def scaled(self, c: FieldElement) -> "Poly":
        if c.code == 0:
            return Poly.zero(self.field)
        if c.code == 1:
            return self
        return Poly(self.field, tuple(c * x for x in self.coeffs))

    def shifted(self, k: int) -> "Poly":
        """Multiply by T^k."""
        if self.is_zero or k == 0:
            return self
        zero = self.field.zero
        return Poly(self.field, (zero,) * k + self.coeffs)

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(self.field), self
        field = self.field
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = other.leading.inverse()
        quot = [field.zero] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c.code == 0:
                continue
            f = c * inv_lead
            quot[i - dd] = f
            for j, dc in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - f * dc
        return Poly(field, tuple(quot)), Poly(field, tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scaled(self.leading.inverse())

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, Poly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field),) + tuple(c.code for c in self.coeffs))

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"Poly{self}"

    def _check(self, other):
        if not isinstance(other, Poly) or other.field is not self.field:
            raise TypeError("operands live in different polynomial rings")


def _vec_add(field, a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    n = len(b)
    return tuple(x + y for x, y in zip(a, b)) + a[n:]


def _vec_sub(field, a: tuple, b: tuple) -> tuple:
    if len(a) >= len(b):
        return tuple(x - y for x, y in zip(a, b[: len(a)])) + a[len(b):]
    head = tuple(x - y for x, y in zip(a, b))
    return head + tuple(-y for y in b[len(a):])


_KARATSUBA_CUTOFF = 48


def _mul_coeffs(field, a: tuple, b: tuple) -> tuple:
    """Coefficient convolution; Karatsuba above the cutoff."""
    if min(len(a), len(b)) <= _KARATSUBA_CUTOFF:
        return _mul_school(field, a, b)
    return _mul_karatsuba(field, a, b)


def _mul_school(field, a: tuple, b: tuple) -> tuple:
    if len(a) > len(b):
        a, b = b, a
    zero = field.zero
    acc = [zero] * (len(a) + len(b) - 1)
    elems = field._elems
    pow_codes = field._pow_codes
    log = field._log
    qm1 = field._qm1
    xor_add = field.p == 2
    for i, c in enumerate(a):
        if c.code == 0:
            continue
        lc = log[c.code]
        if xor_add:
            for j, x in enumerate(b):
                if x.code:
                    k = i + j
                    acc[k] = elems[acc[k].code ^ pow_codes[(lc + log[x.code]) % qm1]]
        else:
            for j, x in enumerate(b):
                if x.code:
                    k = i + j
                    acc[k] = acc[k] + elems[pow_codes[(lc + log[x.code]) % qm1]]
    return tuple(acc)


def _mul_karatsuba(field, a: tuple, b: tuple) -> tuple:
    n = len(a)
    m = len(b)
    h = min(n, m) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _mul_coeffs(field, a0, b0) if a0 and b0 else ()
    z2 = _mul_coeffs(field, a1, b1) if a1 and b1 else ()
    sa = _vec_add(field, a0, a1)
    sb = _vec_add(field, b0, b1)
    z1 = _mul_coeffs(field, sa, sb) if sa and sb else ()
    z1 = _vec_sub(field, _vec_sub(field, z1, z0), z2)
    zero = field.zero
    out = [zero] * (n + m - 1)
    for i, c in enumerate(z0):
        out[i] = c
    for i, c in enumerate(z1):
        if c.code:
            out[h + i] = out[h + i] + c
    for i, c in enumerate(z2):
        if c.code:
            out[2 * h + i] = out[2 * h + i] + c
    return tuple(out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_abs(a: Poly) -> AbsExponent:
    return a.abs_exponent()


def frobenius_power(a: Poly, r: int) -> Poly:
    """a(T)^r for r = p^e, done coefficientwise with T -> T^r."""
    p = a.field.p
    e = 0
    m = r
    while m > 1 and m % p == 0:
        m //= p
        e += 1
    if m != 1 or r < 1:
        raise NotAPowerOfPError(f"{r} is not a power of p = {p}")
    if a.is_zero or r == 1:
        return a
    zero = a.field.zero
    coeffs = [zero] * (a.degree * r + 1)
    for i, c in enumerate(a.coeffs):
        if c.code:
            coeffs[i * r] = c**r
    return Poly(a.field, tuple(coeffs))


# ---------------------------------------------------------------------------
# polynomials in X over F_q[T]


class XPoly:
    """Polynomial in X with F_q[T] coefficients, low X-degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple):
        n = len(coeffs)
        while n and coeffs[n - 1].is_zero:
            n -= 1
        self.field = field
        self.coeffs = tuple(coeffs[:n])

    @classmethod
    def zero(cls, field: Field) -> "XPoly":
        return cls(field, ())

    @classmethod
    def from_map(cls, field: Field, terms: dict) -> "XPoly":
        """Build from {X-degree: Poly}; missing degrees are zero."""
        if not terms:
            return cls.zero(field)
        top = max(terms)
        coeffs = [Poly.zero(field)] * (top + 1)
        for d, c in terms.items():
            coeffs[d] = c
        return cls(field, tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Poly:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, d: int) -> Poly:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Poly.zero(self.field)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(
            self.field,
            tuple(self.coeff(i) + other.coeff(i) for i in range(n)),
        )

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(
            self.field,
            tuple(self.coeff(i) - other.coeff(i) for i in range(n)),
        )

    def __neg__(self):
        return XPoly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            return self.scaled(other)
        if self.is_zero or other.is_zero:
            return XPoly.zero(self.field)
        acc = [Poly.zero(self.field)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    acc[i + j] = acc[i + j] + a * b
        return XPoly(self.field, tuple(acc))

    def scaled(self, c: Poly) -> "XPoly":
        if c.is_zero:
            return XPoly.zero(self.field)
        return XPoly(self.field, tuple(x * c for x in self.coeffs))

    def shifted(self, k: int) -> "XPoly":
        """Multiply by X^k."""
        if self.is_zero or k == 0:
            return self
        pad = (Poly.zero(self.field),) * k
        return XPoly(self.field, pad + self.coeffs)

    def derivative(self) -> "XPoly":
        """Formal X-derivative; integer factors act through the prime field."""
        if self.degree < 1:
            return XPoly.zero(self.field)
        p = self.field.p
        out = []
        for i in range(1, len(self.coeffs)):
            f = i % p
            if f == 0:
                out.append(Poly.zero(self.field))
            elif f == 1:
                out.append(self.coeffs[i])
            else:
                out.append(self.coeffs[i].scaled(self.field.from_coords([f] + [0] * (self.field.s - 1))))
        return XPoly(self.field, tuple(out))

    def __eq__(self, other):
        return (
            isinstance(other, XPoly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __str__(self):
        return "[" + "; ".join(str(c) for c in reversed(self.coeffs)) + "]"

    def __repr__(self):
        return f"XPoly{self}"


def _xpoly_prem(a: XPoly, b: XPoly) -> XPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced by b."""
    d = a.degree - b.degree
    lc = b.leading
    rem = a
    for i in range(d, -1, -1):
        if rem.degree == b.degree + i:
            top = rem.leading
            rem = rem.scaled(lc) - b.scaled(top).shifted(i)
        else:
            rem = rem.scaled(lc)
    return rem


def resultant(a: XPoly, b: XPoly) -> Poly:
    """Resultant with respect to X via the subresultant remainder sequence.

    Exact over F_q[T]; all interior divisions are guaranteed exact.  Equals
    the determinant of the Sylvester matrix of a and b (test oracle).
    """
    if a.is_zero or b.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    field = a.field
    if a.degree == 0 and b.degree == 0:
        return Poly.one(field)
    if a.degree == 0:
        return a.coeffs[0] ** b.degree
    if b.degree == 0:
        return b.coeffs[0] ** a.degree
    sign = 1
    if a.degree < b.degree:
        if (a.degree & 1) and (b.degree & 1):
            sign = -sign
        a, b = b, a
    g = Poly.one(field)
    h = Poly.one(field)
    while True:
        d = a.degree - b.degree
        if (a.degree & 1) and (b.degree & 1):
            sign = -sign
        rem = _xpoly_prem(a, b)
        if rem.is_zero:
            return Poly.zero(field)
        divisor = g * h**d
        a, b = b, XPoly(field, tuple(c.exact_div(divisor) for c in rem.coeffs))
        g = a.leading
        if d == 1:
            h = g
        elif d > 1:
            h = (g**d).exact_div(h ** (d - 1))
        if b.degree <= 0:
            break
    d = a.degree
    res = b.coeffs[0] ** d
    if d > 1:
        res = res.exact_div(h ** (d - 1))
    if sign < 0:
        res = -res
    return res
