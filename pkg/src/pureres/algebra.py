"""Exact coefficient domains, monomials, and sparse multivariate polynomials.

Coefficients live in one of three domains: the rationals (``QQ``, stored as
``fractions.Fraction`` in lowest terms), the integers (``ZZ``), or a prime
field (``GF(p)``, residues stored in ``0..p-1``).  Polynomials are sparse
maps from exponent vectors to nonzero coefficients.

Monomial order.  Exponent vectors are compared by (total degree, reversed
exponent tuple), ascending; this graded reverse-lexicographic order makes
``x1 < x2 < ... < xn`` in degree one and is used for every graded basis and
for polynomial serialization.

String grammar (bit-exact for golden files)::

    poly   = "0" | term (("+" | "-") term)*
    term   = [sign] coeff ["*" factor ("*" factor)*]
    factor = var ["^" exponent]
    coeff  = integer | integer "/" integer
    var    = "x1" .. "xn"

Example: ``-1/2*x1*x3^2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd


class Domain:
    """A coefficient domain: exact arithmetic plus parsing and printing."""

    char: int = 0
    is_field: bool = False
    name: str = "?"

    def coerce(self, x):
        raise NotImplementedError

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def is_zero(self, a) -> bool:
        return not a

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        raise NotImplementedError

    def to_str(self, a) -> str:
        return str(a)

    def from_str(self, s: str):
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.name

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.char == getattr(other, "char", None)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.char))


class RationalField(Domain):
    char = 0
    is_field = True
    name = "QQ"

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def from_str(self, s: str):
        return Fraction(s)

    def __reduce__(self):
        return (_get_qq, ())


class IntegerRing(Domain):
    char = 0
    is_field = False
    name = "ZZ"

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        if isinstance(x, str):
            return int(s := x) if s.lstrip("+-").isdigit() else int(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into ZZ")

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ValueError(f"{a} is not invertible in ZZ")

    def from_str(self, s: str):
        return self.coerce(s)

    def __reduce__(self):
        return (_get_zz, ())


class PrimeField(Domain):
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.char = p
        self.name = f"GF({p})"

    def coerce(self, x):
        p = self.char
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
            return (x.numerator * pow(den, p - 2, p)) % p
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def neg(self, a):
        return (-a) % self.char

    def inv(self, a):
        if a % self.char == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.char - 2, self.char)

    def from_str(self, s: str):
        return self.coerce(Fraction(s))

    def __reduce__(self):
        return (GF, (self.char,))


QQ = RationalField()
ZZ = IntegerRing()


def _get_qq():
    return QQ


def _get_zz():
    return ZZ


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    for q in range(2, int(p**0.5) + 1):
        if p % q == 0:
            return False
    return True


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def domain_for_char(char: int) -> Domain:
    return QQ if char == 0 else GF(char)


# ---------------------------------------------------------------------------
# monomials: plain exponent tuples

Monomial = tuple[int, ...]


def mono_degree(exps: Monomial) -> int:
    return sum(exps)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_key(exps: Monomial):
    """Sort key for the graded reverse-lexicographic order."""
    return (sum(exps), tuple(reversed(exps)))


def monomials_of_degree(n: int, d: int) -> tuple[Monomial, ...]:
    """All exponent vectors of total degree d in n variables, revlex order."""
    return _monomials_of_degree(int(n), int(d))


@lru_cache(maxsize=None)
def _monomials_of_degree(n: int, d: int) -> tuple[Monomial, ...]:
    if d < 0:
        return ()
    if n == 0:
        return ((),) if d == 0 else ()
    monos = []
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        monos.append(tuple(exps))
    return tuple(sorted(monos, key=mono_key))


def default_varnames(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def letter_varnames(n: int) -> tuple[str, ...]:
    if n > 26:
        raise ValueError("letter display supports at most 26 variables")
    return tuple(chr(ord("a") + i) for i in range(n))


# ---------------------------------------------------------------------------
# polynomials

_TERM_SPLIT = re.compile(r"(?=[+-])")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


class Polynomial:
    """A sparse multivariate polynomial with exact coefficients."""

    __slots__ = ("n", "domain", "terms")

    def __init__(self, n: int, domain: Domain, terms=None):
        self.n = int(n)
        self.domain = domain
        clean: dict[Monomial, object] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for rank {self.n}")
            coeff = domain.coerce(coeff)
            if not domain.is_zero(coeff):
                clean[exps] = coeff
        self.terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, n: int, domain: Domain) -> "Polynomial":
        return cls(n, domain, {})

    @classmethod
    def constant(cls, c, n: int, domain: Domain) -> "Polynomial":
        return cls(n, domain, {(0,) * n: c})

    @classmethod
    def variable(cls, i: int, n: int, domain: Domain) -> "Polynomial":
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        exps = tuple(1 if j == i - 1 else 0 for j in range(n))
        return cls(n, domain, {exps: 1})

    @classmethod
    def monomial(cls, exps, c, n: int, domain: Domain) -> "Polynomial":
        return cls(n, domain, {tuple(exps): c})

    # -- ring operations ----------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if self.n != other.n or self.domain != other.domain:
            raise ValueError(
                f"domain mismatch: rank {self.n} over {self.domain} vs "
                f"rank {other.n} over {other.domain}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        dom = self.domain
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            acc = dom.add(terms.get(exps, 0), c) if exps in terms else c
            if exps in terms and dom.is_zero(acc):
                del terms[exps]
            else:
                terms[exps] = acc
        return Polynomial(self.n, dom, terms)

    def __neg__(self) -> "Polynomial":
        dom = self.domain
        return Polynomial(self.n, dom, {e: dom.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        dom = self.domain
        terms: dict[Monomial, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = mono_mul(e1, e2)
                prod = dom.mul(c1, c2)
                if exps in terms:
                    acc = dom.add(terms[exps], prod)
                    if dom.is_zero(acc):
                        del terms[exps]
                    else:
                        terms[exps] = acc
                elif not dom.is_zero(prod):
                    terms[exps] = prod
        return Polynomial(self.n, dom, terms)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        dom = self.domain
        c = dom.coerce(c)
        return Polynomial(self.n, dom, {e: dom.mul(c, v) for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.n == other.n
            and self.domain == other.domain
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        return max((mono_degree(e) for e in self.terms), default=-1)

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None if inhomogeneous or zero."""
        degs = {mono_degree(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def map_coefficients(self, domain: Domain, fn=None) -> "Polynomial":
        fn = fn or domain.coerce
        return Polynomial(self.n, domain, {e: fn(c) for e, c in self.terms.items()})

    # -- serialization -------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]))

    def to_str(self, varnames=None) -> str:
        """Canonical string per the module grammar."""
        if not self.terms:
            return "0"
        varnames = varnames or default_varnames(self.n)
        parts = []
        for exps, coeff in self.sorted_terms():
            cs = self.domain.to_str(coeff)
            sign = "-" if cs.startswith("-") else "+"
            mag = cs[1:] if cs.startswith("-") else cs
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(varnames[i])
                elif e > 1:
                    factors.append(f"{varnames[i]}^{e}")
            body = "*".join([mag] + factors)
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def to_m2_str(self, varnames=None) -> str:
        """Compact display: unit coefficients dropped, powers as digit suffixes."""
        if not self.terms:
            return "0"
        varnames = varnames or letter_varnames(self.n)
        parts = []
        for exps, coeff in self.sorted_terms():
            cs = self.domain.to_str(coeff)
            sign = "-" if cs.startswith("-") else "+"
            mag = cs[1:] if cs.startswith("-") else cs
            factors = "".join(
                varnames[i] + (str(e) if e > 1 else "") for i, e in enumerate(exps) if e
            )
            if factors and mag == "1":
                mag = ""
            parts.append((sign, mag + factors))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    @classmethod
    def parse(cls, s: str, n: int, domain: Domain) -> "Polynomial":
        s = s.replace(" ", "")
        if s in ("", "0"):
            return cls.zero(n, domain)
        terms: dict[Monomial, object] = {}
        for chunk in _TERM_SPLIT.split(s):
            if not chunk or chunk in "+-":
                continue
            sign = 1
            if chunk[0] == "+":
                chunk = chunk[1:]
            elif chunk[0] == "-":
                sign = -1
                chunk = chunk[1:]
            factors = chunk.split("*")
            exps = [0] * n
            if factors and _FACTOR.match(factors[0]):
                coeff = domain.one()
            else:
                coeff = domain.from_str(factors[0])
                factors = factors[1:]
            for f in factors:
                m = _FACTOR.match(f)
                if not m:
                    raise ValueError(f"bad factor {f!r} in polynomial {s!r}")
                i = int(m.group(1))
                if not 1 <= i <= n:
                    raise ValueError(f"variable x{i} out of range for rank {n}")
                exps[i - 1] += int(m.group(2) or 1)
            key = tuple(exps)
            prior = terms.get(key, domain.zero())
            terms[key] = domain.add(prior, domain.mul(domain.coerce(sign), coeff))
        return cls(n, domain, terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r})"


def content_and_denominator(coeffs) -> tuple[int, int]:
    """(gcd of numerators, lcm of denominators) over a list of Fractions."""
    num = 0
    den = 1
    for c in coeffs:
        c = Fraction(c)
        num = gcd(num, abs(c.numerator))
        den = den * c.denominator // gcd(den, c.denominator)
    return num, den
