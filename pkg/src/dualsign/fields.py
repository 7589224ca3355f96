"""Exact coefficient fields.

Four kinds of field are supported:

* ``Rationals`` -- elements are ``fractions.Fraction`` in lowest terms.
* ``PrimeField(p)`` -- p an odd prime; elements are least nonnegative
  residues (plain ints in ``range(p)``).
* ``ExtensionField(base, modulus)`` -- quotient of ``base[x]`` by a monic
  irreducible polynomial; elements are coefficient tuples of fixed length
  ``deg(modulus)``, reduced.
* ``RationalFunctionField(base)`` -- fractions of polynomials in ``t`` over
  ``base``; elements are ``(num, den)`` coefficient-tuple pairs with
  ``gcd(num, den) = 1`` and ``den`` monic.  This is the fraction field used
  by the t-adic valuation ring and is not part of the JSON field descriptor
  vocabulary.

Every element has one canonical representation, so equality is structural
and results are bit-stable across runs.  Characteristic 2 is rejected at
construction: every algorithm downstream divides by 2.

Arithmetic is implemented on raw payloads (``Fraction`` / ``int`` / tuples)
for speed; ``FieldElement`` is a thin immutable wrapper providing operators.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    EvenCharacteristic,
    InputError,
    IrreducibilityUnverified,
    ReducibleModulus,
)

# Largest base-field order for which degree-4 moduli are checked by
# exhaustive quadratic-divisor search.
_QUADRATIC_SEARCH_CAP = 400


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


class FieldElement:
    """Immutable element of a :class:`Field`; operators delegate to the field."""

    __slots__ = ("field", "payload")

    def __init__(self, field: "Field", payload) -> None:
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise InputError("elements belong to different fields")
            return other
        return self.field.elem(other)

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.p_add(self.payload, o.payload))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.p_sub(self.payload, o.payload))

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.p_mul(self.payload, o.payload))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.p_div(self.payload, o.payload))

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __neg__(self):
        return FieldElement(self.field, self.field.p_neg(self.payload))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.p_pow(self.payload, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.p_inv(self.payload))

    def is_zero(self) -> bool:
        return self.field.p_is_zero(self.payload)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.payload == other.payload
        if isinstance(other, (int, Fraction)):
            return self.payload == self.field.elem(other).payload
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.payload))

    def __str__(self):
        return self.field.p_str(self.payload)

    def __repr__(self):
        return f"<{self.field.p_str(self.payload)} in {self.field}>"

    def sort_key(self):
        return self.field.p_sort_key(self.payload)


class Field:
    """Common interface.  Subclasses implement payload-level arithmetic."""

    kind = "abstract"

    # -- payload arithmetic (implemented by subclasses) ------------------
    def p_add(self, a, b):
        raise NotImplementedError

    def p_neg(self, a):
        raise NotImplementedError

    def p_mul(self, a, b):
        raise NotImplementedError

    def p_inv(self, a):
        raise NotImplementedError

    def p_zero(self):
        raise NotImplementedError

    def p_one(self):
        raise NotImplementedError

    def p_from_int(self, n: int):
        raise NotImplementedError

    def p_is_zero(self, a) -> bool:
        raise NotImplementedError

    def p_str(self, a) -> str:
        raise NotImplementedError

    def p_parse(self, s: str):
        raise NotImplementedError

    def p_sort_key(self, a):
        raise NotImplementedError

    # -- derived payload helpers -----------------------------------------
    def p_sub(self, a, b):
        return self.p_add(a, self.p_neg(b))

    def p_div(self, a, b):
        return self.p_mul(a, self.p_inv(b))

    def p_pow(self, a, n: int):
        if n < 0:
            a, n = self.p_inv(a), -n
        result = self.p_one()
        while n:
            if n & 1:
                result = self.p_mul(result, a)
            a = self.p_mul(a, a)
            n >>= 1
        return result

    # -- element-level API -------------------------------------------------
    def zero(self) -> FieldElement:
        return FieldElement(self, self.p_zero())

    def one(self) -> FieldElement:
        return FieldElement(self, self.p_one())

    def elem(self, x) -> FieldElement:
        """Coerce an int, Fraction, canonical string or FieldElement."""
        if isinstance(x, FieldElement):
            if x.field == self:
                return x
            raise InputError(f"cannot coerce element of {x.field} into {self}")
        if isinstance(x, bool):
            raise InputError("booleans are not field elements")
        if isinstance(x, int):
            return FieldElement(self, self.p_from_int(x))
        if isinstance(x, Fraction):
            num = self.p_from_int(x.numerator)
            den = self.p_from_int(x.denominator)
            return FieldElement(self, self.p_div(num, den))
        if isinstance(x, str):
            return FieldElement(self, self.p_parse(x))
        raise InputError(f"cannot coerce {x!r} into {self}")

    def characteristic(self) -> int:
        raise NotImplementedError

    def order(self) -> int | None:
        """Number of elements, or None when infinite."""
        return None

    def iter_elements(self) -> Iterator[FieldElement]:
        raise InputError(f"{self} is not finite")

    def random_element(self, rng) -> FieldElement:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        raise NotImplementedError


class Rationals(Field):
    kind = "rationals"

    def p_add(self, a, b):
        return a + b

    def p_neg(self, a):
        return -a

    def p_mul(self, a, b):
        return a * b

    def p_inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def p_zero(self):
        return Fraction(0)

    def p_one(self):
        return Fraction(1)

    def p_from_int(self, n):
        return Fraction(n)

    def p_is_zero(self, a):
        return a == 0

    def p_str(self, a):
        return str(a)

    def p_parse(self, s):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"bad rational {s!r}: {e}") from None

    def p_sort_key(self, a):
        return (a.numerator, a.denominator)

    def characteristic(self):
        return 0

    def random_element(self, rng):
        return FieldElement(self, Fraction(rng.randint(-9, 9), rng.randint(1, 9)))

    def descriptor(self):
        return {"kind": "rationals"}

    def _key(self):
        return ("rationals",)

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int) -> None:
        if p == 2:
            raise EvenCharacteristic("characteristic 2 is rejected")
        if not _is_prime(p):
            raise InputError(f"{p} is not prime")
        self.p = p

    def p_add(self, a, b):
        return (a + b) % self.p

    def p_neg(self, a):
        return (-a) % self.p

    def p_mul(self, a, b):
        return (a * b) % self.p

    def p_inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def p_zero(self):
        return 0

    def p_one(self):
        return 1

    def p_from_int(self, n):
        return n % self.p

    def p_is_zero(self, a):
        return a == 0

    def p_str(self, a):
        return str(a)

    def p_parse(self, s):
        try:
            f = Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"bad residue {s!r}: {e}") from None
        if f.denominator % self.p == 0:
            raise InputError(f"{s!r} has no residue mod {self.p}")
        return (f.numerator * pow(f.denominator, self.p - 2, self.p)) % self.p

    def p_sort_key(self, a):
        return a

    def characteristic(self):
        return self.p

    def order(self):
        return self.p

    def iter_elements(self):
        for a in range(self.p):
            yield FieldElement(self, a)

    def random_element(self, rng):
        return FieldElement(self, rng.randrange(self.p))

    def descriptor(self):
        return {"kind": "prime", "p": self.p}

    def _key(self):
        return ("prime", self.p)

    def __repr__(self):
        return f"GF({self.p})"


# ---------------------------------------------------------------------------
# Polynomial helpers over payload tuples.  A polynomial is a tuple of
# payloads, ascending degree, with no trailing zeros (() is the zero poly).
# ---------------------------------------------------------------------------


def poly_trim(field: Field, coeffs: Sequence) -> tuple:
    coeffs = list(coeffs)
    while coeffs and field.p_is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def poly_deg(coeffs: tuple) -> int:
    return len(coeffs) - 1  # -1 for the zero polynomial


def poly_add(field: Field, a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = field.p_add(out[i], c)
    return poly_trim(field, out)


def poly_neg(field: Field, a: tuple) -> tuple:
    return tuple(field.p_neg(c) for c in a)


def poly_sub(field: Field, a: tuple, b: tuple) -> tuple:
    return poly_add(field, a, poly_neg(field, b))


def poly_mul(field: Field, a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [field.p_zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field.p_is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = field.p_add(out[i + j], field.p_mul(x, y))
    return poly_trim(field, out)


def poly_scale(field: Field, a: tuple, c) -> tuple:
    return poly_trim(field, tuple(field.p_mul(x, c) for x in a))


def poly_divmod(field: Field, a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [field.p_zero()] * max(0, len(a) - len(b) + 1)
    inv_lead = field.p_inv(b[-1])
    while len(a) >= len(b) and a:
        if field.p_is_zero(a[-1]):
            a.pop()
            continue
        shift = len(a) - len(b)
        c = field.p_mul(a[-1], inv_lead)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = field.p_sub(a[shift + i], field.p_mul(c, bc))
        a.pop()
    return poly_trim(field, q), poly_trim(field, a)


def poly_mod(field: Field, a: tuple, b: tuple) -> tuple:
    return poly_divmod(field, a, b)[1]


def poly_gcd(field: Field, a: tuple, b: tuple) -> tuple:
    """Monic gcd."""
    while b:
        a, b = b, poly_mod(field, a, b)
    if not a:
        return ()
    return poly_scale(field, a, field.p_inv(a[-1]))


def poly_extended_gcd(field: Field, a: tuple, b: tuple) -> tuple[tuple, tuple, tuple]:
    """Return (g, u, v) with u*a + v*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = (field.p_one(),), ()
    t0, t1 = (), (field.p_one(),)
    while r1:
        q, r = poly_divmod(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(field, s0, poly_mul(field, q, s1))
        t0, t1 = t1, poly_sub(field, t0, poly_mul(field, q, t1))
    if not r0:
        return (), s0, t0
    c = field.p_inv(r0[-1])
    return poly_scale(field, r0, c), poly_scale(field, s0, c), poly_scale(field, t0, c)


def poly_eval(field: Field, a: tuple, x):
    acc = field.p_zero()
    for c in reversed(a):
        acc = field.p_add(field.p_mul(acc, x), c)
    return acc


def poly_is_monic(field: Field, a: tuple) -> bool:
    return bool(a) and a[-1] == field.p_one()


def _has_root(field: Field, a: tuple) -> bool:
    for e in field.iter_elements():
        if field.p_is_zero(poly_eval(field, a, e.payload)):
            return True
    return False


def poly_roots(field: Field, a: tuple) -> list:
    """All roots in the field, each listed once, deterministic order.

    Complete for finite fields (exhaustive) and for the rationals (rational
    root test on the cleared polynomial); those are the only kinds accepted.
    """
    a = poly_trim(field, a)
    if poly_deg(a) < 1:
        return []
    if field.order() is not None:
        return [e.payload for e in field.iter_elements()
                if field.p_is_zero(poly_eval(field, a, e.payload))]
    if isinstance(field, Rationals):
        return _rational_roots(a)
    raise InputError(f"root finding not supported over {field}")


def _rational_roots(a: tuple) -> list:
    from math import gcd

    lcm = 1
    for c in a:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in a]
    while ints and ints[0] == 0:
        ints = ints[1:]  # factor out x; 0 is a root of the original
    zero_root = len(ints) < len(a)
    if not ints:
        return [Fraction(0)] if zero_root else []

    def divisors(n: int) -> list[int]:
        n = abs(n)
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                out.append(n // d)
            d += 1
        return sorted(set(out))

    roots = set()
    if zero_root:
        roots.add(Fraction(0))
    for p in divisors(ints[0]):
        for q in divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * cand**i for i, c in enumerate(ints)) == 0:
                    roots.add(cand)
    return sorted(roots)


def poly_is_irreducible(field: Field, coeffs: tuple, assume_irreducible: bool = False) -> bool:
    """Decide irreducibility of a monic polynomial over ``field``.

    Degree <= 3: complete via root search (finite fields exhaustively, the
    rationals by the rational root test).  Degree 4 over a finite field of
    order <= 400: additionally search monic quadratic divisors.  Anything
    beyond needs ``assume_irreducible=True``; raising instead of guessing
    keeps the answer exact.
    """
    deg = poly_deg(coeffs)
    if deg < 1:
        raise InputError("modulus must have degree >= 1")
    if deg == 1:
        return True
    if assume_irreducible:
        return True
    order = field.order()
    if deg in (2, 3):
        if order is not None:
            return not _has_root(field, coeffs)
        if isinstance(field, Rationals):
            return not _rational_roots(coeffs)
        raise IrreducibilityUnverified(
            f"cannot verify irreducibility over {field}; pass an irreducibility certificate")
    if deg == 4 and order is not None and order <= _QUADRATIC_SEARCH_CAP:
        if _has_root(field, coeffs):
            return False
        elems = [e.payload for e in field.iter_elements()]
        for b in elems:
            for c in elems:
                quad = poly_trim(field, (c, b, field.p_one()))
                if not poly_mod(field, coeffs, quad):
                    return False
        return True
    raise IrreducibilityUnverified(
        f"degree-{deg} modulus over {field} needs an irreducibility certificate")


def _split_top_level(s: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
            cur.append(ch)
        elif ch == ")":
            depth -= 1
            cur.append(ch)
        elif ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


class ExtensionField(Field):
    """Simple extension ``base[x] / (modulus)``.

    Elements are coefficient tuples of fixed length ``deg(modulus)``.
    Canonical strings are pipe-joined base strings, components wrapped in
    parentheses when the base is itself composite, e.g. ``"2|1"`` for
    ``2 + x`` over a prime field.
    """

    kind = "extension"

    def __init__(self, base: Field, modulus: Sequence, *, assume_irreducible: bool = False) -> None:
        if base.characteristic() == 2:  # unreachable today; PrimeField rejects 2
            raise EvenCharacteristic("characteristic 2 is rejected")
        self.base = base
        mod = poly_trim(base, tuple(base.elem(c).payload for c in modulus))
        if poly_deg(mod) < 1:
            raise InputError("modulus must have degree >= 1")
        if not poly_is_monic(base, mod):
            raise InputError("modulus must be monic")
        if not poly_is_irreducible(base, mod, assume_irreducible=assume_irreducible):
            raise ReducibleModulus(f"modulus factors over {base}")
        self.modulus = mod
        self.degree = poly_deg(mod)

    def _pad(self, coeffs: tuple) -> tuple:
        return tuple(coeffs) + (self.base.p_zero(),) * (self.degree - len(coeffs))

    def p_add(self, a, b):
        return tuple(self.base.p_add(x, y) for x, y in zip(a, b))

    def p_neg(self, a):
        return tuple(self.base.p_neg(x) for x in a)

    def p_mul(self, a, b):
        prod = poly_mul(self.base, poly_trim(self.base, a), poly_trim(self.base, b))
        return self._pad(poly_mod(self.base, prod, self.modulus))

    def p_inv(self, a):
        at = poly_trim(self.base, a)
        if not at:
            raise ZeroDivisionError("inverse of zero")
        g, u, _ = poly_extended_gcd(self.base, at, self.modulus)
        if poly_deg(g) != 0:
            raise ZeroDivisionError("element not invertible (modulus not irreducible?)")
        u = poly_scale(self.base, u, self.base.p_inv(g[0]))
        return self._pad(poly_mod(self.base, u, self.modulus))

    def p_zero(self):
        return (self.base.p_zero(),) * self.degree

    def p_one(self):
        return self._pad((self.base.p_one(),))

    def p_from_int(self, n):
        return self._pad((self.base.p_from_int(n),))

    def p_is_zero(self, a):
        return all(self.base.p_is_zero(x) for x in a)

    def p_str(self, a):
        comps = []
        wrap = isinstance(self.base, (ExtensionField, RationalFunctionField))
        for x in a:
            s = self.base.p_str(x)
            comps.append(f"({s})" if wrap else s)
        return "|".join(comps)

    def p_parse(self, s):
        parts = _split_top_level(s.strip(), "|")
        if len(parts) == 1 and "|" not in s:
            # allow plain base-field / integer literals
            try:
                return self._pad((self.base.p_parse(parts[0].strip().strip("()")),))
            except InputError:
                pass
        if len(parts) != self.degree:
            raise InputError(
                f"expected {self.degree} components for element of {self}, got {len(parts)}")
        payload = []
        for part in parts:
            part = part.strip()
            if part.startswith("(") and part.endswith(")"):
                part = part[1:-1]
            payload.append(self.base.p_parse(part))
        return tuple(payload)

    def p_sort_key(self, a):
        return tuple(self.base.p_sort_key(x) for x in a)

    def characteristic(self):
        return self.base.characteristic()

    def order(self):
        base_order = self.base.order()
        return None if base_order is None else base_order**self.degree

    def iter_elements(self):
        if self.base.order() is None:
            raise InputError(f"{self} is not finite")
        base_payloads = [e.payload for e in self.base.iter_elements()]

        def rec(i):
            if i == self.degree:
                yield ()
                return
            for rest in rec(i + 1):
                for c in base_payloads:
                    yield (c,) + rest

        for tup in rec(0):
            yield FieldElement(self, tup)

    def random_element(self, rng):
        return FieldElement(
            self, tuple(self.base.random_element(rng).payload for _ in range(self.degree)))

    def embed(self, x: FieldElement) -> FieldElement:
        """Lossless lift of a base-field element."""
        if x.field != self.base:
            raise InputError("embed expects an element of the base field")
        return FieldElement(self, self._pad((x.payload,)))

    def generator(self) -> FieldElement:
        """The residue class of x."""
        return FieldElement(self, self._pad((self.base.p_zero(), self.base.p_one())))

    def descriptor(self):
        return {
            "kind": "extension",
            "base": self.base.descriptor(),
            "modulus": [self.base.p_str(c) for c in self.modulus],
        }

    def _key(self):
        return ("extension", self.base._key(), self.modulus)

    def __repr__(self):
        return f"{self.base!r}[x]/({'+'.join(self.base.p_str(c) + f'*x^{i}' for i, c in enumerate(self.modulus))})"


class RationalFunctionField(Field):
    """Field of rational functions in ``t`` over an exact base field."""

    kind = "ratfunc"

    def __init__(self, base: Field) -> None:
        if base.characteristic() == 2:
            raise EvenCharacteristic("characteristic 2 is rejected")
        self.base = base

    def _canonical(self, num: tuple, den: tuple):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (self.base.p_one(),))
        g = poly_gcd(self.base, num, den)
        if poly_deg(g) > 0:
            num, _ = poly_divmod(self.base, num, g)
            den, _ = poly_divmod(self.base, den, g)
        lead_inv = self.base.p_inv(den[-1])
        return (poly_scale(self.base, num, lead_inv), poly_scale(self.base, den, lead_inv))

    def from_polys(self, num: Sequence, den: Sequence = (1,)) -> FieldElement:
        n = poly_trim(self.base, tuple(self.base.elem(c).payload for c in num))
        d = poly_trim(self.base, tuple(self.base.elem(c).payload for c in den))
        return FieldElement(self, self._canonical(n, d))

    def t(self) -> FieldElement:
        return self.from_polys((0, 1))

    def p_add(self, a, b):
        (n1, d1), (n2, d2) = a, b
        num = poly_add(self.base, poly_mul(self.base, n1, d2), poly_mul(self.base, n2, d1))
        return self._canonical(num, poly_mul(self.base, d1, d2))

    def p_neg(self, a):
        n, d = a
        return (poly_neg(self.base, n), d)

    def p_mul(self, a, b):
        (n1, d1), (n2, d2) = a, b
        return self._canonical(poly_mul(self.base, n1, n2), poly_mul(self.base, d1, d2))

    def p_inv(self, a):
        n, d = a
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return self._canonical(d, n)

    def p_zero(self):
        return ((), (self.base.p_one(),))

    def p_one(self):
        return ((self.base.p_one(),), (self.base.p_one(),))

    def p_from_int(self, n):
        c = self.base.p_from_int(n)
        if self.base.p_is_zero(c):
            return self.p_zero()
        return ((c,), (self.base.p_one(),))

    def p_is_zero(self, a):
        return not a[0]

    def _poly_str(self, coeffs: tuple) -> str:
        if not coeffs:
            return "0"
        wrap = isinstance(self.base, (ExtensionField, RationalFunctionField))
        terms = []
        for i, c in enumerate(coeffs):
            if self.base.p_is_zero(c):
                continue
            cs = self.base.p_str(c)
            if wrap:
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append(f"{cs}*t")
            else:
                terms.append(f"{cs}*t^{i}")
        return "+".join(terms)

    def p_str(self, a):
        n, d = a
        if d == (self.base.p_one(),):
            return self._poly_str(n)
        return f"({self._poly_str(n)})/({self._poly_str(d)})"

    def p_parse(self, s):  # round-trip parsing happens via num/den JSON arrays
        raise InputError("rational function elements are supplied as num/den arrays")

    def p_sort_key(self, a):
        n, d = a
        return (
            tuple(self.base.p_sort_key(c) for c in n),
            tuple(self.base.p_sort_key(c) for c in d),
        )

    def characteristic(self):
        return self.base.characteristic()

    def random_element(self, rng):
        deg_n, deg_d = rng.randrange(3), rng.randrange(2)
        num = tuple(self.base.random_element(rng).payload for _ in range(deg_n + 1))
        den = tuple(self.base.random_element(rng).payload for _ in range(deg_d)) + (self.base.p_one(),)
        return FieldElement(self, self._canonical(poly_trim(self.base, num), den))

    def embed(self, x: FieldElement) -> FieldElement:
        if x.field != self.base:
            raise InputError("embed expects an element of the base field")
        if self.base.p_is_zero(x.payload):
            return self.zero()
        return FieldElement(self, ((x.payload,), (self.base.p_one(),)))

    def descriptor(self):
        return {"kind": "ratfunc", "base": self.base.descriptor()}

    def _key(self):
        return ("ratfunc", self.base._key())

    def __repr__(self):
        return f"{self.base!r}(t)"


def make_extension(base: Field, modulus: Sequence, *, assume_irreducible: bool = False) -> ExtensionField:
    """Simple extension of ``base`` by a monic irreducible polynomial.

    ``modulus`` is ascending-degree coefficients, leading coefficient 1.
    """
    return ExtensionField(base, modulus, assume_irreducible=assume_irreducible)


def field_from_descriptor(desc: dict) -> Field:
    """Build a field from its JSON descriptor."""
    if not isinstance(desc, dict) or "kind" not in desc:
        raise InputError("field descriptor must be an object with a 'kind'")
    kind = desc["kind"]
    if kind == "rationals":
        return QQ
    if kind == "prime":
        p = desc.get("p")
        if not isinstance(p, int):
            raise InputError("prime field descriptor needs integer 'p'")
        return PrimeField(p)
    if kind == "extension":
        base = field_from_descriptor(desc.get("base"))
        modulus = desc.get("modulus")
        if not isinstance(modulus, list) or not modulus:
            raise InputError("extension descriptor needs a nonempty 'modulus' list")
        coeffs = [base.elem(c if not isinstance(c, float) else Fraction(c)) for c in modulus]
        return ExtensionField(base, [c.payload for c in coeffs],
                              assume_irreducible=bool(desc.get("irreducible_certificate", False)))
    raise InputError(f"unknown field kind {kind!r}")
