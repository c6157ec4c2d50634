"""Exact arithmetic in prime and extension finite fields.

Field handles are created with make_field (GF(p^m) over the prime subfield)
or extend_field (GF(q^s) as a degree-s extension of an existing handle, the
layered view needed when outer-code symbols must expand into inner-code
symbols).  Elements travel as plain integers in [0, q): for a prime field the
residue itself, otherwise the little-endian base-q' digit packing of the
coefficient vector in the polynomial basis.  FieldElement wraps an integer
for operator syntax; the decoding machinery works on raw integers for speed.

Small fields (q <= 256) build multiplication/inverse tables on first use;
this is internal only and does not change any observable behaviour.
"""

from __future__ import annotations

import itertools

from .errors import FieldMismatch, InvalidParams, NotPrime, ReducibleModulus
from . import linalg

_TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# ---------------------------------------------------------------------------
# polynomials over a field handle: little-endian coefficient lists, trimmed


def poly_trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def poly_add(f, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = f.add(out[i], c)
    return poly_trim(out)


def poly_sub(f, a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = f.sub(out[i], c)
    return poly_trim(out)


def poly_scale(f, c, a):
    return poly_trim([f.mul(c, x) for x in a])


def poly_mul(f, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = f.add(out[i + j], f.mul(x, y))
    return poly_trim(out)


def poly_divmod(f, a, b):
    b = poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead_inv = f.inv(b[-1])
    quot = [0] * max(0, len(rem) - db)
    while len(poly_trim(rem)) - 1 >= db and poly_trim(rem):
        rem = poly_trim(rem)
        shift = len(rem) - 1 - db
        coef = f.mul(rem[-1], lead_inv)
        quot[shift] = coef
        for i, c in enumerate(b):
            rem[shift + i] = f.sub(rem[shift + i], f.mul(coef, c))
    return poly_trim(quot), poly_trim(rem)


def poly_eval(f, a, x):
    acc = 0
    for c in reversed(a):
        acc = f.add(f.mul(acc, x), c)
    return acc


def _poly_is_irreducible(f, poly):
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = poly_trim(list(poly))
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(f.q), repeat=d):
            divisor = list(tail) + [1]
            _, rem = poly_divmod(f, poly, divisor)
            if not rem:
                return False
    return True


# ---------------------------------------------------------------------------
# fields


class Field:
    """Handle for GF(q); elements are integers in [0, q).

    Prime fields have base None; extension fields hold a base handle, a
    degree and a monic irreducible modulus (coefficients are base-field
    integers, little endian).  Handles are immutable and safe to share.
    """

    def __init__(self, p, base, degree, modulus, _token=None):
        if _token is not _FIELD_TOKEN:
            raise InvalidParams("use make_field or extend_field")
        self.p = p
        self.base = base
        self.degree = degree
        self.modulus = tuple(modulus)
        self.q = (p if base is None else base.q) ** degree
        self._mul_table = None
        self._inv_table = None
        self._add_table = None

    # -- identity ----------------------------------------------------------

    @property
    def key(self):
        if self.base is None:
            return ("prime", self.p, self.modulus)
        return ("ext", self.base.key, self.degree, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GF({self.q})"

    # -- element helpers ----------------------------------------------------

    def validate(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise InvalidParams(f"{a!r} is not an element encoding of {self}")
        return a

    def to_digits(self, a):
        """Coefficient vector over the base field (little endian)."""
        radix = self.p if self.base is None else self.base.q
        digits = []
        for _ in range(self.degree):
            digits.append(a % radix)
            a //= radix
        return digits

    def from_digits(self, digits):
        radix = self.p if self.base is None else self.base.q
        acc = 0
        for d in reversed(digits):
            acc = acc * radix + d
        return acc

    def element(self, value):
        return FieldElement(self, self.validate(value))

    def elements(self):
        return range(self.q)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        if self.base is None:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        table = self._add_table
        if table is None:
            table = self._build_add_table()
        if table is not False:
            return table[a][b]
        return self._add_slow(a, b)

    def sub(self, a, b):
        if self.base is None:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.base is None:
            return (-a) % self.p
        if self.p == 2:
            return a
        base = self.base
        return self.from_digits([base.neg(d) for d in self.to_digits(a)])

    def mul(self, a, b):
        if self.base is None:
            return (a * b) % self.p
        table = self._mul_table
        if table is None:
            table = self._build_mul_table()
        if table is not False:
            return table[a][b]
        return self._mul_slow(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is None:
            self._build_mul_table()
        if self._inv_table is not False and self._inv_table is not None:
            return self._inv_table[a]
        return self._inv_slow(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        acc = 1
        while e:
            if e & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            e >>= 1
        return acc

    # -- slow paths and tables ----------------------------------------------

    def _add_slow(self, a, b):
        base = self.base
        da, db = self.to_digits(a), self.to_digits(b)
        return self.from_digits([base.add(x, y) for x, y in zip(da, db)])

    def _mul_slow(self, a, b):
        if a == 0 or b == 0:
            return 0
        base = self.base
        prod = poly_mul(base, self.to_digits(a), self.to_digits(b))
        _, rem = poly_divmod(base, prod, self.modulus)
        rem = list(rem) + [0] * (self.degree - len(rem))
        return self.from_digits(rem)

    def _inv_slow(self, a):
        # extended Euclid on the coefficient polynomial and the modulus
        base = self.base
        r0, r1 = list(self.modulus), poly_trim(self.to_digits(a))
        t0, t1 = [], [1]
        while r1:
            q, r = poly_divmod(base, r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, poly_sub(base, t0, poly_mul(base, q, t1))
        # r0 is the gcd, a nonzero constant since the modulus is irreducible
        scale = base.inv(r0[0])
        t0 = poly_scale(base, scale, t0)
        t0 = list(t0) + [0] * (self.degree - len(t0))
        return self.from_digits(t0)

    def _build_mul_table(self):
        if self.q > _TABLE_LIMIT:
            self._mul_table = False
            self._inv_table = False
            return False
        inv = [0] * self.q
        table = []
        for a in range(self.q):
            row = [self._mul_slow(a, b) for b in range(self.q)]
            table.append(row)
            if a:
                inv[a] = row.index(1)
        self._mul_table = table
        self._inv_table = inv
        return table

    def _build_add_table(self):
        if self.q > _TABLE_LIMIT:
            self._add_table = False
            return False
        table = [[self._add_slow(a, b) for b in range(self.q)] for a in range(self.q)]
        self._add_table = table
        return table


_FIELD_TOKEN = object()
_FIELD_CACHE: dict = {}


def _auto_modulus(base_like, p, degree):
    """Smallest monic irreducible of the given degree, by packed-integer order."""
    f = base_like
    radix = p if f is None else f.q
    coeff_field = make_field(p, 1) if f is None else f
    for packed in range(radix**degree):
        tail = []
        v = packed
        for _ in range(degree):
            tail.append(v % radix)
            v //= radix
        candidate = tail + [1]
        if _poly_is_irreducible(coeff_field, candidate):
            return tuple(candidate)
    raise InvalidParams("no irreducible modulus found")  # unreachable for valid inputs


def make_field(p: int, m: int, modulus="auto") -> Field:
    """GF(p^m) over the prime subfield GF(p).

    The modulus is a little-endian coefficient sequence over GF(p), monic of
    degree m, and must be irreducible; "auto" picks the monic irreducible
    with the smallest packed-integer encoding, so serialized field specs are
    reproducible.
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise InvalidParams("extension degree must be >= 1")
    if m == 1:
        if modulus == "auto":
            modulus = (0, 1)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != 2 or modulus[1] != 1:
            raise InvalidParams("degree-1 modulus must be monic of degree 1")
        key = ("prime", p, modulus)
        if key not in _FIELD_CACHE:
            _FIELD_CACHE[key] = Field(p, None, 1, modulus, _token=_FIELD_TOKEN)
        return _FIELD_CACHE[key]

    prime = make_field(p, 1)
    if modulus == "auto":
        modulus = _auto_modulus(None, p, m)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise InvalidParams(f"modulus must be monic of degree {m}")
    if not _poly_is_irreducible(prime, list(modulus)):
        raise ReducibleModulus(f"modulus {list(modulus)} factors over GF({p})")
    key = ("ext", prime.key, m, modulus)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, prime, m, modulus, _token=_FIELD_TOKEN)
    return _FIELD_CACHE[key]


def extend_field(base: Field, s: int, modulus="auto") -> Field:
    """GF(q^s) built as a degree-s extension of an existing handle."""
    if s < 1:
        raise InvalidParams("extension degree must be >= 1")
    if s == 1:
        return base
    if modulus == "auto":
        modulus = _auto_modulus(base, base.p, s)
    modulus = tuple(base.validate(int(c)) for c in modulus)
    if len(modulus) != s + 1 or modulus[-1] != 1:
        raise InvalidParams(f"modulus must be monic of degree {s}")
    if not _poly_is_irreducible(base, list(modulus)):
        raise ReducibleModulus(f"modulus {list(modulus)} factors over {base}")
    key = ("ext", base.key, s, modulus)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(base.p, base, s, modulus, _token=_FIELD_TOKEN)
    return _FIELD_CACHE[key]


class FieldElement:
    """An element bound to its field; arithmetic requires identical fields."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = field.validate(value)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.validate(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, v))

    def __sub__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __mul__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, v))

    def __truediv__(self, other):
        v = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.value, v))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    @property
    def coeffs(self):
        return tuple(self.field.to_digits(self.value))

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.value))

    def __repr__(self):
        return f"{self.field}:{self.value}"


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Named-op dispatch over FieldElement pairs (b ignored for inv/neg)."""
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if b is None:
        raise InvalidParams(f"operation {op!r} needs two operands")
    table = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if op not in table:
        raise InvalidParams(f"unknown operation {op!r}")
    out = table[op](b)
    if out is NotImplemented:
        raise FieldMismatch("operands from different fields")
    return out


class TowerView:
    """Expansion of GF(q^s) elements into length-s vectors over GF(q).

    The default basis is the polynomial basis 1, x, ..., x^(s-1) of the
    extension, under which expansion is plain digit unpacking.  A custom
    basis (s elements, linearly independent over the base) is accepted and
    handled through a precomputed change-of-basis inverse.
    """

    def __init__(self, big: Field, base: Field | None = None, basis=None):
        if base is None:
            base = big if big.base is None else big.base
        if big == base:
            self.s = 1
        elif big.base == base:
            self.s = big.degree
        else:
            raise FieldMismatch(f"{big} is not built as an extension of {base}")
        self.big = big
        self.base = base
        if basis is None:
            radix = base.q
            self.basis = tuple(radix**i for i in range(self.s)) if self.s > 1 else (1,)
            self._expand_mat = None
        else:
            basis = tuple(big.validate(int(b)) for b in basis)
            if len(basis) != self.s:
                raise InvalidParams(f"basis must have exactly {self.s} elements")
            rows = tuple(tuple(big.to_digits(b)) for b in basis) if self.s > 1 else ((1,),)
            if linalg.rank(base, rows) != self.s:
                raise InvalidParams("basis is linearly dependent over the base field")
            self.basis = basis
            self._expand_mat = linalg.mat_inv(base, rows)

    def to_base_vector(self, e):
        if isinstance(e, FieldElement):
            if e.field != self.big:
                raise FieldMismatch(f"element of {e.field} is not in {self.big}")
            e = e.value
        e = self.big.validate(e)
        if self.s == 1:
            return (e,)
        digits = tuple(self.big.to_digits(e))
        if self._expand_mat is None:
            return digits
        return linalg.vec_mat(self.base, digits, self._expand_mat)

    def from_base_vector(self, vec):
        if len(vec) != self.s:
            raise InvalidParams(f"expected {self.s} coordinates, got {len(vec)}")
        coords = tuple(self.base.validate(int(v)) for v in vec)
        if self.s == 1:
            return coords[0]
        if self._expand_mat is None:
            return self.big.from_digits(list(coords))
        acc = 0
        for c, b in zip(coords, self.basis):
            acc = self.big.add(acc, self.big.mul(self.lift(c), b))
        return acc

    def lift(self, a: int) -> int:
        """Embed a base-field element into the big field."""
        return self.base.validate(a)  # digit vector (a, 0, ..., 0) packs to a itself
