"""Exact scalar arithmetic for the four coefficient fields of the verifier.

Supported field kinds:

* ``rationals``            -- arbitrary-precision fractions,
* ``prime``                -- GF(p) for an odd prime p,
* ``number_field``         -- Q[t]/(m(t)) for a monic irreducible m of degree 2 or 3,
* ``rational_functions``   -- Q(t) in one named variable.

Every element is kept in a unique canonical form so that equality of values
is equality of payloads.  Payloads are immutable; all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DenominatorVanishes,
    DescriptorMismatch,
    DivisionByZero,
    InvalidDescriptor,
    ScalarSyntaxError,
    UnknownSymbol,
)

MAX_EXPONENT = 64

# ---------------------------------------------------------------------------
# dense univariate polynomials over Q: tuples of Fraction, ascending degree,
# no trailing zeros; () is the zero polynomial.
# ---------------------------------------------------------------------------

_PZERO: tuple = ()
_PONE = (Fraction(1),)


def _ptrim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pscale(a, s):
    if s == 0:
        return _PZERO
    return tuple(c * s for c in a)


def _pmul(a, b):
    if not a or not b:
        return _PZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _ptrim(out)


def _pdivmod(a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and _ptrim(a):
        a = list(_ptrim(a))
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        factor = a[-1] / lead
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a.pop()
    return _ptrim(q), _ptrim(a)


def _pmonic(a):
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(c / lead for c in a)


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a)


def _pxgcd(a, b):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = _PONE, _PZERO
    t0, t1 = _PZERO, _PONE
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
        t0, t1 = t1, _psub(t0, _pmul(q, t1))
    if r0:
        lead = r0[-1]
        r0 = _pmonic(r0)
        s0 = tuple(c / lead for c in s0)
        t0 = tuple(c / lead for c in t0)
    return r0, s0, t0


def _pconst(value):
    value = Fraction(value)
    return _PZERO if value == 0 else (value,)


def _peval(a, point, *, mul, add, from_fraction):
    """Horner evaluation of a Q-polynomial at a point of an arbitrary field."""
    acc = None
    for c in reversed(a):
        fc = from_fraction(c)
        acc = fc if acc is None else add(mul(acc, point), fc)
    return acc


# ---------------------------------------------------------------------------
# field descriptors
# ---------------------------------------------------------------------------


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _has_rational_root(poly):
    """Rational-root test for a monic polynomial with rational coefficients."""
    denom = 1
    for c in poly:
        denom = denom * c.denominator // _int_gcd(denom, c.denominator)
    ints = [int(c * denom) for c in poly]
    lead, const = ints[-1], ints[0]
    if const == 0:
        return True
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for sign in (1, -1):
                r = Fraction(sign * p, q)
                value = Fraction(0)
                for c in reversed(poly):
                    value = value * r + c
                if value == 0:
                    return True
    return False


def _int_gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


class FieldDescriptor:
    """Identifies one of the four exact fields; hashable and immutable."""

    RATIONALS = "rationals"
    PRIME = "prime"
    NUMBER_FIELD = "number_field"
    RATIONAL_FUNCTIONS = "rational_functions"

    __slots__ = ("kind", "p", "minpoly", "variable")

    def __init__(self, kind, p=None, minpoly=None, variable=None):
        if kind == self.PRIME:
            if p is None or not _is_prime(p):
                raise InvalidDescriptor(f"{p} is not prime")
            if p == 2:
                raise InvalidDescriptor("characteristic 2 is not supported")
        elif kind == self.NUMBER_FIELD:
            minpoly = _ptrim(tuple(Fraction(c) for c in minpoly))
            deg = len(minpoly) - 1
            if deg < 2:
                raise InvalidDescriptor("modulus must have degree >= 2")
            if deg > 3:
                raise InvalidDescriptor("moduli of degree > 3 are not supported")
            if minpoly[-1] != 1:
                raise InvalidDescriptor("modulus must be monic")
            if _has_rational_root(minpoly):
                raise InvalidDescriptor("modulus is reducible over Q")
            variable = variable or "eta"
        elif kind == self.RATIONAL_FUNCTIONS:
            variable = variable or "eta"
        elif kind != self.RATIONALS:
            raise InvalidDescriptor(f"unknown field kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "minpoly", minpoly)
        object.__setattr__(self, "variable", variable)

    def __setattr__(self, *_):
        raise AttributeError("FieldDescriptor is immutable")

    # constructors ---------------------------------------------------------

    @classmethod
    def rationals(cls):
        return cls(cls.RATIONALS)

    @classmethod
    def prime(cls, p):
        return cls(cls.PRIME, p=p)

    @classmethod
    def number_field(cls, minpoly, variable="eta"):
        return cls(cls.NUMBER_FIELD, minpoly=tuple(minpoly), variable=variable)

    @classmethod
    def rational_functions(cls, variable="eta"):
        return cls(cls.RATIONAL_FUNCTIONS, variable=variable)

    # basics ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldDescriptor)
            and self.kind == other.kind
            and self.p == other.p
            and self.minpoly == other.minpoly
            and self.variable == other.variable
        )

    def __hash__(self):
        return hash((self.kind, self.p, self.minpoly, self.variable))

    def __repr__(self):
        if self.kind == self.RATIONALS:
            return "Q"
        if self.kind == self.PRIME:
            return f"GF({self.p})"
        if self.kind == self.NUMBER_FIELD:
            poly = _render_poly(self.minpoly, self.variable)
            return f"Q[{self.variable}]/({poly})"
        return f"Q({self.variable})"

    def characteristic(self):
        return self.p if self.kind == self.PRIME else 0

    # element construction -------------------------------------------------

    def canonical(self, payload):
        """Re-canonicalize a raw payload of this field's shape."""
        if self.kind == self.RATIONALS:
            return Fraction(payload)
        if self.kind == self.PRIME:
            return int(payload) % self.p
        if self.kind == self.NUMBER_FIELD:
            poly = _ptrim(tuple(Fraction(c) for c in payload))
            return _pdivmod(poly, self.minpoly)[1]
        num, den = payload
        num = _ptrim(tuple(Fraction(c) for c in num))
        den = _ptrim(tuple(Fraction(c) for c in den))
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return (_PZERO, _PONE)
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return (num, den)

    def element(self, payload):
        return FieldElement(self, self.canonical(payload))

    def zero(self):
        if self.kind == self.RATIONALS:
            return FieldElement(self, Fraction(0))
        if self.kind == self.PRIME:
            return FieldElement(self, 0)
        if self.kind == self.NUMBER_FIELD:
            return FieldElement(self, _PZERO)
        return FieldElement(self, (_PZERO, _PONE))

    def one(self):
        return self.from_fraction(Fraction(1))

    def from_int(self, n):
        return self.from_fraction(Fraction(n))

    def from_fraction(self, fr):
        fr = Fraction(fr)
        if self.kind == self.RATIONALS:
            return FieldElement(self, fr)
        if self.kind == self.PRIME:
            if fr.denominator % self.p == 0:
                raise DenominatorVanishes(
                    f"{fr} has no image in GF({self.p})"
                )
            value = fr.numerator * pow(fr.denominator, -1, self.p) % self.p
            return FieldElement(self, value)
        if self.kind == self.NUMBER_FIELD:
            return FieldElement(self, _pconst(fr))
        return FieldElement(self, (_pconst(fr), _PONE))

    def generator(self):
        """The element represented by the field's variable."""
        if self.kind == self.NUMBER_FIELD:
            return FieldElement(self, self.canonical((Fraction(0), Fraction(1))))
        if self.kind == self.RATIONAL_FUNCTIONS:
            return FieldElement(self, ((Fraction(0), Fraction(1)), _PONE))
        raise UnknownSymbol(f"field {self!r} has no variable")


class FieldElement:
    """A scalar in canonical form; supports +, -, *, /, ** and exact equality."""

    __slots__ = ("field", "payload")

    def __init__(self, field, payload):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    # predicates -----------------------------------------------------------

    def is_zero(self):
        k = self.field.kind
        if k == FieldDescriptor.RATIONALS:
            return self.payload == 0
        if k == FieldDescriptor.PRIME:
            return self.payload == 0
        if k == FieldDescriptor.NUMBER_FIELD:
            return not self.payload
        return not self.payload[0]

    def is_one(self):
        k = self.field.kind
        if k == FieldDescriptor.RATIONALS:
            return self.payload == 1
        if k == FieldDescriptor.PRIME:
            return self.payload == 1
        if k == FieldDescriptor.NUMBER_FIELD:
            return self.payload == _PONE
        return self.payload == (_PONE, _PONE)

    # helpers --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise DescriptorMismatch(
                    f"cannot mix {self.field!r} and {other.field!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(Fraction(other))
        return NotImplemented

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        k = f.kind
        if k == FieldDescriptor.RATIONALS:
            return FieldElement(f, self.payload + other.payload)
        if k == FieldDescriptor.PRIME:
            return FieldElement(f, (self.payload + other.payload) % f.p)
        if k == FieldDescriptor.NUMBER_FIELD:
            return FieldElement(f, _padd(self.payload, other.payload))
        n1, d1 = self.payload
        n2, d2 = other.payload
        if d1 == _PONE and d2 == _PONE:
            return FieldElement(f, (_padd(n1, n2), _PONE))
        num = _padd(_pmul(n1, d2), _pmul(n2, d1))
        return FieldElement(f, f.canonical((num, _pmul(d1, d2))))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        k = f.kind
        if k == FieldDescriptor.RATIONALS:
            return FieldElement(f, -self.payload)
        if k == FieldDescriptor.PRIME:
            return FieldElement(f, (-self.payload) % f.p)
        if k == FieldDescriptor.NUMBER_FIELD:
            return FieldElement(f, _pneg(self.payload))
        num, den = self.payload
        return FieldElement(f, (_pneg(num), den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        k = f.kind
        if k == FieldDescriptor.RATIONALS:
            return FieldElement(f, self.payload * other.payload)
        if k == FieldDescriptor.PRIME:
            return FieldElement(f, (self.payload * other.payload) % f.p)
        if k == FieldDescriptor.NUMBER_FIELD:
            prod = _pmul(self.payload, other.payload)
            if len(prod) >= len(f.minpoly):
                prod = _pdivmod(prod, f.minpoly)[1]
            return FieldElement(f, prod)
        n1, d1 = self.payload
        n2, d2 = other.payload
        if not n1 or not n2:
            return f.zero()
        if d1 == _PONE and d2 == _PONE:
            return FieldElement(f, (_pmul(n1, n2), _PONE))
        return FieldElement(f, f.canonical((_pmul(n1, n2), _pmul(d1, d2))))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        f = self.field
        k = f.kind
        if k == FieldDescriptor.RATIONALS:
            return FieldElement(f, 1 / self.payload)
        if k == FieldDescriptor.PRIME:
            return FieldElement(f, pow(self.payload, -1, f.p))
        if k == FieldDescriptor.NUMBER_FIELD:
            g, s, _ = _pxgcd(self.payload, f.minpoly)
            if len(g) != 1:
                raise InvalidDescriptor("modulus is not irreducible")
            return FieldElement(f, _pdivmod(s, f.minpoly)[1])
        num, den = self.payload
        return FieldElement(f, f.canonical((den, num)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by zero")
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ScalarSyntaxError("exponent must be a nonnegative integer")
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # equality -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            try:
                other = self.field.from_fraction(Fraction(other))
            except DenominatorVanishes:
                return False
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.payload == other.payload

    def __hash__(self):
        return hash((self.field, self.payload))

    def __repr__(self):
        return f"<{render(self)} in {self.field!r}>"


# ---------------------------------------------------------------------------
# rendering (inverse of parse_scalar on canonical elements)
# ---------------------------------------------------------------------------


def _render_fraction(fr):
    if fr.denominator == 1:
        return str(fr.numerator)
    return f"{fr.numerator}/{fr.denominator}"


def _render_poly(poly, variable):
    if not poly:
        return "0"
    terms = []
    for deg in range(len(poly) - 1, -1, -1):
        c = poly[deg]
        if c == 0:
            continue
        if deg == 0:
            body = _render_fraction(abs(c))
        else:
            var = variable if deg == 1 else f"{variable}^{deg}"
            if abs(c) == 1:
                body = var
            else:
                body = f"{_render_fraction(abs(c))}*{var}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(terms)


def render(x: FieldElement) -> str:
    """Canonical literal for x, parseable back by parse_scalar."""
    f = x.field
    if f.kind == FieldDescriptor.RATIONALS:
        return _render_fraction(x.payload)
    if f.kind == FieldDescriptor.PRIME:
        return str(x.payload)
    if f.kind == FieldDescriptor.NUMBER_FIELD:
        return _render_poly(x.payload, f.variable)
    num, den = x.payload
    if den == _PONE:
        return _render_poly(num, f.variable)
    return f"({_render_poly(num, f.variable)})/({_render_poly(den, f.variable)})"


# ---------------------------------------------------------------------------
# recursive-descent parser for the scalar grammar
#
#   expr   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := '-' factor | primary ('^' uint)?
#   primary:= uint | NAME | '(' expr ')'
#
# The '^'-after-parentheses extension is a superset of the published grammar.
# ---------------------------------------------------------------------------


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.token = None
        self.advance()

    def advance(self):
        text, n = self.text, len(self.text)
        i = self.pos
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            self.token = ("end", None)
            self.pos = i
            return
        ch = text[i]
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            self.token = ("int", int(text[i:j]))
            self.pos = j
            return
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            self.token = ("name", text[i:j])
            self.pos = j
            return
        if ch in "+-*/^()":
            self.token = ("op", ch)
            self.pos = i + 1
            return
        raise ScalarSyntaxError(f"unexpected character {ch!r} at position {i}")


class ExpressionEnv:
    """Value hooks for the expression parser; subclassed for vector literals."""

    def from_int(self, n):
        raise NotImplementedError

    def atom(self, name):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def pow(self, a, n):
        return a ** n


class _ScalarEnv(ExpressionEnv):
    def __init__(self, field):
        self.field = field

    def from_int(self, n):
        return self.field.from_int(n)

    def atom(self, name):
        if name == self.field.variable:
            return self.field.generator()
        raise UnknownSymbol(f"unknown symbol {name!r} in {self.field!r}")


class _Parser:
    def __init__(self, text, env):
        self.scanner = _Scanner(text)
        self.env = env

    def parse(self):
        value = self.expr()
        kind, _ = self.scanner.token
        if kind != "end":
            raise ScalarSyntaxError(f"trailing input near position {self.scanner.pos}")
        return value

    def expr(self):
        value = self.term()
        while self.scanner.token == ("op", "+") or self.scanner.token == ("op", "-"):
            op = self.scanner.token[1]
            self.scanner.advance()
            rhs = self.term()
            value = self.env.add(value, rhs) if op == "+" else self.env.sub(value, rhs)
        return value

    def term(self):
        value = self.factor()
        while self.scanner.token == ("op", "*") or self.scanner.token == ("op", "/"):
            op = self.scanner.token[1]
            self.scanner.advance()
            rhs = self.factor()
            value = self.env.mul(value, rhs) if op == "*" else self.env.div(value, rhs)
        return value

    def factor(self):
        if self.scanner.token == ("op", "-"):
            self.scanner.advance()
            return self.env.neg(self.factor())
        value = self.primary()
        if self.scanner.token == ("op", "^"):
            self.scanner.advance()
            kind, n = self.scanner.token
            if kind != "int":
                raise ScalarSyntaxError("exponent must be an unsigned integer")
            if n > MAX_EXPONENT:
                raise ScalarSyntaxError(f"exponent {n} exceeds limit {MAX_EXPONENT}")
            self.scanner.advance()
            value = self.env.pow(value, n)
        return value

    def primary(self):
        kind, payload = self.scanner.token
        if kind == "int":
            self.scanner.advance()
            return self.env.from_int(payload)
        if kind == "name":
            self.scanner.advance()
            return self.env.atom(payload)
        if self.scanner.token == ("op", "("):
            self.scanner.advance()
            value = self.expr()
            if self.scanner.token != ("op", ")"):
                raise ScalarSyntaxError("expected ')'")
            self.scanner.advance()
            return value
        raise ScalarSyntaxError(f"unexpected token {payload!r}")


def parse_expression(text, env):
    """Parse an expression with the supplied value hooks."""
    if not isinstance(text, str) or not text.strip():
        raise ScalarSyntaxError("empty expression")
    try:
        return _Parser(text, env).parse()
    except RecursionError:
        raise ScalarSyntaxError("expression is nested too deeply") from None


def parse_scalar(text: str, field: FieldDescriptor) -> FieldElement:
    """Parse a scalar literal into a canonical element of the field."""
    return parse_expression(text, _ScalarEnv(field))


# ---------------------------------------------------------------------------
# specialization Q(t) -> concrete field
# ---------------------------------------------------------------------------


def specialize(x: FieldElement, target: FieldDescriptor, value: FieldElement) -> FieldElement:
    """Substitute the rational-function variable by ``value`` and evaluate.

    A ring homomorphism wherever the denominator (and every coefficient's
    image) survives; raises DenominatorVanishes otherwise.
    """
    if x.field.kind != FieldDescriptor.RATIONAL_FUNCTIONS:
        raise DescriptorMismatch("specialize expects a rational-function element")
    if value.field != target:
        raise DescriptorMismatch("value does not lie in the target field")
    num, den = x.payload

    def from_fraction(fr):
        return target.from_fraction(fr)

    def mul(a, b):
        return a * b

    def add(a, b):
        return a + b

    try:
        num_val = _peval(num, value, mul=mul, add=add, from_fraction=from_fraction)
        den_val = _peval(den, value, mul=mul, add=add, from_fraction=from_fraction)
    except DenominatorVanishes as exc:
        raise DenominatorVanishes(str(exc)) from None
    if num_val is None:
        return target.zero()
    if den_val is None or den_val.is_zero():
        raise DenominatorVanishes(f"denominator of {render(x)} vanishes at {render(value)}")
    return num_val / den_val


def characteristic(field: FieldDescriptor) -> int:
    """0 for the Q-based fields, p for GF(p)."""
    return field.characteristic()
