"""
Exact sparse polynomials in x, y (and the homogenizer z) over QQ or GF(p).

Polynomials are sympy PolyElement values in a PolyRing ordered by grevlex;
this module adds the operations the rest of the package relies on
(derivatives, homogenization, top forms, resultants, normalized gcds) and
the text grammar used by map files and reports:

    poly  := term (("+"|"-") term)*        (an optional leading sign is allowed)
    term  := coeff ("*" mono)? | mono
    coeff := int | int "/" posint
    mono  := var ("^" posint)? ("*" var ("^" posint)?)*
    var   := "x" | "y" | "z"
"""
import operator
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from sympy import Symbol, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

from planemaps.errors import DegreeError, FieldModeError, ParseError, VariableMismatch

Poly = PolyElement
Rat = type(QQ(0))

VARIABLES = ('x', 'y', 'z')
PRIME_LIMIT = 2 ** 63


def poly_ring(variables: Sequence[str] = ('x', 'y'), domain=QQ) -> PolyRing:
    """Ring over `domain` in the given variables, ordered by grevlex."""
    for name in variables:
        if name not in VARIABLES:
            raise VariableMismatch(f"Unknown variable {name!r}")
    return PolyRing([Symbol(name) for name in variables], domain, grevlex)


XY = poly_ring(('x', 'y'))
XYZ = poly_ring(('x', 'y', 'z'))


def rat(numerator: int, denominator: int = 1) -> Rat:
    return QQ(numerator, denominator)


def as_rat(value) -> Rat:
    """An int or rational as an element of QQ."""
    return QQ.convert(value)


def parse_rational(text: str) -> Rat:
    """'N' or 'N/D' with integers N, D and D != 0."""
    num, sep, den = text.strip().partition('/')
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"Bad rational {text!r}")
    if d == 0:
        raise ValueError(f"Zero denominator in {text!r}")
    return QQ(n, d)


def variable_names(ring: PolyRing) -> Tuple[str, ...]:
    return tuple(str(s) for s in ring.symbols)


def gen(ring: PolyRing, name: str) -> Poly:
    """Generator of `ring` called `name`."""
    names = variable_names(ring)
    if name not in names:
        raise VariableMismatch(f"Variable {name!r} not in {names}")
    return ring.gens[names.index(name)]


def check_same_ring(a: Poly, b: Poly):
    if a.ring.symbols != b.ring.symbols or a.ring.domain != b.ring.domain:
        raise VariableMismatch(
            f"Variable lists differ: {variable_names(a.ring)} over {a.ring.domain} "
            f"vs {variable_names(b.ring)} over {b.ring.domain}")


# ---------------------------------------------------------------------------
# Field modes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldMode:
    """Exact rationals, or a prime field used as a probabilistic accelerator."""
    tag: str = 'rationals'
    prime: Optional[int] = None

    def __post_init__(self):
        if self.tag == 'rationals':
            if self.prime is not None:
                raise FieldModeError("Rational mode takes no prime")
        elif self.tag == 'prime':
            p = self.prime
            if not isinstance(p, int) or p < 2 or p >= PRIME_LIMIT or not isprime(p):
                raise FieldModeError(f"{p} is not a prime below 2^63")
        else:
            raise FieldModeError(f"Unknown field mode {self.tag!r}")

    @classmethod
    def parse(cls, text: str) -> 'FieldMode':
        """Parse 'rational' or 'prime:<p>'."""
        text = text.strip()
        if text in ('rational', 'rationals'):
            return cls()
        if text.startswith('prime:'):
            try:
                p = int(text[len('prime:'):])
            except ValueError:
                raise FieldModeError(f"Bad prime in field mode {text!r}")
            return cls('prime', p)
        raise FieldModeError(f"Field mode must be 'rational' or 'prime:<p>', got {text!r}")

    @property
    def is_prime(self) -> bool:
        return self.tag == 'prime'

    @property
    def domain(self):
        return GF(self.prime) if self.is_prime else QQ

    @property
    def label(self) -> str:
        return f"prime:{self.prime}" if self.is_prime else 'rational'


RATIONALS = FieldMode()


def to_field(p: Poly, mode: FieldMode) -> Poly:
    """Image of a rational polynomial in the ring of `mode`."""
    if not mode.is_prime:
        return p
    modulus = mode.prime
    target = p.ring.clone(domain=mode.domain)
    terms = {}
    for monom, coeff in p.items():
        num, den = int(coeff.numerator), int(coeff.denominator)
        if den % modulus == 0:
            raise FieldModeError(f"Unlucky prime {modulus}: divides a denominator")
        value = num * pow(den, -1, modulus) % modulus
        if value:
            terms[monom] = value
    return target.from_dict(terms)


# ---------------------------------------------------------------------------
# Arithmetic and derivatives
# ---------------------------------------------------------------------------

ARITH_OPS = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
}


def arith(a: Poly, b: Poly, op: str) -> Poly:
    check_same_ring(a, b)
    try:
        return ARITH_OPS[op](a, b)
    except KeyError:
        raise ValueError(f"Unknown operation {op!r}")


def partial(p: Poly, v: str) -> Poly:
    return p.diff(gen(p.ring, v))


def total_degree(p: Poly) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((sum(m) for m in p.itermonoms()), default=-1)


def homogeneous_part(p: Poly, k: int) -> Poly:
    return p.ring.from_dict({m: c for m, c in p.items() if sum(m) == k})


def is_homogeneous(p: Poly, k: int) -> bool:
    return all(sum(m) == k for m in p.itermonoms())


def evaluate_at(p: Poly, point: Sequence) -> Rat:
    """Value of p at a point given by one coordinate per variable."""
    return p(*point)


def precompose(p: Poly, images: Sequence[Poly]) -> Poly:
    """Substitute images[i] for the i-th variable simultaneously."""
    ring = p.ring
    return p.compose(list(zip(ring.gens, [ring.ring_new(q) for q in images])))


def homogenize(p: Poly, target_deg: int, new_var: str = 'z') -> Poly:
    names = variable_names(p.ring)
    if new_var in names:
        raise VariableMismatch(f"{new_var!r} is already a variable of {names}")
    if target_deg < total_degree(p):
        raise DegreeError(f"Target degree {target_deg} below degree {total_degree(p)}")
    ring = poly_ring(names + (new_var,), p.ring.domain)
    return ring.from_dict({m + (target_deg - sum(m),): c for m, c in p.items()})


def dehomogenize(p: Poly, var: str = 'z') -> Poly:
    """Set `var` to 1 and drop it from the ring."""
    return p.evaluate(gen(p.ring, var), 1)


def restrict(p: Poly, var: str = 'z') -> Poly:
    """Set `var` to 0 and drop it from the ring."""
    return p.evaluate(gen(p.ring, var), 0)


# ---------------------------------------------------------------------------
# Binary forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous polynomial in two variables; its roots live in P^1."""
    poly: Poly
    degree: int

    def __post_init__(self):
        if self.poly.ring.ngens != 2:
            raise VariableMismatch("A binary form has exactly two variables")
        if self.degree < 0:
            raise DegreeError(f"Negative degree {self.degree}")
        if not is_homogeneous(self.poly, self.degree):
            raise DegreeError(f"Not homogeneous of degree {self.degree}")

    def chart(self) -> Poly:
        """Restriction to the affine chart where the second variable is 1."""
        return self.poly.evaluate(self.poly.ring.gens[1], 1)

    def __str__(self):
        return format_poly(self.poly)


def top_form(p: Poly) -> BinaryForm:
    if p.ring.ngens != 2:
        raise VariableMismatch("top_form needs a polynomial in two variables")
    if not p:
        raise DegreeError("The zero polynomial has no top form")
    deg = total_degree(p)
    return BinaryForm(homogeneous_part(p, deg), deg)


# ---------------------------------------------------------------------------
# Resultants and gcds
# ---------------------------------------------------------------------------

def resultant(p: Poly, q: Poly, v: str) -> Poly:
    """
    Resultant of p and q with respect to v, by the subresultant PRS.

    One argument of v-degree 0 is allowed: Res(c, q) = c^deg(q).
    """
    check_same_ring(p, q)
    ring = p.ring
    x = gen(ring, v)
    if not p or not q:
        raise DegreeError("Resultant of the zero polynomial")
    dp, dq = p.degree(x), q.degree(x)
    if dp == 0 and dq == 0:
        raise DegreeError(f"Neither argument involves {v}")
    if dp == 0:
        return p ** dq
    if dq == 0:
        return q ** dp

    others = [s for s in ring.symbols if str(s) != v]
    main = ring.clone(symbols=[Symbol(v)] + others)
    res = p.set_ring(main).resultant(q.set_ring(main))
    if main.ngens == 1:
        return ring.ground_new(res)
    return res.set_ring(ring)


def normalize(p: Poly) -> Poly:
    """Primitive with positive leading coefficient over QQ; monic over GF(p)."""
    if not p:
        return p
    if p.ring.domain.is_QQ:
        _, p = p.clear_denoms()
        _, p = p.primitive()
        return -p if p.LC < 0 else p
    return p.monic()


def gcd_poly(p: Poly, q: Poly) -> Poly:
    check_same_ring(p, q)
    return normalize(p.gcd(q))


def squarefree(b: BinaryForm) -> bool:
    p = b.poly
    if not p:
        raise DegreeError("The zero form has no square-free test")
    x, y = p.ring.gens
    g = gcd_poly(gcd_poly(p, p.diff(x)), p.diff(y))
    return total_degree(g) == 0


def coprime(a: Poly, b: Poly) -> bool:
    return total_degree(gcd_poly(a, b)) <= 0


# ---------------------------------------------------------------------------
# Text grammar
# ---------------------------------------------------------------------------

DIGITS = '0123456789'

TT_INT = 'INT'
TT_VAR = 'VAR'
TT_PLUS = 'PLUS'
TT_MINUS = 'MINUS'
TT_STAR = 'STAR'
TT_CARET = 'CARET'
TT_SLASH = 'SLASH'
TT_EOF = 'EOF'

SINGLE_CHAR_TOKENS = {
    '+': TT_PLUS,
    '-': TT_MINUS,
    '*': TT_STAR,
    '^': TT_CARET,
    '/': TT_SLASH,
}


class Token:
    def __init__(self, type_, column, value=None):
        self.type = type_
        self.column = column
        self.value = value

    def __repr__(self):
        if self.value is not None:
            return f"{self.type}:{self.value}"
        return self.type


class Lexer:
    def __init__(self, text: str, line: int = 1, offset: int = 0):
        self.text = text
        self.line = line
        self.offset = offset
        self.pos = -1
        self.current_char = None
        self.advance()

    def advance(self):
        self.pos += 1
        self.current_char = self.text[self.pos] if self.pos < len(self.text) else None

    def make_tokens(self):
        tokens = []

        while self.current_char is not None:
            column = self.pos + 1 + self.offset
            if self.current_char.isspace():
                self.advance()
            elif self.current_char in DIGITS:
                digits = ''
                while self.current_char is not None and self.current_char in DIGITS:
                    digits += self.current_char
                    self.advance()
                tokens.append(Token(TT_INT, column, int(digits)))
            elif self.current_char in VARIABLES:
                tokens.append(Token(TT_VAR, column, self.current_char))
                self.advance()
            elif self.current_char in SINGLE_CHAR_TOKENS:
                tokens.append(Token(SINGLE_CHAR_TOKENS[self.current_char], column))
                self.advance()
            else:
                raise ParseError(f"Unexpected character {self.current_char!r}",
                                 self.line, column)

        tokens.append(Token(TT_EOF, len(self.text) + 1 + self.offset))
        return tokens


class Parser:
    def __init__(self, tokens, ring: PolyRing, line: int = 1):
        self.tokens = tokens
        self.ring = ring
        self.names = variable_names(ring)
        self.line = line
        self.tok_idx = -1
        self.advance()

    def advance(self):
        self.tok_idx += 1
        self.current_tok = self.tokens[self.tok_idx]
        return self.current_tok

    def error(self, message: str):
        raise ParseError(message, self.line, self.current_tok.column)

    def expect(self, type_, what: str):
        if self.current_tok.type != type_:
            found = 'end of input' if self.current_tok.type == TT_EOF else repr(self.current_tok)
            self.error(f"Expected {what}, found {found}")
        tok = self.current_tok
        self.advance()
        return tok

    def parse(self) -> Poly:
        if self.current_tok.type == TT_EOF:
            self.error("Empty polynomial")
        result = self.poly()
        if self.current_tok.type != TT_EOF:
            self.error(f"Unexpected {self.current_tok!r}")
        return result

    # GRAMMAR
    def poly(self) -> Poly:
        sign = 1
        if self.current_tok.type in (TT_PLUS, TT_MINUS):
            sign = -1 if self.current_tok.type == TT_MINUS else 1
            self.advance()
        result = self.term() * sign

        while self.current_tok.type in (TT_PLUS, TT_MINUS):
            sign = -1 if self.current_tok.type == TT_MINUS else 1
            self.advance()
            result += self.term() * sign

        return result

    def term(self) -> Poly:
        if self.current_tok.type == TT_INT:
            coeff = self.coeff()
            if self.current_tok.type == TT_STAR:
                self.advance()
                return self.mono() * coeff
            return self.ring.ground_new(coeff)
        if self.current_tok.type == TT_VAR:
            return self.mono()
        self.error("Expected a coefficient or a variable")

    def coeff(self) -> Rat:
        num = self.expect(TT_INT, 'an integer').value
        if self.current_tok.type == TT_SLASH:
            self.advance()
            den_tok = self.current_tok
            den = self.expect(TT_INT, 'a denominator').value
            if den == 0:
                raise ParseError("Zero denominator", self.line, den_tok.column)
            return rat(num, den)
        return rat(num)

    def mono(self) -> Poly:
        result = self.factor()
        while self.current_tok.type == TT_STAR:
            self.advance()
            result *= self.factor()
        return result

    def factor(self) -> Poly:
        tok = self.expect(TT_VAR, 'a variable')
        if tok.value not in self.names:
            raise ParseError(f"Variable {tok.value!r} not allowed here (ring has {', '.join(self.names)})",
                             self.line, tok.column)
        base = gen(self.ring, tok.value)
        if self.current_tok.type == TT_CARET:
            self.advance()
            exponent_tok = self.current_tok
            exponent = self.expect(TT_INT, 'a positive exponent').value
            if exponent == 0:
                raise ParseError("Exponent must be positive", self.line, exponent_tok.column)
            return base ** exponent
        return base


def parse_poly(text: str, ring: PolyRing = XY, line: int = 1, offset: int = 0) -> Poly:
    """Parse `text` into an element of `ring`; columns in errors are shifted by `offset`."""
    tokens = Lexer(text, line, offset).make_tokens()
    return Parser(tokens, ring, line).parse()


def format_rational(c) -> str:
    num, den = int(c.numerator), int(c.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def format_monomial(monom, names) -> str:
    factors = []
    for name, exp in zip(names, monom):
        if exp == 1:
            factors.append(name)
        elif exp > 1:
            factors.append(f"{name}^{exp}")
    return '*'.join(factors)


def format_poly(p: Poly) -> str:
    """Canonical text: terms by descending grevlex, in the parse grammar."""
    if not p:
        return '0'
    names = variable_names(p.ring)
    parts = []
    for monom, coeff in p.terms(order=grevlex):
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        mono = format_monomial(monom, names)
        if not mono:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{format_rational(magnitude)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return ' '.join(parts)
