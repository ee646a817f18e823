"""Exact sparse polynomials over Q in the variables s, a0, b0, g0, t.

``lambda`` is not a variable of its own: it is stored as ``s**2`` and the
printer renders even powers of ``s`` as powers of ``lambda``.

Monomials are packed into a single int, one 20-bit field per variable, so
monomial multiplication is integer addition.  The top bit of each field is
kept clear and doubles as a borrow guard when testing divisibility.
"""

import random
import re
from fractions import Fraction
from heapq import heapify, heappop, heappush
from math import lcm

import gmpy2

from .errors import MissingVariable, NotDivisible

VARS = ("s", "a0", "b0", "g0", "t")

_W = 20
_FIELD = (1 << _W) - 1
_GUARD = 0
for _i in range(len(VARS)):
    _GUARD |= 1 << (_W * _i + _W - 1)
# s lives in the most significant field, t in the least
_SHIFT = {v: _W * (len(VARS) - 1 - i) for i, v in enumerate(VARS)}


def _pack(exps):
    key = 0
    for v, e in zip(VARS, exps):
        if e < 0 or e >= 1 << (_W - 1):
            raise ValueError("exponent out of range: %r" % (e,))
        key |= e << _SHIFT[v]
    return key


def _unpack(key):
    return tuple((key >> _SHIFT[v]) & _FIELD for v in VARS)


def _divides(a, b):
    """True when monomial b divides monomial a."""
    return ((a | _GUARD) - b) & _GUARD == _GUARD


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _quo(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


def as_rational(x):
    if isinstance(x, str):
        return _norm(Fraction(x))
    return _norm(Fraction(x))


class Poly:
    """Immutable sparse polynomial.  ``terms`` maps packed monomials to
    int or Fraction coefficients; zero coefficients are never stored."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}
        self._hash = None

    # construction

    @classmethod
    def const(cls, c):
        c = as_rational(c)
        return cls({0: c} if c else {})

    @classmethod
    def var(cls, name, power=1):
        if name == "lambda":
            name, power = "s", 2 * power
        if name not in _SHIFT:
            raise ValueError("unknown variable %r" % name)
        return cls({power << _SHIFT[name]: 1})

    @classmethod
    def monomial(cls, coeff, exps):
        """``exps`` is a map var -> exponent or a 5-tuple in VARS order."""
        if isinstance(exps, dict):
            exps = tuple(exps.get(v, 0) for v in VARS)
        coeff = as_rational(coeff)
        return cls({_pack(exps): coeff} if coeff else {})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, str):
            return parse_poly(x)
        raise TypeError("cannot make a Poly from %r" % (x,))

    # queries

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def const_value(self):
        if not self.is_const():
            raise ValueError("not a constant: %s" % self)
        return self.terms.get(0, 0)

    def items(self):
        """(exponent tuple, coefficient) pairs."""
        for k, c in self.terms.items():
            yield _unpack(k), c

    def degree(self, var=None):
        if not self.terms:
            return -1
        if var is None:
            return max(sum(_unpack(k)) for k in self.terms)
        if var == "lambda":
            return self.degree("s") // 2
        sh = _SHIFT[var]
        return max((k >> sh) & _FIELD for k in self.terms)

    def variables(self):
        seen = set()
        for k in self.terms:
            for v, e in zip(VARS, _unpack(k)):
                if e:
                    seen.add(v)
        return [v for v in VARS if v in seen]

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                del out[k]
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_rational(other)
            if not c:
                return Poly()
            return Poly({k: _norm(v * c) for k, v in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Poly({k: _norm(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return "Poly(%r)" % format_poly(self)

    def __str__(self):
        return format_poly(self)

    def scale_s(self, factor):
        """Substitute s -> factor * s for a rational factor."""
        out = {}
        for k, c in self.terms.items():
            e = (k >> _SHIFT["s"]) & _FIELD
            out[k] = _norm(c * Fraction(factor) ** e)
        return Poly({k: c for k, c in out.items() if c})


ZERO = Poly()
ONE = Poly.const(1)


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_divexact(p, q):
    """Return r with r * q == p, or raise NotDivisible."""
    if not q.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    lead = max(q.terms)
    lc = q.terms[lead]
    if len(q.terms) == 1:
        if not all(_divides(k, lead) for k in p.terms):
            raise NotDivisible("%s does not divide %s" % (q, p))
        return Poly({k - lead: _quo(c, lc) for k, c in p.terms.items()})
    rem = dict(p.terms)
    quot = {}
    heap = [-k for k in rem]
    heapify(heap)
    qitems = list(q.terms.items())
    while heap:
        k = -heappop(heap)
        c = rem.get(k)
        if c is None:
            continue
        if not _divides(k, lead):
            raise NotDivisible("%s does not divide %s" % (q, p))
        mk = k - lead
        mc = _quo(c, lc)
        quot[mk] = mc
        for kq, cq in qitems:
            kk = mk + kq
            old = rem.get(kk)
            if old is None:
                rem[kk] = _norm(-mc * cq)
                heappush(heap, -kk)
            else:
                v = old - mc * cq
                if v:
                    rem[kk] = _norm(v)
                else:
                    del rem[kk]
    return Poly(quot)


def poly_eval(p, point):
    """Evaluate exactly.  ``point`` maps variable names to rationals."""
    vals = {}
    for v in p.variables():
        if v not in point:
            raise MissingVariable(v)
        vals[v] = as_rational(point[v])
    total = 0
    for exps, c in p.items():
        term = c
        for v, e in zip(VARS, exps):
            if e:
                term = term * vals[v] ** e
        total += term
    return _norm(Fraction(total))


def poly_subs(p, point):
    """Partial substitution; unassigned variables stay symbolic."""
    out = Poly()
    for exps, c in p.items():
        coeff = Fraction(c)
        rest = []
        for v, e in zip(VARS, exps):
            if e and v in point:
                coeff *= Fraction(point[v]) ** e
                rest.append(0)
            else:
                rest.append(e)
        out = out + Poly.monomial(coeff, tuple(rest))
    return out


# printing and parsing

def _grlex_key(exps):
    # graded lex with s < a0 < b0 < g0 < t
    return (sum(exps),) + tuple(reversed(exps))


def _format_monomial(exps):
    parts = []
    es = exps[0]
    if es >= 2:
        k = es // 2
        parts.append("lambda" if k == 1 else "lambda^%d" % k)
    if es % 2:
        parts.append("s")
    for v, e in zip(VARS[1:], exps[1:]):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append("%s^%d" % (v, e))
    return parts


def format_poly(p):
    """Canonical text form, e.g. ``lambda^2 * a0 - 2 * lambda * a0``."""
    if not p.terms:
        return "0"
    items = sorted(p.items(), key=lambda it: _grlex_key(it[0]), reverse=True)
    out = []
    for i, (exps, c) in enumerate(items):
        neg = c < 0
        mag = -c if neg else c
        mono = _format_monomial(exps)
        if mag != 1 or not mono:
            mono = [str(mag)] + mono
        body = " * ".join(mono)
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(lambda|a0|b0|g0|s|t)|(\^|\*|\+|-|\(|\)))")


def _tokenize(text):
    pos = 0
    toks = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse polynomial at %r" % text[pos:])
        num, name, op = m.groups()
        if num is not None:
            toks.append(("num", num))
        elif name is not None:
            toks.append(("var", name))
        else:
            toks.append(("op", op))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        acc = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.power()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                acc = acc * self.power()
            elif tok[0] in ("num", "var") or tok == ("op", "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise ValueError("exponent must be a non-negative integer")
            base = base ** int(val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Poly.const(Fraction(val))
        if kind == "var":
            return Poly.var(val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return inner
        if (kind, val) == ("op", "-"):
            return -self.power()
        raise ValueError("unexpected token %r" % (val,))


def parse_poly(text):
    """Parse the text form written by :func:`format_poly`.

    >>> str(parse_poly("lambda * a0 - 2"))
    'lambda * a0 - 2'
    """
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty polynomial")
    p = _Parser(toks)
    out = p.expr()
    if p.i != len(toks):
        raise ValueError("trailing input in %r" % text)
    return out


# lambda-denominators

class LFrac:
    """A Poly divided by a power of lambda, kept reduced."""

    __slots__ = ("num", "lam")

    def __init__(self, num, lam=0):
        num = Poly.coerce(num)
        if not num.terms:
            lam = 0
        elif lam:
            low = min((k >> _SHIFT["s"]) & _FIELD for k in num.terms) // 2
            cut = min(low, lam)
            if cut:
                num = Poly({k - (2 * cut << _SHIFT["s"]): c for k, c in num.terms.items()})
                lam -= cut
        self.num = num
        self.lam = lam

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, LFrac) else cls(Poly.coerce(x))

    def _lift(self, lam):
        return self.num * Poly.var("s", 2 * (lam - self.lam))

    def __add__(self, other):
        other = LFrac.coerce(other)
        lam = max(self.lam, other.lam)
        return LFrac(self._lift(lam) + other._lift(lam), lam)

    __radd__ = __add__

    def __neg__(self):
        return LFrac(-self.num, self.lam)

    def __sub__(self, other):
        return self + (-LFrac.coerce(other))

    def __mul__(self, other):
        other = LFrac.coerce(other)
        return LFrac(self.num * other.num, self.lam + other.lam)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, (LFrac, Poly, int, Fraction)):
            return NotImplemented
        other = LFrac.coerce(other)
        return self.num == other.num and self.lam == other.lam

    def __hash__(self):
        return hash((self.num, self.lam))

    def __bool__(self):
        return bool(self.num.terms)

    def __repr__(self):
        return "LFrac(%r)" % str(self)

    def __str__(self):
        if not self.lam:
            return str(self.num)
        den = "lambda" if self.lam == 1 else "lambda^%d" % self.lam
        return "(%s) / %s" % (self.num, den)


# matrices and determinants

class PolyMatrix:
    """Dense row-major matrix of Polys."""

    def __init__(self, rows, cols, entries):
        if len(entries) != rows * cols:
            raise ValueError("expected %d entries, got %d" % (rows * cols, len(entries)))
        self.rows = rows
        self.cols = cols
        self.entries = [Poly.coerce(e) for e in entries]

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        return cls(n, m, [e for r in rows for e in r])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def is_symmetric(self):
        return all(self[i, j] == self[j, i]
                   for i in range(self.rows) for j in range(i + 1, self.cols))

    def evaluate(self, point):
        return [[poly_eval(self[i, j], point) for j in range(self.cols)]
                for i in range(self.rows)]

    def permuted(self, order):
        return PolyMatrix.from_rows([[self[i, j] for j in order] for i in order])

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)


def _bareiss(rows, div):
    """Single-step fraction-free elimination on a list of lists, in place."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = None
    for k in range(n - 1):
        if not rows[k][k]:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            for j in range(k + 1, n):
                v = ri[j] * pivot - rik * rk[j]
                ri[j] = div(v, prev) if prev is not None else v
            ri[k] = 0
        prev = pivot
    d = rows[n - 1][n - 1]
    return -d if sign < 0 else d


def det_bareiss(M):
    """Exact determinant of a square PolyMatrix."""
    if M.rows != M.cols:
        raise ValueError("matrix is not square")
    rows = [list(r) for r in M.to_rows()]
    d = _bareiss(rows, poly_divexact)
    return Poly.coerce(d)


def det_rational(rows):
    """Exact determinant of a matrix of ints or Fractions."""
    rows = [[Fraction(x) for x in r] for r in rows]
    den = 1
    for r in rows:
        for x in r:
            den = lcm(den, x.denominator)
    ints = [[gmpy2.mpz(x.numerator * (den // x.denominator)) for x in r] for r in rows]
    d = _bareiss(ints, gmpy2.divexact)
    return _norm(Fraction(int(d), den ** len(rows)))


def det_cofactor(M):
    """Laplace expansion along the first row; the small-matrix oracle."""
    rows = M.to_rows() if isinstance(M, PolyMatrix) else M
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return Poly.coerce(rows[0][0])
    total = ZERO
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = Poly.coerce(rows[0][j]) * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_sampled(M, points):
    """Determinant values at the given points (dicts var -> rational)."""
    return [det_rational(M.evaluate(pt)) for pt in points]


def random_point(rng, variables=VARS, lo=-9, hi=9):
    """A random nonzero integer point; ``rng`` is a random.Random."""
    pt = {}
    for v in variables:
        x = 0
        while x == 0:
            x = rng.randint(lo, hi)
        pt[v] = x
    return pt


def rank_rational(rows):
    """Rank over Q by Gaussian elimination on Fractions."""
    rows = [[Fraction(x) for x in r] for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                f = f / p[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], p)]
        rank += 1
        col += 1
    return rank


def extract_linear_factors(p, candidates):
    """Divide out each candidate as often as it goes exactly.

    Returns ``(multiplicities, residual)`` with
    ``p == residual * prod(c ** multiplicities[c])``.
    """
    mult = {}
    rest = p
    for cand in candidates:
        if not cand.terms:
            raise ValueError("zero candidate")
        k = 0
        while rest.terms and not rest.is_const():
            try:
                rest = poly_divexact(rest, cand)
            except NotDivisible:
                break
            k += 1
        mult[cand] = k
    return mult, rest


def seeded_rng(seed=0):
    return random.Random(seed)
