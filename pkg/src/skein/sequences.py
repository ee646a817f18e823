"""The closed-surface sequences alpha, beta, gamma.

A sequence is either symbolic geometric (``initial * ratio**g``) or given by
a rational generating function ``p(T) / q(T)`` with ``q(0) = 1``.  Univariate
polynomials in T are plain lists of rationals, lowest degree first.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import MismatchedDenominators, NotAFactorization, NotCoprime
from .scalar import Poly, as_rational


# univariate helpers over Q

def _trim(p):
    p = [as_rational(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def udeg(p):
    """Degree of a coefficient list; the zero polynomial has degree -1."""
    return len(_trim(p)) - 1


def uadd(p, q):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                  for i in range(n)])


def usub(p, q):
    return uadd(p, [-c for c in q])


def umul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def udivmod(p, q):
    p, q = _trim(p), _trim(q)
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = [Fraction(c) for c in p]
    lead = Fraction(q[-1])
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
        rem = _trim(rem)
    return _trim(quot), rem


def ugcd_ext(a, b):
    """Return (g, x, y) with x*a + y*b = g and g monic."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        qt, r = udivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, usub(s0, umul(qt, s1))
        t0, t1 = t1, usub(t0, umul(qt, t1))
    if not r0:
        return [], [], []
    lead = Fraction(r0[-1])
    return ([c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0])


def format_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


# sequence specs

@dataclass(frozen=True)
class GeometricSymbolic:
    initial: Poly
    ratio: Poly

    def __post_init__(self):
        object.__setattr__(self, "initial", Poly.coerce(self.initial))
        object.__setattr__(self, "ratio", Poly.coerce(self.ratio))
        if self.ratio.is_zero():
            raise ValueError("geometric ratio must be nonzero")

    def to_json(self):
        return {"kind": "geometric", "initial": str(self.initial), "ratio": str(self.ratio)}


@dataclass(frozen=True)
class RationalGF:
    """Generating function p/q.  Coprimality is not enforced here because
    zero sequences (p = 0) are legitimate; see :func:`is_reduced`."""

    p: tuple
    q: tuple

    def __post_init__(self):
        p = tuple(_trim(self.p))
        q = tuple(_trim(self.q))
        if not q or q[0] != 1:
            raise ValueError("q(0) must equal 1")
        if not p:
            q = (1,)  # the zero series is written 0/1
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def is_reduced(self):
        if not self.p:
            return True
        g, _, _ = ugcd_ext(list(self.p), list(self.q))
        return len(g) == 1

    def to_json(self):
        return {"kind": "gf", "p": [format_rational(c) for c in self.p],
                "q": [format_rational(c) for c in self.q]}


def spec_from_json(obj):
    kind = obj.get("kind")
    if kind == "geometric":
        return GeometricSymbolic(Poly.coerce(obj["initial"]), Poly.coerce(obj["ratio"]))
    if kind == "gf":
        return RationalGF(tuple(as_rational(c) for c in obj["p"]),
                          tuple(as_rational(c) for c in obj["q"]))
    raise ValueError("unknown sequence kind %r" % kind)


def term(spec, g):
    """The g-th term as a Poly."""
    if isinstance(spec, GeometricSymbolic):
        return spec.initial * spec.ratio ** g
    return Poly.const(gf_terms(spec, g + 1)[g])


def gf_terms(spec, count):
    """First ``count`` power-series coefficients of p/q."""
    p, q = spec.p, spec.q
    out = []
    for l in range(count):
        v = Fraction(p[l]) if l < len(p) else Fraction(0)
        for i in range(1, min(l, len(q) - 1) + 1):
            v -= q[i] * out[l - i]
        out.append(v)
    return out


@dataclass(frozen=True)
class Recurrence:
    N: int
    M: int
    K: int
    coeffs: tuple  # a_1 .. a_M as Polys


def recurrence_constants(spec):
    """(N, M, K, a_1..a_M) with q = 1 - a_1 T + a_2 T^2 - ...

    A geometric spec behaves like ``initial / (1 - ratio T)``.
    """
    if isinstance(spec, GeometricSymbolic):
        return Recurrence(0, 1, 1, (spec.ratio,))
    N = max(udeg(list(spec.p)), 0)
    M = udeg(list(spec.q))
    K = max(N + 1, M)
    coeffs = tuple(Poly.const((-1) ** i * spec.q[i]) for i in range(1, M + 1))
    return Recurrence(N, M, K, coeffs)


@dataclass(frozen=True)
class SequenceTriple:
    alpha: object
    beta: object
    gamma: object

    def specs(self):
        return (self.alpha, self.beta, self.gamma)

    def evaluate(self, crosscaps, g):
        return term(self.specs()[crosscaps], g)

    def to_json(self):
        return {"alpha": self.alpha.to_json(), "beta": self.beta.to_json(),
                "gamma": self.gamma.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(spec_from_json(obj["alpha"]), spec_from_json(obj["beta"]),
                   spec_from_json(obj["gamma"]))

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))


def geometric_triple():
    """alpha_g = lambda^g a0, beta_g = lambda^g b0, gamma_g = lambda^g g0."""
    lam = Poly.var("lambda")
    return SequenceTriple(GeometricSymbolic(Poly.var("a0"), lam),
                          GeometricSymbolic(Poly.var("b0"), lam),
                          GeometricSymbolic(Poly.var("g0"), lam))


def orientable_triple():
    """The geometric alpha with beta = gamma = 0."""
    lam = Poly.var("lambda")
    zero = RationalGF((), (1,))
    return SequenceTriple(GeometricSymbolic(Poly.var("a0"), lam), zero, zero)


def is_zero_spec(spec):
    if isinstance(spec, RationalGF):
        return not spec.p
    return spec.initial.is_zero()


def common_recurrence(triple):
    """Recurrence data read from alpha, after checking the shared denominator."""
    specs = [sp for sp in triple.specs() if not is_zero_spec(sp)] or [triple.alpha]
    if all(isinstance(sp, GeometricSymbolic) for sp in specs):
        if len({sp.ratio for sp in specs}) != 1:
            raise MismatchedDenominators("geometric ratios differ")
    elif all(isinstance(sp, RationalGF) for sp in specs):
        if len({sp.q for sp in specs}) != 1:
            raise MismatchedDenominators("generating functions have different q")
    else:
        raise MismatchedDenominators("mixed geometric and rational specs")
    return recurrence_constants(triple.alpha if not is_zero_spec(triple.alpha) else specs[0])


def satisfies_degree_condition(triple):
    """deg p_beta < K and deg p_gamma < K, K taken from alpha."""
    rec = common_recurrence(triple)
    for sp in (triple.beta, triple.gamma):
        if isinstance(sp, RationalGF) and udeg(list(sp.p)) >= rec.K:
            return False
    return True


def _split_one(spec, q1, q2, s, t):
    p = list(spec.p)
    quot, r = udivmod(p, list(spec.q))
    _, v1 = udivmod(umul(r, t), q1)
    _, v2 = udivmod(umul(r, s), q2)
    v2 = uadd(v2, umul(quot, q2))
    return RationalGF(tuple(v1), tuple(q1)), RationalGF(tuple(v2), tuple(q2))


def partial_fraction_split(triple, q_prime, q_dblprime):
    """Split each p/q of a rational triple as v'/q' + v''/q''.

    Any polynomial part of p/q is carried by the second factor.
    """
    q1, q2 = _trim(q_prime), _trim(q_dblprime)
    specs = triple.specs()
    if not all(isinstance(sp, RationalGF) for sp in specs):
        raise NotAFactorization("splitting needs rational generating functions")
    live = [sp for sp in specs if sp.p]
    if len({sp.q for sp in live}) > 1:
        raise MismatchedDenominators("generating functions have different q")
    q = list(live[0].q) if live else umul(q1, q2)
    if not q1 or not q2 or q1[0] != 1 or q2[0] != 1:
        raise NotAFactorization("factors must have constant term 1")
    if umul(q1, q2) != _trim(q):
        raise NotAFactorization("q' * q'' != q")
    g, s, t = ugcd_ext(q1, q2)
    if len(g) != 1:
        raise NotCoprime("q' and q'' share a factor")
    parts = [_split_one(sp, q1, q2, s, t) for sp in specs]
    first = SequenceTriple(*(a for a, _ in parts))
    second = SequenceTriple(*(b for _, b in parts))
    return first, second
