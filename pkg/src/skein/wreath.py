"""The algebra of functions on two swapped points, and its image in S_t(Rep Z2).

A basis vector of ``A^{(x)n}`` is a bit tuple: bit i is 1 when factor i is
delta_{-1}.  Maps between tensor powers are stored column by column.  The
S_t side is modelled only as far as the evaluation chains need: a running
state is either a scalar or a single outgoing strand carrying a vector.
"""

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb, factorial

from .errors import ArityMismatch, UnsupportedRecollementOverlap
from .scalar import LFrac, Poly
from .spanning import mark_classes, set_partitions

T = Poly.var("t")
LAM = Poly.var("lambda")


class Z2Vector:
    __slots__ = ("n", "coords")

    def __init__(self, n, coords=None):
        self.n = n
        self.coords = {}
        for k, c in (coords or {}).items():
            c = LFrac.coerce(c)
            if len(k) != n:
                raise ValueError("basis index has the wrong length")
            if c:
                self.coords[k] = c

    @classmethod
    def delta(cls, bits, coeff=1):
        return cls(len(bits), {tuple(bits): coeff})

    def __add__(self, other):
        if self.n != other.n:
            raise ArityMismatch("tensor lengths differ")
        out = dict(self.coords)
        for k, c in other.coords.items():
            out[k] = out.get(k, LFrac(0)) + c
        return Z2Vector(self.n, out)

    def scale(self, c):
        c = LFrac.coerce(c)
        return Z2Vector(self.n, {k: v * c for k, v in self.coords.items()})

    def __eq__(self, other):
        return isinstance(other, Z2Vector) and (self.n, self.coords) == (other.n, other.coords)

    def is_zero(self):
        return not self.coords

    def swapped(self):
        return Z2Vector(self.n, {tuple(1 - b for b in k): c for k, c in self.coords.items()})

    def is_invariant(self):
        return self.swapped() == self

    def __repr__(self):
        body = " + ".join("%s*d%s" % (c, "".join(map(str, k)))
                          for k, c in sorted(self.coords.items()))
        return "Z2Vector(%s)" % (body or "0")


def basis(n):
    return list(product((0, 1), repeat=n))


@dataclass(frozen=True)
class LinMap:
    src: int
    dst: int
    cols: tuple  # (basis index, Z2Vector) pairs, all of length dst

    def __call__(self, v):
        if v.n != self.src:
            raise ArityMismatch("map expects %d factors, got %d" % (self.src, v.n))
        table = dict(self.cols)
        out = Z2Vector(self.dst)
        for k, c in v.coords.items():
            out = out + table[k].scale(c)
        return out

    def __eq__(self, other):
        return (isinstance(other, LinMap) and (self.src, self.dst) == (other.src, other.dst)
                and all(dict(self.cols)[k] == dict(other.cols)[k] for k in basis(self.src)))

    def __hash__(self):
        return hash((self.src, self.dst))

    def scale(self, c):
        return LinMap(self.src, self.dst, tuple((k, v.scale(c)) for k, v in self.cols))


def linmap(src, dst, fn):
    """Build a map from a function on basis indices returning Z2Vectors."""
    return LinMap(src, dst, tuple((k, fn(k)) for k in basis(src)))


def lcompose(g, f):
    if f.dst != g.src:
        raise ArityMismatch("cannot compose")
    return linmap(f.src, g.dst, lambda k: g(f(Z2Vector.delta(k))))


def lcompose_all(*fs):
    acc = fs[-1]
    for f in reversed(fs[:-1]):
        acc = lcompose(f, acc)
    return acc


def ltensor(f, g):
    def col(k):
        a = f(Z2Vector.delta(k[:f.src]))
        b = g(Z2Vector.delta(k[f.src:]))
        out = {}
        for ka, ca in a.coords.items():
            for kb, cb in b.coords.items():
                out[ka + kb] = out.get(ka + kb, LFrac(0)) + ca * cb
        return Z2Vector(f.dst + g.dst, out)
    return linmap(f.src + g.src, f.dst + g.dst, col)


def lidentity(n):
    return linmap(n, n, lambda k: Z2Vector.delta(k))


@dataclass(frozen=True)
class AlgebraMaps:
    u: LinMap
    m: LinMap
    eps: LinMap
    delta: LinMap
    phi: LinMap
    theta: LinMap


def algebra_A():
    """u = d1 + d-1, pointwise product, eps(d_i) = 1/lambda,
    Delta(d_i) = lambda d_i (x) d_i, phi swaps, theta = 0."""
    inv_lam = LFrac(1, 1)
    return AlgebraMaps(
        u=linmap(0, 1, lambda k: Z2Vector(1, {(0,): 1, (1,): 1})),
        m=linmap(2, 1, lambda k: Z2Vector.delta(k[:1]) if k[0] == k[1] else Z2Vector(1)),
        eps=linmap(1, 0, lambda k: Z2Vector(0, {(): inv_lam})),
        delta=linmap(1, 2, lambda k: Z2Vector.delta(k + k, LAM)),
        phi=linmap(1, 1, lambda k: Z2Vector.delta((1 - k[0],))),
        theta=linmap(0, 1, lambda k: Z2Vector(1)),
    )


def invariant_basis(n):
    """delta_J + delta_{J^c} for each class J, 2^(n-1) vectors."""
    out = []
    for cls in mark_classes(n):
        bits = tuple(1 if i in cls.rep else 0 for i in range(1, n + 1))
        out.append(Z2Vector.delta(bits) + Z2Vector.delta(tuple(1 - b for b in bits)))
    return out


# recollements

@dataclass(frozen=True)
class Recollement:
    """A partial matching between {1..size_i} and {1..size_j}."""

    size_i: int
    size_j: int
    pairs: tuple


def recollements(size_i, size_j):
    out = []
    for k in range(min(size_i, size_j) + 1):
        for left in combinations(range(1, size_i + 1), k):
            for right in permutations(range(1, size_j + 1), k):
                out.append(Recollement(size_i, size_j, tuple(zip(left, right))))
    return out


def recollement_count(size_i, size_j):
    return sum(comb(size_i, k) * comb(size_j, k) * factorial(k)
               for k in range(min(size_i, size_j) + 1))


def p_u(outer_classes, total_classes):
    """prod_{outer <= a < total} (t - a)."""
    if outer_classes > total_classes:
        raise ValueError("outer class count exceeds total")
    out = Poly.const(1)
    for a in range(outer_classes, total_classes):
        out = out * (T - a)
    return out


# single-strand chains in S_t(Rep Z2)

@dataclass(frozen=True)
class Unit:
    """1 -> <V>, given by h : 1 -> V (u_C is h = identity of the unit)."""
    h: LinMap


@dataclass(frozen=True)
class Pair:
    """<U> -> <V> on the matched recollement, carrying f : U -> V."""
    f: LinMap


@dataclass(frozen=True)
class Counit:
    """<U> -> 1, given by g : U -> 1."""
    g: LinMap


@dataclass(frozen=True)
class Split:
    """<U> -> <V> on the unmatched recollement, carrying g : U -> 1 and h : 1 -> V."""
    g: LinMap
    h: LinMap


@dataclass(frozen=True)
class Scalar:
    c: object


def _as_scalar(v):
    return v.coords.get((), LFrac(0))


def compose_chain(chain):
    """Compose steps left to right (first step applied first); return the scalar.

    Only middle-only classes over the unit object are supported; anything
    else raises UnsupportedRecollementOverlap.
    """
    scalar = LFrac(1)
    strand = None  # Z2Vector on the open strand, or None when closed
    for step in chain:
        if isinstance(step, Scalar):
            scalar = scalar * LFrac.coerce(step.c)
        elif isinstance(step, Unit):
            if strand is not None:
                raise ArityMismatch("unit applied to an open strand")
            strand = step.h(Z2Vector(0, {(): 1}))
        elif isinstance(step, Pair):
            if strand is None:
                raise ArityMismatch("pair applied with no open strand")
            strand = step.f(strand)
        elif isinstance(step, (Counit, Split)):
            if strand is None:
                raise ArityMismatch("strand expected")
            if strand.n != 0:
                raise UnsupportedRecollementOverlap(
                    "middle-only class over an object other than the unit")
            value = _as_scalar(step.g(strand))
            if isinstance(step, Counit):
                # one class {middle}: P_u = t
                scalar = scalar * value * LFrac(p_u(0, 1))
                strand = None
            else:
                # classes {middle}, {out}: P_u = t - 1
                scalar = scalar * value * LFrac(p_u(1, 2))
                strand = step.h(Z2Vector(0, {(): 1}))
        else:
            raise TypeError("unknown chain step %r" % (step,))
    if strand is not None:
        raise ArityMismatch("chain leaves an open strand")
    return scalar


def unit_C():
    return Unit(lidentity(0))


def counit_C():
    return Counit(lidentity(0))


def evaluation_chain(n, crosscaps):
    """eps x^n y^crosscaps u for the object <A>_t."""
    A = algebra_A()
    x = lcompose(A.m, A.delta)
    y = lcompose(A.m, ltensor(A.theta, lidentity(1)))
    steps = [unit_C(), Pair(A.u)] + [Pair(y)] * crosscaps + [Pair(x)] * n + [Pair(A.eps), counit_C()]
    return steps


def evaluate_wreath(n):
    """(alpha_n, beta_n, gamma_n) of <A>_t."""
    return tuple(compose_chain(evaluation_chain(n, c)) for c in range(3))


# standard-form Hom(1, <A>^n)

class StHomElement:
    """Coordinates on the standard basis: (partition of [n], class per block)."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {k: LFrac.coerce(c) for k, c in (terms or {}).items() if LFrac.coerce(c)}

    def __eq__(self, other):
        return isinstance(other, StHomElement) and (self.n, self.terms) == (other.n, other.terms)

    def __repr__(self):
        return "StHomElement(%d, %r)" % (self.n, self.terms)


def st_basis(n):
    out = []
    for part in set_partitions(n):
        for classes in product(*[mark_classes(len(b)) for b in part]):
            out.append((part, tuple(c.rep for c in classes)))
    return out


def st_hom_dim(n):
    total = 0
    for part in set_partitions(n):
        prod_ = 1
        for b in part:
            prod_ *= 2 ** (len(b) - 1)
        total += prod_
    return total
