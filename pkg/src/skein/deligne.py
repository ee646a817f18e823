"""Partition diagrams and the two algebras A_+ and A_- built from them.

A morphism ``top -> bottom`` is a linear combination of set partitions of
the points ``t1..t<top>`` and ``b1..b<bottom>``.  Composition stacks two
diagrams, joins blocks through the middle row and multiplies by ``t`` for
each block that lives entirely in the middle.  Coefficients are LFracs so
that the counit can carry a factor 1/lambda.
"""

from dataclasses import dataclass

from .errors import ArityMismatch
from .scalar import LFrac, Poly
from .spanning import bell, set_partitions

TOP, BOTTOM = 0, 1


def _point_name(p):
    return ("t%d" if p[0] == TOP else "b%d") % p[1]


def _parse_point(text):
    if len(text) < 2 or text[0] not in "tb" or not text[1:].isdigit():
        raise ValueError("bad point %r" % text)
    return (TOP if text[0] == "t" else BOTTOM, int(text[1:]))


@dataclass(frozen=True)
class SetPartition:
    top: int
    bottom: int
    blocks: tuple

    def to_json(self):
        return {"top": self.top, "bottom": self.bottom,
                "blocks": [[_point_name(p) for p in b] for b in self.blocks]}

    @classmethod
    def from_json(cls, obj):
        return make_partition(obj["top"], obj["bottom"],
                              [[_parse_point(p) for p in b] for b in obj["blocks"]])


def make_partition(top, bottom, blocks):
    blocks = [tuple(sorted(b)) for b in blocks if b]
    pts = sorted(p for b in blocks for p in b)
    expected = [(TOP, i) for i in range(1, top + 1)] + [(BOTTOM, i) for i in range(1, bottom + 1)]
    if pts != expected:
        raise ValueError("blocks must partition the points")
    return SetPartition(top, bottom, tuple(sorted(blocks)))


class PartitionMorphism:
    __slots__ = ("top", "bottom", "terms")

    def __init__(self, top, bottom, terms=None):
        self.top = top
        self.bottom = bottom
        self.terms = {}
        for p, c in (terms or {}).items():
            c = LFrac.coerce(c)
            if c:
                self.terms[p] = self.terms.get(p, LFrac(0)) + c
        self.terms = {p: c for p, c in self.terms.items() if c}

    @classmethod
    def single(cls, part, coeff=1):
        return cls(part.top, part.bottom, {part: coeff})

    def __add__(self, other):
        if (self.top, self.bottom) != (other.top, other.bottom):
            raise ArityMismatch("arities differ")
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, LFrac(0)) + c
        return PartitionMorphism(self.top, self.bottom, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = LFrac.coerce(c)
        return PartitionMorphism(self.top, self.bottom, {p: v * c for p, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, PartitionMorphism):
            return NotImplemented
        return (self.top, self.bottom, self.terms) == (other.top, other.bottom, other.terms)

    def __hash__(self):
        return hash((self.top, self.bottom, frozenset(self.terms.items())))

    def scalar_value(self):
        if self.top or self.bottom:
            raise ArityMismatch("not a scalar")
        return self.terms.get(SetPartition(0, 0, ()), LFrac(0))

    def __repr__(self):
        return "PartitionMorphism(%d->%d: %s)" % (
            self.top, self.bottom,
            " + ".join("%s*%s" % (c, [[_point_name(q) for q in b] for b in p.blocks])
                       for p, c in self.terms.items()) or "0")


def _compose_partitions(pg, pf):
    """Join pf (top -> middle) with pg (middle -> bottom); count middle-only blocks."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    # tag points by row: 0 top of f, 1 middle, 2 bottom of g
    for b in pf.blocks:
        pts = [(0, i) if k == TOP else (1, i) for k, i in b]
        for p in pts:
            parent.setdefault(p, p)
        for p in pts[1:]:
            union(pts[0], p)
    for b in pg.blocks:
        pts = [(1, i) if k == TOP else (2, i) for k, i in b]
        for p in pts:
            parent.setdefault(p, p)
        for p in pts[1:]:
            union(pts[0], p)
    groups = {}
    for p in parent:
        groups.setdefault(find(p), []).append(p)
    loops = 0
    blocks = []
    for pts in groups.values():
        outer = [(TOP, i) if r == 0 else (BOTTOM, i) for r, i in pts if r != 1]
        if outer:
            blocks.append(outer)
        else:
            loops += 1
    return make_partition(pf.top, pg.bottom, blocks), loops


T = Poly.var("t")


def pcompose(g, f):
    """g after f."""
    if f.bottom != g.top:
        raise ArityMismatch("cannot compose %d->%d after %d->%d" % (g.top, g.bottom, f.top, f.bottom))
    out = {}
    for pf, cf in f.terms.items():
        for pg, cg in g.terms.items():
            part, loops = _compose_partitions(pg, pf)
            c = cf * cg * LFrac(T ** loops)
            out[part] = out.get(part, LFrac(0)) + c
    return PartitionMorphism(f.top, g.bottom, out)


def pcompose_all(*fs):
    acc = fs[-1]
    for f in reversed(fs[:-1]):
        acc = pcompose(f, acc)
    return acc


def ptensor(f, g):
    out = {}
    for pf, cf in f.terms.items():
        for pg, cg in g.terms.items():
            shifted = [[(k, i + (f.top if k == TOP else f.bottom)) for k, i in b] for b in pg.blocks]
            part = make_partition(f.top + g.top, f.bottom + g.bottom, list(pf.blocks) + shifted)
            out[part] = out.get(part, LFrac(0)) + cf * cg
    return PartitionMorphism(f.top + g.top, f.bottom + g.bottom, out)


def pidentity(n):
    return PartitionMorphism.single(
        make_partition(n, n, [[(TOP, i), (BOTTOM, i)] for i in range(1, n + 1)]))


def one_block(top, bottom, coeff=1):
    pts = [(TOP, i) for i in range(1, top + 1)] + [(BOTTOM, i) for i in range(1, bottom + 1)]
    return PartitionMorphism.single(make_partition(top, bottom, [pts]), coeff)


@dataclass(frozen=True)
class FrobeniusData:
    u: PartitionMorphism
    m: PartitionMorphism
    eps: PartitionMorphism
    delta: PartitionMorphism
    phi: PartitionMorphism
    theta: PartitionMorphism
    tau: PartitionMorphism


def frobenius_A_pm(sign):
    """The structure maps of A_+ (sign = +1) or A_- (sign = -1)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    lam = Poly.var("lambda")
    u = one_block(0, 1)
    tau = PartitionMorphism.single(make_partition(2, 2, [[(TOP, 1), (BOTTOM, 2)], [(TOP, 2), (BOTTOM, 1)]]))
    return FrobeniusData(
        u=u,
        m=one_block(2, 1),
        eps=one_block(1, 0, LFrac(1, 1)),
        delta=one_block(1, 2, lam),
        phi=pidentity(1),
        theta=u.scale(Poly.var("s") * sign),
        tau=tau,
    )


def handle_and_crosscap(A):
    x = pcompose(A.m, A.delta)
    y = pcompose(A.m, ptensor(A.theta, pidentity(1)))
    return x, y


def evaluate_A_pm(sign, n):
    """(alpha_n, beta_n, gamma_n) of A_+ or A_- as LFracs in s and t."""
    A = frobenius_A_pm(sign)
    x, y = handle_and_crosscap(A)
    vals = []
    for i in range(3):
        chain = [A.eps] + [x] * n + [y] * i + [A.u]
        vals.append(pcompose_all(*chain).scalar_value())
    return tuple(vals)


def hom_dim_deligne(n):
    return bell(n)


def partitions_of_points(bottom):
    """All partitions of b1..b<bottom> as 0 -> bottom diagrams."""
    return [make_partition(0, bottom, [[(BOTTOM, i) for i in b] for b in part])
            for part in set_partitions(bottom)]
