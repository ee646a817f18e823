"""Spanning families of Hom(0, m) and the counting formulas around them."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb

from .cobordism import Morphism, make_diagram
from .surfaces import OUT, make_component


@dataclass(frozen=True, order=True)
class MarkClass:
    """A subset J of {1..m} up to complement, stored as the member avoiding 1."""

    m: int
    rep: tuple = ()

    def __post_init__(self):
        rep = tuple(sorted(set(self.rep)))
        if rep and (rep[0] < 1 or rep[-1] > self.m):
            raise ValueError("mark outside 1..%d" % self.m)
        if 1 in rep:
            rep = tuple(i for i in range(1, self.m + 1) if i not in rep)
        object.__setattr__(self, "rep", rep)

    def complement(self):
        return tuple(i for i in range(1, self.m + 1) if i not in self.rep)


def mark_classes(m):
    """All of R_m in subset-lex order: 2^(m-1) classes."""
    if m < 1:
        return []
    pool = list(range(2, m + 1))
    subsets = [c for k in range(len(pool) + 1) for c in combinations(pool, k)]
    return [MarkClass(m, s) for s in sorted(subsets)]


# set partitions

def set_partitions(m):
    """Partitions of {1..m} as tuples of blocks, in restricted-growth order."""
    if m == 0:
        return [()]
    out = []

    def grow(rgs, top):
        if len(rgs) == m:
            blocks = [[] for _ in range(top + 1)]
            for i, b in enumerate(rgs, start=1):
                blocks[b].append(i)
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in range(top + 2):
            grow(rgs + [b], max(top, b))

    grow([0], 0)
    return out


@lru_cache(maxsize=None)
def stirling2(n, k):
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n):
    return sum(stirling2(n, k) for k in range(n + 1))


# decorated partitions

XI, THETA, THETA_TWO = "xi", "theta", "theta2"


@dataclass(frozen=True)
class Decoration:
    kind: str
    cls: tuple = ()  # mark class representative in block-local numbering


def block_decorations(size, with_theta):
    decos = [Decoration(XI, c.rep) for c in mark_classes(size)]
    if with_theta:
        decos += [Decoration(THETA), Decoration(THETA_TWO)]
    return decos


def _component(block, deco, genus=0):
    slots = [(OUT, i) for i in block]
    if deco.kind == XI:
        marks = [(OUT, block[j - 1]) for j in deco.cls]
        return make_component(genus, 0, slots, marks)
    return make_component(genus, 1 if deco.kind == THETA else 2, slots)


@dataclass(frozen=True)
class DecoratedPartition:
    partition: tuple
    decorations: tuple

    @property
    def m(self):
        return sum(len(b) for b in self.partition)

    def morphism(self):
        comps = [_component(b, d) for b, d in zip(self.partition, self.decorations)]
        return Morphism.single(make_diagram(0, self.m, comps))


def decorated_partitions(m, with_theta):
    out = []
    for part in set_partitions(m):
        options = [block_decorations(len(b), with_theta) for b in part]
        for decos in product(*options):
            out.append(DecoratedPartition(part, decos))
    return out


def xi(m, cls=None, genus=0):
    """One orientable piece on all m outputs, reversal marks from ``cls``."""
    if m < 1:
        raise ValueError("m must be positive")
    if cls is None:
        cls = MarkClass(m)
    elif not isinstance(cls, MarkClass):
        cls = MarkClass(m, tuple(cls))
    comp = _component(tuple(range(1, m + 1)), Decoration(XI, cls.rep), genus)
    return Morphism.single(make_diagram(0, m, [comp]))


def theta_m(m, crosscaps):
    """One piece on all m outputs with one or two crosscaps."""
    if m < 1 or crosscaps not in (1, 2):
        raise ValueError("need m >= 1 and crosscaps in {1, 2}")
    kind = THETA if crosscaps == 1 else THETA_TWO
    comp = _component(tuple(range(1, m + 1)), Decoration(kind))
    return Morphism.single(make_diagram(0, m, [comp]))


def spanning_S(m):
    return [dp.morphism() for dp in decorated_partitions(m, False)]


def spanning_T(m):
    return [dp.morphism() for dp in decorated_partitions(m, True)]


def xi_family(m, genus=0):
    return [xi(m, c, genus) for c in mark_classes(m)]


@dataclass(frozen=True)
class DimCounts:
    m: int
    stirling_sum: int
    t_size: int
    bell: int
    lambda_top: int
    alpha_top: int

    def row(self):
        return [self.m, self.stirling_sum, self.t_size, self.bell,
                self.lambda_top, self.alpha_top]


DIM_COLUMNS = ("m", "stirling_sum", "t_size", "bell", "lambda_top", "alpha_top")


def t_size(m):
    total = 0
    for part in set_partitions(m):
        prod = 1
        for b in part:
            prod *= 2 ** (len(b) - 1) + 2
        total += prod
    return total


def dim_counts(m):
    terms = [(l, 2 ** (m - l) * stirling2(m, l)) for l in range(m + 1)]
    return DimCounts(
        m=m,
        stirling_sum=sum(v for _, v in terms),
        t_size=t_size(m),
        bell=bell(m),
        lambda_top=sum((m - l) * v for l, v in terms if l < m),
        alpha_top=sum(l * v for l, v in terms),
    )


def multinomial(*parts):
    total = 0
    out = 1
    for p in parts:
        total += p
        out *= comb(total, p)
    return out
