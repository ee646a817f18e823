"""Images of normal-form diagrams in the interpolation categories.

For the orientable quotient, a diagram 0 -> m lands in S_t(Rep Z2): each
orientable piece on a block b goes to the standard basis vector indexed by
the block and its mark class, and the pieces multiply.

For the full skein quotient the target object is (A + A_+ + A_-)^m.  Every
output slot is sent to one of the three summands; a piece contributes only
when all of its slots go to the same summand, with

    orientable piece on k slots -> (delta class, lambda^(k-1), lambda^(k-1))
    one crosscap on k slots    -> (0, s^(2k-1), -s^(2k-1))
    two crosscaps on k slots   -> (0, lambda^k, lambda^k)
"""

from itertools import product
from math import factorial

from .errors import UnreducedGenus
from .scalar import ONE, ZERO, Poly, poly_divexact, poly_subs, rank_rational
from .spanning import MarkClass, bell
from .surfaces import OUT
from .wreath import StHomElement, st_hom_dim

OCOB, SUCOB = "OCob", "SUCob"
WREATH, PLUS, MINUS = "w", "+", "-"


def f_image_xi(n, cls):
    """One block on [n] carrying delta_J + delta_{J^c}."""
    if not isinstance(cls, MarkClass):
        cls = MarkClass(n, tuple(cls))
    block = tuple(range(1, n + 1))
    return StHomElement(n, {((block,), (cls.rep,)): 1})


def _block_and_class(comp):
    block = tuple(i for k, i in comp.boundary if k == OUT)
    local = {slot: pos for pos, slot in enumerate(comp.boundary, start=1)}
    return block, tuple(local[s] for s in comp.marks)


def _check(d):
    if d.n_in:
        raise ValueError("images are defined on diagrams 0 -> m")
    for c in d.components:
        if c.genus:
            raise UnreducedGenus("reduce handles before taking images")


def component_images(comp):
    """(wreath coefficient, plus coefficient, minus coefficient) of one piece."""
    k = len(comp.boundary)
    lam = Poly.var("lambda")
    s = Poly.var("s")
    if comp.crosscaps == 0:
        return ONE, lam ** (k - 1), lam ** (k - 1)
    if comp.crosscaps == 1:
        odd = s ** (2 * k - 1)
        return ZERO, odd, -odd
    return ZERO, lam ** k, lam ** k


class TripleImage:
    """Coordinates in Hom(1, (A + A_+ + A_-)^m).

    A key is ``(summands, wreath_blocks, wreath_classes, plus_blocks,
    minus_blocks)`` where ``summands`` assigns each output slot to a summand.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def part(self, summand):
        """The coordinates with every slot sent to one summand."""
        want = (summand,) * self.m
        return {k[1:]: v for k, v in self.terms.items() if k[0] == want}

    def __eq__(self, other):
        return isinstance(other, TripleImage) and (self.m, self.terms) == (other.m, other.terms)

    def __repr__(self):
        return "TripleImage(%d, %d terms)" % (self.m, len(self.terms))


def f_image_diagram(d, quotient=SUCOB):
    _check(d)
    m = d.n_out
    if quotient == OCOB:
        if any(c.crosscaps for c in d.components):
            return StHomElement(m)
        blocks, classes = [], []
        for c in d.components:
            b, cl = _block_and_class(c)
            blocks.append(b)
            classes.append(cl)
        return StHomElement(m, {(tuple(blocks), tuple(classes)): 1})
    pieces = [(c, _block_and_class(c), component_images(c)) for c in d.components]
    terms = {}
    for choice in product(range(3), repeat=len(pieces)):
        coeff = ONE
        summands = [None] * m
        wb, wc, pb, mb = [], [], [], []
        for (comp, (block, cls), images), which in zip(pieces, choice):
            coeff = coeff * images[which]
            if not coeff:
                break
            for i in block:
                summands[i - 1] = (WREATH, PLUS, MINUS)[which]
            if which == 0:
                wb.append(block)
                wc.append(cls)
            elif which == 1:
                pb.append(block)
            else:
                mb.append(block)
        if not coeff:
            continue
        key = (tuple(summands), tuple(wb), tuple(wc), tuple(pb), tuple(mb))
        terms[key] = terms.get(key, ZERO) + coeff
    return TripleImage(m, terms)


def _image_terms(morphism, quotient):
    out = {}
    for d, c in morphism.terms.items():
        img = f_image_diagram(d, quotient)
        for k, v in img.terms.items():
            v = v.num if hasattr(v, "num") else v
            out[k] = out.get(k, ZERO) + c * v
    return {k: v for k, v in out.items() if v}


def image_vectors(family, quotient):
    rows = [_image_terms(f, quotient) for f in family]
    keys = sorted({k for r in rows for k in r}, key=repr)
    return [[r.get(k, ZERO) for k in keys] for r in rows]


def poly_rank(rows):
    """Rank over the fraction field by fraction-free echelon elimination."""
    rows = [list(r) for r in rows if any(x for x in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank, col, prev = 0, 0, ONE
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        pc = p[col]
        for i in range(rank + 1, len(rows)):
            r = rows[i]
            rc = r[col]
            rows[i] = [poly_divexact(a * pc - rc * b, prev) for a, b in zip(r, p)]
        prev = pc
        rank += 1
        col += 1
    return rank


def rank_of_images(family, quotient=SUCOB, point=None):
    """Rank of the image vectors; exact over Q(s, t) unless ``point`` is given."""
    rows = image_vectors(family, quotient)
    if point is None:
        return poly_rank(rows)
    return rank_rational([[poly_subs(x, point).const_value() for x in r] for r in rows])


def _multinomial(m, parts):
    out = factorial(m)
    for p in parts:
        out //= factorial(p)
    return out


def target_hom_dim(m):
    """Dimension of Hom(1, (A + A_+ + A_-)^m) in the product category."""
    total = 0
    for a in range(m + 1):
        for b in range(m - a + 1):
            c = m - a - b
            total += _multinomial(m, (a, b, c)) * st_hom_dim(a) * bell(b) * bell(c)
    return total
