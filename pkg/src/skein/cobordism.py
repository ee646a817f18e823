"""Normal-form cobordisms, their composition by gluing, and closing them up.

A Diagram is a set of canonical surface pieces whose boundaries partition the
slots ``in:1..n_in`` and ``out:1..n_out``.  A Morphism is a finite linear
combination of Diagrams with Poly coefficients.  Every operation returns
normal forms directly; there is no rewriting engine.
"""

import json
import re
from dataclasses import dataclass, field, replace
from itertools import product

from .errors import ArityMismatch, SlotMissing
from .scalar import ONE, ZERO, Poly
from .sequences import common_recurrence, geometric_triple, is_zero_spec, orientable_triple
from .surfaces import (IN, OUT, SurfaceComponent, canonicalize, closed_class,
                       evaluate_closed, make_component)

# scratch slot kinds used while gluing
_LEFT, _RIGHT = 2, 3


def _min_slot(c):
    return c.boundary[0]


@dataclass(frozen=True)
class Diagram:
    n_in: int
    n_out: int
    components: tuple

    def to_json(self):
        return {"n_in": self.n_in, "n_out": self.n_out,
                "components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, obj):
        return make_diagram(obj["n_in"], obj["n_out"],
                            [SurfaceComponent.from_json(c) for c in obj["components"]])

    def has_crosscaps(self):
        return any(c.crosscaps for c in self.components)


def make_diagram(n_in, n_out, components):
    comps = [canonicalize(c) for c in components]
    seen = []
    for c in comps:
        if not c.boundary:
            raise ValueError("closed components cannot sit inside a diagram")
        seen.extend(c.boundary)
    expected = [(IN, i) for i in range(1, n_in + 1)] + [(OUT, i) for i in range(1, n_out + 1)]
    if sorted(seen) != expected:
        raise ValueError("component boundaries must partition the slots")
    return Diagram(n_in, n_out, tuple(sorted(comps, key=_min_slot)))


class Morphism:
    """A Poly-linear combination of diagrams with shared arity."""

    __slots__ = ("n_in", "n_out", "terms")

    def __init__(self, n_in, n_out, terms=None):
        self.n_in = n_in
        self.n_out = n_out
        self.terms = {}
        for d, c in (terms or {}).items():
            if (d.n_in, d.n_out) != (n_in, n_out):
                raise ArityMismatch("diagram arity differs from morphism arity")
            c = Poly.coerce(c)
            if c:
                self.terms[d] = c

    @classmethod
    def single(cls, diagram, coeff=ONE):
        return cls(diagram.n_in, diagram.n_out, {diagram: coeff})

    def _check(self, other):
        if (self.n_in, self.n_out) != (other.n_in, other.n_out):
            raise ArityMismatch("arities differ: %d->%d vs %d->%d"
                                % (self.n_in, self.n_out, other.n_in, other.n_out))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, ZERO) + c
        return Morphism(self.n_in, self.n_out, out)

    def __neg__(self):
        return Morphism(self.n_in, self.n_out, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Poly.coerce(c)
        return Morphism(self.n_in, self.n_out, {d: v * c for d, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.n_in, self.n_out, self.terms) == (other.n_in, other.n_out, other.terms)

    def __hash__(self):
        return hash((self.n_in, self.n_out, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def scalar_value(self):
        """Coefficient of the empty diagram of a 0 -> 0 morphism."""
        if self.n_in or self.n_out:
            raise ArityMismatch("not an endomorphism of the unit object")
        return self.terms.get(Diagram(0, 0, ()), ZERO)

    def to_json(self):
        items = sorted(self.terms.items(), key=lambda it: json.dumps(it[0].to_json()))
        return [{"coeff": str(c), "diagram": d.to_json()} for d, c in items]

    @classmethod
    def from_json(cls, obj, n_in=None, n_out=None):
        terms = {}
        for item in obj:
            d = Diagram.from_json(item["diagram"])
            terms[d] = terms.get(d, ZERO) + Poly.coerce(item["coeff"])
        if not obj:
            return cls(n_in or 0, n_out or 0)
        d0 = Diagram.from_json(obj[0]["diagram"])
        return cls(d0.n_in, d0.n_out, terms)

    def __repr__(self):
        parts = ["%s*%s" % (c, _describe(d)) for d, c in self.terms.items()]
        return "Morphism(%d->%d: %s)" % (self.n_in, self.n_out, " + ".join(parts) or "0")


def _describe(d):
    out = []
    for c in d.components:
        slots = ",".join(("i" if k == IN else "o") + str(i) for k, i in c.boundary)
        marks = ",".join(("i" if k == IN else "o") + str(i) for k, i in c.marks)
        out.append("[g%d c%d %s%s]" % (c.genus, c.crosscaps, slots, " m" + marks if marks else ""))
    return "".join(out) or "[]"


@dataclass(frozen=True)
class SkeinContext:
    """How to evaluate: the sequence triple, whether to impose the handle
    relation, and whether theta is set to zero."""

    seqs: object
    theta_is_zero: bool = False
    reduce: bool = True
    K: int = field(init=False)
    coeffs: tuple = field(init=False)

    def __post_init__(self):
        if self.theta_is_zero and not all(is_zero_spec(sp) for sp in (self.seqs.beta, self.seqs.gamma)):
            raise ValueError("with theta = 0 the beta and gamma sequences must vanish")
        rec = common_recurrence(self.seqs)
        object.__setattr__(self, "K", rec.K)
        object.__setattr__(self, "coeffs", rec.coeffs)

    def unreduced(self):
        return replace(self, reduce=False)


def vucob_context(seqs=None):
    return SkeinContext(seqs or geometric_triple(), reduce=False)


def sucob_context(seqs=None):
    return SkeinContext(seqs or geometric_triple())


def socob_context(seqs=None):
    return SkeinContext(seqs or orientable_triple(), theta_is_zero=True)


# gluing

def glue(components, pairs, seqs):
    """Glue slot pairs across a list of components.

    Returns ``(open_components, scalar)``; components whose boundary empties
    are evaluated with ``seqs`` and multiplied into the scalar.
    """
    live = {}
    owner = {}
    for idx, c in enumerate(components):
        live[idx] = [c.genus, c.crosscaps, set(c.boundary), set(c.marks)]
        for s in c.boundary:
            owner[s] = idx
    scalar = ONE
    for a, b in pairs:
        if a not in owner or b not in owner or a == b:
            raise SlotMissing("cannot glue %r to %r" % (a, b))
        ia, ib = owner.pop(a), owner.pop(b)
        A = live[ia]
        if ia != ib:
            B = live.pop(ib)
            A[0] += B[0]
            A[1] += B[1]
            if A[1]:
                A[3] = set()
            else:
                bmarks = B[3]
                if (a in A[3]) != (b in bmarks):
                    bmarks = B[2] - bmarks
                A[3] |= bmarks
            A[2] |= B[2]
            for s in B[2]:
                if s in owner:
                    owner[s] = ia
        elif A[1] or (a in A[3]) == (b in A[3]):
            A[0] += 1
        else:
            # an orientable piece closed up with a twist
            A[1] += 2
            A[3] = set()
        A[2] -= {a, b}
        A[3] -= {a, b}
        if not A[2]:
            del live[ia]
            scalar = scalar * evaluate_closed(closed_class(A[0], A[1]), seqs)
            if not scalar:
                return [], ZERO
    rest = [canonicalize(make_component(g, c, bnd, marks)) for g, c, bnd, marks in live.values()]
    return rest, scalar


def glue_pair(d, slot_a, slot_b, seqs):
    """Glue two slots of a single diagram; slot labels are left as they are."""
    comps, scalar = glue(d.components, [(slot_a, slot_b)], seqs)
    return comps, scalar


def _relabel(c, fn):
    return SurfaceComponent(c.genus, c.crosscaps, tuple(fn(s) for s in c.boundary),
                            tuple(fn(s) for s in c.marks))


def _finish(n_in, n_out, comps):
    return Diagram(n_in, n_out, tuple(sorted((canonicalize(c) for c in comps), key=_min_slot)))


def compose(g, f, ctx):
    """g after f."""
    if f.n_out != g.n_in:
        raise ArityMismatch("cannot compose %d->%d after %d->%d"
                            % (g.n_in, g.n_out, f.n_in, f.n_out))
    mid = f.n_out
    pairs = [((_LEFT, i), (_RIGHT, i)) for i in range(1, mid + 1)]
    to_left = lambda s: (_LEFT, s[1]) if s[0] == OUT else s
    to_right = lambda s: (_RIGHT, s[1]) if s[0] == IN else s
    out = {}
    for df, cf in f.terms.items():
        left = [_relabel(c, to_left) for c in df.components]
        for dg, cg in g.terms.items():
            right = [_relabel(c, to_right) for c in dg.components]
            comps, scalar = glue(left + right, pairs, ctx.seqs)
            if not scalar:
                continue
            d = _finish(f.n_in, g.n_out, comps)
            out[d] = out.get(d, ZERO) + cf * cg * scalar
    res = Morphism(f.n_in, g.n_out, out)
    return _post(res, ctx)


def _post(f, ctx):
    if ctx.reduce:
        f = skein_reduce(f, ctx)
    if ctx.theta_is_zero:
        f = theta_quotient(f)
    return f


def theta_quotient(f):
    return Morphism(f.n_in, f.n_out,
                    {d: c for d, c in f.terms.items() if not d.has_crosscaps()})


def compose_all(ctx, *fs):
    """compose_all(ctx, f1, f2, f3) = f1 after f2 after f3."""
    acc = fs[-1]
    for f in reversed(fs[:-1]):
        acc = compose(f, acc, ctx)
    return acc


def _genus_table(ctx, g):
    """Write genus g as a combination of genera below K."""
    table = {}
    for h in range(g + 1):
        if h < ctx.K:
            table[h] = {h: ONE}
            continue
        acc = {}
        for i, a in enumerate(ctx.coeffs, start=1):
            coeff = a if i % 2 == 1 else -a
            for low, c in table[h - i].items():
                acc[low] = acc.get(low, ZERO) + coeff * c
        table[h] = {k: v for k, v in acc.items() if v}
    return table[g]


def skein_reduce(f, ctx):
    """Apply the handle relation until every genus is below K."""
    out = {}
    for d, coeff in f.terms.items():
        if all(c.genus < ctx.K for c in d.components):
            out[d] = out.get(d, ZERO) + coeff
            continue
        options = []
        for c in d.components:
            if c.genus < ctx.K:
                options.append([(c, ONE)])
            else:
                options.append([(replace(c, genus=h), v)
                                for h, v in sorted(_genus_table(ctx, c.genus).items())])
        for choice in product(*options):
            v = coeff
            for _, cv in choice:
                v = v * cv
            nd = Diagram(d.n_in, d.n_out, tuple(c for c, _ in choice))
            out[nd] = out.get(nd, ZERO) + v
    return Morphism(f.n_in, f.n_out, out)


def tensor(f, g):
    """Disjoint union, with g's slots placed after f's."""
    shift = lambda s: (s[0], s[1] + (f.n_in if s[0] == IN else f.n_out))
    out = {}
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            comps = list(df.components) + [_relabel(c, shift) for c in dg.components]
            d = Diagram(f.n_in + g.n_in, f.n_out + g.n_out,
                        tuple(sorted(comps, key=_min_slot)))
            out[d] = out.get(d, ZERO) + cf * cg
    return Morphism(f.n_in + g.n_in, f.n_out + g.n_out, out)


def tensor_all(*fs):
    acc = identity(0)
    for f in fs:
        acc = tensor(acc, f)
    return acc


def trace(f, ctx):
    """Close each input circle onto the matching output circle."""
    if f.n_in != f.n_out:
        raise ArityMismatch("trace needs an endomorphism")
    pairs = [((IN, i), (OUT, i)) for i in range(1, f.n_in + 1)]
    total = ZERO
    for d, c in f.terms.items():
        rest, scalar = glue(d.components, pairs, ctx.seqs)
        assert not rest
        total = total + c * scalar
    return total


def bilinear_form(f, g, ctx):
    """Glue the outputs of f to the outputs of g and evaluate."""
    if f.n_in or g.n_in or f.n_out != g.n_out:
        raise ArityMismatch("bilinear form needs two morphisms 0 -> m")
    total = ZERO
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            total = total + cf * cg * pair_diagrams(df, dg, ctx.seqs)
    return total


def pair_diagrams(df, dg, seqs):
    """The closed-surface value of two diagrams 0 -> m glued along outputs."""
    m = df.n_out
    left = [_relabel(c, lambda s: (_LEFT, s[1])) for c in df.components]
    right = [_relabel(c, lambda s: (_RIGHT, s[1])) for c in dg.components]
    pairs = [((_LEFT, i), (_RIGHT, i)) for i in range(1, m + 1)]
    rest, scalar = glue(left + right, pairs, seqs)
    assert not rest
    return scalar


# generators

def _cyl(i, j, genus=0, crosscaps=0, marked=False):
    return make_component(genus, crosscaps, [(IN, i), (OUT, j)], [(OUT, j)] if marked else [])


def _one(n_in, n_out, comps):
    return Morphism.single(make_diagram(n_in, n_out, comps))


GENERATORS = ("id", "m", "delta", "u", "eps", "tau", "phi", "theta")


def generator(name):
    if name == "id":
        return _one(1, 1, [_cyl(1, 1)])
    if name == "phi":
        return _one(1, 1, [_cyl(1, 1, marked=True)])
    if name == "m":
        return _one(2, 1, [make_component(0, 0, [(IN, 1), (IN, 2), (OUT, 1)])])
    if name == "delta":
        return _one(1, 2, [make_component(0, 0, [(IN, 1), (OUT, 1), (OUT, 2)])])
    if name == "u":
        return _one(0, 1, [make_component(0, 0, [(OUT, 1)])])
    if name == "eps":
        return _one(1, 0, [make_component(0, 0, [(IN, 1)])])
    if name == "theta":
        return _one(0, 1, [make_component(0, 1, [(OUT, 1)])])
    if name == "tau":
        return _one(2, 2, [_cyl(1, 2), _cyl(2, 1)])
    raise ValueError("unknown generator %r" % name)


def identity(n):
    return _one(n, n, [_cyl(i, i) for i in range(1, n + 1)])


def cylinder(genus=0, crosscaps=0, marked=False):
    """x^genus y^crosscaps, optionally followed by phi."""
    return _one(1, 1, [_cyl(1, 1, genus, crosscaps, marked)])


def handle_sigma(ctx):
    """x^K + sum_i (-1)^i a_i x^(K-i), left unreduced."""
    out = cylinder(ctx.K)
    for i, a in enumerate(ctx.coeffs, start=1):
        term = cylinder(ctx.K - i).scale(a)
        out = out - term if i % 2 == 1 else out + term
    return out


def end1_family(genus_bound):
    """The spanning family of End(1) used by the negligibility test."""
    fam = []
    for n in range(genus_bound + 1):
        for i in range(3):
            fam.append(cylinder(n, i))
        fam.append(cylinder(n, marked=True))
    for m in range(genus_bound + 1):
        for n in range(genus_bound + 1):
            for i in range(3):
                for j in range(3):
                    cap_in = make_component(n, j, [(IN, 1)])
                    cup_out = make_component(m, i, [(OUT, 1)])
                    fam.append(_one(1, 1, [cap_in, cup_out]))
    return fam


def negligibility_witness(f, ctx, genus_bound):
    """First z with trace(f z) != 0, or None."""
    vctx = ctx.unreduced()
    for z in end1_family(genus_bound):
        if trace(compose(f, z, vctx), vctx):
            return z
    return None


def is_negligible(f, ctx, genus_bound):
    return negligibility_witness(f, ctx, genus_bound) is None


# word language: "m . (u | id)", juxtaposition also composes

_WORD_TOKEN = re.compile(r"\s*(\(|\)|\||\.|[A-Za-z_]+)")


def parse_word(text, ctx=None):
    """Build a morphism from generator names, ``|`` for tensor and ``.`` or
    juxtaposition for composition (``f . g`` applies g first)."""
    ctx = ctx or vucob_context()
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if not m:
            raise ValueError("cannot parse word at %r" % text[pos:])
        toks.append(m.group(1))
        pos = m.end()
    state = {"i": 0}

    def peek():
        return toks[state["i"]] if state["i"] < len(toks) else None

    def take():
        tok = peek()
        state["i"] += 1
        return tok

    def comp():
        parts = [tens()]
        while peek() not in (None, ")", "|"):
            if peek() == ".":
                take()
            parts.append(tens())
        return compose_all(ctx, *parts)

    def tens():
        parts = [atom()]
        while peek() == "|":
            take()
            parts.append(atom())
        return tensor_all(*parts)

    def atom():
        tok = take()
        if tok == "(":
            inner = comp()
            if take() != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        if tok in GENERATORS:
            return generator(tok)
        raise ValueError("unexpected token %r" % tok)

    if not toks:
        raise ValueError("empty word")
    res = comp()
    if state["i"] != len(toks):
        raise ValueError("trailing input in word %r" % text)
    return res
