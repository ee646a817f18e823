"""The defining relations of the unoriented cobordism category, as word pairs.

Each entry is ``(name, lhs, rhs)`` in the word language of
:func:`skein.cobordism.parse_word`.
"""

from .cobordism import compose, parse_word, tensor, vucob_context

RELATIONS = [
    ("associativity", "m . (m | id)", "m . (id | m)"),
    ("coassociativity", "(delta | id) . delta", "(id | delta) . delta"),
    ("left unit", "m . (u | id)", "id"),
    ("right unit", "m . (id | u)", "id"),
    ("left counit", "(eps | id) . delta", "id"),
    ("right counit", "(id | eps) . delta", "id"),
    ("commutativity", "m . tau", "m"),
    ("cocommutativity", "tau . delta", "delta"),
    ("frobenius left", "(id | m) . (delta | id)", "delta . m"),
    ("frobenius right", "(m | id) . (id | delta)", "delta . m"),
    ("tau involutive", "tau . tau", "id | id"),
    ("yang-baxter", "(tau | id) . (id | tau) . (tau | id)", "(id | tau) . (tau | id) . (id | tau)"),
    ("phi involutive", "phi . phi", "id"),
    ("phi multiplicative", "phi . m", "m . (phi | phi)"),
    ("phi comultiplicative", "delta . phi", "(phi | phi) . delta"),
    ("phi unital", "phi . u", "u"),
    ("phi counital", "eps . phi", "eps"),
    ("crosscap absorbs phi", "phi . m . (theta | id)", "m . (theta | id)"),
    ("twisted handle", "m . (phi | id) . delta . u", "m . (theta | theta)"),
    ("three crosscaps", "m . delta . theta", "m . (theta | m . (theta | theta))"),
]

# naturality of the symmetry against each generator with one input
_NATURAL = ["id", "phi", "m . delta", "m . (theta | id)"]


def naturality_pairs():
    out = []
    for a in _NATURAL:
        for b in _NATURAL:
            lhs = "tau . ((%s) | (%s))" % (a, b)
            rhs = "((%s) | (%s)) . tau" % (b, a)
            out.append(("tau natural (%s, %s)" % (a, b), lhs, rhs))
    return out


def check_relations(ctx=None):
    """Return a list of (name, holds) for every relation."""
    ctx = ctx or vucob_context()
    out = []
    for name, lhs, rhs in RELATIONS + naturality_pairs():
        out.append((name, parse_word(lhs, ctx) == parse_word(rhs, ctx)))
    # naturality for the cap and cup shapes, which change arity
    tau = parse_word("tau", ctx)
    for a in ("u", "theta"):
        for b in ("u", "theta"):
            lhs = compose(tau, tensor(parse_word(a, ctx), parse_word(b, ctx)), ctx)
            rhs = tensor(parse_word(b, ctx), parse_word(a, ctx))
            out.append(("tau natural (%s, %s)" % (a, b), lhs == rhs))
    return out
