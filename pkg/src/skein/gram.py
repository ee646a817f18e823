"""Gram matrices of spanning families and their determinants."""

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .cobordism import bilinear_form, socob_context, sucob_context, vucob_context
from .errors import ArityMismatch
from .scalar import (Poly, PolyMatrix, det_bareiss, det_rational, extract_linear_factors,
                     parse_poly, poly_eval, rank_rational, seeded_rng)
from .sequences import term
from .spanning import spanning_S, spanning_T, xi_family

SYMBOLIC_LIMIT = 32
PARAMS = ("s", "a0", "b0", "g0")


def worker_count():
    try:
        return max(1, int(os.environ.get("SKEIN_THREADS", "1")))
    except ValueError:
        return 1


def gram_matrix(family, ctx):
    if not family:
        return PolyMatrix(0, 0, [])
    m = family[0].n_out
    if any(f.n_in or f.n_out != m for f in family):
        raise ArityMismatch("gram family must consist of morphisms 0 -> %d" % m)
    n = len(family)
    entries = [None] * (n * n)
    for i in range(n):
        for j in range(i, n):
            v = bilinear_form(family[i], family[j], ctx)
            entries[i * n + j] = v
            entries[j * n + i] = v
    return PolyMatrix(n, n, entries)


def pattern_matrix(n, a, b):
    return PolyMatrix(n, n, [a if i == j else b for i in range(n) for j in range(n)])


def pattern_det(n, a, b):
    """det of the n x n matrix with a on the diagonal and b elsewhere."""
    if n < 1:
        raise ValueError("n must be positive")
    return (a - b) ** (n - 1) * (a + b * (n - 1))


def xi_gram_det(m, genus=0, ctx=None):
    """Determinant of the Gram matrix of all xi(m, J, genus)."""
    if m < 2:
        raise ValueError("m must be at least 2")
    ctx = ctx or vucob_context()
    det = det_bareiss(gram_matrix(xi_family(m, genus), ctx))
    a = term(ctx.seqs.alpha, 2 * genus + m - 1)
    b = term(ctx.seqs.gamma, 2 * genus + m - 2)
    expected = pattern_det(2 ** (m - 1), a, b)
    if det != expected:
        raise ArithmeticError("xi Gram determinant disagrees with the pattern law")
    return det


def candidate_factors(m):
    """s, a0, b0, g0 and the shifted linear forms for k < m."""
    out = [Poly.var(v) for v in PARAMS]
    for k in range(m):
        c = 2 * k
        out += [parse_poly("lambda * a0 - g0 - %d" % c),
                parse_poly("g0 + s * b0 - %d" % c),
                parse_poly("g0 - s * b0 - %d" % c)]
    return out


def in_excluded_locus(point):
    s, a0, b0, g0 = (Fraction(point[v]) for v in PARAMS)
    if 0 in (s, a0, b0, g0):
        return True
    for v in (s * s * a0 - g0, g0 + s * b0, g0 - s * b0):
        if v >= 0 and v.denominator == 1 and v.numerator % 2 == 0:
            return True
    return False


def generic_point(rng, lo=-9, hi=9):
    """Random integer parameters off the excluded locus (t is fixed at 1)."""
    while True:
        pt = {v: rng.randint(lo, hi) for v in PARAMS}
        if not in_excluded_locus(pt):
            pt["t"] = 1
            return pt


def _rat(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _det_at(args):
    matrix, point = args
    return det_rational(matrix.evaluate(point))


def sampled_dets(matrix, points):
    jobs = [(matrix, p) for p in points]
    workers = worker_count()
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_det_at, jobs))
    return [_det_at(j) for j in jobs]


def _line(cand_index, m, base, delta):
    """A point where the chosen candidate equals delta and the rest stay generic."""
    pt = dict(base)
    if cand_index < 4:
        pt[PARAMS[cand_index]] = delta
        return pt
    k, kind = divmod(cand_index - 4, 3)
    s, a0, b0 = pt["s"], pt["a0"], pt["b0"]
    if kind == 0:
        pt["g0"] = s * s * a0 - 2 * k - delta
    elif kind == 1:
        pt["g0"] = 2 * k - s * b0 + delta
    else:
        pt["g0"] = 2 * k + s * b0 + delta
    return pt


def estimate_orders(matrix, m, rng, delta=Fraction(1, 10 ** 4)):
    """Vanishing order of det along a line transverse to each candidate.

    Two determinants at delta and delta/2 give order ~ log2 |D(delta)/D(delta/2)|.
    """
    base = {v: Fraction(rng.choice([1, -1]) * rng.randint(2, 9), rng.choice([7, 11, 13]))
            for v in PARAMS}
    base["t"] = 1
    cands = candidate_factors(m)
    jobs = []
    for i in range(len(cands)):
        jobs.append(_line(i, m, base, delta))
        jobs.append(_line(i, m, base, delta / 2))
    values = sampled_dets(matrix, jobs)
    out = []
    for i, cand in enumerate(cands):
        d1, d2 = values[2 * i], values[2 * i + 1]
        if d1 == 0 or d2 == 0:
            est = float("inf")
        else:
            est = math.log(abs(Fraction(d1) / Fraction(d2))) / math.log(2)
        out.append((cand, est))
    return out


@dataclass
class GramReport:
    family: str
    m: int
    matrix: PolyMatrix
    mode: str
    genus: int = 0
    det: Poly = None
    factors: list = field(default_factory=list)  # (Poly, multiplicity)
    residual: Poly = None
    samples: list = field(default_factory=list)  # (point, value)
    order_estimates: list = field(default_factory=list)  # (Poly, float)

    def nonzero_samples(self):
        return sum(1 for _, v in self.samples if v != 0)

    def to_json(self):
        return {
            "family": self.family,
            "m": self.m,
            "genus": self.genus,
            "mode": self.mode,
            "size": self.matrix.rows,
            "matrix": [[str(e) for e in row] for row in self.matrix.to_rows()],
            "det": None if self.det is None else str(self.det),
            "factors": [{"factor": str(f), "multiplicity": k} for f, k in self.factors],
            "residual": None if self.residual is None else str(self.residual),
            "samples": [{"point": {k: _rat(v) for k, v in sorted(p.items())}, "det": _rat(v)}
                        for p, v in self.samples],
            "order_estimates": [{"factor": str(f), "order": round(e, 6) if math.isfinite(e) else None}
                                for f, e in self.order_estimates],
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, obj):
        rows = [[parse_poly(e) for e in row] for row in obj["matrix"]]
        return cls(
            family=obj["family"], m=obj["m"], genus=obj.get("genus", 0), mode=obj["mode"],
            matrix=PolyMatrix.from_rows(rows) if rows else PolyMatrix(0, 0, []),
            det=None if obj["det"] is None else parse_poly(obj["det"]),
            factors=[(parse_poly(f["factor"]), f["multiplicity"]) for f in obj["factors"]],
            residual=None if obj["residual"] is None else parse_poly(obj["residual"]),
            samples=[({k: Fraction(v) for k, v in s["point"].items()}, Fraction(s["det"]))
                     for s in obj["samples"]],
            order_estimates=[(parse_poly(o["factor"]),
                              float("inf") if o["order"] is None else o["order"])
                             for o in obj["order_estimates"]],
        )

    def to_latex(self):
        rows = [" & ".join(poly_to_latex(e) for e in row) for row in self.matrix.to_rows()]
        body = " \\\\\n".join(rows)
        out = "\\begin{bmatrix}\n" + body + "\n\\end{bmatrix}"
        if self.det is not None:
            out += "\n% det = " + poly_to_latex(self.det)
        return out

    def factor_string(self):
        parts = []
        for f, k in self.factors:
            if f == Poly.var("s") and k and k % 2 == 0:
                parts.append("lambda^%d" % (k // 2) if k > 2 else "lambda")
            elif k:
                parts.append("(%s)^%d" % (f, k) if k > 1 else "(%s)" % f)
        if self.residual is not None and self.residual != 1:
            parts.insert(0, "(%s)" % self.residual)
        return " * ".join(parts) or "1"


_LATEX_NAMES = {"lambda": "\\lambda", "a0": "\\alpha_0", "b0": "\\beta_0",
                "g0": "\\gamma_0", "s": "\\sqrt{\\lambda}", "t": "t"}


def poly_to_latex(p):
    out = []
    for tok in str(p).split(" "):
        if tok == "*":
            continue
        base, _, exp = tok.partition("^")
        if base in _LATEX_NAMES:
            tok = _LATEX_NAMES[base] + ("^{%s}" % exp if exp else "")
        out.append(tok)
    return " ".join(out)


def family_members(family, m, genus=0):
    if family == "S":
        return spanning_S(m)
    if family == "T":
        return spanning_T(m)
    if family == "Xi":
        return xi_family(m, genus)
    raise ValueError("unknown family %r" % family)


def default_context(family, seqs=None):
    if family == "S":
        return socob_context(seqs)
    if family == "T":
        return sucob_context(seqs)
    return vucob_context(seqs)


def gram_report(family, m, mode="symbolic", genus=0, ctx=None, with_det=True,
                samples=10, rng=None, estimate=False):
    ctx = ctx or default_context(family)
    rng = rng or seeded_rng(0)
    matrix = gram_matrix(family_members(family, m, genus), ctx)
    if mode == "symbolic" and matrix.rows > SYMBOLIC_LIMIT:
        mode = "sampled"
    rep = GramReport(family, m, matrix, mode, genus)
    if not with_det:
        return rep
    if mode == "symbolic":
        rep.det = det_bareiss(matrix)
        cands = candidate_factors(m) if family == "T" else _orientable_candidates(m)
        mult, rest = extract_linear_factors(rep.det, cands)
        rep.factors = [(c, mult[c]) for c in cands]
        rep.residual = rest
    else:
        points = [generic_point(rng) for _ in range(samples)]
        rep.samples = list(zip(points, sampled_dets(matrix, points)))
        if estimate:
            rep.order_estimates = estimate_orders(matrix, m, rng)
    return rep


def _orientable_candidates(m):
    out = [Poly.var(v) for v in PARAMS]
    out += [parse_poly("lambda * a0 - %d" % (2 * k)) for k in range(1, m)]
    return out


def conjecture_check(m, mode="symbolic", samples=10, rng=None, estimate=True):
    """Factor the T_m Gram determinant against the predicted linear forms,
    or sample it at generic points when it is too large."""
    return gram_report("T", m, mode, samples=samples, rng=rng, estimate=estimate)


def numeric_rank(matrix, point):
    return rank_rational(matrix.evaluate(point))


def det_matches_samples(det, matrix, points):
    """Evaluation commutes with det: compare against integer determinants."""
    return all(poly_eval(det, p) == v for p, v in zip(points, sampled_dets(matrix, points)))
