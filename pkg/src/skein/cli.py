"""Command-line front end.

    skein gram --family T --m 2 --det
    skein dims --max 5 --format csv
    skein verify --only relations
    skein evaluate --target plus --n 3

Exit status is 2 for unreadable input and 3 when a computation fails.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .checks import ALL_CHECKS, THEOREM_CHECKS, run_checks
from .cobordism import Diagram, Morphism, compose, identity, parse_word, skein_reduce
from .deligne import evaluate_A_pm
from .errors import SkeinError
from .gram import default_context, gram_report
from .scalar import seeded_rng
from .sequences import SequenceTriple
from .spanning import DIM_COLUMNS, dim_counts
from .wreath import evaluate_wreath

EXIT_PARSE, EXIT_COMPUTE = 2, 3
SEED_LIMIT = 2 ** 64


class InputError(Exception):
    pass


@dataclass
class Config:
    seqs: SequenceTriple = None  # None picks the family's own triple
    mode: str = "symbolic"
    fmt: str = "json"
    seed: int = 0
    samples: int = 10

    def __post_init__(self):
        if not 0 <= self.seed < SEED_LIMIT:
            raise InputError("seed must be a 64-bit unsigned integer")
        if self.mode not in ("symbolic", "sampled"):
            raise InputError("mode must be symbolic or sampled")

    @classmethod
    def from_json(cls, obj):
        """Accepts a bare sequence triple or {"seqs": ..., "mode": ..., ...}."""
        if "alpha" in obj:
            return cls(seqs=SequenceTriple.from_json(obj))
        kw = {k: obj[k] for k in ("mode", "seed", "samples") if k in obj}
        if "format" in obj:
            kw["fmt"] = obj["format"]
        if obj.get("seqs") is not None:
            kw["seqs"] = SequenceTriple.from_json(obj["seqs"])
        return cls(**kw)

    def to_json(self):
        return {"seqs": self.seqs and self.seqs.to_json(), "mode": self.mode, "format": self.fmt,
                "seed": self.seed, "samples": self.samples}


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read %s: %s" % (path, exc))


def load_config(args):
    try:
        cfg = Config.from_json(_read_json(args.config)) if args.config else Config()
        for attr, name in (("mode", "mode"), ("fmt", "format"), ("seed", "seed"), ("samples", "samples")):
            val = getattr(args, name, None)
            if val is not None:
                setattr(cfg, attr, val)
        cfg.__post_init__()
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("bad config: %s" % exc)
    return cfg


def _context(family, seqs):
    try:
        return default_context(family, seqs)
    except ValueError as exc:
        raise InputError("sequence config does not fit family %s: %s" % (family, exc))


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_gram(args):
    cfg = load_config(args)
    if args.family in ("S", "T") and args.genus:
        raise InputError("--genus only applies to the Xi family")
    ctx = _context(args.family, cfg.seqs)
    rep = gram_report(args.family, args.m, cfg.mode, genus=args.genus, ctx=ctx,
                      with_det=args.det or cfg.mode == "sampled", samples=cfg.samples,
                      rng=seeded_rng(cfg.seed), estimate=args.family == "T")
    if cfg.fmt == "latex":
        return rep.to_latex()
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in rep.matrix.to_rows():
            w.writerow([str(e) for e in row])
        return buf.getvalue().rstrip("\n")
    out = rep.to_json()
    if rep.det is not None:
        out["factored"] = rep.factor_string()
    return _dump(out)


def dims_rows(max_m):
    return [dict(zip(DIM_COLUMNS, dim_counts(m).row())) for m in range(max_m + 1)]


def parse_dims(text, fmt="json"):
    """Inverse of ``dims`` output, for round-trip checks."""
    if fmt == "csv":
        rows = list(csv.DictReader(io.StringIO(text)))
        return [{k: int(v) for k, v in r.items()} for r in rows]
    return json.loads(text)


def cmd_dims(args):
    if args.max < 0:
        raise InputError("--max must be non-negative")
    rows = dims_rows(args.max)
    fmt = args.format or "json"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(DIM_COLUMNS), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        head = " & ".join(DIM_COLUMNS) + " \\\\ \\hline"
        body = [" & ".join(str(r[c]) for c in DIM_COLUMNS) + " \\\\" for r in rows]
        return "\n".join(["\\begin{tabular}{%s}" % ("r" * len(DIM_COLUMNS)), head] + body
                         + ["\\end{tabular}"])
    return _dump(rows)


def cmd_verify(args):
    if args.only and args.theorem:
        raise InputError("--only and --theorem are exclusive")
    names = args.only or (THEOREM_CHECKS[args.theorem] if args.theorem else None)
    if names and any(n not in ALL_CHECKS for n in names):
        raise InputError("unknown check; choose from %s" % ", ".join(ALL_CHECKS))
    results = run_checks(names, seed=args.seed or 0)
    lines = []
    for r in results:
        obj = r.to_json()
        if not args.timings:
            obj.pop("seconds")
        lines.append(json.dumps(obj, sort_keys=True, default=str))
    return "\n".join(lines), 0 if all(r.passed for r in results) else 1


def _load_morphism(args, ctx):
    try:
        if args.word:
            return parse_word(args.word, ctx)
        obj = _read_json(args.diagram)
        if isinstance(obj, list):
            return Morphism.from_json(obj)
        return Morphism.single(Diagram.from_json(obj))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("bad diagram: %s" % exc)


def cmd_evaluate(args):
    cfg = load_config(args)
    if args.target == "cobordism":
        if bool(args.word) == bool(args.diagram):
            raise InputError("give exactly one of --word and --diagram")
        ctx = _context("T", cfg.seqs)
        f = _load_morphism(args, ctx)
        f = skein_reduce(compose(identity(f.n_out), f, ctx), ctx)
        if f.n_in == 0 and f.n_out == 0:
            return _dump({"value": str(f.scalar_value())})
        return _dump({"n_in": f.n_in, "n_out": f.n_out, "terms": f.to_json()})
    if args.n is None or args.n < 0:
        raise InputError("--n must be a non-negative integer")
    if args.target == "wreath":
        vals = evaluate_wreath(args.n)
    else:
        vals = evaluate_A_pm(1 if args.target == "plus" else -1, args.n)
    return _dump({"target": args.target, "n": args.n,
                  "alpha": str(vals[0]), "beta": str(vals[1]), "gamma": str(vals[2])})


def build_parser():
    p = argparse.ArgumentParser(prog="skein", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(q, formats=("json", "csv", "latex")):
        q.add_argument("--config", help="JSON sequence triple or config object")
        q.add_argument("--seed", type=int)
        q.add_argument("--format", choices=formats)

    g = sub.add_parser("gram", help="Gram matrix of a spanning family")
    g.add_argument("--family", choices=("S", "T", "Xi"), required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--genus", type=int, default=0)
    g.add_argument("--det", action="store_true")
    g.add_argument("--mode", choices=("symbolic", "sampled"))
    g.add_argument("--samples", type=int)
    common(g)
    g.set_defaults(func=cmd_gram)

    d = sub.add_parser("dims", help="dimension counts for m = 0..max")
    d.add_argument("--max", type=int, default=5)
    d.add_argument("--format", choices=("json", "csv", "latex"))
    d.set_defaults(func=cmd_dims)

    v = sub.add_parser("verify", help="run the end-to-end checks")
    v.add_argument("--only", action="append", metavar="CHECK")
    v.add_argument("--theorem", type=int, choices=sorted(THEOREM_CHECKS))
    v.add_argument("--seed", type=int)
    v.add_argument("--timings", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("evaluate", help="closed evaluations in a target category")
    e.add_argument("--target", choices=("wreath", "plus", "minus", "cobordism"), required=True)
    e.add_argument("--n", type=int)
    e.add_argument("--word")
    e.add_argument("--diagram", metavar="FILE")
    common(e, ("json",))
    e.set_defaults(func=cmd_evaluate)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    for name in ("m", "genus", "samples"):
        val = getattr(args, name, None)
        if val is not None and val < 0:
            print("skein: --%s must be non-negative" % name, file=sys.stderr)
            return EXIT_PARSE
    if getattr(args, "m", None) == 0 and args.family == "Xi":
        print("skein: --m must be at least 1 for Xi", file=sys.stderr)
        return EXIT_PARSE
    try:
        out = args.func(args)
    except InputError as exc:
        print("skein: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except (SkeinError, ArithmeticError, NotImplementedError, ValueError) as exc:
        print("skein: computation failed: %s" % exc, file=sys.stderr)
        return EXIT_COMPUTE
    code = 0
    if isinstance(out, tuple):
        out, code = out
    print(out)
    return code
