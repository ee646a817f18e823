"""Connected surface pieces in compressed form.

A piece is recorded by genus, crosscap count (0, 1 or 2), the boundary
slots it touches, and a set of reversal marks.  On an orientable piece the
marks say which boundary circles carry an orientation reversal; the set is
only defined up to complement, so the canonical representative is the one
avoiding the smallest boundary slot.

Slots are pairs ``(kind, index)`` with kind 0 for inputs and 1 for outputs,
so inputs sort before outputs.
"""

from dataclasses import dataclass

IN, OUT = 0, 1
_KIND_NAMES = {IN: "in", OUT: "out"}
_KIND_CODES = {"in": IN, "out": OUT}


def slot_name(slot):
    return "%s:%d" % (_KIND_NAMES[slot[0]], slot[1])


def parse_slot(text):
    kind, _, idx = text.partition(":")
    if kind not in _KIND_CODES or not idx.isdigit():
        raise ValueError("bad slot %r" % text)
    return (_KIND_CODES[kind], int(idx))


@dataclass(frozen=True, order=True)
class SurfaceComponent:
    genus: int
    crosscaps: int
    boundary: tuple
    marks: tuple = ()

    def to_json(self):
        return {"genus": self.genus, "crosscaps": self.crosscaps,
                "boundary": [slot_name(s) for s in self.boundary],
                "marks": [slot_name(s) for s in self.marks]}

    @classmethod
    def from_json(cls, obj):
        return canonicalize(make_component(
            obj.get("genus", 0), obj.get("crosscaps", 0),
            [parse_slot(s) for s in obj.get("boundary", [])],
            [parse_slot(s) for s in obj.get("marks", [])]))


@dataclass(frozen=True)
class ClosedSurfaceClass:
    genus: int
    crosscaps: int


def make_component(genus, crosscaps, boundary, marks=()):
    marks = set(marks)
    boundary = tuple(sorted(set(boundary)))
    if not marks <= set(boundary):
        raise ValueError("marks must lie on the boundary")
    return SurfaceComponent(genus, crosscaps, boundary, tuple(sorted(marks)))


def normalize_crosscaps(genus, crosscaps):
    # three crosscaps are a handle plus one crosscap
    while crosscaps >= 3:
        crosscaps -= 2
        genus += 1
    return genus, crosscaps


def canonicalize(c):
    genus, crosscaps = normalize_crosscaps(c.genus, c.crosscaps)
    marks = c.marks
    if crosscaps >= 1:
        marks = ()
    elif c.boundary and marks and marks[0] == c.boundary[0]:
        marked = set(marks)
        marks = tuple(s for s in c.boundary if s not in marked)
    return SurfaceComponent(genus, crosscaps, c.boundary, marks)


def is_canonical(c):
    return canonicalize(c) == c


def closed_class(genus, crosscaps):
    return ClosedSurfaceClass(*normalize_crosscaps(genus, crosscaps))


def evaluate_closed(cl, seqs):
    """alpha_g, beta_g or gamma_g for 0, 1 or 2 crosscaps."""
    genus, crosscaps = normalize_crosscaps(cl.genus, cl.crosscaps)
    return seqs.evaluate(crosscaps, genus)
