"""The replacement systems used in this package, with their standard
generators, plus exact piecewise-linear map support.

Airplane base graph: a circle made of two red arcs rT (top, R to L)
and rB (bottom, L to R), with blue rays bL (L outward) and bR (R
outward).  A red edge splits into two half arcs and sprouts a blue ray
at the midpoint; a blue edge splits into an inner half, a circle of
two red arcs at the midpoint, and an outer half.
"""

from fractions import Fraction

from .core import Graph, ReplacementRule, ReplacementSystem
from .diagram import GraphPairDiagram


class DyadicRational(Fraction):
    def __new__(cls, *args):
        self = super().__new__(cls, *args)
        d = self.denominator
        if d & (d - 1):
            raise ValueError("not dyadic: %s" % self)
        return self


def is_dyadic(x):
    return x.denominator & (x.denominator - 1) == 0


def airplane():
    base = Graph([
        ("bL", "blue", "L", "vL"),
        ("bR", "blue", "R", "vR"),
        ("rT", "red", "R", "L"),
        ("rB", "red", "L", "R"),
    ])
    red = ReplacementRule("red", Graph([
        ("0", "red", "i", "m"),
        ("1", "red", "m", "t"),
        ("2", "blue", "m", "x"),
    ]))
    blue = ReplacementRule("blue", Graph([
        ("0", "blue", "m", "i"),
        ("1", "red", "f", "m"),
        ("2", "red", "m", "f"),
        ("3", "blue", "f", "t"),
    ]))
    return ReplacementSystem("airplane", base, {"red": red, "blue": blue})


def basilica():
    base = Graph([
        ("ct", "black", "P", "Q"),
        ("cb", "black", "Q", "P"),
        ("lp", "black", "P", "P"),
        ("lq", "black", "Q", "Q"),
    ])
    rule = ReplacementRule("black", Graph([
        ("0", "black", "i", "m"),
        ("1", "black", "m", "m"),
        ("2", "black", "m", "t"),
    ]))
    return ReplacementSystem("basilica", base, {"black": rule})


def interval_system():
    base = Graph([("e", "black", "l", "r")])
    rule = ReplacementRule("black", Graph([
        ("0", "black", "i", "m"),
        ("1", "black", "m", "t"),
    ]))
    return ReplacementSystem("interval", base, {"black": rule})


def circle_system():
    base = Graph([
        ("u", "black", "a", "b"),
        ("v", "black", "b", "a"),
    ])
    rule = ReplacementRule("black", Graph([
        ("0", "black", "i", "m"),
        ("1", "black", "m", "t"),
    ]))
    return ReplacementSystem("circle", base, {"black": rule})


def circular_airplane():
    colors = ["blue", "red", "blue", "blue", "red", "blue"]
    base = Graph([
        ("c%d" % k, colors[k], "w%d" % k, "w%d" % ((k + 1) % 6))
        for k in range(6)
    ])
    red = ReplacementRule("red", Graph([
        ("0", "red", "i", "p"),
        ("1", "blue", "p", "q"),
        ("2", "blue", "q", "r"),
        ("3", "red", "r", "t"),
    ]))
    blue = ReplacementRule("blue", Graph([
        ("0", "blue", "i", "p"),
        ("1", "red", "p", "q"),
        ("2", "blue", "q", "t"),
    ]))
    return ReplacementSystem("circular_airplane", base, {"red": red,
                                                         "blue": blue})


# --- generators -----------------------------------------------------------

def airplane_generators(system=None):
    """The five standard generators alpha..epsilon of the Airplane group.

    alpha translates the horizontal line rightwards (the central circle
    lands halfway along the right ray); beta and gamma act on the
    central circle like the circle maps Y0 and Y1; delta is the half
    turn; epsilon acts on the right ray like the interval map X1.
    """
    A = system if system is not None else airplane()
    mk = lambda pairs: GraphPairDiagram.from_strings(A, pairs)
    alpha = mk([
        ("bL.3", "bL"),
        ("bL.0", "bR.0", True),
        ("bL.1", "rB"),
        ("bL.2", "rT"),
        ("rT", "bR.1"),
        ("rB", "bR.2"),
        ("bR", "bR.3"),
    ])
    beta = mk([
        ("rT", "rT.0"),
        ("rB.0", "rT.1"),
        ("rB.1", "rB"),
        ("rB.2", "bL"),
        ("bL", "rT.2"),
        ("bR", "bR"),
    ])
    gamma = mk([
        ("rT.0", "rT.0-0"),
        ("rT.1-0", "rT.0-1"),
        ("rT.1-1", "rT.1"),
        ("rT.1-2", "rT.2"),
        ("rT.2", "rT.0-2"),
        ("rB", "rB"),
        ("bL", "bL"),
        ("bR", "bR"),
    ])
    delta = mk([
        ("bL", "bR"),
        ("bR", "bL"),
        ("rT", "rB"),
        ("rB", "rT"),
    ])
    epsilon = mk([
        ("bL", "bL"),
        ("rT", "rT"),
        ("rB", "rB"),
        ("bR.0-3", "bR.0"),
        ("bR.0-0", "bR.3-0", True),
        ("bR.0-1", "bR.2"),
        ("bR.0-2", "bR.1"),
        ("bR.1", "bR.3-1"),
        ("bR.2", "bR.3-2"),
        ("bR.3", "bR.3-3"),
    ])
    return {"a": alpha, "b": beta, "g": gamma, "d": delta, "e": epsilon}


def basilica_generators(system=None):
    B = system if system is not None else basilica()
    mk = lambda pairs: GraphPairDiagram.from_strings(B, pairs)
    a = mk([
        ("lp.0", "cb"),
        ("lp.1", "lp"),
        ("lp.2", "ct"),
        ("ct", "lq.0"),
        ("cb", "lq.2"),
        ("lq", "lq.1"),
    ])
    b = mk([
        ("ct", "ct.2"),
        ("cb.0", "cb"),
        ("cb.1", "lp"),
        ("cb.2", "ct.0"),
        ("lp", "ct.1"),
        ("lq", "lq"),
    ])
    c = mk([
        ("ct.0-0", "ct.0"),
        ("ct.0-1", "ct.1"),
        ("ct.0-2", "ct.2-0"),
        ("ct.1", "ct.2-1"),
        ("ct.2", "ct.2-2"),
        ("cb", "cb"),
        ("lp", "lp"),
        ("lq", "lq"),
    ])
    d = mk([
        ("ct", "cb"),
        ("cb", "ct"),
        ("lp", "lq"),
        ("lq", "lp"),
    ])
    return {"a": a, "b": b, "c": c, "d": d}


def interval_generators(system=None):
    I = system if system is not None else interval_system()
    mk = lambda pairs: GraphPairDiagram.from_strings(I, pairs)
    x0 = mk([
        ("e.0-0", "e.0"),
        ("e.0-1", "e.1-0"),
        ("e.1", "e.1-1"),
    ])
    x1 = mk([
        ("e.0", "e.0"),
        ("e.1-0-0", "e.1-0"),
        ("e.1-0-1", "e.1-1-0"),
        ("e.1-1", "e.1-1-1"),
    ])
    return {"x0": x0, "x1": x1}


def circle_generators(system=None):
    C = system if system is not None else circle_system()
    mk = lambda pairs: GraphPairDiagram.from_strings(C, pairs)
    y0 = mk([
        ("u", "u.0"),
        ("v.0", "u.1"),
        ("v.1", "v"),
    ])
    y1 = mk([
        ("u.0", "u.0-0"),
        ("u.1-0", "u.0-1"),
        ("u.1-1", "u.1"),
        ("v", "v"),
    ])
    y2 = mk([
        ("u", "v"),
        ("v", "u"),
    ])
    return {"y0": y0, "y1": y1, "y2": y2}


SYSTEM_BUILDERS = {
    "airplane": airplane,
    "basilica": basilica,
    "interval": interval_system,
    "circle": circle_system,
    "circular_airplane": circular_airplane,
}


# --- piecewise linear maps -------------------------------------------------

class PLMap:
    """A piecewise linear homeomorphism of [0,1] or of the circle R/Z.

    Stored as breakpoints [(x, y), ...] with strictly increasing x.
    Interval maps fix 0 and 1.  Circle maps are increasing of degree
    one; breakpoints use representatives in [0,1).
    """

    def __init__(self, breaks, circle=False):
        self.circle = circle
        breaks = [(Fraction(x), Fraction(y)) for x, y in breaks]
        breaks.sort()
        if circle:
            breaks = [(x % 1, y % 1) for x, y in breaks]
            breaks.sort()
        else:
            if not breaks or breaks[0] != (0, 0) or breaks[-1] != (1, 1):
                raise ValueError("interval map must fix 0 and 1")
        xs = [x for x, _ in breaks]
        if len(set(xs)) != len(xs):
            raise ValueError("duplicate breakpoint")
        if not circle:
            ys = [y for _, y in breaks]
            if any(y1 <= y0 for y0, y1 in zip(ys, ys[1:])):
                raise ValueError("not increasing")
        else:
            self._lift(breaks)  # raises unless increasing of degree one
        self.breaks = self._canonical(breaks)

    def _canonical(self, breaks):
        if not self.circle:
            out = [breaks[0]]
            for i in range(1, len(breaks) - 1):
                x0, y0 = out[-1]
                x1, y1 = breaks[i]
                x2, y2 = breaks[i + 1]
                if (y1 - y0) * (x2 - x1) != (y2 - y1) * (x1 - x0):
                    out.append(breaks[i])
            out.append(breaks[-1])
            return out
        # circle: lift y cyclically, drop breakpoints where slope is smooth
        n = len(breaks)
        if n == 1:
            return breaks
        lift = self._lift(breaks)
        out = []
        for i in range(n):
            x0, y0 = lift[i - 1]
            x1, y1 = lift[i]
            x2, y2 = lift[(i + 1) % n]
            if i == 0:
                x0, y0 = x0 - 1, y0 - 1
            if (i + 1) % n == 0:
                x2, y2 = x2 + 1, y2 + 1
            if (y1 - y0) * (x2 - x1) != (y2 - y1) * (x1 - x0):
                out.append(breaks[i])
        if not out:
            # a pure rotation; keep a single anchor at 0
            x, y = breaks[0]
            return [(Fraction(0), (y - x) % 1)]
        return out

    def _lift(self, breaks=None):
        """Breakpoints with y lifted to an increasing sequence."""
        breaks = self.breaks if breaks is None else breaks
        out = [breaks[0]]
        for x, y in breaks[1:]:
            while y <= out[-1][1]:
                y += 1
            out.append((x, y))
        if out[-1][1] >= out[0][1] + 1:
            raise ValueError("circle map not of degree one")
        return out

    def __call__(self, x):
        x = Fraction(x)
        if not self.circle:
            bs = self.breaks
            for i in range(len(bs) - 1):
                (x0, y0), (x1, y1) = bs[i], bs[i + 1]
                if x0 <= x <= x1:
                    return y0 + (x - x0) * (y1 - y0) / (x1 - x0)
            raise ValueError("out of domain: %s" % x)
        x = x % 1
        lift = self._lift()
        ext = lift + [(lift[0][0] + 1, lift[0][1] + 1)]
        if x < ext[0][0]:
            x += 1
        for i in range(len(ext) - 1):
            (x0, y0), (x1, y1) = ext[i], ext[i + 1]
            if x0 <= x <= x1:
                if x1 == x0:
                    return y0 % 1
                return (y0 + (x - x0) * (y1 - y0) / (x1 - x0)) % 1
        raise AssertionError("unreachable")

    def compose(self, other):
        """self after other."""
        if self.circle != other.circle:
            raise ValueError("mixed domains")
        xs = set(x for x, _ in other.breaks)
        inv = other.invert()
        xs.update(inv(x) for x, _ in self.breaks)
        breaks = [(x, self(other(x))) for x in sorted(xs)]
        if not self.circle:
            breaks = [(Fraction(0), Fraction(0))] + \
                [b for b in breaks if 0 < b[0] < 1] + \
                [(Fraction(1), Fraction(1))]
        return PLMap(breaks, circle=self.circle)

    def invert(self):
        return PLMap([(y, x) for x, y in self.breaks], circle=self.circle)

    def __eq__(self, other):
        return (isinstance(other, PLMap) and self.circle == other.circle
                and self.breaks == other.breaks)

    def is_identity(self):
        if self.circle:
            return self.breaks == [(Fraction(0), Fraction(0))]
        return self.breaks == [(Fraction(0), Fraction(0)),
                               (Fraction(1), Fraction(1))]

    def __repr__(self):
        kind = "circle" if self.circle else "interval"
        pts = ", ".join("(%s, %s)" % (x, y) for x, y in self.breaks)
        return "PLMap[%s: %s]" % (kind, pts)


# --- PL maps of interval and circle system diagrams ------------------------

def _dyadic_cell(addr, start, width):
    s, w = Fraction(start), Fraction(width)
    for i in addr[1]:
        w /= 2
        if i == 1:
            s += w
    return s, w


def interval_plmap(f):
    """The PL map of a diagram over the interval system."""
    f = f.reduce()
    breaks = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))]
    for a, (b, rev) in f.mapping.items():
        if rev:
            raise ValueError("reversed pair in an interval diagram")
        sa, _ = _dyadic_cell(a, 0, 1)
        sb, _ = _dyadic_cell(b, 0, 1)
        breaks.append((sa, sb))
    return PLMap(sorted(set(breaks)))


def circle_plmap(f):
    """The PL map of a diagram over the circle system."""
    f = f.reduce()
    breaks = []
    for a, (b, rev) in f.mapping.items():
        if rev:
            raise ValueError("reversed pair in a circle diagram")
        sa, _ = _dyadic_cell(a, 0 if a[0] == "u" else Fraction(1, 2), Fraction(1, 2))
        sb, _ = _dyadic_cell(b, 0 if b[0] == "u" else Fraction(1, 2), Fraction(1, 2))
        breaks.append((sa, sb))
    return PLMap(breaks, circle=True)
