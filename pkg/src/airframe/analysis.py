"""Airplane-specific invariants.

Geometry conventions: the horizontal line Hor carries the coordinate
[0,1] with the left ray tip at 0, the central circle at 1/2 and the
right ray tip at 1.  The central circle carries the circle coordinate
with 0 at the right vertex R, increasing counterclockwise through the
top arc rT, so rT covers [0,1/2] and rB covers [1/2,1].
"""

from fractions import Fraction

from .core import format_address, parent
from .systems import PLMap


# --- blue edge geometry ----------------------------------------------------

def _last_color(system, addr):
    return system.color_of(addr)


def blue_edge_length(system, addr):
    """The length of a blue edge: base blues and fresh rays have length
    one, blue halves have half their parent's length."""
    if system.color_of(addr) != "blue":
        raise ValueError("not blue: %s" % format_address(addr))
    p = parent(addr)
    if p is None:
        return Fraction(1)
    if system.color_of(p) == "red":
        return Fraction(1)  # fresh ray sprouting at an arc midpoint
    return blue_edge_length(system, p) / 2


def is_extreme_edge(system, addr):
    """Is this blue edge's target the tip of a ray?"""
    if system.color_of(addr) != "blue":
        return False
    p = parent(addr)
    if p is None:
        return True
    if system.color_of(p) == "red":
        return addr[1][-1] == 2
    return addr[1][-1] == 3 and is_extreme_edge(system, p)


def extremes(expansion):
    """The degree-one vertices of the realized graph with their
    incident blue leaf edge."""
    from .core import realize_graph
    g = realize_graph(expansion)
    out = []
    for eid, color, src, tgt in g.edges:
        if g.degree(tgt) == 1:
            out.append((tgt, eid))
        if g.degree(src) == 1:
            out.append((src, eid))
    return out


# --- the derivative homomorphism D ----------------------------------------

def extremal_derivative_at(f, addr):
    """D_p = 2^(r-d) at the extreme held by the domain leaf addr."""
    b, _ = f.mapping[addr]
    d = -_log2(blue_edge_length(f.system, addr))
    r = -_log2(blue_edge_length(f.system, b))
    return Fraction(2) ** (r - d)


def _log2(x):
    n = 0
    while x < 1:
        x *= 2
        n -= 1
    while x > 1:
        x /= 2
        n += 1
    if x != 1:
        raise ValueError("not a power of two")
    return n


def global_derivative(f):
    """The product of the extremal derivatives of the reduced diagram."""
    f = f.reduce()
    out = Fraction(1)
    for a in f.mapping:
        if is_extreme_edge(f.system, a):
            out *= extremal_derivative_at(f, a)
    return out


def abelianization_image(f):
    return _log2(global_derivative(f))


def is_in_commutator(f):
    return global_derivative(f) == 1


def is_in_E(f):
    """Trivial derivative at every extreme (not just in product)."""
    f = f.reduce()
    return all(extremal_derivative_at(f, a) == 1
               for a in f.mapping if is_extreme_edge(f.system, a))


def semidirect_split(f, epsilon):
    """Write f = c o epsilon^k with c in the commutator subgroup."""
    k = abelianization_image(f) // abelianization_image(epsilon)
    c = f.compose(epsilon.power(-k))
    return c, k


# --- the central circle boundary ------------------------------------------

def is_central_arc(addr):
    return addr[0] in ("rT", "rB") and all(i in (0, 1) for i in addr[1])


def arc_interval(addr):
    """(start, width) of a central circle arc."""
    if not is_central_arc(addr):
        raise ValueError("not a central arc: %s" % format_address(addr))
    s = Fraction(0) if addr[0] == "rT" else Fraction(1, 2)
    w = Fraction(1, 2)
    for i in addr[1]:
        w /= 2
        if i == 1:
            s += w
    return s, w


def is_in_rist_C0(f):
    """Rigid outside the central circle: only central arcs expanded."""
    f = f.reduce()
    nodes = set(f.domain.internal) | set(f.range.internal)
    return all(is_central_arc(a) for a in nodes)


def induced_boundary_map(f):
    """The circle map induced on the central circle boundary."""
    f = f.reduce()
    if not is_in_rist_C0(f):
        raise ValueError("not in rist(C0)")
    breaks = []
    for a, (b, rev) in f.mapping.items():
        if not is_central_arc(a):
            continue
        if rev:
            raise ValueError("reversed arc pair")
        sa, _ = arc_interval(a)
        sb, _ = arc_interval(b)
        breaks.append((sa, sb))
    return PLMap(breaks, circle=True)


# --- the horizontal line ---------------------------------------------------

def is_hor_blue(addr):
    return addr[0] in ("bL", "bR") and all(i in (0, 3) for i in addr[1])


def hor_span(addr):
    """(source position, target position) of a horizontal blue edge."""
    if not is_hor_blue(addr):
        raise ValueError("not horizontal: %s" % format_address(addr))
    ps = Fraction(1, 2)
    pt = Fraction(0) if addr[0] == "bL" else Fraction(1)
    for i in addr[1]:
        mid = (ps + pt) / 2
        if i == 0:
            ps, pt = mid, ps
        else:
            ps, pt = mid, pt
    return ps, pt


def induced_hor_map(f):
    """The interval map induced on the horizontal line, or None if f
    does not stabilize it rigidly off-line."""
    f = f.reduce()
    nodes = set(f.domain.internal) | set(f.range.internal)
    if not all(is_hor_blue(a) for a in nodes):
        return None
    pts = {}
    for a, (b, rev) in f.mapping.items():
        if not is_hor_blue(a):
            continue
        if not is_hor_blue(b):
            return None
        ps, pt = hor_span(a)
        qs, qt = hor_span(b)
        if rev:
            qs, qt = qt, qs
        for x, y in ((ps, qs), (pt, qt)):
            if x in pts and pts[x] != y:
                return None
            pts[x] = y
    try:
        return PLMap(sorted(pts.items()))
    except ValueError:
        return None


def is_in_rist_Hor(f):
    return induced_hor_map(f) is not None
