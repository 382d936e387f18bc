"""Rooted trees of components and the Basilica comparison.

On the Airplane side we take the components whose path positions are
all of the form (2^k-1)/2^k (each circle in the chain sits at the
midpoint of what remains of its ray); these form an infinite-degree
rooted tree under "extend the chain by one move".  A move either turns
off at an angle onto a fresh ray or steps outward to the next midpoint
circle of the current ray.

On the Basilica side every component is a circle reached from the
central one by a chain of loops, one attachment angle per step, giving
the same kind of tree.  Matching moves angle-for-angle identifies the
two trees, and the four Airplane generators alpha..delta act exactly
like the four Basilica generators under that identification.
"""

from fractions import Fraction

from .core import child, parent
from . import components as comp
from .components import HALF
from .diagram import evaluate_word
from .systems import basilica, basilica_generators, is_dyadic

INC = "inc"  # step outward to the next midpoint circle on this ray


# --- the Airplane side -------------------------------------------------------

def frak_c_membership(path):
    """FrakC vertex ((theta_1, k_1), ...) of a component path, or None
    if some position is not of the form (2^k-1)/2^k."""
    out = []
    for t, l in comp.validate_path(path):
        k = (1 + l.numerator).bit_length() - 1
        if Fraction(2 ** k - 1, 2 ** k) != l:
            return None
        out.append((t, k))
    return tuple(out)


def vertex_to_path(vertex):
    return tuple((t, Fraction(2 ** k - 1, 2 ** k)) for t, k in vertex)


def vertex_moves(vertex):
    """Move sequence of a FrakC vertex: a turn angle, then INC repeated."""
    moves = []
    for t, k in vertex:
        moves.append(t)
        moves.extend([INC] * (k - 1))
    return tuple(moves)


def moves_to_vertex(moves):
    out = []
    for m in moves:
        if m == INC:
            if not out:
                raise ValueError("no ray to step out on")
            t, k = out[-1]
            out[-1] = (t, k + 1)
        else:
            out.append((m, 1))
    return tuple(out)


def airplane_tree_action(table, word, vertex):
    """Act on a FrakC vertex by a word over alpha..delta."""
    if any(name == "e" for name, _ in word):
        raise ValueError("epsilon does not preserve the component tree")
    f = evaluate_word(table, word)
    img = comp.map_component(f, vertex_to_path(vertex))
    out = frak_c_membership(img)
    if out is None:
        raise AssertionError("image left the midpoint-chain tree: %s"
                             % comp.format_path(img))
    return out


# --- the Basilica side -------------------------------------------------------
#
# Components are the central circle (None) or the circle bounded by a
# loop edge.  Circle coordinates: the top arc ct covers [0,1/2] with
# the vertex P at 0; a loop's own circle has the contact point at 0.

def _circle_of(addr):
    """The component carrying this edge: None or a loop address."""
    a = addr
    while a[1] and a[1][-1] in (0, 2):
        a = parent(a)
    if not a[1]:
        return None if a[0] in ("ct", "cb") else a if a[0] in ("lp", "lq") \
            else None
    return a


def _carrier(addr):
    """The circle a loop is attached to (as opposed to the one it
    bounds)."""
    p = parent(addr)
    if p is None:
        return None  # lp, lq sit on the central circle
    return _circle_of(p)


def _arc_span(addr):
    p = parent(addr)
    if p is None:
        return (Fraction(0), HALF) if addr[0] == "ct" else (HALF, HALF)
    i = addr[1][-1]
    if p[1] and p[1][-1] == 1 or (not p[1] and p[0] in ("lp", "lq")):
        # first two arcs of a loop's circle, contact point at 0
        return (Fraction(0), HALF) if i == 0 else (HALF, HALF)
    s, w = _arc_span(p)
    w /= 2
    return (s, w) if i == 0 else (s + w, w)


def loop_position(addr):
    """Attachment angle of a loop on its carrier circle."""
    p = parent(addr)
    if p is None:
        return Fraction(0) if addr[0] == "lp" else HALF
    if p[1] and p[1][-1] == 1 or (not p[1] and p[0] in ("lp", "lq")):
        return HALF  # the fresh loop of a loop's circle
    s, w = _arc_span(p)
    return s + w / 2


def basilica_vertex(loop_addr):
    """Component -> chain of attachment angles from the center."""
    if loop_addr is None:
        return ()
    return basilica_vertex(_carrier(loop_addr)) + (loop_position(loop_addr),)


def vertex_to_loop(vertex):
    """Chain of attachment angles -> loop address (None = central)."""
    host = None
    for p in vertex:
        host = _loop_at(host, p)
    return host


def _loop_at(host, p):
    if not is_dyadic(p) or not 0 <= p < 1:
        raise ValueError("bad attachment angle %s" % p)
    if host is None:
        if p == 0:
            return ("lp", ())
        if p == HALF:
            return ("lq", ())
        a = ("ct", ()) if p < HALF else ("cb", ())
    else:
        if p == 0:
            raise ValueError("angle 0 is the contact point")
        if p == HALF:
            return child(host, 1)
        a = child(host, 0 if p < HALF else 2)
    while True:
        s, w = _arc_span(a)
        if p == s + w / 2:
            return child(a, 1)
        a = child(a, 0 if p < s + w / 2 else 2)


def map_basilica_component(f, loop_addr):
    """Image component of a Basilica circle under a diagram."""
    f = f.reduce()
    rep = ("ct", ()) if loop_addr is None else loop_addr
    while not (f.domain.is_leaf(rep) or rep in f.domain.internal):
        p = rep
        while not f.domain.is_leaf(p):
            p = parent(p)
        f = f.expand_pair(p)
    if rep in f.domain.internal:
        # descend to a leaf arc of the same circle
        rep = child(rep, 0)
        while rep in f.domain.internal:
            rep = child(rep, 0)
        b, _ = f.mapping[rep]
        return _circle_of(b)
    b, _ = f.mapping[rep]
    if loop_addr is None:
        return _circle_of(b)
    return b


def basilica_tree_action(table, word, vertex):
    f = evaluate_word(table, word)
    img = map_basilica_component(f, vertex_to_loop(vertex))
    return basilica_vertex(img)


# --- the identification and the intertwine check -----------------------------

def identify(vertex_moves_seq):
    """Airplane move sequence -> Basilica attachment-angle sequence."""
    out = []
    for i, m in enumerate(vertex_moves_seq):
        if m == INC:
            out.append(HALF)
        elif i == 0:
            out.append((HALF - m) % 1)
        else:
            out.append((1 - m) % 1)
    return tuple(out)


CANONICAL_PAIRING = [("a", "a"), ("b", "b"), ("g", "c"), ("d", "d")]


def truncated_vertices(depth, bound):
    """FrakC vertices with at most `depth` moves, every turn angle of
    denominator at most `bound`."""
    turns = [Fraction(j, bound) for j in range(bound)]
    out = [()]
    level = [()]
    for _ in range(depth):
        nxt = []
        for moves in level:
            opts = turns if not moves else \
                [INC] + [t for t in turns if t not in (0, HALF)]
            for m in opts:
                nxt.append(moves + (m,))
        out.extend(nxt)
        level = nxt
    return out


def intertwine_check(depth, branch_denominator_bound, pairing=None,
                     airplane_table=None, basilica_table=None):
    """Check on the truncated trees that each paired generator acts the
    same way on both sides of the identification.  Returns a report."""
    from .systems import airplane_generators
    at = airplane_table if airplane_table is not None \
        else airplane_generators()
    bt = basilica_table if basilica_table is not None \
        else basilica_generators()
    pairs = pairing if pairing is not None else CANONICAL_PAIRING
    mismatches = []
    checked = 0
    for moves in truncated_vertices(depth, branch_denominator_bound):
        v = moves_to_vertex(moves)
        bv = identify(moves)
        for aname, bname in pairs:
            checked += 1
            left = identify(vertex_moves(
                airplane_tree_action(at, [(aname, 1)], v)))
            right = basilica_tree_action(bt, [(bname, 1)], bv)
            if left != right:
                mismatches.append({
                    "vertex": [str(m) for m in moves],
                    "pair": "%s~%s" % (aname, bname),
                    "airplane_image": [str(m) for m in left],
                    "basilica_image": [str(m) for m in right],
                })
    return {"depth": depth, "bound": branch_denominator_bound,
            "checked": checked, "mismatches": mismatches,
            "ok": not mismatches}
