"""Components of the Airplane limit space.

A component (a circle of the Airplane) is identified either by the
blue edge whose expansion created it (None for the central circle) or
by its component path: a sequence of (angle, position) pairs, one per
turn the connecting path takes.  Angles use the circle coordinate with
0 pointing back toward the center (for the central circle: along the
right ray); positions on a ray run from 0 at the host circle to 1 at
the tip.
"""

import heapq
from fractions import Fraction

from .core import child, format_address, parent
from . import analysis

HALF = Fraction(1, 2)


def path_depth(path):
    return len(path)


def format_path(path):
    if not path:
        return "central"
    return ";".join("(%s,%s)" % (t, l) for t, l in path)


def parse_path(s):
    s = s.strip()
    if s in ("central", "", "()"):
        return ()
    out = []
    for part in s.split(";"):
        part = part.strip()
        if not (part.startswith("(") and part.endswith(")")):
            raise ValueError("bad component path %r" % s)
        t, l = part[1:-1].split(",")
        out.append((Fraction(t), Fraction(l)))
    return validate_path(tuple(out))


def validate_path(path):
    for k, (t, l) in enumerate(path):
        for x in (t, l):
            if x.denominator & (x.denominator - 1):
                raise ValueError("not dyadic: %s" % x)
        if not (0 <= t < 1) or not (0 < l < 1):
            raise ValueError("coordinate out of range")
        if k > 0 and t in (0, HALF):
            raise ValueError("inner angle 0 or 1/2 names no ray")
    return tuple(path)


# --- address-level geometry -------------------------------------------------
#
# Every boundary arc occupies an interval (start, width) of its circle,
# with the arc's source vertex at the start; every blue edge occupies
# (source position, target position) of its ray.

def _is_blue(addr):
    if not addr[1]:
        return addr[0] in ("bL", "bR")
    # colors alternate by rule shape; recompute cheaply
    color = "blue" if addr[0] in ("bL", "bR") else "red"
    for i in addr[1]:
        color = ("red" if i in (1, 2) else "blue") if color == "blue" \
            else ("blue" if i == 2 else "red")
    return color == "blue"


def inner_is_source(blue_addr):
    """Is the source of this blue edge its end nearer the center?"""
    p = parent(blue_addr)
    if p is None or not _is_blue(p):
        return True  # base ray or fresh ray
    i = blue_addr[1][-1]
    return inner_is_source(p) if i == 3 else not inner_is_source(p)


def ray_of(blue_addr):
    """The base of the maximal ray this blue edge lies on."""
    p = parent(blue_addr)
    if p is None or not _is_blue(p):
        return blue_addr
    return ray_of(p)


def blue_span(blue_addr):
    """(source, target) positions of a blue edge on its ray."""
    p = parent(blue_addr)
    if p is None or not _is_blue(p):
        return Fraction(0), Fraction(1)
    ps, pt = blue_span(p)
    mid = (ps + pt) / 2
    return (mid, ps) if blue_addr[1][-1] == 0 else (mid, pt)


def circle_position(blue_addr):
    ps, pt = blue_span(blue_addr)
    return (ps + pt) / 2


def arc_span(red_addr):
    """(start, width) of a boundary arc on its circle."""
    p = parent(red_addr)
    if p is None:
        return (Fraction(0), HALF) if red_addr[0] == "rT" else (HALF, HALF)
    i = red_addr[1][-1]
    if _is_blue(p):
        # one of the two arcs of the circle created by expanding p
        lower = 2 if inner_is_source(p) else 1
        return (Fraction(0), HALF) if i == lower else (HALF, HALF)
    s, w = arc_span(p)
    w /= 2
    return (s + w, w) if i == 1 else (s, w)


def component_of_red(red_addr):
    """The creating blue edge of the circle this arc bounds (None =
    central)."""
    a = red_addr
    while True:
        p = parent(a)
        if p is None:
            return None
        if _is_blue(p):
            return p
        a = p


def component_path(creating_blue):
    """Creating blue edge (or None) -> component path."""
    if creating_blue is None:
        return ()
    r = ray_of(creating_blue)
    l = circle_position(creating_blue)
    host, theta = _ray_host_angle(r)
    return component_path(host) + ((theta, l),)


def _ray_host_angle(ray_base):
    if ray_base == ("bR", ()):
        return None, Fraction(0)
    if ray_base == ("bL", ()):
        return None, HALF
    arc = parent(ray_base)  # fresh ray = child 2 of an arc
    s, w = arc_span(arc)
    return component_of_red(arc), s + w / 2


def path_to_component(path):
    """Component path -> creating blue edge (or None)."""
    path = validate_path(path)
    if not path:
        return None
    host = path_to_component(path[:-1])
    theta, l = path[-1]
    return _circle_at(_ray_at(host, theta), l)


def _ray_at(host, theta):
    if host is None:
        if theta == 0:
            return ("bR", ())
        if theta == HALF:
            return ("bL", ())
        arc = ("rT", ()) if theta < HALF else ("rB", ())
    else:
        if theta in (0, HALF):
            raise ValueError("angle %s is a through-direction" % theta)
        lower = 2 if inner_is_source(host) else 1
        arc = child(host, lower if theta < HALF else (3 - lower))
    while True:
        s, w = arc_span(arc)
        mid = s + w / 2
        if theta == mid:
            return child(arc, 2)
        arc = child(arc, 0 if theta < mid else 1)


def _circle_at(ray_base, l):
    e = ray_base
    while True:
        ps, pt = blue_span(e)
        mid = (ps + pt) / 2
        if l == mid:
            return e
        # descend toward the half containing l
        if (min(ps, pt) < l < mid) == (ps < pt):
            e = child(e, 0)
        else:
            e = child(e, 3)


def map_component(f, path):
    """The image component path of a component under a diagram."""
    f = f.reduce()
    e = path_to_component(path)
    arc = ("rT", ()) if e is None else child(e, 1)
    while not (f.domain.is_leaf(arc) or arc in f.domain.internal):
        p = arc
        while not f.domain.is_leaf(p):
            p = parent(p)
        f = f.expand_pair(p)
    a = arc
    while a in f.domain.internal:
        a = child(a, 0)
    b, _ = f.mapping[a]
    return component_path(component_of_red(b))


# --- coordinate actions of the generators ----------------------------------
#
# Each generator acts on component paths by a short case split; these
# agree with map_component on the generator diagrams (property-tested)
# and are what make breadth-first orbit search affordable.

def _boundary_maps():
    from .systems import airplane_generators
    g = airplane_generators()
    return {name: analysis.induced_boundary_map(g[name])
            for name in ("b", "g", "d")}


_Y = None


def _act_circle(name, sign, theta):
    global _Y
    if _Y is None:
        _Y = _boundary_maps()
    m = _Y[name] if sign > 0 else _Y[name].invert()
    return m(theta)


def _eps_ray(l, sign):
    """epsilon's action on right-ray positions (the interval map X0)."""
    m = analysis.PLMap([(0, 0), (Fraction(1, 4), HALF),
                        (HALF, Fraction(3, 4)), (1, 1)])
    return m(l) if sign > 0 else m.invert()(l)


def act(name, sign, path):
    """Apply a generator (sign = +-1) to a component path."""
    if name in ("b", "g", "d"):
        if not path:
            return path
        (t, l), rest = path[0], path[1:]
        return ((_act_circle(name, sign, t), l),) + rest
    if name == "e":
        if path and path[0][0] == 0:
            (t, l), rest = path[0], path[1:]
            return ((t, _eps_ray(l, sign)),) + rest
        return path
    if name == "a":
        return _act_alpha(path) if sign > 0 else _act_alpha_inv(path)
    raise ValueError("unknown generator %r" % name)


def _rot_head(rest):
    """Half-turn of a circle: its own hanging angles shift by 1/2."""
    if not rest:
        return rest
    (t, l), deeper = rest[0], rest[1:]
    return (((t + HALF) % 1, l),) + deeper


def _act_alpha(path):
    if not path:
        return ((Fraction(0), HALF),)
    (t, l), rest = path[0], path[1:]
    if t == 0:
        return ((t, (1 + l) / 2),) + rest
    if t == HALF:
        if l < HALF:
            # the inner left half-ray flips end for end onto the right
            return ((Fraction(0), HALF - l),) + _rot_head(rest)
        if l == HALF:
            return rest  # that circle becomes the central one
        return ((HALF, 2 * l - 1),) + rest
    return ((Fraction(0), HALF), ((t + HALF) % 1, l)) + rest


def _act_alpha_inv(path):
    if not path:
        return ((HALF, HALF),)
    (t, l), rest = path[0], path[1:]
    if t == HALF:
        return ((t, (1 + l) / 2),) + rest
    if t == 0:
        if l < HALF:
            return ((HALF, HALF - l),) + _rot_head(rest)
        if l == HALF:
            if not rest:
                return ()
            (t2, l2), rest2 = rest[0], rest[1:]
            return (((t2 - HALF) % 1, l2),) + rest2
        return ((Fraction(0), 2 * l - 1),) + rest
    return ((HALF, HALF), (t, l)) + rest


def act_word(word, path):
    """Apply a word (list of (name, exponent), leftmost applied last)."""
    for name, exp in reversed(word):
        step = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            path = act(name, step, path)
    return path


# --- alignment --------------------------------------------------------------

def in_route_from_center(x, c):
    """Is component x traveled through when walking from the center
    out to component c?"""
    if x == () or x == c:
        return True
    m = len(x)
    if m > len(c) or x[:m - 1] != c[:m - 1]:
        return False
    return x[m - 1][0] == c[m - 1][0] and x[m - 1][1] <= c[m - 1][1]


def join_component(ci, cj):
    """The outermost component common to both center-out routes."""
    m = 0
    while m < len(ci) and m < len(cj) and ci[m] == cj[m]:
        m += 1
    if m == len(ci):
        return ci
    if m == len(cj):
        return cj
    if ci[m][0] == cj[m][0]:
        return ci[:m] + ((ci[m][0], min(ci[m][1], cj[m][1])),)
    return ci[:m]


def on_route(x, ci, cj):
    j = join_component(ci, cj)
    if not (in_route_from_center(x, ci) or in_route_from_center(x, cj)):
        return False
    return in_route_from_center(j, x) or j == x


def aligned(components):
    """Is there a pair whose connecting path visits every component?
    Returns the ordered tuple (or None)."""
    cs = [validate_path(c) for c in components]
    if len(set(cs)) != len(cs):
        raise ValueError("duplicate components")
    if len(cs) <= 2:
        return tuple(cs)
    for i in range(len(cs)):
        for j in range(len(cs)):
            if i == j:
                continue
            rest = [c for k, c in enumerate(cs) if k not in (i, j)]
            if all(on_route(c, cs[i], cs[j]) for c in rest):
                mid = sorted(rest, key=lambda c: (
                    0 if in_route_from_center(c, cs[i]) else 1,
                    -len(c) if in_route_from_center(c, cs[i]) else len(c)))
                return (cs[i],) + tuple(mid) + (cs[j],)
    return None


# --- orbit search -----------------------------------------------------------

GEN_ORDER = [("a", 1), ("b", 1), ("g", 1), ("d", 1), ("e", 1),
             ("a", -1), ("b", -1), ("g", -1), ("d", -1), ("e", -1)]


def orbit_search(src, tgt, max_len, table=None):
    """Shortlex-least word w with w(src) = tgt, |w| <= max_len.

    Searches backward from tgt so that the first written symbol is
    chosen first; the standard five-generator coordinate action drives
    the search, and the witness is re-verified through diagrams when a
    table is supplied.
    """
    src = validate_path(src)
    tgt = validate_path(tgt)
    frontier = [(tgt, [])]
    seen = {tgt}
    if src == tgt:
        return []
    for _ in range(max_len):
        nxt = []
        for state, word in frontier:
            for name, sign in GEN_ORDER:
                s2 = act(name, -sign, state)
                if s2 in seen:
                    continue
                w2 = word + [(name, sign)]
                if s2 == src:
                    if table is not None:
                        from .diagram import evaluate_word
                        f = evaluate_word(table, w2)
                        assert map_component(f, src) == tgt
                    return w2
                seen.add(s2)
                nxt.append((s2, w2))
        frontier = nxt
    return None


# --- constructive transitivity ----------------------------------------------
#
# Plain BFS cannot reach the word lengths transitivity needs, so the
# solver works level by level: rotate the leading angle to 0 with a
# circle word, slide the leading position to 1/2 with right-ray words,
# then absorb the leading circle into the center with alpha^-1.

def _value_bfs(start, goal, moves, max_cost=40, max_den=1 << 12):
    """Dijkstra on a single dyadic value; moves = [(word, fn)]."""
    heap = [(0, 0, start, [])]
    seen = {}
    tie = 0
    while heap:
        cost, _, val, word = heapq.heappop(heap)
        if val == goal:
            return word
        if seen.get(val, 10 ** 9) < cost:
            continue
        for mword, fn in moves:
            try:
                v2 = fn(val)
            except ValueError:
                continue
            if v2.denominator > max_den:
                continue
            c2 = cost + len(mword)
            if c2 <= max_cost and c2 < seen.get(v2, 10 ** 9):
                seen[v2] = c2
                tie += 1
                heapq.heappush(heap, (c2, tie, v2, word + [mword]))
    return None


def _flatten(words):
    """[word, word, ...] applied in order -> single written word."""
    out = []
    for w in reversed(words):
        out.extend(w)
    return out


def _theta_moves(fix_half=False):
    names = ["g"] if fix_half else ["b", "g", "d"]
    moves = []
    for n in names:
        for s in (1, -1):
            moves.append(([(n, s)], lambda x, n=n, s=s: _act_circle(n, s, x)))
    if fix_half:
        for base in ("b", "g"):
            for s in (1, -1):
                w = [("d", 1), (base, s), ("d", 1)]
                moves.append((w, lambda x, b=base, s=s: _act_circle(
                    "d", 1, _act_circle(b, s, _act_circle("d", 1, x)))))
    return moves


_WORD_CACHE = {}


def _cached_bfs(key, start, goal, moves):
    if (key, start) not in _WORD_CACHE:
        _WORD_CACHE[(key, start)] = _value_bfs(start, goal, moves)
    return _WORD_CACHE[(key, start)]


def _ray_value_fn(word):
    """The action of a word on right-ray positions, via the path action."""
    def fn(l):
        out = act_word(word, ((Fraction(0), l),))
        if len(out) != 1 or out[0][0] != 0:
            raise ValueError("left the ray")
        return out[0][1]
    return fn


def _l_moves(gen_set):
    moves = []
    if gen_set == "five":
        basic = [[("e", 1)], [("e", -1)],
                 [("a", 1), ("e", 1), ("a", -1)],
                 [("a", 1), ("e", -1), ("a", -1)]]
    else:
        de = [("d", 1), ("e", 1), ("d", 1), ("e", -1)]      # [d,e]
        dei = [("e", 1), ("d", 1), ("e", -1), ("d", 1)]     # its inverse
        f2 = [("e", -1), ("e", -1), ("a", 1), ("e", 1), ("a", -1), ("e", 1)]
        f2i = [(n, -s) for n, s in reversed(f2)]
        basic = [de, dei, f2, f2i]
    for w in basic:
        moves.append((w, _ray_value_fn(w)))
    return moves


# In the commutator generating set, [d,e] and [e^-1, e^-1 a] count as
# single symbols; their expansions in terms of the five generators are
# the keys below.
COMMUTATOR_SYMBOL_COSTS = {
    tuple([("d", 1), ("e", 1), ("d", 1), ("e", -1)]): 1,
    tuple([("e", 1), ("d", 1), ("e", -1), ("d", 1)]): 1,
    tuple([("e", -1), ("e", -1), ("a", 1), ("e", 1), ("a", -1), ("e", 1)]): 1,
    tuple([("e", 1), ("a", 1), ("e", -1), ("a", -1), ("e", 1), ("e", 1)]): 1,
}


def word_cost(word, gen_set):
    """Symbol count; commutator generators count as one symbol each."""
    if gen_set == "five":
        return len(word)
    cost = 0
    i = 0
    word = list(word)
    while i < len(word):
        matched = False
        for pat, c in COMMUTATOR_SYMBOL_COSTS.items():
            if tuple(word[i:i + len(pat)]) == pat:
                cost += c
                i += len(pat)
                matched = True
                break
        if not matched:
            cost += 1
            i += 1
    return cost


def solve_to_center(path, gen_set="five"):
    """A word mapping the component to the central one.

    Returns the written word (leftmost symbol applied last), or None.
    gen_set: "five" for alpha..epsilon, "commutator" for the
    commutator-subgroup generating set.
    """
    path = validate_path(path)
    pieces = []  # words in application order
    cur = path
    guard = 0
    while cur:
        guard += 1
        if guard > 10:
            return None
        t, l = cur[0]
        wt = _cached_bfs("theta", t, Fraction(0), _theta_moves())
        if wt is None:
            return None
        w1 = _flatten(wt)
        cur = act_word(w1, cur)
        pieces.append(w1)
        wl = _cached_bfs(("l", gen_set), cur[0][1], HALF, _l_moves(gen_set))
        if wl is None:
            return None
        w2 = _flatten(wl)
        cur = act_word(w2, cur)
        pieces.append(w2)
        cur = act_word([("a", -1)], cur)
        pieces.append([("a", -1)])
    return _flatten(pieces)


def _stab_unfold_word(theta):
    """A circle word fixing angle 1/2 and sending theta to 0."""
    return _cached_bfs("stab", theta, Fraction(0), _theta_moves(fix_half=True))


def solve_to_center_fixing_center(path):
    """A word fixing the central component and mapping the given
    component to ((0,1/2)).  Used for 2-transitivity."""
    cur = validate_path(path)
    if not cur:
        raise ValueError("cannot move the central component while fixing it")
    pieces = []
    guard = 0
    while True:
        guard += 1
        if guard > 12:
            return None
        t, l = cur[0]
        wt = _cached_bfs("theta", t, Fraction(0), _theta_moves())
        if wt is None:
            return None
        w1 = _flatten(wt)
        cur = act_word(w1, cur)
        pieces.append(w1)
        wl = _cached_bfs(("l", "five"), cur[0][1], HALF, _l_moves("five"))
        if wl is None:
            return None
        w2 = _flatten(wl)
        cur = act_word(w2, cur)
        pieces.append(w2)
        if len(cur) == 1:
            return _flatten(pieces)
        # unfold: straighten the next turn onto the right ray while the
        # unfolding conjugate fixes the center
        t2 = (cur[1][0] - HALF) % 1
        wt2 = _stab_unfold_word(t2)
        if wt2 is None:
            return None
        v = [("a", 1)] + _flatten(wt2) + [("a", -1)]
        cur = act_word(v, cur)
        pieces.append(v)


def solve_pair(c1, c2):
    """A word mapping (c1, c2) to (central, ((0,1/2)))."""
    c1, c2 = validate_path(c1), validate_path(c2)
    if c1 == c2:
        raise ValueError("components must be distinct")
    w1 = solve_to_center(c1) if c1 else []
    if w1 is None:
        return None
    c2m = act_word(w1, c2)
    w2 = solve_to_center_fixing_center(c2m)
    if w2 is None:
        return None
    return w2 + w1


# --- transitivity reports ----------------------------------------------------

def enumerate_components(max_den, max_depth):
    """All component paths with coordinate denominators <= max_den and
    depth <= max_depth."""
    fracs = sorted({Fraction(k, max_den) for k in range(1, max_den)})
    first = [Fraction(0)] + fracs
    deeper = [t for t in fracs if t != HALF]
    out = [()]
    level = [()]
    for depth in range(max_depth):
        nxt = []
        for base in level:
            angles = first if depth == 0 else deeper
            for t in angles:
                for l in fracs:
                    nxt.append(base + ((t, l),))
        out.extend(nxt)
        level = nxt
    return out


def check_k_transitivity(k, gen_set="five", max_den=8, word_bound=30,
                         max_depth=2, sample=None, rng=None):
    """Check that ordered k-tuples of components map to a fixed
    reference tuple within the word bound.  Returns a report dict."""
    comps = enumerate_components(max_den, max_depth)
    failures = []
    checked = 0
    if k == 1:
        for c in comps:
            word = solve_to_center(c, gen_set)
            checked += 1
            if word is None or word_cost(word, gen_set) > word_bound \
                    or act_word(word, c) != ():
                failures.append(format_path(c))
    elif k == 2:
        pairs = [(x, y) for x in comps for y in comps if x != y]
        if sample is not None:
            pairs = rng.sample(pairs, sample)
        for c1, c2 in pairs:
            word = solve_pair(c1, c2)
            checked += 1
            ok = (word is not None
                  and act_word(word, c1) == ()
                  and act_word(word, c2) == ((Fraction(0), HALF),))
            if not ok:
                failures.append((format_path(c1), format_path(c2)))
    else:
        raise ValueError("k must be 1 or 2")
    return {"k": k, "generators": gen_set, "checked": checked,
            "failures": failures, "ok": not failures}
