"""Colored edge-replacement systems: base graphs, rules, expansions.

An edge address names a cell of the fractal limit space.  The base edge
"bR" expanded twice, taking child 3 then child 0, is written "bR.3-0".
Internally an address is a pair (base_id, (3, 0)).
"""

import json
from .union_find import UnionFind


def parse_address(s):
    if "." in s:
        base, rest = s.split(".", 1)
        return (base, tuple(int(k) for k in rest.split("-")))
    return (s, ())


def format_address(addr):
    base, path = addr
    if not path:
        return base
    return base + "." + "-".join(str(k) for k in path)


def parent(addr):
    base, path = addr
    if not path:
        return None
    return (base, path[:-1])


def child(addr, i):
    base, path = addr
    return (base, path + (i,))


class Graph:
    """A finite directed multigraph with colored edges.

    Edges are (edge_id, color, source, target) in a fixed order; the
    order of a rule graph's edges defines the child indices of an
    expansion.
    """

    def __init__(self, edges):
        self.edges = list(edges)
        self.by_id = {}
        for eid, color, src, tgt in self.edges:
            if eid in self.by_id:
                raise ValueError("duplicate edge id %r" % eid)
            self.by_id[eid] = (color, src, tgt)

    def vertices(self):
        vs = []
        for _, _, src, tgt in self.edges:
            for v in (src, tgt):
                if v not in vs:
                    vs.append(v)
        return vs

    def degree(self, v):
        d = 0
        for _, _, src, tgt in self.edges:
            d += (src == v) + (tgt == v)
        return d

    def __eq__(self, other):
        return isinstance(other, Graph) and self.edges == other.edges

    def to_dot(self, name="graph"):
        lines = ["digraph %s {" % name]
        for eid, color, src, tgt in self.edges:
            lines.append('  "%s" -> "%s" [label="%s", color="%s"];'
                         % (src, tgt, eid, color))
        lines.append("}")
        return "\n".join(lines)


class ReplacementRule:
    """What an edge of a given color is replaced by.

    The rule graph uses the reserved vertex names "i" and "t" for the
    initial and terminal vertex of the replaced edge; its other
    vertices are fresh on every application.
    """

    def __init__(self, color, graph):
        self.color = color
        self.graph = graph

    def arity(self):
        return len(self.graph.edges)


class ReplacementSystem:
    def __init__(self, name, base, rules):
        self.name = name
        self.base = base
        self.rules = dict(rules)

    def rule_for(self, color):
        return self.rules[color]

    def colors(self):
        seen = []
        for _, color, _, _ in self.base.edges:
            if color not in seen:
                seen.append(color)
        for rule in self.rules.values():
            for _, color, _, _ in rule.graph.edges:
                if color not in seen:
                    seen.append(color)
        return seen

    def color_of(self, addr):
        base, path = addr
        color, _, _ = self.base.by_id[base]
        for i in path:
            rule = self.rules[color]
            color = rule.graph.edges[i][1]
        return color

    def to_json(self):
        def graph_json(g):
            return [[eid, color, src, tgt] for eid, color, src, tgt in g.edges]
        return {
            "name": self.name,
            "base": graph_json(self.base),
            "rules": {c: graph_json(r.graph) for c, r in self.rules.items()},
        }

    @classmethod
    def from_json(cls, data):
        def graph(edges):
            return Graph([tuple(e) for e in edges])
        rules = {c: ReplacementRule(c, graph(es))
                 for c, es in data["rules"].items()}
        return cls(data["name"], graph(data["base"]), rules)

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)


def validate_system(system):
    """Check that every color in reach has a usable rule."""
    if not system.base.edges:
        return False
    for color in system.colors():
        if color not in system.rules:
            return False
        rule = system.rules[color]
        g = rule.graph
        if not g.edges:
            return False
        vs = g.vertices()
        if "i" not in vs or "t" not in vs:
            return False
    return True


class Expansion:
    """A finite expansion of the base graph.

    Stored as the set of internal (= expanded) addresses; the set is
    closed under taking parents.  The leaves are the cells of the
    corresponding cell decomposition of the limit space.
    """

    def __init__(self, system, internal=()):
        self.system = system
        self.internal = frozenset(internal)
        for a in self.internal:
            p = parent(a)
            if p is not None and p not in self.internal:
                raise ValueError("internal set not closed at %s"
                                 % format_address(a))

    def is_leaf(self, addr):
        return addr not in self.internal and self._exists(addr)

    def _exists(self, addr):
        p = parent(addr)
        if p is None:
            return addr[0] in self.system.base.by_id
        if p not in self.internal:
            return False
        arity = self.system.rule_for(self.system.color_of(p)).arity()
        return addr[1][-1] < arity

    def leaves(self):
        out = []

        def walk(addr):
            if addr in self.internal:
                color = self.system.color_of(addr)
                for i in range(self.system.rule_for(color).arity()):
                    walk(child(addr, i))
            else:
                out.append(addr)

        for eid, _, _, _ in self.system.base.edges:
            walk((eid, ()))
        return out

    def expand(self, addr):
        if not self.is_leaf(addr):
            raise ValueError("not a leaf: %s" % format_address(addr))
        return Expansion(self.system, self.internal | {addr})

    def __eq__(self, other):
        return (isinstance(other, Expansion)
                and self.system is other.system
                and self.internal == other.internal)

    def __hash__(self):
        return hash(self.internal)


def expand_edge(expansion, addr):
    return expansion.expand(addr)


def full_expansion(system, n):
    """Expand every edge n times."""
    exp = Expansion(system)
    for _ in range(n):
        for leaf in exp.leaves():
            exp = exp.expand(leaf)
    return exp


def common_refinement(e1, e2):
    if e1.system is not e2.system:
        raise ValueError("expansions of different systems")
    return Expansion(e1.system, e1.internal | e2.internal)


# --- realization ----------------------------------------------------------
#
# Endpoint tokens: ("v", name) for a base vertex, ("r", addr, name) for a
# vertex introduced when addr was expanded, ("s"/"t", addr) for the
# source/target slot of an edge.  Gluing the rule graphs into the base
# identifies tokens; the canonical name of a realized vertex is the
# lexicographically least serialized "v"/"r" token in its class.

def _token_str(tok):
    if tok[0] == "v":
        return tok[1]
    if tok[0] == "r":
        return format_address(tok[1]) + ":" + tok[2]
    return format_address(tok[1]) + ":" + tok[0]


def _endpoint_tokens(expansion):
    system = expansion.system
    uf = UnionFind()
    for eid, _, src, tgt in system.base.edges:
        uf.union(("s", (eid, ())), ("v", src))
        uf.union(("t", (eid, ())), ("v", tgt))
    for a in sorted(expansion.internal, key=format_address):
        rule = system.rule_for(system.color_of(a))
        for i, (_, _, u, w) in enumerate(rule.graph.edges):
            c = child(a, i)
            for slot, v in (("s", u), ("t", w)):
                if v == "i":
                    uf.union((slot, c), ("s", a))
                elif v == "t":
                    uf.union((slot, c), ("t", a))
                else:
                    uf.union((slot, c), ("r", a, v))
    return uf


def realize_graph(expansion):
    """The realized graph of an expansion, with canonical vertex names."""
    uf = _endpoint_tokens(expansion)
    classes = {}
    for tok in uf.forest:
        classes.setdefault(uf.find(tok), []).append(tok)
    names = {}
    for root, toks in classes.items():
        named = [t for t in toks if t[0] in ("v", "r")]
        names[root] = min(_token_str(t) for t in named)
    edges = []
    for a in expansion.leaves():
        color = expansion.system.color_of(a)
        src = names[uf.find(("s", a))]
        tgt = names[uf.find(("t", a))]
        edges.append((format_address(a), color, src, tgt))
    return Graph(edges)
