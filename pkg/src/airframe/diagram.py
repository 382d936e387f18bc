"""Graph pair diagrams: the elements of a rearrangement group.

A diagram pairs the leaf cells of a domain expansion with the leaf
cells of a range expansion, color for color.  Each pair carries a flag:
straight (the canonical cell homeomorphism) or reversed (the canonical
homeomorphism composed with the cell's end-for-end symmetry).  Reversed
pairs expand through the unique incidence- and color-preserving
involution of the rule graph that swaps the initial and terminal
vertex.
"""

import itertools
import json

from . import core
from .core import (Expansion, child, common_refinement, format_address,
                   parse_address)


def reversal_matching(rule):
    """How the children of an end-for-end reversed cell pair up.

    Returns {child index: (child index, reversed?)}, or None if the
    rule graph has no reversal symmetry.  Ties (possible only at loop
    edges) are broken lexicographically, preferring straight.
    """
    g = rule.graph
    verts = [v for v in g.vertices() if v not in ("i", "t")]
    solutions = []
    for perm in itertools.permutations(verts):
        phi = {"i": "t", "t": "i"}
        phi.update(zip(verts, perm))
        # match edges under phi, trying straight before reversed
        def backtrack(i, used, acc):
            if i == len(g.edges):
                solutions.append(tuple(acc))
                return
            _, color, u, w = g.edges[i]
            for j, (_, c2, u2, w2) in enumerate(g.edges):
                if j in used or c2 != color:
                    continue
                for rev in (False, True):
                    pu, pw = (u2, w2) if not rev else (w2, u2)
                    if phi[u] == pu and phi[w] == pw:
                        backtrack(i + 1, used | {j}, acc + [(j, rev)])
            return
        backtrack(0, frozenset(), [])
    if not solutions:
        return None
    # Prefer the in-plane half turn (fewest reversals) over reflections:
    # e.g. the two arcs of a midpoint circle swap straight rather than
    # each mapping to itself reversed.
    best = min(solutions, key=lambda s: (sum(r for _, r in s), s))
    return {i: jr for i, jr in enumerate(best)}


class GraphPairDiagram:
    def __init__(self, system, domain, range_, mapping):
        self.system = system
        self.domain = domain
        self.range = range_
        self.mapping = dict(mapping)

    @classmethod
    def from_strings(cls, system, pairs):
        """Build a diagram from (domain addr, range addr[, reversed]) triples."""
        dom_leaves = []
        rng_leaves = []
        mapping = {}
        for pair in pairs:
            a = parse_address(pair[0])
            b = parse_address(pair[1])
            rev = bool(pair[2]) if len(pair) > 2 else False
            dom_leaves.append(a)
            rng_leaves.append(b)
            mapping[a] = (b, rev)
        dom = Expansion(system, _internal_from_leaves(dom_leaves))
        rng = Expansion(system, _internal_from_leaves(rng_leaves))
        return cls(system, dom, rng, mapping)

    # -- validity ----------------------------------------------------

    def validate(self):
        dom_leaves = self.domain.leaves()
        rng_leaves = self.range.leaves()
        if set(self.mapping) != set(dom_leaves):
            return False
        images = [b for b, _ in self.mapping.values()]
        if sorted(images) != sorted(rng_leaves):
            return False
        for a, (b, _) in self.mapping.items():
            if self.system.color_of(a) != self.system.color_of(b):
                return False
        return self._vertex_map() is not None

    def _vertex_map(self):
        """The induced map on realized vertices, or None if inconsistent."""
        duf = core._endpoint_tokens(self.domain)
        ruf = core._endpoint_tokens(self.range)
        vmap = {}
        for a, (b, rev) in self.mapping.items():
            ends = (("s", "s"), ("t", "t")) if not rev else (("s", "t"), ("t", "s"))
            for da, rb in ends:
                u = duf.find((da, a))
                w = ruf.find((rb, b))
                if u in vmap and vmap[u] != w:
                    return None
                vmap[u] = w
        if len(set(vmap.values())) != len(vmap):
            return None
        return vmap

    # -- expansion and reduction --------------------------------------

    def expand_pair(self, a):
        b, rev = self.mapping[a]
        rule = self.system.rule_for(self.system.color_of(a))
        mapping = dict(self.mapping)
        del mapping[a]
        if not rev:
            for i in range(rule.arity()):
                mapping[child(a, i)] = (child(b, i), False)
        else:
            sigma = reversal_matching(rule)
            if sigma is None:
                raise ValueError("rule for color %r has no reversal"
                                 % rule.color)
            for i in range(rule.arity()):
                j, r = sigma[i]
                mapping[child(a, i)] = (child(b, j), r)
        return GraphPairDiagram(self.system, self.domain.expand(a),
                                self.range.expand(b), mapping)

    def _collapse_at(self, a):
        """Collapse the children of a if they form a rigid pair; else None."""
        rule = self.system.rule_for(self.system.color_of(a))
        n = rule.arity()
        kids = [child(a, i) for i in range(n)]
        if any(k not in self.mapping for k in kids):
            return None
        images = [self.mapping[k] for k in kids]
        parents = {core.parent(b) for b, _ in images}
        if len(parents) != 1:
            return None
        b = parents.pop()
        if b is None or b not in self.range.internal:
            return None
        got = [(bb[1][-1], r) for bb, r in images]
        if got == [(i, False) for i in range(n)]:
            flag = False
        else:
            sigma = reversal_matching(rule)
            if sigma is None or got != [sigma[i] for i in range(n)]:
                return None
            flag = True
        mapping = dict(self.mapping)
        for k in kids:
            del mapping[k]
        mapping[a] = (b, flag)
        dom = Expansion(self.system, self.domain.internal - {a})
        rng = Expansion(self.system, self.range.internal - {b})
        return GraphPairDiagram(self.system, dom, rng, mapping)

    def reduce(self, rng=None):
        """The unique reduced form.  rng, if given, shuffles the collapse
        schedule (the result does not depend on it)."""
        d = self
        while True:
            cands = [a for a in d.domain.internal
                     if all(child(a, i) in d.mapping
                            for i in range(d.system.rule_for(
                                d.system.color_of(a)).arity()))]
            cands.sort(key=format_address)
            if rng is not None:
                rng.shuffle(cands)
            for a in cands:
                nxt = d._collapse_at(a)
                if nxt is not None:
                    d = nxt
                    break
            else:
                return d

    # -- group operations ----------------------------------------------

    def compose(self, other):
        """self after other."""
        if self.system is not other.system:
            raise ValueError("diagrams over different systems")
        mid = common_refinement(other.range, self.domain)
        g = other
        while g.range.internal != mid.internal:
            todo = [b for b in mid.internal - g.range.internal
                    if g.range.is_leaf(b)]
            back = {b: a for a, (b, _) in g.mapping.items()}
            for b in todo:
                g = g.expand_pair(back[b])
        f = self
        while f.domain.internal != mid.internal:
            todo = [a for a in mid.internal - f.domain.internal
                    if f.domain.is_leaf(a)]
            for a in todo:
                f = f.expand_pair(a)
        mapping = {}
        for a, (b, r1) in g.mapping.items():
            c, r2 = f.mapping[b]
            mapping[a] = (c, r1 != r2)
        out = GraphPairDiagram(self.system, g.domain, f.range, mapping)
        return out.reduce()

    def invert(self):
        mapping = {b: (a, r) for a, (b, r) in self.mapping.items()}
        return GraphPairDiagram(self.system, self.range, self.domain, mapping)

    def equals(self, other):
        a = self.reduce()
        b = other.reduce()
        return (a.domain.internal == b.domain.internal
                and a.range.internal == b.range.internal
                and a.mapping == b.mapping)

    def is_identity(self):
        d = self.reduce()
        return all(a == b and not r for a, (b, r) in d.mapping.items())

    def power(self, k):
        if k < 0:
            return self.invert().power(-k)
        out = identity(self.system)
        for _ in range(k):
            out = out.compose(self)
        return out

    def conjugate(self, g):
        """self conjugated by g: g^-1 after self after g."""
        return g.invert().compose(self).compose(g)

    def order_up_to(self, n):
        """The order of the diagram if it is at most n, else None."""
        p = identity(self.system)
        for k in range(1, n + 1):
            p = p.compose(self)
            if p.is_identity():
                return k
        return None

    # -- serialization --------------------------------------------------

    def to_json(self):
        mp = {}
        for a, (b, r) in self.mapping.items():
            mp[format_address(a)] = ("~" if r else "") + format_address(b)
        return {
            "system": self.system.name,
            "domain": sorted(format_address(a) for a in self.mapping),
            "range": sorted(format_address(b) for b, _ in self.mapping.values()),
            "map": mp,
        }

    @classmethod
    def from_json(cls, system, data):
        if data["system"] != system.name:
            raise ValueError("diagram is over system %r" % data["system"])
        pairs = []
        for a, b in data["map"].items():
            rev = b.startswith("~")
            pairs.append((a, b.lstrip("~"), rev))
        return cls.from_strings(system, pairs)

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)


def _internal_from_leaves(leaves):
    internal = set()
    for a in leaves:
        p = core.parent(a)
        while p is not None:
            internal.add(p)
            p = core.parent(p)
    return internal


def identity(system, expansion=None):
    exp = expansion if expansion is not None else Expansion(system)
    mapping = {a: (a, False) for a in exp.leaves()}
    return GraphPairDiagram(system, exp, exp, mapping)


def commutator(g, h):
    return g.compose(h).compose(g.invert()).compose(h.invert())


def evaluate_word(table, word):
    """Evaluate a word as a diagram.

    table: {name: GraphPairDiagram}; word: list of (name, exponent),
    applied right to left like function composition.
    """
    system = next(iter(table.values())).system
    out = identity(system)
    for name, exp in word:
        out = out.compose(table[name].power(exp))
    return out
