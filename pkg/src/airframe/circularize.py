"""Flattening the Airplane into a circle.

Every Airplane expansion folds onto an expansion of a six-edge cycle:
each red arc keeps one circular edge, while each blue ray contributes
two (one for each side the ray is seen from when walking around the
outside of the Airplane).  Rearrangements transport through the
correspondence, giving an injective morphism into the rearrangement
group of the cycle.
"""

from .core import Expansion, child
from .diagram import GraphPairDiagram
from .systems import circular_airplane

_CIRC = None


def circular_system():
    """The shared circular replacement system instance."""
    global _CIRC
    if _CIRC is None:
        _CIRC = circular_airplane()
    return _CIRC


class EdgeCorrespondence:
    """One circular edge per red edge, an ordered pair per blue edge.

    The pair is (co, anti): the side reached first, resp. last, when
    traversing the base cycle in its orientation.
    """

    def __init__(self, single=None, pair=None):
        self.single = dict(single or {})
        self.pair = dict(pair or {})

    @classmethod
    def base(cls):
        return cls(
            single={("rT", ()): ("c1", ()), ("rB", ()): ("c4", ())},
            pair={("bL", ()): (("c2", ()), ("c3", ())),
                  ("bR", ()): (("c5", ()), ("c0", ()))},
        )

    def of(self, addr):
        if addr in self.single:
            return self.single[addr]
        return self.pair[addr]


def phi_expansion(expansion, order=None):
    """The circular expansion and edge correspondence of an Airplane
    expansion.  Independent of the order of simple expansions; `order`
    may supply any parents-before-children replay of them."""
    system = expansion.system
    corr = EdgeCorrespondence.base()
    circ = Expansion(circular_system())
    if order is not None:
        if sorted(order) != sorted(expansion.internal):
            raise ValueError("order must replay the expansion")
        todo = list(order)
    else:
        todo = sorted(expansion.internal, key=lambda a: (len(a[1]), a))
    for a in todo:
        if system.color_of(a) == "red":
            b = corr.single[a]
            circ = circ.expand(b)
            # arc splits in two, a fresh ray sprouts between them
            corr.single[child(a, 0)] = child(b, 0)
            corr.single[child(a, 1)] = child(b, 3)
            corr.pair[child(a, 2)] = (child(b, 1), child(b, 2))
        else:
            p, q = corr.pair[a]
            circ = circ.expand(p).expand(q)
            # the two sides of the halved ray interleave: the inner
            # half is seen co-side from one walk and anti-side from
            # the other, the midpoint circle contributes one arc each
            corr.pair[child(a, 0)] = (child(q, 2), child(p, 0))
            corr.single[child(a, 1)] = child(q, 1)
            corr.single[child(a, 2)] = child(p, 1)
            corr.pair[child(a, 3)] = (child(p, 2), child(q, 0))
    return circ, corr


def phi_diagram(f):
    """Transport a rearrangement of the Airplane to one of the cycle."""
    dom, dcorr = phi_expansion(f.domain)
    rng, rcorr = phi_expansion(f.range)
    mapping = {}
    for a, (b, rev) in f.mapping.items():
        if f.system.color_of(a) == "red":
            mapping[dcorr.single[a]] = (rcorr.single[b], rev)
        else:
            pa, qa = dcorr.pair[a]
            pb, qb = rcorr.pair[b]
            if not rev:
                mapping[pa] = (pb, False)
                mapping[qa] = (qb, False)
            else:
                # end-for-end reversal swaps the two sides but keeps
                # each side's walking orientation
                mapping[pa] = (qb, False)
                mapping[qa] = (pb, False)
    out = GraphPairDiagram(circular_system(), dom, rng, mapping)
    if not out.validate():
        raise ValueError("correspondence produced an invalid diagram")
    return out.reduce()
