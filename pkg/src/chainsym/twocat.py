"""The strict 2-category of chain complexes.

A 2-cell is a chain map ``f`` together with the class of a degree-1
homotopy ``h``; its codomain is ``f + d h + h d``.  Cells are compared as
classes: ``h ~ h'`` when ``h' - h = d h2 - h2 d`` for a degree-2 ``h2``.
"""

from __future__ import annotations

from .complexes import ChainMap, ComplexError, Homotopy, boundary, hom_complex


class TwoMorphism:
    __slots__ = ("f", "h")

    def __init__(self, f: ChainMap, h: Homotopy | None = None):
        if h is None:
            h = Homotopy.zero(f.domain, f.codomain, 1)
        if h.degree != 1 or h.domain != f.domain or h.codomain != f.codomain:
            raise ComplexError("representative must be a degree-1 homotopy between "
                               "the endpoints of the domain map")
        self.f = f
        self.h = h

    @classmethod
    def identity(cls, f: ChainMap):
        return cls(f)

    @property
    def source(self):
        return self.f.domain

    @property
    def target(self):
        return self.f.codomain

    def codomain(self) -> ChainMap:
        g = self.f + boundary(self.h)
        ChainMap(g.domain, g.codomain, g.components)  # re-checks the squares
        return g

    def inverse(self) -> "TwoMorphism":
        return TwoMorphism(self.codomain(), -self.h)

    def __eq__(self, other):
        if not isinstance(other, TwoMorphism):
            return NotImplemented
        return self.f == other.f and homotopy_class_eq(self.h, other.h)[0]

    __hash__ = None

    def __repr__(self):
        return f"TwoMorphism(f={self.f!r}, h={self.h!r})"


def vcompose(t2: TwoMorphism, t1: TwoMorphism) -> TwoMorphism:
    """``t2 · t1``: first ``t1``, then ``t2``."""
    if t1.codomain() != t2.f:
        raise ComplexError("2-cells are not vertically composable")
    return TwoMorphism(t1.f, t1.h + t2.h)


def hcompose(t2: TwoMorphism, t1: TwoMorphism, variant: str = "A") -> TwoMorphism:
    """Horizontal composite of ``t1: f => f~`` (A -> B) and ``t2: g => g~`` (B -> C)."""
    if t1.target != t2.source:
        raise ComplexError("2-cells are not horizontally composable")
    f, h = t1.f, t1.h
    g, hp = t2.f, t2.h
    A, B, C = t1.source, t1.target, t2.target
    comps = {}
    for k in Homotopy.zero(A, C, 1).degrees():
        if variant == "A":
            m = (hp[k] @ f[k] + hp[k] @ B.d(k) @ h[k] + hp[k] @ h[k - 1] @ A.d(k - 1)
                 + g[k + 1] @ h[k])
        elif variant == "B":
            m = (g[k + 1] @ h[k] + hp[k] @ f[k] + hp[k] @ B.d(k) @ h[k]
                 + C.d(k + 1) @ hp[k + 1] @ h[k])
        else:
            raise ValueError(f"unknown variant {variant!r}")
        comps[k] = m
    return TwoMorphism(g @ f, Homotopy(A, C, 1, comps))


def homotopy_class_eq(h: Homotopy, hp: Homotopy):
    """Decide ``h ~ h'``; returns ``(verdict, h2)`` with ``h' = h + d h2 - h2 d``."""
    if h.domain != hp.domain or h.codomain != hp.codomain or h.degree != hp.degree:
        raise ComplexError("homotopies have mismatched endpoints")
    H = hom_complex(h.domain, h.codomain)
    h2 = H.solve_boundary(hp - h, h.degree + 1)
    return (h2 is not None), h2


def interchange_check(a: TwoMorphism, b: TwoMorphism, c: TwoMorphism, d: TwoMorphism,
                      variant: str = "A") -> bool:
    """Middle-four exchange for ``a: f => f'``, ``b: f' => f''`` (A -> B) and
    ``c: g => g'``, ``d: g' => g''`` (B -> C)."""
    lhs = hcompose(vcompose(d, c), vcompose(b, a), variant)
    rhs = vcompose(hcompose(d, b, variant), hcompose(c, a, variant))
    return lhs == rhs
