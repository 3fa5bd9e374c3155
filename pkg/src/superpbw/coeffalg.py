"""Coefficient algebras A with a multiplication-closed basis, modeled as
commutative monoids on integer exponent vectors (optionally truncated, which
adds an absorbing zero)."""

import re
from fractions import Fraction

_ELT_RE = re.compile(r"^([a-z])(?:\^(-?\d+))?$")


class MonoidError(ValueError):
    pass


class MonoidBasis:
    """Basis of A closed under multiplication.

    Elements are exponent tuples over `varnames`; the absorbing zero of a
    truncated monoid is represented by None and is never itself a basis
    element.  The element order is degree-lexicographic.
    """

    def __init__(self, name, varnames, laurent=False, trunc=None):
        if trunc is not None and (laurent or len(varnames) != 1):
            raise MonoidError("truncation is only supported for one non-negative generator")
        self.name = name
        self.varnames = tuple(varnames)
        self.laurent = laurent
        self.trunc = trunc
        self.one = (0,) * len(self.varnames)

    def check(self, a):
        if len(a) != len(self.varnames):
            raise MonoidError("element %r has wrong arity for %s" % (a, self.name))
        if not self.laurent and any(e < 0 for e in a):
            raise MonoidError("negative exponent in %r" % (a,))
        if self.trunc is not None and sum(a) >= self.trunc:
            raise MonoidError("%r is not a basis element below the truncation bound" % (a,))
        return a

    def mul(self, a, b):
        """Product of basis elements; None when truncation kills it."""
        if a is None or b is None:
            return None
        c = tuple(x + y for x, y in zip(a, b))
        if self.trunc is not None and sum(c) >= self.trunc:
            return None
        return c

    def power(self, a, n):
        if n < 0:
            raise MonoidError("negative power")
        if a is None:
            return self.one if n == 0 else None
        c = tuple(n * x for x in a)
        if self.trunc is not None and sum(c) >= self.trunc:
            return None
        return c

    def sort_key(self, a):
        return (sum(a), a)

    @property
    def finite(self):
        return self.trunc is not None

    def elements(self):
        """All basis elements, lowest degree first.  Only for truncated monoids."""
        if not self.finite:
            raise MonoidError("monoid %s has an infinite basis" % self.name)
        return [(j,) for j in range(self.trunc)]

    def format_elt(self, a):
        if a is None:
            return "0"
        parts = []
        for v, e in zip(self.varnames, a):
            if e == 0:
                continue
            parts.append(v if e == 1 else "%s^%d" % (v, e))
        return "*".join(parts) if parts else "1"

    def parse_elt(self, text):
        text = text.strip()
        if text == "1":
            return self.one
        exps = {v: 0 for v in self.varnames}
        for piece in text.split("*"):
            m = _ELT_RE.match(piece.strip())
            if not m or m.group(1) not in exps:
                raise MonoidError("cannot parse %r as an element of %s" % (text, self.name))
            exps[m.group(1)] += int(m.group(2)) if m.group(2) else 1
        return self.check(tuple(exps[v] for v in self.varnames))

    def __repr__(self):
        return "MonoidBasis(%s)" % self.name


def monoid_preset(name):
    """Presets: poly (C[t]), laurent (C[t,1/t]), poly2 (C[u,v]), trunc:n (C[t]/(t^n))."""
    if name == "poly":
        return MonoidBasis("poly", ("t",))
    if name == "laurent":
        return MonoidBasis("laurent", ("t",), laurent=True)
    if name == "poly2":
        return MonoidBasis("poly2", ("u", "v"))
    if name.startswith("trunc:"):
        n = int(name.split(":", 1)[1])
        if n < 1:
            raise MonoidError("truncation bound must be >= 1")
        return MonoidBasis(name, ("t",), trunc=n)
    raise MonoidError("unknown monoid preset %r" % name)


class AElem:
    """Element of A: a finitely supported rational combination of basis elements."""

    __slots__ = ("monoid", "coeffs")

    def __init__(self, monoid, coeffs=()):
        self.monoid = monoid
        acc = {}
        pairs = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for e, c in pairs:
            if e is None:
                continue
            c = Fraction(c)
            if c:
                acc[e] = acc.get(e, Fraction(0)) + c
        self.coeffs = {e: c for e, c in acc.items() if c}

    @classmethod
    def basis(cls, monoid, e, c=1):
        return cls(monoid, [(e, Fraction(c))])

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return AElem(self.monoid, out)

    def __neg__(self):
        return AElem(self.monoid, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, AElem):
            return AElem(self.monoid, {e: c * Fraction(other) for e, c in self.coeffs.items()})
        if other.monoid is not self.monoid:
            raise MonoidError("mixed monoids")
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = self.monoid.mul(e1, e2)
                if e is None:
                    continue
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return AElem(self.monoid, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, AElem) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = sorted(self.coeffs.items(), key=lambda p: self.monoid.sort_key(p[0]))
        return " + ".join("%s*%s" % (c, self.monoid.format_elt(e)) for e, c in terms)
