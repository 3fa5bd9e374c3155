"""Canonical PBW normal forms in U(g (x) A): the straightening normalizer,
degree, conversion to the divided-power integral basis, integrality testing,
basis enumeration, and the triangular factorization."""

import math
from fractions import Fraction

from .combinatorics import EMPTY, Multiset, enumerate_sub, multinomial, pi_product

NEG_INF = float("-inf")
_ONE = Fraction(1)


class AlgebraError(ValueError):
    pass


class Order:
    """Total order on the generator symbols R cup I of a spec."""

    def __init__(self, spec, syms):
        syms = tuple(syms)
        if sorted(syms) != sorted(spec.all_syms()):
            raise AlgebraError("order must list every root and Cartan symbol exactly once")
        self.syms = syms
        self._rank = {s: n for n, s in enumerate(syms)}

    def rank(self, sym):
        try:
            return self._rank[sym]
        except KeyError:
            raise AlgebraError("symbol %r is not in the order" % (sym,))

    @classmethod
    def triangular(cls, spec):
        """Negative roots, then Cartan, then positive roots (each in the
        spec's listing order for positives)."""
        pos = [r.label for r in spec.roots if r.positive]
        syms = [('x', spec.negative_of(p)) for p in pos]
        syms += [('h', i) for i in range(1, spec.rank + 1)]
        syms += [('x', p) for p in pos]
        return cls(spec, syms)

    @classmethod
    def lexicographic(cls, spec):
        """A fixed order unrelated to the triangular one (for the
        order-independence checks): Cartan first, then roots by label."""
        syms = [('h', i) for i in range(1, spec.rank + 1)]
        syms += sorted((('x', r.label) for r in spec.roots), key=lambda s: s[1])
        return cls(spec, syms)

    @classmethod
    def from_items(cls, spec, items):
        """Order from user tokens: integers name Cartan slots, anything else
        is a root label."""
        syms = []
        for it in items:
            it = it.strip()
            if re_int(it):
                syms.append(('h', int(it)))
            else:
                syms.append(('x', it))
        return cls(spec, syms)

    def is_triangular(self, spec):
        kinds = []
        for s in self.syms:
            if s[0] == 'h':
                kinds.append(1)
            else:
                kinds.append(0 if not spec.root(s[1]).positive else 2)
        return kinds == sorted(kinds)


def re_int(tok):
    return tok.lstrip("+-").isdigit()


class UElem:
    """Finitely supported rational combination of canonical PBW words.

    Words are run-compressed letter sequences: tuples of ((sym, aelt), exp)
    with exponents positive and odd letters never repeated.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        pairs = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for w, c in pairs:
            c = Fraction(c)
            if c:
                acc[w] = acc.get(w, 0) + c
        self.terms = {w: c for w, c in acc.items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return UElem(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) - c
        return UElem(out)

    def __neg__(self):
        return UElem({w: -c for w, c in self.terms.items()})

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return UElem()
        return UElem({w: scalar * c for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, UElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self):
        """Filtration degree: max total exponent sum; -inf for 0."""
        if not self.terms:
            return NEG_INF
        return max(sum(e for _, e in w) for w in self.terms)

    def __repr__(self):
        if not self.terms:
            return "UElem(0)"
        return "UElem(%d terms, degree %s)" % (len(self.terms), self.degree)


class DividedForm:
    """Element in the divided-power integral basis: keys are ordered tuples of
    (sym, multiset-over-B) pairs, one per generator appearing."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        pairs = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for k, c in pairs:
            c = Fraction(c)
            if c:
                acc[k] = acc.get(k, 0) + c
        self.terms = {k: c for k, c in acc.items() if c}

    def is_integral(self):
        return all(c.denominator == 1 for c in self.terms.values())

    @property
    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(ms.size for _, ms in k) for k in self.terms)

    def __eq__(self, other):
        return isinstance(other, DividedForm) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "DividedForm(%d terms)" % len(self.terms)


def key_degree(key):
    return sum(ms.size for _, ms in key)


class Engine:
    """Straightening engine for one (algebra, coefficient monoid, order)
    triple.  All operations are pure; the memo tables are transparent caches."""

    def __init__(self, spec, monoid, order=None):
        self.spec = spec
        self.monoid = monoid
        self.order = order or Order.triangular(spec)
        self._parity = {s: spec.parity(s) for s in spec.all_syms()}
        self._key_memo = {}
        self._insert_memo = {}
        self._p_memo = {}
        self._hmono_memo = {}

    # -- letters ---------------------------------------------------------

    def letter(self, sym, aelt):
        if sym[0] == 'h':
            if not 1 <= sym[1] <= self.spec.rank:
                raise AlgebraError("no Cartan generator h%d in %s" % (sym[1], self.spec.name))
        elif sym[0] == 'x':
            self.spec.root(sym[1])
        else:
            raise AlgebraError("bad symbol %r" % (sym,))
        if aelt is None:
            raise AlgebraError("letters cannot carry the absorbing zero")
        return (sym, self.monoid.check(aelt))

    def _key(self, letter):
        k = self._key_memo.get(letter)
        if k is None:
            k = (self.order.rank(letter[0]), self.monoid.sort_key(letter[1]))
            self._key_memo[letter] = k
        return k

    def word_key(self, word):
        """Deterministic sort key for canonical words."""
        return tuple((self._key(L), e) for L, e in word)

    # -- normalization core ----------------------------------------------

    def _first_violation(self, w):
        for i in range(len(w) - 1):
            u, v = w[i], w[i + 1]
            if u == v:
                if self._parity[u[0]]:
                    return i
                continue
            if self._key(u) > self._key(v):
                return i
        return None

    def _insert(self, word, letter):
        """word * letter as a dict of sorted flat words -> Fraction.

        Rewrites: adjacent swap  u v -> (-1)^{|u||v|} v u + [u,v] (x) ab,
        and the odd square  u u -> (1/2)[u,u] (x) a^2.  Terminates because a
        swap lowers the inversion count and every bracket shortens the word.
        """
        memo_key = (word, letter)
        hit = self._insert_memo.get(memo_key)
        if hit is not None:
            return hit
        out = {}
        work = [(_ONE, word + (letter,))]
        while work:
            c, w = work.pop()
            i = self._first_violation(w)
            if i is None:
                out[w] = out.get(w, 0) + c
                continue
            u, v = w[i], w[i + 1]
            pre, post = w[:i], w[i + 2:]
            if u == v:
                aa = self.monoid.mul(u[1], u[1])
                if aa is not None:
                    for sym, k in self.spec.bracket(u[0], u[0]):
                        work.append((c * Fraction(k, 2), pre + ((sym, aa),) + post))
                continue
            sign = -1 if (self._parity[u[0]] and self._parity[v[0]]) else 1
            work.append((sign * c, pre + (v, u) + post))
            ab = self.monoid.mul(u[1], v[1])
            if ab is not None:
                for sym, k in self.spec.bracket(u[0], v[0]):
                    work.append((c * k, pre + ((sym, ab),) + post))
        out = {w: c for w, c in out.items() if c}
        self._insert_memo[memo_key] = out
        return out

    def _fold(self, flat_terms, letters):
        for L in letters:
            nxt = {}
            for w, c in flat_terms.items():
                for w2, c2 in self._insert(w, L).items():
                    nxt[w2] = nxt.get(w2, 0) + c * c2
            flat_terms = {w: c for w, c in nxt.items() if c}
        return flat_terms

    @staticmethod
    def _compress(flat):
        runs = []
        for L in flat:
            if runs and runs[-1][0] == L:
                runs[-1][1] += 1
            else:
                runs.append([L, 1])
        return tuple((L, e) for L, e in runs)

    @staticmethod
    def _flatten(word):
        out = []
        for L, e in word:
            out.extend([L] * e)
        return tuple(out)

    def normalize(self, letters, coeff=1):
        """Expand a product of letters in the canonical PBW basis."""
        letters = [self.letter(sym, aelt) for sym, aelt in letters]
        flat = self._fold({(): Fraction(coeff)}, letters)
        return UElem({self._compress(w): c for w, c in flat.items()})

    def mul(self, x, y):
        out = {}
        for wy, cy in y.terms.items():
            lets = self._flatten(wy)
            for wx, cx in x.terms.items():
                cur = self._fold({self._flatten(wx): cx * cy}, lets)
                for w, c in cur.items():
                    k = self._compress(w)
                    out[k] = out.get(k, 0) + c
        return UElem(out)

    def scalar(self, c):
        return UElem({(): Fraction(c)}) if c else UElem()

    def one(self):
        return self.scalar(1)

    def gen_elem(self, sym, aelt, coeff=1):
        """The single letter sym (x) aelt as a UElem."""
        return UElem({((self.letter(sym, aelt), 1),): Fraction(coeff)})

    def divided_power(self, sym, aelt, r):
        """(x (x) a)^(r) = (x (x) a)^r / r!, expanded to plain powers."""
        if r < 0:
            raise AlgebraError("negative divided power")
        if r == 0:
            return self.one()
        return self.normalize([(sym, aelt)] * r, Fraction(1, math.factorial(r)))

    def adopt(self, x):
        """Re-normalize a UElem produced by another engine over the same
        algebra and monoid (possibly a different order)."""
        out = UElem()
        for w, c in x.terms.items():
            out = out + self.normalize([L for L in self._flatten(w)], c)
        return out

    def degree(self, x):
        return x.degree

    def parity_of(self, x):
        """0 or 1 when x is parity homogeneous, None for 0 or mixed."""
        seen = None
        for w in x.terms:
            p = sum(self._parity[sym] * e for (sym, _), e in w) % 2
            if seen is None:
                seen = p
            elif seen != p:
                return None
        return seen

    def super_comm(self, x, y):
        """[x, y] = xy - (-1)^{|x||y|} yx for parity-homogeneous arguments."""
        px, py = self.parity_of(x), self.parity_of(y)
        if px is None or py is None:
            raise AlgebraError("super commutator needs parity-homogeneous arguments")
        sign = -1 if (px and py) else 1
        return self.mul(x, y) - sign * self.mul(y, x)

    # -- Cartan elements p ------------------------------------------------

    def hvec_elem(self, hvec, aelt):
        out = {}
        for i, c in enumerate(hvec, start=1):
            if c:
                out[((self.letter(('h', i), aelt), 1),)] = Fraction(c)
        return UElem(out)

    def p_vector(self, hvec, chi):
        """The recursively defined Cartan element for h = sum hvec_i h_i:
        p(0) = 1,  p(chi) = -(1/|chi|) sum_{0 != psi <= chi} m(psi)
        (h (x) pi(psi)) p(chi - psi)."""
        hvec = tuple(hvec)
        key = (hvec, chi)
        hit = self._p_memo.get(key)
        if hit is not None:
            return hit
        if not chi:
            out = self.one()
        else:
            acc = UElem()
            for psi in enumerate_sub(chi):
                if not psi:
                    continue
                a = pi_product(psi, self.monoid)
                if a is None:
                    continue
                term = self.mul(self.hvec_elem(hvec, a), self.p_vector(hvec, chi - psi))
                acc = acc + multinomial(psi) * term
            out = Fraction(-1, chi.size) * acc
        self._p_memo[key] = out
        return out

    def p(self, which, chi):
        """p_i(chi) for a Cartan index, or p_alpha(chi) for a root label
        (the coroot map sends h to h_alpha)."""
        if isinstance(which, int):
            hvec = tuple(1 if j == which else 0 for j in range(1, self.spec.rank + 1))
        else:
            hvec = self.spec.coroot(which)
        return self.p_vector(hvec, chi)

    # -- divided / p-basis conversion --------------------------------------

    def _word_blocks(self, word):
        """Split a canonical word into per-generator blocks (sym, multiset)."""
        blocks = []
        for (sym, aelt), e in word:
            if blocks and blocks[-1][0] == sym:
                blocks[-1][1].append((aelt, e))
            else:
                blocks.append([sym, [(aelt, e)]])
        return [(sym, Multiset(items)) for sym, items in blocks]

    def _h_mono_to_p(self, i, chi):
        """Expand the monomial prod_a (h_i (x) a)^{chi(a)} over the p_i basis.

        Triangular elimination: p_i(chi) matches the monomial in top degree,
        the remainder has lower degree and recurses.
        """
        key = (i, chi)
        hit = self._hmono_memo.get(key)
        if hit is not None:
            return hit
        if not chi:
            return {EMPTY: _ONE}
        P = self.p(i, chi)
        word = tuple(((('h', i), a), e) for a, e in chi.items())
        lead = P.terms.get(word)
        if not lead:
            raise AlgebraError("p_%d(%r) lost its leading monomial" % (i, chi))
        rest = P - UElem({word: lead})
        out = {chi: 1 / lead}
        for w, c in rest.terms.items():
            sub_chi = Multiset((a, e) for ((_, a), e) in w)
            if sub_chi.size >= chi.size:
                raise AlgebraError("p remainder failed to drop in degree")
            for phi, c2 in self._h_mono_to_p(i, sub_chi).items():
                out[phi] = out.get(phi, 0) - (c / lead) * c2
        out = {phi: c for phi, c in out.items() if c}
        self._hmono_memo[key] = out
        return out

    def _expand_blocks(self, blocks):
        """Alternatives for each block as (key-part or None, coeff) lists."""
        parts = []
        for sym, ms in blocks:
            if sym[0] == 'h':
                conv = self._h_mono_to_p(sym[1], ms)
                parts.append([((sym, phi) if phi else None, c) for phi, c in conv.items()])
            elif self._parity[sym] == 0:
                fact = 1
                for _, e in ms.items():
                    fact *= math.factorial(e)
                parts.append([((sym, ms), Fraction(fact))])
            else:
                if any(e > 1 for _, e in ms.items()):
                    raise AlgebraError("odd letter with exponent > 1 in a canonical word")
                parts.append([((sym, ms), _ONE)])
        return parts

    def to_divided(self, x):
        """Exact change of basis into the divided-power integral basis."""
        out = {}

        def rec(parts, idx, keyacc, coeff, sink):
            if idx == len(parts):
                k = tuple(keyacc)
                sink[k] = sink.get(k, 0) + coeff
                return
            for part, c in parts[idx]:
                rec(parts, idx + 1, keyacc + ([part] if part else []), coeff * c, sink)

        for w, c in x.terms.items():
            parts = self._expand_blocks(self._word_blocks(w))
            rec(parts, 0, [], c, out)
        return DividedForm(out)

    def from_divided(self, df):
        """Inverse of to_divided."""
        acc = UElem()
        for key, c in df.terms.items():
            term = self.scalar(c)
            for sym, ms in key:
                if sym[0] == 'h':
                    factor = self.p(sym[1], ms)
                else:
                    fact = 1
                    for _, e in ms.items():
                        fact *= math.factorial(e)
                    word = tuple(((sym, a), e) for a, e in ms.items())
                    factor = UElem({word: Fraction(1, fact)})
                term = self.mul(term, factor)
            acc = acc + term
        return acc

    def is_integral(self, x):
        """Integral-form membership test; accepts UElem or DividedForm."""
        if isinstance(x, UElem):
            x = self.to_divided(x)
        return x.is_integral()

    def p_basis_convert(self, x):
        """Re-express a Cartan-supported UElem over products prod_i p_i(phi_i).

        Returns a dict keyed like divided-form keys (only 'h' symbols).
        """
        for w in x.terms:
            for (sym, _), _ in w:
                if sym[0] != 'h':
                    raise AlgebraError("p_basis_convert wants Cartan letters only, got %r" % (sym,))
        df = self.to_divided(x)
        return dict(df.terms)

    # -- basis enumeration and triangular splitting -------------------------

    def multisets_upto(self, elems, cap, odd):
        """All multisets over elems with size <= cap; 0/1 multiplicities when
        odd is set."""
        if odd:
            picks = [[]]
            for e in elems:
                picks += [p + [e] for p in picks if len(p) < cap]
            return [Multiset.of(*p) for p in picks]
        out = []

        def rec(idx, budget, acc):
            if idx == len(elems):
                out.append(Multiset(acc))
                return
            for c in range(budget + 1):
                rec(idx + 1, budget - c, acc + [(elems[idx], c)])

        rec(0, cap, [])
        return out

    def enumerate_basis(self, degree_cap, syms=None):
        """All divided-basis keys of filtration degree <= degree_cap, ordered
        deterministically.  Needs a finite coefficient basis."""
        if degree_cap < 0:
            raise AlgebraError("degree cap must be >= 0")
        elems = self.monoid.elements()
        if syms is None:
            syms = self.order.syms
        keys = []

        def rec(pos, remaining, acc):
            if pos == len(syms):
                keys.append(tuple(acc))
                return
            sym = syms[pos]
            odd = self._parity[sym] == 1
            for ms in self.multisets_upto(elems, remaining, odd):
                rec(pos + 1, remaining - ms.size, acc + ([(sym, ms)] if ms else []))

        rec(0, degree_cap, [])
        return keys

    def segment_of(self, sym):
        """-1 / 0 / +1 for negative-root / Cartan / positive-root symbols."""
        if sym[0] == 'h':
            return 0
        return 1 if self.spec.root(sym[1]).positive else -1

    def triangular_factor(self, x):
        """Factor an integral element through B- . B0 . B+ (Corollary-style
        triangular decomposition).  Returns (engine, [(coeff, k-, k0, k+)])
        where the keys concatenate to the divided-basis key of each term."""
        if self.order.is_triangular(self.spec):
            eng, y = self, x
        else:
            eng = Engine(self.spec, self.monoid, Order.triangular(self.spec))
            y = eng.adopt(x)
        df = eng.to_divided(y)
        out = []
        for key, c in df.terms.items():
            neg = tuple(kp for kp in key if eng.segment_of(kp[0]) < 0)
            zero = tuple(kp for kp in key if eng.segment_of(kp[0]) == 0)
            pos = tuple(kp for kp in key if eng.segment_of(kp[0]) > 0)
            if neg + zero + pos != key:
                raise AlgebraError("triangular order failed to segment %r" % (key,))
            out.append((c, neg, zero, pos))
        return eng, out
