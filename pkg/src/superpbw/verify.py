"""Executable checks for every closed-form claim: identity sweeps (LHS via the
baseline normalizer vs the built RHS), degree bounds, the Cartan product law,
random integrality sampling, basis counting, and the suite runner."""

import itertools
import json
import random
import time
from dataclasses import dataclass, field

from . import identities as ident
from .algebra import SpecError, load_spec_path, preset, root_string, PRESET_NAMES
from .coeffalg import monoid_preset
from .combinatorics import Multiset, binomial, verify_comb_identity
from .engine import Engine, Order, UElem, key_degree


@dataclass
class CheckReport:
    identity: str
    algebra: str
    params: tuple            # ((name, printable value), ...)
    verdict: str             # "pass" | "fail" | "inapplicable"
    detail: str = ""
    diffs: tuple = ()        # ((word string, lhs coeff, rhs coeff), ...)
    seconds: float = 0.0

    @property
    def ok(self):
        return self.verdict != "fail"

    def line(self):
        bits = ["CHECK id=%s algebra=%s" % (self.identity, self.algebra)]
        bits += ["%s=%s" % (k, v) for k, v in self.params]
        bits.append("verdict=%s" % self.verdict.upper())
        if self.detail:
            bits.append("[%s]" % self.detail)
        return " ".join(bits)


@dataclass
class SweepBounds:
    rmax: int = 3
    smax: int = 3
    mmax: int = 3
    chimax: int = 3


_engines = {}


def get_engine(algebra, monoid="trunc:4", order="triangular"):
    """Shared engines so p/normalizer memo tables persist across checks."""
    key = (algebra, monoid, order)
    if key not in _engines:
        spec = preset(algebra) if algebra in PRESET_NAMES else load_spec_path(algebra)
        mon = monoid_preset(monoid)
        if order == "triangular":
            o = Order.triangular(spec)
        elif order == "lexicographic":
            o = Order.lexicographic(spec)
        else:
            o = Order.from_items(spec, order.split(","))
        _engines[key] = Engine(spec, mon, o)
    return _engines[key]


# ---------------------------------------------------------------------------
# parameter formatting

def fmt_mset(monoid, ms):
    if not ms:
        return "0"
    return ",".join("%s:%d" % (monoid.format_elt(e), m) for e, m in ms.items())


def fmt_value(monoid, v):
    if isinstance(v, Multiset):
        return fmt_mset(monoid, v)
    if isinstance(v, tuple):
        return monoid.format_elt(v)
    return str(v)


def fmt_params(engine, ps):
    return tuple(sorted((k, fmt_value(engine.monoid, v)) for k, v in ps.items()))


# ---------------------------------------------------------------------------
# identity registry

def _even(engine):
    return engine.spec.even_roots()


def _odd(engine):
    return engine.spec.odd_roots()


def _elems(engine):
    return engine.monoid.elements()


def _msets(engine, cap):
    return engine.multisets_upto(_elems(engine), cap, odd=False)


def _applicable_true(engine, ps):
    return True, ""


def _gate_nonisotropic(engine, ps):
    if engine.spec.root_sum(ps["gamma"], ps["gamma"]) is None:
        return False, "2*gamma is not a root"
    return True, ""


def _gate_isotropic_partner(engine, ps):
    # 4.12 excludes alpha = +-2*gamma (those cases are the sliding law 4.11)
    spec = engine.spec
    g2 = spec.root_sum(ps["gamma"], ps["gamma"])
    if g2 is not None and ps["alpha"] in (g2, spec.negative_of(g2)):
        return False, "alpha = +-2*gamma"
    return True, ""


def _chain_position_ok(engine, ps):
    """The +-1-sign closed forms cover beta at the bottom of its alpha-string
    (r_{alpha,beta} = 0); for a middle-of-string beta the bracket constant is
    +-(r+1) and no unit-sign assignment can match."""
    if engine.spec.root_sum(ps["alpha"], ps["beta"]) is None:
        return True
    return root_string(engine.spec, ps["alpha"], ps["beta"]).r == 0


def _quadrant_within(engine, ps, allowed):
    """True when every root i*alpha + j*beta (i, j >= 1) is one of the shapes
    the case formula displays."""
    spec = engine.spec
    for i in range(1, 5):
        for j in range(1, 5):
            if spec.root_sum(ps["alpha"], ps["beta"], i, j) is not None \
                    and (i, j) not in allowed:
                return False
    return True


def _gate_pair_type(kind, allowed=None):
    def gate(engine, ps):
        t = ident._even_pair_type(engine.spec, ps["alpha"], ps["beta"])
        if t != kind:
            return False, "pair type is %s, not %s" % (t, kind)
        if allowed is not None:
            if not _chain_position_ok(engine, ps):
                return False, "beta is not at the bottom of its alpha-string"
            if not _quadrant_within(engine, ps, allowed):
                return False, "pair produces roots outside the displayed shapes"
        return True, ""
    return gate


def _gate_chain_any(engine, ps):
    if not _chain_position_ok(engine, ps):
        return False, "beta is not at the bottom of its alpha-string"
    return True, ""


def _sweep_4_1(engine, b):
    for i in range(1, engine.spec.rank + 1):
        for j in range(i, engine.spec.rank + 1):
            for chi in _msets(engine, b.chimax):
                for phi in _msets(engine, b.chimax):
                    yield {"i": i, "j": j, "chi": chi, "phi": phi}


def _sweep_4_2(engine, b):
    for beta in _even(engine):
        for belt in _elems(engine):
            for r in range(b.rmax + 1):
                for s in range(b.smax + 1):
                    yield {"beta": beta, "b": belt, "r": r, "s": s}


def _sweep_4_3(engine, b):
    for alpha in _even(engine):
        for a in _elems(engine):
            for belt in _elems(engine):
                for r in range(b.rmax + 1):
                    for s in range(b.smax + 1):
                        yield {"alpha": alpha, "a": a, "b": belt, "r": r, "s": s}


def _sweep_4_45(engine, b):
    for alpha in _even(engine):
        for i in range(1, engine.spec.rank + 1):
            for belt in _elems(engine):
                for r in range(b.rmax + 1):
                    for chi in _msets(engine, b.chimax):
                        yield {"alpha": alpha, "i": i, "b": belt, "r": r, "chi": chi}


def _sweep_pairs(engine, b):
    spec = engine.spec
    for alpha in _even(engine):
        for beta in _even(engine):
            if beta in (alpha, spec.negative_of(alpha)):
                continue
            for a in _elems(engine):
                for belt in _elems(engine):
                    for r in range(b.rmax + 1):
                        for s in range(b.smax + 1):
                            yield {"alpha": alpha, "beta": beta, "a": a, "b": belt,
                                   "r": r, "s": s}


def _sweep_L4_3(engine, b):
    for delta in (r.label for r in engine.spec.roots):
        for i in range(1, engine.spec.rank + 1):
            for belt in _elems(engine):
                for chi in _msets(engine, b.chimax):
                    yield {"delta": delta, "i": i, "b": belt, "chi": chi}


def _sweep_4_7(engine, b):
    for gamma in _odd(engine):
        for i in range(1, engine.spec.rank + 1):
            for a in _elems(engine):
                for chi in _msets(engine, b.chimax):
                    yield {"gamma": gamma, "i": i, "a": a, "chi": chi}


def _sweep_4_8(engine, b):
    for gamma in _odd(engine):
        for a in _elems(engine):
            yield {"gamma": gamma, "a": a}


def _sweep_4_9(engine, b):
    for gamma in _odd(engine):
        for a in _elems(engine):
            for belt in _elems(engine):
                yield {"gamma": gamma, "a": a, "b": belt}


def _sweep_4_10(engine, b):
    spec = engine.spec
    for gamma in _odd(engine):
        for delta in _odd(engine):
            if delta == spec.negative_of(gamma):
                continue
            for a in _elems(engine):
                for belt in _elems(engine):
                    yield {"gamma": gamma, "delta": delta, "a": a, "b": belt}


def _sweep_4_11(engine, b):
    for gamma in _odd(engine):
        for m in range(b.mmax + 1):
            for a in _elems(engine):
                for belt in _elems(engine):
                    yield {"gamma": gamma, "m": m, "a": a, "b": belt}


def _sweep_4_12(engine, b):
    for alpha in _even(engine):
        for gamma in _odd(engine):
            for m in range(b.mmax + 1):
                for a in _elems(engine):
                    for belt in _elems(engine):
                        yield {"alpha": alpha, "gamma": gamma, "m": m, "a": a, "b": belt}


@dataclass(frozen=True)
class IdentityCheck:
    lhs: object
    rhs: object
    sweep: object
    applicable: object = _applicable_true
    sign_key: object = None     # params -> cache key for solved sign reuse


def _pair_sign_key(ps):
    return (ps["alpha"], ps["beta"])


IDENTITIES = {
    "4.1": IdentityCheck(ident.lhs_4_1, ident.rhs_4_1, _sweep_4_1),
    "4.2": IdentityCheck(ident.lhs_4_2, ident.rhs_4_2, _sweep_4_2),
    "4.3": IdentityCheck(ident.lhs_4_3, ident.rhs_4_3, _sweep_4_3),
    "4.4": IdentityCheck(ident.lhs_4_4, ident.rhs_4_4, _sweep_4_45),
    "4.5": IdentityCheck(ident.lhs_4_5, ident.rhs_4_5, _sweep_4_45),
    "4.6": IdentityCheck(ident.lhs_4_6, ident.rhs_4_6, _sweep_pairs,
                         applicable=_gate_chain_any, sign_key=_pair_sign_key),
    "L4.4a": IdentityCheck(ident.lhs_4_6, ident.rhs_L44a, _sweep_pairs,
                           applicable=_gate_pair_type("A2")),
    "L4.4b": IdentityCheck(ident.lhs_4_6, ident.rhs_L44b, _sweep_pairs,
                           applicable=_gate_pair_type("B2", allowed={(1, 1), (2, 1)}),
                           sign_key=_pair_sign_key),
    "L4.4c": IdentityCheck(ident.lhs_4_6, ident.rhs_L44c, _sweep_pairs,
                           applicable=_gate_pair_type(
                               "G2", allowed={(1, 1), (2, 1), (3, 1), (3, 2)}),
                           sign_key=_pair_sign_key),
    "L4.3": IdentityCheck(ident.lhs_xdelta_p, ident.rhs_xdelta_p, _sweep_L4_3),
    "4.7": IdentityCheck(ident.lhs_xdelta_p, ident.rhs_xdelta_p, _sweep_4_7),
    "4.8": IdentityCheck(ident.lhs_4_8, ident.rhs_4_8, _sweep_4_8,
                         applicable=_gate_nonisotropic),
    "4.9": IdentityCheck(ident.lhs_4_9, ident.rhs_4_9, _sweep_4_9),
    "4.10": IdentityCheck(ident.lhs_4_10, ident.rhs_4_10, _sweep_4_10),
    "4.11": IdentityCheck(ident.lhs_4_11, ident.rhs_4_11, _sweep_4_11,
                          applicable=_gate_nonisotropic),
    "4.12": IdentityCheck(ident.lhs_4_12, ident.rhs_4_12, _sweep_4_12,
                          applicable=_gate_isotropic_partner),
}

IDENTITY_IDS = tuple(list(IDENTITIES) + ["L5.2", "comb"])


def _diff_terms(engine, lhs, rhs, limit=5):
    from .exprio import word_str
    delta = lhs - rhs
    out = []
    for w in sorted(delta.terms, key=engine.word_key)[:limit]:
        out.append((word_str(engine, w), str(lhs.terms.get(w, 0)), str(rhs.terms.get(w, 0))))
    return tuple(out)


def _solve_signs(lhs, template, known):
    """Find eps in {+-1}^slots with base + sum eps_k T_k = lhs; returns
    (solutions, labels)."""
    target = lhs - template.base
    labels = [lab for lab, _ in template.slots]
    terms = [t for _, t in template.slots]
    solutions = []
    for bits in itertools.product((1, -1), repeat=len(terms)):
        if any(known.get(lab, bit) != bit for lab, bit in zip(labels, bits)):
            continue
        acc = UElem()
        for t, bit in zip(terms, bits):
            acc = acc + (t if bit == 1 else -1 * t)
        if acc == target:
            solutions.append(dict(zip(labels, bits)))
    return solutions, labels


def verify_identity(engine, ident_id, ps, sign_cache=None):
    """Run one identity instance; returns a CheckReport.  For sign-template
    identities the +-1 slots are solved exhaustively and must be unique; a
    sign_cache (keyed per root pair) makes later instances reuse and confirm
    the solved assignment."""
    check = IDENTITIES[ident_id]
    t0 = time.perf_counter()
    name = engine.spec.name
    params = fmt_params(engine, ps)
    ok, why = check.applicable(engine, ps)
    if not ok:
        return CheckReport(ident_id, name, params, "inapplicable", why,
                           seconds=time.perf_counter() - t0)
    try:
        lhs = check.lhs(engine, ps)
        rhs = check.rhs(engine, ps)
    except ident.Inapplicable as e:
        return CheckReport(ident_id, name, params, "inapplicable", str(e),
                           seconds=time.perf_counter() - t0)
    if isinstance(rhs, ident.SignTemplate):
        known = {}
        if sign_cache is not None and check.sign_key is not None:
            known = sign_cache.setdefault((ident_id, name, check.sign_key(ps)), {})
        sols, labels = _solve_signs(lhs, rhs, known)
        if not sols:
            unconstrained, _ = _solve_signs(lhs, rhs, {})
            detail = ("cached signs fail: not reusable" if unconstrained
                      else "no sign assignment zeroes the difference")
            return CheckReport(ident_id, name, params, "fail", detail,
                               _diff_terms(engine, lhs, rhs.base),
                               time.perf_counter() - t0)
        if len(sols) > 1:
            return CheckReport(ident_id, name, params, "fail",
                               "ambiguous sign assignment (%d solutions)" % len(sols),
                               seconds=time.perf_counter() - t0)
        known.update(sols[0])
        detail = " ".join("eps[%s]=%+d" % (lab, sols[0][lab]) for lab in labels) or "no slots"
        return CheckReport(ident_id, name, params, "pass", detail,
                           seconds=time.perf_counter() - t0)
    if lhs == rhs:
        return CheckReport(ident_id, name, params, "pass",
                           seconds=time.perf_counter() - t0)
    return CheckReport(ident_id, name, params, "fail", "LHS != RHS",
                       _diff_terms(engine, lhs, rhs), time.perf_counter() - t0)


def sweep_identity(engine, ident_id, bounds=None, fixed=None):
    """All CheckReports for an identity over the default sweep, optionally
    restricted by fixing some parameters."""
    bounds = bounds or SweepBounds()
    check = IDENTITIES[ident_id]
    sign_cache = {}
    out = []
    for ps in check.sweep(engine, bounds):
        if fixed and any(k in ps and fmt_value(engine.monoid, ps[k]) != v
                         for k, v in fixed.items()):
            continue
        out.append(verify_identity(engine, ident_id, ps, sign_cache))
    return out


# ---------------------------------------------------------------------------
# degree bounds (the seven super-bracket estimates)

def _bound_report(engine, item, ps, value, limit, want_integral):
    t0 = time.perf_counter()
    deg = value.degree
    ok = deg < limit
    detail = "degree %s < %d" % (deg, limit)
    if ok and want_integral:
        ok = engine.is_integral(value)
        detail += ", integral" if ok else ", NOT integral"
    return CheckReport("deg%d" % item, engine.spec.name, fmt_params(engine, ps),
                       "pass" if ok else "fail", detail,
                       seconds=time.perf_counter() - t0)


def verify_degree_bounds(engine, bounds=None):
    """Bracket-degree estimates for the seven generator pairings; items (1)
    and (2) also assert membership in the integral span."""
    b = bounds or SweepBounds()
    spec = engine.spec
    reps = []
    elems = _elems(engine)
    rng_r = range(b.rmax + 1)

    for alpha in _even(engine):
        nalpha = spec.negative_of(alpha)
        for a in elems:
            for belt in elems:
                for r in rng_r:
                    for s in rng_r:
                        u = engine.divided_power(('x', alpha), a, r)
                        v = engine.divided_power(('x', nalpha), belt, s)
                        reps.append(_bound_report(
                            engine, 1, {"alpha": alpha, "a": a, "b": belt, "r": r, "s": s},
                            engine.super_comm(u, v), r + s, True))

    for beta in _even(engine):
        for i in range(1, spec.rank + 1):
            for a in elems:
                for r in rng_r:
                    for chi in _msets(engine, b.chimax):
                        u = engine.divided_power(('x', beta), a, r)
                        v = engine.p(i, chi)
                        reps.append(_bound_report(
                            engine, 2, {"beta": beta, "i": i, "a": a, "r": r, "chi": chi},
                            engine.super_comm(u, v), r + chi.size, True))

    for beta in _even(engine):
        for gamma in _even(engine):
            if gamma == spec.negative_of(beta):
                continue
            for a in elems:
                for belt in elems:
                    for r in rng_r:
                        for s in rng_r:
                            u = engine.divided_power(('x', beta), a, r)
                            v = engine.divided_power(('x', gamma), belt, s)
                            reps.append(_bound_report(
                                engine, 3,
                                {"beta": beta, "gamma": gamma, "a": a, "b": belt, "r": r, "s": s},
                                engine.super_comm(u, v), r + s, False))

    for delta in _odd(engine):
        for i in range(1, spec.rank + 1):
            for a in elems:
                for chi in _msets(engine, b.chimax):
                    u = engine.gen_elem(('x', delta), a)
                    v = engine.p(i, chi)
                    reps.append(_bound_report(
                        engine, 4, {"delta": delta, "i": i, "a": a, "chi": chi},
                        engine.super_comm(u, v), chi.size + 1, False))

    for beta in _even(engine):
        for delta in _odd(engine):
            for a in elems:
                for belt in elems:
                    for r in rng_r:
                        u = engine.divided_power(('x', beta), a, r)
                        v = engine.gen_elem(('x', delta), belt)
                        reps.append(_bound_report(
                            engine, 5, {"beta": beta, "delta": delta, "a": a, "b": belt, "r": r},
                            engine.super_comm(u, v), r + 1, False))

    for delta in _odd(engine):
        for zeta in _odd(engine):
            for a in elems:
                for belt in elems:
                    u = engine.gen_elem(('x', delta), a)
                    v = engine.gen_elem(('x', zeta), belt)
                    reps.append(_bound_report(
                        engine, 6, {"delta": delta, "zeta": zeta, "a": a, "b": belt},
                        engine.super_comm(u, v), 2, False))

    for gamma in _odd(engine):
        g2 = spec.root_sum(gamma, gamma)
        if g2 is None:
            continue
        partner = spec.negative_of(g2)
        for a in elems:
            for belt in elems:
                for m in range(b.mmax + 1):
                    u = engine.gen_elem(('x', gamma), a)
                    v = engine.divided_power(('x', partner), belt, m)
                    reps.append(_bound_report(
                        engine, 7, {"gamma": gamma, "a": a, "b": belt, "m": m},
                        engine.super_comm(u, v), m + 1, False))
    return reps


# ---------------------------------------------------------------------------
# the Cartan product law

def verify_lemma_5_2(engine, i, chi, phi):
    """p_i(chi) p_i(phi) = prod_a binom((chi+phi)(a), chi(a)) p_i(chi+phi) + u
    with u an integer combination of p_i(psi) of degree < |chi|+|phi|."""
    t0 = time.perf_counter()
    lead = 1
    total = chi + phi
    for a, m in total.items():
        lead *= binomial(m, chi(a))
    u = engine.mul(engine.p(i, chi), engine.p(i, phi)) - lead * engine.p(i, total)
    conv = engine.p_basis_convert(u)
    bad = []
    limit = chi.size + phi.size
    for key, c in conv.items():
        if len(key) > 1 or (key and key[0][0] != ('h', i)):
            bad.append("mixed Cartan support %r" % (key,))
        if key_degree(key) >= limit:
            bad.append("degree %d !< %d" % (key_degree(key), limit))
        if c.denominator != 1:
            bad.append("non-integer coefficient %s" % c)
    ps = fmt_params(engine, {"i": i, "chi": chi, "phi": phi})
    return CheckReport("L5.2", engine.spec.name, ps,
                       "fail" if bad else "pass", "; ".join(bad),
                       seconds=time.perf_counter() - t0)


def sweep_lemma_5_2(engine, bounds=None):
    b = bounds or SweepBounds()
    out = []
    for i in range(1, engine.spec.rank + 1):
        for chi in _msets(engine, b.chimax):
            for phi in _msets(engine, b.chimax):
                out.append(verify_lemma_5_2(engine, i, chi, phi))
    return out


def sweep_comb_identity(maxsize=6, support=3, drange=(-5, 5)):
    """The integer identity behind the Cartan straightening, checked for all
    multisets up to the stated size over abstract supports."""
    t0 = time.perf_counter()
    fails = []
    total = 0
    elems = list(range(support))

    def msets(size):
        def rec(idx, remaining, acc):
            if idx == len(elems):
                if remaining == 0:
                    yield Multiset(acc)
                return
            for c in range(remaining + 1):
                yield from rec(idx + 1, remaining - c, acc + [(elems[idx], c)])
        yield from rec(0, size, [])

    for size in range(1, maxsize + 1):
        for psi1 in msets(size):
            for d in range(drange[0], drange[1] + 1):
                total += 1
                if not verify_comb_identity(psi1, d):
                    fails.append((psi1, d))
    detail = "%d instances" % total
    if fails:
        detail += "; first failure %r" % (fails[0],)
    return CheckReport("comb", "-", (("maxsize", str(maxsize)), ("support", str(support))),
                       "fail" if fails else "pass", detail, seconds=time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# integrality sampling and triangular factorization

def sample_generator(engine, rng, bounds):
    """One random generator of the integral form: an even divided power, an
    odd letter, or a Cartan p-element."""
    spec = engine.spec
    elems = _elems(engine)
    kind = rng.choice(["even", "odd", "p"] if _odd(engine) else ["even", "p"])
    if kind == "even":
        alpha = rng.choice(_even(engine))
        s = rng.randint(1, bounds.smax)
        belt = rng.choice(elems)
        return ("(x[%s]{%s})^(%d)" % (alpha, engine.monoid.format_elt(belt), s),
                engine.divided_power(('x', alpha), belt, s))
    if kind == "odd":
        gamma = rng.choice(_odd(engine))
        celt = rng.choice(elems)
        return ("x[%s]{%s}" % (gamma, engine.monoid.format_elt(celt)),
                engine.gen_elem(('x', gamma), celt))
    i = rng.randint(1, spec.rank)
    size = rng.randint(0, bounds.chimax)
    chi = Multiset.of(*(rng.choice(elems) for _ in range(size)))
    return ("p[%d]{%s}" % (i, fmt_mset(engine.monoid, chi)), engine.p(i, chi))


def sample_products(engine, gens, trials, seed, bounds=None):
    """Deterministic stream of (description, UElem) products of <= gens
    generators from the integral form's generating set."""
    bounds = bounds or SweepBounds()
    rng = random.Random(seed)
    for _ in range(trials):
        k = rng.randint(1, gens)
        label = []
        acc = engine.one()
        for _ in range(k):
            desc, g = sample_generator(engine, rng, bounds)
            label.append(desc)
            acc = engine.mul(acc, g)
        yield " ".join(label), acc


def verify_integrality(engine, gens=6, trials=100, seed=0, bounds=None):
    """Random products of integral-form generators must have integer
    coordinates in the divided-power basis."""
    t0 = time.perf_counter()
    fails = []
    for desc, prod in sample_products(engine, gens, trials, seed, bounds):
        if not engine.is_integral(prod):
            fails.append(desc)
    detail = "%d products of <= %d generators, seed %d" % (trials, gens, seed)
    if fails:
        detail += "; first failure: %s" % fails[0]
    return CheckReport("integrality", engine.spec.name,
                       (("gens", str(gens)), ("trials", str(trials)), ("seed", str(seed))),
                       "fail" if fails else "pass", detail, seconds=time.perf_counter() - t0)


def verify_triangular(engine, gens=6, trials=100, seed=0, bounds=None):
    """The same random products must factor through B- . B0 . B+ with integer
    coefficients (triangular decomposition of the integral form)."""
    t0 = time.perf_counter()
    fails = []
    for desc, prod in sample_products(engine, gens, trials, seed, bounds):
        _, factored = engine.triangular_factor(prod)
        for c, kneg, kzero, kpos in factored:
            if c.denominator != 1:
                fails.append("%s -> non-integer %s" % (desc, c))
                break
    detail = "%d products, seed %d" % (trials, seed)
    if fails:
        detail += "; first failure: %s" % fails[0]
    return CheckReport("triangular", engine.spec.name,
                       (("gens", str(gens)), ("trials", str(trials)), ("seed", str(seed))),
                       "fail" if fails else "pass", detail, seconds=time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# basis counts

def genfun_counts(spec, monoid, degree_cap):
    """Independent count oracle: coefficients of
    prod_{even slots} (1-q)^-1 * prod_{odd slots} (1+q), slots =
    (roots + Cartan) x basis(A), truncated at q^degree_cap."""
    nb = len(monoid.elements())
    n_even = (len(spec.even_roots()) + spec.rank) * nb
    n_odd = len(spec.odd_roots()) * nb
    poly = [1] + [0] * degree_cap
    for _ in range(n_even):
        for d in range(1, degree_cap + 1):   # multiply by 1/(1-q): prefix sums
            poly[d] += poly[d - 1]
    for _ in range(n_odd):
        for d in range(degree_cap, 0, -1):   # multiply by (1+q)
            poly[d] += poly[d - 1]
    return poly


def verify_basis_counts(engine, degree_cap):
    """enumerate_basis counts per degree match the generating-function oracle;
    keys are pairwise distinct; with the triangular order the segment counts
    convolve to the full counts."""
    t0 = time.perf_counter()
    bad = []
    keys = engine.enumerate_basis(degree_cap)
    if len(set(keys)) != len(keys):
        bad.append("repeated canonical words")
    counts = [0] * (degree_cap + 1)
    for k in keys:
        counts[key_degree(k)] += 1
    oracle = genfun_counts(engine.spec, engine.monoid, degree_cap)
    if counts != oracle:
        bad.append("counts %r != oracle %r" % (counts, oracle))

    seg_counts = {}
    for seg in (-1, 0, 1):
        syms = [s for s in engine.order.syms if engine.segment_of(s) == seg]
        cs = [0] * (degree_cap + 1)
        for k in engine.enumerate_basis(degree_cap, syms):
            cs[key_degree(k)] += 1
        seg_counts[seg] = cs
    for d in range(degree_cap + 1):
        conv = sum(seg_counts[-1][d1] * seg_counts[0][d2] * seg_counts[1][d - d1 - d2]
                   for d1 in range(d + 1) for d2 in range(d + 1 - d1))
        if conv != counts[d]:
            bad.append("segment counts fail to convolve at degree %d" % d)
    return CheckReport("basis", engine.spec.name,
                       (("degree", str(degree_cap)), ("monoid", engine.monoid.name)),
                       "fail" if bad else "pass",
                       "; ".join(bad) if bad else "counts %r" % counts,
                       seconds=time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# suite runner

@dataclass
class SuiteConfig:
    algebras: tuple = PRESET_NAMES
    identities: tuple = tuple(IDENTITIES)
    monoid: str = "trunc:4"
    bounds: SweepBounds = field(default_factory=SweepBounds)
    degree_bounds: bool = True
    lemma_5_2: bool = True
    comb: bool = True
    integrality_trials: int = 50
    integrality_gens: int = 4
    basis_degree: int = 4
    seed: int = 0

    @classmethod
    def from_json(cls, text):
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise SpecError("bad suite config: %s" % e)
        if not isinstance(raw, dict):
            raise SpecError("suite config must be a JSON object")
        kwargs = {}
        bounds = {}
        for k, v in raw.items():
            if k in ("rmax", "smax", "mmax", "chimax"):
                bounds[k] = int(v)
            elif k in ("algebras", "identities"):
                kwargs[k] = tuple(v)
            elif k in ("monoid",):
                kwargs[k] = str(v)
            elif k in ("degree_bounds", "lemma_5_2", "comb"):
                kwargs[k] = bool(v)
            elif k in ("integrality_trials", "integrality_gens", "basis_degree", "seed"):
                kwargs[k] = int(v)
            else:
                raise SpecError("unknown suite config key %r" % k)
        if bounds:
            kwargs["bounds"] = SweepBounds(**bounds)
        return cls(**kwargs)


@dataclass
class SuiteResult:
    reports: list

    @property
    def counts(self):
        c = {"pass": 0, "fail": 0, "inapplicable": 0}
        for r in self.reports:
            c[r.verdict] += 1
        return c

    @property
    def ok(self):
        return self.counts["fail"] == 0

    def summary(self):
        c = self.counts
        return "SUMMARY checks=%d pass=%d fail=%d inapplicable=%d" % (
            len(self.reports), c["pass"], c["fail"], c["inapplicable"])


def run_suite(config, emit=None):
    """Run everything the config asks for; `emit` (if given) receives each
    report line as it is produced."""
    reports = []

    def add(r):
        reports.append(r)
        if emit:
            emit(r.line())

    for algebra in config.algebras:
        engine = get_engine(algebra, config.monoid)
        for ident_id in config.identities:
            for r in sweep_identity(engine, ident_id, config.bounds):
                add(r)
        if config.degree_bounds:
            for r in verify_degree_bounds(engine, config.bounds):
                add(r)
        if config.lemma_5_2:
            for r in sweep_lemma_5_2(engine, config.bounds):
                add(r)
        add(verify_integrality(engine, config.integrality_gens,
                               config.integrality_trials, config.seed, config.bounds))
        add(verify_triangular(engine, config.integrality_gens,
                              config.integrality_trials, config.seed, config.bounds))
        add(verify_basis_counts(engine, config.basis_degree))
    if config.comb:
        add(sweep_comb_identity())
    result = SuiteResult(reports)
    if emit:
        emit(result.summary())
    return result
