#pragma once

#include <string>

#include "oreprime/error.hpp"
#include "oreprime/factorization.hpp"
#include "oreprime/similarity.hpp"
#include "oreprime/structure.hpp"
#include "oreprime/verdict.hpp"

namespace oreprime {

namespace detail {

template <class R>
void requireProper(const PrincipalLeftIdeal<R>& I) {
    if (I.isWholeRing()) throw ImproperIdealError("the ideal is the whole ring; primeness requires a proper left ideal");
}

/// A scalar or t that moves a out of Ra when multiplied on the right, if any.
template <class R>
std::optional<SkewPoly<R>> invarianceEscape(const SkewPoly<R>& a) {
    using P = SkewPoly<R>;
    const R& ring = a.ring();
    std::vector<P> gens{P::t(ring)};
    if constexpr (R::kind == RingKind::QXShift) {
        gens.push_back(P::constant(ring, RatFunc::x()));
    } else {
        for (const auto& s : ring.scalarGenerators()) gens.push_back(P::constant(ring, s));
    }
    for (const auto& s : gens)
        if (!rightDivides(a, a * s)) return s;
    return std::nullopt;
}

}  // namespace detail

/// ab in p implies a in p or b in p.
template <class R>
Verdict<SkewPoly<R>> isExtremelyPrime(const PrincipalLeftIdeal<R>& I) {
    using V = Verdict<SkewPoly<R>>;
    detail::requireProper(I);
    if (I.isZero()) return V::yes("zero-ideal-of-domain");
    const auto& a = I.generator();
    if (!isInvariant(a)) {
        auto s = detail::invarianceEscape(a);
        if (s) return V::no("not-invariant", {{"escape", *s}, {"product", a * *s}});
        return V::no("not-invariant");
    }
    auto atom = isAtom(a);
    if (atom.isYes()) return V::yes("invariant-atom");
    if (atom.isNo()) return V::no("invariant-not-atom", atom.witness);
    return V::inconclusive("atom-test:" + atom.reason);
}

/// ab in p and pb in p imply a in p or b in p.
template <class R>
Verdict<SkewPoly<R>> isCompletelyPrime(const PrincipalLeftIdeal<R>& I, const SimilarityOptions& opt = {}) {
    using V = Verdict<SkewPoly<R>>;
    detail::requireProper(I);
    if (I.isZero()) return V::yes("zero-ideal-of-domain");
    auto c = isCIrreducible(I.generator(), opt);
    if (c.isYes()) return V::yes("c-irreducible", c.witness);
    if (c.isNo()) return V::no("c-reducible", c.witness);
    return V::inconclusive("c-irreducibility:" + c.reason);
}

/// AB in p for left ideals implies A in p or B in p.
template <class R>
Verdict<SkewPoly<R>> isStructurallyPrime(const PrincipalLeftIdeal<R>& I) {
    using P = SkewPoly<R>;
    using V = Verdict<P>;
    detail::requireProper(I);
    if (I.isZero()) return V::yes("zero-ideal-of-domain");
    const auto& a = I.generator();
    if constexpr (R::kind == RingKind::QXShift) {
        if (!a.coeff(0).isZero()) return V::yes("left-totally-unbounded");
        if (a.degree() == 1) return V::yes("factor-of-inv-atom", {{"bound", P::t(a.ring())}});
        return V::no("bounded-left-factor-t", {{"left-factor", P::t(a.ring())}});
    } else {
        P h = bound(a).value();
        auto inv = isInvAtom(h);
        if (inv.isYes()) return V::yes("bound-is-inv-atom", {{"bound", h}});
        if (inv.isNo()) {
            auto w = inv.witness;
            w.insert(w.begin(), {"bound", h});
            return V::no("bound-not-inv-atom", w);
        }
        return V::inconclusive("inv-atom-test:" + inv.reason, {{"bound", h}});
    }
}

/// AB in p and pB in p imply A in p or B in p.
template <class R>
Verdict<SkewPoly<R>> isWeaklyPrime(const PrincipalLeftIdeal<R>& I) {
    using V = Verdict<SkewPoly<R>>;
    detail::requireProper(I);
    if (I.isZero()) return V::yes("zero-ideal-of-domain");
    const auto& a = I.generator();
    if (isInvariant(a)) {
        auto s = isStructurallyPrime(I);
        s.reason = "two-sided:" + s.reason;
        return s;
    }
    auto g = twoSidedClosure(a);
    if (g.isUnit()) return V::yes("closure-is-whole-ring", {{"closure", g}});
    return V::no("proper-invariant-factor", {{"closure", g}});
}

template <class R>
struct ClassificationReport {
    PrincipalLeftIdeal<R> ideal;
    bool invariant = false;
    BoundResult<R> bound;
    Verdict<SkewPoly<R>> extremely, completely, structurally, weakly;
    bool consistent = true;
};

struct LatticeViolation {
    bool any = false;
    std::string what;
};

/// Yes-level implications that hold for left ideals of a PID.
inline LatticeViolation checkPidLattice(Truth ext, Truth comp, Truth str, Truth weak) {
    auto breach = [](Truth premise, Truth conclusion) { return premise == Truth::Yes && conclusion == Truth::No; };
    if (breach(ext, comp)) return {true, "extremely => completely"};
    if (breach(ext, str)) return {true, "extremely => structurally"};
    if (breach(comp, str)) return {true, "completely => structurally"};
    if (breach(str, weak)) return {true, "structurally => weakly"};
    if (breach(comp, weak)) return {true, "completely => weakly"};
    return {};
}

/// Runs all four classifiers; a lattice violation is a library bug and throws.
template <class R>
ClassificationReport<R> classify(const PrincipalLeftIdeal<R>& I, const SimilarityOptions& opt = {}) {
    using P = SkewPoly<R>;
    detail::requireProper(I);
    ClassificationReport<R> rep{I, true, {BoundStatus::Bounded, P(I.ring()), 0}, {}, {}, {}, {}, true};
    if (!I.isZero()) {
        rep.invariant = isInvariant(I.generator());
        rep.bound = bound(I.generator());
    }
    rep.extremely = isExtremelyPrime(I);
    rep.completely = isCompletelyPrime(I, opt);
    rep.structurally = isStructurallyPrime(I);
    rep.weakly = isWeaklyPrime(I);
    auto v = checkPidLattice(rep.extremely.value, rep.completely.value, rep.structurally.value, rep.weakly.value);
    if (v.any) throw InternalError("implication lattice violated (" + v.what + ") for " + I.generator().str());
    return rep;
}

}  // namespace oreprime
