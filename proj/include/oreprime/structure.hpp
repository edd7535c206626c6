#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oreprime/error.hpp"
#include "oreprime/linalg.hpp"
#include "oreprime/prime_coords.hpp"
#include "oreprime/qfactor.hpp"
#include "oreprime/skew_poly.hpp"
#include "oreprime/verdict.hpp"

namespace oreprime {

namespace detail {

template <class R>
void requireNonzero(const SkewPoly<R>& a, const char* op) {
    if (a.isZero()) throw DomainError(std::string(op) + ": zero polynomial");
}

/// ord_t(a): index of the lowest nonzero coefficient.
template <class R>
int tOrder(const SkewPoly<R>& a) {
    int v = 0;
    while (a.coeff(v).isZero()) ++v;
    return v;
}

/// a = c * t^m for a scalar c.
template <class R>
bool isMonomial(const SkewPoly<R>& a) {
    return !a.isZero() && tOrder(a) == a.degree();
}

/// Basis over F_p of the fixed field of sigma (the scalars commuting with t).
inline std::vector<FFElem> fixedFieldBasis(const FFRing& ring) {
    const auto& f = ring.field();
    std::uint32_t fixOrder = ring.fixedOrder();
    FFElem g = f.element(f.primitive()).pow((f.order() - 1) / (fixOrder - 1));
    std::vector<FFElem> b;
    FFElem x = f.one();
    for (unsigned i = 0; i < ring.fixedDegree(); ++i, x = x * g) b.push_back(x);
    return b;
}

/// All monic polynomials of degree e over the fixed field, as coefficient lists.
inline std::vector<FFElem> fixedFieldElements(const FFRing& ring) {
    const auto& f = ring.field();
    std::vector<FFElem> out{f.zero()};
    std::uint32_t fixOrder = ring.fixedOrder();
    FFElem g = f.element(f.primitive()).pow((f.order() - 1) / (fixOrder - 1));
    FFElem x = f.one();
    for (std::uint32_t i = 0; i + 1 < fixOrder; ++i, x = x * g) out.push_back(x);
    return out;
}

/// Minimal-degree monic h in Ra of the form sum_k c_k t^{j + r k}, with c_k
/// ranging over the span of `central` (a prime-field basis of scalars
/// commuting with t). The remainder map f -> f mod Ra is left-linear, so the
/// search is one linear solve per candidate degree.
template <class R>
std::optional<SkewPoly<R>> searchInvariantMultiple(const SkewPoly<R>& a, int r,
                                                   const std::vector<typename R::Scalar>& central, int maxDegree) {
    using PC = PrimeCoords<R>;
    using F = typename PC::F;
    using P = SkewPoly<R>;
    const R& ring = a.ring();
    int n = a.degree();
    if (n == 0) return P::one(ring);
    std::vector<P> rems{divRight(P::one(ring), a).remainder};
    auto remPow = [&](int k) -> const P& {
        while (static_cast<int>(rems.size()) <= k) rems.push_back(divRight(P::t(ring) * rems.back(), a).remainder);
        return rems[static_cast<std::size_t>(k)];
    };
    std::size_t rows = PC::dim(ring) * static_cast<std::size_t>(n);
    for (int D = 1; D <= maxDegree; ++D) {
        int j = D % r, e = D / r;
        std::size_t cols = central.size() * static_cast<std::size_t>(e);
        Matrix<F> m(rows, cols, PC::zero(ring));
        for (int k = 0; k < e; ++k) {
            for (std::size_t l = 0; l < central.size(); ++l) {
                auto v = polyCoords(central[l] * remPow(j + r * k), n);
                for (std::size_t i = 0; i < rows; ++i) m(i, static_cast<std::size_t>(k) * central.size() + l) = v[i];
            }
        }
        auto target = polyCoords(remPow(D), n);
        for (auto& x : target) x = -x;
        auto sol = solve(m, target);
        if (!sol) continue;
        P h = P::t(ring, D);
        for (int k = 0; k < e; ++k) {
            auto c = ring.zero();
            for (std::size_t l = 0; l < central.size(); ++l)
                c = c + PC::embed(ring, (*sol)[static_cast<std::size_t>(k) * central.size() + l]) * central[l];
            h = h + P::monomial(ring, c, j + r * k);
        }
        return h;
    }
    return std::nullopt;
}

inline std::vector<FFElem> centralScalars(const FFRing& ring) { return fixedFieldBasis(ring); }
inline std::vector<Quat> centralScalars(const HQRing&) { return {Quat(1)}; }
inline int centralStep(const FFRing& ring) { return static_cast<int>(ring.sigmaOrder()); }
inline int centralStep(const HQRing&) { return 1; }
/// Degree within which the bound must appear.
inline int boundDegreeCap(const FFRing& ring, int n) {
    int r = static_cast<int>(ring.sigmaOrder());
    return r * r * n + r;
}
inline int boundDegreeCap(const HQRing&, int n) { return 2 * n; }

}  // namespace detail

/// True when Ra = aR.
template <class R>
bool isInvariant(const SkewPoly<R>& a) {
    detail::requireNonzero(a, "isInvariant");
    if constexpr (R::kind == RingKind::QXShift) {
        return detail::isMonomial(a);
    } else {
        const R& ring = a.ring();
        if (!rightDivides(a, a * SkewPoly<R>::t(ring))) return false;
        for (const auto& s : ring.scalarGenerators())
            if (!rightDivides(a, a * SkewPoly<R>::constant(ring, s))) return false;
        return true;
    }
}

/// Monic invariant g with RaR = Rg.
template <class R>
SkewPoly<R> twoSidedClosure(const SkewPoly<R>& a) {
    detail::requireNonzero(a, "twoSidedClosure");
    using P = SkewPoly<R>;
    const R& ring = a.ring();
    if constexpr (R::kind == RingKind::QXShift) {
        return P::t(ring, detail::tOrder(a));
    } else {
        std::vector<P> gens{P::t(ring)};
        for (const auto& s : ring.scalarGenerators()) gens.push_back(P::constant(ring, s));
        P g = a.monic();
        bool changed = true;
        while (changed && !g.isUnit()) {
            changed = false;
            for (const auto& s : gens) {
                P h = gcrd(g, g * s);
                if (h.degree() < g.degree()) {
                    g = h;
                    changed = true;
                }
            }
        }
        if (g.isUnit()) return P::one(ring);
        if (!isInvariant(g)) throw InternalError("two-sided closure ended on a non-invariant element");
        return g;
    }
}

enum class BoundStatus { Bounded, Unbounded, Inconclusive };

template <class R>
struct BoundResult {
    BoundStatus status = BoundStatus::Inconclusive;
    std::optional<SkewPoly<R>> bound;
    int cap = 0;

    bool isBounded() const { return status == BoundStatus::Bounded; }
    const SkewPoly<R>& value() const {
        if (!bound) throw DomainError("element has no computed bound");
        return *bound;
    }
};

inline const char* toString(BoundStatus s) {
    switch (s) {
        case BoundStatus::Bounded: return "Bounded";
        case BoundStatus::Unbounded: return "Unbounded";
        case BoundStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

/// Monic generator of the largest two-sided ideal inside Ra.
template <class R>
BoundResult<R> bound(const SkewPoly<R>& a) {
    detail::requireNonzero(a, "bound");
    using P = SkewPoly<R>;
    const R& ring = a.ring();
    if constexpr (R::kind == RingKind::QXShift) {
        if (detail::isMonomial(a)) return {BoundStatus::Bounded, P::t(ring, a.degree()), 0};
        return {BoundStatus::Unbounded, std::nullopt, 0};
    } else {
        int cap = detail::boundDegreeCap(ring, a.degree());
        auto h = detail::searchInvariantMultiple(a, detail::centralStep(ring), detail::centralScalars(ring), cap);
        if (!h) throw InternalError("no invariant multiple of " + a.str() + " up to degree " + std::to_string(cap));
        return {BoundStatus::Bounded, *h, cap};
    }
}

namespace detail {

/// Splits a monic invariant of F_q[t;sigma] as t^v * f(t^r) with f(0) != 0.
/// Returns f's coefficients (over the fixed field) in z = t^r.
inline std::vector<FFElem> centralPart(const SkewPoly<FFRing>& p, int& v) {
    int r = static_cast<int>(p.ring().sigmaOrder());
    v = tOrder(p);
    std::vector<FFElem> f;
    for (int k = v; k <= p.degree(); ++k) {
        if ((k - v) % r == 0) f.push_back(p.coeff(k));
        else if (!p.coeff(k).isZero()) throw InternalError("invariant element with a coefficient off the central lattice");
    }
    return f;
}

/// f (monic, over the fixed field) has no monic factor of degree 1..deg f/2.
inline bool isIrreducibleOverFixed(const FFRing& ring, const std::vector<FFElem>& f) {
    int e = static_cast<int>(f.size()) - 1;
    if (e <= 1) return e == 1;
    FFRing comm(ring.field(), 0);
    using P = SkewPoly<FFRing>;
    P fp(comm, f);
    auto elems = fixedFieldElements(ring);
    std::size_t base = elems.size();
    for (int d = 1; d <= e / 2; ++d) {
        double count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<double>(base);
        if (count > 4e6) throw CapExceeded("irreducibility test over the fixed field");
        std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
        while (true) {
            std::vector<FFElem> c;
            for (auto i : idx) c.push_back(elems[i]);
            c.push_back(ring.field().one());
            if (rightDivides(P(comm, c), fp)) return false;
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == base) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    return true;
}

}  // namespace detail

/// Whether the invariant non-unit p admits no factorization into two
/// invariant non-units.
template <class R>
Verdict<SkewPoly<R>> isInvAtom(const SkewPoly<R>& p) {
    using P = SkewPoly<R>;
    using V = Verdict<P>;
    detail::requireNonzero(p, "isInvAtom");
    if (p.isUnit()) throw DomainError("isInvAtom: unit input");
    if (!isInvariant(p)) throw DomainError("isInvAtom: " + p.str() + " is not invariant");
    const R& ring = p.ring();
    P mp = p.monic();
    if constexpr (R::kind == RingKind::QXShift) {
        if (mp.degree() == 1) return V::yes("associate-of-t");
        return V::no("power-of-t", {{"left", P::t(ring)}, {"right", P::t(ring, mp.degree() - 1)}});
    } else if constexpr (R::kind == RingKind::HQ) {
        std::vector<Rational> c;
        for (const auto& q : mp.coeffs()) {
            if (!q.isScalar()) throw InternalError("monic invariant with a non-central coefficient");
            c.push_back(q.w());
        }
        std::vector<QFactor> fs;
        try {
            fs = commFactorQ(QPoly(c));
        } catch (const CapExceeded& e) {
            return V::inconclusive("central-factorization-cap");
        }
        if (fs.size() == 1 && fs[0].multiplicity == 1) return V::yes("irreducible-central");
        std::vector<Quat> f0;
        for (const auto& x : fs[0].factor.coeffs()) f0.push_back(Quat(x));
        P right(ring, f0);
        return V::no("central-factor", {{"left", divRight(mp, right).quotient}, {"right", right}});
    } else {
        int v = 0;
        auto f = detail::centralPart(mp, v);
        int r = static_cast<int>(ring.sigmaOrder());
        if (f.size() == 1) {
            if (v == 1) return V::yes("t");
            return V::no("power-of-t", {{"left", P::t(ring, v - 1)}, {"right", P::t(ring)}});
        }
        if (v > 0) return V::no("t-factor", {{"left", divRight(mp, P::t(ring, v)).quotient}, {"right", P::t(ring, v)}});
        bool irr;
        try {
            irr = detail::isIrreducibleOverFixed(ring, f);
        } catch (const CapExceeded&) {
            return V::inconclusive("fixed-field-factorization-cap");
        }
        if (irr) return V::yes("irreducible-central");
        // locate an invariant proper right factor for the witness
        FFRing comm(ring.field(), 0);
        SkewPoly<FFRing> fz(comm, f);
        for (int d = 1; d < static_cast<int>(f.size()) - 1; ++d) {
            auto elems = detail::fixedFieldElements(ring);
            std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
            while (true) {
                std::vector<FFElem> c;
                for (auto i : idx) c.push_back(elems[i]);
                c.push_back(ring.field().one());
                if (rightDivides(SkewPoly<FFRing>(comm, c), fz)) {
                    std::vector<FFElem> lifted(static_cast<std::size_t>(r * d) + 1, ring.zero());
                    for (std::size_t k = 0; k < c.size(); ++k) lifted[k * static_cast<std::size_t>(r)] = c[k];
                    P right(ring, lifted);
                    return V::no("central-factor", {{"left", divRight(mp, right).quotient}, {"right", right}});
                }
                std::size_t pos = 0;
                while (pos < idx.size() && ++idx[pos] == elems.size()) idx[pos++] = 0;
                if (pos == idx.size()) break;
            }
        }
        throw InternalError("reducible central part without a located factor");
    }
}

/// Monic generator b of (Ra : c) = {x : xc in Ra}.
template <class R>
SkewPoly<R> leftQuotient(const SkewPoly<R>& a, const SkewPoly<R>& c) {
    detail::requireNonzero(a, "leftQuotient");
    using P = SkewPoly<R>;
    if (c.isZero() || rightDivides(a, c)) return P::one(a.ring());
    P l = lclm(a, c);
    auto [b, r] = divRight(l, c);
    if (!r.isZero()) throw InternalError("lclm is not a left multiple of its argument");
    return b.monic();
}

}  // namespace oreprime
