#pragma once

#include <cstddef>
#include <vector>

#include "oreprime/galois_field.hpp"
#include "oreprime/rational.hpp"
#include "oreprime/rings.hpp"
#include "oreprime/skew_poly.hpp"

namespace oreprime {

/// Coordinates of scalars over the prime field (F_p for FF rings, Q for HQ).
/// R/Ra is a finite-dimensional vector space over this field, which is where
/// all the linear algebra happens.
template <class R>
struct PrimeCoords;

template <>
struct PrimeCoords<FFRing> {
    using F = FFElem;
    static const GaloisField& primeField(const FFRing& r) { return GaloisField::get(r.field().characteristic(), 1); }
    static F zero(const FFRing& r) { return primeField(r).zero(); }
    static F one(const FFRing& r) { return primeField(r).one(); }
    static std::size_t dim(const FFRing& r) { return r.field().degree(); }
    static std::vector<F> coords(const FFRing& r, const FFElem& c) {
        const auto& pf = primeField(r);
        std::vector<F> out;
        for (auto d : c.coordinates()) out.push_back(pf.element(d));
        return out;
    }
    template <class It>
    static FFElem fromCoords(const FFRing& r, It first) {
        std::vector<std::uint32_t> c(r.field().degree());
        for (auto& d : c) d = (first++)->code();
        return r.field().element(r.field().fromCoordinates(c));
    }
    /// Prime-field scalar viewed as a coefficient.
    static FFElem embed(const FFRing& r, const F& c) { return r.field().element(c.code()); }
};

template <>
struct PrimeCoords<HQRing> {
    using F = Rational;
    static F zero(const HQRing&) { return Rational(0); }
    static F one(const HQRing&) { return Rational(1); }
    static std::size_t dim(const HQRing&) { return 4; }
    static std::vector<F> coords(const HQRing&, const Quat& c) { return {c.w(), c.x(), c.y(), c.z()}; }
    template <class It>
    static Quat fromCoords(const HQRing&, It first) {
        Rational w = *first++, x = *first++, y = *first++;
        return Quat(w, x, y, *first);
    }
    static Quat embed(const HQRing&, const F& c) { return Quat(c); }
};

/// Coordinates of f (deg f < n) as a vector of length dim*n.
template <class R>
std::vector<typename PrimeCoords<R>::F> polyCoords(const SkewPoly<R>& f, int n) {
    using PC = PrimeCoords<R>;
    std::vector<typename PC::F> v;
    v.reserve(PC::dim(f.ring()) * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        auto c = PC::coords(f.ring(), f.coeff(k));
        v.insert(v.end(), c.begin(), c.end());
    }
    return v;
}

template <class R>
SkewPoly<R> polyFromCoords(const R& ring, const std::vector<typename PrimeCoords<R>::F>& v) {
    using PC = PrimeCoords<R>;
    std::size_t d = PC::dim(ring);
    std::vector<typename R::Scalar> c;
    for (std::size_t k = 0; k + d <= v.size(); k += d) c.push_back(PC::fromCoords(ring, v.begin() + static_cast<long>(k)));
    return SkewPoly<R>(ring, std::move(c));
}

}  // namespace oreprime
