#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oreprime/error.hpp"
#include "oreprime/linalg.hpp"
#include "oreprime/prime_coords.hpp"
#include "oreprime/structure.hpp"
#include "oreprime/verdict.hpp"

namespace oreprime {

/// R/Ra as a vector space over the prime field with one matrix per ring
/// generator. Basis order: e_l * t^k, k major, l over the scalar basis.
template <class R>
struct ModuleRep {
    using F = typename PrimeCoords<R>::F;
    SkewPoly<R> generator;
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<Matrix<F>> actions;
};

namespace detail {

template <class R>
std::vector<SkewPoly<R>> moduleBasis(const SkewPoly<R>& a) {
    const R& ring = a.ring();
    std::vector<SkewPoly<R>> basis;
    for (int k = 0; k < a.degree(); ++k)
        for (const auto& e : ring.primeBasis()) basis.push_back(SkewPoly<R>::monomial(ring, e, k));
    return basis;
}

}  // namespace detail

template <class R>
ModuleRep<R> moduleRep(const SkewPoly<R>& a) {
    static_assert(R::kind != RingKind::QXShift, "R/Ra is infinite-dimensional over Q for the shift ring");
    using PC = PrimeCoords<R>;
    using P = SkewPoly<R>;
    detail::requireNonzero(a, "moduleRep");
    const R& ring = a.ring();
    ModuleRep<R> m{a.monic(), 0, {}, {}};
    auto basis = detail::moduleBasis(m.generator);
    m.dim = basis.size();
    int n = a.degree();
    std::vector<std::pair<std::string, P>> gens{{ring.var(), P::t(ring)}};
    for (const auto& s : ring.scalarGenerators()) gens.emplace_back(ring.scalarStr(s), P::constant(ring, s));
    for (const auto& [name, g] : gens) {
        Matrix<typename PC::F> mat(m.dim, m.dim, PC::zero(ring));
        for (std::size_t col = 0; col < basis.size(); ++col) {
            auto v = polyCoords(divRight(g * basis[col], m.generator).remainder, n);
            for (std::size_t row = 0; row < m.dim; ++row) mat(row, col) = v[row];
        }
        m.names.push_back(name);
        m.actions.push_back(std::move(mat));
    }
    return m;
}

/// Basis of Hom_R(M1, M2): matrices X with X rho1(g) = rho2(g) X for all generators g.
template <class R>
std::vector<Matrix<typename PrimeCoords<R>::F>> homBasis(const ModuleRep<R>& m1, const ModuleRep<R>& m2) {
    using PC = PrimeCoords<R>;
    using F = typename PC::F;
    const R& ring = m1.generator.ring();
    std::size_t d1 = m1.dim, d2 = m2.dim, unknowns = d1 * d2;
    std::size_t eqs = m1.actions.size() * d2 * d1;
    Matrix<F> sys(eqs, unknowns, PC::zero(ring));
    std::size_t row = 0;
    for (std::size_t g = 0; g < m1.actions.size(); ++g) {
        const auto& r1 = m1.actions[g];
        const auto& r2 = m2.actions[g];
        for (std::size_t u = 0; u < d2; ++u)
            for (std::size_t w = 0; w < d1; ++w, ++row) {
                for (std::size_t v = 0; v < d1; ++v) sys(row, u * d1 + v) = sys(row, u * d1 + v) + r1(v, w);
                for (std::size_t v = 0; v < d2; ++v) sys(row, v * d1 + w) = sys(row, v * d1 + w) - r2(u, v);
            }
    }
    std::vector<Matrix<F>> out;
    for (const auto& vec : nullspace(sys, PC::one(ring))) {
        Matrix<F> x(d2, d1, PC::zero(ring));
        for (std::size_t i = 0; i < unknowns; ++i) x(i / d1, i % d1) = vec[i];
        out.push_back(std::move(x));
    }
    return out;
}

template <class R>
struct ComaximalWitness {
    SkewPoly<R> x, y;
    struct Checks {
        bool relation = false;        // a x = y b
        bool leftComaximal = false;   // gcld(a, y) = 1
        bool rightComaximal = false;  // gcrd(x, b) = 1
        bool reduced = false;         // deg x < deg b
        bool all() const { return relation && leftComaximal && rightComaximal && reduced; }
    } checks;
};

/// Certifies similarity of a and b independently of how x, y were found.
template <class R>
bool verifyWitness(const SkewPoly<R>& a, const SkewPoly<R>& b, const SkewPoly<R>& x, const SkewPoly<R>& y,
                   typename ComaximalWitness<R>::Checks* out = nullptr) {
    typename ComaximalWitness<R>::Checks c;
    if (!a.isZero() && !b.isZero() && !x.isZero() && !y.isZero()) {
        c.relation = a * x == y * b;
        c.leftComaximal = gcld(a, y).isUnit();
        c.rightComaximal = gcrd(x, b).isUnit();
        c.reduced = x.degree() < b.degree();
    }
    if (out) *out = c;
    return c.relation && c.leftComaximal && c.rightComaximal;
}

template <class R>
bool verifyWitness(const SkewPoly<R>& a, const SkewPoly<R>& b, const ComaximalWitness<R>& w) {
    return verifyWitness(a, b, w.x, w.y);
}

struct SimilarityOptions {
    std::uint64_t seed = 0x5eed;
    int randomTrials = 64;
    std::uint64_t exhaustiveCap = 1u << 16;
};

namespace detail {

template <class F>
Matrix<F> combine(const std::vector<Matrix<F>>& basis, const std::vector<F>& c) {
    Matrix<F> m(basis[0].rows(), basis[0].cols(), basis[0].zero());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!c[i].isZero()) m = m + basis[i].scaled(c[i]);
    return m;
}

/// Turns an invertible intertwiner into the pair (x, y) with a x = y b.
template <class R>
std::optional<ComaximalWitness<R>> witnessFromIntertwiner(const SkewPoly<R>& a, const SkewPoly<R>& b,
                                                          const Matrix<typename PrimeCoords<R>::F>& X) {
    using PC = PrimeCoords<R>;
    const R& ring = a.ring();
    std::vector<typename PC::F> one(X.cols(), PC::zero(ring));
    one[0] = PC::one(ring);  // coordinates of 1 + Ra
    SkewPoly<R> x = polyFromCoords(ring, X.apply(one));
    if (x.isZero()) return std::nullopt;
    auto [y, r] = divRight(a * x, b);
    if (!r.isZero()) throw InternalError("intertwiner image of 1 is not annihilated by a");
    ComaximalWitness<R> w{x, y, {}};
    verifyWitness(a, b, x, y, &w.checks);
    if (!w.checks.all()) throw InternalError("comaximal witness failed verification");
    return w;
}

inline std::uint64_t powCapped(std::uint64_t base, std::size_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

/// Runs `visit` on every point of {0..side-1}^h (mixed radix), stopping when it returns true.
template <class Visit>
bool gridSearch(std::size_t h, std::uint64_t side, Visit visit) {
    std::vector<std::uint64_t> idx(h, 0);
    while (true) {
        if (visit(idx)) return true;
        std::size_t pos = 0;
        while (pos < h && ++idx[pos] == side) idx[pos++] = 0;
        if (pos == h) return false;
    }
}

/// Determinant over an extension F_{p^e} of the prime field F_p.
inline bool extensionGridHasInvertible(const std::vector<Matrix<FFElem>>& basis, std::uint64_t cap) {
    const GaloisField& fp = basis[0].zero().field();
    std::size_t dim = basis[0].rows();
    std::uint32_t p = fp.characteristic();
    unsigned e = 1;
    std::uint64_t order = p;
    while (order <= dim && order * p <= GaloisField::kMaxOrder) order *= p, ++e;
    if (order <= dim) return false;
    const GaloisField& ext = GaloisField::get(p, e);
    std::vector<Matrix<FFElem>> lifted;
    for (const auto& b : basis) {
        Matrix<FFElem> m(b.rows(), b.cols(), ext.zero());
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) = ext.element(b(i, j).code());
        lifted.push_back(std::move(m));
    }
    std::uint64_t side = dim + 1;
    if (powCapped(side, basis.size(), cap) > cap) throw CapExceeded("extension-field grid");
    return gridSearch(basis.size(), side, [&](const std::vector<std::uint64_t>& idx) {
        std::vector<FFElem> c;
        for (auto v : idx) c.push_back(ext.element(static_cast<std::uint32_t>(v)));
        return !determinant(combine(lifted, c), ext.one()).isZero();
    });
}

}  // namespace detail

/// Similarity: R/Ra and R/Rb isomorphic as left modules. Yes carries the
/// comaximal pair {x, y} when the isomorphism was found explicitly.
template <class R>
Verdict<SkewPoly<R>> isSimilar(const SkewPoly<R>& a, const SkewPoly<R>& b, const SimilarityOptions& opt = {}) {
    using P = SkewPoly<R>;
    using V = Verdict<P>;
    if (a.isZero() || b.isZero()) throw DomainError("isSimilar: zero input");
    if (a.isUnit() || b.isUnit()) throw DomainError("isSimilar: unit input");
    if (!(a.ring() == b.ring())) throw DomainError("isSimilar: operands belong to different rings");
    const R& ring = a.ring();
    if (a.degree() != b.degree()) return V::no("degree-differs");
    if (a.monic() == b.monic()) {
        // a = u b for a scalar unit u
        P u = P::constant(ring, a.lead() * b.lead().inverse());
        return V::yes("left-associates", {{"x", P::one(ring)}, {"y", u}});
    }
    auto ba = bound(a), bb = bound(b);
    if (ba.status != bb.status) return V::no("bound-differs");
    if (ba.isBounded() && !(ba.value() == bb.value())) return V::no("bound-differs");
    if constexpr (R::kind == RingKind::QXShift) {
        return V::inconclusive("shift-ring-similarity-unsupported");
    } else {
        using PC = PrimeCoords<R>;
        using F = typename PC::F;
        auto m1 = moduleRep(a), m2 = moduleRep(b);
        auto hom = homBasis(m1, m2);
        if (hom.empty()) return V::no("hom-space-zero");
        if (homBasis(m1, m1).size() != hom.size() || homBasis(m2, m2).size() != hom.size())
            return V::no("hom-dimension-mismatch");
        std::size_t h = hom.size();
        auto tryCoeffs = [&](const std::vector<F>& c) -> std::optional<V> {
            auto X = detail::combine(hom, c);
            if (determinant(X, PC::one(ring)).isZero()) return std::nullopt;
            auto w = detail::witnessFromIntertwiner(a, b, X);
            if (!w) return std::nullopt;
            return V::yes("invertible-intertwiner", {{"x", w->x}, {"y", w->y}});
        };
        std::mt19937_64 rng(opt.seed);
        if constexpr (R::kind == RingKind::FF) {
            const GaloisField& fp = PC::primeField(ring);
            std::uint32_t p = fp.characteristic();
            std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
            for (int it = 0; it < opt.randomTrials; ++it) {
                std::vector<F> c;
                for (std::size_t i = 0; i < h; ++i) c.push_back(fp.element(dist(rng)));
                if (auto v = tryCoeffs(c)) return *v;
            }
            if (detail::powCapped(p, h, opt.exhaustiveCap) <= opt.exhaustiveCap) {
                std::optional<V> found;
                detail::gridSearch(h, p, [&](const std::vector<std::uint64_t>& idx) {
                    std::vector<F> c;
                    for (auto v : idx) c.push_back(fp.element(static_cast<std::uint32_t>(v)));
                    found = tryCoeffs(c);
                    return found.has_value();
                });
                if (found) return *found;
                return V::no("no-invertible-intertwiner");
            }
            try {
                if (detail::extensionGridHasInvertible(hom, opt.exhaustiveCap))
                    return V::yes("invertible-over-extension");
                return V::no("determinant-identically-zero");
            } catch (const CapExceeded&) {
                return V::inconclusive("intertwiner-search-cap");
            }
        } else {
            std::uniform_int_distribution<int> dist(-3, 3);
            for (int it = 0; it < opt.randomTrials; ++it) {
                std::vector<F> c;
                for (std::size_t i = 0; i < h; ++i) c.emplace_back(dist(rng));
                if (auto v = tryCoeffs(c)) return *v;
            }
            std::uint64_t side = m1.dim + 1;
            if (detail::powCapped(side, h, opt.exhaustiveCap) > opt.exhaustiveCap)
                return V::inconclusive("intertwiner-search-cap");
            std::optional<V> found;
            detail::gridSearch(h, side, [&](const std::vector<std::uint64_t>& idx) {
                std::vector<F> c;
                for (auto v : idx) c.emplace_back(static_cast<long>(v));
                found = tryCoeffs(c);
                return found.has_value();
            });
            if (found) return *found;
            return V::no("determinant-identically-zero");
        }
    }
}

/// Comaximal relation a x = y b for similar a, b.
template <class R>
ComaximalWitness<R> comaximalWitness(const SkewPoly<R>& a, const SkewPoly<R>& b, const SimilarityOptions& opt = {}) {
    auto v = isSimilar(a, b, opt);
    if (v.isNo()) throw DomainError("comaximalWitness: " + a.str() + " and " + b.str() + " are not similar");
    if (v.isInconclusive() || !v.find("x"))
        throw CapExceeded("comaximalWitness: similarity undecided or witness unavailable (" + v.reason + ")");
    ComaximalWitness<R> w{*v.find("x"), *v.find("y"), {}};
    verifyWitness(a, b, w.x, w.y, &w.checks);
    return w;
}

}  // namespace oreprime
