#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oreprime/error.hpp"
#include "oreprime/linalg.hpp"
#include "oreprime/primeness.hpp"
#include "oreprime/similarity.hpp"

namespace oreprime {

// Definitional checks over F_q[t; sigma]. Everything here works inside the
// finite module M = R/Ra and the algebra A of F_p-linear maps of M induced by
// left multiplication. No bound, factorization or similarity search is used.
// For r in R and b in R, rb lies in Ra exactly when r acts as zero on b + Ra,
// so each quantifier over R becomes a quantifier over A, and each one over b
// becomes one over vectors of M.

inline constexpr std::uint64_t kOracleCap = 4096;

namespace detail {

using FpMatrix = Matrix<FFElem>;
using FpVector = std::vector<FFElem>;

struct FiniteModule {
    const GaloisField* fp = nullptr;
    std::size_t dim = 0;
    std::vector<FpMatrix> gens;    // t, then the field generator if m >= 2
    std::vector<FpMatrix> algebra; // basis of A
    FpMatrix actionOfGenerator;    // the generator of the ideal acting on M

    FFElem zero() const { return fp->zero(); }
    FFElem one() const { return fp->one(); }
};

/// Matrix of left multiplication by f on the module whose generator matrices are `gens`.
inline FpMatrix actionOf(const SkewPoly<FFRing>& f, const std::vector<FpMatrix>& gens, const GaloisField& fp) {
    std::size_t n = gens[0].rows();
    const FFRing& ring = f.ring();
    FpMatrix id = FpMatrix::identity(n, fp.zero(), fp.one());
    FpMatrix acc(n, n, fp.zero());
    // Horner in t; each coefficient is a polynomial over F_p in the field generator
    for (int k = f.degree(); k >= 0; --k) {
        acc = acc * gens[0];
        auto digits = f.coeff(k).coordinates();
        FpMatrix c(n, n, fp.zero()), pw = id;
        for (std::size_t l = 0; l < digits.size(); ++l) {
            if (digits[l] != 0) c = c + pw.scaled(fp.element(digits[l]));
            if (ring.field().degree() >= 2 && l + 1 < digits.size()) pw = gens[1] * pw;
        }
        acc = acc + c;
    }
    return acc;
}

inline std::vector<FFElem> flatten(const FpMatrix& m) { return m.data(); }

/// Basis of the algebra generated by `gens` (words in the generators, closed under products).
inline std::vector<FpMatrix> algebraSpan(const std::vector<FpMatrix>& gens, const GaloisField& fp) {
    std::size_t n = gens[0].rows();
    EchelonBasis<FFElem> span(n * n, fp.zero());
    std::vector<FpMatrix> basis;
    std::vector<FpMatrix> queue{FpMatrix::identity(n, fp.zero(), fp.one())};
    while (!queue.empty()) {
        FpMatrix x = queue.back();
        queue.pop_back();
        if (!span.insert(flatten(x))) continue;
        basis.push_back(x);
        for (const auto& g : gens) queue.push_back(g * x);
    }
    return basis;
}

/// Module R/Ra built from the ring's multiplication only (no division).
inline FiniteModule buildModule(const SkewPoly<FFRing>& a) {
    const FFRing& ring = a.ring();
    const GaloisField& fp = GaloisField::get(ring.field().characteristic(), 1);
    auto rep = moduleRep(a);
    auto algebra = algebraSpan(rep.actions, fp);
    auto act = actionOf(a.monic(), rep.actions, fp);
    FiniteModule M{&fp, rep.dim, std::move(rep.actions), std::move(algebra), std::move(act)};
    return M;
}

/// Matrix whose columns are X_i v for the algebra basis X_i.
inline FpMatrix orbitMatrix(const FiniteModule& M, const std::vector<FpVector>& vs) {
    FpMatrix out(M.dim * vs.size(), M.algebra.size(), M.zero());
    for (std::size_t i = 0; i < M.algebra.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            auto w = M.algebra[i].apply(vs[j]);
            for (std::size_t r = 0; r < M.dim; ++r) out(j * M.dim + r, i) = w[r];
        }
    return out;
}

/// Every element of A killing all of `vs` also kills 1 + Ra.
inline bool annihilatorKillsOne(const FiniteModule& M, const std::vector<FpVector>& vs) {
    FpVector one(M.dim, M.zero());
    one[0] = M.one();
    for (const auto& c : nullspace(orbitMatrix(M, vs), M.one())) {
        FpVector img(M.dim, M.zero());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].isZero()) continue;
            auto w = M.algebra[i].apply(one);
            for (std::size_t r = 0; r < M.dim; ++r) img[r] = img[r] + c[i] * w[r];
        }
        for (const auto& x : img)
            if (!x.isZero()) return false;
    }
    return true;
}

/// Basis of the submodule A v.
inline std::vector<FpVector> cyclicSubmodule(const FiniteModule& M, const FpVector& v) {
    EchelonBasis<FFElem> span(M.dim, M.zero());
    for (const auto& x : M.algebra) span.insert(x.apply(v));
    return span.vectors();
}

inline bool isZeroVector(const FpVector& v) {
    for (const auto& x : v)
        if (!x.isZero()) return false;
    return true;
}

/// Visits every nonzero vector of F_p^n.
inline void forEachNonzeroVector(const GaloisField& fp, std::size_t n, std::uint64_t cap,
                                 const std::function<bool(const FpVector&)>& fn) {
    std::uint64_t total = powCapped(fp.characteristic(), n, cap);
    if (total > cap) throw CapExceeded("oracle sweep over " + std::to_string(n) + "-dimensional module exceeds cap");
    FpVector v(n, fp.zero());
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t x = code;
        for (std::size_t i = 0; i < n; ++i, x /= fp.characteristic())
            v[i] = fp.element(static_cast<std::uint32_t>(x % fp.characteristic()));
        if (fn(v)) return;
    }
}

}  // namespace detail

struct OracleVerdicts {
    bool extremely = false, completely = false, structurally = false, weakly = false;
};

/// Definitional primeness of the proper nonzero left ideal Ra over a finite field.
inline OracleVerdicts oracleClassifyPID(const SkewPoly<FFRing>& a, std::uint64_t cap = kOracleCap) {
    if (a.isZero()) throw DomainError("oracle: zero generator (the zero ideal is prime in a domain)");
    if (a.isUnit()) throw ImproperIdealError("oracle: the ideal is the whole ring");
    auto M = detail::buildModule(a);
    OracleVerdicts v{true, true, true, true};
    detail::forEachNonzeroVector(*M.fp, M.dim, cap, [&](const detail::FpVector& b) {
        // r b in Ra  =>  r in Ra
        bool ext = detail::annihilatorKillsOne(M, {b});
        // p b in p  <=>  a b in Ra
        bool stable = detail::isZeroVector(M.actionOfGenerator.apply(b));
        auto N = detail::cyclicSubmodule(M, b);
        // r R b in Ra  =>  r in Ra
        bool str = detail::annihilatorKillsOne(M, N);
        // p R b in p  <=>  a kills A b
        bool pRb = true;
        for (const auto& n : N)
            if (!detail::isZeroVector(M.actionOfGenerator.apply(n))) pRb = false;
        if (!ext) v.extremely = false;
        if (!ext && stable) v.completely = false;
        if (!str) v.structurally = false;
        if (!str && pRb) v.weakly = false;
        return false;
    });
    return v;
}

/// The same four answers through quotient ideals: (Ra:b) = R leftQuotient(a,b),
/// id(Rc) = R bound(c), and pRb inside p exactly when closure(a) b lies in Ra.
/// b runs over the nonzero residues of degree below deg a.
inline OracleVerdicts oracleClassifyPIDReduced(const SkewPoly<FFRing>& a, std::uint64_t cap = kOracleCap) {
    using P = SkewPoly<FFRing>;
    if (a.isZero()) throw DomainError("oracle: zero generator (the zero ideal is prime in a domain)");
    if (a.isUnit()) throw ImproperIdealError("oracle: the ideal is the whole ring");
    const FFRing& ring = a.ring();
    const GaloisField& k = ring.field();
    P am = a.monic();
    int n = am.degree();
    std::uint64_t total = detail::powCapped(k.order(), static_cast<std::size_t>(n), cap);
    if (total > cap) throw CapExceeded("oracle sweep over residues of degree < " + std::to_string(n) + " exceeds cap");
    P closure = twoSidedClosure(am);
    auto inRa = [&](const P& x) { return divRight(x, am).remainder.isZero(); };
    OracleVerdicts v{true, true, true, true};
    for (std::uint64_t code = 1; code < total; ++code) {
        std::vector<FFElem> c;
        std::uint64_t x = code;
        for (int i = 0; i < n; ++i, x /= k.order()) c.push_back(k.element(static_cast<std::uint32_t>(x % k.order())));
        P b(ring, std::move(c));
        P q = leftQuotient(am, b);
        bool quotientInside = !q.isUnit() && inRa(q);
        bool idInside = !q.isUnit() && inRa(bound(q).value());
        if (!quotientInside) {
            v.extremely = false;
            if (inRa(am * b)) v.completely = false;
        }
        if (!idInside) {
            v.structurally = false;
            if (inRa(closure * b)) v.weakly = false;
        }
    }
    return v;
}

/// Ra maximal: every nonzero vector of R/Ra generates it.
inline bool oracleIsAtom(const SkewPoly<FFRing>& a, std::uint64_t cap = kOracleCap) {
    if (a.isZero() || a.isUnit()) throw DomainError("oracleIsAtom: zero or unit input");
    auto M = detail::buildModule(a);
    bool simple = true;
    detail::forEachNonzeroVector(*M.fp, M.dim, cap, [&](const detail::FpVector& b) {
        if (detail::cyclicSubmodule(M, b).size() != M.dim) simple = false;
        return !simple;
    });
    return simple;
}

/// R/Ra and R/Rb isomorphic: some x + Rb with a x in Rb generates R/Rb.
/// On success `xOut` receives such an x.
inline bool oracleSimilar(const SkewPoly<FFRing>& a, const SkewPoly<FFRing>& b, std::uint64_t cap = kOracleCap,
                          SkewPoly<FFRing>* xOut = nullptr) {
    if (a.isZero() || b.isZero() || a.isUnit() || b.isUnit()) throw DomainError("oracleSimilar: zero or unit input");
    if (a.degree() != b.degree()) return false;
    auto Mb = detail::buildModule(b);
    auto act = detail::actionOf(a, Mb.gens, *Mb.fp);
    auto ker = nullspace(act, Mb.one());
    if (ker.empty()) return false;
    bool found = false;
    detail::forEachNonzeroVector(*Mb.fp, ker.size(), cap, [&](const detail::FpVector& c) {
        detail::FpVector x(Mb.dim, Mb.zero());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t r = 0; r < Mb.dim; ++r) x[r] = x[r] + c[i] * ker[i][r];
        if (detail::cyclicSubmodule(Mb, x).size() == Mb.dim) {
            found = true;
            if (xOut) {
                std::vector<FFElem> coords;
                for (const auto& e : x) coords.push_back(e);
                *xOut = polyFromCoords(b.ring(), coords);
            }
        }
        return found;
    });
    return found;
}

/// Every monic factorization a = u v with both factors non-units, by multiplication.
inline void monicFactorPairs(const SkewPoly<FFRing>& a, std::uint64_t cap,
                             std::vector<std::pair<SkewPoly<FFRing>, SkewPoly<FFRing>>>& out) {
    auto f = a.monic();
    int n = f.degree();
    for (int d = 1; d < n; ++d) {
        std::vector<SkewPoly<FFRing>> us, vs;
        detail::forEachMonic(f.ring(), d, [&](const SkewPoly<FFRing>& u) { us.push_back(u); return false; });
        detail::forEachMonic(f.ring(), n - d, [&](const SkewPoly<FFRing>& v) { vs.push_back(v); return false; });
        if (static_cast<double>(us.size()) * static_cast<double>(vs.size()) > static_cast<double>(cap) * cap)
            throw CapExceeded("factor-pair enumeration");
        for (const auto& u : us)
            for (const auto& v : vs)
                if (u * v == f) out.emplace_back(u, v);
    }
}

/// No a = b b' = c' c with non-unit factors and b similar to c.
inline bool oracleCIrreducible(const SkewPoly<FFRing>& a, std::uint64_t cap = kOracleCap) {
    if (a.isZero() || a.isUnit()) throw DomainError("oracleCIrreducible: zero or unit input");
    std::vector<std::pair<SkewPoly<FFRing>, SkewPoly<FFRing>>> pairs;
    monicFactorPairs(a, cap, pairs);
    for (const auto& [b, b2] : pairs)
        for (const auto& [c2, c] : pairs)
            if (b.degree() == c.degree() && oracleSimilar(b, c, cap)) return false;
    return true;
}

struct OracleReport {
    std::string ring;
    int degreeCap = 0;
    std::size_t generators = 0;
    std::size_t similarityPairs = 0;
    /// notion -> "fast/oracle" -> count
    std::map<std::string, std::map<std::string, std::size_t>> counts;
    std::vector<std::string> mismatches;
    double seconds = 0;
};

struct CrossValidateOptions {
    std::uint64_t cap = kOracleCap;
    int similarityDegree = 2;
    SimilarityOptions similarity;
};

/// All monic polynomials of degree 1..maxDeg, degree-major, code order.
inline std::vector<SkewPoly<FFRing>> allMonics(const FFRing& ring, int minDeg, int maxDeg) {
    std::vector<SkewPoly<FFRing>> out;
    for (int d = minDeg; d <= maxDeg; ++d)
        detail::forEachMonic(ring, d, [&](const SkewPoly<FFRing>& f) { out.push_back(f); return false; });
    return out;
}

/// Compares every fast decision procedure with its definitional oracle on
/// all monic generators up to the degree cap.
inline OracleReport crossValidate(const FFRing& ring, int degCap, const CrossValidateOptions& opt = {}) {
    auto started = std::chrono::steady_clock::now();
    OracleReport rep;
    rep.ring = ring.name();
    rep.degreeCap = degCap;
    auto tally = [&](const std::string& notion, const std::string& fast, bool oracle, const SkewPoly<FFRing>& a) {
        std::string o = oracle ? "Yes" : "No";
        ++rep.counts[notion][fast + "/" + o];
        if (fast != o) rep.mismatches.push_back(notion + " " + a.str() + ": fast=" + fast + " oracle=" + o);
    };
    auto gens = allMonics(ring, 1, degCap);
    rep.generators = gens.size();
    for (const auto& a : gens) {
        PrincipalLeftIdeal<FFRing> I(a);
        auto c = classify(I, opt.similarity);
        auto o = oracleClassifyPID(a, opt.cap);
        auto red = oracleClassifyPIDReduced(a, opt.cap);
        if (red.extremely != o.extremely || red.completely != o.completely || red.structurally != o.structurally ||
            red.weakly != o.weakly)
            rep.mismatches.push_back("quotient-form oracle disagrees with module oracle on " + a.str());
        tally("extremely", toString(c.extremely.value), o.extremely, a);
        tally("completely", toString(c.completely.value), o.completely, a);
        tally("structurally", toString(c.structurally.value), o.structurally, a);
        tally("weakly", toString(c.weakly.value), o.weakly, a);
        auto lv = checkPidLattice(o.extremely ? Truth::Yes : Truth::No, o.completely ? Truth::Yes : Truth::No,
                                  o.structurally ? Truth::Yes : Truth::No, o.weakly ? Truth::Yes : Truth::No);
        if (lv.any) rep.mismatches.push_back("oracle lattice " + a.str() + ": " + lv.what);
        tally("atom", toString(isAtom(a).value), oracleIsAtom(a, opt.cap), a);
        tally("c-irreducible", toString(isCIrreducible(a, opt.similarity).value), oracleCIrreducible(a, opt.cap), a);
    }
    auto simGens = allMonics(ring, 1, std::min(degCap, opt.similarityDegree));
    for (std::size_t i = 0; i < simGens.size(); ++i)
        for (std::size_t j = 0; j < simGens.size(); ++j) {
            const auto& a = simGens[i];
            const auto& b = simGens[j];
            if (a.degree() != b.degree()) continue;
            ++rep.similarityPairs;
            auto s = isSimilar(a, b, opt.similarity);
            bool o = oracleSimilar(a, b, opt.cap);
            std::string fast = toString(s.value);
            std::string os = o ? "Yes" : "No";
            ++rep.counts["similar"][fast + "/" + os];
            if (o && bound(a).value() != bound(b).value())
                rep.mismatches.push_back("similar with different bounds: " + a.str() + " ~ " + b.str());
            if (fast != os) rep.mismatches.push_back("similar " + a.str() + " ~ " + b.str() + ": fast=" + fast + " oracle=" + os);
        }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

}  // namespace oreprime
