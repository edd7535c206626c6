#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "oreprime/error.hpp"
#include "oreprime/qfactor.hpp"
#include "oreprime/similarity.hpp"
#include "oreprime/structure.hpp"
#include "oreprime/verdict.hpp"

namespace oreprime {

namespace detail {

inline constexpr std::uint64_t kFactorSearchCap = 1u << 20;

/// Calls fn on each monic polynomial of degree d over the ring's field, in
/// code order; stops early when fn returns true.
inline bool forEachMonic(const FFRing& ring, int d, const std::function<bool(const SkewPoly<FFRing>&)>& fn) {
    const auto& f = ring.field();
    std::uint64_t q = f.order(), total = powCapped(q, static_cast<std::size_t>(d), kFactorSearchCap);
    if (total > kFactorSearchCap) throw CapExceeded("monic enumeration of degree " + std::to_string(d) + " over " + f.name());
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<FFElem> c;
        std::uint64_t x = code;
        for (int i = 0; i < d; ++i, x /= q) c.push_back(f.element(static_cast<std::uint32_t>(x % q)));
        c.push_back(f.one());
        if (fn(SkewPoly<FFRing>(ring, std::move(c)))) return true;
    }
    return false;
}

/// Minimal-degree monic proper right (or left) factor, if any.
inline std::optional<SkewPoly<FFRing>> smallestFactor(const SkewPoly<FFRing>& a, bool right) {
    std::optional<SkewPoly<FFRing>> found;
    for (int d = 1; d < a.degree() && !found; ++d) {
        forEachMonic(a.ring(), d, [&](const SkewPoly<FFRing>& c) {
            if (right ? rightDivides(c, a) : leftDivides(c, a)) found = c;
            return found.has_value();
        });
    }
    return found;
}

inline bool isSumOfThreeSquares(mpz_class n) {
    if (n < 0) return false;
    if (n == 0) return true;
    while (n % 4 == 0) n /= 4;
    return n % 8 != 7;
}

inline std::optional<mpz_class> exactSqrt(const mpz_class& n) {
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    return mpz_class(sqrt(n));
}

/// Conjugating every coefficient reverses products in H_Q[t].
inline SkewPoly<HQRing> conjugatePoly(const SkewPoly<HQRing>& f) {
    std::vector<Quat> c;
    for (const auto& q : f.coeffs()) c.push_back(q.conj());
    return SkewPoly<HQRing>(f.ring(), std::move(c));
}

inline QPoly centralToQ(const SkewPoly<HQRing>& f) {
    std::vector<Rational> c;
    for (const auto& q : f.coeffs()) {
        if (!q.isScalar()) throw InternalError("expected a polynomial with rational coefficients");
        c.push_back(q.w());
    }
    return QPoly(std::move(c));
}

inline SkewPoly<HQRing> qToCentral(const HQRing& ring, const QPoly& p) {
    std::vector<Quat> c;
    for (const auto& r : p.coeffs()) c.emplace_back(r);
    return SkewPoly<HQRing>(ring, std::move(c));
}

}  // namespace detail

/// Canonical rational quaternion with the given trace and norm: among
/// representations with the smallest common denominator D of the imaginary
/// part, the lexicographically smallest (x, y, z). Empty when the class has
/// no rational point.
inline std::optional<Quat> canonicalQuatInClass(const Rational& trace, const Rational& norm) {
    Rational w = trace * Rational(mpz_class(1), mpz_class(2));
    Rational rest = norm - w * w;  // x^2 + y^2 + z^2
    if (rest.sign() < 0) return std::nullopt;
    if (rest.isZero()) return Quat(w);
    mpz_class u = rest.numerator(), d = rest.denominator();
    if (!detail::isSumOfThreeSquares(u * d)) return std::nullopt;
    for (mpz_class D = 1; D <= d; ++D) {
        mpq_class scaled = rest.raw() * D * D;
        if (scaled.get_den() != 1) continue;
        mpz_class M = scaled.get_num();
        if (!detail::isSumOfThreeSquares(M)) continue;
        mpz_class lim = sqrt(M);
        for (mpz_class X = -lim; X <= lim; ++X) {
            mpz_class r1 = M - X * X;
            mpz_class lim2 = sqrt(r1);
            for (mpz_class Y = -lim2; Y <= lim2; ++Y) {
                if (auto z = detail::exactSqrt(r1 - Y * Y)) {
                    return Quat(w, Rational(X, D), Rational(Y, D), Rational(mpz_class(-*z), D));
                }
            }
        }
    }
    throw InternalError("no rational point found in a nonempty quaternion class");
}

struct RootsInClass {
    enum class Kind { None, Unique, WholeClass };
    Kind kind = Kind::None;
    std::optional<Quat> root;  // the unique root, or the canonical class element
    bool classEmpty = false;   // WholeClass with no rational quaternion in it
};

namespace detail {

inline std::optional<Rational> rationalSqrt(const Rational& r) {
    auto n = exactSqrt(r.numerator());
    auto d = exactSqrt(r.denominator());
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace detail

/// Canonical quaternion root of the monic rational g (degree 1 or 2), if any.
inline std::optional<Quat> canonicalRoot(const QPoly& g) {
    QPoly gm = g.monic();
    if (gm.degree() == 1) return Quat(-gm.coeff(0));
    if (gm.degree() != 2) throw DomainError("canonicalRoot: degree must be 1 or 2");
    Rational half(mpz_class(1), mpz_class(2));
    Rational g1 = gm.coeff(1), g0 = gm.coeff(0);
    Rational rest = g0 - g1 * g1 * half * half;
    if (rest.sign() > 0) return canonicalQuatInClass(-g1, g0);
    if (rest.isZero()) return Quat(-g1 * half);
    // two distinct real roots; only rational ones are quaternions here
    auto s = detail::rationalSqrt(-(rest + rest + rest + rest));
    if (!s) return std::nullopt;
    return Quat((-g1 - *s) * half);
}

/// Right roots of f in H_Q among the roots of the monic central g of degree 1 or 2.
inline RootsInClass rightRootsInClass(const SkewPoly<HQRing>& f, const QPoly& g) {
    using K = RootsInClass::Kind;
    if (g.degree() < 1 || g.degree() > 2) throw DomainError("rightRootsInClass: class polynomial must have degree 1 or 2");
    QPoly gm = g.monic();
    auto satisfies = [&](const Quat& q) {
        Quat acc(0);
        for (int k = gm.degree(); k >= 0; --k) acc = acc * q + Quat(gm.coeff(k));
        return acc.isZero();
    };
    auto r = divRight(f, detail::qToCentral(f.ring(), gm)).remainder;
    Quat alpha = r.coeff(1), beta = r.coeff(0);
    if (!alpha.isZero()) {
        Quat q = -(alpha.inverse() * beta);
        if (satisfies(q)) return {K::Unique, q, false};
        return {};
    }
    if (!beta.isZero()) return {};
    auto c = canonicalRoot(gm);
    return {K::WholeClass, c, !c.has_value()};
}

template <class R>
Verdict<SkewPoly<R>> isAtom(const SkewPoly<R>& a);

namespace detail {

template <class R>
void requireNonUnit(const SkewPoly<R>& a, const char* op) {
    if (a.isZero()) throw DomainError(std::string(op) + ": zero polynomial");
    if (a.isUnit()) throw DomainError(std::string(op) + ": unit input");
}

/// Proper monic right factor of the HQ element a of degree >= 2 found from the
/// irreducible factors of its bound, or nullopt if a is an atom. Throws
/// CapExceeded when it cannot decide.
inline std::optional<SkewPoly<HQRing>> hqProperRightFactor(const SkewPoly<HQRing>& a, std::string& reason) {
    using P = SkewPoly<HQRing>;
    const HQRing& ring = a.ring();
    P p = bound(a).value();
    auto fs = commFactorQ(centralToQ(p));
    if (fs.size() > 1 || fs[0].multiplicity > 1) {
        for (const auto& f : fs) {
            P c = gcrd(a, qToCentral(ring, f.factor));
            if (!c.isUnit() && c.degree() < a.degree()) {
                reason = "reducible-bound";
                return c;
            }
        }
        throw InternalError("reducible bound without a proper central gcrd");
    }
    int dp = p.degree(), da = a.degree();
    if (2 * da == dp) {
        reason = "half-degree-of-irreducible-bound";
        return std::nullopt;
    }
    if (da != dp) throw InternalError("degree outside the atom dichotomy for an irreducible bound");
    if (dp % 2 == 1) {
        reason = "odd-irreducible-bound";
        return std::nullopt;
    }
    if (dp == 2) {
        auto roots = rightRootsInClass(a, fs[0].factor);
        if (roots.root) {
            reason = "right-root";
            return P(ring, {-*roots.root, Quat(1)});
        }
        reason = "empty-root-class";
        return std::nullopt;
    }
    throw CapExceeded("atom test for an even-degree irreducible bound of degree >= 4");
}

}  // namespace detail

/// Whether a non-unit admits no factorization into two non-units. No carries
/// a factorization {left, right} with left * right = a.
template <class R>
Verdict<SkewPoly<R>> isAtom(const SkewPoly<R>& a) {
    using P = SkewPoly<R>;
    using V = Verdict<P>;
    detail::requireNonUnit(a, "isAtom");
    if (a.degree() == 1) return V::yes("degree-one");
    const R& ring = a.ring();
    auto split = [&](const P& right, const char* why) {
        return V::no(why, {{"left", divRight(a, right).quotient}, {"right", right}});
    };
    if constexpr (R::kind == RingKind::FF) {
        std::optional<P> c;
        try {
            c = detail::smallestFactor(a, true);
        } catch (const CapExceeded&) {
            return V::inconclusive("factor-search-cap");
        }
        if (c) return split(*c, "right-factor");
        return V::yes("no-right-factor");
    } else if constexpr (R::kind == RingKind::HQ) {
        std::string reason;
        try {
            auto c = detail::hqProperRightFactor(a, reason);
            if (c) return split(*c, reason.c_str());
            return V::yes(reason);
        } catch (const CapExceeded&) {
            return V::inconclusive("even-degree-irreducible-bound");
        }
    } else {
        if (a.coeff(0).isZero()) return split(P::t(ring), "right-factor-t");
        return V::inconclusive("shift-ring-atom-test-unsupported");
    }
}

enum class PeelOrder { Right, Left };

template <class R>
struct FactorizationResult {
    typename R::Scalar unit;
    std::vector<SkewPoly<R>> atoms;
    bool complete = true;
    /// Unfactored part, sitting between atoms[0..residualIndex) and the rest.
    std::optional<SkewPoly<R>> residual;
    std::size_t residualIndex = 0;
    std::string reason;

    SkewPoly<R> product(const R& ring) const {
        SkewPoly<R> p = SkewPoly<R>::constant(ring, unit);
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (residual && i == residualIndex) p = p * *residual;
            p = p * atoms[i];
        }
        if (residual && residualIndex >= atoms.size()) p = p * *residual;
        return p;
    }
};

namespace detail {

/// One peeling step for H_Q[t]: an atom right factor of the monic f.
inline std::optional<SkewPoly<HQRing>> hqRightAtom(const SkewPoly<HQRing>& f, std::string& reason) {
    using P = SkewPoly<HQRing>;
    const HQRing& ring = f.ring();
    if (f.degree() == 1) return f;
    QPoly norm = centralToQ(f * conjugatePoly(f));
    std::vector<QFactor> fs;
    try {
        fs = commFactorQ(norm);
    } catch (const CapExceeded&) {
        reason = "norm-factorization-cap";
        return std::nullopt;
    }
    bool stuck = false;
    for (const auto& g : fs) {
        P gp = qToCentral(ring, g.factor);
        P c = gcrd(f, gp);
        if (c.isUnit()) continue;
        if (c.degree() < gp.degree()) return c;
        // c = g: g itself is an atom, or splits into two atoms of half degree
        if (gp.degree() == 1 || gp.degree() % 2 == 1) return gp;
        if (gp.degree() == 2) {
            auto roots = rightRootsInClass(gp, g.factor);
            if (roots.root) return P(ring, {-*roots.root, Quat(1)});
            return gp;
        }
        stuck = true;
    }
    if (stuck) {
        reason = "even-degree-irreducible-central-factor";
        return std::nullopt;
    }
    throw InternalError("no central factor of the norm shares a right factor");
}

}  // namespace detail

/// Factorization into monic atoms. Right peeling repeatedly splits off a
/// smallest right factor; left peeling does the mirror image.
template <class R>
FactorizationResult<R> factorAtoms(const SkewPoly<R>& a, PeelOrder order = PeelOrder::Right) {
    using P = SkewPoly<R>;
    detail::requireNonUnit(a, "factorAtoms");
    const R& ring = a.ring();
    FactorizationResult<R> res{a.lead(), {}, true, std::nullopt, 0, ""};
    P f = a.monic();
    std::vector<P> right;  // collected right-to-left when peeling on the right
    std::vector<P> left;
    auto finishPartial = [&](const std::string& why) {
        res.complete = false;
        res.residual = f;
        res.reason = why;
    };
    if constexpr (R::kind == RingKind::FF) {
        while (f.degree() >= 1) {
            auto c = detail::smallestFactor(f, order == PeelOrder::Right);
            if (!c) {
                (order == PeelOrder::Right ? right : left).push_back(f);
                f = P::one(ring);
                break;
            }
            if (order == PeelOrder::Right) {
                right.push_back(*c);
                f = divRight(f, *c).quotient;
            } else {
                left.push_back(*c);
                f = divLeft(f, *c).quotient;
            }
        }
    } else if constexpr (R::kind == RingKind::HQ) {
        if (order == PeelOrder::Left) {
            auto mirrored = factorAtoms(detail::conjugatePoly(f), PeelOrder::Right);
            FactorizationResult<R> out{a.lead(), {}, mirrored.complete, std::nullopt, 0, mirrored.reason};
            for (auto it = mirrored.atoms.rbegin(); it != mirrored.atoms.rend(); ++it)
                out.atoms.push_back(detail::conjugatePoly(*it));
            if (mirrored.residual) {
                out.residual = detail::conjugatePoly(*mirrored.residual);
                out.residualIndex = mirrored.atoms.size() - mirrored.residualIndex;
            }
            return out;
        }
        while (f.degree() >= 1) {
            std::string why;
            auto c = detail::hqRightAtom(f, why);
            if (!c) {
                finishPartial(why);
                break;
            }
            right.push_back(*c);
            f = divRight(f, *c).quotient;
        }
    } else {
        int v = detail::tOrder(f);
        if (order == PeelOrder::Right) {
            for (int i = 0; i < v; ++i) right.push_back(P::t(ring));
            f = divRight(f, P::t(ring, v)).quotient;
        } else {
            for (int i = 0; i < v; ++i) left.push_back(P::t(ring));
            f = divLeft(f, P::t(ring, v)).quotient;
        }
        f = f.monic();
        if (f.degree() == 1) {
            (order == PeelOrder::Right ? right : left).push_back(f);
            f = P::one(ring);
        } else if (f.degree() > 1) {
            finishPartial("shift-ring-factorization-unsupported");
        }
    }
    res.atoms = left;
    res.residualIndex = left.size();
    res.atoms.insert(res.atoms.end(), right.rbegin(), right.rend());
    if (!(res.product(ring) == a)) throw InternalError("factorization does not multiply back to the input");
    return res;
}

/// c-irreducibility: no a = b b' = c' c with all factors non-units and b similar to c.
template <class R>
Verdict<SkewPoly<R>> isCIrreducible(const SkewPoly<R>& a, const SimilarityOptions& opt = {}) {
    using P = SkewPoly<R>;
    using V = Verdict<P>;
    detail::requireNonUnit(a, "isCIrreducible");
    if (a.degree() == 1) return V::yes("degree-one");
    const R& ring = a.ring();
    if constexpr (R::kind == RingKind::FF) {
        P f = a.monic();
        std::vector<P> lefts, rights;
        try {
            for (int d = 1; d < f.degree(); ++d) {
                detail::forEachMonic(ring, d, [&](const P& c) {
                    if (leftDivides(c, f)) lefts.push_back(c);
                    if (rightDivides(c, f)) rights.push_back(c);
                    return false;
                });
            }
        } catch (const CapExceeded&) {
            return V::inconclusive("factor-search-cap");
        }
        bool undecided = false;
        for (const auto& b : lefts)
            for (const auto& c : rights) {
                if (b.degree() != c.degree()) continue;
                auto s = isSimilar(b, c, opt);
                if (s.isYes()) return V::no("similar-left-and-right-factor", {{"b", b}, {"c", c}});
                if (s.isInconclusive()) undecided = true;
            }
        if (undecided) return V::inconclusive("similarity-undecided");
        return V::yes("no-similar-factor-pair");
    } else if constexpr (R::kind == RingKind::HQ) {
        // bounded PID: c-irreducible exactly when irreducible
        auto v = isAtom(a);
        if (v.isYes()) return V::yes("atom-in-bounded-ring");
        if (v.isInconclusive()) return V::inconclusive(v.reason);
        return V::no("reducible-in-bounded-ring", v.witness);
    } else {
        if (a.coeff(0).isZero()) return V::no("bounded-factor-t", {{"b", P::t(ring)}, {"c", P::t(ring)}});
        return V::inconclusive("shift-ring-c-irreducibility-unsupported");
    }
}

}  // namespace oreprime
