#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "oreprime/error.hpp"
#include "oreprime/rings.hpp"

namespace oreprime {

/// Element of a skew polynomial ring D[t; sigma]: coefficients on the left,
/// lowest degree first, multiplied by the rule t * c = sigma(c) * t.
template <class R>
class SkewPoly {
public:
    using Ring = R;
    using Scalar = typename R::Scalar;

    explicit SkewPoly(R ring) : ring_(std::move(ring)) {}
    SkewPoly(R ring, std::vector<Scalar> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { trim(); }

    static SkewPoly constant(const R& ring, const Scalar& c) { return SkewPoly(ring, {c}); }
    static SkewPoly one(const R& ring) { return constant(ring, ring.one()); }
    /// c * t^k
    static SkewPoly monomial(const R& ring, const Scalar& c, int k) {
        std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, ring.zero());
        v.back() = c;
        return SkewPoly(ring, std::move(v));
    }
    static SkewPoly t(const R& ring, int k = 1) { return monomial(ring, ring.one(), k); }

    const R& ring() const { return ring_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }
    /// Units of D[t;sigma] are the nonzero constants.
    bool isUnit() const { return c_.size() == 1; }
    bool isMonic() const { return !c_.empty() && c_.back().isOne(); }
    bool isOne() const { return c_.size() == 1 && c_[0].isOne(); }

    Scalar coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : ring_.zero();
    }
    const Scalar& lead() const {
        if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }

    /// Left-associate with leading coefficient 1 (generator of the same left ideal).
    SkewPoly monic() const {
        if (isZero() || isMonic()) return *this;
        return lead().inverse() * *this;
    }
    /// Right-associate with leading coefficient 1 (generator of the same right ideal).
    SkewPoly rightMonic() const {
        if (isZero() || isMonic()) return *this;
        Scalar u = ring_.sigma(lead().inverse(), -degree());
        return *this * constant(ring_, u);
    }

    SkewPoly operator-() const {
        SkewPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        checkRing(a, b);
        std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), a.ring_.zero());
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = v[k] + a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] + b.c_[k];
        return SkewPoly(a.ring_, std::move(v));
    }
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
        checkRing(a, b);
        if (a.isZero() || b.isZero()) return SkewPoly(a.ring_);
        std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
        // (a_i t^i)(b_j t^j) = a_i sigma^i(b_j) t^{i+j}
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].isZero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].isZero()) continue;
                v[i + j] = v[i + j] + a.c_[i] * a.ring_.sigma(b.c_[j], static_cast<long>(i));
            }
        }
        return SkewPoly(a.ring_, std::move(v));
    }
    /// Left scalar multiplication c * f.
    friend SkewPoly operator*(const Scalar& s, const SkewPoly& f) {
        SkewPoly r = f;
        for (auto& c : r.c_) c = s * c;
        r.trim();
        return r;
    }
    SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
    SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }
    SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }

    SkewPoly pow(unsigned e) const {
        SkewPoly r = one(ring_);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

    /// Descending degree, coefficients written left of the t-power.
    std::string str() const;

private:
    static void checkRing(const SkewPoly& a, const SkewPoly& b) {
        if (!(a.ring_ == b.ring_)) throw DomainError("operands belong to different rings");
    }
    void trim() {
        while (!c_.empty() && c_.back().isZero()) c_.pop_back();
    }

    R ring_;
    std::vector<Scalar> c_;
};

namespace detail {

/// True when a scalar's printed form needs parentheses as a coefficient.
inline bool needsParens(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') return true;
    return s.find('/') != std::string::npos && s.find('*') != std::string::npos;
}

}  // namespace detail

template <class R>
std::string SkewPoly<R>::str() const {
    if (isZero()) return "0";
    const std::string& var = ring_.var();
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = c_[static_cast<std::size_t>(k)];
        if (c.isZero()) continue;
        std::string cs = ring_.scalarStr(c);
        bool neg = false;
        if (cs[0] == '-' && !detail::needsParens(cs)) {
            neg = true;
            cs = cs.substr(1);
        }
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (k == 0) {
            out += detail::needsParens(cs) ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += (detail::needsParens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    return out;
}

template <class R>
std::ostream& operator<<(std::ostream& os, const SkewPoly<R>& f) {
    return os << f.str();
}

template <class R>
struct DivResult {
    SkewPoly<R> quotient;
    SkewPoly<R> remainder;
};

template <class R>
SkewPoly<R> polyMul(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    return f * g;
}

/// f = q*g + r with deg r < deg g.
template <class R>
DivResult<R> divRight(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (g.isZero()) throw DomainError("right division by zero polynomial");
    const R& ring = g.ring();
    int n = g.degree();
    if (f.degree() < n) return {SkewPoly<R>(ring), f};
    std::vector<typename R::Scalar> q(static_cast<std::size_t>(f.degree() - n) + 1, ring.zero());
    SkewPoly<R> r = f;
    while (!r.isZero() && r.degree() >= n) {
        int k = r.degree() - n;
        // q_k t^k * g_n t^n = q_k sigma^k(g_n) t^{k+n}
        auto qk = r.lead() * ring.sigma(g.lead(), k).inverse();
        q[static_cast<std::size_t>(k)] = qk;
        r = r - SkewPoly<R>::monomial(ring, qk, k) * g;
    }
    return {SkewPoly<R>(ring, std::move(q)), r};
}

/// f = g*q + r with deg r < deg g.
template <class R>
DivResult<R> divLeft(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (g.isZero()) throw DomainError("left division by zero polynomial");
    const R& ring = g.ring();
    int n = g.degree();
    if (f.degree() < n) return {SkewPoly<R>(ring), f};
    std::vector<typename R::Scalar> q(static_cast<std::size_t>(f.degree() - n) + 1, ring.zero());
    SkewPoly<R> r = f;
    auto invLead = g.lead().inverse();
    while (!r.isZero() && r.degree() >= n) {
        int k = r.degree() - n;
        // g_n t^n * q_k t^k = g_n sigma^n(q_k) t^{n+k}
        auto qk = ring.sigma(invLead * r.lead(), -n);
        q[static_cast<std::size_t>(k)] = qk;
        r = r - g * SkewPoly<R>::monomial(ring, qk, k);
    }
    return {SkewPoly<R>(ring, std::move(q)), r};
}

/// True when g right-divides f, i.e. f is in R*g.
template <class R>
bool rightDivides(const SkewPoly<R>& g, const SkewPoly<R>& f) {
    return divRight(f, g).remainder.isZero();
}

/// True when g left-divides f, i.e. f is in g*R.
template <class R>
bool leftDivides(const SkewPoly<R>& g, const SkewPoly<R>& f) {
    return divLeft(f, g).remainder.isZero();
}

/// Result of the extended right Euclidean algorithm:
/// u*f + v*g = gcrd, and lu*f + lv*g = 0 with lu*f = lclm(f, g) up to a unit.
template <class R>
struct RightEuclid {
    SkewPoly<R> gcrd;
    SkewPoly<R> u, v;
    SkewPoly<R> lu, lv;
};

template <class R>
RightEuclid<R> extendedGcrd(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (f.isZero() && g.isZero()) throw DomainError("gcrd of two zero polynomials");
    const R& ring = f.ring();
    using P = SkewPoly<R>;
    P r0 = f, r1 = g;
    P u0 = P::one(ring), v0 = P(ring), u1 = P(ring), v1 = P::one(ring);
    while (!r1.isZero()) {
        auto [q, r] = divRight(r0, r1);
        P u2 = u0 - q * u1;
        P v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    auto inv = r0.lead().inverse();
    return {inv * r0, inv * u0, inv * v0, u1, v1};
}

/// Result of the extended left Euclidean algorithm:
/// f*u + g*v = gcld, and f*lu + g*lv = 0.
template <class R>
struct LeftEuclid {
    SkewPoly<R> gcld;
    SkewPoly<R> u, v;
    SkewPoly<R> lu, lv;
};

template <class R>
LeftEuclid<R> extendedGcld(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (f.isZero() && g.isZero()) throw DomainError("gcld of two zero polynomials");
    const R& ring = f.ring();
    using P = SkewPoly<R>;
    P r0 = f, r1 = g;
    P u0 = P::one(ring), v0 = P(ring), u1 = P(ring), v1 = P::one(ring);
    while (!r1.isZero()) {
        auto [q, r] = divLeft(r0, r1);
        P u2 = u0 - u1 * q;
        P v2 = v0 - v1 * q;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    // Normalize on the right so the leading coefficient is 1.
    auto c = P::constant(ring, ring.sigma(r0.lead().inverse(), -r0.degree()));
    return {r0 * c, u0 * c, v0 * c, u1, v1};
}

/// Monic generator of Rf + Rg.
template <class R>
SkewPoly<R> gcrd(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (f.isZero() && g.isZero()) throw DomainError("gcrd of two zero polynomials");
    SkewPoly<R> a = f, b = g;
    while (!b.isZero()) {
        auto r = divRight(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic generator of fR + gR.
template <class R>
SkewPoly<R> gcld(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (f.isZero() && g.isZero()) throw DomainError("gcld of two zero polynomials");
    SkewPoly<R> a = f, b = g;
    while (!b.isZero()) {
        auto r = divLeft(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.rightMonic();
}

/// Monic generator of Rf ∩ Rg.
template <class R>
SkewPoly<R> lclm(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (f.isZero() || g.isZero()) throw DomainError("lclm with a zero polynomial");
    auto e = extendedGcrd(f, g);
    return (e.lu * f).monic();
}

/// Monic generator of fR ∩ gR.
template <class R>
SkewPoly<R> lcrm(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (f.isZero() || g.isZero()) throw DomainError("lcrm with a zero polynomial");
    auto e = extendedGcld(f, g);
    return (f * e.lu).rightMonic();
}

/// The left ideal R*a, stored by its canonical generator: 0, 1 (the whole
/// ring) or a monic polynomial of positive degree.
template <class R>
class PrincipalLeftIdeal {
public:
    explicit PrincipalLeftIdeal(const SkewPoly<R>& a) : gen_(a.isUnit() ? SkewPoly<R>::one(a.ring()) : a.monic()) {}

    const SkewPoly<R>& generator() const { return gen_; }
    const R& ring() const { return gen_.ring(); }
    bool isZero() const { return gen_.isZero(); }
    bool isWholeRing() const { return gen_.isUnit(); }
    bool isProper() const { return !isWholeRing(); }
    bool contains(const SkewPoly<R>& f) const {
        if (gen_.isZero()) return f.isZero();
        return rightDivides(gen_, f);
    }

    friend bool operator==(const PrincipalLeftIdeal& a, const PrincipalLeftIdeal& b) { return a.gen_ == b.gen_; }

private:
    SkewPoly<R> gen_;
};

}  // namespace oreprime
