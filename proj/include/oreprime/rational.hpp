#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "oreprime/error.hpp"

namespace oreprime {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& n) : v_(n) {}  // NOLINT
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool isZero() const { return sgn(v_) == 0; }
    bool isOne() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool isInteger() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.isZero()) throw DomainError("division by zero rational");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (isZero()) throw DomainError("inverse of zero rational");
        return Rational(mpq_class(1 / v_));
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// Used for rational-function arithmetic and for central polynomials of H_Q[t].
class QPoly {
public:
    QPoly() = default;
    QPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }  // NOLINT
    static QPoly constant(const Rational& r) { return QPoly(std::vector<Rational>{r}); }
    static QPoly x() { return QPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static QPoly monomial(const Rational& c, int k) {
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
        v.back() = c;
        return QPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isOne() const { return c_.size() == 1 && c_[0].isOne(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rational(0);
    }
    const Rational& lead() const { return c_.back(); }

    QPoly monic() const {
        if (isZero()) return *this;
        Rational inv = lead().inverse();
        QPoly r = *this;
        for (auto& c : r.c_) c *= inv;
        return r;
    }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
        return QPoly(std::move(v));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.isZero() || b.isZero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].isZero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return QPoly(std::move(v));
    }
    friend QPoly operator*(const Rational& s, const QPoly& a) { return QPoly::constant(s) * a; }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.isZero()) throw DomainError("polynomial division by zero");
        QPoly r = *this;
        if (r.degree() < d.degree()) return {QPoly(), r};
        std::vector<Rational> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rational(0));
        Rational inv = d.lead().inverse();
        while (!r.isZero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational c = r.lead() * inv;
            q[static_cast<std::size_t>(k)] = c;
            for (int i = 0; i <= d.degree(); ++i) r.c_[static_cast<std::size_t>(i + k)] -= c * d.c_[static_cast<std::size_t>(i)];
            r.trim();
        }
        return {QPoly(std::move(q)), r};
    }
    QPoly operator/(const QPoly& d) const { return divmod(d).first; }
    QPoly operator%(const QPoly& d) const { return divmod(d).second; }

    /// Monic gcd; gcd(0,0) = 0.
    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.isZero()) {
            QPoly r = a % b;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(x + s), by Horner in the shifted variable.
    QPoly shift(const Rational& s) const {
        QPoly acc;
        QPoly lin(std::vector<Rational>{s, Rational(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + QPoly::constant(*it);
        return acc;
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().isZero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::string QPoly::str(const std::string& var) const {
    if (isZero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.isZero()) continue;
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (k == 0) {
            out += a.str();
        } else if (a.isOne()) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace oreprime
