#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

#include "oreprime/rational.hpp"

namespace oreprime {

/// Element of Q(x): num/den with den monic and gcd(num, den) = 1.
/// Reduced eagerly after every operation.
class RatFunc {
public:
    RatFunc() : num_(), den_(QPoly::constant(Rational(1))) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : num_(QPoly::constant(c)), den_(QPoly::constant(Rational(1))) {}  // NOLINT
    RatFunc(QPoly num) : num_(std::move(num)), den_(QPoly::constant(Rational(1))) {}  // NOLINT
    RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc x() { return RatFunc(QPoly::x()); }

    const QPoly& numerator() const { return num_; }
    const QPoly& denominator() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isConstant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc operator-() const { return {-num_, den_, Reduced{}}; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inverse() const {
        if (isZero()) throw DomainError("inverse of zero rational function");
        return {den_, num_};
    }

    /// f(x + k).
    RatFunc shift(long k) const { return {num_.shift(Rational(k)), den_.shift(Rational(k))}; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string str() const {
        if (den_.isOne()) return num_.str("x");
        auto wrap = [](const QPoly& p) {
            std::string s = p.str("x");
            bool simple = p.degree() <= 0 || (p.coeffs().size() - std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                                                               [](const Rational& r) { return r.isZero(); })) == 1;
            return simple ? s : "(" + s + ")";
        };
        return wrap(num_) + "/" + wrap(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

private:
    struct Reduced {};
    RatFunc(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (den_.isZero()) throw DomainError("rational function with zero denominator");
        if (num_.isZero()) {
            den_ = QPoly::constant(Rational(1));
            return;
        }
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lc = den_.lead().inverse();
        num_ = lc * num_;
        den_ = lc * den_;
    }

    QPoly num_, den_;
};

}  // namespace oreprime
