#pragma once

#include <array>
#include <compare>
#include <ostream>
#include <string>

#include "oreprime/rational.hpp"

namespace oreprime {

/// Rational quaternion w + x i + y j + z k (Hamilton relations i^2 = j^2 = -1, ij = k).
class Quat {
public:
    Quat() = default;
    Quat(Rational w) : w_(std::move(w)) {}  // NOLINT(google-explicit-constructor)
    Quat(long w) : w_(w) {}                 // NOLINT(google-explicit-constructor)
    Quat(Rational w, Rational x, Rational y, Rational z)
        : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

    static Quat i() { return {0, 1, 0, 0}; }
    static Quat j() { return {0, 0, 1, 0}; }
    static Quat k() { return {0, 0, 0, 1}; }

    const Rational& w() const { return w_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Rational& z() const { return z_; }
    std::array<Rational, 4> components() const { return {w_, x_, y_, z_}; }

    bool isZero() const { return w_.isZero() && x_.isZero() && y_.isZero() && z_.isZero(); }
    bool isOne() const { return w_.isOne() && x_.isZero() && y_.isZero() && z_.isZero(); }
    bool isScalar() const { return x_.isZero() && y_.isZero() && z_.isZero(); }

    Quat conj() const { return {w_, -x_, -y_, -z_}; }
    Rational norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }
    Rational trace() const { return w_ + w_; }
    Quat inverse() const {
        Rational n = norm();
        if (n.isZero()) throw DomainError("inverse of zero quaternion");
        Rational s = n.inverse();
        return {w_ * s, -x_ * s, -y_ * s, -z_ * s};
    }

    Quat operator-() const { return {-w_, -x_, -y_, -z_}; }
    friend Quat operator+(const Quat& a, const Quat& b) { return {a.w_ + b.w_, a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_}; }
    friend Quat operator-(const Quat& a, const Quat& b) { return {a.w_ - b.w_, a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_}; }
    friend Quat operator*(const Quat& a, const Quat& b) {
        return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
                a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
                a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
                a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
    }
    /// a * b^{-1}
    friend Quat operator/(const Quat& a, const Quat& b) { return a * b.inverse(); }
    Quat& operator+=(const Quat& o) { return *this = *this + o; }
    Quat& operator-=(const Quat& o) { return *this = *this - o; }
    Quat& operator*=(const Quat& o) { return *this = *this * o; }

    friend bool operator==(const Quat&, const Quat&) = default;
    /// Lexicographic on (w, x, y, z).
    friend std::strong_ordering operator<=>(const Quat& a, const Quat& b) {
        if (auto c = a.w_ <=> b.w_; c != 0) return c;
        if (auto c = a.x_ <=> b.x_; c != 0) return c;
        if (auto c = a.y_ <=> b.y_; c != 0) return c;
        return a.z_ <=> b.z_;
    }

    std::string str() const {
        std::string out;
        const std::array<std::pair<const Rational*, const char*>, 4> parts{
            {{&w_, ""}, {&x_, "i"}, {&y_, "j"}, {&z_, "k"}}};
        for (const auto& [c, unit] : parts) {
            if (c->isZero()) continue;
            bool neg = c->sign() < 0;
            Rational a = neg ? -*c : *c;
            if (!out.empty() || neg) out += neg ? "-" : "+";
            if (*unit == '\0') out += a.str();
            else if (a.isOne()) out += unit;
            else out += a.str() + "*" + unit;
        }
        return out.empty() ? "0" : out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << q.str(); }

private:
    Rational w_, x_, y_, z_;
};

struct QuatConjNorm {
    Quat conj;
    Rational norm;
    Rational trace;
};

inline Quat quatMul(const Quat& a, const Quat& b) { return a * b; }
inline QuatConjNorm quatConjNorm(const Quat& a) { return {a.conj(), a.norm(), a.trace()}; }

}  // namespace oreprime
