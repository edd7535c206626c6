#pragma once

#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "oreprime/galois_field.hpp"
#include "oreprime/quaternion.hpp"
#include "oreprime/ratfunc.hpp"

namespace oreprime {

enum class RingKind { FF, HQ, QXShift };

/// F_q[t; x -> x^{p^s}]. s = 0 gives the commutative ring F_q[t].
class FFRing {
public:
    using Scalar = FFElem;
    static constexpr RingKind kind = RingKind::FF;

    explicit FFRing(const GaloisField& f, unsigned s = 1, std::string var = "t")
        : f_(&f), s_(s % f.degree()), var_(std::move(var)) {}

    const GaloisField& field() const { return *f_; }
    unsigned frobeniusExponent() const { return s_; }
    /// Order r of the twist; the center is Fix(sigma)[t^r].
    unsigned sigmaOrder() const { return f_->degree() / fixedDegree(); }
    /// Degree over F_p of the fixed field of sigma.
    unsigned fixedDegree() const { return s_ == 0 ? f_->degree() : std::gcd(f_->degree(), s_); }

    Scalar zero() const { return f_->zero(); }
    Scalar one() const { return f_->one(); }
    Scalar fromInteger(long n) const { return f_->element(f_->fromInteger(n)); }
    Scalar sigma(const Scalar& c, long k) const {
        if (c.fieldPtr() != f_) throw DomainError("scalar is not in " + f_->name());
        return c.frobenius(static_cast<long>(s_) * k);
    }
    /// Scalars that together with t generate the ring over the prime field.
    std::vector<Scalar> scalarGenerators() const {
        if (f_->degree() >= 2) return {f_->generator()};
        return {};
    }
    /// Basis of the coefficient field over its prime field: 1, a, ..., a^{m-1}.
    std::vector<Scalar> primeBasis() const {
        std::vector<Scalar> b;
        std::uint32_t w = 1;
        for (unsigned i = 0; i < f_->degree(); ++i, w *= f_->characteristic()) b.push_back(f_->element(w));
        return b;
    }

    const std::string& var() const { return var_; }
    std::string name() const {
        std::string tw = s_ == 0 ? "" : (s_ == 1 ? ";frob" : ";frob^" + std::to_string(s_));
        return f_->name() + "[" + var_ + tw + "]";
    }
    std::string centerDescription() const {
        return "GF(" + std::to_string(fixedOrder()) + ")[" + var_ + (sigmaOrder() > 1 ? "^" + std::to_string(sigmaOrder()) : "") + "]";
    }
    std::uint32_t fixedOrder() const {
        std::uint32_t o = 1;
        for (unsigned i = 0; i < fixedDegree(); ++i) o *= f_->characteristic();
        return o;
    }
    bool bounded() const { return true; }
    std::string scalarStr(const Scalar& c) const { return c.str(); }

    friend bool operator==(const FFRing& a, const FFRing& b) { return a.f_ == b.f_ && a.s_ == b.s_; }

private:
    const GaloisField* f_;
    unsigned s_;
    std::string var_;
};

/// H_Q[t] with t central.
class HQRing {
public:
    using Scalar = Quat;
    static constexpr RingKind kind = RingKind::HQ;

    explicit HQRing(std::string var = "t") : var_(std::move(var)) {}

    Scalar zero() const { return Quat(0); }
    Scalar one() const { return Quat(1); }
    Scalar fromInteger(long n) const { return Quat(n); }
    Scalar sigma(const Scalar& c, long /*k*/) const { return c; }
    std::vector<Scalar> scalarGenerators() const { return {Quat::i(), Quat::j()}; }
    std::vector<Scalar> primeBasis() const { return {Quat(1), Quat::i(), Quat::j(), Quat::k()}; }

    const std::string& var() const { return var_; }
    std::string name() const { return "HQ[" + var_ + "]"; }
    std::string centerDescription() const { return "Q[" + var_ + "]"; }
    bool bounded() const { return true; }
    std::string scalarStr(const Scalar& c) const { return c.str(); }

    friend bool operator==(const HQRing&, const HQRing&) { return true; }

private:
    std::string var_;
};

/// Q(x)[t; x -> x+1]. The shift has infinite inner order, so this ring is not bounded.
class QXShiftRing {
public:
    using Scalar = RatFunc;
    static constexpr RingKind kind = RingKind::QXShift;

    QXShiftRing() = default;

    Scalar zero() const { return RatFunc(0); }
    Scalar one() const { return RatFunc(1); }
    Scalar fromInteger(long n) const { return RatFunc(n); }
    Scalar sigma(const Scalar& c, long k) const { return k == 0 ? c : c.shift(k); }
    std::vector<Scalar> scalarGenerators() const { return {RatFunc::x()}; }

    const std::string& var() const { return var_; }
    std::string name() const { return "QX[t;shift]"; }
    std::string centerDescription() const { return "Q"; }
    bool bounded() const { return false; }
    std::string scalarStr(const Scalar& c) const { return c.str(); }

    friend bool operator==(const QXShiftRing&, const QXShiftRing&) { return true; }

private:
    std::string var_ = "t";
};

using RingDescriptor = std::variant<FFRing, HQRing, QXShiftRing>;

inline std::string ringName(const RingDescriptor& r) {
    return std::visit([](const auto& ring) { return ring.name(); }, r);
}

/// sigma^k(c) in the given ring.
template <class R>
typename R::Scalar applyAutomorphism(const R& ring, const typename R::Scalar& c, long k) {
    return ring.sigma(c, k);
}

}  // namespace oreprime
