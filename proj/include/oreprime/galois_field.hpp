#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "oreprime/error.hpp"

namespace oreprime {

class FFElem;

/// The finite field F_{p^m} = F_p[a]/(modulus). Elements are encoded as the
/// integer whose base-p digits are their coordinates in the power basis
/// 1, a, ..., a^{m-1}. Instances are interned: use GaloisField::get.
class GaloisField {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 20;

    static const GaloisField& get(std::uint32_t p, unsigned m);
    /// Looks up F_q; q must be a prime power.
    static const GaloisField& ofOrder(std::uint32_t q);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    /// Monic modulus, coefficients lowest first (length m+1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (!addTable_.empty()) return addTable_[a * q_ + b];
        return addSlow(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const {
        if (p_ == 2) return a;
        std::uint32_t r = 0, w = 1;
        for (unsigned i = 0; i < m_; ++i, a /= p_, w *= p_) r += ((p_ - a % p_) % p_) * w;
        return r;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw DomainError("inverse of zero in GF(" + std::to_string(q_) + ")");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
    }
    /// a^(p^k) for any integer k (negative k runs the inverse Frobenius).
    std::uint32_t frobenius(std::uint32_t a, long k) const {
        if (a == 0) return 0;
        long kk = ((k % static_cast<long>(m_)) + static_cast<long>(m_)) % static_cast<long>(m_);
        return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * frobPow_[static_cast<std::size_t>(kk)]) % (q_ - 1))];
    }
    /// A generator of the multiplicative group.
    std::uint32_t primitive() const { return exp_[1 % (q_ - 1 == 0 ? 1 : q_ - 1)]; }

    std::vector<std::uint32_t> coordinates(std::uint32_t a) const {
        std::vector<std::uint32_t> c(m_);
        for (unsigned i = 0; i < m_; ++i, a /= p_) c[i] = a % p_;
        return c;
    }
    std::uint32_t fromCoordinates(const std::vector<std::uint32_t>& c) const {
        std::uint32_t r = 0, w = 1;
        for (unsigned i = 0; i < m_; ++i, w *= p_) r += (i < c.size() ? c[i] % p_ : 0) * w;
        return r;
    }
    std::uint32_t fromInteger(long n) const {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return static_cast<std::uint32_t>(r);
    }

    FFElem element(std::uint32_t code) const;
    FFElem zero() const;
    FFElem one() const;
    /// The class of the indeterminate, a. Only meaningful for m >= 2.
    FFElem generator() const;

    std::string name() const { return "GF(" + std::to_string(q_) + ")"; }
    std::string str(std::uint32_t a, const std::string& sym = "a") const;

    GaloisField(std::uint32_t p, unsigned m);
    GaloisField(const GaloisField&) = delete;
    GaloisField& operator=(const GaloisField&) = delete;

private:
    std::uint32_t addSlow(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0, w = 1;
        for (unsigned i = 0; i < m_; ++i, a /= p_, b /= p_, w *= p_) r += ((a % p_ + b % p_) % p_) * w;
        return r;
    }
    std::uint32_t mulSlow(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> addTable_;
    std::vector<std::uint32_t> exp_, log_;
    std::vector<std::uint64_t> frobPow_;  // p^k mod (q-1)
};

/// Element of an interned GaloisField.
class FFElem {
public:
    FFElem() = default;
    FFElem(const GaloisField* f, std::uint32_t code) : f_(f), code_(code) {}

    const GaloisField& field() const { return *f_; }
    const GaloisField* fieldPtr() const { return f_; }
    std::uint32_t code() const { return code_; }
    std::vector<std::uint32_t> coordinates() const { return f_->coordinates(code_); }

    bool isZero() const { return code_ == 0; }
    bool isOne() const { return code_ == 1; }

    FFElem operator-() const { return {f_, f_->neg(code_)}; }
    friend FFElem operator+(const FFElem& a, const FFElem& b) { check(a, b); return {a.f_, a.f_->add(a.code_, b.code_)}; }
    friend FFElem operator-(const FFElem& a, const FFElem& b) { check(a, b); return {a.f_, a.f_->sub(a.code_, b.code_)}; }
    friend FFElem operator*(const FFElem& a, const FFElem& b) { check(a, b); return {a.f_, a.f_->mul(a.code_, b.code_)}; }
    friend FFElem operator/(const FFElem& a, const FFElem& b) { check(a, b); return {a.f_, a.f_->mul(a.code_, a.f_->inv(b.code_))}; }
    FFElem& operator+=(const FFElem& o) { return *this = *this + o; }
    FFElem& operator-=(const FFElem& o) { return *this = *this - o; }
    FFElem& operator*=(const FFElem& o) { return *this = *this * o; }
    FFElem inverse() const { return {f_, f_->inv(code_)}; }
    FFElem pow(std::uint64_t e) const { return {f_, f_->pow(code_, e)}; }
    FFElem frobenius(long k) const { return {f_, f_->frobenius(code_, k)}; }

    friend bool operator==(const FFElem& a, const FFElem& b) { return a.f_ == b.f_ && a.code_ == b.code_; }
    friend bool operator<(const FFElem& a, const FFElem& b) { return a.code_ < b.code_; }

    std::string str(const std::string& sym = "a") const { return f_->str(code_, sym); }
    friend std::ostream& operator<<(std::ostream& os, const FFElem& e) { return os << e.str(); }

private:
    static void check(const FFElem& a, const FFElem& b) {
        if (a.f_ != b.f_) throw DomainError("finite-field elements from different fields");
    }
    const GaloisField* f_ = nullptr;
    std::uint32_t code_ = 0;
};

namespace detail {

inline bool isPrime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense F_p[x] helpers over small primes, used only while building a field.
using SmallPoly = std::vector<std::uint32_t>;

inline void trimSmall(SmallPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline SmallPoly modSmall(SmallPoly a, const SmallPoly& b, std::uint32_t p) {
    trimSmall(a);
    std::uint32_t lb = b.back();
    std::uint32_t invLb = 1;
    for (std::uint32_t e = p - 2, base = lb; e; e >>= 1, base = static_cast<std::uint32_t>(1ull * base * base % p))
        if (e & 1) invLb = static_cast<std::uint32_t>(1ull * invLb * base % p);
    while (a.size() >= b.size()) {
        std::uint32_t c = static_cast<std::uint32_t>(1ull * a.back() * invLb % p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + 1ull * (p - c) * b[i]) % p);
        trimSmall(a);
    }
    return a;
}

/// Irreducibility by trial division over all monic polynomials of degree <= m/2.
inline bool isIrreducibleSmall(const SmallPoly& f, std::uint32_t p) {
    unsigned m = static_cast<unsigned>(f.size()) - 1;
    for (unsigned d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            SmallPoly g(d + 1);
            std::uint64_t c = code;
            for (unsigned i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
            g[d] = 1;
            if (modSmall(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

inline GaloisField::GaloisField(std::uint32_t p, unsigned m) : p_(p), m_(m) {
    if (!detail::isPrime(p)) throw DomainError("GF: characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw DomainError("GF: extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw CapExceeded("GF: field order exceeds " + std::to_string(kMaxOrder));
    }
    q_ = static_cast<std::uint32_t>(q);

    // Conway polynomials for the small fields the tests use; otherwise the
    // lexicographically first monic irreducible of degree m.
    if (p == 2 && m == 2) modulus_ = {1, 1, 1};
    else if (p == 2 && m == 3) modulus_ = {1, 1, 0, 1};
    else if (p == 3 && m == 2) modulus_ = {2, 2, 1};
    else if (m == 1) modulus_ = {0, 1};
    else {
        std::uint64_t count = q_;
        for (std::uint64_t code = 0; code < count; ++code) {
            detail::SmallPoly f(m + 1);
            std::uint64_t c = code;
            for (unsigned i = 0; i < m; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
            f[m] = 1;
            if (f[0] != 0 && detail::isIrreducibleSmall(f, p)) {
                modulus_ = f;
                break;
            }
        }
    }

    if (q_ <= 256) {
        addTable_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) addTable_[a * q_ + b] = addSlow(a, b);
    }

    // Find a primitive element by brute force and build exp/log tables.
    exp_.assign(q_ > 1 ? q_ - 1 : 1, 1);
    log_.assign(q_, 0);
    for (std::uint32_t g = 1; g < q_; ++g) {
        std::uint32_t x = 1;
        std::uint32_t ord = 0;
        do {
            x = mulSlow(x, g);
            ++ord;
        } while (x != 1);
        if (ord == q_ - 1) {
            x = 1;
            for (std::uint32_t e = 0; e < q_ - 1; ++e) {
                exp_[e] = x;
                log_[x] = e;
                x = mulSlow(x, g);
            }
            break;
        }
    }
    frobPow_.resize(m_);
    std::uint64_t pk = 1;
    for (unsigned k = 0; k < m_; ++k) {
        frobPow_[k] = pk % (q_ - 1 == 0 ? 1 : q_ - 1);
        pk = pk * p_ % (q_ - 1 == 0 ? 1 : q_ - 1);
    }
}

inline std::uint32_t GaloisField::mulSlow(std::uint32_t a, std::uint32_t b) const {
    auto ca = coordinates(a), cb = coordinates(b);
    detail::SmallPoly prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + 1ull * ca[i] * cb[j]) % p_);
    auto r = detail::modSmall(prod, modulus_, p_);
    return fromCoordinates(r);
}

inline const GaloisField& GaloisField::get(std::uint32_t p, unsigned m) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<GaloisField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, m}];
    if (!slot) slot = std::make_unique<GaloisField>(p, m);
    return *slot;
}

inline const GaloisField& GaloisField::ofOrder(std::uint32_t q) {
    if (q < 2) throw DomainError("GF(" + std::to_string(q) + ") is not a field");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned m = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) throw DomainError("GF(" + std::to_string(q) + "): order is not a prime power");
    return get(p, m);
}

inline FFElem GaloisField::element(std::uint32_t code) const { return {this, code % q_}; }
inline FFElem GaloisField::zero() const { return {this, 0}; }
inline FFElem GaloisField::one() const { return {this, 1}; }
inline FFElem GaloisField::generator() const { return {this, m_ >= 2 ? p_ : 0}; }

inline std::string GaloisField::str(std::uint32_t a, const std::string& sym) const {
    if (a == 0) return "0";
    auto c = coordinates(a);
    std::string out;
    for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
        std::uint32_t ci = c[static_cast<std::size_t>(i)];
        if (ci == 0) continue;
        if (!out.empty()) out += "+";
        std::string mono = i == 0 ? "" : (i == 1 ? sym : sym + "^" + std::to_string(i));
        if (i == 0) out += std::to_string(ci);
        else if (ci == 1) out += mono;
        else out += std::to_string(ci) + "*" + mono;
    }
    return out;
}

}  // namespace oreprime
