#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "oreprime/error.hpp"
#include "oreprime/rational.hpp"

namespace oreprime {

struct QFactor {
    QPoly factor;  // monic irreducible over Q
    int multiplicity;
};

namespace detail {

inline QPoly derivative(const QPoly& f) {
    std::vector<Rational> d;
    for (int k = 1; k <= f.degree(); ++k) d.push_back(f.coeff(k) * Rational(k));
    return QPoly(std::move(d));
}

/// Scales f to a primitive integer polynomial with positive leading coefficient.
inline std::vector<mpz_class> primitiveIntegerCoeffs(const QPoly& f) {
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) l = lcm(l, c.denominator());
    std::vector<mpz_class> v;
    for (const auto& c : f.coeffs()) v.push_back(c.numerator() * (l / c.denominator()));
    mpz_class g = 0;
    for (const auto& c : v) g = gcd(g, c);
    if (v.back() < 0) g = -g;
    for (auto& c : v) c /= g;
    return v;
}

inline mpz_class evalInt(const std::vector<mpz_class>& f, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline std::vector<mpz_class> positiveDivisors(mpz_class n, std::size_t cap) {
    if (n < 0) n = -n;
    if (n > mpz_class("100000000000000")) throw CapExceeded("Kronecker: value too large to enumerate divisors");
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
        if (small.size() + large.size() > cap) throw CapExceeded("Kronecker: too many divisors");
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Lagrange interpolation through (xs[i], ys[i]).
inline QPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
    QPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        QPoly term = QPoly::constant(Rational(ys[i]));
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            QPoly lin(std::vector<Rational>{Rational(mpz_class(-xs[j])), Rational(1)});
            term = term * lin;
            term = Rational(mpz_class(1), mpz_class(xs[i] - xs[j])) * term;
        }
        acc = acc + term;
    }
    return acc;
}

/// Searches a factor of f (square-free, no rational roots needed) of exact degree d.
inline std::optional<QPoly> kroneckerFactor(const QPoly& f, int d) {
    auto fi = primitiveIntegerCoeffs(f);
    std::vector<mpz_class> xs;
    std::vector<std::vector<mpz_class>> divs;
    for (long step = 0; static_cast<int>(xs.size()) < d + 1; ++step) {
        long x = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
        mpz_class v = evalInt(fi, mpz_class(x));
        if (v == 0) return QPoly(std::vector<Rational>{Rational(-x), Rational(1)});
        xs.emplace_back(x);
        divs.push_back(positiveDivisors(v, 4096));
    }
    std::vector<mpz_class> ys(xs.size());
    std::size_t tried = 0;
    std::optional<QPoly> found;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == xs.size()) {
            if (++tried > 20'000'000) throw CapExceeded("Kronecker: combination cap exceeded");
            QPoly g = interpolate(xs, ys);
            if (g.degree() != d) return false;
            for (const auto& c : g.coeffs())
                if (!c.isInteger()) return false;
            if ((f % g).isZero()) {
                found = g.monic();
                return true;
            }
            return false;
        }
        for (const auto& dv : divs[i]) {
            for (int s : {1, -1}) {
                if (i == 0 && s < 0) continue;  // g and -g give the same factor
                ys[i] = s * dv;
                if (rec(i + 1)) return true;
            }
        }
        return false;
    };
    rec(0);
    return found;
}

inline void factorSquarefree(const QPoly& f, std::vector<QPoly>& out) {
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back(f.monic());
        return;
    }
    for (int d = 1; d <= f.degree() / 2; ++d) {
        if (auto g = kroneckerFactor(f, d)) {
            factorSquarefree(*g, out);
            factorSquarefree((f / *g).monic(), out);
            return;
        }
    }
    out.push_back(f.monic());
}

inline bool lessQPoly(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    return false;
}

}  // namespace detail

inline constexpr int kKroneckerDegreeCap = 8;

/// Factors h over Q into monic irreducibles with multiplicities (Kronecker's
/// method on the square-free part). Throws CapExceeded when the square-free
/// part exceeds `degreeCap`.
inline std::vector<QFactor> commFactorQ(const QPoly& h, int degreeCap = kKroneckerDegreeCap) {
    if (h.isZero()) throw DomainError("factorization of the zero polynomial");
    QPoly f = h.monic();
    if (f.degree() <= 0) return {};
    QPoly g = QPoly::gcd(f, detail::derivative(f));
    QPoly sqfree = (f / g).monic();
    if (sqfree.degree() > degreeCap)
        throw CapExceeded("Kronecker factorization capped at degree " + std::to_string(degreeCap));
    std::vector<QPoly> irr;
    detail::factorSquarefree(sqfree, irr);
    std::sort(irr.begin(), irr.end(), detail::lessQPoly);
    std::vector<QFactor> out;
    for (const auto& p : irr) {
        int mult = 0;
        QPoly rest = f;
        while (true) {
            auto [q, r] = rest.divmod(p);
            if (!r.isZero()) break;
            rest = q;
            ++mult;
        }
        out.push_back({p, mult});
    }
    return out;
}

inline bool isIrreducibleQ(const QPoly& h, int degreeCap = kKroneckerDegreeCap) {
    auto fs = commFactorQ(h, degreeCap);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace oreprime
