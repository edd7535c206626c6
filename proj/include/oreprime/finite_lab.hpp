#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oreprime/error.hpp"
#include "oreprime/prime_coords.hpp"
#include "oreprime/primeness.hpp"
#include "oreprime/structure.hpp"

namespace oreprime {

inline constexpr std::uint64_t kLabCap = 1u << 16;

/// Finite-dimensional associative unital algebra over F_p, given by structure
/// constants. Elements are coordinate vectors, or integer codes whose base-p
/// digits are those coordinates.
class FiniteAlgebra {
public:
    using Vec = std::vector<std::uint32_t>;

    /// `table[i*n + j]` is e_i e_j. Throws DomainError if the product is not
    /// associative or `unit` is not a two-sided identity.
    FiniteAlgebra(std::string name, std::uint32_t p, std::vector<std::string> labels, std::vector<Vec> table, Vec unit)
        : name_(std::move(name)), p_(p), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
        n_ = labels_.size();
        if (table_.size() != n_ * n_) throw DomainError("structure constants have the wrong shape");
        size_ = 1;
        for (std::size_t i = 0; i < n_; ++i) size_ = size_ > kMaxElements ? size_ : size_ * p_;
        validate();
    }

    const std::string& name() const { return name_; }
    std::uint32_t p() const { return p_; }
    std::size_t dim() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    /// p^dim, saturated above kMaxElements.
    std::uint64_t size() const { return size_; }

    Vec zero() const { return Vec(n_, 0); }
    Vec basis(std::size_t i) const {
        Vec v(n_, 0);
        v[i] = 1;
        return v;
    }
    Vec add(const Vec& a, const Vec& b) const {
        Vec r(n_);
        for (std::size_t i = 0; i < n_; ++i) r[i] = (a[i] + b[i]) % p_;
        return r;
    }
    Vec scale(std::uint32_t c, const Vec& a) const {
        Vec r(n_);
        for (std::size_t i = 0; i < n_; ++i) r[i] = static_cast<std::uint32_t>((std::uint64_t{c} * a[i]) % p_);
        return r;
    }
    Vec mul(const Vec& a, const Vec& b) const {
        Vec r(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (b[j] == 0) continue;
                std::uint64_t c = (std::uint64_t{a[i]} * b[j]) % p_;
                const Vec& e = table_[i * n_ + j];
                for (std::size_t k = 0; k < n_; ++k)
                    if (e[k] != 0) r[k] = static_cast<std::uint32_t>((r[k] + c * e[k]) % p_);
            }
        }
        return r;
    }

    std::uint32_t encode(const Vec& v) const {
        std::uint32_t c = 0;
        for (std::size_t i = n_; i-- > 0;) c = c * p_ + v[i];
        return c;
    }
    Vec decode(std::uint32_t c) const {
        Vec v(n_);
        for (std::size_t i = 0; i < n_; ++i, c /= p_) v[i] = c % p_;
        return v;
    }
    /// Product of codes; cached for small algebras.
    std::uint32_t mulCode(std::uint32_t a, std::uint32_t b) const {
        if (size_ <= kTableLimit) {
            if (codeTable_.empty()) buildCodeTable();
            return codeTable_[a * size_ + b];
        }
        return encode(mul(decode(a), decode(b)));
    }

    bool isCommutative() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (table_[i * n_ + j] != table_[j * n_ + i]) return false;
        return true;
    }

    std::string str(const Vec& v) const {
        std::string out;
        for (std::size_t i = 0; i < n_; ++i) {
            if (v[i] == 0) continue;
            if (!out.empty()) out += " + ";
            if (v[i] != 1) out += std::to_string(v[i]) + "*";
            out += labels_[i];
        }
        return out.empty() ? "0" : out;
    }

    static constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 32;

private:
    static constexpr std::uint64_t kTableLimit = 1024;

    void validate() const {
        for (std::size_t i = 0; i < n_; ++i) {
            if (mul(unit_, basis(i)) != basis(i) || mul(basis(i), unit_) != basis(i))
                throw DomainError(name_ + ": unit law fails on " + labels_[i]);
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    const Vec& ij = table_[i * n_ + j];
                    const Vec& jk = table_[j * n_ + k];
                    if (mul(ij, basis(k)) != mul(basis(i), jk))
                        throw DomainError(name_ + ": not associative on (" + labels_[i] + ", " + labels_[j] + ", " +
                                          labels_[k] + ")");
                }
        }
    }
    void buildCodeTable() const {
        codeTable_.resize(size_ * size_);
        for (std::uint32_t a = 0; a < size_; ++a) {
            Vec va = decode(a);
            for (std::uint32_t b = 0; b < size_; ++b) codeTable_[a * size_ + b] = encode(mul(va, decode(b)));
        }
    }

    std::string name_;
    std::uint32_t p_;
    std::vector<std::string> labels_;
    std::vector<Vec> table_;
    Vec unit_;
    std::size_t n_ = 0;
    std::uint64_t size_ = 1;
    mutable std::vector<std::uint32_t> codeTable_;
};

namespace detail {

inline std::string powerLabel(const GaloisField& k, unsigned l) {
    if (k.degree() == 1 || l == 0) return "";
    return l == 1 ? "a" : "a^" + std::to_string(l);
}

inline std::vector<std::uint32_t> fieldCoords(const FFElem& c) {
    auto d = c.coordinates();
    return {d.begin(), d.end()};
}

/// Matrix units over GF(q) at the listed positions, scaled by a^l.
inline FiniteAlgebra matrixAlgebra(const std::string& name, const GaloisField& k,
                                   const std::vector<std::pair<int, int>>& positions) {
    unsigned m = k.degree();
    std::size_t n = positions.size() * m;
    std::vector<std::string> labels;
    for (auto [r, c] : positions)
        for (unsigned l = 0; l < m; ++l) {
            std::string s = powerLabel(k, l);
            labels.push_back((s.empty() ? "" : s + "*") + "E" + std::to_string(r + 1) + std::to_string(c + 1));
        }
    auto indexOf = [&](int r, int c) -> long {
        for (std::size_t i = 0; i < positions.size(); ++i)
            if (positions[i] == std::make_pair(r, c)) return static_cast<long>(i);
        return -1;
    };
    auto alpha = [&](unsigned l) {
        FFElem x = k.one();
        for (unsigned i = 0; i < l; ++i) x = x * k.generator();
        return x;
    };
    std::vector<FiniteAlgebra::Vec> table(n * n, FiniteAlgebra::Vec(n, 0));
    for (std::size_t i = 0; i < positions.size(); ++i)
        for (std::size_t j = 0; j < positions.size(); ++j) {
            auto [r1, c1] = positions[i];
            auto [r2, c2] = positions[j];
            if (c1 != r2) continue;
            long target = indexOf(r1, c2);
            if (target < 0) throw DomainError(name + ": positions are not closed under multiplication");
            for (unsigned l1 = 0; l1 < m; ++l1)
                for (unsigned l2 = 0; l2 < m; ++l2) {
                    auto coords = fieldCoords(alpha(l1) * alpha(l2));
                    auto& e = table[(i * m + l1) * n + (j * m + l2)];
                    for (unsigned l = 0; l < m; ++l) e[static_cast<std::size_t>(target) * m + l] = coords[l];
                }
        }
    FiniteAlgebra::Vec unit(n, 0);
    for (std::size_t i = 0; i < positions.size(); ++i)
        if (positions[i].first == positions[i].second) unit[i * m] = 1;
    return FiniteAlgebra(name, k.characteristic(), std::move(labels), std::move(table), std::move(unit));
}

}  // namespace detail

/// M2(GF(q)).
inline FiniteAlgebra matrixRing2(const GaloisField& k) {
    return detail::matrixAlgebra("M2(" + k.name() + ")", k, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

/// Lower triangular 2x2 matrices over GF(q).
inline FiniteAlgebra lowerTriangular2(const GaloisField& k) {
    return detail::matrixAlgebra("T2(" + k.name() + ")", k, {{0, 0}, {1, 0}, {1, 1}});
}

/// GF(q) as an algebra over its prime field.
inline FiniteAlgebra fieldAlgebra(const GaloisField& k) { return detail::matrixAlgebra(k.name(), k, {{0, 0}}); }

/// R/Rg for an invariant g of F_q[t; sigma]; a ring because Rg is two-sided.
inline FiniteAlgebra quotientAlgebra(const SkewPoly<FFRing>& g) {
    if (g.isZero() || g.isUnit()) throw DomainError("quotient algebra needs a nonzero non-unit");
    if (!isInvariant(g)) throw DomainError(g.str() + " is not invariant, so R/Rg is not a ring");
    const FFRing& ring = g.ring();
    const GaloisField& k = ring.field();
    auto gm = g.monic();
    int d = gm.degree();
    unsigned m = k.degree();
    std::vector<SkewPoly<FFRing>> basis;
    std::vector<std::string> labels;
    for (int e = 0; e < d; ++e)
        for (const auto& c : ring.primeBasis()) {
            basis.push_back(SkewPoly<FFRing>::monomial(ring, c, e));
            std::string s = detail::powerLabel(k, static_cast<unsigned>(basis.size() - 1) % m);
            std::string tp = e == 0 ? "" : (e == 1 ? ring.var() : ring.var() + "^" + std::to_string(e));
            labels.push_back(s.empty() && tp.empty() ? "1" : (s.empty() ? tp : (tp.empty() ? s : s + "*" + tp)));
        }
    auto coordsOf = [&](const SkewPoly<FFRing>& f) {
        FiniteAlgebra::Vec v;
        for (const auto& c : polyCoords(divRight(f, gm).remainder, d)) v.push_back(c.code());
        return v;
    };
    std::size_t n = basis.size();
    std::vector<FiniteAlgebra::Vec> table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table.push_back(coordsOf(basis[i] * basis[j]));
    return FiniteAlgebra(ring.name() + "/(" + gm.str() + ")", k.characteristic(), std::move(labels), std::move(table),
                         coordsOf(SkewPoly<FFRing>::one(ring)));
}

/// Polynomial for a code of R/Rg, inverse of the coordinates used by quotientAlgebra.
inline SkewPoly<FFRing> quotientElement(const FFRing& ring, const FiniteAlgebra& A, std::uint32_t code) {
    const GaloisField& fp = GaloisField::get(ring.field().characteristic(), 1);
    std::vector<FFElem> v;
    for (auto x : A.decode(code)) v.push_back(fp.element(x));
    return polyFromCoords(ring, v);
}

/// A subspace of a FiniteAlgebra, kept with its reduced echelon basis and
/// its full element set. Holds a pointer to the algebra, which must outlive it.
class FiniteLeftIdeal {
public:
    using Vec = FiniteAlgebra::Vec;

    FiniteLeftIdeal(const FiniteAlgebra& A, std::vector<Vec> basis, std::vector<std::uint32_t> elements)
        : A_(&A), basis_(std::move(basis)), elements_(std::move(elements)), member_(A.size(), false) {
        for (auto c : elements_) member_[c] = true;
    }

    const FiniteAlgebra& algebra() const { return *A_; }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::uint32_t>& elements() const { return elements_; }
    std::size_t dim() const { return basis_.size(); }
    bool contains(std::uint32_t code) const { return member_[code]; }
    bool contains(const Vec& v) const { return member_[A_->encode(v)]; }
    bool isZero() const { return basis_.empty(); }
    bool isWhole() const { return basis_.size() == A_->dim(); }
    bool subsetOf(const FiniteLeftIdeal& o) const {
        for (const auto& b : basis_)
            if (!o.contains(b)) return false;
        return true;
    }
    bool isTwoSided() const {
        for (const auto& b : basis_)
            for (std::size_t k = 0; k < A_->dim(); ++k)
                if (!contains(A_->mul(b, A_->basis(k)))) return false;
        return true;
    }
    /// Canonical key: codes of the reduced echelon basis.
    std::vector<std::uint32_t> key() const {
        std::vector<std::uint32_t> k;
        for (const auto& b : basis_) k.push_back(A_->encode(b));
        return k;
    }
    friend bool operator==(const FiniteLeftIdeal& x, const FiniteLeftIdeal& y) { return x.key() == y.key(); }

    std::string str() const {
        if (basis_.empty()) return "{0}";
        if (isWhole()) return "(1)";
        std::string s = "span{";
        for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? ", " : "") + A_->str(basis_[i]);
        return s + "}";
    }

private:
    const FiniteAlgebra* A_;
    std::vector<Vec> basis_;
    std::vector<std::uint32_t> elements_;
    std::vector<bool> member_;
};

namespace detail {

inline std::uint32_t invMod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return static_cast<std::uint32_t>(r);
}

/// Span of the given vectors as a FiniteLeftIdeal-shaped subspace.
inline FiniteLeftIdeal span(const FiniteAlgebra& A, const std::vector<FiniteAlgebra::Vec>& gens) {
    std::uint32_t p = A.p();
    std::size_t n = A.dim();
    std::vector<FiniteAlgebra::Vec> rows;
    std::vector<std::size_t> pivots;
    for (auto v : gens) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint32_t c = v[pivots[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + (p - c) * rows[r][j]) % p;
        }
        std::size_t piv = 0;
        while (piv < n && v[piv] == 0) ++piv;
        if (piv == n) continue;
        std::uint32_t inv = invMod(v[piv], p);
        for (auto& x : v) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p);
        for (auto& row : rows) {
            std::uint32_t c = row[piv];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) row[j] = (row[j] + (p - c) * v[j]) % p;
        }
        rows.push_back(v);
        pivots.push_back(piv);
    }
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] > pivots[b]; });
    std::vector<FiniteAlgebra::Vec> sorted;
    for (auto i : order) sorted.push_back(rows[i]);
    std::vector<std::uint32_t> elems{0};
    for (const auto& b : sorted) {
        std::size_t have = elems.size();
        for (std::uint32_t c = 1; c < p; ++c) {
            auto cb = A.encode(A.scale(c, b));
            for (std::size_t i = 0; i < have; ++i) elems.push_back(A.encode(A.add(A.decode(elems[i]), A.decode(cb))));
        }
    }
    std::sort(elems.begin(), elems.end());
    return FiniteLeftIdeal(A, std::move(sorted), std::move(elems));
}

inline FiniteLeftIdeal fromElements(const FiniteAlgebra& A, const std::vector<std::uint32_t>& codes) {
    std::vector<FiniteAlgebra::Vec> gens;
    for (auto c : codes) gens.push_back(A.decode(c));
    return span(A, gens);
}

inline void requireEnumerable(const FiniteAlgebra& A, std::uint64_t cap) {
    if (A.size() > cap)
        throw CapExceeded(A.name() + " has " + std::to_string(A.size()) + " elements, above the lab cap " +
                          std::to_string(cap));
}

/// Left ideal generated by the given vectors.
inline FiniteLeftIdeal leftIdealOf(const FiniteAlgebra& A, const std::vector<FiniteAlgebra::Vec>& gens) {
    std::vector<FiniteAlgebra::Vec> all;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < A.dim(); ++i) all.push_back(A.mul(A.basis(i), g));
    return span(A, all);
}

inline FiniteLeftIdeal sum(const FiniteLeftIdeal& x, const FiniteLeftIdeal& y) {
    auto gens = x.basis();
    gens.insert(gens.end(), y.basis().begin(), y.basis().end());
    return span(x.algebra(), gens);
}

}  // namespace detail

/// Every left ideal of A, ordered by dimension, then by basis codes.
inline std::vector<FiniteLeftIdeal> enumerateLeftIdeals(const FiniteAlgebra& A, std::uint64_t cap = kLabCap) {
    detail::requireEnumerable(A, cap);
    // every left ideal is a sum of cyclic ones
    std::map<std::vector<std::uint32_t>, FiniteLeftIdeal> cyclic;
    for (std::uint32_t c = 0; c < A.size(); ++c) {
        auto I = detail::leftIdealOf(A, {A.decode(c)});
        cyclic.emplace(I.key(), std::move(I));
    }
    std::map<std::vector<std::uint32_t>, FiniteLeftIdeal> found;
    std::vector<FiniteLeftIdeal> queue{detail::span(A, {})};
    found.emplace(queue.front().key(), queue.front());
    while (!queue.empty()) {
        auto I = queue.back();
        queue.pop_back();
        for (const auto& [k, C] : cyclic) {
            auto J = detail::sum(I, C);
            if (found.emplace(J.key(), J).second) queue.push_back(J);
        }
    }
    std::vector<FiniteLeftIdeal> out;
    for (auto& [k, I] : found) out.push_back(I);
    std::sort(out.begin(), out.end(), [](const FiniteLeftIdeal& a, const FiniteLeftIdeal& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.key() < b.key();
    });
    return out;
}

/// Two-sided ideals among `all`.
inline std::vector<FiniteLeftIdeal> twoSidedIdeals(const std::vector<FiniteLeftIdeal>& all) {
    std::vector<FiniteLeftIdeal> out;
    for (const auto& I : all)
        if (I.isTwoSided()) out.push_back(I);
    return out;
}

/// Largest two-sided ideal inside I: the x in I with xR inside I.
inline FiniteLeftIdeal idOf(const FiniteLeftIdeal& I) {
    const auto& A = I.algebra();
    std::vector<std::uint32_t> core;
    for (auto c : I.elements()) {
        auto x = A.decode(c);
        bool ok = true;
        for (std::size_t k = 0; k < A.dim() && ok; ++k) ok = I.contains(A.mul(x, A.basis(k)));
        if (ok) core.push_back(c);
    }
    return detail::fromElements(A, core);
}

/// (I : b) = {x : x b in I}.
inline FiniteLeftIdeal leftQuotient(const FiniteLeftIdeal& I, std::uint32_t b) {
    const auto& A = I.algebra();
    std::vector<std::uint32_t> xs;
    for (std::uint32_t x = 0; x < A.size(); ++x)
        if (I.contains(A.mulCode(x, b))) xs.push_back(x);
    return detail::fromElements(A, xs);
}

struct LabVerdicts {
    bool extremely = false, completely = false, structurally = false, weakly = false;
    friend bool operator==(const LabVerdicts&, const LabVerdicts&) = default;
};

namespace detail {

/// Products of left ideals and elements, tested on bases, using element codes.
struct LabContext {
    const FiniteAlgebra& A;
    const std::vector<FiniteLeftIdeal>& ideals;
    std::vector<FiniteLeftIdeal> twoSided;
    std::vector<std::uint32_t> basisCodes;

    LabContext(const FiniteAlgebra& a, const std::vector<FiniteLeftIdeal>& all)
        : A(a), ideals(all), twoSided(twoSidedIdeals(all)) {
        for (std::size_t k = 0; k < A.dim(); ++k) basisCodes.push_back(A.encode(A.basis(k)));
    }

    static std::vector<std::uint32_t> codes(const FiniteLeftIdeal& X) { return X.key(); }

    bool productIn(const FiniteLeftIdeal& X, const FiniteLeftIdeal& Y, const FiniteLeftIdeal& p) const {
        for (auto x : codes(X))
            for (auto y : codes(Y))
                if (!p.contains(A.mulCode(x, y))) return false;
        return true;
    }
    bool idealTimesIn(const FiniteLeftIdeal& X, std::uint32_t b, const FiniteLeftIdeal& p) const {
        for (auto x : codes(X))
            if (!p.contains(A.mulCode(x, b))) return false;
        return true;
    }
    /// x R y inside p
    bool sandwichIn(std::uint32_t x, std::uint32_t y, const FiniteLeftIdeal& p) const {
        for (auto e : basisCodes)
            if (!p.contains(A.mulCode(A.mulCode(x, e), y))) return false;
        return true;
    }
    /// X R y inside p
    bool idealSandwichIn(const FiniteLeftIdeal& X, std::uint32_t y, const FiniteLeftIdeal& p) const {
        for (auto x : codes(X))
            if (!sandwichIn(x, y, p)) return false;
        return true;
    }
    /// x R Y inside p
    bool sandwichIdealIn(std::uint32_t x, const FiniteLeftIdeal& Y, const FiniteLeftIdeal& p) const {
        for (auto y : codes(Y))
            if (!sandwichIn(x, y, p)) return false;
        return true;
    }
    /// R x R y inside p
    bool doubleSandwichIn(std::uint32_t x, std::uint32_t y, const FiniteLeftIdeal& p) const {
        for (auto e : basisCodes)
            if (!sandwichIn(A.mulCode(e, x), y, p)) return false;
        return true;
    }
};

inline void requireProperLab(const FiniteLeftIdeal& p) {
    if (p.isWhole()) throw ImproperIdealError("the left ideal is the whole algebra");
}

}  // namespace detail

/// Literal evaluation of the four definitions: element pairs for extremely
/// and completely, pairs of left ideals for structurally and weakly.
inline LabVerdicts defClassify(const FiniteLeftIdeal& p, const std::vector<FiniteLeftIdeal>& all) {
    detail::requireProperLab(p);
    const auto& A = p.algebra();
    LabVerdicts v{true, true, true, true};
    std::vector<bool> stabilizes(A.size());  // p b inside p
    for (std::uint32_t b = 0; b < A.size(); ++b) {
        bool ok = true;
        for (auto x : p.key())
            if (!p.contains(A.mulCode(x, b))) ok = false;
        stabilizes[b] = ok;
    }
    for (std::uint32_t a = 0; a < A.size() && (v.extremely || v.completely); ++a) {
        if (p.contains(a)) continue;
        for (std::uint32_t b = 0; b < A.size(); ++b) {
            if (p.contains(b) || !p.contains(A.mulCode(a, b))) continue;
            v.extremely = false;
            if (stabilizes[b]) v.completely = false;
        }
    }
    detail::LabContext ctx(A, all);
    for (const auto& X : all)
        for (const auto& Y : all) {
            if (X.subsetOf(p) || Y.subsetOf(p) || !ctx.productIn(X, Y, p)) continue;
            v.structurally = false;
            if (ctx.productIn(p, Y, p)) v.weakly = false;
        }
    return v;
}

inline LabVerdicts defClassify(const FiniteLeftIdeal& p) { return defClassify(p, enumerateLeftIdeals(p.algebra())); }

struct LabCheck {
    explicit LabCheck(std::string n, std::size_t c = 0) : name(std::move(n)), cases(c) {}
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    bool holds() const { return failures.empty(); }
};

struct LabReport {
    std::string algebra;
    std::size_t leftIdeals = 0;
    std::size_t twoSided = 0;
    std::vector<LabCheck> checks;
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const LabCheck& c) { return c.holds(); });
    }
};

namespace detail {

/// Records a failure when the listed forms of one notion do not all agree.
inline void agree(LabCheck& check, const std::string& ideal, const std::vector<std::pair<std::string, bool>>& forms) {
    ++check.cases;
    for (const auto& f : forms)
        if (f.second != forms.front().second) {
            std::string s = ideal + ":";
            for (const auto& g : forms) s += " " + g.first + "=" + (g.second ? "T" : "F");
            check.failures.push_back(s);
            return;
        }
}

}  // namespace detail

/// Every listed equivalent form of each notion, evaluated on every proper left ideal.
inline LabReport checkCharacterizations(const FiniteAlgebra& A, std::uint64_t cap = kLabCap) {
    auto all = enumerateLeftIdeals(A, cap);
    detail::LabContext ctx(A, all);
    LabReport rep{A.name(), all.size(), ctx.twoSided.size(), {}};
    LabCheck ext{"extremely: definition vs quotient form"}, comp{"completely: definition vs quotient form"},
        str{"structurally: five forms and id((p:b)) form"}, weak{"weakly: eight forms and id((p:b)) form"},
        nts{"weakly, not two-sided: three forms"}, lat{"implication lattice"},
        two{"two-sided: structurally iff weakly"};
    const auto N = static_cast<std::uint32_t>(A.size());
    for (const auto& p : all) {
        if (p.isWhole()) continue;
        auto name = p.str();
        auto def = defClassify(p, all);
        bool pTwoSided = p.isTwoSided();
        // quotient-ideal forms
        bool qExt = true, qComp = true, qStr = true, qWeak = true;
        bool s2 = true, s3 = true, s4 = true, s5 = true;
        bool w2 = true, w3 = true, w4 = true, w5 = true, w6 = true, w7 = true, w8 = true;
        bool n2 = true, n3 = true;
        bool pRp = ctx.sandwichIdealIn(0, p, p);
        for (auto x : detail::LabContext::codes(p)) pRp = pRp && ctx.sandwichIdealIn(x, p, p);
        std::vector<bool> aRp(N), pRb(N);
        for (std::uint32_t x = 0; x < N; ++x) {
            aRp[x] = ctx.sandwichIdealIn(x, p, p);
            pRb[x] = ctx.idealSandwichIn(p, x, p);
        }
        for (std::uint32_t b = 0; b < N; ++b) {
            if (p.contains(b)) continue;
            auto q = leftQuotient(p, b);
            if (!q.subsetOf(p)) qExt = false;
            if (p.subsetOf(q) && !(q == p)) qComp = false;
            bool idIn = idOf(q).subsetOf(p);
            if (!idIn) qStr = false;
            if (pRb[b] && !idIn) qWeak = false;
            if (pRb[b]) n3 = false;
            for (std::uint32_t a = 0; a < N; ++a) {
                if (p.contains(a)) continue;
                bool aRb = ctx.sandwichIn(a, b, p);
                if (ctx.doubleSandwichIn(a, b, p)) s2 = false;
                if (aRb) s3 = false;
                if (aRb && pRb[b]) w8 = false;
                // (a+p)R(b+p) inside p splits into aRb, aRp, pRb, pRp by bilinearity
                if (aRb && aRp[a] && pRb[b] && pRp) w6 = false;
            }
            for (const auto& T : ctx.twoSided)
                if (!T.subsetOf(p) && ctx.idealTimesIn(T, b, p)) s5 = false;
        }
        for (const auto& X : all) {
            auto Xp = detail::sum(X, p);
            for (const auto& Y : all) {
                bool XY = ctx.productIn(X, Y, p);
                bool Xin = X.subsetOf(p), Yin = Y.subsetOf(p);
                if (p.subsetOf(X) && p.subsetOf(Y) && XY && !(X == p) && !(Y == p)) w2 = false;
                auto Yp = detail::sum(Y, p);
                if (ctx.productIn(Xp, Yp, p) && !Xin && !Yin) w3 = false;
                if (XY && p.subsetOf(X) && !(X == p) && !Yin) w4 = false;
                if (ctx.productIn(Xp, Y, p) && !Xin && !Yin) w5 = false;
            }
            if (ctx.productIn(p, X, p) && !X.subsetOf(p)) n2 = false;
        }
        for (const auto& T : ctx.twoSided)
            for (const auto& Y : all) {
                if (T.subsetOf(p) || Y.subsetOf(p)) continue;
                if (ctx.productIn(T, Y, p)) {
                    s4 = false;
                    if (ctx.productIn(p, Y, p)) w7 = false;
                }
            }
        detail::agree(ext, name, {{"def", def.extremely}, {"quot", qExt}});
        detail::agree(comp, name, {{"def", def.completely}, {"quot", qComp}});
        detail::agree(str, name, {{"1", def.structurally}, {"2", s2}, {"3", s3}, {"4", s4}, {"5", s5}, {"quot", qStr}});
        detail::agree(weak, name,
                      {{"1", def.weakly}, {"2", w2}, {"3", w3}, {"4", w4}, {"5", w5}, {"6", w6}, {"7", w7}, {"8", w8},
                       {"quot", qWeak}});
        if (!pTwoSided) detail::agree(nts, name, {{"1", def.weakly}, {"2", n2}, {"3", n3}});
        else detail::agree(two, name, {{"structurally", def.structurally}, {"weakly", def.weakly}});
        ++lat.cases;
        auto breach = [&](bool from, bool to, const char* what) {
            if (from && !to) lat.failures.push_back(name + ": " + what);
        };
        breach(def.extremely, def.completely, "extremely => completely");
        breach(def.extremely, def.structurally, "extremely => structurally");
        breach(def.structurally, def.weakly, "structurally => weakly");
        breach(def.completely, def.weakly, "completely => weakly");
    }
    rep.checks = {ext, comp, str, weak, nts, two, lat};
    return rep;
}

/// An ideal is reduced exactly when it is an intersection of completely prime
/// ideals; checked on every two-sided ideal.
inline LabReport checkReducedIntersection(const FiniteAlgebra& A, std::uint64_t cap = kLabCap) {
    auto all = enumerateLeftIdeals(A, cap);
    auto two = twoSidedIdeals(all);
    LabReport rep{A.name(), all.size(), two.size(), {}};
    LabCheck check{"reduced iff intersection of completely prime ideals"};
    const auto N = static_cast<std::uint32_t>(A.size());
    auto completelyPrime = [&](const FiniteLeftIdeal& P) {
        if (P.isWhole()) return false;
        for (std::uint32_t a = 0; a < N; ++a)
            for (std::uint32_t b = 0; b < N; ++b)
                if (P.contains(A.mulCode(a, b)) && !P.contains(a) && !P.contains(b)) return false;
        return true;
    };
    auto reduced = [&](const FiniteLeftIdeal& I) {
        for (std::uint32_t a = 0; a < N; ++a) {
            if (I.contains(a)) continue;
            // powers of a are eventually periodic; N steps cover the tail
            std::uint32_t x = a;
            for (std::uint32_t k = 0; k <= N; ++k) {
                if (I.contains(x)) return false;
                x = A.mulCode(x, a);
            }
        }
        return true;
    };
    std::vector<FiniteLeftIdeal> primes;
    for (const auto& P : two)
        if (completelyPrime(P)) primes.push_back(P);
    for (const auto& I : two) {
        std::vector<bool> inter(N, true);
        for (const auto& P : primes)
            if (I.subsetOf(P))
                for (std::uint32_t c = 0; c < N; ++c) inter[c] = inter[c] && P.contains(c);
        bool equal = true;
        for (std::uint32_t c = 0; c < N; ++c)
            if (inter[c] != I.contains(c)) equal = false;
        ++check.cases;
        bool r = reduced(I);
        if (r != equal)
            check.failures.push_back(I.str() + ": reduced=" + (r ? "T" : "F") + " intersection=" + (equal ? "T" : "F"));
    }
    rep.checks.push_back(check);
    return rep;
}

/// Simplicity and division-ring characterizations, both directions.
inline LabReport checkSimplicityProps(const FiniteAlgebra& A, std::uint64_t cap = kLabCap) {
    auto all = enumerateLeftIdeals(A, cap);
    auto two = twoSidedIdeals(all);
    LabReport rep{A.name(), all.size(), two.size(), {}};
    bool simple = two.size() == 2;
    bool allStr = true, allWeak = true, allComp = true;
    for (const auto& p : all) {
        if (p.isWhole()) continue;
        auto v = defClassify(p, all);
        allStr = allStr && v.structurally;
        allWeak = allWeak && v.weakly;
        allComp = allComp && v.completely;
    }
    bool division = true;
    const auto N = static_cast<std::uint32_t>(A.size());
    auto one = A.encode(A.unit());
    for (std::uint32_t x = 1; x < N && division; ++x) {
        bool inv = false;
        for (std::uint32_t y = 1; y < N && !inv; ++y) inv = A.mulCode(x, y) == one && A.mulCode(y, x) == one;
        division = inv;
    }
    auto tf = [](bool b) { return std::string(b ? "T" : "F"); };
    LabCheck s{"simple iff every proper left ideal structurally prime", 1};
    if (simple != allStr) s.failures.push_back("simple=" + tf(simple) + " all-structurally=" + tf(allStr));
    LabCheck w{"simple iff every proper left ideal weakly prime", 1};
    if (simple != allWeak) w.failures.push_back("simple=" + tf(simple) + " all-weakly=" + tf(allWeak));
    LabCheck d{"division ring iff every proper left ideal completely prime", 1};
    if (division != allComp) d.failures.push_back("division=" + tf(division) + " all-completely=" + tf(allComp));
    rep.checks = {s, w, d};
    return rep;
}

/// Left ideals of R/Rg against the PID classifiers on their preimages Ra,
/// where a is the monic generator read off the ideal.
inline LabReport checkQuotientBridge(const SkewPoly<FFRing>& g, std::uint64_t cap = kLabCap) {
    auto A = quotientAlgebra(g);
    auto all = enumerateLeftIdeals(A, cap);
    LabReport rep{A.name(), all.size(), twoSidedIdeals(all).size(), {}};
    LabCheck check{"quotient ideals agree with the classifiers on preimages"};
    const FFRing& ring = g.ring();
    for (const auto& L : all) {
        if (L.isWhole()) continue;
        SkewPoly<FFRing> a = g.monic();
        for (auto c : L.elements()) {
            if (c == 0) continue;
            auto f = quotientElement(ring, A, c);
            if (f.degree() < a.degree()) a = f.monic();
        }
        auto lab = defClassify(L, all);
        auto fast = classify(PrincipalLeftIdeal<FFRing>(a));
        ++check.cases;
        auto same = [&](const char* what, bool x, const Verdict<SkewPoly<FFRing>>& y) {
            if (y.isInconclusive() || x != y.isYes())
                check.failures.push_back(a.str() + " " + what + ": lab=" + (x ? "Yes" : "No") + " pid=" + toString(y.value));
        };
        same("extremely", lab.extremely, fast.extremely);
        same("completely", lab.completely, fast.completely);
        same("structurally", lab.structurally, fast.structurally);
        same("weakly", lab.weakly, fast.weakly);
    }
    rep.checks.push_back(check);
    return rep;
}

/// The worked examples on matrix and triangular rings.
inline LabReport checkLabExamples() {
    LabReport rep{"examples", 0, 0, {}};
    auto expect = [&](const std::string& name, bool ok, const std::string& detail = {}) {
        LabCheck c(name, 1);
        if (!ok) c.failures.push_back(detail.empty() ? "does not hold" : detail);
        rep.checks.push_back(c);
    };
    const auto& f2 = GaloisField::get(2, 1);
    const auto& f3 = GaloisField::get(3, 1);
    auto m2 = matrixRing2(f2);
    auto m2ideals = enumerateLeftIdeals(m2);
    expect("M2(GF(2)) has 5 left ideals", m2ideals.size() == 5, std::to_string(m2ideals.size()));
    auto zero = defClassify(m2ideals.front(), m2ideals);
    expect("M2(GF(2)) zero ideal structurally and weakly prime", zero.structurally && zero.weakly);
    expect("M2(GF(2)) zero ideal not completely prime", !zero.completely);
    bool maximalComplete = true;
    for (const auto& I : m2ideals)
        if (I.dim() == 2) maximalComplete = maximalComplete && defClassify(I, m2ideals).completely;
    expect("M2(GF(2)) maximal left ideals completely prime", maximalComplete);
    for (const auto* k : {&f2, &f3}) {
        auto m = matrixRing2(*k);
        auto ideals = enumerateLeftIdeals(m);
        std::size_t count = 0;
        for (const auto& I : ideals)
            if (!I.isWhole() && defClassify(I, ideals).extremely) ++count;
        expect(m.name() + " has no extremely prime left ideal", count == 0, std::to_string(count));
    }
    auto t2 = lowerTriangular2(f2);
    auto t2ideals = enumerateLeftIdeals(t2);
    // {[[0,0],[0,a]]}: the E22 line
    auto e22 = detail::span(t2, {t2.basis(2)});
    bool present = std::find(t2ideals.begin(), t2ideals.end(), e22) != t2ideals.end();
    expect("T2(GF(2)) contains the E22 left ideal", present);
    if (present) {
        auto v = defClassify(e22, t2ideals);
        expect("T2(GF(2)) E22 ideal completely prime, not structurally, weakly prime",
               !v.extremely && v.completely && !v.structurally && v.weakly);
    }
    return rep;
}

}  // namespace oreprime
