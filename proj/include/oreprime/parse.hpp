#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "oreprime/error.hpp"
#include "oreprime/galois_field.hpp"
#include "oreprime/rings.hpp"
#include "oreprime/skew_poly.hpp"

namespace oreprime {

using AnyPoly = std::variant<SkewPoly<FFRing>, SkewPoly<HQRing>, SkewPoly<QXShiftRing>>;

namespace detail {

inline std::string stripSpaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

inline FFElem scalarFromInteger(const FFRing& r, const mpz_class& n) {
    mpz_class m = n % r.field().characteristic();
    if (m < 0) m += r.field().characteristic();
    return r.field().element(static_cast<std::uint32_t>(m.get_ui()));
}
inline Quat scalarFromInteger(const HQRing&, const mpz_class& n) { return Quat(Rational(n)); }
inline RatFunc scalarFromInteger(const QXShiftRing&, const mpz_class& n) { return RatFunc(Rational(n)); }

inline std::optional<FFElem> namedScalar(const FFRing& r, std::string_view id) {
    if (id == "a" && r.field().degree() >= 2) return r.field().generator();
    return std::nullopt;
}
inline std::optional<Quat> namedScalar(const HQRing&, std::string_view id) {
    if (id == "i") return Quat::i();
    if (id == "j") return Quat::j();
    if (id == "k") return Quat::k();
    return std::nullopt;
}
inline std::optional<RatFunc> namedScalar(const QXShiftRing&, std::string_view id) {
    if (id == "x") return RatFunc::x();
    return std::nullopt;
}

/// Recursive-descent parser. Products are evaluated left to right with the
/// ring's multiplication, so the written order of factors is kept.
template <class R>
class PolyParser {
public:
    using P = SkewPoly<R>;

    PolyParser(const R& ring, std::string_view text) : ring_(ring), s_(text) {}

    P run() {
        skip();
        if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
        P v = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool startsFactor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    P expr() {
        P v = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                v = v + term();
            } else if (peek('-')) {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    P term() {
        P v = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                v = v * unary();
            } else if (peek('/')) {
                std::size_t at = pos_++;
                P d = unary();
                if (d.isZero()) throw ParseError("division by zero", at);
                if (d.degree() != 0) throw ParseError("only division by a nonzero scalar is allowed", at);
                v = v * P::constant(ring_, d.lead().inverse());
            } else if (startsFactor()) {
                v = v * power();
            } else {
                return v;
            }
        }
    }

    P unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    P power() {
        P base = atom();
        if (peek('^')) {
            std::size_t at = ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected a non-negative integer exponent", at);
            if (pos_ - start > 5) throw ParseError("exponent too large", start);
            unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
            if (e > 4096) throw ParseError("exponent too large", start);
            return base.pow(e);
        }
        return base;
    }

    P atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            P v = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class n(std::string(s_.substr(start, pos_ - start)));
            return P::constant(ring_, scalarFromInteger(ring_, n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            // identifiers are single letters so that juxtaposition like "ti" or "2at" reads as a product
            ++pos_;
            std::string_view id = s_.substr(start, 1);
            if (id == ring_.var()) return P::t(ring_);
            if (auto sc = namedScalar(ring_, id)) return P::constant(ring_, *sc);
            throw ParseError("symbol '" + std::string(id) + "' is not valid in " + ring_.name(), start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    const R& ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

inline unsigned parseUnsigned(const std::string& s, std::size_t& pos, const std::string& whole) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || pos - start > 9) throw ParseError("expected a number in ring tag '" + whole + "'", start);
    return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
}

inline void expect(const std::string& s, std::size_t& pos, std::string_view lit, const std::string& whole) {
    if (s.compare(pos, lit.size(), lit) != 0)
        throw ParseError("expected '" + std::string(lit) + "' in ring tag '" + whole + "'", pos);
    pos += lit.size();
}

inline std::string parseVar(const std::string& s, std::size_t& pos, const std::string& whole) {
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
        throw ParseError("expected a variable letter in ring tag '" + whole + "'", pos);
    return std::string(1, s[pos++]);
}

}  // namespace detail

template <class R>
SkewPoly<R> parsePoly(const R& ring, std::string_view text) {
    try {
        return detail::PolyParser<R>(ring, text).run();
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

/// Ring tags: GF(q)[t;frob], GF(q)[t;frob^s], GF(q)[t], HQ[t], QX[t;shift].
inline RingDescriptor parseRing(std::string_view text) {
    std::string whole(text);
    std::string s = detail::stripSpaces(text);
    std::size_t pos = 0;
    if (s.rfind("GF(", 0) == 0) {
        pos = 3;
        unsigned q = detail::parseUnsigned(s, pos, whole);
        detail::expect(s, pos, ")[", whole);
        std::string var = detail::parseVar(s, pos, whole);
        const GaloisField* f;
        try {
            f = &GaloisField::ofOrder(q);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), 3);
        }
        unsigned tw = 0;
        if (s.compare(pos, 5, ";frob") == 0) {
            pos += 5;
            tw = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                tw = detail::parseUnsigned(s, pos, whole);
            }
        }
        detail::expect(s, pos, "]", whole);
        if (pos != s.size()) throw ParseError("trailing text in ring tag '" + whole + "'", pos);
        if (var == "a") throw ParseError("the variable cannot be the field generator symbol 'a'", 0);
        return FFRing(*f, tw, var);
    }
    if (s.rfind("HQ[", 0) == 0) {
        pos = 3;
        std::string var = detail::parseVar(s, pos, whole);
        detail::expect(s, pos, "]", whole);
        if (pos != s.size()) throw ParseError("trailing text in ring tag '" + whole + "'", pos);
        if (var == "i" || var == "j" || var == "k") throw ParseError("quaternion unit used as the variable", 3);
        return HQRing(var);
    }
    if (s == "QX[t;shift]") return QXShiftRing();
    throw ParseError("unknown ring tag '" + whole + "' (expected GF(q)[t;frob], GF(q)[t;frob^s], GF(q)[t], HQ[t] or QX[t;shift])", 0);
}

inline AnyPoly parsePoly(const RingDescriptor& ring, std::string_view text) {
    return std::visit([&](const auto& r) -> AnyPoly { return parsePoly(r, text); }, ring);
}

}  // namespace oreprime
