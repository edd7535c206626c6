#pragma once

#include <string>
#include <utility>
#include <vector>

namespace oreprime {

enum class Truth { Yes, No, Inconclusive };

inline const char* toString(Truth t) {
    switch (t) {
        case Truth::Yes: return "Yes";
        case Truth::No: return "No";
        case Truth::Inconclusive: return "Inconclusive";
    }
    return "?";
}

/// Tri-state answer of a decision procedure. Yes/No carry a reason code and,
/// where one exists, named polynomials that certify the answer through
/// ordinary library calls (a factorization pair, a quotient generator, ...).
template <class P>
struct Verdict {
    Truth value = Truth::Inconclusive;
    std::string reason;
    std::vector<std::pair<std::string, P>> witness;

    static Verdict yes(std::string reason, std::vector<std::pair<std::string, P>> w = {}) {
        return {Truth::Yes, std::move(reason), std::move(w)};
    }
    static Verdict no(std::string reason, std::vector<std::pair<std::string, P>> w = {}) {
        return {Truth::No, std::move(reason), std::move(w)};
    }
    static Verdict inconclusive(std::string reason, std::vector<std::pair<std::string, P>> w = {}) {
        return {Truth::Inconclusive, std::move(reason), std::move(w)};
    }

    bool isYes() const { return value == Truth::Yes; }
    bool isNo() const { return value == Truth::No; }
    bool isInconclusive() const { return value == Truth::Inconclusive; }

    const P* find(const std::string& name) const {
        for (const auto& [n, p] : witness)
            if (n == name) return &p;
        return nullptr;
    }
};

}  // namespace oreprime
