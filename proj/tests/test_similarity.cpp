#include <gtest/gtest.h>

#include "oreprime/parse.hpp"
#include "oreprime/similarity.hpp"

using namespace oreprime;

namespace {

const FFRing& f4() {
    static FFRing r(GaloisField::get(2, 2));
    return r;
}
const FFRing& f9() {
    static FFRing r(GaloisField::get(3, 2));
    return r;
}
SkewPoly<FFRing> F(const std::string& s) { return parsePoly(f4(), s); }
SkewPoly<HQRing> H(const std::string& s) { return parsePoly(HQRing(), s); }

std::vector<SkewPoly<FFRing>> monics(const FFRing& r, int deg) {
    std::vector<SkewPoly<FFRing>> out;
    std::uint32_t q = r.field().order();
    std::size_t total = 1;
    for (int i = 0; i < deg; ++i) total *= q;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<FFElem> c;
        std::size_t x = code;
        for (int i = 0; i < deg; ++i, x /= q) c.push_back(r.field().element(static_cast<std::uint32_t>(x % q)));
        c.push_back(r.field().one());
        out.emplace_back(r, c);
    }
    return out;
}

template <class R>
void expectWitness(const Verdict<SkewPoly<R>>& v, const SkewPoly<R>& a, const SkewPoly<R>& b) {
    ASSERT_TRUE(v.isYes());
    auto x = v.find("x");
    auto y = v.find("y");
    ASSERT_TRUE(x && y);
    typename ComaximalWitness<R>::Checks checks;
    EXPECT_TRUE(verifyWitness(a, b, *x, *y, &checks)) << a << " ~ " << b << " x=" << *x << " y=" << *y;
    EXPECT_TRUE(checks.all());
}

}  // namespace

TEST(ModuleRep, ActionsMatchMultiplication) {
    auto a = F("t^2 + a*t + 1");
    auto m = moduleRep(a);
    EXPECT_EQ(m.dim, 4u);
    ASSERT_EQ(m.actions.size(), 2u);
    // t * (a t) = a^2 t^2 reduced mod Ra
    auto v = polyCoords(F("a*t"), 2);
    auto w = m.actions[0].apply(v);
    auto expect = polyCoords(divRight(F("t") * F("a*t"), a).remainder, 2);
    EXPECT_EQ(w, expect);
}

TEST(Similarity, QuaternionExamples) {
    auto v = isSimilar(H("t-i"), H("t-j"));
    expectWitness(v, H("t-i"), H("t-j"));
    EXPECT_TRUE(isSimilar(H("t-i"), H("t")).isNo());
    EXPECT_TRUE(isSimilar(H("t-i"), H("t+i")).isYes());
    EXPECT_TRUE(isSimilar(H("t-i"), H("t-2*i")).isNo());
    expectWitness(isSimilar(H("t^2+1"), H("t^2+1")), H("t^2+1"), H("t^2+1"));
}

TEST(Similarity, LeftAssociatesAreSimilar) {
    auto a = F("t^2 + a*t + 1");
    auto v = isSimilar(a, F("a") * a);
    expectWitness(v, a, F("a") * a);
}

TEST(Similarity, DegreeAndBoundFilters) {
    EXPECT_TRUE(isSimilar(F("t+1"), F("t^2+1")).isNo());
    EXPECT_TRUE(isSimilar(F("t"), F("t+1")).isNo());
}

TEST(Similarity, WitnessRoundTripF4) {
    for (int d = 1; d <= 2; ++d) {
        auto ms = monics(f4(), d);
        for (const auto& a : ms)
            for (const auto& b : ms) {
                auto v = isSimilar(a, b);
                ASSERT_FALSE(v.isInconclusive()) << a << " " << b;
                if (v.isYes()) expectWitness(v, a, b);
                // similarity is symmetric
                EXPECT_EQ(v.value, isSimilar(b, a).value) << a << " " << b;
            }
    }
}

TEST(Similarity, F9Degree1ByConjugacy) {
    // t - c ~ t - d over F_9[t;frob] iff c d^{-1}... checked via the module directly:
    // similar iff the modules R/R(t-c) are isomorphic, which holds iff N(c) = N(d)
    // where N is the norm to the fixed field F_3.
    const auto& k = f9().field();
    for (std::uint32_t c = 0; c < 9; ++c)
        for (std::uint32_t d = 0; d < 9; ++d) {
            auto a = SkewPoly<FFRing>(f9(), {-k.element(c), k.one()});
            auto b = SkewPoly<FFRing>(f9(), {-k.element(d), k.one()});
            auto ce = k.element(c), de = k.element(d);
            bool expected = (ce * ce.frobenius(1)) == (de * de.frobenius(1));
            auto v = isSimilar(a, b);
            EXPECT_EQ(v.isYes(), expected) << a << " " << b;
            if (v.isYes()) expectWitness(v, a, b);
        }
}

TEST(Similarity, ComaximalWitnessThrowsWhenNotSimilar) {
    EXPECT_THROW(comaximalWitness(H("t-i"), H("t")), DomainError);
    auto w = comaximalWitness(H("t-i"), H("t-k"));
    EXPECT_TRUE(verifyWitness(H("t-i"), H("t-k"), w));
}

TEST(Similarity, VerifyWitnessRejectsBadData) {
    typename ComaximalWitness<HQRing>::Checks checks;
    EXPECT_FALSE(verifyWitness(H("t-i"), H("t-j"), H("1"), H("1"), &checks));
    EXPECT_FALSE(checks.relation);
}
