#include <gtest/gtest.h>

#include "oreprime/finite_lab.hpp"
#include "oreprime/parse.hpp"

using namespace oreprime;

namespace {

const GaloisField& f2() { return GaloisField::get(2, 1); }
const GaloisField& f3() { return GaloisField::get(3, 1); }

FiniteAlgebra polyQuotient(const std::string& ringText, const std::string& g) {
    auto ring = std::get<FFRing>(parseRing(ringText));
    return quotientAlgebra(parsePoly(ring, g));
}

void expectClean(const LabReport& rep) {
    for (const auto& c : rep.checks) {
        EXPECT_TRUE(c.holds()) << rep.algebra << " / " << c.name << ": " << (c.failures.empty() ? "" : c.failures.front());
    }
}

}  // namespace

TEST(FiniteAlgebra, ConstructionsAreAssociative) {
    EXPECT_EQ(matrixRing2(f2()).dim(), 4u);
    EXPECT_EQ(matrixRing2(GaloisField::get(2, 2)).dim(), 8u);
    EXPECT_EQ(lowerTriangular2(f3()).dim(), 3u);
    EXPECT_TRUE(polyQuotient("GF(2)[x]", "x^3").isCommutative());
    EXPECT_FALSE(matrixRing2(f2()).isCommutative());
    EXPECT_EQ(polyQuotient("GF(4)[t;frob]", "t^2+1").dim(), 4u);
}

TEST(FiniteAlgebra, RejectsBadTables) {
    // e0 e0 = e1, e1 = unit? no unit law
    std::vector<FiniteAlgebra::Vec> table{{0, 1}, {1, 0}, {1, 0}, {0, 1}};
    EXPECT_THROW(FiniteAlgebra("bad", 2, {"e0", "e1"}, table, {1, 0}), DomainError);
    auto ring = std::get<FFRing>(parseRing("GF(4)[t;frob]"));
    EXPECT_THROW(quotientAlgebra(parsePoly(ring, "t+1")), DomainError);
}

TEST(FiniteAlgebra, QuotientMultiplicationMatchesRing) {
    auto ring = std::get<FFRing>(parseRing("GF(4)[t;frob]"));
    auto g = parsePoly(ring, "t^2+1");
    auto A = quotientAlgebra(g);
    for (std::uint32_t a = 0; a < A.size(); ++a)
        for (std::uint32_t b = 0; b < A.size(); ++b) {
            auto prod = quotientElement(ring, A, A.mulCode(a, b));
            auto direct = divRight(quotientElement(ring, A, a) * quotientElement(ring, A, b), g).remainder;
            ASSERT_EQ(prod, direct);
        }
}

TEST(LeftIdeals, Counts) {
    // {0}, the whole ring, and one minimal left ideal per line of F_q^2
    EXPECT_EQ(enumerateLeftIdeals(matrixRing2(f2())).size(), 5u);
    EXPECT_EQ(enumerateLeftIdeals(matrixRing2(f3())).size(), 6u);
    EXPECT_EQ(enumerateLeftIdeals(polyQuotient("GF(2)[x]", "x^2")).size(), 3u);
    EXPECT_EQ(enumerateLeftIdeals(polyQuotient("GF(2)[x]", "x^3")).size(), 4u);
    EXPECT_EQ(enumerateLeftIdeals(fieldAlgebra(GaloisField::get(2, 2))).size(), 2u);
    auto T = lowerTriangular2(f2());
    auto t2 = enumerateLeftIdeals(T);
    EXPECT_EQ(t2.size(), 7u);
    for (const auto& I : t2)
        for (std::size_t k = 0; k < 3; ++k)
            for (const auto& b : I.basis()) EXPECT_TRUE(I.contains(I.algebra().mul(I.algebra().basis(k), b)));
}

TEST(LeftIdeals, CapExceeded) {
    EXPECT_THROW(enumerateLeftIdeals(matrixRing2(f3()), 16), CapExceeded);
}

TEST(LeftIdeals, IdOf) {
    auto m2 = matrixRing2(f2());
    auto all = enumerateLeftIdeals(m2);
    for (const auto& I : all) {
        auto core = idOf(I);
        if (I.isWhole()) {
            EXPECT_TRUE(core.isWhole());
        } else {
            EXPECT_TRUE(core.isZero());
        }
        EXPECT_TRUE(core.isTwoSided());
    }
    auto t2 = lowerTriangular2(f2());
    auto t2all = enumerateLeftIdeals(t2);
    for (const auto& I : t2all) {
        auto core = idOf(I);
        EXPECT_TRUE(core.isTwoSided());
        EXPECT_TRUE(core.subsetOf(I));
        // largest: every two-sided ideal inside I lies in the core
        for (const auto& J : twoSidedIdeals(t2all))
            if (J.subsetOf(I)) {
                EXPECT_TRUE(J.subsetOf(core));
            }
    }
}

TEST(DefClassify, MatrixAndTriangularExamples) {
    auto m2 = matrixRing2(f2());
    auto all = enumerateLeftIdeals(m2);
    auto zero = defClassify(all.front(), all);
    EXPECT_EQ(zero, (LabVerdicts{false, false, true, true}));
    for (const auto& I : all)
        if (I.dim() == 2) {
            EXPECT_TRUE(defClassify(I, all).completely);
        }
    auto t2 = lowerTriangular2(f2());
    auto t2all = enumerateLeftIdeals(t2);
    auto p = std::find_if(t2all.begin(), t2all.end(), [&](const FiniteLeftIdeal& I) {
        return I.dim() == 1 && I.contains(t2.basis(2));
    });
    ASSERT_NE(p, t2all.end());
    EXPECT_EQ(defClassify(*p, t2all), (LabVerdicts{false, true, false, true}));
    EXPECT_THROW(defClassify(all.back(), all), ImproperIdealError);
}

TEST(DefClassify, CommutativeCollapse) {
    auto A = polyQuotient("GF(2)[x]", "x^3");
    auto all = enumerateLeftIdeals(A);
    for (const auto& I : all) {
        if (I.isWhole()) continue;
        auto v = defClassify(I, all);
        EXPECT_EQ(v.extremely, v.completely);
        EXPECT_EQ(v.completely, v.structurally);
        EXPECT_EQ(v.structurally, v.weakly);
    }
}

TEST(Characterizations, AllLabRings) {
    expectClean(checkCharacterizations(matrixRing2(f2())));
    expectClean(checkCharacterizations(lowerTriangular2(f2())));
    expectClean(checkCharacterizations(lowerTriangular2(f3())));
    expectClean(checkCharacterizations(polyQuotient("GF(2)[x]", "x^3")));
    expectClean(checkCharacterizations(polyQuotient("GF(4)[t;frob]", "t^2+1")));
    expectClean(checkCharacterizations(polyQuotient("GF(4)[t;frob]", "t^3+t")));
}

TEST(ReducedIdeals, Theorem) {
    auto r1 = checkReducedIntersection(polyQuotient("GF(2)[x]", "x^2"));
    expectClean(r1);
    EXPECT_EQ(r1.twoSided, 3u);
    expectClean(checkReducedIntersection(polyQuotient("GF(3)[x]", "x^2-x")));
    expectClean(checkReducedIntersection(matrixRing2(f2())));
    expectClean(checkReducedIntersection(lowerTriangular2(f2())));
}

TEST(Simplicity, Props) {
    expectClean(checkSimplicityProps(matrixRing2(f2())));
    expectClean(checkSimplicityProps(lowerTriangular2(f2())));
    expectClean(checkSimplicityProps(fieldAlgebra(GaloisField::get(2, 2))));
    expectClean(checkSimplicityProps(polyQuotient("GF(2)[x]", "x^2")));
}

TEST(QuotientBridge, BoundsOfSmallGenerators) {
    auto ring = std::get<FFRing>(parseRing("GF(4)[t;frob]"));
    std::set<std::string> seen;
    for (int d = 1; d <= 2; ++d) {
        std::uint32_t total = d == 1 ? 4 : 16;
        for (std::uint32_t code = 0; code < total; ++code) {
            std::vector<FFElem> c;
            std::uint32_t x = code;
            for (int i = 0; i < d; ++i, x /= 4) c.push_back(ring.field().element(x % 4));
            c.push_back(ring.one());
            auto b = bound(SkewPoly<FFRing>(ring, c));
            ASSERT_TRUE(b.isBounded());
            if (!seen.insert(b.value().str()).second) continue;
            expectClean(checkQuotientBridge(b.value()));
        }
    }
    EXPECT_GE(seen.size(), 4u);
}

TEST(LabExamples, AllHold) { expectClean(checkLabExamples()); }
