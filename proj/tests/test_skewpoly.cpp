#include <gtest/gtest.h>

#include <random>

#include "oreprime/parse.hpp"
#include "oreprime/skew_poly.hpp"

using namespace oreprime;

namespace {

const FFRing& f4() {
    static FFRing r(GaloisField::get(2, 2));
    return r;
}
SkewPoly<FFRing> F(const std::string& s) { return parsePoly(f4(), s); }
SkewPoly<HQRing> H(const std::string& s) { return parsePoly(HQRing(), s); }
SkewPoly<QXShiftRing> X(const std::string& s) { return parsePoly(QXShiftRing(), s); }

SkewPoly<FFRing> randomFF(const FFRing& r, int deg, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, r.field().order() - 1);
    std::vector<FFElem> c;
    for (int k = 0; k <= deg; ++k) c.push_back(r.field().element(d(rng)));
    return SkewPoly<FFRing>(r, c);
}

}  // namespace

TEST(SkewPoly, TwistRule) {
    EXPECT_EQ(F("t") * F("a*t"), F("a^2*t^2"));
    EXPECT_EQ(H("(t-i)*(t+i)"), H("t^2+1"));
    EXPECT_EQ(X("t") * X("x"), X("(x+1)*t"));
    EXPECT_EQ(X("x*t - t*x"), X("-t"));
}

TEST(SkewPoly, DivRightExamples) {
    auto [q, r] = divRight(H("t^2+1"), H("t+i"));
    EXPECT_EQ(q, H("t-i"));
    EXPECT_TRUE(r.isZero());
    auto [q2, r2] = divRight(F("t^2"), F("t+a"));
    EXPECT_EQ(q2, F("t+a^2"));
    EXPECT_EQ(r2, F("1"));
    EXPECT_EQ(q2 * F("t+a") + r2, F("t^2"));
    auto f = F("a*t^3+t+1");
    EXPECT_EQ(divRight(f, F("1")).quotient, f);
    EXPECT_THROW(divRight(f, SkewPoly<FFRing>(f4())), DomainError);
}

TEST(SkewPoly, DivLeftExamples) {
    auto [q, r] = divLeft(H("t^2+1"), H("t-i"));
    EXPECT_EQ(q, H("t+i"));
    EXPECT_TRUE(r.isZero());
    auto [q2, r2] = divLeft(F("t+a"), F("t"));
    EXPECT_EQ(q2, F("1"));
    EXPECT_EQ(r2, F("a"));
    auto f = H("i*t^2+j");
    EXPECT_EQ(divLeft(f, H("1")).quotient, f);
}

TEST(SkewPoly, GcdExamples) {
    EXPECT_EQ(gcrd(H("t^2+1"), H("t+i")), H("t+i"));
    EXPECT_EQ(gcrd(H("t-i"), H("t-j")), H("1"));
    EXPECT_EQ(gcrd(H("t^3"), H("1")), H("1"));
    EXPECT_EQ(gcld(H("t^2+1"), H("t-i")), H("t-i"));
    EXPECT_EQ(gcld(H("t-i"), H("t-j")), H("1"));
    EXPECT_THROW(gcrd(SkewPoly<HQRing>(HQRing()), SkewPoly<HQRing>(HQRing())), DomainError);
}

TEST(SkewPoly, LclmExamples) {
    auto l = lclm(H("t-i"), H("t-j"));
    EXPECT_EQ(l, H("t^2+1"));
    EXPECT_TRUE(rightDivides(H("t-i"), l));
    EXPECT_TRUE(rightDivides(H("t-j"), l));
    auto l2 = lclm(F("t"), F("t+1"));
    EXPECT_EQ(l2, F("t^2+t"));
    EXPECT_TRUE(rightDivides(F("t"), l2));
    EXPECT_TRUE(rightDivides(F("t+1"), l2));
    EXPECT_EQ(lclm(F("a*t+1"), F("a*t+1")), F("t+a^2"));
}

TEST(SkewPoly, NonCommutativityWitnesses) {
    EXPECT_NE(F("t") * F("a"), F("a") * F("t"));
    EXPECT_NE(H("i") * H("j*t"), H("j*t") * H("i"));
    EXPECT_NE(X("t") * X("x"), X("x") * X("t"));
}

TEST(SkewPoly, PrincipalLeftIdealNormalization) {
    PrincipalLeftIdeal<HQRing> I(H("2*i*t+j"));
    EXPECT_TRUE(I.generator().isMonic());
    EXPECT_TRUE(I.contains(H("2*i*t+j")));
    EXPECT_TRUE(PrincipalLeftIdeal<HQRing>(H("3/2")).isWholeRing());
    EXPECT_TRUE(PrincipalLeftIdeal<HQRing>(SkewPoly<HQRing>(HQRing())).isZero());
}

TEST(SkewPoly, RandomIdentitiesOverFF) {
    std::mt19937 rng(2024);
    for (unsigned q : {4u, 9u, 8u}) {
        FFRing r(GaloisField::ofOrder(q));
        for (int it = 0; it < 150; ++it) {
            auto f = randomFF(r, static_cast<int>(rng() % 6), rng);
            auto g = randomFF(r, static_cast<int>(rng() % 4), rng);
            auto h = randomFF(r, static_cast<int>(rng() % 3), rng);
            EXPECT_EQ((f * g) * h, f * (g * h));
            if (!f.isZero() && !g.isZero()) { EXPECT_EQ((f * g).degree(), f.degree() + g.degree()); }
            if (g.isZero()) continue;
            auto [q1, r1] = divRight(f, g);
            EXPECT_EQ(q1 * g + r1, f);
            EXPECT_LT(r1.degree(), g.degree());
            auto [q2, r2] = divLeft(f, g);
            EXPECT_EQ(g * q2 + r2, f);
            EXPECT_LT(r2.degree(), g.degree());
            if (f.isZero()) continue;
            auto e = extendedGcrd(f, g);
            EXPECT_EQ(e.u * f + e.v * g, e.gcrd);
            EXPECT_TRUE(rightDivides(e.gcrd, f));
            EXPECT_TRUE(rightDivides(e.gcrd, g));
            EXPECT_EQ(lclm(f, g).degree() + gcrd(f, g).degree(), f.degree() + g.degree());
            auto le = extendedGcld(f, g);
            EXPECT_EQ(f * le.u + g * le.v, le.gcld);
            EXPECT_TRUE(leftDivides(le.gcld, f));
            EXPECT_EQ(lcrm(f, g).degree() + gcld(f, g).degree(), f.degree() + g.degree());
        }
    }
}

TEST(Parse, RoundTripAndErrors) {
    auto p = H("(t-j)*(t-i)");
    EXPECT_EQ(p, H("t^2 - (i+j)*t - k"));
    EXPECT_EQ(H(p.str()), p);
    auto f = F("a*t^3 + (a+1)*t + a^2");
    EXPECT_EQ(F(f.str()), f);
    auto x = X("(1/x)*t^2 + (x^2+1)/(x+2)*t - 3/2");
    EXPECT_EQ(X(x.str()), x);
    EXPECT_THROW(F("t^"), ParseError);
    EXPECT_THROW(F("i"), ParseError);
    EXPECT_THROW(H("a"), ParseError);
    EXPECT_THROW(H("(t-i"), ParseError);
    EXPECT_THROW(H("t/t"), ParseError);
    try {
        H("t + q");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parsePoly(FFRing(GaloisField::get(3, 1)), "a*t"), ParseError);
}

TEST(Parse, RingTags) {
    EXPECT_EQ(ringName(parseRing("GF(4)[t;frob]")), "GF(4)[t;frob]");
    EXPECT_EQ(ringName(parseRing("GF(9)[t;frob^1]")), "GF(9)[t;frob]");
    EXPECT_EQ(ringName(parseRing("GF(8)[t;frob^2]")), "GF(8)[t;frob^2]");
    EXPECT_EQ(ringName(parseRing("GF(5)[t]")), "GF(5)[t]");
    EXPECT_EQ(ringName(parseRing("HQ[x]")), "HQ[x]");
    EXPECT_EQ(ringName(parseRing("QX[t;shift]")), "QX[t;shift]");
    EXPECT_THROW(parseRing("GF(6)[t]"), ParseError);
    EXPECT_THROW(parseRing("ZZ[t]"), ParseError);
    auto hq = std::get<HQRing>(parseRing("HQ[x]"));
    EXPECT_EQ(parsePoly(hq, "(x-j)*(x-i)").degree(), 2);
}
