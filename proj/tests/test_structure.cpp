#include <gtest/gtest.h>

#include <random>

#include "oreprime/parse.hpp"
#include "oreprime/structure.hpp"

using namespace oreprime;

namespace {

const FFRing& f4() {
    static FFRing r(GaloisField::get(2, 2));
    return r;
}
SkewPoly<FFRing> F(const std::string& s) { return parsePoly(f4(), s); }
SkewPoly<HQRing> H(const std::string& s) { return parsePoly(HQRing(), s); }
SkewPoly<HQRing> HX(const std::string& s) { return parsePoly(HQRing("x"), s); }
SkewPoly<QXShiftRing> X(const std::string& s) { return parsePoly(QXShiftRing(), s); }

/// All monic polynomials of the given degree over the ring's field.
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

}  // namespace

TEST(Invariant, Examples) {
    EXPECT_TRUE(isInvariant(H("t^2+1")));
    EXPECT_FALSE(isInvariant(H("t-i")));
    EXPECT_TRUE(isInvariant(F("t")));
    EXPECT_TRUE(isInvariant(F("t^2+1")));
    EXPECT_FALSE(isInvariant(F("t+1")));
    EXPECT_TRUE(isInvariant(X("x*t^3")));
    EXPECT_FALSE(isInvariant(X("t-1")));
    EXPECT_THROW(isInvariant(SkewPoly<HQRing>(HQRing())), DomainError);
}

TEST(Invariant, NonInvariantByDivision) {
    // (t-i) j = j t - k has no form c (t-i)
    auto prod = H("t-i") * H("j");
    EXPECT_FALSE(divRight(prod, H("t-i")).remainder.isZero());
}

TEST(Closure, Examples) {
    EXPECT_EQ(twoSidedClosure(HX("(x-j)*(x-i)")), HX("1"));
    EXPECT_EQ(twoSidedClosure(H("t^2+1")), H("t^2+1"));
    EXPECT_EQ(twoSidedClosure(H("(t^2+1)*(t-i)")), H("t^2+1"));
    EXPECT_EQ(twoSidedClosure(X("t^3 + x*t^2")), X("t^2"));
    EXPECT_EQ(twoSidedClosure(X("t+1")), X("1"));
}

TEST(Bound, Examples) {
    EXPECT_EQ(bound(H("t-i")).value(), H("t^2+1"));
    EXPECT_EQ(bound(HX("(x-j)*(x-i)")).value(), HX("(x^2+1)^2"));
    EXPECT_EQ(bound(X("t-1")).status, BoundStatus::Unbounded);
    EXPECT_EQ(bound(X("x*t^2")).value(), X("t^2"));
    EXPECT_EQ(bound(F("t")).value(), F("t"));
    EXPECT_EQ(bound(F("t+1")).value(), F("t^2+1"));
}

TEST(Bound, MembershipInvarianceMinimalityOverF4) {
    // no monic invariant of smaller degree lies in Ra: checked by brute force
    std::vector<SkewPoly<FFRing>> invariants;
    for (int d = 1; d <= 6; ++d)
        for (const auto& m : monics(f4(), d))
            if (isInvariant(m)) invariants.push_back(m);
    for (int deg = 1; deg <= 3; ++deg) {
        for (const auto& a : monics(f4(), deg)) {
            auto h = bound(a).value();
            ASSERT_TRUE(h.isMonic());
            EXPECT_TRUE(rightDivides(a, h)) << a.str();
            EXPECT_TRUE(leftDivides(a, h)) << a.str();
            EXPECT_TRUE(isInvariant(h));
            for (const auto& c : invariants) {
                if (c.degree() >= h.degree()) break;
                EXPECT_FALSE(rightDivides(a, c)) << a.str() << " " << c.str();
            }
        }
    }
}

TEST(Bound, AnnihilatesTheQuotientModule) {
    // Rh is the annihilator of R/Ra: h * x in Ra for every residue x
    for (const auto& a : monics(f4(), 2)) {
        auto h = bound(a).value();
        for (const auto& x : monics(f4(), 1)) EXPECT_TRUE(rightDivides(a, h * x));
        EXPECT_TRUE(rightDivides(a, h * F("a")));
    }
}

TEST(Bound, TwistOrderThreeAndCommutative) {
    FFRing r8(GaloisField::get(2, 3));
    auto a = parsePoly(r8, "t+a");
    auto h = bound(a).value();
    EXPECT_TRUE(isInvariant(h));
    EXPECT_TRUE(rightDivides(a, h));
    FFRing comm(GaloisField::get(2, 2), 0);
    auto g = parsePoly(comm, "t^2+a*t+1");
    EXPECT_EQ(bound(g).value(), g);
}

TEST(Closure, InvariantAndMinimalOverF4) {
    std::vector<SkewPoly<FFRing>> invariants;
    for (int d = 1; d <= 3; ++d)
        for (const auto& m : monics(f4(), d))
            if (isInvariant(m)) invariants.push_back(m);
    for (int deg = 1; deg <= 3; ++deg) {
        for (const auto& a : monics(f4(), deg)) {
            auto g = twoSidedClosure(a);
            if (!g.isUnit()) { EXPECT_TRUE(isInvariant(g)); }
            EXPECT_TRUE(rightDivides(g, a));
            // any invariant c with a in Rc has g in Rc
            for (const auto& c : invariants)
                if (rightDivides(c, a)) { EXPECT_TRUE(rightDivides(c, g)) << a.str() << " " << c.str(); }
        }
    }
}

TEST(InvAtom, Examples) {
    EXPECT_TRUE(isInvAtom(H("t^2+1")).isYes());
    auto v = isInvAtom(HX("(x^2+1)^2"));
    EXPECT_TRUE(v.isNo());
    EXPECT_EQ(*v.find("left") * *v.find("right"), HX("(x^2+1)^2"));
    EXPECT_TRUE(isInvAtom(F("t")).isYes());
    EXPECT_TRUE(isInvAtom(F("t^4+t^2+1")).isYes());
    EXPECT_TRUE(isInvAtom(F("t^2+1")).isYes());
    EXPECT_TRUE(isInvAtom(F("t^4+1")).isNo());
    EXPECT_TRUE(isInvAtom(F("t^2")).isNo());
    EXPECT_TRUE(isInvAtom(X("t")).isYes());
    EXPECT_TRUE(isInvAtom(X("t^2")).isNo());
    EXPECT_THROW(isInvAtom(H("t-i")), DomainError);
}

TEST(InvAtom, AgreesWithInvariantRightFactorSearchOverF4) {
    std::vector<SkewPoly<FFRing>> invariants;
    for (int d = 1; d <= 5; ++d)
        for (const auto& m : monics(f4(), d))
            if (isInvariant(m)) invariants.push_back(m);
    for (const auto& p : invariants) {
        bool proper = false;
        for (const auto& b : invariants)
            if (b.degree() < p.degree() && rightDivides(b, p)) {
                auto c = divRight(p, b).quotient;
                EXPECT_TRUE(isInvariant(c));
                proper = true;
            }
        auto v = isInvAtom(p);
        EXPECT_EQ(v.isYes(), !proper) << p.str();
        if (v.isNo()) { EXPECT_EQ(*v.find("left") * *v.find("right"), p); }
    }
}

TEST(LeftQuotient, Examples) {
    EXPECT_EQ(leftQuotient(H("t^2+1"), H("t+i")), H("t-i"));
    auto a = H("t^2+t+i");
    EXPECT_EQ(leftQuotient(a, H("1")), a.monic());
    EXPECT_EQ(leftQuotient(a, a), H("1"));
    EXPECT_EQ(leftQuotient(a, SkewPoly<HQRing>(HQRing())), H("1"));
}

TEST(LeftQuotient, MatchesBruteForceOverF4) {
    std::vector<SkewPoly<FFRing>> all{SkewPoly<FFRing>(f4())};
    for (int d = 0; d <= 2; ++d)
        for (const auto& m : monics(f4(), d))
            for (std::uint32_t c = 1; c < 4; ++c) all.push_back(f4().field().element(c) * m);
    for (int da = 1; da <= 2; ++da) {
        for (const auto& a : monics(f4(), da)) {
            for (const auto& c : all) {
                if (c.isZero()) continue;
                auto b = leftQuotient(a, c);
                // {x : xc in Ra} restricted to deg x <= 2 equals {x in Rb}
                for (const auto& x : all) EXPECT_EQ(rightDivides(a, x * c), x.isZero() || rightDivides(b, x));
            }
        }
    }
}
