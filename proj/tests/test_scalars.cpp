#include <gtest/gtest.h>

#include <random>

#include "oreprime/galois_field.hpp"
#include "oreprime/qfactor.hpp"
#include "oreprime/quaternion.hpp"
#include "oreprime/ratfunc.hpp"
#include "oreprime/rings.hpp"

using namespace oreprime;

TEST(Rational, ReducesAndOrders) {
    Rational a(mpz_class(6), mpz_class(-4));
    EXPECT_EQ(a.numerator(), -3);
    EXPECT_EQ(a.denominator(), 2);
    EXPECT_EQ(Rational(0).denominator(), 1);
    EXPECT_LT(a, Rational(0));
    EXPECT_EQ((a * a.inverse()), Rational(1));
    EXPECT_THROW(Rational(0).inverse(), DomainError);
}

TEST(Quat, HamiltonRelations) {
    EXPECT_EQ(Quat::i() * Quat::j(), Quat::k());
    EXPECT_EQ(Quat::j() * Quat::i(), -Quat::k());
    EXPECT_EQ(Quat::i() * Quat::i(), Quat(-1));
    EXPECT_EQ((Quat(1) + Quat::i()) * (Quat(1) - Quat::i()), Quat(2));
    Quat q = Quat::i() + Quat::j();
    EXPECT_EQ(q * Quat::i() * q.inverse(), Quat::j());
}

TEST(Quat, ConjNorm) {
    auto [c, n, t] = quatConjNorm(Quat(1, 1, 1, 1));
    EXPECT_EQ(c, Quat(1, -1, -1, -1));
    EXPECT_EQ(n, Rational(4));
    EXPECT_EQ(t, Rational(2));
    auto [c2, n2, t2] = quatConjNorm(Quat::i());
    EXPECT_EQ(c2, -Quat::i());
    EXPECT_EQ(n2, Rational(1));
    EXPECT_EQ(t2, Rational(0));
    Quat h(Rational(mpz_class(3), mpz_class(2)));
    auto [c3, n3, t3] = quatConjNorm(h);
    EXPECT_EQ(c3, h);
    EXPECT_EQ(n3, Rational(mpz_class(9), mpz_class(4)));
    EXPECT_EQ(t3, Rational(3));
}

namespace {

Quat randomQuat(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-5, 5), den(1, 4);
    auto r = [&] { return Rational(mpz_class(d(rng)), mpz_class(den(rng))); };
    return Quat(r(), r(), r(), r());
}

}  // namespace

TEST(Quat, RandomAxioms) {
    std::mt19937 rng(7);
    for (int it = 0; it < 300; ++it) {
        Quat a = randomQuat(rng), b = randomQuat(rng), c = randomQuat(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * a.conj(), Quat(a.norm()));
        if (!a.isZero()) { EXPECT_EQ(a * a.inverse(), Quat(1)); }
    }
}

TEST(GaloisField, SmallFieldsAndFrobenius) {
    const auto& f4 = GaloisField::get(2, 2);
    FFElem a = f4.generator();
    EXPECT_EQ(a * a * a, f4.one());
    EXPECT_EQ(a * a, a + f4.one());
    FFRing ring(f4);
    EXPECT_EQ(applyAutomorphism(ring, a, 1), a * a);
    EXPECT_EQ(applyAutomorphism(ring, a, 2), a);
    const auto& f9 = GaloisField::ofOrder(9);
    EXPECT_EQ(f9.characteristic(), 3u);
    EXPECT_THROW(GaloisField::ofOrder(6), DomainError);
}

TEST(GaloisField, FieldAxiomsAndFrobeniusHomomorphism) {
    std::mt19937 rng(11);
    for (std::uint32_t q : {4u, 8u, 9u, 25u, 27u, 16u}) {
        const auto& f = GaloisField::ofOrder(q);
        std::uniform_int_distribution<std::uint32_t> d(0, q - 1);
        for (int it = 0; it < 200; ++it) {
            FFElem a = f.element(d(rng)), b = f.element(d(rng)), c = f.element(d(rng));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a - a, f.zero());
            if (!a.isZero()) { EXPECT_EQ(a * a.inverse(), f.one()); }
            EXPECT_EQ((a * b).frobenius(1), a.frobenius(1) * b.frobenius(1));
            EXPECT_EQ((a + b).frobenius(1), a.frobenius(1) + b.frobenius(1));
            EXPECT_EQ(a.frobenius(static_cast<long>(f.degree())), a);
            EXPECT_EQ(a.frobenius(-1).frobenius(1), a);
        }
    }
}

TEST(RatFunc, ShiftAndReduction) {
    RatFunc invx = RatFunc::x().inverse();
    QXShiftRing ring;
    EXPECT_EQ(applyAutomorphism(ring, invx, 2), RatFunc(QPoly::constant(Rational(1)), QPoly::x().shift(Rational(2))));
    RatFunc r(QPoly::x() * QPoly::x() - QPoly::constant(Rational(1)), QPoly::x() - QPoly::constant(Rational(1)));
    EXPECT_EQ(r, RatFunc(QPoly::x() + QPoly::constant(Rational(1))));
    EXPECT_EQ(invx.str(), "1/x");
}

TEST(RatFunc, ShiftIsHomomorphism) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    auto rp = [&] {
        std::vector<Rational> c;
        for (int i = 0; i < 3; ++i) c.emplace_back(d(rng));
        return QPoly(c);
    };
    for (int it = 0; it < 100; ++it) {
        QPoly n1 = rp(), d1 = rp(), n2 = rp(), d2 = rp();
        if (d1.isZero() || d2.isZero()) continue;
        RatFunc a(n1, d1), b(n2, d2);
        EXPECT_EQ((a * b).shift(1), a.shift(1) * b.shift(1));
        EXPECT_EQ((a + b).shift(1), a.shift(1) + b.shift(1));
        EXPECT_EQ((a * (b + a)), a * b + a * a);
        if (!a.isZero()) { EXPECT_TRUE((a * a.inverse()).isOne()); }
    }
}

TEST(CommFactorQ, SmallCases) {
    QPoly x = QPoly::x();
    QPoly one = QPoly::constant(Rational(1));
    auto f = commFactorQ((x * x + one) * (x * x + one));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].factor, x * x + one);
    EXPECT_EQ(f[0].multiplicity, 2);
    auto g = commFactorQ(x * x - QPoly::constant(Rational(2)));
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0].multiplicity, 1);
    auto h = commFactorQ(x * x * x - x);
    ASSERT_EQ(h.size(), 3u);
    EXPECT_EQ(h[0].factor, x - one);
    EXPECT_EQ(h[1].factor, x);
    EXPECT_EQ(h[2].factor, x + one);
}

TEST(CommFactorQ, QuarticSplitsIntoQuadratics) {
    // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2) has no rational root
    QPoly x = QPoly::x();
    QPoly f = x * x * x * x + QPoly::constant(Rational(4));
    auto fs = commFactorQ(f);
    ASSERT_EQ(fs.size(), 2u);
    QPoly prod = QPoly::constant(Rational(1));
    for (const auto& q : fs) prod = prod * q.factor;
    EXPECT_EQ(prod, f);
    EXPECT_TRUE(isIrreducibleQ(x * x * x * x - QPoly::constant(Rational(2))));
}

TEST(CommFactorQ, MultiplyBackOnProducts) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-4, 4);
    QPoly x = QPoly::x();
    for (int it = 0; it < 40; ++it) {
        QPoly f = QPoly::constant(Rational(1));
        int parts = 1 + it % 3;
        for (int k = 0; k < parts; ++k) f = f * (x * x + QPoly::constant(Rational(d(rng))) * x + QPoly::constant(Rational(d(rng))));
        auto fs = commFactorQ(f);
        QPoly prod = QPoly::constant(Rational(1));
        for (const auto& q : fs)
            for (int m = 0; m < q.multiplicity; ++m) prod = prod * q.factor;
        EXPECT_EQ(prod, f.monic());
        for (const auto& q : fs) EXPECT_TRUE(q.factor.degree() >= 1);
    }
}
