#include <gtest/gtest.h>

#include <initializer_list>
#include <utility>

#include <ribbonlab/laurent.hpp>
#include <ribbonlab/scalar.hpp>

#include "oracle.hpp"

using namespace ribbonlab;

namespace
{

const Field Q = Field::rational();

LaurentPoly lp(std::initializer_list<std::pair<int, long>> terms, const Field &f = Q)
{
    LaurentPoly p(f);
    for (const auto &[e, c] : terms) {
        p.add_term(e, Scalar::from_int(f, c));
    }
    return p;
}

} // namespace

TEST(Scalar, RationalArithmeticIsExact)
{
    const auto a = Scalar::parse(Q, "3/7");
    const auto b = Scalar::parse(Q, "-7/3");
    EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ((a * b).to_string(), "-1/1");
    EXPECT_EQ((a + b).to_string(), "-40/21");
    EXPECT_EQ(Scalar::parse(Q, "6/4").to_string(), "3/2");
}

TEST(Scalar, PrimeFieldResidues)
{
    const auto F7 = Field::parse("Fp:7");
    EXPECT_EQ(F7.name(), "Fp:7");
    EXPECT_EQ(Scalar::from_int(F7, -1).to_string(), "6");
    EXPECT_EQ(Scalar::parse(F7, "1/3").to_string(), "5");
    EXPECT_TRUE((Scalar::from_int(F7, 3) * Scalar::from_int(F7, 5)).is_one());
    const auto big = Field::prime(2147483647);
    const auto x = Scalar::from_int(big, 2147483646);
    EXPECT_TRUE((x * x).is_one());
}

TEST(Scalar, Errors)
{
    EXPECT_THROW(Field::prime(9), error);
    EXPECT_THROW(Field::prime(2147483659ULL), error);
    EXPECT_THROW(Field::parse("R"), error);
    EXPECT_THROW(Scalar::zero(Q).inverse(), error);
    EXPECT_THROW(Scalar::parse(Q, "1/0"), error);
    EXPECT_THROW(Scalar::parse(Q, "x"), error);
    EXPECT_THROW(Scalar::one(Q) + Scalar::one(Field::prime(5)), error);
}

TEST(Laurent, Addition)
{
    EXPECT_EQ(lp({{1, 1}, {0, 1}}) + lp({{1, -1}}), lp({{0, 1}}));
    EXPECT_EQ(LaurentPoly(Q) + lp({{-3, 1}}), lp({{-3, 1}}));
    EXPECT_EQ(lp({{2, 1}, {1, 1}}) + lp({{2, 1}, {1, -1}}), lp({{2, 2}}));
}

TEST(Laurent, Multiplication)
{
    EXPECT_EQ(lp({{0, 1}, {1, 1}}) * lp({{0, 1}, {1, -1}}), lp({{0, 1}, {2, -1}}));
    EXPECT_EQ(lp({{-2, 1}}) * lp({{5, 1}}), lp({{3, 1}}));
    EXPECT_EQ(lp({{0, 1}, {1, 1}, {2, 1}}) * lp({{0, 1}, {1, -1}}), lp({{0, 1}, {3, -1}}));
}

TEST(Laurent, CanonicalFormAndOrder)
{
    const auto x = lp({{-4, 2}, {3, 5}});
    EXPECT_TRUE((x + (-x)).terms().empty());
    EXPECT_EQ(x.ord(), -4);
    EXPECT_EQ(x.max_exponent(), 3);
    EXPECT_THROW(LaurentPoly(Q).ord(), error);
    EXPECT_EQ(lp({{0, 0}}).size(), 0u);
}

TEST(Laurent, FieldMismatch)
{
    EXPECT_THROW(lp({{0, 1}}) + lp({{0, 1}}, Field::prime(3)), error);
    EXPECT_THROW(lp({{0, 1}}) * lp({{0, 1}}, Field::prime(3)), error);
}

TEST(Laurent, ConvolutionAgreesWithNaiveCoefficientSums)
{
    oracle::Gen g(11);
    for (int i = 0; i < 1000; ++i) {
        const auto f = g.field();
        const auto x = g.laurent(f, -6, 6, 5);
        const auto y = g.laurent(f, -6, 6, 5);
        const auto z = x * y;
        for (int e = -12; e <= 12; ++e) {
            auto c = Scalar::zero(f);
            for (int a = -6; a <= 6; ++a) {
                c += x.coeff(a) * y.coeff(e - a);
            }
            ASSERT_EQ(z.coeff(e), c);
        }
    }
}
