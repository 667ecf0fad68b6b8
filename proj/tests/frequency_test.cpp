#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <logradius/frequency.hpp>

using logradius::Frequency;

TEST(Frequency, ReducesToLowestTerms) {
    const auto f = Frequency::rational(6, 4);
    EXPECT_EQ(f.num(), 3);
    EXPECT_EQ(f.den(), 2);
    EXPECT_EQ(f, Frequency::rational(3, 2));
    EXPECT_DOUBLE_EQ(f.value(), 1.5);
    EXPECT_DOUBLE_EQ(f.component_period(), 4 * std::numbers::pi / 3);
}

TEST(Frequency, RejectsBadValues) {
    EXPECT_THROW(Frequency::rational(1, 0), logradius::InputError);
    EXPECT_THROW(Frequency::rational(0, 1), logradius::InputError);
    EXPECT_THROW(Frequency::rational(-1, 2), logradius::InputError);
    EXPECT_THROW(Frequency::real(0.0), logradius::InputError);
    EXPECT_THROW(Frequency::real(NAN), logradius::InputError);
}

TEST(Frequency, RationalAndRealAreDistinctKinds) {
    EXPECT_FALSE(Frequency::integer(2) == Frequency::real(2.0));
    EXPECT_TRUE(Frequency::integer(2) < Frequency::real(2.0));
    EXPECT_TRUE(Frequency::rational(2, 3) < Frequency::rational(3, 4));
    EXPECT_TRUE(Frequency::real(1.2) < Frequency::rational(5, 4));
}

TEST(Frequency, Parse) {
    EXPECT_EQ(logradius::parse_frequency("3/2"), Frequency::rational(3, 2));
    EXPECT_EQ(logradius::parse_frequency("4"), Frequency::integer(4));
    EXPECT_EQ(logradius::parse_frequency("2.0"), Frequency::integer(2));
    EXPECT_FALSE(logradius::parse_frequency("1.41").is_rational());
    EXPECT_THROW(logradius::parse_frequency("3/0"), logradius::InputError);
    EXPECT_THROW(logradius::parse_frequency("abc"), logradius::InputError);
    EXPECT_THROW(logradius::parse_frequency("3/2x"), logradius::InputError);
}

TEST(Frequency, ToString) {
    EXPECT_EQ(Frequency::rational(5, 2).to_string(), "5/2");
    EXPECT_EQ(Frequency::integer(7).to_string(), "7");
}
