#include "support.hpp"

#include "vsllt/qpoly.hpp"

#include <gtest/gtest.h>

using namespace vsllt;
using vsllt::testing::Rng;

namespace {

const QPoly q = QPoly::q();
const QPoly one(1);

QPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return QPoly::from_coeffs(std::move(r));
}

std::vector<Rational> rats(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

}  // namespace

TEST(QPoly, CanonicalForm) {
  EXPECT_TRUE(QPoly().is_zero());
  EXPECT_TRUE(poly({0, 0, 0}).is_zero());
  EXPECT_EQ(poly({1, 2, 0, 0}).coeffs().size(), 2u);
  EXPECT_EQ(poly({1, 2, 0}), poly({1, 2}));
  EXPECT_EQ(QPoly().degree(), -1);
  EXPECT_EQ((q * q - q).degree(), 2);
}

TEST(QPoly, Arithmetic) {
  EXPECT_EQ(q + (q - one) * one, poly({-1, 2}));
  EXPECT_EQ(q * (q - one), poly({0, -1, 1}));
  EXPECT_TRUE((QPoly() * poly({3, 1, 4})).is_zero());
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ(-(q - one), one - q);
}

TEST(QPoly, ShiftPlusOne) {
  EXPECT_EQ(shift_plus_one(q * (q - one)), q * q + q);
  EXPECT_EQ(shift_plus_one(QPoly(Rational(7, 3))), QPoly(Rational(7, 3)));
  EXPECT_EQ(shift_plus_one(q * q), poly({1, 2, 1}));
  EXPECT_TRUE(shift_plus_one(QPoly()).is_zero());
}

TEST(QPoly, RebaseQMinusOne) {
  EXPECT_EQ(rebase_q_minus_one(q), rats({1, 1}));
  EXPECT_EQ(rebase_q_minus_one(q * q - q), rats({0, 1, 1}));
  EXPECT_EQ(rebase_q_minus_one(q * q), rats({1, 2, 1}));
  EXPECT_TRUE(rebase_q_minus_one(QPoly()).empty());
}

TEST(QPoly, IsNonneg) {
  EXPECT_TRUE(is_nonneg(q * q + q));
  EXPECT_FALSE(is_nonneg(q - one));
  EXPECT_TRUE(is_nonneg(QPoly()));
  EXPECT_TRUE(is_nonneg(QPoly(Rational(1, 2))));
  EXPECT_FALSE(is_nonneg_integer_sequence(std::vector<Rational>{Rational(1, 2)}));
}

TEST(QPoly, DivisionByQMinusOne) {
  EXPECT_EQ(*(q * q - one).divided_by_q_minus_one(), q + one);
  EXPECT_FALSE(q.divided_by_q_minus_one().has_value());
  EXPECT_TRUE(QPoly().divided_by_q_minus_one()->is_zero());
}

TEST(QPoly, Rendering) {
  EXPECT_EQ((q * q - q).str(), "q^2 - q");
  EXPECT_EQ((q * q - q).str(false), "q^2-q");
  EXPECT_EQ(QPoly().str(), "0");
  EXPECT_EQ((QPoly(Rational(1, 2)) * q - QPoly(3)).str(), "1/2*q - 3");
  EXPECT_EQ((-q).str(), "-q");
  EXPECT_EQ(coeff_strings(QPoly(Rational(-1, 2)) + q), (std::vector<std::string>{"-1/2", "1"}));
}

TEST(QPoly, Parsing) {
  EXPECT_EQ(parse_qpoly("q^2 - q"), q * q - q);
  EXPECT_EQ(parse_qpoly("q^2-q"), q * q - q);
  EXPECT_EQ(parse_qpoly("-1/2*q+3"), QPoly(Rational(-1, 2)) * q + QPoly(3));
  EXPECT_EQ(parse_qpoly("0"), QPoly());
  EXPECT_THROW(parse_qpoly(""), std::invalid_argument);
  EXPECT_THROW(parse_qpoly("q^"), std::invalid_argument);
  EXPECT_THROW(parse_qpoly("x"), std::invalid_argument);
  EXPECT_THROW(parse_qpoly("1/0*q"), std::invalid_argument);
}

class QPolyProperty : public ::testing::TestWithParam<int> {};

TEST_P(QPolyProperty, RebaseRoundTrip) {
  Rng rng(1000 + GetParam());
  const QPoly a = vsllt::testing::random_rational_qpoly(rng, 6);
  const auto c = rebase_q_minus_one(a);
  EXPECT_EQ(from_q_minus_one_basis(c), a) << a.str();
}

TEST_P(QPolyProperty, ShiftIsRingHomomorphism) {
  Rng rng(2000 + GetParam());
  const QPoly a = vsllt::testing::random_rational_qpoly(rng);
  const QPoly b = vsllt::testing::random_rational_qpoly(rng);
  EXPECT_EQ(shift_plus_one(a * b), shift_plus_one(a) * shift_plus_one(b));
  EXPECT_EQ(shift_plus_one(a + b), shift_plus_one(a) + shift_plus_one(b));
}

TEST_P(QPolyProperty, ShiftAgreesWithEvaluation) {
  Rng rng(3000 + GetParam());
  const QPoly a = vsllt::testing::random_rational_qpoly(rng);
  Rational x(vsllt::testing::uniform(rng, -5, 5), vsllt::testing::uniform(rng, 1, 4));
  x.canonicalize();
  EXPECT_EQ(shift_plus_one(a)(x), a(x + 1));
}

TEST_P(QPolyProperty, NonnegInQMinusOneBasisTransfersToShift) {
  Rng rng(4000 + GetParam());
  std::vector<Rational> c;
  for (int i = 0, d = vsllt::testing::uniform(rng, 0, 6); i <= d; ++i)
    c.emplace_back(vsllt::testing::uniform(rng, 0, 5));
  const QPoly a = from_q_minus_one_basis(c);
  EXPECT_TRUE(is_nonneg_integer_sequence(rebase_q_minus_one(a)));
  EXPECT_TRUE(is_nonneg(shift_plus_one(a))) << a.str();
}

TEST_P(QPolyProperty, RenderParseRoundTrip) {
  Rng rng(5000 + GetParam());
  const QPoly a = vsllt::testing::random_rational_qpoly(rng);
  EXPECT_EQ(parse_qpoly(a.str()), a);
  EXPECT_EQ(parse_qpoly(a.str(false)), a);
  EXPECT_EQ(from_coeff_strings(coeff_strings(a)), a);
}

TEST_P(QPolyProperty, DivisionByQMinusOneInvertsMultiplication) {
  Rng rng(6000 + GetParam());
  const QPoly a = vsllt::testing::random_rational_qpoly(rng);
  EXPECT_EQ(*(a * (q - one)).divided_by_q_minus_one(), a);
}

INSTANTIATE_TEST_SUITE_P(Random, QPolyProperty, ::testing::Range(0, 50));
