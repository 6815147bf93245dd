#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "puiseux/error.hpp"
#include "puiseux/factorization.hpp"
#include "puiseux/primes.hpp"
#include "puiseux/rational.hpp"

using namespace puiseux;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(PositiveRational, ReducesAndRejectsZero) {
  EXPECT_EQ(PositiveRational::make(4, 6).str(), "2/3");
  EXPECT_EQ(PositiveRational::make(7, 1).str(), "7/1");
  EXPECT_EQ(code_of([] { PositiveRational::make(0, 5); }), ErrorCode::NonPositive);
  EXPECT_EQ(code_of([] { PositiveRational::make(-1, 5); }), ErrorCode::NonPositive);
}

TEST(Rational, ParseAcceptsOnlyExactTokens) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-5"), Rational(-5));
  EXPECT_EQ(Rational::parse("0").str(), "0");
  EXPECT_EQ(code_of([] { Rational::parse("0.5"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { Rational::parse(""); }), ErrorCode::ParseError);
}

TEST(Rational, FloorAndCeilOfNegatives) {
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(6, 2).ceil(), 3);
}

TEST(Rational, ArithmeticMatchesGmpOnRandomInputs) {
  std::mt19937 rng(1);
  for (int i = 0; i < 500; ++i) {
    long a = static_cast<long>(rng() % 200) - 100, b = 1 + rng() % 50;
    long c = static_cast<long>(rng() % 200) - 100, d = 1 + rng() % 50;
    Rational x(a, b), y(c, d);
    oracle::Q qx = oracle::q(a, b), qy = oracle::q(c, d);
    EXPECT_EQ((x + y).raw(), qx + qy);
    EXPECT_EQ((x * y).raw(), qx * qy);
    EXPECT_EQ((x - y).raw(), qx - qy);
    if (c != 0) EXPECT_EQ((x / y).raw(), oracle::Q(qx / qy));
    EXPECT_EQ(x < y, qx < qy);
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(p_adic_valuation(2, Rational(3, 4)), ExtendedInt(-2));
  EXPECT_EQ(p_adic_valuation(3, Rational(18, 5)), ExtendedInt(2));
  EXPECT_TRUE(p_adic_valuation(5, Rational(0)).is_infinite());
  EXPECT_EQ(code_of([] { p_adic_valuation(4, Rational(1)); }), ErrorCode::NotPrime);
}

TEST(Valuation, IsAdditiveOnProducts) {
  std::mt19937 rng(2);
  for (int i = 0; i < 200; ++i) {
    Rational x(1 + static_cast<long>(rng() % 500), 1 + rng() % 500);
    Rational y(1 + static_cast<long>(rng() % 500), 1 + rng() % 500);
    for (long p : {2, 3, 5, 7}) {
      EXPECT_EQ(p_adic_valuation(p, x * y), p_adic_valuation(p, x) + p_adic_valuation(p, y));
    }
  }
}

TEST(Primes, AgreesWithTrialDivision) {
  EXPECT_TRUE(is_prime(Integer(97)));
  EXPECT_FALSE(is_prime(Integer(1)));
  EXPECT_FALSE(is_prime(Integer(403)));
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime(n)) << n;
  auto ps = oracle::first_primes(300);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EXPECT_EQ(nth_prime(i + 1), ps[i]);
    EXPECT_EQ(prime_index(ps[i]), i + 1);
  }
  auto odd = oracle::first_primes(50, 3);
  for (std::size_t i = 0; i < odd.size(); ++i) EXPECT_EQ(nth_odd_prime(i + 1), odd[i]);
}

TEST(Primes, LargeInputsUseExactTest) {
  // 2^61 - 1 is a Mersenne prime; 2^61 + 1 is divisible by 3.
  EXPECT_TRUE(is_prime((Integer(1) << 61) - 1));
  EXPECT_FALSE(is_prime((Integer(1) << 61) + 1));
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));
}

TEST(Primes, Progression) {
  auto a = prime_in_progression(3, 5, 100);
  EXPECT_EQ(a.k, 2u);
  EXPECT_EQ(a.prime, 13);
  auto b = prime_in_progression(5, 13, 100);
  EXPECT_EQ(b.k, 2u);
  EXPECT_EQ(b.prime, 31);
  EXPECT_EQ(code_of([] { prime_in_progression(2, 4, 100); }), ErrorCode::BadProgression);
  // 1 + 24k: 25, 49, 73 -> k = 3.
  EXPECT_EQ(prime_in_progression(1, 24, 100).k, 3u);
  EXPECT_EQ(code_of([] { prime_in_progression(1, 24, 2); }), ErrorCode::NotFoundWithinLimit);
}

TEST(Factorization, EvaluateAndLength) {
  Factorization z;
  z.add(PositiveRational::make(1, 2), 2);
  EXPECT_EQ(evaluate(z), Rational(1));
  EXPECT_EQ(evaluate(Factorization()), Rational(0));
  Factorization w;
  w.add(PositiveRational::make(4, 9), 3);
  EXPECT_EQ(evaluate(w), Rational(4, 3));
  EXPECT_EQ(w.length(), 3);
  EXPECT_EQ(code_of([&] { w.remove(PositiveRational::make(4, 9), 4); }),
            ErrorCode::InsufficientMultiplicity);
  w.remove(PositiveRational::make(4, 9), 3);
  EXPECT_TRUE(w.empty());
}

TEST(Factorization, ScalingMultipliesValue) {
  Factorization z;
  z.add(PositiveRational::make(2, 3), 2);
  z.add(PositiveRational::make(1, 5), 7);
  auto s = PositiveRational::make(5, 4);
  EXPECT_EQ(evaluate(z.scaled(s)), evaluate(z) * s.value());
  EXPECT_EQ(z.scaled(s).length(), z.length());
}
