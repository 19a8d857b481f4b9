#include <gtest/gtest.h>

#include <random>

#include "cfstat/cfe.hpp"
#include "oracles/brute_force.hpp"

using namespace cfstat;

namespace {

std::vector<Int> digits_of(Int p, Int q) {
  const auto d = expand(ReducedFraction(p, q));
  return {d.begin(), d.end()};
}

}  // namespace

TEST(ReducedFraction, RejectsInvalidInput) {
  EXPECT_THROW(ReducedFraction(4, 8), NotCoprime);
  EXPECT_THROW(ReducedFraction(0, 5), InvalidArgument);
  EXPECT_THROW(ReducedFraction(5, 5), InvalidArgument);
  EXPECT_THROW(ReducedFraction(6, 5), InvalidArgument);
  EXPECT_THROW(ReducedFraction(1, 1), InvalidArgument);
  EXPECT_THROW(ReducedFraction(-1, 3), InvalidArgument);
  EXPECT_EQ(ReducedFraction::reduce(4, 8), ReducedFraction(1, 2));
}

TEST(ReducedFraction, Parse) {
  EXPECT_EQ(ReducedFraction::parse("3/7"), ReducedFraction(3, 7));
  EXPECT_THROW(ReducedFraction::parse("4/8"), NotCoprime);
  EXPECT_THROW(ReducedFraction::parse("3"), InvalidArgument);
  EXPECT_THROW(ReducedFraction::parse("3/x"), InvalidArgument);
  EXPECT_THROW(ReducedFraction::parse("3/99999999999999999999999"), OverflowError);
}

TEST(Expand, HandExamples) {
  EXPECT_EQ(digits_of(1, 2), (std::vector<Int>{2}));
  EXPECT_EQ(digits_of(3, 7), (std::vector<Int>{2, 3}));
  EXPECT_EQ(digits_of(4, 7), (std::vector<Int>{1, 1, 3}));
  // Canonical form; [1, 4, 1] is the other expansion of 5/6.
  EXPECT_EQ(digits_of(5, 6), (std::vector<Int>{1, 5}));
}

TEST(Evaluate, HandExamples) {
  EXPECT_EQ(evaluate(std::vector<Int>{2}), ReducedFraction(1, 2));
  EXPECT_EQ(evaluate(std::vector<Int>{2, 3}), ReducedFraction(3, 7));
  EXPECT_EQ(evaluate(std::vector<Int>{1, 4, 1}), ReducedFraction(5, 6));
}

TEST(Evaluate, Errors) {
  EXPECT_THROW(evaluate(std::vector<Int>{}), InvalidArgument);
  EXPECT_THROW(evaluate(std::vector<Int>{1}), InvalidArgument);  // equals 1
  EXPECT_THROW(evaluate(std::vector<Int>{2, 0}), InvalidArgument);
  const Int big = 10'000'000'000;
  EXPECT_THROW(evaluate(std::vector<Int>{big, big, big}), OverflowError);
}

TEST(Len, Examples) {
  EXPECT_EQ(len(CfDigits({2})), 1u);
  EXPECT_EQ(len(expand(ReducedFraction(3, 7))), 2u);
  EXPECT_EQ(len(expand(ReducedFraction(4, 7))), 3u);
}

TEST(CfDigits, InvariantsAndSerialization) {
  EXPECT_THROW(CfDigits({}), InvalidArgument);
  EXPECT_THROW(CfDigits({2, 1}), InvalidArgument);
  EXPECT_THROW(CfDigits({0, 2}), InvalidArgument);
  EXPECT_EQ(CfDigits::parse("1,1,3"), CfDigits({1, 1, 3}));
  EXPECT_EQ(CfDigits({1, 1, 3}).to_string(), "1,1,3");
  EXPECT_THROW(CfDigits::parse("1,,3"), InvalidArgument);
  EXPECT_THROW(CfDigits::parse("1,1"), InvalidArgument);
  EXPECT_EQ(canonicalize(std::vector<Int>{1, 4, 1}), CfDigits({1, 5}));
  EXPECT_EQ(canonicalize(std::vector<Int>{1, 1}), CfDigits({2}));
}

TEST(Convergents, HandExamples) {
  const auto c23 = convergents(std::vector<Int>{2, 3});
  ASSERT_EQ(c23.size(), 3u);
  EXPECT_EQ(c23[1], (Convergent{1, 2}));
  EXPECT_EQ(c23[2], (Convergent{3, 7}));

  const auto c113 = convergents(std::vector<Int>{1, 1, 3});
  ASSERT_EQ(c113.size(), 4u);
  EXPECT_EQ(c113[1].q, 1);
  EXPECT_EQ(c113[2].q, 2);
  EXPECT_EQ(c113[3].q, 7);

  EXPECT_EQ(convergents(std::vector<Int>{2}).back(), (Convergent{1, 2}));
}

TEST(Mirror, Examples) {
  EXPECT_EQ(mirror(ReducedFraction(3, 7)), ReducedFraction(4, 7));
  EXPECT_EQ(mirror(ReducedFraction(1, 2)), ReducedFraction(1, 2));
  EXPECT_EQ(mirror(ReducedFraction(5, 6)), ReducedFraction(1, 6));
}

TEST(NegModInverse, Examples) {
  EXPECT_EQ(neg_mod_inverse(2, 7), 3);
  EXPECT_EQ(neg_mod_inverse(1, 2), 1);
  EXPECT_EQ(neg_mod_inverse(5, 6), 1);
  EXPECT_EQ(neg_mod_inverse(2, 5), 2);
  EXPECT_THROW(neg_mod_inverse(2, 4), NotCoprime);
  EXPECT_THROW(neg_mod_inverse(1, 1), InvalidArgument);
}

TEST(NegModInverse, PropertyProductIsMinusOne) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 20000; ++i) {
    const Int q = 2 + static_cast<Int>(gen() % 1'000'000'000);
    const Int p = 1 + static_cast<Int>(gen() % static_cast<std::uint64_t>(q - 1));
    if (std::gcd(p, q) != 1) continue;
    const Int pp = neg_mod_inverse(p, q);
    ASSERT_GE(pp, 1);
    ASSERT_LT(pp, q);
    ASSERT_EQ(static_cast<Int>((static_cast<__int128>(p) * pp + 1) % q), 0) << p << "/" << q;
  }
}

// ---------------------------------------------------------------------------
// Properties

TEST(Properties, RoundTripAndCanonicality) {
  std::mt19937_64 gen(1);
  for (int i = 0; i < 100000; ++i) {
    const Int q = 2 + static_cast<Int>(gen() % 999'999'999);
    const Int p = 1 + static_cast<Int>(gen() % static_cast<std::uint64_t>(q - 1));
    if (std::gcd(p, q) != 1) continue;
    const ReducedFraction f(p, q);
    const CfDigits d = expand(f);
    ASSERT_EQ(evaluate(d), f);
    ASSERT_GE(d.digits().back(), 2);
    ASSERT_EQ(d[0] >= 2, 2 * p <= q);
    // Inside-out evaluation is an independent route to the same value.
    const auto [num, den] = oracle::evaluate_inside_out({d.begin(), d.end()});
    ASSERT_EQ(num, p);
    ASSERT_EQ(den, q);
  }
}

TEST(Properties, TwoExpansionLaw) {
  for (Int q = 2; q <= 400; ++q) {
    for (Int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      std::vector<Int> alt = digits_of(p, q);
      alt.back() -= 1;
      alt.push_back(1);
      ASSERT_EQ(evaluate(alt), ReducedFraction(p, q));
    }
  }
}

TEST(Properties, MirrorLaw) {
  for (Int q = 2; q <= 2000; ++q) {
    for (Int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto d = digits_of(p, q);
      std::vector<Int> predicted;
      if (d[0] == 1) {
        predicted.push_back(d[1] + 1);
        predicted.insert(predicted.end(), d.begin() + 2, d.end());
      } else {
        predicted = {1, d[0] - 1};
        predicted.insert(predicted.end(), d.begin() + 1, d.end());
      }
      ASSERT_EQ(expand(mirror(ReducedFraction(p, q))), canonicalize(predicted)) << p << "/" << q;
    }
  }
}

TEST(Properties, ReversalLawSignByBruteForce) {
  // Determine the sign of p * p* (mod q) empirically, then check it against
  // the parity rule (-1)^(n+1).
  for (Int q = 2; q <= 100; ++q) {
    for (Int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      auto d = digits_of(p, q);
      const auto n = static_cast<Int>(d.size());
      std::reverse(d.begin(), d.end());
      const ReducedFraction reversed = evaluate(d);
      ASSERT_EQ(reversed.den(), q);
      const Int product = (p * reversed.num()) % q;
      const Int sign = product == 1 ? 1 : (product == q - 1 ? -1 : 0);
      ASSERT_NE(sign, 0) << p << "/" << q;
      const Int parity = (n + 1) % 2 == 0 ? 1 : -1;
      if (q > 2) ASSERT_EQ(sign, parity) << p << "/" << q;
    }
  }
}

TEST(Properties, DeterminantIdentityAndMonotoneDenominators) {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 20000; ++i) {
    const Int q = 2 + static_cast<Int>(gen() % 1'000'000'000);
    const Int p = 1 + static_cast<Int>(gen() % static_cast<std::uint64_t>(q - 1));
    if (std::gcd(p, q) != 1) continue;
    const auto c = convergents(expand(ReducedFraction(p, q)));
    ASSERT_EQ(c.back(), (Convergent{p, q}));
    for (std::size_t k = 1; k < c.size(); ++k) {
      const __int128 det = static_cast<__int128>(c[k].p) * c[k - 1].q - static_cast<__int128>(c[k - 1].p) * c[k].q;
      ASSERT_TRUE(det == 1 || det == -1);
      if (k >= 2) ASSERT_LT(c[k - 1].q, c[k].q);
    }
  }
}

TEST(Kernels, ExpansionLengthMatchesExpand) {
  for (Int q = 2; q <= 300; ++q) {
    for (Int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ASSERT_EQ(static_cast<std::size_t>(expansion_length(p, q)), digits_of(p, q).size());
      ASSERT_EQ(digits_of(p, q), oracle::gauss_map_digits(p, q));
    }
  }
}
