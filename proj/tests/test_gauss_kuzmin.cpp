#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "cfstat/gauss_kuzmin.hpp"

using namespace cfstat;

TEST(Window, Validation) {
  EXPECT_THROW(Window({}), InvalidArgument);
  EXPECT_THROW(Window({1, 0}), InvalidArgument);
  EXPECT_EQ(Window::parse("1,2"), Window({1, 2}));
  EXPECT_EQ(Window({1, 2}).to_string(), "1,2");
  EXPECT_EQ(Window({1}).extended(5), Window({1, 5}));
}

TEST(CylinderInterval, HandExamples) {
  auto i1 = cylinder_interval(Window({1}));
  EXPECT_EQ(i1.lo, (Endpoint{1, 2}));
  EXPECT_EQ(i1.hi, (Endpoint{1, 1}));

  auto i2 = cylinder_interval(Window({2}));
  EXPECT_EQ(i2.lo, (Endpoint{1, 3}));
  EXPECT_EQ(i2.hi, (Endpoint{1, 2}));

  auto i12 = cylinder_interval(Window({1, 2}));
  EXPECT_EQ(i12.lo, (Endpoint{2, 3}));
  EXPECT_EQ(i12.hi, (Endpoint{3, 4}));
}

TEST(GaussMeasure, HandExamples) {
  EXPECT_NEAR(gauss_measure({{1, 2}, {1, 1}}), 2.0 - std::log2(3.0), 1e-15);
  EXPECT_NEAR(gauss_measure({{1, 2}, {1, 1}}), 0.4150375, 1e-7);
  EXPECT_DOUBLE_EQ(gauss_measure({{0, 1}, {1, 1}}), 1.0);
  EXPECT_NEAR(gauss_measure({{2, 3}, {3, 4}}), std::log2(21.0 / 20.0), 1e-15);
  EXPECT_NEAR(gauss_measure({{2, 3}, {3, 4}}), 0.0703893, 1e-7);
}

TEST(TargetDensity, HandExamples) {
  EXPECT_NEAR(target_density(Window({1})), 0.4150375, 1e-7);
  EXPECT_NEAR(target_density(Window({1, 2})), 0.0703893, 1e-7);
  EXPECT_NEAR(target_density(Window({3})), std::log2(1.0 + 1.0 / 15.0), 1e-15);
}

TEST(LevyConstant, Value) {
  EXPECT_NEAR(levy_constant(), 0.8427659, 1e-7);
  EXPECT_GT(levy_constant(), 0.84);
  EXPECT_LT(levy_constant(), 0.85);
  EXPECT_NEAR(levy_constant() * M_PI * M_PI / 12.0, std::log(2.0), 1e-15);
}

TEST(Properties, SingleDigitClosedForm) {
  for (Int a = 1; a <= 1'000'000; ++a) {
    const double closed = std::log1p(1.0 / (static_cast<double>(a) * static_cast<double>(a + 2))) / std::log(2.0);
    const double measured = gauss_measure(cylinder_interval(Window({a})));
    ASSERT_NEAR(measured, closed, 1e-12 * closed) << a;
    ASSERT_DOUBLE_EQ(single_digit_density(a), target_density(Window({a})));
  }
}

TEST(Properties, Additivity) {
  const std::vector<Window> windows{Window({1}), Window({2}), Window({1, 2}), Window({3, 1, 4}), Window({1, 1, 1, 1})};
  for (const auto& w : windows) {
    const double whole = target_density(w);
    double partial = 0.0;
    for (Int a = 1; a <= 10'000; ++a) {
      partial += target_density(w.extended(a));
      ASSERT_LE(partial, whole * (1 + 1e-12)) << w.to_string();
    }
    EXPECT_LT(whole - partial, 2e-4 * whole) << w.to_string();
  }
}

TEST(Properties, Normalization) {
  double partial = 0.0;
  for (Int a = 1; a <= 100'000; ++a) partial += single_digit_density(a);
  // The tail beyond A telescopes to log2(1 + 1/(A+1)).
  EXPECT_NEAR(partial + std::log2(1.0 + 1.0 / 100'001.0), 1.0, 1e-10);
  EXPECT_LT(partial, 1.0);
}

TEST(Properties, EndpointsAreFareyNeighbours) {
  std::vector<Window> windows;
  for (Int a = 1; a <= 30; ++a)
    for (Int b = 1; b <= 30; ++b)
      for (Int c = 1; c <= 6; ++c) windows.push_back(Window({a, b, c}));
  for (Int a = 1; a <= 200; ++a) windows.push_back(Window({a}));
  for (const auto& w : windows) {
    const auto I = cylinder_interval(w);
    const __int128 det = static_cast<__int128>(I.lo.num) * I.hi.den - static_cast<__int128>(I.hi.num) * I.lo.den;
    ASSERT_TRUE(det == 1 || det == -1) << w.to_string();
    ASSERT_LT(I.lo.value(), I.hi.value());
    const double m = target_density(w);
    ASSERT_GT(m, 0.0);
    ASSERT_LE(m, 1.0);
  }
}

TEST(Properties, InteriorRationalsStartWithWindow) {
  for (Int q = 2; q <= 120; ++q) {
    for (Int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto d = expand(ReducedFraction(p, q));
      for (std::size_t k = 1; k <= d.size(); ++k) {
        const Window w(std::vector<Int>(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k)));
        const auto I = cylinder_interval(w);
        // lo <= p/q <= hi, exactly.
        ASSERT_LE(static_cast<__int128>(I.lo.num) * q, static_cast<__int128>(p) * I.lo.den);
        ASSERT_LE(static_cast<__int128>(p) * I.hi.den, static_cast<__int128>(I.hi.num) * q);
      }
    }
  }
}

TEST(Errors, LongWindowOverflows) {
  EXPECT_THROW(target_density(Window(std::vector<Int>(200, 1'000'000))), OverflowError);
}
