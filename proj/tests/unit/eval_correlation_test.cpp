#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "iqa/error.hpp"
#include "iqa/eval.hpp"

namespace iqa::eval {
namespace {

using Vec = std::vector<double>;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no iqa::Error thrown";
  return ErrorKind::invalid_argument;
}

Vec random_vec(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Vec v(n);
  for (double& x : v) x = normal(rng);
  return v;
}

// Independent tie grouping: count smaller and equal elements directly.
Vec rank_oracle(const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    int less = 0, equal = 0;
    for (double x : v) {
      less += x < v[i];
      equal += x == v[i];
    }
    out[i] = less + (equal + 1) / 2.0;
  }
  return out;
}

double pearson_oracle(const Vec& x, const Vec& y) {
  const double n = x.size();
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Vec{10, 20, 30}), (Vec{1, 2, 3}));
  EXPECT_EQ(rank(Vec{5, 5, 1}), (Vec{2.5, 2.5, 1}));
  EXPECT_TRUE(has_ties(Vec{5, 5, 1}));
  EXPECT_FALSE(has_ties(Vec{5, 4, 1}));
}

TEST(Rank, RandomWithTiesMatchesOracle) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(0, 30);
  Vec v(100);
  for (double& x : v) x = d(rng);
  EXPECT_EQ(rank(v), rank_oracle(v));
}

TEST(Srcc, BasicCases) {
  const Vec x{1, 2, 3, 4, 5};
  EXPECT_DOUBLE_EQ(srcc(x, x), 1.0);
  EXPECT_DOUBLE_EQ(srcc(x, Vec{5, 4, 3, 2, 1}), -1.0);
}

TEST(Srcc, TiesUseRankPearson) {
  const Vec x{1, 2, 3, 4, 5};
  const Vec y{5, 6, 7, 8, 7};
  // ranks of y: 1, 2, 3.5, 5, 3.5
  const double want = pearson_oracle(Vec{1, 2, 3, 4, 5}, Vec{1, 2, 3.5, 5, 3.5});
  EXPECT_NEAR(srcc(x, y), want, 1e-15);
  EXPECT_NEAR(srcc_rank_pearson(x, y), want, 1e-15);
  EXPECT_NEAR(want, 0.8207826816681233, 1e-12);
}

TEST(Srcc, ClosedFormAgreesWithRankPearson) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Vec x = random_vec(50, 2 * seed);
    const Vec y = random_vec(50, 2 * seed + 1);
    ASSERT_NEAR(srcc_closed_form(x, y), srcc_rank_pearson(x, y), 1e-12);
  }
}

TEST(Srcc, MonotoneInvarianceAndSymmetry) {
  const Vec x = random_vec(40, 3);
  const Vec y = random_vec(40, 4);
  const double base = srcc(x, y);
  const double kbase = krcc(x, y);
  for (const auto& f : std::vector<std::function<double(double)>>{
           [](double v) { return std::exp(v); }, [](double v) { return v * v * v; },
           [](double v) { return 3.0 * v - 7.0; }}) {
    Vec fx(x.size());
    std::transform(x.begin(), x.end(), fx.begin(), f);
    EXPECT_NEAR(srcc(fx, y), base, 1e-12);
    EXPECT_NEAR(krcc(fx, y), kbase, 1e-12);
  }
  EXPECT_DOUBLE_EQ(srcc(y, x), base);
  EXPECT_DOUBLE_EQ(krcc(y, x), kbase);
  EXPECT_NEAR(plcc(y, x), plcc(x, y), 1e-15);
}

TEST(Srcc, Errors) {
  EXPECT_EQ(kind_of([] { srcc(Vec{1, 2, 3}, Vec{1, 2}); }), ErrorKind::dimension_mismatch);
  EXPECT_EQ(kind_of([] { srcc(Vec{1, 2}, Vec{1, 2}); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { srcc(Vec{1, 1, 1}, Vec{1, 2, 3}); }), ErrorKind::degenerate_input);
  EXPECT_EQ(kind_of([] { plcc(Vec{1, 2, 3}, Vec{4, 4, 4}); }), ErrorKind::degenerate_input);
}

double tau_b_oracle(const Vec& x, const Vec& y) {
  double concordant = 0, discordant = 0, tx = 0, ty = 0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0 && dy == 0) continue;
      if (dx == 0) {
        ++tx;
      } else if (dy == 0) {
        ++ty;
      } else if (dx * dy > 0) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  return (concordant - discordant) /
         std::sqrt((concordant + discordant + tx) * (concordant + discordant + ty));
}

TEST(Krcc, OrderCasesAndOracle) {
  const Vec x{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(krcc(x, x), 1.0);
  EXPECT_DOUBLE_EQ(krcc(x, Vec{4, 3, 2, 1}), -1.0);
  const Vec a = random_vec(50, 5);
  const Vec b = random_vec(50, 6);
  EXPECT_NEAR(krcc(a, b), tau_b_oracle(a, b), 1e-12);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(0, 6);
  Vec ta(50), tb(50);
  for (int i = 0; i < 50; ++i) {
    ta[i] = d(rng);
    tb[i] = d(rng);
  }
  EXPECT_NEAR(krcc(ta, tb), tau_b_oracle(ta, tb), 1e-12);
}

TEST(Plcc, AffineAndOracle) {
  const Vec x = random_vec(30, 8);
  Vec y(x.size()), neg(x.size());
  std::transform(x.begin(), x.end(), y.begin(), [](double v) { return 2 * v + 3; });
  std::transform(x.begin(), x.end(), neg.begin(), [](double v) { return -v; });
  EXPECT_NEAR(plcc(x, y), 1.0, 1e-15);
  EXPECT_NEAR(plcc(x, neg), -1.0, 1e-15);
  const Vec z = random_vec(30, 9);
  EXPECT_NEAR(plcc(x, z), pearson_oracle(x, z), 1e-12);
  EXPECT_LE(std::abs(plcc(x, z)), 1.0);
}

}  // namespace
}  // namespace iqa::eval
