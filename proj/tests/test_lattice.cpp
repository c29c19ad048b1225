#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "metasum/errors.hpp"
#include "metasum/families.hpp"
#include "metasum/lattice.hpp"
#include "unimodular.hpp"

using namespace metasum;

namespace {

// Fraction-free Gaussian elimination; exact for the small matrices used here.
i64 bareiss_det(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  i64 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix submatrix(const IntMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  return out;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// Determinantal divisors: gcd of all k x k minors.
std::vector<i64> determinantal_divisors(const IntMatrix& a) {
  std::vector<i64> out;
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    i64 g = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        g = gcd(g, bareiss_det(submatrix(a, rows, cols)));
      });
    });
    out.push_back(g);
  }
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry(rng);
  return a;
}

void expect_valid_smith(const IntMatrix& a, const SmithForm& f) {
  ASSERT_EQ(f.U * a * f.V, f.D) << a.to_string();
  EXPECT_TRUE(test_support::is_unimodular(f.U)) << a.to_string();
  EXPECT_TRUE(test_support::is_unimodular(f.V)) << a.to_string();
  for (std::size_t i = 0; i < f.D.rows(); ++i)
    for (std::size_t j = 0; j < f.D.cols(); ++j)
      if (i != j) EXPECT_EQ(f.D(i, j), 0) << a.to_string();
  const auto diag = f.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    EXPECT_GE(diag[i], 0);
    if (i + 1 < diag.size() && diag[i] != 0) EXPECT_EQ(diag[i + 1] % diag[i], 0) << a.to_string();
    if (diag[i] == 0 && i + 1 < diag.size()) EXPECT_EQ(diag[i + 1], 0) << a.to_string();
  }
}

}  // namespace

TEST(Smith, DiagonalExample) {
  const IntMatrix a{{2, 0}, {0, 3}};
  const auto f = smith_normal_form(a);
  EXPECT_EQ(f.diagonal(), (std::vector<i64>{1, 6}));
  expect_valid_smith(a, f);
}

TEST(Smith, AbelianizationOfQuasiDihedralLike) {
  const IntMatrix a{{8, 0}, {-2, 2}, {4, 0}};
  const auto f = smith_normal_form(a);
  EXPECT_EQ(f.diagonal(), (std::vector<i64>{2, 4}));
  expect_valid_smith(a, f);
  EXPECT_EQ(abelian_quotient(a).order(), 8);
}

TEST(Smith, ZeroMatrixIsFree) {
  const IntMatrix zero(2, 2);
  const auto s = abelian_quotient(zero);
  EXPECT_EQ(s.free_rank, 2u);
  EXPECT_TRUE(s.invariant_factors.empty());
  EXPECT_FALSE(s.order().has_value());
  EXPECT_EQ(s.to_string(), "Z x Z");
}

TEST(Smith, EmptyRelationsAndFewerRows) {
  const auto s = abelian_quotient(IntMatrix::from_rows({{6, 4, 0}}, 3));
  EXPECT_EQ(s.free_rank, 2u);
  EXPECT_EQ(s.invariant_factors, (std::vector<i64>{2}));
  EXPECT_EQ(abelian_quotient(IntMatrix(0, 2)).free_rank, 2u);
  EXPECT_EQ(abelian_quotient(IntMatrix{{1}}).to_string(), "1");
}

TEST(Smith, RandomMatchesDeterminantalDivisors) {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix a = random_matrix(rng, rows, cols, 9);
    const auto f = smith_normal_form(a);
    expect_valid_smith(a, f);
    const auto dd = determinantal_divisors(a);
    const auto diag = f.diagonal();
    i64 prefix = 1;
    for (std::size_t k = 0; k < diag.size(); ++k) {
      prefix = prefix * diag[k];
      EXPECT_EQ(prefix, dd[k]) << a.to_string();
    }
  }
}

TEST(Smith, SquareOrderEqualsAbsDeterminant) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix a = random_matrix(rng, n, n, 6);
    const i64 det = bareiss_det(a);
    const auto s = abelian_quotient(a);
    if (det == 0) {
      EXPECT_GT(s.free_rank, 0u);
    } else {
      EXPECT_EQ(s.order(), det < 0 ? -det : det);
    }
  }
}

TEST(Smith, OverflowIsDetected) {
  const i64 big = i64{1} << 40;
  const IntMatrix a{{big, 0}, {0, big}};
  EXPECT_THROW(abelian_quotient(a).order(), OverflowDetected);
  EXPECT_THROW(IntMatrix{{big}} * IntMatrix{{big}}, OverflowDetected);
}

TEST(Quotient, CoordinatesAreAHomomorphism) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix a = random_matrix(rng, rows, cols, 7);
    const AbelianQuotient q(a);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto c = q.coordinates(a.row(i));
      for (std::size_t j = 0; j < cols; ++j) EXPECT_EQ(c[j], 0) << a.to_string();
    }
    std::vector<i64> x(cols), y(cols), xy(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      x[j] = static_cast<i64>(rng() % 21) - 10;
      y[j] = static_cast<i64>(rng() % 21) - 10;
      xy[j] = x[j] + y[j];
    }
    const auto cx = q.coordinates(x), cy = q.coordinates(y), cxy = q.coordinates(xy);
    for (std::size_t j = 0; j < cols; ++j) {
      const i64 m = q.moduli()[j];
      EXPECT_EQ(cxy[j], m == 0 ? cx[j] + cy[j] : mod(cx[j] + cy[j], m));
    }
  }
}

TEST(Quotient, GeneratorOrdersInAbelianization) {
  const auto p = MetacyclicParams::validate(8, 2, 2, 5);
  const AbelianQuotient q(abelianization_relations(p));
  EXPECT_EQ(q.structure().order(), 8);
  EXPECT_EQ(q.order_of({1, 0}), 4);
  EXPECT_EQ(q.order_of({0, 1}), 4);
  EXPECT_TRUE(q.generated_by({{1, 0}, {0, 1}}));
  EXPECT_FALSE(q.generated_by({{1, 0}}));
  EXPECT_EQ(q.order_of({0, 0}), 1);
}

TEST(Quotient, FreeCoordinateHasNoOrder) {
  const AbelianQuotient q(IntMatrix::from_rows({{3, 0}}, 2));
  EXPECT_EQ(q.order_of({1, 0}), 3);
  EXPECT_FALSE(q.order_of({0, 1}).has_value());
  EXPECT_FALSE(q.generated_by({{1, 0}}));
  EXPECT_TRUE(q.generated_by({{1, 0}, {0, 1}}));
}
