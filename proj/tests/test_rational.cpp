#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "gj2d/error.hpp"
#include "gj2d/rational.hpp"
#include "oracles.hpp"

using gj2d::Frac;
using gj2d::QMatrix;
using gj2d::QPoint;

TEST(Frac, ReduceNormalizes) {
  EXPECT_EQ(Frac::reduce(2, 4), Frac::reduce(1, 2));
  EXPECT_EQ(Frac::reduce(2, 4).numerator(), 1);
  EXPECT_EQ(Frac::reduce(2, 4).denominator(), 2);
  const Frac neg = Frac::reduce(-3, -6);
  EXPECT_EQ(neg.numerator(), 1);
  EXPECT_EQ(neg.denominator(), 2);
  const Frac zero = Frac::reduce(0, 7);
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
  EXPECT_EQ(Frac::reduce(3, -4).to_string(), "-3/4");
}

TEST(Frac, ZeroDenominatorThrows) {
  try {
    (void)Frac::reduce(1, 0);
    FAIL() << "expected an error";
  } catch (const gj2d::Error& e) {
    EXPECT_EQ(e.kind(), gj2d::ErrorKind::DivisionByZero);
  }
  EXPECT_THROW((void)(Frac(1) / Frac(0)), gj2d::Error);
}

TEST(Frac, Parse) {
  EXPECT_EQ(Frac::parse("3/4"), Frac::reduce(3, 4));
  EXPECT_EQ(Frac::parse(" -6/8 "), Frac::reduce(-3, 4));
  EXPECT_EQ(Frac::parse("5"), Frac(5));
  EXPECT_THROW((void)Frac::parse("1/"), gj2d::Error);
  EXPECT_THROW((void)Frac::parse("a/b"), gj2d::Error);
  EXPECT_THROW((void)Frac::parse("0.5"), gj2d::Error);
}

TEST(Frac, FloorAndFrac) {
  EXPECT_EQ(Frac::reduce(-1, 3).floor(), -1);
  EXPECT_EQ(Frac::reduce(-1, 3).frac(), Frac::reduce(2, 3));
  EXPECT_EQ(Frac::reduce(7, 3).frac(), Frac::reduce(1, 3));
  EXPECT_EQ(Frac(-2).frac(), Frac(0));
  const QPoint p{Frac::reduce(-7, 5), Frac::reduce(12, 5)};
  EXPECT_EQ(p.frac(), (QPoint{Frac::reduce(3, 5), Frac::reduce(2, 5)}));
}

TEST(Frac, OrderingAndHashAgree) {
  EXPECT_LT(Frac::reduce(1, 3), Frac::reduce(1, 2));
  EXPECT_GT(Frac::reduce(-1, 3), Frac::reduce(-1, 2));
  std::unordered_set<Frac> set{Frac::reduce(2, 4), Frac::reduce(1, 2), Frac::reduce(-3, -6)};
  EXPECT_EQ(set.size(), 1U);
}

TEST(Frac, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (int t = 0; t < 300; ++t) {
    const Frac a = Frac::reduce(num(rng), den(rng));
    const Frac b = Frac::reduce(num(rng), den(rng));
    const Frac c = Frac::reduce(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(KernelBasis, Identity) {
  QMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) m(i, i) = 1;
  EXPECT_TRUE(gj2d::kernel_basis(m).empty());
  EXPECT_EQ(gj2d::rank(m), 3U);
}

TEST(KernelBasis, OneFreeVariable) {
  QMatrix m(1, 2);
  m(0, 0) = 1;
  m(0, 1) = -1;
  const auto basis = gj2d::kernel_basis(m);
  ASSERT_EQ(basis.size(), 1U);
  EXPECT_EQ(basis[0], (gj2d::QVector{Frac(1), Frac(1)}));
}

TEST(KernelBasis, RandomMatricesAgreeWithIndependentRank) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 5);
  for (int t = 0; t < 20; ++t) {
    QMatrix m(10, 12);
    // Make some rows dependent so the rank varies.
    for (std::size_t r = 0; r < 10; ++r)
      for (std::size_t c = 0; c < 12; ++c) m(r, c) = r < 6 || t % 3 == 0 ? Frac::reduce(num(rng), den(rng)) : Frac(0);
    for (std::size_t r = 6; r < 10 && t % 3 != 0; ++r)
      for (std::size_t c = 0; c < 12; ++c) m(r, c) = m(r - 6, c) * Frac(static_cast<long>(r)) - m(r - 5, c);
    const auto basis = gj2d::kernel_basis(m);
    for (const auto& v : basis)
      for (const auto& x : m.apply(v)) EXPECT_TRUE(x.is_zero());
    EXPECT_EQ(basis.size() + oracle::dense_rank(m), 12U);
    EXPECT_EQ(gj2d::rank(m), oracle::dense_rank(m));
  }
}

TEST(QMatrix, AppendRowChecksWidth) {
  QMatrix m(0, 3);
  const std::vector<Frac> row{Frac(1), Frac(2), Frac(3)};
  m.append_row(row);
  EXPECT_EQ(m.rows(), 1U);
  const std::vector<Frac> bad{Frac(1)};
  EXPECT_THROW(m.append_row(bad), gj2d::Error);
}
