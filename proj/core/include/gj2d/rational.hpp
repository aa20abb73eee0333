#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gj2d {

/// Exact rational number in canonical form: positive denominator, numerator
/// and denominator coprime. Every value the library decides on is a Frac.
class Frac {
 public:
  Frac() = default;
  Frac(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Frac(const mpz_class& value) : v_(value) {}
  explicit Frac(mpq_class value);

  /// n/d reduced; throws Error(DivisionByZero) when d == 0.
  static Frac reduce(const mpz_class& n, const mpz_class& d);
  /// Parses "n", "-n", "n/d". Throws Error(InvalidArgument) on malformed text.
  static Frac parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  mpz_class floor() const;
  /// Fractional part, in [0, 1).
  Frac frac() const;
  Frac abs() const;
  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }

  Frac operator-() const { return Frac(mpq_class(-v_)); }
  Frac& operator+=(const Frac& o) { v_ += o.v_; return *this; }
  Frac& operator-=(const Frac& o) { v_ -= o.v_; return *this; }
  Frac& operator*=(const Frac& o) { v_ *= o.v_; return *this; }
  Frac& operator/=(const Frac& o);

  friend Frac operator+(Frac a, const Frac& b) { return a += b; }
  friend Frac operator-(Frac a, const Frac& b) { return a -= b; }
  friend Frac operator*(Frac a, const Frac& b) { return a *= b; }
  friend Frac operator/(Frac a, const Frac& b) { return a /= b; }

  friend bool operator==(const Frac& a, const Frac& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Frac& f);

/// Free-function spelling of Frac::reduce.
Frac frac_reduce(const mpz_class& n, const mpz_class& d);

struct QPoint {
  Frac x;
  Frac y;

  friend QPoint operator+(const QPoint& a, const QPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend QPoint operator-(const QPoint& a, const QPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend QPoint operator*(const Frac& s, const QPoint& p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const QPoint&, const QPoint&) = default;
  friend auto operator<=>(const QPoint&, const QPoint&) = default;

  /// Componentwise reduction mod 1 into [0,1)^2.
  QPoint frac() const { return {x.frac(), y.frac()}; }
  bool is_integral() const { return x.is_integer() && y.is_integer(); }
};

std::ostream& operator<<(std::ostream& os, const QPoint& p);

using QVector = std::vector<Frac>;

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Frac& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Frac& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Frac> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Frac> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Frac> values);

  QVector apply(std::span<const Frac> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Frac> data_;
};

/// Basis of {v : m v = 0}, by Gauss-Jordan elimination over Q.
///
/// Columns are scanned left to right and the first row with a nonzero entry
/// in the current column becomes the pivot, so the output is reproducible.
/// The basis vector attached to free column j has a 1 in position j and zeros
/// in every other free column. Empty iff m has full column rank.
std::vector<QVector> kernel_basis(const QMatrix& m);

std::size_t rank(const QMatrix& m);

}  // namespace gj2d

template <>
struct std::hash<gj2d::Frac> {
  std::size_t operator()(const gj2d::Frac& f) const noexcept { return f.hash(); }
};
