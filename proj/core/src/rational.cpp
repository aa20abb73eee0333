#include "gj2d/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "gj2d/error.hpp"

namespace gj2d {

Frac::Frac(mpq_class value) : v_(std::move(value)) {
  if (v_.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  v_.canonicalize();
}

Frac Frac::reduce(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  return Frac(mpq_class(n, d));
}

Frac frac_reduce(const mpz_class& n, const mpz_class& d) { return Frac::reduce(n, d); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Frac Frac::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  return reduce(parse_integer(num), parse_integer(den));
}

Frac& Frac::operator/=(const Frac& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class Frac::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Frac Frac::frac() const { return *this - Frac(floor()); }

Frac Frac::abs() const { return sign() < 0 ? -*this : *this; }

std::size_t Frac::hash() const {
  // Canonical form makes (num, den) a faithful key.
  const std::size_t h1 = std::hash<std::string>{}(v_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(v_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Frac& f) { return os << f.to_string(); }

std::ostream& operator<<(std::ostream& os, const QPoint& p) { return os << '(' << p.x << ", " << p.y << ')'; }

void QMatrix::append_row(std::span<const Frac> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(ErrorKind::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

QVector QMatrix::apply(std::span<const Frac> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) acc += a.raw() * v[c].raw();
    }
    out[r] = Frac(acc);
  }
  return out;
}

namespace {

struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivot_cols;  // pivot_cols[r] is the pivot column of row r
};

// Reduced row echelon form. Every entry is kept canonical after each update,
// which bounds coefficient growth.
Echelon rref(QMatrix m) {
  Echelon e;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      auto a = m.row(sel);
      auto b = m.row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Frac inv = Frac(1) / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(pivot_row, c).is_zero()) m(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      const Frac factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(pivot_row, c).is_zero()) m(r, c) -= factor * m(pivot_row, c);
    }
    e.pivot_cols.push_back(col);
    ++pivot_row;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = Frac(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivot_cols.size(); }

}  // namespace gj2d
