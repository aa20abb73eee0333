#include "gj2d/pwl_function.hpp"

#include <array>
#include <numeric>
#include <utility>

#include "gj2d/error.hpp"

namespace gj2d {

PwlFunction::PwlFunction(int q, QPoint f, std::vector<Frac> values)
    : q_(q), f_(std::move(f)), values_(std::move(values)) {
  if (q_ < 1) throw Error(ErrorKind::InvalidArgument, "q must be positive");
  if (values_.size() != static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_))
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(q_ * q_) + " grid values");
}

GridPoint PwlFunction::f_grid() const {
  const Frac fx = f_.x * Frac(q_);
  const Frac fy = f_.y * Frac(q_);
  if (!fx.is_integer() || !fy.is_integer())
    throw Error(ErrorKind::FNotVertex, "f is not a vertex of P_" + std::to_string(q_));
  return {fx.floor().get_si(), fy.floor().get_si()};
}

Frac eval(const PwlFunction& pi, const QPoint& p) {
  const Frac q(pi.q());
  const Frac sx = p.x.frac() * q;
  const Frac sy = p.y.frac() * q;
  const long a = sx.floor().get_si();
  const long b = sy.floor().get_si();
  const Frac u = sx - Frac(a);
  const Frac v = sy - Frac(b);
  if (u + v <= Frac(1)) {
    const Frac& v00 = pi.at(a, b);
    return v00 + u * (pi.at(a + 1, b) - v00) + v * (pi.at(a, b + 1) - v00);
  }
  const Frac& v11 = pi.at(a + 1, b + 1);
  return v11 + (Frac(1) - u) * (pi.at(a, b + 1) - v11) + (Frac(1) - v) * (pi.at(a + 1, b) - v11);
}

Frac delta(const PwlFunction& pi, const QPoint& x, const QPoint& y) {
  return eval(pi, x) + eval(pi, y) - eval(pi, x + y);
}

PwlFunction refine(const PwlFunction& pi, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "refinement factor must be positive");
  if (m == 1) return pi;
  const int n = pi.q() * m;
  std::vector<Frac> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) values.push_back(eval(pi, {Frac::reduce(a, n), Frac::reduce(b, n)}));
  return PwlFunction(n, pi.f(), std::move(values));
}

PwlFunction restrict_to_grid(const PwlFunction& pi, int q) {
  if (q < 1 || pi.q() % q != 0) throw Error(ErrorKind::InvalidArgument, "grid does not divide the function's grid");
  const long k = pi.q() / q;
  std::vector<Frac> values;
  values.reserve(static_cast<std::size_t>(q) * q);
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b) values.push_back(pi.at(a * k, b * k));
  return PwlFunction(q, pi.f(), std::move(values));
}

namespace {

// The six triangles at the origin, each given by the rays of its two edges
// leaving 0. Ordered so that a diagonal embedding reports (1,-1) first.
constexpr std::array<std::pair<GridPoint, GridPoint>, 6> kOriginCones{{
    {{1, -1}, {1, 0}},
    {{1, -1}, {0, -1}},
    {{1, 0}, {0, 1}},
    {{-1, 1}, {0, 1}},
    {{-1, 0}, {-1, 1}},
    {{-1, 0}, {0, -1}},
}};

GridPoint primitive(const mpz_class& x, const mpz_class& y) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g == 0) return {0, 0};
  return {mpz_class(x / g).get_si(), mpz_class(y / g).get_si()};
}

}  // namespace

Genuinely2dReport is_genuinely_2d(const PwlFunction& pi) {
  const Frac& origin = pi.at(0, 0);
  for (const auto& [r1, r2] : kOriginCones) {
    // On the triangle, π(λ r1 + μ r2) = π(0) + λ c1 + μ c2.
    const Frac c1 = pi.at(r1) - origin;
    const Frac c2 = pi.at(r2) - origin;
    if (c1.is_zero()) return {false, r1};
    if (c2.is_zero()) return {false, r2};
    if (c1.sign() == c2.sign()) continue;
    // λ = |c2|, μ = |c1| balances the two slopes; clear denominators.
    const mpz_class lam = abs(c2.numerator()) * c1.denominator();
    const mpz_class mu = abs(c1.numerator()) * c2.denominator();
    return {false, primitive(lam * r1.x + mu * r2.x, lam * r1.y + mu * r2.y)};
  }
  return {true, std::nullopt};
}

void require_f_vertex(const PwlFunction& pi) {
  const GridPoint f = pi.f_grid();
  if (floor_mod(f.x, pi.q()) == 0 && floor_mod(f.y, pi.q()) == 0)
    throw Error(ErrorKind::FNotVertex, "f ∈ Z^2");
}

}  // namespace gj2d
