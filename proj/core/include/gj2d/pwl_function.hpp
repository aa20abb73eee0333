#pragma once

#include <optional>
#include <vector>

#include "gj2d/complex.hpp"
#include "gj2d/rational.hpp"

namespace gj2d {

/// Continuous piecewise linear function over P_q, periodic modulo Z^2.
///
/// Stored by its values on the grid (1/q)Z^2 ∩ [0,1)^2, indexed value(a, b) =
/// π(a/q, b/q). Between grid points it is the affine interpolant on each
/// triangle of P_q.
class PwlFunction {
 public:
  /// `values` is row-major in the first (x) index: values[a * q + b].
  /// Throws Error(InvalidArgument) if q < 1 or the grid size is wrong.
  PwlFunction(int q, QPoint f, std::vector<Frac> values);

  int q() const { return q_; }
  const QPoint& f() const { return f_; }
  const std::vector<Frac>& values() const { return values_; }

  /// Value at the grid point (a/q, b/q), any integers a, b.
  const Frac& at(long a, long b) const { return values_[index(a, b)]; }
  const Frac& at(GridPoint p) const { return at(p.x, p.y); }
  std::size_t index(long a, long b) const {
    return static_cast<std::size_t>(floor_mod(a, q_) * q_ + floor_mod(b, q_));
  }

  /// Grid coordinates of f; throws Error(FNotVertex) if f is not a vertex of P_q.
  GridPoint f_grid() const;

  friend bool operator==(const PwlFunction&, const PwlFunction&) = default;

 private:
  int q_;
  QPoint f_;
  std::vector<Frac> values_;
};

Frac eval(const PwlFunction& pi, const QPoint& p);

/// Δπ(x, y) = π(x) + π(y) − π(x + y).
Frac delta(const PwlFunction& pi, const QPoint& x, const QPoint& y);

/// Δπ at a pair of grid points of P_q, in grid units.
inline Frac grid_delta(const PwlFunction& pi, GridPoint x, GridPoint y) {
  return pi.at(x) + pi.at(y) - pi.at(x + y);
}

/// The same function viewed over P_{mq}.
PwlFunction refine(const PwlFunction& pi, int m);

/// Sample of a function over P_{kq} back on the coarser grid of P_q.
PwlFunction restrict_to_grid(const PwlFunction& pi, int q);

struct Genuinely2dReport {
  bool genuinely_2d = true;
  /// Integer direction r with π = 0 along [0, λr] for small λ > 0.
  std::optional<GridPoint> witness;
};

/// Tests the six triangles around the origin for a direction in the tangent
/// cone along which the affine piece vanishes.
Genuinely2dReport is_genuinely_2d(const PwlFunction& pi);

/// Throws Error(FNotVertex) unless f ∈ verts(P_q) \ Z^2.
void require_f_vertex(const PwlFunction& pi);

}  // namespace gj2d
