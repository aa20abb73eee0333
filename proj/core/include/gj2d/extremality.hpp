#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "gj2d/covering_graph.hpp"
#include "gj2d/perturbation.hpp"
#include "gj2d/pwl_function.hpp"

namespace gj2d {

/// The system (E_n(π)) in variables φ(a/n, b/n), indexed a * n + b:
///   φ(0) = 0,  φ(f) = 1,  φ(u) + φ(v) − φ(u + v) = 0 for additive grid pairs {u, v}.
struct AdditivitySystem {
  struct Term {
    std::size_t var;
    long coef;
  };
  using Row = std::vector<Term>;  // sorted by var, no zero coefficients

  int n = 1;
  std::size_t f_var = 0;
  /// Row 0 pins φ(0), row 1 pins φ(f); the rest are additivity rows.
  std::vector<Row> rows;
  std::vector<std::array<GridPoint, 2>> pairs;  // additive pair behind rows[r + 2]

  std::size_t variables() const { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n); }
  /// Right-hand side of row r.
  Frac rhs(std::size_t r) const { return r == 1 ? Frac(1) : Frac(0); }
  /// Dense coefficient matrix (homogeneous part).
  QMatrix matrix() const;
  /// Whether φ satisfies every row, with the right-hand side scaled by `scale`
  /// (1 for solutions, 0 for kernel vectors).
  bool satisfied_by(const QVector& phi, const Frac& scale = Frac(1)) const;
};

/// Rows for every unordered additive pair of grid points of (1/n)Z^2 ∩ [0,1)^2.
/// n must be a multiple of q.
AdditivitySystem assemble_system(const PwlFunction& pi, int n);

/// Basis of the homogeneous kernel, equal to kernel_basis(sys.matrix()).
std::vector<QVector> system_kernel(const AdditivitySystem& sys);

/// Dimension of the affine solution set.
std::size_t solution_space_dim(const AdditivitySystem& sys);

/// π on (1/n)Z^2 ∩ [0,1)^2, indexed a * n + b.
std::vector<Frac> restrict_to_finite_group(const PwlFunction& pi, int n);

/// Whether the finite-group function given by a table over (1/n)Z^2 is the
/// unique solution of its own additivity system.
bool finite_group_system_unique(const std::vector<Frac>& table, int n, const QPoint& f);

struct ExtremalityVerdict {
  bool extreme = false;
  int m = 3;
  std::size_t kernel_dim = 0;
  Genuinely2dReport genuinely_2d;
  bool fully_covered = false;
  /// Present iff not extreme.
  std::optional<Perturbation> certificate;
  std::optional<Frac> epsilon;
  std::optional<std::pair<PwlFunction, PwlFunction>> splits;
};

/// Kernel dimension of (E_{mq}(π)) without any precondition beyond minimality.
std::size_t kernel_dimension(const PwlFunction& pi, int m);

/// Extremality of a minimal, diagonally constrained π with f a vertex.
/// Throws Error with kind FNotVertex, MTooSmall, NotMinimal or
/// NotDiagonallyConstrained when a precondition fails.
ExtremalityVerdict decide_extreme(const PwlFunction& pi, int m = 3);

}  // namespace gj2d
