#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gj2d/pwl_function.hpp"

namespace gj2d {

enum class ViolationKind { NotZeroAtOrigin, SubadditivityFail, SymmetryFail, FNotVertex };

std::string_view to_string(ViolationKind kind) noexcept;

/// One failed condition. Points are in units of 1/n where n is the grid the
/// test ran on; `value` is π(0), Δπ(x, y), or π(x) + π(f − x) respectively.
struct Violation {
  ViolationKind kind;
  GridPoint x;
  std::optional<GridPoint> y;
  Frac value;
};

struct MinimalityReport {
  bool minimal = true;
  int n = 0;
  std::vector<Violation> violations;
};

inline constexpr std::size_t kDefaultMaxViolations = 10;

/// Minimality test on the grid of P_q: π(0) = 0, Δπ ≥ 0 on grid pairs and
/// π(x) + π(f − x) = 1 on grid points. Throws Error(FNotVertex) if f is not a
/// vertex of P_q.
MinimalityReport check_minimal(const PwlFunction& pi, std::size_t max_violations = kDefaultMaxViolations);

/// The same test on the finer grid (1/n)Z^2; n must be a multiple of q.
MinimalityReport check_minimal_at(const PwlFunction& pi, int n,
                                  std::size_t max_violations = kDefaultMaxViolations);

}  // namespace gj2d
