#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gj2d/covering_graph.hpp"
#include "gj2d/pwl_function.hpp"

namespace gj2d {

enum class PerturbationFlavor { PointFlavor, DiagFlavor, KernelFlavor };

std::string_view to_string(PerturbationFlavor flavor) noexcept;

struct Perturbation {
  PwlFunction base;                 // π̄ over P_{mq}
  int m = 3;
  std::vector<std::size_t> region;  // triangle classes of P_q; empty means global
  PerturbationFlavor flavor = PerturbationFlavor::KernelFlavor;
};

/// ψ^m_{q,●}: 1 at the interior P_{mq} vertices of the lower fundamental
/// triangle, 0 on its boundary, odd under x ↦ (1/q,1/q) − x, and periodic
/// modulo (1/q)Z^2. Throws Error(MTooSmall) if m < 3.
PwlFunction psi_point(int q, int m);

/// ψ^m_{q,◇}: with 1·x ≡ i/(mq) (mod 1/q), value 1 if 1 ≤ i < m/2, −1 if
/// m/2 < i ≤ m − 1, and 0 if i = 0 or 2i = m. Throws Error(MTooSmall) if m < 3.
PwlFunction psi_diag(int q, int m);

/// δ_R · ψ for a set R of triangle classes of P_q, as a function over P_{mq}.
/// Throws Error(Internal) if the product is discontinuous across ∂R.
PwlFunction restrict_to_region(const PwlFunction& psi, int q, const std::vector<std::size_t>& region);

/// First grid pair (in units of 1/n, n = π̄'s grid) with Δπ = 0 but Δπ̄ ≠ 0.
std::optional<std::pair<GridPoint, GridPoint>> additivity_violation(const PwlFunction& pi, const PwlFunction& pbar);

/// Restricted equivariant perturbation for an incompletely covered π.
/// Throws Error(Covered) when neither flavor applies, Error(MTooSmall) if m < 3.
Perturbation build_perturbation(const PwlFunction& pi, const CoverReport& cover, int m);

/// ½ · min{Δπ > 0} / max|Δπ̄| over grid pairs of π̄'s grid.
/// Throws Error(DegeneratePerturbation) if Δπ̄ vanishes on every grid pair.
Frac epsilon_for(const PwlFunction& pi, const Perturbation& pbar);

/// π ± ε π̄ over P_{mq}. Throws Error(SplitNotMinimal) if either fails the
/// minimality test at resolution mq.
std::pair<PwlFunction, PwlFunction> split(const PwlFunction& pi, const Perturbation& pbar, const Frac& epsilon);

}  // namespace gj2d
