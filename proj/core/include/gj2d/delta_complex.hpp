#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gj2d/complex.hpp"
#include "gj2d/pwl_function.hpp"

namespace gj2d {

enum class FaceType { Type1, Type2, Type3, Type4 };

std::string_view to_string(FaceType t) noexcept;

using GridPair = std::pair<GridPoint, GridPoint>;

/// A face F(I,J,K) = {(x,y) : x ∈ I, y ∈ J, x + y ∈ K} of ΔP_q, stored by its
/// three projections. Canonical form translates I and J into the fundamental
/// domain and moves K by the sum of the two translations.
struct DeltaFace {
  FaceId i;
  FaceId j;
  FaceId k;

  int q() const { return i.q; }
  DeltaFace canonical() const;
  /// F(J, I, K): the image under (x, y) ↦ (y, x).
  DeltaFace swapped() const { return {j, i, k}; }
  /// Lattice points of F in grid units. F is their convex hull.
  std::vector<GridPair> grid_pairs() const;
  /// The smaller of F and its swap.
  DeltaFace swap_canonical() const;

  friend bool operator==(const DeltaFace&, const DeltaFace&) = default;
  friend auto operator<=>(const DeltaFace&, const DeltaFace&) = default;
};

std::string to_string(const DeltaFace& face);

/// Grid pairs (x, y) with x ∈ I, y ∈ J, x + y ∈ K, at absolute positions.
std::vector<GridPair> grid_pairs(const FaceId& i, const FaceId& j, const FaceId& k);

/// The face F(I,J,K) in canonical form, with I, J, K replaced by
/// p1 = (K + (−J)) ∩ I, p2 = (K + (−I)) ∩ J, p3 = (I + J) ∩ K.
/// nullopt if F is empty.
std::optional<DeltaFace> project(const FaceId& i, const FaceId& j, const FaceId& k);

/// Whether (x, y) ∈ F + (s, t) for some s, t ∈ Z^2.
bool contains_pair(const DeltaFace& face, const QPoint& x, const QPoint& y);

/// Whether F(inner) ⊆ F(outer) + (s, t) for some s, t ∈ Z^2, tested on the
/// 12-row inequality description of `outer`.
bool delta_face_contains(const DeltaFace& outer, const DeltaFace& inner);

/// Every face of ΔP_q on which Δπ vanishes, canonical, one per class modulo
/// Z^2 × Z^2. Throws Error(NotSubadditive) if Δπ < 0 at some grid pair.
std::vector<DeltaFace> additive_faces(const PwlFunction& pi);

/// Inclusion-maximal members of an additive face list (as returned by
/// additive_faces). Both members of each swap pair are kept.
std::vector<DeltaFace> maximal_faces(const std::vector<DeltaFace>& additive);

/// E_max deduplicated under the (x,y) swap, sorted.
std::vector<DeltaFace> maximal_additive_faces(const PwlFunction& pi);

/// Faces encoding the symmetry condition π(x) + π(f − x) = 1 or its
/// conjugates under permuting (x, y, f − x − y): some projection is the
/// point {0} in the I or J slot, or the point {f} in the K slot.
bool is_symmetry_face(const DeltaFace& face, GridPoint f_grid);

/// Throws Error(NotDiagonallyConstrainedFace) if a projection is a horizontal
/// or vertical edge.
FaceType face_type(const DeltaFace& face);

struct DiagonalReport {
  bool diagonally_constrained = true;
  std::optional<DeltaFace> witness;
};

DiagonalReport is_diagonally_constrained(const PwlFunction& pi);
/// Same test on a precomputed E_max.
DiagonalReport is_diagonally_constrained(const std::vector<DeltaFace>& emax);

}  // namespace gj2d
