#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gj2d/rational.hpp"

// The standard triangulation P_q of the plane: vertices (1/q)Z^2, cut by
// horizontal, vertical and slope -1 lines. Faces are addressed on the integer
// lattice, i.e. in units of 1/q.

namespace gj2d {

/// Point of (1/q)Z^2 stored by its integer numerators.
struct GridPoint {
  long x = 0;
  long y = 0;

  friend GridPoint operator+(GridPoint a, GridPoint b) { return {a.x + b.x, a.y + b.y}; }
  friend GridPoint operator-(GridPoint a, GridPoint b) { return {a.x - b.x, a.y - b.y}; }
  GridPoint operator-() const { return {-x, -y}; }
  friend bool operator==(GridPoint, GridPoint) = default;
  friend auto operator<=>(GridPoint, GridPoint) = default;
};

/// Floor division and modulo with non-negative remainder.
inline long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
inline long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

enum class FaceKind : std::uint8_t { Vertex, EdgeH, EdgeV, EdgeD, TriLower, TriUpper };

std::string_view to_string(FaceKind kind) noexcept;
std::optional<FaceKind> face_kind_from_string(std::string_view name) noexcept;

inline int dimension(FaceKind k) {
  switch (k) {
    case FaceKind::Vertex: return 0;
    case FaceKind::EdgeH:
    case FaceKind::EdgeV:
    case FaceKind::EdgeD: return 1;
    default: return 2;
  }
}
inline bool is_triangle(FaceKind k) { return k == FaceKind::TriLower || k == FaceKind::TriUpper; }
inline bool is_point_or_diagonal(FaceKind k) { return k == FaceKind::Vertex || k == FaceKind::EdgeD; }
inline bool is_horizontal_or_vertical(FaceKind k) { return k == FaceKind::EdgeH || k == FaceKind::EdgeV; }

/// A face of P_q. The anchor is the lower-left lattice point of the face's cell:
///   Vertex   {(a,b)}
///   EdgeH    {(a,b),(a+1,b)}        EdgeV    {(a,b),(a,b+1)}
///   EdgeD    {(a+1,b),(a,b+1)}
///   TriLower {(a,b),(a+1,b),(a,b+1)}
///   TriUpper {(a+1,b),(a,b+1),(a+1,b+1)}
/// The anchor is absolute; normalized() picks the translate with anchor in
/// {0,...,q-1}^2, which is the canonical representative modulo Z^2.
struct FaceId {
  FaceKind kind = FaceKind::Vertex;
  GridPoint anchor;
  int q = 1;

  int dimension() const { return gj2d::dimension(kind); }
  std::vector<GridPoint> vertices() const;
  FaceId normalized() const;
  bool is_normalized() const;
  /// Translate by an offset given in units of 1/q.
  FaceId translated(GridPoint offset) const { return {kind, anchor + offset, q}; }
  /// Relative-interior barycenter as an exact point.
  QPoint barycenter() const;

  friend bool operator==(const FaceId&, const FaceId&) = default;
  friend auto operator<=>(const FaceId&, const FaceId&) = default;
};

std::string to_string(const FaceId& face);

/// Right-hand side of {x : A x <= b} for the rows
/// (x1, -x1, x2, -x2, x1+x2, -x1-x2), in units of 1/q.
using BVector = std::array<long, 6>;

/// Tight b-vector of a face: each entry is the maximum of its row over the face.
BVector support(const FaceId& face);
/// Same as support() but as exact rationals in the original coordinates.
std::array<Frac, 6> face_as_b_vector(const FaceId& face);

BVector operator+(const BVector& a, const BVector& b);
/// Componentwise minimum: the b-vector of an intersection.
BVector meet(const BVector& a, const BVector& b);
/// b-vector of -X given the b-vector of X (rows pair up under negation).
BVector negate(const BVector& b);

/// Whether A p <= b.
bool in_region(const BVector& b, GridPoint p);

/// Lattice points of {x : A x <= b}, sorted.
std::vector<GridPoint> lattice_points(const BVector& b);

/// The unique face whose vertex set is exactly `points`, if any.
std::optional<FaceId> face_from_points(std::span<const GridPoint> points, int q);

/// The region {x : A x <= b} as a single face of P_q; nullopt if empty.
/// Throws Error(Internal) if the region is a union of several faces.
std::optional<FaceId> face_of_region(const BVector& b, int q);

/// Ordered, deduplicated set of faces.
class FaceSet {
 public:
  FaceSet() = default;
  explicit FaceSet(std::vector<FaceId> faces);

  std::span<const FaceId> faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  bool contains(const FaceId& f) const;
  /// Members not contained in another member.
  std::vector<FaceId> maximal() const;
  FaceSet normalized() const;

  auto begin() const { return faces_.begin(); }
  auto end() const { return faces_.end(); }

  friend bool operator==(const FaceSet&, const FaceSet&) = default;

 private:
  std::vector<FaceId> faces_;
};

/// Every face of P_q contained in {x : A x <= b}.
FaceSet faces_in_region(const BVector& b, int q);

/// Faces of P_q on which the point is in the relative interior, after
/// reducing the point mod Z^2; anchor normalized.
FaceId classify_point(const QPoint& p, int q);

/// Faces of P_q whose union is I + J, at their absolute positions.
FaceSet minkowski_sum(const FaceId& i, const FaceId& j);

/// -I as a face at its absolute position.
FaceId negated(const FaceId& face);
/// -I, normalized. Always a single face.
FaceSet negate_face(const FaceId& face);

/// All faces of a face, including itself, at absolute positions.
std::vector<FaceId> subfaces(const FaceId& face);

/// Whether the closed face `inner` is a subset of `outer` (same absolute position).
bool face_contains(const FaceId& outer, const FaceId& inner);

/// Every face of P_q with anchor in {0,...,q-1}^2 (6 q^2 faces).
std::vector<FaceId> canonical_faces(int q);

}  // namespace gj2d
