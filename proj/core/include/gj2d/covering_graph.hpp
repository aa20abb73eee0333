#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gj2d/delta_complex.hpp"

namespace gj2d {

/// Triangle classes modulo Z^2 are numbered 0 .. 2q^2 - 1: lower triangles
/// first, then upper, each in (a, b) order.
std::size_t tri_index(const FaceId& triangle);
FaceId tri_from_index(std::size_t index, int q);
inline std::size_t tri_count(int q) { return 2 * static_cast<std::size_t>(q) * static_cast<std::size_t>(q); }

using TriEdge = std::pair<std::size_t, std::size_t>;

struct CoverGraph {
  int q = 1;
  std::vector<TriEdge> e_point;  // sorted, first < second
  std::vector<TriEdge> e_diag;
  std::vector<std::size_t> seeds2;  // triangles of all-triangle additive faces
  std::vector<std::size_t> seeds1;  // triangles of two-triangle, one-diagonal faces
};

/// Edges of G from faces with two triangle projections and a third that is a
/// point (E_point) or a diagonal edge (E_diag).
CoverGraph build_graph(const std::vector<DeltaFace>& faces, int q);

struct CoverReport {
  CoverGraph graph;
  std::vector<TriEdge> e_vh;
  /// Component label per class in G and in Ḡ.
  std::vector<std::size_t> g_component;
  std::vector<std::size_t> gbar_component;
  std::vector<std::size_t> s2, s1, bar_s2, bar_s1;  // sorted class indices
  bool fully_covered = false;

  int q() const { return graph.q; }
  /// Classes sharing a component with `index`.
  std::vector<std::size_t> g_component_of(std::size_t index) const;
  std::vector<std::size_t> gbar_component_of(std::size_t index) const;
};

/// Covered sets from the additive faces of a minimal, diagonally constrained π.
CoverReport covered_sets(const std::vector<DeltaFace>& additive, int q);
CoverReport covered_sets(const PwlFunction& pi);

/// Graphviz rendering of Ḡ: E_point solid, E_diag dashed, E_vh dotted; nodes
/// shaded by covered set.
std::string to_dot(const CoverReport& report);

}  // namespace gj2d
