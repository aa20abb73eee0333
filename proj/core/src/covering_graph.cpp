#include "gj2d/covering_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gj2d/error.hpp"

namespace gj2d {

std::size_t tri_index(const FaceId& triangle) {
  if (!is_triangle(triangle.kind)) throw Error(ErrorKind::InvalidArgument, "not a triangle: " + to_string(triangle));
  const FaceId t = triangle.normalized();
  const std::size_t q = static_cast<std::size_t>(t.q);
  const std::size_t upper = t.kind == FaceKind::TriUpper ? 1 : 0;
  return upper * q * q + static_cast<std::size_t>(t.anchor.x) * q + static_cast<std::size_t>(t.anchor.y);
}

FaceId tri_from_index(std::size_t index, int q) {
  const std::size_t qq = static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
  if (index >= 2 * qq) throw Error(ErrorKind::InvalidArgument, "triangle index out of range");
  const FaceKind kind = index >= qq ? FaceKind::TriUpper : FaceKind::TriLower;
  const std::size_t r = index % qq;
  return {kind, {static_cast<long>(r / static_cast<std::size_t>(q)), static_cast<long>(r % static_cast<std::size_t>(q))}, q};
}

namespace {

void sort_unique(std::vector<std::size_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique(std::vector<TriEdge>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> out(parent_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::size_t> components(std::size_t n, std::initializer_list<const std::vector<TriEdge>*> edges) {
  UnionFind uf(n);
  for (const auto* list : edges)
    for (const auto& [a, b] : *list) uf.unite(a, b);
  return uf.labels();
}

/// Classes whose component contains some member of `seeds`.
std::vector<std::size_t> closure(const std::vector<std::size_t>& label, const std::vector<std::size_t>& seeds) {
  std::vector<bool> hit(label.size(), false);
  for (auto s : seeds) hit[label[s]] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < label.size(); ++i)
    if (hit[label[i]]) out.push_back(i);
  return out;
}

std::vector<std::size_t> members(const std::vector<std::size_t>& label, std::size_t index) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label[i] == label[index]) out.push_back(i);
  return out;
}

}  // namespace

CoverGraph build_graph(const std::vector<DeltaFace>& faces, int q) {
  CoverGraph g;
  g.q = q;
  for (const auto& face : faces) {
    std::vector<const FaceId*> tris;
    const FaceId* other = nullptr;
    for (const FaceId* p : {&face.i, &face.j, &face.k}) {
      if (is_triangle(p->kind))
        tris.push_back(p);
      else
        other = p;
    }
    if (tris.size() == 3) {
      for (const auto* t : tris) g.seeds2.push_back(tri_index(*t));
      continue;
    }
    if (tris.size() != 2 || !is_point_or_diagonal(other->kind)) continue;
    const std::size_t a = tri_index(*tris[0]);
    const std::size_t b = tri_index(*tris[1]);
    if (other->kind == FaceKind::EdgeD) {
      g.seeds1.push_back(a);
      g.seeds1.push_back(b);
    }
    if (a == b) continue;
    auto& edges = other->kind == FaceKind::Vertex ? g.e_point : g.e_diag;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  sort_unique(g.e_point);
  sort_unique(g.e_diag);
  sort_unique(g.seeds1);
  sort_unique(g.seeds2);
  return g;
}

std::vector<std::size_t> CoverReport::g_component_of(std::size_t index) const { return members(g_component, index); }

std::vector<std::size_t> CoverReport::gbar_component_of(std::size_t index) const {
  return members(gbar_component, index);
}

CoverReport covered_sets(const std::vector<DeltaFace>& additive, int q) {
  CoverReport r;
  r.graph = build_graph(additive, q);
  const std::size_t n = tri_count(q);

  r.g_component = components(n, {&r.graph.e_point, &r.graph.e_diag});
  r.s2 = closure(r.g_component, r.graph.seeds2);
  r.s1 = closure(r.g_component, r.graph.seeds1);

  std::vector<bool> covered(n, false);
  for (auto i : r.s1) covered[i] = true;
  for (auto i : r.s2) covered[i] = true;
  // L(a,b) meets U(a,b-1) in a horizontal edge and U(a-1,b) in a vertical one.
  for (long a = 0; a < q; ++a) {
    for (long b = 0; b < q; ++b) {
      const std::size_t lower = tri_index({FaceKind::TriLower, {a, b}, q});
      for (GridPoint u : {GridPoint{a, b - 1}, GridPoint{a - 1, b}}) {
        const std::size_t upper = tri_index(FaceId{FaceKind::TriUpper, u, q});
        if (covered[lower] && covered[upper]) r.e_vh.emplace_back(std::min(lower, upper), std::max(lower, upper));
      }
    }
  }
  sort_unique(r.e_vh);

  r.gbar_component = components(n, {&r.graph.e_point, &r.graph.e_diag, &r.e_vh});
  r.bar_s2 = closure(r.gbar_component, r.s2);
  std::set_difference(r.s1.begin(), r.s1.end(), r.bar_s2.begin(), r.bar_s2.end(), std::back_inserter(r.bar_s1));
  r.fully_covered = r.bar_s2.size() == n;
  return r;
}

CoverReport covered_sets(const PwlFunction& pi) { return covered_sets(additive_faces(pi), pi.q()); }

std::string to_dot(const CoverReport& report) {
  const int q = report.q();
  const std::size_t n = tri_count(q);
  auto in = [](const std::vector<std::size_t>& v, std::size_t i) { return std::binary_search(v.begin(), v.end(), i); };
  std::ostringstream out;
  out << "graph covering {\n  node [shape=box, style=filled];\n";
  for (std::size_t i = 0; i < n; ++i) {
    const FaceId t = tri_from_index(i, q);
    const char* color = in(report.bar_s2, i) ? "lightblue" : in(report.bar_s1, i) ? "khaki" : "white";
    out << "  t" << i << " [label=\"" << (t.kind == FaceKind::TriLower ? "L(" : "U(") << t.anchor.x << ',' << t.anchor.y << ')' 
        << "\", fillcolor=" << color << "];\n";
  }
  for (const auto& [a, b] : report.graph.e_point) out << "  t" << a << " -- t" << b << ";\n";
  for (const auto& [a, b] : report.graph.e_diag) out << "  t" << a << " -- t" << b << " [style=dashed];\n";
  for (const auto& [a, b] : report.e_vh) out << "  t" << a << " -- t" << b << " [style=dotted];\n";
  out << "}\n";
  return out.str();
}

}  // namespace gj2d
