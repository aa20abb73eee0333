#include "gj2d/delta_complex.hpp"

#include <algorithm>

#include "gj2d/error.hpp"
#include "gj2d/parallel.hpp"

namespace gj2d {

std::string_view to_string(FaceType t) noexcept {
  switch (t) {
    case FaceType::Type1: return "type1";
    case FaceType::Type2: return "type2";
    case FaceType::Type3: return "type3";
    case FaceType::Type4: return "type4";
  }
  return "?";
}

DeltaFace DeltaFace::canonical() const {
  const FaceId ni = i.normalized();
  const FaceId nj = j.normalized();
  const GridPoint shift = (ni.anchor - i.anchor) + (nj.anchor - j.anchor);
  return {ni, nj, k.translated(shift)};
}

std::vector<GridPair> DeltaFace::grid_pairs() const { return gj2d::grid_pairs(i, j, k); }

DeltaFace DeltaFace::swap_canonical() const { return std::min(*this, swapped()); }

std::string to_string(const DeltaFace& face) {
  return "(" + to_string(face.i) + ", " + to_string(face.j) + ", " + to_string(face.k) + ")";
}

std::vector<GridPair> grid_pairs(const FaceId& i, const FaceId& j, const FaceId& k) {
  const auto vi = i.vertices();
  const auto vj = j.vertices();
  const auto vk = k.vertices();
  std::vector<GridPair> out;
  for (auto x : vi)
    for (auto y : vj)
      if (std::find(vk.begin(), vk.end(), x + y) != vk.end()) out.emplace_back(x, y);
  return out;
}

std::optional<DeltaFace> project(const FaceId& i, const FaceId& j, const FaceId& k) {
  if (i.q != j.q || i.q != k.q) throw Error(ErrorKind::InvalidArgument, "faces of different complexes");
  const int q = i.q;
  const BVector bi = support(i);
  const BVector bj = support(j);
  const BVector bk = support(k);
  auto p3 = face_of_region(meet(bi + bj, bk), q);
  if (!p3) return std::nullopt;
  auto p1 = face_of_region(meet(bk + negate(bj), bi), q);
  auto p2 = face_of_region(meet(bk + negate(bi), bj), q);
  if (!p1 || !p2) throw Error(ErrorKind::Internal, "inconsistent projections");
  return DeltaFace{*p1, *p2, *p3}.canonical();
}

namespace {

bool in_face(const BVector& b, const QPoint& p, int q) {
  const Frac qq(q);
  const Frac x = p.x * qq;
  const Frac y = p.y * qq;
  const std::array<Frac, 6> rows{x, -x, y, -y, x + y, -(x + y)};
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r] > Frac(b[r])) return false;
  return true;
}

}  // namespace

bool contains_pair(const DeltaFace& face, const QPoint& x, const QPoint& y) {
  const DeltaFace f = face.canonical();
  const BVector bi = support(f.i);
  const BVector bj = support(f.j);
  const BVector bk = support(f.k);
  const QPoint x0 = x.frac();
  const QPoint y0 = y.frac();
  // I and J lie in [0,1]^2, so only these translates can meet them.
  for (long sx = 0; sx <= 1; ++sx) {
    for (long sy = 0; sy <= 1; ++sy) {
      const QPoint xs{x0.x + Frac(sx), x0.y + Frac(sy)};
      if (!in_face(bi, xs, f.q())) continue;
      for (long tx = 0; tx <= 1; ++tx) {
        for (long ty = 0; ty <= 1; ++ty) {
          const QPoint yt{y0.x + Frac(tx), y0.y + Frac(ty)};
          if (in_face(bj, yt, f.q()) && in_face(bk, xs + yt, f.q())) return true;
        }
      }
    }
  }
  return false;
}

bool delta_face_contains(const DeltaFace& outer, const DeltaFace& inner) {
  const long q = outer.q();
  const BVector bi = support(outer.i);
  const BVector bj = support(outer.j);
  const BVector bk = support(outer.k);
  const auto pairs = inner.grid_pairs();
  for (long sx = -1; sx <= 1; ++sx) {
    for (long sy = -1; sy <= 1; ++sy) {
      for (long tx = -1; tx <= 1; ++tx) {
        for (long ty = -1; ty <= 1; ++ty) {
          const GridPoint s{sx * q, sy * q};
          const GridPoint t{tx * q, ty * q};
          const bool all = std::all_of(pairs.begin(), pairs.end(), [&](const GridPair& p) {
            const GridPoint x = p.first + s;
            const GridPoint y = p.second + t;
            return in_region(bi, x) && in_region(bj, y) && in_region(bk, x + y);
          });
          if (all) return true;
        }
      }
    }
  }
  return false;
}

std::vector<DeltaFace> additive_faces(const PwlFunction& pi) {
  const int q = pi.q();
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        for (long d = 0; d < q; ++d) {
          const Frac v = grid_delta(pi, {a, b}, {c, d});
          if (v.sign() < 0)
            throw Error(ErrorKind::NotSubadditive, "Δπ((" + std::to_string(a) + "," + std::to_string(b) + "), (" +
                                                       std::to_string(c) + "," + std::to_string(d) + "))/" +
                                                       std::to_string(q) + " = " + v.to_string());
        }

  const auto faces = canonical_faces(q);
  std::vector<std::vector<DeltaFace>> found(faces.size());
  parallel_for(faces.size(), [&](std::size_t n) {
    const FaceId& i = faces[n];
    for (const FaceId& j : faces) {
      for (const FaceId& k : minkowski_sum(i, j)) {
        const auto pairs = grid_pairs(i, j, k);
        if (pairs.empty()) continue;
        const bool additive = std::all_of(pairs.begin(), pairs.end(), [&](const GridPair& p) {
          return grid_delta(pi, p.first, p.second).is_zero();
        });
        if (additive) found[n].push_back(*project(i, j, k));
      }
    }
  });
  std::vector<DeltaFace> out;
  for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

FaceId hull_face(std::vector<GridPoint> points, int q) {
  auto f = face_from_points(points, q);
  if (!f) throw Error(ErrorKind::Internal, "projection is not a face of P_q");
  return *f;
}

bool has_vertex(const std::vector<GridPoint>& vs, GridPoint p) { return std::find(vs.begin(), vs.end(), p) != vs.end(); }

}  // namespace

std::vector<DeltaFace> maximal_faces(const std::vector<DeltaFace>& additive) {
  // Every proper face of F(I,J,K) is F(I',J',K') for faces I' ⊆ I, J' ⊆ J,
  // K' ⊆ K; its lattice points are the pairs of F that lie in I' × J' with
  // sum in K'. Mark every proper face found this way as non-maximal.
  std::vector<std::vector<DeltaFace>> below(additive.size());
  parallel_for(additive.size(), [&](std::size_t n) {
    const DeltaFace& g = additive[n];
    const int q = g.q();
    const auto pairs = g.grid_pairs();
    for (const FaceId& i : subfaces(g.i)) {
      const auto vi = i.vertices();
      for (const FaceId& j : subfaces(g.j)) {
        const auto vj = j.vertices();
        for (const FaceId& k : subfaces(g.k)) {
          const auto vk = k.vertices();
          std::vector<GridPoint> xs, ys, zs;
          for (const auto& [x, y] : pairs) {
            if (has_vertex(vi, x) && has_vertex(vj, y) && has_vertex(vk, x + y)) {
              xs.push_back(x);
              ys.push_back(y);
              zs.push_back(x + y);
            }
          }
          if (xs.empty()) continue;
          const DeltaFace h = DeltaFace{hull_face(xs, q), hull_face(ys, q), hull_face(zs, q)}.canonical();
          if (h != g) below[n].push_back(h);
        }
      }
    }
  });
  std::vector<DeltaFace> non_maximal;
  for (auto& v : below) non_maximal.insert(non_maximal.end(), v.begin(), v.end());
  std::sort(non_maximal.begin(), non_maximal.end());
  non_maximal.erase(std::unique(non_maximal.begin(), non_maximal.end()), non_maximal.end());

  std::vector<DeltaFace> out;
  for (const auto& g : additive)
    if (!std::binary_search(non_maximal.begin(), non_maximal.end(), g)) out.push_back(g);
  return out;
}

std::vector<DeltaFace> maximal_additive_faces(const PwlFunction& pi) {
  std::vector<DeltaFace> out;
  for (const auto& g : maximal_faces(additive_faces(pi))) out.push_back(g.swap_canonical());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_symmetry_face(const DeltaFace& face, GridPoint f_grid) {
  const int q = face.q();
  auto is_point_at = [q](const FaceId& g, GridPoint p) {
    return g.kind == FaceKind::Vertex && floor_mod(g.anchor.x - p.x, q) == 0 && floor_mod(g.anchor.y - p.y, q) == 0;
  };
  return is_point_at(face.k, f_grid) || is_point_at(face.i, {0, 0}) || is_point_at(face.j, {0, 0});
}

FaceType face_type(const DeltaFace& face) {
  int triangles = 0;
  int points = 0;
  int diagonals = 0;
  for (const FaceId* g : {&face.i, &face.j, &face.k}) {
    if (is_horizontal_or_vertical(g->kind))
      throw Error(ErrorKind::NotDiagonallyConstrainedFace, to_string(face));
    if (is_triangle(g->kind)) ++triangles;
    if (g->kind == FaceKind::Vertex) ++points;
    if (g->kind == FaceKind::EdgeD) ++diagonals;
  }
  if (triangles == 0) return FaceType::Type1;
  if (triangles == 3) return FaceType::Type2;
  if (triangles == 2 && points == 1) return FaceType::Type3;
  if (triangles == 2 && diagonals == 1) return FaceType::Type4;
  throw Error(ErrorKind::Internal, "unexpected projection pattern " + to_string(face));
}

DiagonalReport is_diagonally_constrained(const std::vector<DeltaFace>& emax) {
  for (const auto& g : emax)
    for (const FaceId* p : {&g.i, &g.j, &g.k})
      if (is_horizontal_or_vertical(p->kind)) return {false, g};
  return {true, std::nullopt};
}

DiagonalReport is_diagonally_constrained(const PwlFunction& pi) {
  return is_diagonally_constrained(maximal_faces(additive_faces(pi)));
}

}  // namespace gj2d
