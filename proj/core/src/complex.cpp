#include "gj2d/complex.hpp"

#include <algorithm>
#include <limits>

#include "gj2d/error.hpp"

namespace gj2d {

std::string_view to_string(FaceKind kind) noexcept {
  switch (kind) {
    case FaceKind::Vertex: return "vertex";
    case FaceKind::EdgeH: return "edge_h";
    case FaceKind::EdgeV: return "edge_v";
    case FaceKind::EdgeD: return "edge_d";
    case FaceKind::TriLower: return "tri_lower";
    case FaceKind::TriUpper: return "tri_upper";
  }
  return "?";
}

std::optional<FaceKind> face_kind_from_string(std::string_view name) noexcept {
  for (auto k : {FaceKind::Vertex, FaceKind::EdgeH, FaceKind::EdgeV, FaceKind::EdgeD, FaceKind::TriLower,
                 FaceKind::TriUpper})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::vector<GridPoint> FaceId::vertices() const {
  const auto [a, b] = anchor;
  switch (kind) {
    case FaceKind::Vertex: return {{a, b}};
    case FaceKind::EdgeH: return {{a, b}, {a + 1, b}};
    case FaceKind::EdgeV: return {{a, b}, {a, b + 1}};
    case FaceKind::EdgeD: return {{a, b + 1}, {a + 1, b}};
    case FaceKind::TriLower: return {{a, b}, {a, b + 1}, {a + 1, b}};
    case FaceKind::TriUpper: return {{a, b + 1}, {a + 1, b}, {a + 1, b + 1}};
  }
  return {};
}

FaceId FaceId::normalized() const { return {kind, {floor_mod(anchor.x, q), floor_mod(anchor.y, q)}, q}; }

bool FaceId::is_normalized() const { return anchor.x >= 0 && anchor.x < q && anchor.y >= 0 && anchor.y < q; }

QPoint FaceId::barycenter() const {
  const auto vs = vertices();
  long sx = 0;
  long sy = 0;
  for (auto v : vs) {
    sx += v.x;
    sy += v.y;
  }
  const long den = static_cast<long>(vs.size()) * q;
  return {Frac::reduce(sx, den), Frac::reduce(sy, den)};
}

std::string to_string(const FaceId& face) {
  return std::string(to_string(face.kind)) + "(" + std::to_string(face.anchor.x) + "," +
         std::to_string(face.anchor.y) + ")/" + std::to_string(face.q);
}

namespace {

constexpr std::array<std::array<int, 2>, 6> kRows{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}};

}  // namespace

bool in_region(const BVector& b, GridPoint p) {
  for (std::size_t i = 0; i < kRows.size(); ++i)
    if (kRows[i][0] * p.x + kRows[i][1] * p.y > b[i]) return false;
  return true;
}

BVector support(const FaceId& face) {
  BVector b;
  b.fill(std::numeric_limits<long>::min());
  for (auto v : face.vertices())
    for (std::size_t i = 0; i < kRows.size(); ++i) b[i] = std::max(b[i], kRows[i][0] * v.x + kRows[i][1] * v.y);
  return b;
}

std::array<Frac, 6> face_as_b_vector(const FaceId& face) {
  const BVector b = support(face);
  std::array<Frac, 6> out;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = Frac::reduce(b[i], face.q);
  return out;
}

BVector operator+(const BVector& a, const BVector& b) {
  BVector out;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

BVector meet(const BVector& a, const BVector& b) {
  BVector out;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

BVector negate(const BVector& b) { return {b[1], b[0], b[3], b[2], b[5], b[4]}; }

std::vector<GridPoint> lattice_points(const BVector& b) {
  std::vector<GridPoint> out;
  for (long x = -b[1]; x <= b[0]; ++x)
    for (long y = -b[3]; y <= b[2]; ++y)
      if (x + y <= b[4] && -x - y <= b[5]) out.push_back({x, y});
  return out;
}

std::optional<FaceId> face_from_points(std::span<const GridPoint> points, int q) {
  std::vector<GridPoint> p(points.begin(), points.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  switch (p.size()) {
    case 1: return FaceId{FaceKind::Vertex, p[0], q};
    case 2: {
      const GridPoint d = p[1] - p[0];
      if (d == GridPoint{1, 0}) return FaceId{FaceKind::EdgeH, p[0], q};
      if (d == GridPoint{0, 1}) return FaceId{FaceKind::EdgeV, p[0], q};
      if (d == GridPoint{1, -1}) return FaceId{FaceKind::EdgeD, {p[0].x, p[1].y}, q};
      return std::nullopt;
    }
    case 3: {
      const long a = std::min({p[0].x, p[1].x, p[2].x});
      const long b = std::min({p[0].y, p[1].y, p[2].y});
      for (auto kind : {FaceKind::TriLower, FaceKind::TriUpper}) {
        FaceId f{kind, {a, b}, q};
        auto vs = f.vertices();
        std::sort(vs.begin(), vs.end());
        if (vs == p) return f;
      }
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

std::optional<FaceId> face_of_region(const BVector& b, int q) {
  const auto pts = lattice_points(b);
  if (pts.empty()) return std::nullopt;
  auto face = face_from_points(pts, q);
  if (!face) throw Error(ErrorKind::Internal, "region is not a single face of P_q");
  return face;
}

FaceSet::FaceSet(std::vector<FaceId> faces) : faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

bool FaceSet::contains(const FaceId& f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

std::vector<FaceId> FaceSet::maximal() const {
  std::vector<FaceId> out;
  for (const auto& f : faces_) {
    const bool covered = std::any_of(faces_.begin(), faces_.end(), [&](const FaceId& g) {
      return g != f && g.dimension() > f.dimension() && face_contains(g, f);
    });
    if (!covered) out.push_back(f);
  }
  return out;
}

FaceSet FaceSet::normalized() const {
  std::vector<FaceId> out;
  out.reserve(faces_.size());
  for (const auto& f : faces_) out.push_back(f.normalized());
  return FaceSet(std::move(out));
}

FaceSet faces_in_region(const BVector& b, int q) {
  std::vector<FaceId> out;
  for (auto p : lattice_points(b)) {
    for (long dx = -1; dx <= 0; ++dx) {
      for (long dy = -1; dy <= 0; ++dy) {
        for (auto kind : {FaceKind::Vertex, FaceKind::EdgeH, FaceKind::EdgeV, FaceKind::EdgeD, FaceKind::TriLower,
                          FaceKind::TriUpper}) {
          FaceId f{kind, {p.x + dx, p.y + dy}, q};
          const auto vs = f.vertices();
          if (std::find(vs.begin(), vs.end(), p) == vs.end()) continue;
          if (std::all_of(vs.begin(), vs.end(), [&](GridPoint v) { return in_region(b, v); })) out.push_back(f);
        }
      }
    }
  }
  return FaceSet(std::move(out));
}

FaceId classify_point(const QPoint& p, int q) {
  const Frac sx = p.x.frac() * Frac(q);
  const Frac sy = p.y.frac() * Frac(q);
  const long a = sx.floor().get_si();
  const long b = sy.floor().get_si();
  const Frac u = sx - Frac(a);
  const Frac v = sy - Frac(b);
  FaceKind kind;
  if (u.is_zero() && v.is_zero()) {
    kind = FaceKind::Vertex;
  } else if (v.is_zero()) {
    kind = FaceKind::EdgeH;
  } else if (u.is_zero()) {
    kind = FaceKind::EdgeV;
  } else {
    const Frac s = u + v;
    kind = s == Frac(1) ? FaceKind::EdgeD : (s < Frac(1) ? FaceKind::TriLower : FaceKind::TriUpper);
  }
  return {kind, {a, b}, q};
}

FaceSet minkowski_sum(const FaceId& i, const FaceId& j) {
  if (i.q != j.q) throw Error(ErrorKind::InvalidArgument, "faces of different complexes");
  return faces_in_region(support(i) + support(j), i.q);
}

FaceId negated(const FaceId& face) {
  std::vector<GridPoint> vs = face.vertices();
  for (auto& v : vs) v = -v;
  auto f = face_from_points(vs, face.q);
  if (!f) throw Error(ErrorKind::Internal, "negation left the complex");
  return *f;
}

FaceSet negate_face(const FaceId& face) { return FaceSet({negated(face).normalized()}); }

std::vector<FaceId> subfaces(const FaceId& face) {
  const auto vs = face.vertices();
  std::vector<FaceId> out;
  const unsigned n = static_cast<unsigned>(vs.size());
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<GridPoint> pick;
    for (unsigned k = 0; k < n; ++k)
      if (mask & (1U << k)) pick.push_back(vs[k]);
    if (auto f = face_from_points(pick, face.q)) out.push_back(*f);
  }
  return out;
}

bool face_contains(const FaceId& outer, const FaceId& inner) {
  const auto ov = outer.vertices();
  for (auto v : inner.vertices())
    if (std::find(ov.begin(), ov.end(), v) == ov.end()) return false;
  return true;
}

std::vector<FaceId> canonical_faces(int q) {
  std::vector<FaceId> out;
  out.reserve(static_cast<std::size_t>(6 * q * q));
  for (auto kind : {FaceKind::Vertex, FaceKind::EdgeH, FaceKind::EdgeV, FaceKind::EdgeD, FaceKind::TriLower,
                    FaceKind::TriUpper})
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b) out.push_back({kind, {a, b}, q});
  return out;
}

}  // namespace gj2d
