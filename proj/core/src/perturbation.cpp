#include "gj2d/perturbation.hpp"

#include <algorithm>

#include "gj2d/error.hpp"
#include "gj2d/minimality.hpp"
#include "gj2d/parallel.hpp"

namespace gj2d {

std::string_view to_string(PerturbationFlavor flavor) noexcept {
  switch (flavor) {
    case PerturbationFlavor::PointFlavor: return "point";
    case PerturbationFlavor::DiagFlavor: return "diagonal";
    case PerturbationFlavor::KernelFlavor: return "kernel";
  }
  return "?";
}

namespace {

void require_m(int m) {
  if (m < 3) throw Error(ErrorKind::MTooSmall, "m = " + std::to_string(m) + " < 3");
}

template <class Value>
PwlFunction tabulate(int q, int m, Value value) {
  const int n = q * m;
  std::vector<Frac> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) values.push_back(value(i % m, j % m));
  // f only matters for minimality tests, which are never run on ψ itself.
  return PwlFunction(n, {Frac(0), Frac(0)}, std::move(values));
}

PwlFunction with_f(const PwlFunction& g, const QPoint& f) { return PwlFunction(g.q(), f, g.values()); }

/// Triangles of P_q containing the P_{mq} vertex (i, j).
std::vector<FaceId> incident_triangles(long i, long j, int q, int m) {
  const long a = floor_div(i, m);
  const long b = floor_div(j, m);
  const long u = floor_mod(i, m);
  const long v = floor_mod(j, m);
  auto L = [q](long x, long y) { return FaceId{FaceKind::TriLower, {x, y}, q}; };
  auto U = [q](long x, long y) { return FaceId{FaceKind::TriUpper, {x, y}, q}; };
  if (u == 0 && v == 0) return {L(a, b), U(a - 1, b - 1), L(a - 1, b), U(a - 1, b), L(a, b - 1), U(a, b - 1)};
  if (v == 0) return {L(a, b), U(a, b - 1)};
  if (u == 0) return {L(a, b), U(a - 1, b)};
  if (u + v == m) return {L(a, b), U(a, b)};
  return {u + v < m ? L(a, b) : U(a, b)};
}

struct DeltaScan {
  std::optional<Frac> min_positive;
  Frac max_abs;
};

DeltaScan scan_deltas(const PwlFunction& g) {
  const int n = g.q();
  const std::size_t points = static_cast<std::size_t>(n) * n;
  std::vector<DeltaScan> part(points);
  parallel_for(points, [&](std::size_t u) {
    const GridPoint x{static_cast<long>(u) / n, static_cast<long>(u) % n};
    DeltaScan s;
    for (std::size_t w = u; w < points; ++w) {
      const GridPoint y{static_cast<long>(w) / n, static_cast<long>(w) % n};
      const Frac d = grid_delta(g, x, y);
      if (d.sign() > 0 && (!s.min_positive || d < *s.min_positive)) s.min_positive = d;
      const Frac ad = d.abs();
      if (ad > s.max_abs) s.max_abs = ad;
    }
    part[u] = std::move(s);
  });
  DeltaScan total;
  for (auto& s : part) {
    if (s.min_positive && (!total.min_positive || *s.min_positive < *total.min_positive))
      total.min_positive = s.min_positive;
    if (s.max_abs > total.max_abs) total.max_abs = s.max_abs;
  }
  return total;
}

PwlFunction on_grid(const PwlFunction& pi, int n) {
  if (n % pi.q() != 0) throw Error(ErrorKind::InvalidArgument, "perturbation grid is not a refinement of P_q");
  return refine(pi, n / pi.q());
}

}  // namespace

PwlFunction psi_point(int q, int m) {
  require_m(m);
  return tabulate(q, m, [m](long u, long v) -> Frac {
    if (u == 0 || v == 0 || u + v == m) return 0;
    return u + v < m ? 1 : -1;
  });
}

PwlFunction psi_diag(int q, int m) {
  require_m(m);
  return tabulate(q, m, [m](long u, long v) -> Frac {
    const long s = (u + v) % m;
    if (s == 0 || 2 * s == m) return 0;
    return 2 * s < m ? 1 : -1;
  });
}

PwlFunction restrict_to_region(const PwlFunction& psi, int q, const std::vector<std::size_t>& region) {
  const int n = psi.q();
  if (n % q != 0) throw Error(ErrorKind::InvalidArgument, "ψ grid is not a refinement of P_q");
  const int m = n / q;
  std::vector<bool> in_region(tri_count(q), false);
  for (auto r : region) in_region.at(r) = true;
  std::vector<Frac> values;
  values.reserve(psi.values().size());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      const Frac& v = psi.at(i, j);
      if (v.is_zero()) {
        values.emplace_back(0);
        continue;
      }
      const auto tris = incident_triangles(i, j, q, m);
      const bool inside = in_region[tri_index(tris.front())];
      for (const auto& t : tris)
        if (in_region[tri_index(t)] != inside)
          throw Error(ErrorKind::Internal, "δ_R·ψ is discontinuous at (" + std::to_string(i) + "," +
                                               std::to_string(j) + ")/" + std::to_string(n));
      values.push_back(inside ? v : Frac(0));
    }
  }
  return PwlFunction(n, psi.f(), std::move(values));
}

std::optional<std::pair<GridPoint, GridPoint>> additivity_violation(const PwlFunction& pi, const PwlFunction& pbar) {
  const int n = pbar.q();
  const PwlFunction fine = on_grid(pi, n);
  const std::size_t points = static_cast<std::size_t>(n) * n;
  std::vector<std::optional<std::pair<GridPoint, GridPoint>>> hit(points);
  parallel_for(points, [&](std::size_t u) {
    const GridPoint x{static_cast<long>(u) / n, static_cast<long>(u) % n};
    for (std::size_t w = u; w < points; ++w) {
      const GridPoint y{static_cast<long>(w) / n, static_cast<long>(w) % n};
      if (grid_delta(fine, x, y).is_zero() && !grid_delta(pbar, x, y).is_zero()) {
        hit[u] = std::make_pair(x, y);
        return;
      }
    }
  });
  for (auto& h : hit)
    if (h) return h;
  return std::nullopt;
}

Perturbation build_perturbation(const PwlFunction& pi, const CoverReport& cover, int m) {
  require_m(m);
  const int q = pi.q();
  if (cover.q() != q) throw Error(ErrorKind::InvalidArgument, "cover report is for a different q");
  const GridPoint f = pi.f_grid();
  const std::size_t n = tri_count(q);

  std::vector<bool> covered(n, false);
  for (auto i : cover.s1) covered[i] = true;
  for (auto i : cover.s2) covered[i] = true;

  Perturbation p{psi_point(q, m), m, {}, PerturbationFlavor::PointFlavor};
  const auto uncovered = std::find(covered.begin(), covered.end(), false);
  if (uncovered != covered.end()) {
    p.region = cover.g_component_of(static_cast<std::size_t>(uncovered - covered.begin()));
  } else if (!cover.bar_s1.empty()) {
    p.flavor = PerturbationFlavor::DiagFlavor;
    p.base = psi_diag(q, m);
    p.region = cover.gbar_component_of(cover.bar_s1.front());
  } else {
    throw Error(ErrorKind::Covered, "every triangle class lies in the closure of S2");
  }
  p.base = with_f(restrict_to_region(p.base, q, p.region), pi.f());

  const long k = m;
  if (!p.base.at(0, 0).is_zero() || !p.base.at(f.x * k, f.y * k).is_zero())
    throw Error(ErrorKind::Internal, "perturbation does not vanish at 0 and f");
  if (std::all_of(p.base.values().begin(), p.base.values().end(), [](const Frac& v) { return v.is_zero(); }))
    throw Error(ErrorKind::DegeneratePerturbation, "perturbation is identically zero");
  if (auto bad = additivity_violation(pi, p.base))
    throw Error(ErrorKind::Internal, "E(π) ⊄ E(π̄) at ((" + std::to_string(bad->first.x) + "," +
                                         std::to_string(bad->first.y) + "), (" + std::to_string(bad->second.x) +
                                         "," + std::to_string(bad->second.y) + "))");
  return p;
}

Frac epsilon_for(const PwlFunction& pi, const Perturbation& pbar) {
  const DeltaScan bar = scan_deltas(pbar.base);
  if (bar.max_abs.is_zero()) throw Error(ErrorKind::DegeneratePerturbation, "Δπ̄ vanishes on every grid pair");
  const DeltaScan base = scan_deltas(on_grid(pi, pbar.base.q()));
  if (!base.min_positive) throw Error(ErrorKind::DegeneratePerturbation, "Δπ vanishes on every grid pair");
  return *base.min_positive / (Frac(2) * bar.max_abs);
}

std::pair<PwlFunction, PwlFunction> split(const PwlFunction& pi, const Perturbation& pbar, const Frac& epsilon) {
  const int n = pbar.base.q();
  const PwlFunction fine = on_grid(pi, n);
  std::vector<Frac> plus;
  std::vector<Frac> minus;
  plus.reserve(fine.values().size());
  minus.reserve(fine.values().size());
  for (std::size_t i = 0; i < fine.values().size(); ++i) {
    const Frac d = epsilon * pbar.base.values()[i];
    plus.push_back(fine.values()[i] + d);
    minus.push_back(fine.values()[i] - d);
  }
  PwlFunction pi1(n, pi.f(), std::move(plus));
  PwlFunction pi2(n, pi.f(), std::move(minus));
  if (pi1 == pi2) throw Error(ErrorKind::SplitNotMinimal, "π¹ = π²");
  for (const PwlFunction* g : {&pi1, &pi2}) {
    const auto report = check_minimal(*g, 1);
    if (!report.minimal) throw Error(ErrorKind::SplitNotMinimal, "split fails the minimality test at n = " + std::to_string(n));
  }
  return {std::move(pi1), std::move(pi2)};
}

}  // namespace gj2d
