#include "gj2d/minimality.hpp"

#include <algorithm>

#include "gj2d/error.hpp"
#include "gj2d/parallel.hpp"

namespace gj2d {

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::NotZeroAtOrigin: return "not_zero_at_origin";
    case ViolationKind::SubadditivityFail: return "subadditivity_fail";
    case ViolationKind::SymmetryFail: return "symmetry_fail";
    case ViolationKind::FNotVertex: return "f_not_vertex";
  }
  return "?";
}

MinimalityReport check_minimal(const PwlFunction& pi, std::size_t max_violations) {
  require_f_vertex(pi);
  const int n = pi.q();
  const GridPoint f = pi.f_grid();
  MinimalityReport report;
  report.n = n;
  auto full = [&] { return report.violations.size() >= max_violations; };

  if (!pi.at(0, 0).is_zero())
    report.violations.push_back({ViolationKind::NotZeroAtOrigin, {0, 0}, std::nullopt, pi.at(0, 0)});

  // Pairs are scanned with x ≤ y in index order; Δπ is symmetric. Each x
  // collects its own witnesses so the merged order is deterministic.
  const std::size_t points = static_cast<std::size_t>(n) * n;
  std::vector<std::vector<Violation>> found(points);
  parallel_for(points, [&](std::size_t u) {
    const GridPoint x{static_cast<long>(u) / n, static_cast<long>(u) % n};
    for (std::size_t w = u; w < points && found[u].size() < max_violations; ++w) {
      const GridPoint y{static_cast<long>(w) / n, static_cast<long>(w) % n};
      Frac d = grid_delta(pi, x, y);
      if (d.sign() < 0) found[u].push_back({ViolationKind::SubadditivityFail, x, y, std::move(d)});
    }
  });
  for (auto& v : found)
    for (auto& e : v) {
      if (full()) break;
      report.violations.push_back(std::move(e));
    }

  for (long a = 0; a < n && !full(); ++a)
    for (long b = 0; b < n && !full(); ++b) {
      const GridPoint x{a, b};
      Frac s = pi.at(x) + pi.at(f - x);
      if (s != Frac(1)) report.violations.push_back({ViolationKind::SymmetryFail, x, std::nullopt, std::move(s)});
    }

  report.minimal = report.violations.empty();
  return report;
}

MinimalityReport check_minimal_at(const PwlFunction& pi, int n, std::size_t max_violations) {
  if (n < 1 || n % pi.q() != 0) throw Error(ErrorKind::InvalidArgument, "n must be a multiple of q");
  require_f_vertex(pi);
  return check_minimal(refine(pi, n / pi.q()), max_violations);
}

}  // namespace gj2d
