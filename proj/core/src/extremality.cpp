#include "gj2d/extremality.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "gj2d/delta_complex.hpp"
#include "gj2d/error.hpp"
#include "gj2d/minimality.hpp"
#include "gj2d/parallel.hpp"

namespace gj2d {

QMatrix AdditivitySystem::matrix() const {
  QMatrix m(rows.size(), variables());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& t : rows[r]) m(r, t.var) = Frac(t.coef);
  return m;
}

bool AdditivitySystem::satisfied_by(const QVector& phi, const Frac& scale) const {
  if (phi.size() != variables()) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Frac s;
    for (const auto& t : rows[r]) s += Frac(t.coef) * phi[t.var];
    if (s != scale * rhs(r)) return false;
  }
  return true;
}

AdditivitySystem assemble_system(const PwlFunction& pi, int n) {
  if (n < 1 || n % pi.q() != 0) throw Error(ErrorKind::InvalidArgument, "n must be a multiple of q");
  const PwlFunction fine = refine(pi, n / pi.q());
  const GridPoint f = fine.f_grid();

  AdditivitySystem sys;
  sys.n = n;
  sys.f_var = fine.index(f.x, f.y);
  sys.rows.push_back({{0, 1}});
  sys.rows.push_back({{sys.f_var, 1}});

  const std::size_t points = sys.variables();
  std::vector<std::vector<std::pair<AdditivitySystem::Row, std::array<GridPoint, 2>>>> found(points);
  parallel_for(points, [&](std::size_t u) {
    const GridPoint x{static_cast<long>(u) / n, static_cast<long>(u) % n};
    for (std::size_t v = u; v < points; ++v) {
      const GridPoint y{static_cast<long>(v) / n, static_cast<long>(v) % n};
      if (!grid_delta(fine, x, y).is_zero()) continue;
      std::map<std::size_t, long> coef;
      coef[u] += 1;
      coef[v] += 1;
      coef[fine.index(x.x + y.x, x.y + y.y)] -= 1;
      AdditivitySystem::Row row;
      for (const auto& [var, c] : coef)
        if (c != 0) row.push_back({var, c});
      found[u].emplace_back(std::move(row), std::array<GridPoint, 2>{x, y});
    }
  });
  for (auto& list : found)
    for (auto& [row, pair] : list) {
      sys.rows.push_back(std::move(row));
      sys.pairs.push_back(pair);
    }
  return sys;
}

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;
constexpr u64 kPrime = (u64{1} << 61) - 1;

u64 mul_mod(u64 a, u64 b) { return static_cast<u64>((static_cast<u128>(a) * b) % kPrime); }
u64 sub_mod(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }
u64 to_mod(long c) { return c >= 0 ? static_cast<u64>(c) % kPrime : kPrime - (static_cast<u64>(-c) % kPrime); }

u64 inv_mod(u64 a) {
  u64 result = 1;
  u64 e = kPrime - 2;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return result;
}

/// Incremental reduced row echelon form over Z/p.
class ModularRref {
 public:
  explicit ModularRref(std::size_t cols) : cols_(cols), pivot_of_col_(cols, kNone) {}

  /// Returns true if the row was independent of the rows added so far.
  bool add(const AdditivitySystem::Row& row) {
    std::vector<u64> v(cols_, 0);
    for (const auto& t : row) v[t.var] = to_mod(t.coef);
    // Pivot rows vanish on every other pivot column, so only the row's own
    // support needs clearing.
    for (const auto& t : row) {
      const std::size_t p = pivot_of_col_[t.var];
      if (p == kNone || v[t.var] == 0) continue;
      const u64 e = v[t.var];
      const auto& pr = rows_[p];
      for (std::size_t c = t.var; c < cols_; ++c)
        if (pr[c] != 0) v[c] = sub_mod(v[c], mul_mod(e, pr[c]));
    }
    std::size_t lead = 0;
    while (lead < cols_ && v[lead] == 0) ++lead;
    if (lead == cols_) return false;
    const u64 s = inv_mod(v[lead]);
    for (std::size_t c = lead; c < cols_; ++c) v[c] = mul_mod(v[c], s);
    for (auto& pr : rows_) {
      const u64 e = pr[lead];
      if (e == 0) continue;
      for (std::size_t c = lead; c < cols_; ++c)
        if (v[c] != 0) pr[c] = sub_mod(pr[c], mul_mod(e, v[c]));
    }
    pivot_of_col_[lead] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }
  std::size_t pivot_of_col(std::size_t c) const { return pivot_of_col_[c]; }
  const std::vector<u64>& row(std::size_t r) const { return rows_[r]; }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  std::size_t cols_;
  std::vector<std::size_t> pivot_of_col_;
  std::vector<std::vector<u64>> rows_;
};

/// Smallest-height rational congruent to a mod p, if one exists with
/// numerator and denominator at most sqrt(p/2).
std::optional<Frac> reconstruct(u64 a) {
  const i128 bound = static_cast<i128>(1) << 30;
  i128 r0 = kPrime, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const i128 q = r0 / r1;
    const i128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const i128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || t1 > bound || -t1 > bound) return std::nullopt;
  return Frac::reduce(static_cast<long>(r1), static_cast<long>(t1));
}

bool kernel_vector_ok(const AdditivitySystem& sys, const QVector& v) { return sys.satisfied_by(v, Frac(0)); }

std::vector<QVector> exact_kernel_from(const AdditivitySystem& sys, std::vector<std::size_t> selected) {
  for (;;) {
    QMatrix m;
    for (auto r : selected) {
      std::vector<Frac> dense(sys.variables());
      for (const auto& t : sys.rows[r]) dense[t.var] = Frac(t.coef);
      m.append_row(dense);
    }
    if (selected.empty()) m = QMatrix(0, sys.variables());
    auto basis = kernel_basis(m);
    bool grew = false;
    for (std::size_t r = 0; r < sys.rows.size() && !grew; ++r) {
      for (const auto& v : basis) {
        Frac s;
        for (const auto& t : sys.rows[r]) s += Frac(t.coef) * v[t.var];
        if (!s.is_zero()) {
          selected.push_back(r);
          grew = true;
          break;
        }
      }
    }
    if (!grew) return basis;
  }
}

}  // namespace

std::vector<QVector> system_kernel(const AdditivitySystem& sys) {
  const std::size_t cols = sys.variables();
  ModularRref rref(cols);
  std::vector<std::size_t> selected;
  for (std::size_t r = 0; r < sys.rows.size() && !rref.full(); ++r)
    if (rref.add(sys.rows[r])) selected.push_back(r);
  // rank over Q is at least the rank mod p.
  if (rref.full()) return {};

  std::vector<QVector> basis;
  bool lifted = true;
  for (std::size_t j = 0; j < cols && lifted; ++j) {
    if (rref.pivot_of_col(j) != ModularRref::kNone) continue;
    QVector v(cols);
    v[j] = 1;
    for (std::size_t c = 0; c < cols && lifted; ++c) {
      const std::size_t p = rref.pivot_of_col(c);
      if (p == ModularRref::kNone) continue;
      const u64 e = rref.row(p)[j];
      if (e == 0) continue;
      auto value = reconstruct(sub_mod(0, e));
      if (!value) {
        lifted = false;
        break;
      }
      v[c] = *value;
    }
    if (lifted && !kernel_vector_ok(sys, v)) lifted = false;
    basis.push_back(std::move(v));
  }
  // Exactly verified vectors with a unit in distinct free columns span
  // cols - rank_p dimensions, which bounds the kernel from above.
  if (lifted) return basis;
  return exact_kernel_from(sys, std::move(selected));
}

std::size_t solution_space_dim(const AdditivitySystem& sys) { return system_kernel(sys).size(); }

std::vector<Frac> restrict_to_finite_group(const PwlFunction& pi, int n) {
  if (n < 1 || n % pi.q() != 0) throw Error(ErrorKind::InvalidArgument, "n must be a multiple of q");
  return refine(pi, n / pi.q()).values();
}

bool finite_group_system_unique(const std::vector<Frac>& table, int n, const QPoint& f) {
  return solution_space_dim(assemble_system(PwlFunction(n, f, table), n)) == 0;
}

std::size_t kernel_dimension(const PwlFunction& pi, int m) {
  if (m < 3) throw Error(ErrorKind::MTooSmall, "m = " + std::to_string(m) + " < 3");
  require_f_vertex(pi);
  return solution_space_dim(assemble_system(pi, m * pi.q()));
}

ExtremalityVerdict decide_extreme(const PwlFunction& pi, int m) {
  if (m < 3) throw Error(ErrorKind::MTooSmall, "m = " + std::to_string(m) + " < 3");
  require_f_vertex(pi);
  const auto minimality = check_minimal(pi, 1);
  if (!minimality.minimal) throw Error(ErrorKind::NotMinimal, "π fails the minimality test");
  const auto additive = additive_faces(pi);
  const auto diag = is_diagonally_constrained(maximal_faces(additive));
  if (!diag.diagonally_constrained)
    throw Error(ErrorKind::NotDiagonallyConstrained, "maximal additive face " + to_string(*diag.witness));

  ExtremalityVerdict verdict;
  verdict.m = m;
  verdict.genuinely_2d = is_genuinely_2d(pi);
  const CoverReport cover = covered_sets(additive, pi.q());
  verdict.fully_covered = cover.fully_covered;

  const AdditivitySystem sys = assemble_system(pi, m * pi.q());
  const auto kernel = system_kernel(sys);
  verdict.kernel_dim = kernel.size();
  verdict.extreme = kernel.empty();
  if (verdict.extreme) return verdict;

  if (!cover.fully_covered) {
    try {
      verdict.certificate = build_perturbation(pi, cover, m);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Covered) throw;
    }
  }
  if (!verdict.certificate) {
    PwlFunction pbar(sys.n, pi.f(), kernel.front());
    verdict.certificate = Perturbation{std::move(pbar), m, {}, PerturbationFlavor::KernelFlavor};
  }
  verdict.epsilon = epsilon_for(pi, *verdict.certificate);
  verdict.splits = split(pi, *verdict.certificate, *verdict.epsilon);
  return verdict;
}

}  // namespace gj2d
