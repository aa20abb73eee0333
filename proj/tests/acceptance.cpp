// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "gj2d/covering_graph.hpp"
#include "gj2d/delta_complex.hpp"
#include "gj2d/error.hpp"
#include "gj2d/extremality.hpp"
#include "gj2d/minimality.hpp"
#include "gj2d/perturbation.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gj2d;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PwlFunction scaled_sum(const PwlFunction& a, const PwlFunction& b, const Frac& s) {
  std::vector<Frac> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * (a.values()[i] + b.values()[i]);
  return PwlFunction(a.q(), a.f(), std::move(v));
}

Outcome golden_minimality() {
  const auto pi = support::fixture("example_q5");
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = check_minimal(pi);
  const double dt = seconds_since(t0);
  std::ostringstream s;
  s << "minimal=" << report.minimal << " violations=" << report.violations.size() << " time=" << dt << "s";
  return {report.minimal && dt < 5.0, s.str()};
}

Outcome golden_diagonal() {
  const auto report = is_diagonally_constrained(support::fixture("example_q5"));
  std::string detail = "diagonally_constrained=" + std::to_string(report.diagonally_constrained);
  if (report.witness) detail += " witness=" + to_string(*report.witness);
  return {report.diagonally_constrained, detail};
}

Outcome golden_census() {
  const auto pi = support::fixture("example_q5");
  const GridPoint f = pi.f_grid();
  std::map<FaceType, std::vector<DeltaFace>> by_type;
  for (const auto& g : maximal_additive_faces(pi))
    if (!is_symmetry_face(g, f)) by_type[face_type(g)].push_back(g);

  const DeltaFace expected_point =
      DeltaFace{{FaceKind::Vertex, {3, 3}, 5}, {FaceKind::Vertex, {3, 3}, 5}, {FaceKind::Vertex, {6, 6}, 5}}
          .canonical()
          .swap_canonical();
  const auto& points = by_type[FaceType::Type1];
  const bool point_ok = points.size() == 1 && points.front() == expected_point;

  // Containment of the printed entries, reported alongside the counts.
  std::vector<DeltaFace> all;
  for (const auto& [t, v] : by_type) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  std::size_t listed = 0;
  const auto table = support::paper_emax_table();
  for (const auto& g : table)
    if (std::binary_search(all.begin(), all.end(), g.canonical().swap_canonical())) ++listed;

  std::ostringstream s;
  s << "type2=" << by_type[FaceType::Type2].size() << " type4=" << by_type[FaceType::Type4].size()
    << " type1=" << points.size() << " type3=" << by_type[FaceType::Type3].size() << " (expected 21/5/1/0);"
    << " table entries found " << listed << "/" << table.size();
  for (const auto& g : points) s << "; type1 " << to_string(g);
  const bool counts = by_type[FaceType::Type2].size() == 21 && by_type[FaceType::Type4].size() == 5 &&
                      by_type[FaceType::Type3].empty();
  return {counts && point_ok, s.str()};
}

Outcome transfer() {
  std::ostringstream s;
  bool ok = true;
  std::vector<std::string> names = support::diagonal_fixtures();
  names.push_back("flat_horizontal_q5");
  for (const auto& name : names) {
    const auto pi = support::fixture(name);
    std::string verdicts[2];
    double worst = 0;
    for (int k = 0; k < 2; ++k) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const auto v = decide_extreme(pi, 3 + k);
        verdicts[k] = v.extreme ? "extreme" : "not_extreme";
      } catch (const Error& e) {
        verdicts[k] = std::string(to_string(e.kind()));
      }
      worst = std::max(worst, seconds_since(t0));
    }
    const bool agree = verdicts[0] == verdicts[1];
    ok = ok && agree && worst < 60.0;
    s << name << ":" << verdicts[0] << (agree ? "" : "/" + verdicts[1]) << "(" << worst << "s) ";
  }
  return {ok, s.str()};
}

Outcome positive_control() {
  const auto pi = support::fixture("gmic_q5");
  const auto v = decide_extreme(pi, 3);
  const auto sys = assemble_system(pi, 15);
  const std::size_t oracle_rank = oracle::system_rank(sys);
  std::ostringstream s;
  s << "extreme=" << v.extreme << " kernel_dim=" << v.kernel_dim << " oracle_rank=" << oracle_rank << "/"
    << sys.variables() << " rows=" << sys.rows.size();
  return {v.extreme && v.kernel_dim == 0 && oracle_rank == sys.variables(), s.str()};
}

Outcome negative_control() {
  const auto a = support::fixture("gmic_q5");
  const auto b = support::fixture("example_q5");
  const auto pi = support::fixture("averaged_q5");
  const bool construction = !(a == b) && check_minimal(a).minimal && check_minimal(b).minimal &&
                            scaled_sum(a, b, Frac::reduce(1, 2)) == pi;
  const auto v = decide_extreme(pi, 3);
  bool cert = false;
  std::ostringstream s;
  s << "construction=" << construction << " extreme=" << v.extreme;
  if (v.splits && v.certificate) {
    const auto& [p1, p2] = *v.splits;
    const int n = 3 * pi.q();
    const bool distinct = !(p1 == p2);
    const bool m1 = check_minimal_at(p1, n).minimal;
    const bool m2 = check_minimal_at(p2, n).minimal;
    const bool mean = scaled_sum(p1, p2, Frac::reduce(1, 2)) == refine(pi, 3);
    cert = distinct && m1 && m2 && mean;
    s << " flavor=" << to_string(v.certificate->flavor) << " epsilon=" << *v.epsilon << " distinct=" << distinct
      << " minimal=" << m1 << "," << m2 << " average=" << mean;
  }
  return {construction && !v.extreme && cert, s.str()};
}

// Fine-grid points of a P_q face, in units of 1/(mq).
std::vector<GridPoint> fine_points(const FaceId& face, int m) {
  BVector b = gj2d::support(face);
  for (auto& x : b) x *= m;
  return lattice_points(b);
}

Outcome psi_suite() {
  std::mt19937_64 rng(7);
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::ostringstream s;
  const std::pair<int, int> cases[] = {{3, 3}, {5, 3}, {5, 4}};
  for (const auto& [q, m] : cases) {
    const PwlFunction psis[2] = {psi_point(q, m), psi_diag(q, m)};
    std::uniform_int_distribution<long> cell(-2L * q, 2L * q);
    for (int which = 0; which < 2; ++which) {
      const PwlFunction& psi = psis[which];
      // Equivariance under (1/q)Z^2 translations and the reflections x ↦ g − x.
      for (int t = 0; t < 200; ++t) {
        const QPoint x = oracle::random_point(rng, 6L * m * q);
        const QPoint g{Frac::reduce(cell(rng), q), Frac::reduce(cell(rng), q)};
        const Frac vx = eval(psi, x);
        if (eval(psi, x + g) != vx) ++violations;
        if (eval(psi, g - x) != -vx) ++violations;
        checks += 2;
      }
      // Vanishing sets.
      for (int t = 0; t < 200; ++t) {
        QPoint p;
        if (which == 0) {
          static constexpr FaceKind edges[] = {FaceKind::Vertex, FaceKind::EdgeH, FaceKind::EdgeV, FaceKind::EdgeD};
          const FaceId e{edges[std::uniform_int_distribution<int>(0, 3)(rng)], {cell(rng), cell(rng)}, q};
          const auto vs = e.vertices();
          const Frac lam = oracle::random_point(rng, 4L * m * q).x;
          const GridPoint w = vs.back();
          const GridPoint u = vs.front();
          p = {(Frac(u.x) + lam * Frac(w.x - u.x)) / Frac(q), (Frac(u.y) + lam * Frac(w.y - u.y)) / Frac(q)};
        } else {
          const Frac x = oracle::random_point(rng, 6L * m * q).x;
          p = {x, Frac::reduce(cell(rng), q) - x};
        }
        if (!eval(psi, p).is_zero()) ++violations;
        ++checks;
      }
      // Additivity inheritance on faces of ΔP_q with a point (or diagonal) projection.
      int faces = 0;
      for (int attempt = 0; faces < 200 && attempt < 200000; ++attempt) {
        const FaceId i = oracle::random_face(rng, q);
        const FaceId j = oracle::random_face(rng, q);
        const auto sums = minkowski_sum(i, j);
        const FaceId k = sums.faces()[std::uniform_int_distribution<std::size_t>(0, sums.size() - 1)(rng)];
        const auto face = project(i, j, k);
        if (!face) continue;
        bool eligible = false;
        for (const FaceId* g : {&face->i, &face->j, &face->k})
          eligible = eligible || (which == 0 ? g->kind == FaceKind::Vertex : is_point_or_diagonal(g->kind));
        if (!eligible) continue;
        ++faces;
        const auto xs = fine_points(face->i, m);
        const auto ys = fine_points(face->j, m);
        const auto zs = fine_points(face->k, m);
        std::vector<std::pair<GridPoint, GridPoint>> pairs;
        for (auto x : xs)
          for (auto y : ys)
            if (std::find(zs.begin(), zs.end(), x + y) != zs.end()) pairs.emplace_back(x, y);
        for (const auto& [x, y] : pairs) {
          if (!grid_delta(psi, x, y).is_zero()) ++violations;
          ++checks;
        }
        // A random convex combination of the lattice points of F lies in F.
        if (!pairs.empty()) {
          const long den = 6L * m * q;
          QPoint x{Frac(0), Frac(0)}, y{Frac(0), Frac(0)};
          Frac left(1);
          for (std::size_t r = 0; r < pairs.size(); ++r) {
            const Frac w = r + 1 == pairs.size()
                               ? left
                               : left * Frac::reduce(std::uniform_int_distribution<long>(0, den)(rng), den);
            left -= w;
            const Frac unit = Frac::reduce(1, static_cast<long>(m) * q);
            x = x + (w * unit) * QPoint{Frac(pairs[r].first.x), Frac(pairs[r].first.y)};
            y = y + (w * unit) * QPoint{Frac(pairs[r].second.x), Frac(pairs[r].second.y)};
          }
          if (!delta(psi, x, y).is_zero()) ++violations;
          ++checks;
        }
      }
      if (faces < 200) ++violations;
    }
  }
  s << "checks=" << checks << " violations=" << violations;
  return {violations == 0, s.str()};
}

Outcome perturbation_theorem() {
  std::ostringstream s;
  bool ok = true;
  std::size_t built = 0;
  auto exercise = [&](const std::string& label, const PwlFunction& pi, const Perturbation& p) {
    const Frac eps = epsilon_for(pi, p);
    const int n = p.base.q();
    bool minimal = false;
    try {
      const auto [p1, p2] = split(pi, p, eps);
      minimal = !(p1 == p2) && check_minimal_at(p1, n).minimal && check_minimal_at(p2, n).minimal;
    } catch (const Error& e) {
      s << label << " " << e.what() << "; ";
    }
    ok = ok && eps.sign() > 0 && minimal;
    ++built;
    s << label << ":" << to_string(p.flavor) << " eps=" << eps << (minimal ? "" : " NOT-MINIMAL") << " ";
  };
  for (const std::string name : {"example_q5", "flat_q5", "flat_diagonal_q5", "averaged_q5"}) {
    const auto pi = support::fixture(name);
    const auto cover = covered_sets(pi);
    for (int m : {3, 4}) exercise(name + "/m" + std::to_string(m), pi, build_perturbation(pi, cover, m));
  }
  // A kernel certificate, the fallback route.
  const auto pi = support::fixture("example_q5");
  const auto kernel = system_kernel(assemble_system(pi, 15));
  exercise("example_q5/kernel", pi, Perturbation{PwlFunction(15, pi.f(), kernel.front()), 3, {},
                                                 PerturbationFlavor::KernelFlavor});
  s << "built=" << built;
  return {ok, s.str()};
}

Outcome minimality_oracle() {
  std::mt19937_64 rng(11);
  std::ostringstream s;
  bool ok = true;
  int minimal_count = 0;
  for (int t = 0; t < 5; ++t) {
    const auto pi = support::random_q3(rng, t % 2 == 1 || t == 4);
    const auto lib = check_minimal(pi);
    const auto brute = oracle::brute_minimal(pi, rng, 10000);
    bool witnesses = true;
    for (const auto& v : lib.violations) {
      const QPoint x{Frac::reduce(v.x.x, 3), Frac::reduce(v.x.y, 3)};
      if (v.kind == ViolationKind::SubadditivityFail) {
        const QPoint y{Frac::reduce(v.y->x, 3), Frac::reduce(v.y->y, 3)};
        const Frac d = oracle::barycentric_eval(pi, x) + oracle::barycentric_eval(pi, y) -
                       oracle::barycentric_eval(pi, x + y);
        witnesses = witnesses && d == v.value && d.sign() < 0;
      } else if (v.kind == ViolationKind::SymmetryFail) {
        const Frac sum = oracle::barycentric_eval(pi, x) + oracle::barycentric_eval(pi, pi.f() - x);
        witnesses = witnesses && sum == v.value && sum != Frac(1);
      }
    }
    if (brute.subadditivity_witness) {
      const auto& [x, y] = *brute.subadditivity_witness;
      witnesses = witnesses && delta(pi, x, y).sign() < 0;
    }
    if (brute.symmetry_witness) {
      const QPoint& x = *brute.symmetry_witness;
      witnesses = witnesses && eval(pi, x) + eval(pi, pi.f() - x) != Frac(1);
    }
    const bool agree = lib.minimal == brute.minimal;
    ok = ok && agree && witnesses;
    minimal_count += lib.minimal;
    s << "f" << t << ":" << (lib.minimal ? "minimal" : "not_minimal") << (agree ? "" : " DISAGREE")
      << (witnesses ? "" : " BAD-WITNESS") << " ";
  }
  s << "(" << minimal_count << "/5 minimal)";
  return {ok, s.str()};
}

bool same_up_to_translation(const std::vector<GridPoint>& lib, const std::vector<GridPoint>& ref, long q,
                            GridPoint& shift) {
  if (lib.size() != ref.size()) return false;
  shift = lib.front() - ref.front();
  if (floor_mod(shift.x, q) != 0 || floor_mod(shift.y, q) != 0) return false;
  for (std::size_t i = 0; i < lib.size(); ++i)
    if (lib[i] - ref[i] != shift) return false;
  return true;
}

Outcome projection_calculus() {
  std::mt19937_64 rng(13);
  constexpr int q = 5;
  int nonempty = 0;
  int bad = 0;
  for (int t = 0; t < 500; ++t) {
    const FaceId i = oracle::random_face(rng, q);
    const FaceId j = oracle::random_face(rng, q);
    FaceId k = oracle::random_face(rng, q);
    if (t % 5 != 0) {
      // Mostly draw K from I + J so that the face is nonempty.
      const auto sums = minkowski_sum(i, j);
      k = sums.faces()[std::uniform_int_distribution<std::size_t>(0, sums.size() - 1)(rng)];
    }
    const auto lib = project(i, j, k);
    const auto ref = oracle::vertex_projections(i, j, k);
    if (lib.has_value() != ref.has_value()) {
      ++bad;
      continue;
    }
    if (!lib) continue;
    ++nonempty;
    GridPoint s1, s2, s3;
    const bool match = same_up_to_translation(oracle::sorted_vertices(lib->i), ref->p1, q, s1) &&
                       same_up_to_translation(oracle::sorted_vertices(lib->j), ref->p2, q, s2) &&
                       same_up_to_translation(oracle::sorted_vertices(lib->k), ref->p3, q, s3) && s3 == s1 + s2;
    const auto again = project(lib->i, lib->j, lib->k);
    const bool idempotent = again && *again == *lib;
    if (!match || !idempotent) ++bad;
  }
  std::ostringstream s;
  s << "triples=500 nonempty=" << nonempty << " mismatches=" << bad;
  return {bad == 0, s.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden minimality", golden_minimality},
      {"golden diagonal constraint", golden_diagonal},
      {"golden E_max census", golden_census},
      {"extremality transfer m=3/m=4", transfer},
      {"extreme positive control", positive_control},
      {"non-extreme negative control", negative_control},
      {"psi property suite", psi_suite},
      {"perturbation splits", perturbation_theorem},
      {"minimality oracle equivalence", minimality_oracle},
      {"projection calculus", projection_calculus},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (c + 1) << " " << criteria[c].first << ": " << o.detail
              << std::endl;
  }
  return failures;
}
