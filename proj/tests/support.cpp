#include "support.hpp"

#include "json_io.hpp"

namespace support {

using gj2d::DeltaFace;
using gj2d::FaceId;
using gj2d::FaceKind;
using gj2d::Frac;
using gj2d::PwlFunction;

gj2d::PwlFunction fixture(const std::string& name) {
  return gj2d::io::load_function(std::string(GJ2D_FIXTURES) + "/" + name + ".json");
}

const std::vector<std::string>& diagonal_fixtures() {
  static const std::vector<std::string> names{"example_q5", "gmic_q5",       "flat_q5",
                                              "flat_diagonal_q5", "horizontal_q5", "averaged_q5"};
  return names;
}

std::vector<DeltaFace> paper_emax_table() {
  auto F = [](FaceKind kind, long a, long b) { return FaceId{kind, {a, b}, 5}; };
  using enum FaceKind;
  return {
      // triangle, triangle, triangle
      {F(TriLower, 0, 0), F(TriLower, 0, 0), F(TriLower, 0, 0)},
      {F(TriLower, 0, 0), F(TriUpper, 1, 1), F(TriUpper, 1, 1)},
      {F(TriUpper, 0, 4), F(TriUpper, 0, 4), F(TriUpper, 0, 9)},
      {F(TriLower, 0, 4), F(TriLower, 0, 4), F(TriLower, 0, 9)},
      {F(TriLower, 0, 4), F(TriUpper, 1, 2), F(TriUpper, 1, 7)},
      {F(TriUpper, 0, 4), F(TriLower, 1, 2), F(TriLower, 1, 7)},
      {F(TriLower, 4, 0), F(TriLower, 4, 0), F(TriLower, 9, 0)},
      {F(TriLower, 4, 0), F(TriLower, 4, 0), F(TriUpper, 8, 0)},
      {F(TriLower, 4, 0), F(TriLower, 4, 0), F(TriLower, 8, 1)},
      {F(TriLower, 4, 0), F(TriUpper, 3, 0), F(TriUpper, 8, 0)},
      {F(TriLower, 4, 0), F(TriUpper, 2, 1), F(TriUpper, 7, 1)},
      {F(TriLower, 4, 0), F(TriUpper, 3, 0), F(TriUpper, 7, 1)},
      {F(TriLower, 4, 0), F(TriUpper, 3, 0), F(TriLower, 8, 1)},
      {F(TriLower, 4, 0), F(TriLower, 3, 1), F(TriUpper, 7, 1)},
      {F(TriLower, 4, 0), F(TriLower, 3, 1), F(TriLower, 8, 1)},
      {F(TriUpper, 3, 0), F(TriUpper, 3, 0), F(TriUpper, 7, 1)},
      {F(TriUpper, 3, 0), F(TriLower, 3, 1), F(TriUpper, 7, 1)},
      {F(TriUpper, 4, 4), F(TriUpper, 4, 4), F(TriUpper, 9, 9)},
      {F(TriUpper, 4, 0), F(TriUpper, 4, 0), F(TriUpper, 9, 0)},
      {F(TriUpper, 4, 0), F(TriLower, 2, 1), F(TriLower, 7, 1)},
      {F(TriUpper, 4, 4), F(TriLower, 2, 2), F(TriLower, 7, 7)},
      // two triangles and a diagonal
      {F(TriLower, 2, 3), F(TriUpper, 4, 3), F(EdgeD, 7, 6)},
      // printed in the table as L(7,8); L(2,3) + D(4,0) only reaches L(7,3)
      {F(EdgeD, 4, 0), F(TriLower, 2, 3), F(TriLower, 7, 3)},
      {F(EdgeD, 4, 0), F(TriLower, 4, 3), F(TriLower, 9, 3)},
      {F(EdgeD, 4, 0), F(TriUpper, 2, 3), F(TriUpper, 7, 3)},
      {F(EdgeD, 4, 0), F(TriUpper, 4, 3), F(TriUpper, 9, 3)},
      // three points
      {F(Vertex, 3, 3), F(Vertex, 3, 3), F(Vertex, 6, 6)},
  };
}

Frac zeta5(long t) {
  return Frac::reduce(gj2d::floor_mod(t, 5), 4);
}

namespace {

Frac zeta3(long t) {
  t = gj2d::floor_mod(t, 3);
  return Frac::reduce(t, 2);
}

template <class L>
PwlFunction compose3(L linear) {
  std::vector<Frac> values;
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) values.push_back(zeta3(linear(a, b)));
  return PwlFunction(3, {Frac::reduce(1, 3), Frac::reduce(1, 3)}, std::move(values));
}

}  // namespace

std::vector<PwlFunction> minimal_q3_basis() {
  return {compose3([](long a, long b) { return a + b; }), compose3([](long a, long) { return -a; }),
          compose3([](long, long b) { return -b; })};
}

PwlFunction random_q3(std::mt19937_64& rng, bool nudge) {
  const auto basis = minimal_q3_basis();
  std::uniform_int_distribution<long> weight(0, 4);
  std::vector<long> w(basis.size());
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : w) total += (x = weight(rng));
  }
  std::vector<Frac> values(9);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < 9; ++k) values[k] += Frac::reduce(w[i], total) * basis[i].values()[k];
  if (nudge) {
    std::uniform_int_distribution<int> cell(0, 8);
    std::uniform_int_distribution<long> delta(-2, 2);
    for (int step = 0; step < 2; ++step) {
      long d = 0;
      while (d == 0) d = delta(rng);
      values[static_cast<std::size_t>(cell(rng))] += Frac::reduce(d, 6);
    }
  }
  return PwlFunction(3, basis.front().f(), std::move(values));
}

}  // namespace support
