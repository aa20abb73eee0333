#pragma once

#include <random>
#include <string>
#include <vector>

#include "gj2d/delta_complex.hpp"
#include "gj2d/pwl_function.hpp"

namespace support {

/// Loads tests/fixtures/<name>.json.
gj2d::PwlFunction fixture(const std::string& name);

/// Fixture names of all diagonally constrained test functions.
const std::vector<std::string>& diagonal_fixtures();

/// The maximal additive faces listed in the paper's table for Ex. 4.1, with
/// symmetry faces left out, as (I, J, K) in absolute grid coordinates.
std::vector<gj2d::DeltaFace> paper_emax_table();

/// Minimal q = 3 functions with f = (1/3, 1/3): the two-slope function
/// with f' = 2/3 composed with x1 + x2, −x1 and −x2.
std::vector<gj2d::PwlFunction> minimal_q3_basis();

/// A random q = 3 grid function: a random convex combination of the basis,
/// optionally with some grid values nudged. Seeded deterministically.
gj2d::PwlFunction random_q3(std::mt19937_64& rng, bool nudge);

/// ζ with f' = 4/5 sampled on (1/5)Z.
gj2d::Frac zeta5(long t);

}  // namespace support
