#pragma once

#include <string>
#include <vector>

#include "gj2d/delta_complex.hpp"
#include "gj2d/pwl_function.hpp"

namespace gj2d::svg {

/// The unit square triangulated by P_q, triangles filled by gradient class
/// and each grid vertex labelled with its exact value.
std::string plot_function(const PwlFunction& pi);

/// One panel per face over [0,2]^2 showing p1, p2 and p3.
std::string plot_faces(const std::vector<DeltaFace>& faces, int q);

}  // namespace gj2d::svg
