#pragma once

#include "waring/classify.hpp"
#include "waring/oracle.hpp"

namespace waring {

/// Certified instance with the intended classification asserted at build
/// time. All builders are deterministic in (parameters, seed).
Decomposition build_case_a(int d, int r, int line_count, int off_count,
                           const FieldSpec& field, std::uint64_t seed);

Decomposition build_case_b(int d, int r, int conic_count, int off_count,
                           const FieldSpec& field, std::uint64_t seed);

Decomposition build_case_c(int d, int r, const FieldSpec& field,
                           std::uint64_t seed);

/// Sharpness instance at the boundary rank 3d/2 (d even): a point of the
/// span of a smooth plane cubic carrying exactly two in-curve
/// decompositions, verified by exhaustive search, plus a randomized
/// off-curve probe report.
struct SharpnessInstance {
  Decomposition first;    // the decomposition A
  Decomposition second;   // the complementary decomposition B
  int in_curve_count;     // number of certified 3d/2-subsets of C spanning P
  int retries;            // divisor resamples spent to hit the generic count
  std::size_t curve_points;        // #C(F_p)
  HomogeneousForm cubic;           // the curve equation
  bool in_curve_minimal;           // no smaller in-curve subset spans P
  std::size_t off_curve_trials;    // randomized off-curve subsets probed
  bool off_curve_witness_found;    // a decomposition leaving C was found
};

SharpnessInstance build_example_i1(int d, const FieldSpec& field,
                                   std::uint64_t seed);

/// Points of a smooth Weierstrass plane cubic over F_p (including the point
/// at infinity), for test reuse.
struct PlaneCubic {
  HomogeneousForm equation;      // in x0, x1, x2 (affine chart x2 = 1)
  std::vector<ProjPoint> points;
};

/// Searches y^2 z = x^3 + a x z^2 + b z^3 for a smooth member with at least
/// min_points rational points; CurveTooSmall if none exists over this field.
PlaneCubic find_rich_cubic(const FieldSpec& field, std::size_t min_points,
                           std::uint64_t seed);

}  // namespace waring
