#pragma once

#include <optional>
#include <string>

#include "waring/curves.hpp"

namespace waring {

/// A certified-format decomposition: target = sum w_i nu_d(a_i) exactly,
/// with nu_d(points) independent and all weights nonzero (checked by
/// cert::verify_decomposition, not by construction).
struct Decomposition {
  VeroneseSpace space;
  AmbientVector target;
  PointSet points;
  std::vector<Scalar> weights;  // aligned with points

  int degree() const { return space.d(); }
  std::size_t size() const { return points.size(); }
};

/// Builds the decomposition with target computed from points and weights.
Decomposition make_decomposition(const VeroneseSpace& space,
                                 const PointSet& points,
                                 const std::vector<Scalar>& weights);

/// Solves for the weights of `target` against nu_d(points); throws
/// NotMinimalCertificate if target is outside the span.
Decomposition decomposition_for_target(const VeroneseSpace& space,
                                       const AmbientVector& target,
                                       const PointSet& points);

enum class StructureCase { A, B, C, Unique, Unknown };

const char* structure_case_name(StructureCase c);

/// Outcome of the structure classification: which exchange mechanism makes
/// the decomposition non-isolated, with its witnesses.
struct StructureReport {
  StructureCase kind = StructureCase::Unknown;
  std::optional<Line> line;           // case A
  std::optional<Conic> conic;         // case B (smooth) and case C (two lines)
  PointSet curve_points;              // A restricted to the witness curve
  PointSet off_curve;                 // F
  std::optional<BinaryForm> splice;   // P_D (degree d) / P_T (degree 2d)
  std::optional<BinaryAnalysis> splice_analysis;
  std::vector<std::string> evidence;  // counts and spans inspected
};

/// All lines meeting A in at least `threshold` points, each with its
/// incidence set, deduplicated and in canonical order.
std::vector<std::pair<Line, PointSet>> find_heavy_line(const PointSet& a,
                                                       std::size_t threshold);

/// All reduced conics meeting A in at least `threshold` points: smooth fits
/// through coplanar 5-subsets plus the line-pair conics assembled from
/// 2-point lines. Canonical order.
std::vector<std::pair<Conic, PointSet>> find_heavy_conic(const PointSet& a,
                                                         std::size_t threshold);

/// The unique point of <nu_d(curve_points)> meet <{P} union nu_d(F)>,
/// pulled back through the curve parametrization: a binary form of degree d
/// on a line, 2d on a smooth conic. Throws EmptyIntersection / NotUnique.
BinaryForm splice_point(const Decomposition& dec, const PointSet& curve_points,
                        const Line& curve);
BinaryForm splice_point(const Decomposition& dec, const PointSet& curve_points,
                        const Conic& curve);

/// Theorem-1.3-style classification of a certified decomposition with
/// #points < 3d/2 (otherwise: Unknown).
StructureReport classify_decomposition(const Decomposition& dec);

/// The exchange family through dec for case A/B reports: decompositions
/// E union F with E running through the spliced binary family, mapped back
/// through the curve parametrization. All outputs are certified and have the
/// cardinality of dec.
std::vector<Decomposition> generate_family(const Decomposition& dec,
                                           const StructureReport& report,
                                           std::size_t count,
                                           std::uint64_t seed);

/// The case-C pencil family: moves a point Q1 along the auxiliary line
/// D1 = <nu_d(L1)> meet <{P_T} union nu_d(L2)>, pairs it with the unique Q2
/// on D2 with P_T in <{Q1, Q2}>, and decomposes both on their lines.
std::vector<Decomposition> case_c_family(const Decomposition& dec,
                                         const StructureReport& report,
                                         std::size_t count, std::uint64_t seed);

struct Verdict {
  enum class Kind { Unique, NonUnique, OutOfRegime } kind;
  std::vector<Decomposition> witnesses;  // nonempty for NonUnique
  StructureReport report;
};

/// Unique / NonUnique(witnesses) / OutOfRegime per the classification.
Verdict uniqueness_verdict(const Decomposition& dec);

}  // namespace waring
