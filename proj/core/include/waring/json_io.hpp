#pragma once

#include <json.hpp>

#include "waring/builders.hpp"
#include "waring/cert.hpp"

namespace waring {

using Json = nlohmann::ordered_json;

// Scalars serialize as exact strings ("17", "-3/4"); fields as
// {"kind":"prime","p":...} / {"kind":"rational"}; points as coordinate
// arrays. Decompositions round-trip.

Json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const FieldSpec& field);

Json vector_to_json(const std::vector<Scalar>& v);
std::vector<Scalar> vector_from_json(const Json& j, const FieldSpec& field);

Json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j, const FieldSpec& field);

Json point_set_to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j, const FieldSpec& field);

Json form_to_json(const HomogeneousForm& f);
HomogeneousForm form_from_json(const Json& j, const FieldSpec& field);

Json binary_form_to_json(const BinaryForm& f);

Json decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Json binary_decomposition_to_json(const BinaryDecomposition& dec,
                                  const FieldSpec& field);
Json analysis_to_json(const BinaryAnalysis& a);
Json line_to_json(const Line& line);
Json conic_to_json(const Conic& conic);
Json report_to_json(const StructureReport& rep);
Json verdict_to_json(const Verdict& v);
Json sharpness_to_json(const SharpnessInstance& inst);

}  // namespace waring
