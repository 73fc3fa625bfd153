#include "waring/json_io.hpp"

namespace waring {

Json field_to_json(const FieldSpec& field) {
  Json j;
  if (field.is_rational()) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = field.p();
  }
  return j;
}

FieldSpec field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    fail(ErrorCode::ParseError, "field spec needs a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "prime") {
    if (!j.contains("p")) fail(ErrorCode::ParseError, "prime field needs 'p'");
    return FieldSpec::prime(j.at("p").get<std::uint64_t>());
  }
  fail(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const FieldSpec& field) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), field);
  if (j.is_number_integer())
    return Scalar::from_int(j.get<long long>(), field);
  fail(ErrorCode::ParseError, "scalar must be a string or integer");
}

Json vector_to_json(const std::vector<Scalar>& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(scalar_to_json(s));
  return j;
}

std::vector<Scalar> vector_from_json(const Json& j, const FieldSpec& field) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(scalar_from_json(e, field));
  return out;
}

Json point_to_json(const ProjPoint& p) { return vector_to_json(p.coords()); }

ProjPoint point_from_json(const Json& j, const FieldSpec& field) {
  return ProjPoint::normalize(vector_from_json(j, field));
}

Json point_set_to_json(const PointSet& s) {
  Json j = Json::array();
  for (const auto& p : s.points()) j.push_back(point_to_json(p));
  return j;
}

PointSet point_set_from_json(const Json& j, const FieldSpec& field) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array of points");
  std::vector<ProjPoint> pts;
  for (const auto& e : j) pts.push_back(point_from_json(e, field));
  return PointSet(std::move(pts));
}

Json form_to_json(const HomogeneousForm& f) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : f.terms()) {
    Json term;
    term["exps"] = exps;
    term["coeff"] = scalar_to_json(coeff);
    terms.push_back(std::move(term));
  }
  Json j;
  j["degree"] = f.degree();
  j["vars"] = f.r() + 1;
  j["terms"] = std::move(terms);
  return j;
}

HomogeneousForm form_from_json(const Json& j, const FieldSpec& field) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("vars") ||
      !j.contains("terms"))
    fail(ErrorCode::ParseError, "form needs degree, vars, terms");
  int vars = j.at("vars").get<int>();
  HomogeneousForm f(vars - 1, j.at("degree").get<int>(), field);
  for (const auto& term : j.at("terms")) {
    ExponentVector exps = term.at("exps").get<ExponentVector>();
    Scalar c = scalar_from_json(term.at("coeff"), field);
    f.set_coeff(exps, f.coeff(exps) + c);
  }
  if (f.is_zero()) fail(ErrorCode::ZeroForm, "all terms cancel");
  return f;
}

Json binary_form_to_json(const BinaryForm& f) {
  Json j;
  j["degree"] = f.degree();
  j["coeffs"] = vector_to_json(f.coeffs());
  return j;
}

Json decomposition_to_json(const Decomposition& dec) {
  Json j;
  j["field"] = field_to_json(dec.target.front().field());
  j["space"] = Json{{"r", dec.space.r()}, {"d", dec.space.d()}};
  j["target"] = vector_to_json(dec.target);
  j["points"] = point_set_to_json(dec.points);
  j["weights"] = vector_to_json(dec.weights);
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "decomposition must be an object");
  FieldSpec field = field_from_json(j.at("field"));
  VeroneseSpace space(j.at("space").at("r").get<int>(),
                      j.at("space").at("d").get<int>());
  AmbientVector target = vector_from_json(j.at("target"), field);
  if (target.size() != space.monomials().size())
    fail(ErrorCode::DimensionMismatch, "target length != N+1");
  PointSet points = point_set_from_json(j.at("points"), field);
  std::vector<Scalar> weights = vector_from_json(j.at("weights"), field);
  if (weights.size() != points.size())
    fail(ErrorCode::ParseError, "weights do not match points");
  return Decomposition{space, std::move(target), std::move(points),
                       std::move(weights)};
}

Json certificate_to_json(const Certificate& cert) {
  Json checks = Json::array();
  for (const auto& c : cert.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass},
                          {"detail", c.detail}});
  return Json{{"valid", cert.valid}, {"checks", std::move(checks)}};
}

Json binary_decomposition_to_json(const BinaryDecomposition& dec,
                                  const FieldSpec& field) {
  Json j;
  j["field"] = field_to_json(field);
  j["degree"] = dec.d;
  j["nodes"] = point_set_to_json(dec.nodes);
  j["weights"] = vector_to_json(dec.weights);
  return j;
}

Json analysis_to_json(const BinaryAnalysis& a) {
  Json j;
  j["degree"] = a.form.degree();
  j["border_rank"] = a.border_rank;
  j["rank"] = a.rank;
  j["apolar_low"] = binary_form_to_json(a.apolar_low);
  j["family_dim"] = a.family_dim;
  j["witness"] = binary_form_to_json(a.witness);
  j["family_infinite"] = a.family_infinite();
  return j;
}

Json line_to_json(const Line& line) {
  Json j;
  j["base"] = Json::array(
      {point_to_json(line.base0()), point_to_json(line.base1())});
  return j;
}

Json conic_to_json(const Conic& conic) {
  Json j;
  j["kind"] = conic.kind() == Conic::Kind::Smooth ? "smooth" : "two_lines";
  if (conic.kind() == Conic::Kind::TwoLines) {
    j["line1"] = line_to_json(conic.line1());
    j["line2"] = line_to_json(conic.line2());
    j["node"] = point_to_json(conic.node());
  }
  return j;
}

Json report_to_json(const StructureReport& rep) {
  Json j;
  j["case"] = structure_case_name(rep.kind);
  if (rep.line) j["line"] = line_to_json(*rep.line);
  if (rep.conic) j["conic"] = conic_to_json(*rep.conic);
  j["curve_points"] = point_set_to_json(rep.curve_points);
  j["off_curve"] = point_set_to_json(rep.off_curve);
  if (rep.splice) j["splice"] = binary_form_to_json(*rep.splice);
  if (rep.splice_analysis)
    j["splice_analysis"] = analysis_to_json(*rep.splice_analysis);
  j["evidence"] = rep.evidence;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  switch (v.kind) {
    case Verdict::Kind::Unique: j["verdict"] = "unique"; break;
    case Verdict::Kind::NonUnique: j["verdict"] = "non_unique"; break;
    case Verdict::Kind::OutOfRegime: j["verdict"] = "out_of_regime"; break;
  }
  Json ws = Json::array();
  for (const auto& w : v.witnesses) ws.push_back(decomposition_to_json(w));
  j["witnesses"] = std::move(ws);
  j["report"] = report_to_json(v.report);
  return j;
}

Json sharpness_to_json(const SharpnessInstance& inst) {
  Json j;
  j["first"] = decomposition_to_json(inst.first);
  j["second"] = decomposition_to_json(inst.second);
  j["in_curve_count"] = inst.in_curve_count;
  j["retries"] = inst.retries;
  j["curve_points"] = inst.curve_points;
  j["cubic"] = form_to_json(inst.cubic);
  j["in_curve_minimal"] = inst.in_curve_minimal;
  j["off_curve_trials"] = inst.off_curve_trials;
  j["off_curve_witness_found"] = inst.off_curve_witness_found;
  return j;
}

}  // namespace waring
