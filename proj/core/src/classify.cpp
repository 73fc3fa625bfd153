#include "waring/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "waring/cert.hpp"

namespace waring {

const char* structure_case_name(StructureCase c) {
  switch (c) {
    case StructureCase::A: return "A";
    case StructureCase::B: return "B";
    case StructureCase::C: return "C";
    case StructureCase::Unique: return "unique";
    case StructureCase::Unknown: return "unknown";
  }
  return "unknown";
}

Decomposition make_decomposition(const VeroneseSpace& space,
                                 const PointSet& points,
                                 const std::vector<Scalar>& weights) {
  if (points.empty() || points.size() != weights.size())
    fail(ErrorCode::InvalidArgument, "points/weights mismatch");
  const FieldSpec& field = weights.front().field();
  AmbientVector target(space.monomials().size(), Scalar::zero(field));
  for (std::size_t i = 0; i < points.size(); ++i) {
    AmbientVector img = veronese_map(points[i], space);
    for (std::size_t j = 0; j < target.size(); ++j)
      target[j] += weights[i] * img[j];
  }
  if (vec_is_zero(target))
    fail(ErrorCode::InvalidArgument, "weighted sum collapses to zero");
  return Decomposition{space, std::move(target), points, weights};
}

Decomposition decomposition_for_target(const VeroneseSpace& space,
                                       const AmbientVector& target,
                                       const PointSet& points) {
  auto weights = in_span(target, points, space);
  if (!weights)
    fail(ErrorCode::NotMinimalCertificate,
         "target is outside the span of the points");
  return Decomposition{space, target, points, *weights};
}

std::vector<std::pair<Line, PointSet>> find_heavy_line(const PointSet& a,
                                                       std::size_t threshold) {
  if (threshold < 2)
    fail(ErrorCode::InvalidArgument, "line threshold must be >= 2");
  std::map<Line, PointSet> found;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Line line(a[i], a[j]);
      if (found.count(line)) continue;
      std::vector<ProjPoint> on;
      for (const auto& p : a.points())
        if (line.contains(p)) on.push_back(p);
      if (on.size() >= threshold) found.emplace(line, PointSet(std::move(on)));
    }
  std::vector<std::pair<Line, PointSet>> out(found.begin(), found.end());
  return out;
}

std::vector<std::pair<Conic, PointSet>> find_heavy_conic(
    const PointSet& a, std::size_t threshold) {
  if (threshold < 5)
    fail(ErrorCode::InvalidArgument, "conic threshold must be >= 5");
  std::map<Conic, PointSet> found;
  auto record = [&](const Conic& conic) {
    if (found.count(conic)) return;
    std::vector<ProjPoint> on;
    for (const auto& p : a.points())
      if (conic.contains(p)) on.push_back(p);
    if (on.size() >= threshold) found.emplace(conic, PointSet(std::move(on)));
  };
  // Smooth conics through coplanar 5-subsets.
  const std::size_t n = a.size();
  if (n >= 5) {
    std::vector<std::size_t> idx(5);
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
      if (depth == 5) {
        std::vector<ProjPoint> pts;
        for (std::size_t k : idx) pts.push_back(a[k]);
        if (auto conic = Conic::fit_through(pts)) record(*conic);
        return;
      }
      for (std::size_t i = start; i + (4 - depth) < n; ++i) {
        idx[depth] = i;
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  }
  // Reducible conics assembled from pairs of 2-point lines.
  auto lines = find_heavy_line(a, 2);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (!Line::intersection(lines[i].first, lines[j].first)) continue;
      record(Conic::two_lines(lines[i].first, lines[j].first));
    }
  std::vector<std::pair<Conic, PointSet>> out(found.begin(), found.end());
  return out;
}

namespace {

// Pullback of the unique span-intersection point through a moment basis.
BinaryForm splice_impl(const Decomposition& dec, const PointSet& curve_points,
                       const std::vector<AmbientVector>& moment,
                       AmbientVector* intersection_out) {
  if (curve_points.empty())
    fail(ErrorCode::EmptyIntersection, "no decomposition points on the curve");
  const FieldSpec& field = dec.target.front().field();
  std::vector<AmbientVector> u1 = veronese_images(curve_points, dec.space);
  std::vector<AmbientVector> u2{dec.target};
  for (const auto& img :
       veronese_images(PointSet::difference(dec.points, curve_points),
                       dec.space))
    u2.push_back(img);
  auto meet = span_intersect_sets(u1, u2, field);
  if (meet.empty())
    fail(ErrorCode::EmptyIntersection, "spans do not meet");
  if (meet.size() > 1)
    fail(ErrorCode::NotUnique,
         "span intersection has projective dimension >= 1");
  auto coeffs = solve(Matrix::from_columns(moment, field), meet[0]);
  if (!coeffs)
    fail(ErrorCode::NotUnique,
         "intersection point is outside the curve span");
  if (intersection_out) *intersection_out = meet[0];
  return BinaryForm(static_cast<int>(moment.size()) - 1, *coeffs);
}

}  // namespace

BinaryForm splice_point(const Decomposition& dec, const PointSet& curve_points,
                        const Line& curve) {
  return splice_impl(dec, curve_points, curve.moment_basis(dec.space), nullptr);
}

BinaryForm splice_point(const Decomposition& dec, const PointSet& curve_points,
                        const Conic& curve) {
  return splice_impl(dec, curve_points, curve.moment_basis(dec.space), nullptr);
}

namespace {

struct SpliceCandidate {
  bool ok = false;
  BinaryForm form{0, {Scalar::zero(FieldSpec::rational())}};
  BinaryAnalysis analysis{form, 0, 0, form, 0, form, {}};
};

SpliceCandidate try_splice(const Decomposition& dec, const PointSet& on_curve,
                           const std::vector<AmbientVector>& moment,
                           std::vector<std::string>& evidence,
                           const std::string& label) {
  SpliceCandidate cand;
  std::ostringstream ev;
  ev << label << ": " << on_curve.size() << " points";
  try {
    cand.form = splice_impl(dec, on_curve, moment, nullptr);
    cand.analysis = sylvester_analyze(cand.form);
    ev << ", splice rank " << cand.analysis.rank << " (border "
       << cand.analysis.border_rank << ", family dim "
       << cand.analysis.family_dim << ")";
    cand.ok = cand.analysis.rank == static_cast<int>(on_curve.size()) &&
              cand.analysis.family_infinite();
    if (cand.analysis.rank != static_cast<int>(on_curve.size()))
      ev << " - rank does not match the curve part, skipped";
  } catch (const Error& e) {
    ev << ", splice failed: " << e.what();
  }
  evidence.push_back(ev.str());
  return cand;
}

}  // namespace

StructureReport classify_decomposition(const Decomposition& dec) {
  Certificate cert = verify_decomposition(dec);
  if (!cert.valid)
    fail(ErrorCode::NotMinimalCertificate,
         "input decomposition fails its certificate");
  StructureReport rep;
  const int d = dec.degree();
  const std::size_t n = dec.size();
  {
    std::ostringstream ev;
    ev << "r=" << dec.space.r() << " d=" << d << " #A=" << n;
    rep.evidence.push_back(ev.str());
  }
  if (2 * n >= static_cast<std::size_t>(3 * d)) {
    rep.kind = StructureCase::Unknown;
    rep.evidence.push_back("outside the regime 2#A < 3d");
    return rep;
  }

  // Case A: a line carrying at least ceil((d+2)/2) points whose spliced
  // binary point has an infinite family.
  const std::size_t threshold_a = static_cast<std::size_t>((d + 3) / 2);
  for (const auto& [line, on_curve] : find_heavy_line(dec.points, threshold_a)) {
    SpliceCandidate cand = try_splice(dec, on_curve, line.moment_basis(dec.space),
                                      rep.evidence, "line");
    if (!cand.ok) continue;
    rep.kind = StructureCase::A;
    rep.line = line;
    rep.curve_points = on_curve;
    rep.off_curve = PointSet::difference(dec.points, on_curve);
    rep.splice = cand.form;
    rep.splice_analysis = cand.analysis;
    return rep;
  }

  // Case B: a smooth conic carrying at least d+1 points. Conic fitting
  // needs 5 incident points, so this branch starts at d = 4; the d = 3
  // four-point configurations fall through to the reducible-conic case.
  if (d >= 4 && n >= 5) {
    for (const auto& [conic, on_curve] :
         find_heavy_conic(dec.points, static_cast<std::size_t>(d + 1))) {
      if (conic.kind() != Conic::Kind::Smooth) continue;
      SpliceCandidate cand = try_splice(
          dec, on_curve, conic.moment_basis(dec.space), rep.evidence, "conic");
      if (!cand.ok) continue;
      rep.kind = StructureCase::B;
      rep.conic = conic;
      rep.curve_points = on_curve;
      rep.off_curve = PointSet::difference(dec.points, on_curve);
      rep.splice = cand.form;
      rep.splice_analysis = cand.analysis;
      return rep;
    }
  }

  // Case C: d odd, two meeting lines with exactly (d+1)/2 points each and
  // the node outside A.
  if (d % 2 == 1) {
    const std::size_t k = static_cast<std::size_t>((d + 1) / 2);
    if (k >= 2) {
      auto lines = find_heavy_line(dec.points, k);
      for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].second.size() != k) continue;
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
          if (lines[j].second.size() != k) continue;
          auto node = Line::intersection(lines[i].first, lines[j].first);
          if (!node) continue;
          if (dec.points.contains(*node)) {
            rep.evidence.push_back("line pair rejected: node lies in A");
            continue;
          }
          rep.kind = StructureCase::C;
          rep.conic = Conic::two_lines(lines[i].first, lines[j].first);
          rep.curve_points =
              PointSet::union_of(lines[i].second, lines[j].second);
          rep.off_curve = PointSet::difference(dec.points, rep.curve_points);
          std::ostringstream ev;
          ev << "reducible conic with " << k << "+" << k
             << " points, node off A";
          rep.evidence.push_back(ev.str());
          return rep;
        }
      }
    }
  }

  rep.kind = StructureCase::Unique;
  rep.evidence.push_back("no heavy structure with an infinite spliced family");
  return rep;
}

namespace {

// Leading nonzero coordinate of the cone vector phi(s,t): nu_d rescales by
// its d-th power under point normalization.
Scalar cone_scale(const std::vector<Scalar>& cone, int d,
                  const FieldSpec& field) {
  for (const Scalar& c : cone)
    if (!c.is_zero()) {
      Scalar acc = Scalar::one(field);
      for (int i = 0; i < d; ++i) acc *= c;
      return acc;
    }
  fail(ErrorCode::AllZero, "cone vector vanished");
}

std::vector<Scalar> line_cone(const Line& line, const ProjPoint& param) {
  const Scalar& s = param.coords()[0];
  const Scalar& t = param.coords()[1];
  std::vector<Scalar> v(line.base0().coords().size(),
                        Scalar::zero(line.field()));
  for (std::size_t j = 0; j < v.size(); ++j)
    v[j] = s * line.base0().coords()[j] + t * line.base1().coords()[j];
  return v;
}

}  // namespace

std::vector<Decomposition> generate_family(const Decomposition& dec,
                                           const StructureReport& report,
                                           std::size_t count,
                                           std::uint64_t seed) {
  if (report.kind != StructureCase::A && report.kind != StructureCase::B)
    fail(ErrorCode::PreconditionFailed,
         "family generation needs a case A or case B report");
  if (count == 0) return {};
  const FieldSpec& field = dec.target.front().field();
  const int d = dec.degree();

  std::vector<AmbientVector> moment =
      report.kind == StructureCase::A
          ? report.line->moment_basis(dec.space)
          : report.conic->moment_basis(dec.space);

  // Exact anchor: target = alpha * splice_vec + sum mu_f nu_d(f).
  AmbientVector splice_vec(dec.target.size(), Scalar::zero(field));
  {
    const BinaryForm& c = *report.splice;
    for (std::size_t i = 0; i < moment.size(); ++i)
      for (std::size_t jj = 0; jj < splice_vec.size(); ++jj)
        splice_vec[jj] += c.coeff(static_cast<int>(i)) * moment[i][jj];
  }
  std::vector<AmbientVector> cols{splice_vec};
  for (const auto& img : veronese_images(report.off_curve, dec.space))
    cols.push_back(img);
  auto anchor = solve(Matrix::from_columns(cols, field), dec.target);
  if (!anchor || (*anchor)[0].is_zero())
    fail(ErrorCode::PreconditionFailed,
         "target is not anchored by the splice point and F");
  const Scalar alpha = (*anchor)[0];

  std::vector<BinaryDecomposition> curve_family =
      decomposition_family(*report.splice, count, seed);

  // Parameter-space degree of the embedded curve: d on a line, 2d on a conic.
  const int param_deg = static_cast<int>(moment.size()) - 1;
  const VeroneseSpace param_space(1, param_deg);

  std::vector<Decomposition> out;
  for (const auto& bd : curve_family) {
    std::vector<std::pair<ProjPoint, Scalar>> entries;
    bool good = true;
    for (std::size_t i = 0; i < bd.nodes.size() && good; ++i) {
      const ProjPoint& param = bd.nodes[i];
      ProjPoint pt = report.kind == StructureCase::A
                         ? report.line->at(param)
                         : report.conic->at(param.coords()[0],
                                            param.coords()[1]);
      // nu_d(cone(param)) = sum_i param_img[i] * M_i = lambda * nu_d(pt):
      // recover the normalization scale lambda from a nonzero slot.
      AmbientVector param_img = veronese_map(param, param_space);
      AmbientVector raw(dec.target.size(), Scalar::zero(field));
      for (std::size_t col = 0; col < moment.size(); ++col) {
        if (param_img[col].is_zero()) continue;
        for (std::size_t jj = 0; jj < raw.size(); ++jj)
          raw[jj] += param_img[col] * moment[col][jj];
      }
      AmbientVector img = veronese_map(pt, dec.space);
      Scalar lambda = Scalar::zero(field);
      for (std::size_t jj = 0; jj < raw.size(); ++jj)
        if (!img[jj].is_zero()) {
          lambda = raw[jj] / img[jj];
          break;
        }
      if (lambda.is_zero() || report.off_curve.contains(pt)) {
        good = false;  // degenerate scale, or exchange part touches F
        break;
      }
      entries.emplace_back(pt, alpha * bd.weights[i] * lambda);
    }
    if (!good) continue;
    for (std::size_t f = 0; f < report.off_curve.size(); ++f)
      entries.emplace_back(report.off_curve[f], (*anchor)[f + 1]);
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<ProjPoint> pts;
    std::vector<Scalar> ws;
    for (auto& [p, w] : entries) {
      pts.push_back(p);
      ws.push_back(w);
    }
    PointSet points(pts);
    if (points.size() != entries.size()) continue;  // collision: drop
    Decomposition cand{dec.space, dec.target, points, ws};
    if (!verify_decomposition(cand).valid) continue;
    if (cand.points.size() != dec.points.size()) continue;
    out.push_back(std::move(cand));
  }
  return out;
}

std::vector<Decomposition> case_c_family(const Decomposition& dec,
                                         const StructureReport& report,
                                         std::size_t count,
                                         std::uint64_t seed) {
  if (report.kind != StructureCase::C)
    fail(ErrorCode::FamilyEmpty, "family generation needs a case C report");
  if (count == 0) return {};
  const FieldSpec& field = dec.target.front().field();
  if (!field.is_prime())
    fail(ErrorCode::FamilyEmpty,
         "case C sampling enumerates a rational pencil; use a prime field");
  const int d = dec.degree();
  if (d % 2 == 0) fail(ErrorCode::FamilyEmpty, "case C needs odd degree");
  const std::size_t k = static_cast<std::size_t>((d + 1) / 2);
  const Line& l1 = report.conic->line1();
  const Line& l2 = report.conic->line2();
  const ProjPoint& node = report.conic->node();
  const AmbientVector node_img = veronese_map(node, dec.space);

  // Splice vector P_T.
  std::vector<AmbientVector> u1 = veronese_images(report.curve_points, dec.space);
  std::vector<AmbientVector> u2{dec.target};
  for (const auto& img : veronese_images(report.off_curve, dec.space))
    u2.push_back(img);
  auto meet = span_intersect_sets(u1, u2, field);
  if (meet.size() != 1)
    fail(ErrorCode::FamilyEmpty, "conic splice point is not unique");
  const AmbientVector pt_vec = meet[0];

  // Anchor target = alpha * P_T + sum mu_f nu_d(f).
  std::vector<AmbientVector> cols{pt_vec};
  for (const auto& img : veronese_images(report.off_curve, dec.space))
    cols.push_back(img);
  auto anchor = solve(Matrix::from_columns(cols, field), dec.target);
  if (!anchor || (*anchor)[0].is_zero())
    fail(ErrorCode::FamilyEmpty, "target is not anchored by the splice point");
  const Scalar alpha = (*anchor)[0];

  std::vector<AmbientVector> m1 = l1.moment_basis(dec.space);
  std::vector<AmbientVector> m2 = l2.moment_basis(dec.space);
  std::vector<AmbientVector> with_pt2{pt_vec};
  with_pt2.insert(with_pt2.end(), m2.begin(), m2.end());
  std::vector<AmbientVector> with_pt1{pt_vec};
  with_pt1.insert(with_pt1.end(), m1.begin(), m1.end());
  auto d1 = span_intersect_sets(m1, with_pt2, field);
  auto d2 = span_intersect_sets(m2, with_pt1, field);
  if (d1.size() != 2 || d2.size() != 2)
    fail(ErrorCode::FamilyEmpty, "auxiliary pencil lines are degenerate");
  if (!coords_in_echelon(span_echelon_basis(d1, field), node_img) ||
      !coords_in_echelon(span_echelon_basis(d2, field), node_img))
    fail(ErrorCode::FamilyEmpty, "pencil lines miss the node image");

  Matrix m1_cols = Matrix::from_columns(m1, field);
  Matrix m2_cols = Matrix::from_columns(m2, field);

  // Decomposes a pencil point on a component line into weighted points.
  auto decompose_on_line =
      [&](const AmbientVector& qvec, const Line& line, const Matrix& mcols,
          std::vector<std::pair<ProjPoint, Scalar>>& entries) -> bool {
    auto cf = solve(mcols, qvec);
    if (!cf) return false;
    BinaryForm c(d, *cf);
    if (c.is_zero()) return false;
    BinaryAnalysis a{c, 0, 0, c, 0, c, {}};
    try {
      a = sylvester_analyze(c);
    } catch (const Error&) {
      return false;
    }
    if (a.rank != static_cast<int>(k)) return false;  // small-rank locus etc.
    BinaryDecomposition bd = decompose_with_witness(c, a.witness);
    for (std::size_t i = 0; i < bd.nodes.size(); ++i) {
      std::vector<Scalar> cone = line_cone(line, bd.nodes[i]);
      ProjPoint pt = ProjPoint::normalize(cone);
      if (pt == node) return false;  // families avoiding the node only
      entries.emplace_back(pt, bd.weights[i] * cone_scale(cone, d, field));
    }
    return true;
  };

  const std::uint64_t p = field.p();
  const std::uint64_t cycle = p + 1;
  const std::uint64_t start = (seed * count * 128) % cycle;
  std::set<PointSet> seen;
  std::vector<Decomposition> out;
  for (std::uint64_t step = 0; step < cycle && out.size() < count; ++step) {
    std::uint64_t idx = (start + step) % cycle;
    // Q1 = d1[0] + idx * d1[1], or d1[1] at the cycle end.
    AmbientVector q1(dec.target.size(), Scalar::zero(field));
    if (idx == p) {
      q1 = d1[1];
    } else {
      Scalar lam = Scalar::from_int(static_cast<long long>(idx), field);
      for (std::size_t jj = 0; jj < q1.size(); ++jj)
        q1[jj] = d1[0][jj] + lam * d1[1][jj];
    }
    if (vec_is_zero(q1)) continue;
    if (span_rank({q1, node_img}, field) < 2) continue;  // Q1 = nu_d(O)

    // Q2: solve P_T = x0 Q1 + x1 d2[0] + x2 d2[1].
    Matrix sys = Matrix::from_columns({q1, d2[0], d2[1]}, field);
    auto x = solve(sys, pt_vec);
    if (!x || (*x)[0].is_zero()) continue;
    AmbientVector q2(dec.target.size(), Scalar::zero(field));
    for (std::size_t jj = 0; jj < q2.size(); ++jj)
      q2[jj] = (*x)[1] * d2[0][jj] + (*x)[2] * d2[1][jj];
    if (vec_is_zero(q2)) continue;
    if (span_rank({q2, node_img}, field) < 2) continue;

    std::vector<std::pair<ProjPoint, Scalar>> entries;
    // target = alpha (x0 Q1 + Q2) + sum mu_f nu(f): fold alpha*x0 into the
    // L1 weights and alpha into the L2 weights.
    std::vector<std::pair<ProjPoint, Scalar>> e1, e2;
    if (!decompose_on_line(q1, l1, m1_cols, e1)) continue;
    if (!decompose_on_line(q2, l2, m2_cols, e2)) continue;
    for (auto& [ppt, w] : e1) entries.emplace_back(ppt, alpha * (*x)[0] * w);
    for (auto& [ppt, w] : e2) entries.emplace_back(ppt, alpha * w);
    for (std::size_t f = 0; f < report.off_curve.size(); ++f)
      entries.emplace_back(report.off_curve[f], (*anchor)[f + 1]);

    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ProjPoint> pts;
    std::vector<Scalar> ws;
    for (auto& [ppt, w] : entries) {
      pts.push_back(ppt);
      ws.push_back(w);
    }
    PointSet points(pts);
    if (points.size() != entries.size()) continue;
    if (points.size() != dec.points.size()) continue;
    Decomposition cand{dec.space, dec.target, points, ws};
    if (!verify_decomposition(cand).valid) continue;
    if (seen.insert(points).second) out.push_back(std::move(cand));
  }
  if (out.empty())
    fail(ErrorCode::FamilyEmpty, "pencil scan produced no certified member");
  return out;
}

Verdict uniqueness_verdict(const Decomposition& dec) {
  const int d = dec.degree();
  if (2 * dec.size() >= static_cast<std::size_t>(3 * d)) {
    StructureReport rep;
    rep.kind = StructureCase::Unknown;
    rep.evidence.push_back("outside the regime 2#A < 3d");
    return Verdict{Verdict::Kind::OutOfRegime, {}, rep};
  }
  StructureReport rep = classify_decomposition(dec);
  switch (rep.kind) {
    case StructureCase::Unique:
      return Verdict{Verdict::Kind::Unique, {}, rep};
    case StructureCase::Unknown:
      return Verdict{Verdict::Kind::OutOfRegime, {}, rep};
    case StructureCase::A:
    case StructureCase::B: {
      auto fam = generate_family(dec, rep, 8, 1);
      return Verdict{Verdict::Kind::NonUnique, std::move(fam), rep};
    }
    case StructureCase::C: {
      auto fam = case_c_family(dec, rep, 8, 1);
      return Verdict{Verdict::Kind::NonUnique, std::move(fam), rep};
    }
  }
  fail(ErrorCode::InvalidArgument, "unreachable classification state");
}

}  // namespace waring
