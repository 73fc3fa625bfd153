#include "waring/cert.hpp"

#include <sstream>

namespace waring {

Certificate Certificate::of(std::vector<CheckResult> checks) {
  Certificate cert;
  cert.checks = std::move(checks);
  cert.valid = true;
  for (const auto& c : cert.checks) cert.valid = cert.valid && c.pass;
  return cert;
}

const CheckResult* Certificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Certificate verify_decomposition(const Decomposition& dec) {
  std::vector<CheckResult> checks;
  const FieldSpec& field = dec.target.front().field();

  // (1) exact reconstruction of the target.
  bool shapes_ok = !dec.points.empty() &&
                   dec.points.size() == dec.weights.size() &&
                   dec.target.size() == dec.space.monomials().size();
  if (!shapes_ok) {
    checks.push_back({"reconstruction", false, "shape mismatch"});
    checks.push_back({"independence", false, "not evaluated"});
    checks.push_back({"weights_nonzero", false, "not evaluated"});
    return Certificate::of(std::move(checks));
  }
  AmbientVector acc(dec.target.size(), Scalar::zero(field));
  for (std::size_t i = 0; i < dec.points.size(); ++i) {
    AmbientVector img = veronese_map(dec.points[i], dec.space);
    for (std::size_t j = 0; j < acc.size(); ++j)
      acc[j] += dec.weights[i] * img[j];
  }
  bool recon = acc == dec.target;
  checks.push_back({"reconstruction", recon,
                    recon ? "sum w_i nu_d(a_i) = P exactly"
                          : "weighted sum differs from the target"});

  // (2) linear independence of the Veronese images.
  std::size_t rank =
      mat_rank(Matrix::from_columns(veronese_images(dec.points, dec.space),
                                    field));
  bool indep = rank == dec.points.size();
  std::ostringstream ind;
  ind << "rank " << rank << " of " << dec.points.size() << " images";
  checks.push_back({"independence", indep, ind.str()});

  // (3) all weights nonzero; with (2) no proper subset can span the target.
  bool nz = true;
  for (const auto& w : dec.weights) nz = nz && !w.is_zero();
  checks.push_back({"weights_nonzero", nz,
                    nz ? "all weights nonzero" : "a weight vanishes"});
  return Certificate::of(std::move(checks));
}

namespace {

bool proportional(const AmbientVector& a, const AmbientVector& b) {
  if (a.size() != b.size()) return false;
  const FieldSpec& field = a.front().field();
  Scalar ratio = Scalar::zero(field);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    Scalar r = b[i] / a[i];
    if (ratio.is_zero())
      ratio = r;
    else if (ratio != r)
      return false;
  }
  return !ratio.is_zero();
}

// Number of conditions a set fails to impose on degree-t forms, extended to
// t = 0 (constants: one condition total) and empty sets.
int defect_ext(const PointSet& z, int t) {
  if (z.empty()) return 0;
  if (t == 0) return static_cast<int>(z.size()) - 1;
  return hilbert_defect(z, t);
}

}  // namespace

Certificate lemma_v1_check(const Decomposition& a, const Decomposition& b) {
  if (!(a.space == b.space))
    fail(ErrorCode::PreconditionFailed, "decompositions in different spaces");
  if (!proportional(a.target, b.target))
    fail(ErrorCode::PreconditionFailed, "decompositions of different points");
  if (a.points == b.points)
    fail(ErrorCode::PreconditionFailed, "point sets are equal");
  if (!verify_decomposition(a).valid || !verify_decomposition(b).valid)
    fail(ErrorCode::PreconditionFailed, "an input fails its certificate");
  PointSet uni = PointSet::union_of(a.points, b.points);
  int defect = hilbert_defect(uni, a.degree());
  std::ostringstream detail;
  detail << "h1(I_{A u B}(" << a.degree() << ")) = " << defect << " with #(A u B) = "
         << uni.size();
  return Certificate::of(
      {{"union_defect_positive", defect > 0, detail.str()}});
}

Certificate lemma_v2_split(const Decomposition& a, const Decomposition& b,
                           const Hypersurface& d) {
  if (!(a.space == b.space))
    fail(ErrorCode::PreconditionFailed, "decompositions in different spaces");
  const int deg = a.degree();
  const int t = d.degree();
  if (t > deg)
    fail(ErrorCode::PreconditionFailed, "hypersurface degree exceeds d");
  PointSet uni = PointSet::union_of(a.points, b.points);
  PointSet off = residual(uni, d);
  int hyp = defect_ext(off, deg - t);
  if (hyp != 0) {
    std::ostringstream os;
    os << "h1 of the off-divisor residue in degree " << (deg - t) << " is "
       << hyp;
    fail(ErrorCode::HypothesisFailed, os.str());
  }
  std::vector<CheckResult> checks;
  PointSet res_a = residual(a.points, d);
  PointSet res_b = residual(b.points, d);
  bool equal = res_a == res_b;
  std::ostringstream re;
  re << "#Res_D(A) = " << res_a.size() << ", #Res_D(B) = " << res_b.size();
  checks.push_back({"residuals_equal", equal, re.str()});

  PointSet common_off = residual(PointSet::intersection(a.points, b.points), d);
  bool indep = true;
  std::string detail = "empty common part";
  if (!common_off.empty()) {
    std::size_t rank = mat_rank(Matrix::from_columns(
        veronese_images(common_off, a.space), a.target.front().field()));
    indep = rank == common_off.size();
    std::ostringstream os;
    os << "rank " << rank << " of " << common_off.size() << " images";
    detail = os.str();
  }
  checks.push_back({"common_part_independent", indep, detail});
  return Certificate::of(std::move(checks));
}

Certificate bgl_uniqueness_probe(const Decomposition& dec,
                                 const OracleBudget& budget) {
  const int d = dec.degree();
  if (2 * dec.size() > static_cast<std::size_t>(d + 1))
    fail(ErrorCode::PreconditionFailed,
         "outside the small-rank regime #A <= (d+1)/2");
  const FieldSpec& field = dec.target.front().field();
  if (!field.is_prime())
    fail(ErrorCode::TooLarge, "oracle enumeration needs a prime field");
  std::vector<PointSet> all =
      enumerate_S(dec.target, static_cast<int>(dec.size()), dec.space, field,
                  budget);
  bool unique = all.size() == 1;
  bool matches = unique && all[0] == dec.points;
  std::ostringstream os;
  os << all.size() << " decomposition(s) of this cardinality";
  return Certificate::of(
      {{"exactly_one", unique, os.str()},
       {"matches_input", matches,
        matches ? "the enumerated set is the input" : "mismatch"}});
}

}  // namespace waring
