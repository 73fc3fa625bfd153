#include "waring/veronese.hpp"

namespace waring {

VeroneseSpace::VeroneseSpace(int r, int d) : r_(r), d_(d) {
  if (r < 1 || d < 1)
    fail(ErrorCode::InvalidArgument, "VeroneseSpace needs r >= 1, d >= 1");
  monomials_ = monomials_of_degree(r, d);
}

AmbientVector veronese_map(const ProjPoint& a, const VeroneseSpace& space) {
  if (static_cast<int>(a.coords().size()) != space.r() + 1)
    fail(ErrorCode::DimensionMismatch,
         "point lives in the wrong projective space");
  const FieldSpec& field = a.field();
  // Precompute coordinate powers up to d.
  std::vector<std::vector<Scalar>> pow(space.r() + 1);
  for (int i = 0; i <= space.r(); ++i) {
    pow[i].reserve(space.d() + 1);
    pow[i].push_back(Scalar::one(field));
    for (int e = 1; e <= space.d(); ++e)
      pow[i].push_back(pow[i].back() * a.coords()[i]);
  }
  AmbientVector out;
  out.reserve(space.monomials().size());
  for (const ExponentVector& m : space.monomials()) {
    Scalar v = Scalar::one(field);
    for (int i = 0; i <= space.r(); ++i)
      if (m[i] > 0) v *= pow[i][m[i]];
    out.push_back(v);
  }
  return out;
}

std::vector<AmbientVector> veronese_images(const PointSet& a,
                                           const VeroneseSpace& space) {
  std::vector<AmbientVector> out;
  out.reserve(a.size());
  for (const ProjPoint& p : a.points()) out.push_back(veronese_map(p, space));
  return out;
}

Matrix evaluation_matrix(const PointSet& z, int t, const FieldSpec& field) {
  if (z.empty()) fail(ErrorCode::InvalidArgument, "empty point set");
  int r = static_cast<int>(z[0].dim());
  VeroneseSpace space(r, t);
  Matrix m(space.monomials().size(), z.size(), field);
  for (std::size_t j = 0; j < z.size(); ++j) {
    AmbientVector col = veronese_map(z[j], space);
    for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

int span_dim(const PointSet& a, const VeroneseSpace& space) {
  if (a.empty()) fail(ErrorCode::InvalidArgument, "span of an empty set");
  return static_cast<int>(
             mat_rank(evaluation_matrix(a, space.d(), a[0].field()))) -
         1;
}

int hilbert_defect(const PointSet& z, int t) {
  if (z.empty()) fail(ErrorCode::InvalidArgument, "empty point set");
  if (t < 1) fail(ErrorCode::InvalidArgument, "degree must be >= 1");
  std::size_t rank = mat_rank(evaluation_matrix(z, t, z[0].field()));
  return static_cast<int>(z.size() - rank);
}

Hypersurface::Hypersurface(HomogeneousForm equation)
    : equation_(std::move(equation)) {
  if (equation_.is_zero())
    fail(ErrorCode::ZeroForm, "hypersurface equation is zero");
  if (equation_.degree() < 1)
    fail(ErrorCode::InvalidArgument, "hypersurface degree must be >= 1");
}

bool Hypersurface::contains(const ProjPoint& p) const {
  return equation_.evaluate(p.coords()).is_zero();
}

PointSet residual(const PointSet& z, const Hypersurface& d) {
  std::vector<ProjPoint> off;
  for (const ProjPoint& p : z.points())
    if (!d.contains(p)) off.push_back(p);
  return PointSet(std::move(off));
}

std::optional<std::vector<Scalar>> in_span(const AmbientVector& p,
                                           const PointSet& a,
                                           const VeroneseSpace& space) {
  if (a.empty()) fail(ErrorCode::InvalidArgument, "empty candidate set");
  const FieldSpec& field = p.front().field();
  Matrix m = Matrix::from_columns(veronese_images(a, space), field);
  if (m.rows() != p.size())
    fail(ErrorCode::DimensionMismatch, "ambient vector length mismatch");
  return solve(m, p);
}

std::vector<AmbientVector> span_intersect_sets(
    const std::vector<AmbientVector>& u, const std::vector<AmbientVector>& w,
    const FieldSpec& field) {
  return subspace_intersect(u, w, field);
}

}  // namespace waring
