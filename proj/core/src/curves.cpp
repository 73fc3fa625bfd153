#include "waring/curves.hpp"

#include <algorithm>

namespace waring {

std::optional<std::vector<Scalar>> coords_in_echelon(
    const std::vector<std::vector<Scalar>>& echelon,
    const std::vector<Scalar>& v) {
  if (echelon.empty()) return std::nullopt;
  const FieldSpec& field = v.front().field();
  // Pivot columns of the reduced echelon rows.
  std::vector<std::size_t> pivots;
  pivots.reserve(echelon.size());
  for (const auto& row : echelon) {
    std::size_t j = 0;
    while (j < row.size() && row[j].is_zero()) ++j;
    if (j == row.size()) return std::nullopt;
    pivots.push_back(j);
  }
  std::vector<Scalar> coords;
  coords.reserve(echelon.size());
  for (std::size_t i = 0; i < echelon.size(); ++i)
    coords.push_back(v[pivots[i]]);
  // Verify v = sum coords_i * row_i.
  std::vector<Scalar> acc(v.size(), Scalar::zero(field));
  for (std::size_t i = 0; i < echelon.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      acc[j] += coords[i] * echelon[i][j];
  for (std::size_t j = 0; j < v.size(); ++j)
    if (acc[j] != v[j]) return std::nullopt;
  return coords;
}

// ---------------------------------------------------------------------------
// (s,t)-polynomial helpers for moment bases: index i holds the coefficient
// of s^(k-i) t^i.
// ---------------------------------------------------------------------------

namespace {

std::vector<Scalar> st_conv(const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b,
                            const FieldSpec& field) {
  std::vector<Scalar> out(a.size() + b.size() - 1, Scalar::zero(field));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Columns M_0..M_{kd} with nu_d(phi(s,t)) = sum_i s^(kd-i) t^i M_i, where
// phi's j-th coordinate is the degree-k form coord_polys[j].
std::vector<AmbientVector> moment_columns(
    const std::vector<std::vector<Scalar>>& coord_polys,
    const VeroneseSpace& space, const FieldSpec& field) {
  const int k = static_cast<int>(coord_polys[0].size()) - 1;
  const int total = k * space.d();
  std::vector<AmbientVector> cols(
      total + 1, AmbientVector(space.monomials().size(), Scalar::zero(field)));
  std::size_t row = 0;
  for (const ExponentVector& e : space.monomials()) {
    std::vector<Scalar> prod{Scalar::one(field)};
    for (std::size_t j = 0; j < coord_polys.size(); ++j)
      for (int rep = 0; rep < e[j]; ++rep)
        prod = st_conv(prod, coord_polys[j], field);
    for (std::size_t i = 0; i < prod.size(); ++i) cols[i][row] = prod[i];
    ++row;
  }
  return cols;
}

HomogeneousForm normalized_equation(HomogeneousForm q) {
  for (const auto& [exps, c] : q.terms()) {
    (void)exps;
    return q.scaled(c.inverse());
  }
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Line.
// ---------------------------------------------------------------------------

Line::Line(const ProjPoint& a, const ProjPoint& b) : b0_(a), b1_(b) {
  if (a == b) fail(ErrorCode::InvalidArgument, "line needs two distinct points");
  if (a.coords().size() != b.coords().size())
    fail(ErrorCode::DimensionMismatch, "points of different spaces");
  echelon_ = span_echelon_basis({a.coords(), b.coords()}, a.field());
  if (echelon_.size() != 2)
    fail(ErrorCode::InvalidArgument, "degenerate line span");
}

ProjPoint Line::at(const Scalar& s, const Scalar& t) const {
  std::vector<Scalar> v(b0_.coords().size(), Scalar::zero(field()));
  for (std::size_t j = 0; j < v.size(); ++j)
    v[j] = s * b0_.coords()[j] + t * b1_.coords()[j];
  return ProjPoint::normalize(v);
}

ProjPoint Line::at(const ProjPoint& param) const {
  if (param.coords().size() != 2)
    fail(ErrorCode::DimensionMismatch, "line parameter must be a P^1 point");
  return at(param.coords()[0], param.coords()[1]);
}

bool Line::contains(const ProjPoint& p) const {
  return coords_in_echelon(echelon_, p.coords()).has_value();
}

std::optional<ProjPoint> Line::parameter_of(const ProjPoint& p) const {
  const FieldSpec& f = field();
  Matrix m = Matrix::from_columns({b0_.coords(), b1_.coords(), p.coords()}, f);
  auto ker = kernel_basis(m);
  if (ker.size() != 1) return std::nullopt;  // p off the line (or degenerate)
  const Scalar& gamma = ker[0][2];
  if (gamma.is_zero()) return std::nullopt;
  Scalar s = -(ker[0][0] / gamma);
  Scalar t = -(ker[0][1] / gamma);
  return ProjPoint::normalize({s, t});
}

std::vector<AmbientVector> Line::moment_basis(const VeroneseSpace& space) const {
  if (space.r() != ambient_r())
    fail(ErrorCode::DimensionMismatch, "line lives in a different P^r");
  std::vector<std::vector<Scalar>> coord_polys;
  coord_polys.reserve(b0_.coords().size());
  for (std::size_t j = 0; j < b0_.coords().size(); ++j)
    coord_polys.push_back({b0_.coords()[j], b1_.coords()[j]});
  return moment_columns(coord_polys, space, field());
}

int Line::cmp(const Line& rhs) const {
  if (echelon_.size() != rhs.echelon_.size())
    return echelon_.size() < rhs.echelon_.size() ? -1 : 1;
  for (std::size_t i = 0; i < echelon_.size(); ++i)
    for (std::size_t j = 0; j < echelon_[i].size(); ++j) {
      int c = Scalar::canonical_cmp(echelon_[i][j], rhs.echelon_[i][j]);
      if (c != 0) return c;
    }
  return 0;
}

std::optional<ProjPoint> Line::intersection(const Line& l1, const Line& l2) {
  auto meet = subspace_intersect(l1.echelon(), l2.echelon(), l1.field());
  if (meet.size() != 1) return std::nullopt;
  return ProjPoint::normalize(meet[0]);
}

// ---------------------------------------------------------------------------
// Conic.
// ---------------------------------------------------------------------------

void Conic::derive_plane_and_equation() {
  const FieldSpec& f = field_;
  plane_echelon_ = span_echelon_basis(frame_, f);
  if (plane_echelon_.size() != 3)
    fail(ErrorCode::InvalidArgument, "conic frame does not span a plane");
  // Frame coordinates z as linear forms of the plane coordinates y:
  // z = F^{-1} y where column i of F holds the plane coordinates of frame i.
  std::vector<std::vector<Scalar>> fcols;
  for (const auto& v : frame_) {
    auto c = coords_in_echelon(plane_echelon_, v);
    fcols.push_back(*c);
  }
  Matrix F = Matrix::from_columns(fcols, f);
  std::vector<HomogeneousForm> z;
  for (int i = 0; i < 3; ++i) z.emplace_back(2, 1, f);
  for (int j = 0; j < 3; ++j) {
    std::vector<Scalar> e(3, Scalar::zero(f));
    e[j] = Scalar::one(f);
    auto col = solve(F, e);  // column j of F^{-1}
    if (!col) fail(ErrorCode::InvalidArgument, "frame not invertible");
    for (int i = 0; i < 3; ++i) {
      ExponentVector ev(3, 0);
      ev[j] = 1;
      z[i].set_coeff(ev, (*col)[i]);
    }
  }
  // The image of (s:t) -> s^2 c0 + st c1 + t^2 c2 is z0 z2 = z1^2.
  equation_ = normalized_equation(z[1] * z[1] + (z[0] * z[2]).scaled(
                                                    -Scalar::one(f)));
}

Conic Conic::smooth_from_frame(const ProjPoint& c0, const ProjPoint& c1,
                               const ProjPoint& c2) {
  Conic out;
  out.kind_ = Kind::Smooth;
  out.field_ = c0.field();
  out.frame_ = {c0.coords(), c1.coords(), c2.coords()};
  out.derive_plane_and_equation();
  return out;
}

Conic Conic::two_lines(const Line& l1, const Line& l2) {
  if (l1 == l2)
    fail(ErrorCode::InvalidArgument, "double line is not a reduced conic");
  auto node = Line::intersection(l1, l2);
  if (!node)
    fail(ErrorCode::InvalidArgument,
         "reducible conic needs coplanar (meeting) lines");
  Conic out;
  out.kind_ = Kind::TwoLines;
  out.field_ = l1.field();
  std::vector<std::vector<Scalar>> span = l1.echelon();
  span.insert(span.end(), l2.echelon().begin(), l2.echelon().end());
  out.plane_echelon_ = span_echelon_basis(span, out.field_);
  if (out.plane_echelon_.size() != 3)
    fail(ErrorCode::InvalidArgument, "line pair does not span a plane");
  // Equation: product of the linear forms (in plane coordinates) cutting the
  // two lines.
  auto line_form = [&](const Line& l) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& base : l.echelon())
      rows.push_back(*coords_in_echelon(out.plane_echelon_, base));
    auto ker = kernel_basis(Matrix::from_rows(rows, out.field_));
    HomogeneousForm lf(2, 1, out.field_);
    for (int j = 0; j < 3; ++j) {
      ExponentVector ev(3, 0);
      ev[j] = 1;
      lf.set_coeff(ev, ker[0][j]);
    }
    return lf;
  };
  out.equation_ = normalized_equation(line_form(l1) * line_form(l2));
  out.l1_ = l1;
  out.l2_ = l2;
  out.node_ = *node;
  if (out.l2_->cmp(*out.l1_) < 0) std::swap(*out.l1_, *out.l2_);
  return out;
}

std::optional<Conic> Conic::fit_through(const std::vector<ProjPoint>& pts) {
  if (pts.size() != 5) return std::nullopt;
  PointSet distinct((std::vector<ProjPoint>(pts)));
  if (distinct.size() != 5) return std::nullopt;
  const FieldSpec& f = pts[0].field();
  std::vector<std::vector<Scalar>> coords;
  for (const auto& p : pts) coords.push_back(p.coords());
  auto plane = span_echelon_basis(coords, f);
  if (plane.size() != 3) return std::nullopt;  // collinear-heavy or non-planar
  // Degree-2 monomial vectors of the points in plane coordinates.
  VeroneseSpace quad(2, 2);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : pts) {
    auto y = coords_in_echelon(plane, p.coords());
    rows.push_back(veronese_map(ProjPoint::normalize(*y), quad));
  }
  auto ker = kernel_basis(Matrix::from_rows(rows, f));
  if (ker.size() != 1) return std::nullopt;  // no unique conic through them
  // Assemble the symmetric matrix of the quadric to test smoothness.
  const auto& monos = quad.monomials();
  HomogeneousForm q(2, 2, f);
  for (std::size_t i = 0; i < monos.size(); ++i) q.set_coeff(monos[i], ker[0][i]);
  Scalar half = Scalar::from_int(2, f).inverse();
  Matrix B(3, 3, f);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ExponentVector ev(3, 0);
      ev[i] += 1;
      ev[j] += 1;
      Scalar c = q.coeff(ev);
      B.at(i, j) = i == j ? c : c * half;
    }
  if (mat_rank(B) != 3) return std::nullopt;  // singular: covered by line pairs
  // Stereographic parametrization from the first point.
  auto q0 = *coords_in_echelon(plane, pts[0].coords());
  int k = -1;
  for (int i = 0; i < 3; ++i)
    if (!q0[i].is_zero()) {
      k = i;
      break;
    }
  int a = (k + 1) % 3, b = (k + 2) % 3;
  if (a > b) std::swap(a, b);
  auto qval = [&](const std::vector<Scalar>& y) { return q.evaluate(y); };
  auto polar = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    std::vector<Scalar> sum(3, Scalar::zero(f));
    for (int i = 0; i < 3; ++i) sum[i] = u[i] + v[i];
    return qval(sum) - qval(u) - qval(v);
  };
  std::vector<Scalar> ea(3, Scalar::zero(f)), eb(3, Scalar::zero(f));
  ea[a] = Scalar::one(f);
  eb[b] = Scalar::one(f);
  // phi(s,t) = q(u) Q0 - polar(Q0, u) u with u = s ea + t eb, expanded in
  // the monomials s^2, st, t^2.
  Scalar qa = qval(ea), qb = qval(eb), qab = polar(ea, eb);
  Scalar pa = polar(q0, ea), pb = polar(q0, eb);
  std::vector<std::vector<Scalar>> fr(3, std::vector<Scalar>(3));
  for (int i = 0; i < 3; ++i) {
    fr[0][i] = qa * q0[i] - pa * ea[i];
    fr[1][i] = qab * q0[i] - pa * eb[i] - pb * ea[i];
    fr[2][i] = qb * q0[i] - pb * eb[i];
  }
  if (span_rank(fr, f) != 3) return std::nullopt;
  // Lift the plane-coordinate frame back to ambient coordinates.
  std::size_t n = plane[0].size();
  Conic out;
  out.kind_ = Kind::Smooth;
  out.field_ = f;
  for (int i = 0; i < 3; ++i) {
    std::vector<Scalar> amb(n, Scalar::zero(f));
    for (int rrow = 0; rrow < 3; ++rrow)
      for (std::size_t j = 0; j < n; ++j)
        amb[j] += fr[i][rrow] * plane[rrow][j];
    out.frame_.push_back(std::move(amb));
  }
  out.derive_plane_and_equation();
  return out;
}

bool Conic::contains(const ProjPoint& p) const {
  auto y = coords_in_echelon(plane_echelon_, p.coords());
  if (!y) return false;
  return equation_.evaluate(*y).is_zero();
}

ProjPoint Conic::at(const Scalar& s, const Scalar& t) const {
  if (kind_ != Kind::Smooth)
    fail(ErrorCode::InvalidArgument, "parametrization needs a smooth conic");
  std::size_t n = frame_[0].size();
  std::vector<Scalar> v(n, Scalar::zero(field_));
  Scalar ss = s * s, st = s * t, tt = t * t;
  for (std::size_t j = 0; j < n; ++j)
    v[j] = ss * frame_[0][j] + st * frame_[1][j] + tt * frame_[2][j];
  return ProjPoint::normalize(v);
}

std::optional<ProjPoint> Conic::parameter_of(const ProjPoint& p) const {
  if (kind_ != Kind::Smooth)
    fail(ErrorCode::InvalidArgument, "parametrization needs a smooth conic");
  auto y = coords_in_echelon(plane_echelon_, p.coords());
  if (!y) return std::nullopt;
  // Frame coordinates z with p ~ z0 c0 + z1 c1 + z2 c2 and z = (s^2, st, t^2).
  std::vector<std::vector<Scalar>> fcols;
  for (const auto& v : frame_)
    fcols.push_back(*coords_in_echelon(plane_echelon_, v));
  auto z = solve(Matrix::from_columns(fcols, field_), *y);
  if (!z) return std::nullopt;
  const Scalar& z0 = (*z)[0];
  const Scalar& z1 = (*z)[1];
  const Scalar& z2 = (*z)[2];
  if (z1 * z1 != z0 * z2) return std::nullopt;  // off the conic
  ProjPoint param = !z0.is_zero() ? ProjPoint::normalize({z0, z1})
                                  : ProjPoint::normalize({z1, z2});
  return at(param.coords()[0], param.coords()[1]) == p
             ? std::optional<ProjPoint>(param)
             : std::nullopt;
}

std::vector<AmbientVector> Conic::moment_basis(
    const VeroneseSpace& space) const {
  if (kind_ != Kind::Smooth)
    fail(ErrorCode::InvalidArgument, "moment basis needs a smooth conic");
  std::vector<std::vector<Scalar>> coord_polys;
  std::size_t n = frame_[0].size();
  if (space.r() + 1 != static_cast<int>(n))
    fail(ErrorCode::DimensionMismatch, "conic lives in a different P^r");
  coord_polys.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    coord_polys.push_back({frame_[0][j], frame_[1][j], frame_[2][j]});
  return moment_columns(coord_polys, space, field_);
}

const Line& Conic::line1() const {
  if (kind_ != Kind::TwoLines)
    fail(ErrorCode::InvalidArgument, "not a reducible conic");
  return *l1_;
}

const Line& Conic::line2() const {
  if (kind_ != Kind::TwoLines)
    fail(ErrorCode::InvalidArgument, "not a reducible conic");
  return *l2_;
}

const ProjPoint& Conic::node() const {
  if (kind_ != Kind::TwoLines)
    fail(ErrorCode::InvalidArgument, "not a reducible conic");
  return node_;
}

int Conic::cmp(const Conic& rhs) const {
  if (plane_echelon_.size() != rhs.plane_echelon_.size())
    return plane_echelon_.size() < rhs.plane_echelon_.size() ? -1 : 1;
  for (std::size_t i = 0; i < plane_echelon_.size(); ++i)
    for (std::size_t j = 0; j < plane_echelon_[i].size(); ++j) {
      int c = Scalar::canonical_cmp(plane_echelon_[i][j],
                                    rhs.plane_echelon_[i][j]);
      if (c != 0) return c;
    }
  // Same plane: compare normalized equations coefficientwise in grlex order.
  VeroneseSpace quad(2, 2);
  for (const ExponentVector& e : quad.monomials()) {
    int c = Scalar::canonical_cmp(equation_.coeff(e), rhs.equation_.coeff(e));
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace waring
