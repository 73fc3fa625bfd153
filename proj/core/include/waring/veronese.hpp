#pragma once

#include <optional>

#include "waring/matrix.hpp"
#include "waring/point.hpp"
#include "waring/poly.hpp"

namespace waring {

/// The target space of the degree-d Veronese embedding of P^r: coordinates
/// are indexed by the degree-d monomials in grlex order, N = C(r+d, r) - 1.
class VeroneseSpace {
 public:
  VeroneseSpace(int r, int d);

  int r() const { return r_; }
  int d() const { return d_; }
  int N() const { return static_cast<int>(monomials_.size()) - 1; }
  const std::vector<ExponentVector>& monomials() const { return monomials_; }

  bool operator==(const VeroneseSpace& rhs) const {
    return r_ == rhs.r_ && d_ == rhs.d_;
  }

 private:
  int r_, d_;
  std::vector<ExponentVector> monomials_;
};

/// A vector of length N+1: a point of P^N or a direction in its cone.
using AmbientVector = std::vector<Scalar>;

/// Image of a point under the Veronese map: all degree-d monomials of its
/// canonical coordinates, in grlex order. For canonical input the image is
/// itself canonical (leading nonzero coordinate 1).
AmbientVector veronese_map(const ProjPoint& a, const VeroneseSpace& space);

/// Evaluation matrix of a point set in degree t: one row per degree-t
/// monomial, one column per point. Its rank is the number of independent
/// conditions the set imposes on degree-t forms.
Matrix evaluation_matrix(const PointSet& z, int t, const FieldSpec& field);

/// Projective dimension of the span of nu_d(A).
int span_dim(const PointSet& a, const VeroneseSpace& space);

/// h^1 of the ideal sheaf of Z twisted by t, computed as the defect
/// #Z - rank(evaluation matrix). Zero exactly when Z imposes independent
/// conditions on degree-t forms.
int hilbert_defect(const PointSet& z, int t);

/// A hypersurface D = {equation = 0} of degree >= 1.
class Hypersurface {
 public:
  explicit Hypersurface(HomogeneousForm equation);
  const HomogeneousForm& equation() const { return equation_; }
  int degree() const { return equation_.degree(); }
  bool contains(const ProjPoint& p) const;

 private:
  HomogeneousForm equation_;
};

/// Res_D(Z) for reduced finite Z: the points of Z off D.
PointSet residual(const PointSet& z, const Hypersurface& d);

/// If P lies in the span of nu_d(A), the exact weights with
/// sum w_i nu_d(a_i) = P; otherwise nullopt.
std::optional<std::vector<Scalar>> in_span(const AmbientVector& p,
                                           const PointSet& a,
                                           const VeroneseSpace& space);

/// Basis of the intersection of two projective spans given by spanning
/// ambient vectors.
std::vector<AmbientVector> span_intersect_sets(
    const std::vector<AmbientVector>& u, const std::vector<AmbientVector>& w,
    const FieldSpec& field);

/// Veronese images of every point of the set, in set order.
std::vector<AmbientVector> veronese_images(const PointSet& a,
                                           const VeroneseSpace& space);

}  // namespace waring
