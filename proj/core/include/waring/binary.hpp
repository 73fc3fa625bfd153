#pragma once

#include <optional>

#include "waring/matrix.hpp"
#include "waring/point.hpp"
#include "waring/poly.hpp"
#include "waring/rng.hpp"

namespace waring {

/// A nonzero binary form of degree d: coeffs[i] is the coefficient of
/// x^(d-i) y^i. This is also the coordinate vector of a point of P^d in the
/// grlex monomial order, so a binary form *is* an ambient vector for r = 1.
class BinaryForm {
 public:
  BinaryForm(int d, std::vector<Scalar> coeffs);

  static BinaryForm from_coeffs(const std::vector<Scalar>& coeffs);
  static BinaryForm from_homogeneous(const HomogeneousForm& f);
  HomogeneousForm to_homogeneous() const;

  int degree() const { return d_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& coeff(int i) const { return coeffs_[i]; }

  bool is_zero() const;
  Scalar evaluate(const Scalar& x, const Scalar& y) const;
  Scalar evaluate(const ProjPoint& p) const;

  BinaryForm operator+(const BinaryForm& rhs) const;
  BinaryForm scaled(const Scalar& c) const;
  BinaryForm operator*(const BinaryForm& rhs) const;  // form product

  bool operator==(const BinaryForm& rhs) const;
  bool proportional_to(const BinaryForm& rhs) const;

  std::string to_string() const;

 private:
  int d_;
  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

/// Contraction of f by a degree-k form g under the Hankel pairing:
/// (g . f)_u = sum_v g_v f_{u+v}, a form of degree d-k. On Veronese images
/// it acts as g . nu_d(a) = g(a) nu_{d-k}(a), which is what makes kernels of
/// the catalecticant detect decomposition nodes.
BinaryForm contract(const BinaryForm& f, const BinaryForm& g);

/// The (d-k+1) x (k+1) catalecticant matrix of f in degree k: entry (u, v)
/// is coeff(u+v). Kernel vectors are the degree-k apolar forms of f.
Matrix catalecticant(const BinaryForm& f, int k);

/// All degree-k apolar forms of f, as a canonical basis (may be empty).
std::vector<BinaryForm> apolar_system(const BinaryForm& f, int k);

/// Border rank: the smallest k >= 1 with a nonzero degree-k apolar form.
/// Always at most floor((d+2)/2).
int border_rank(const BinaryForm& f);

/// Nodes of a split square-free form: its distinct roots in P^1, exactly
/// deg(g) of them. Returns nullopt if g has a repeated root or an
/// irrational/irreducible factor over the coefficient field.
std::optional<std::vector<ProjPoint>> split_nodes(const BinaryForm& g);

bool is_square_free(const BinaryForm& g);

/// A rank-witnessing decomposition on the rational normal curve:
/// sum w_i nu_d(node_i) equals the form's coefficient vector exactly.
struct BinaryDecomposition {
  int d;
  PointSet nodes;               // distinct points of P^1, canonical order
  std::vector<Scalar> weights;  // aligned with nodes, all nonzero

  bool verify_against(const BinaryForm& f) const;
};

/// Result of the full rank analysis of a binary form.
struct BinaryAnalysis {
  BinaryForm form;
  int border_rank;         // t
  int rank;                // s, the field-rational symmetric rank
  BinaryForm apolar_low;   // a minimal-degree apolar form (degree t)
  int family_dim;          // dim of the degree-s apolar system, minus 1
  BinaryForm witness;      // split square-free apolar form of degree s
  std::vector<ProjPoint> witness_nodes;  // its roots; a decomposition support

  /// The set of minimal decompositions is infinite iff the degree-s apolar
  /// system has projective dimension >= 1.
  bool family_infinite() const { return family_dim >= 1; }
};

/// Sylvester analysis: border rank t from the catalecticant profile, then
/// the smallest degree s >= t whose apolar system contains a split
/// square-free form; that s is the rank over the coefficient field and the
/// found form is kept as the witness. Over the rationals the per-degree
/// search is necessarily partial; NonSplitApolar is raised when no witness
/// is found (switch to a prime field).
BinaryAnalysis sylvester_analyze(const BinaryForm& f);

/// Extracts one certified decomposition from the analysis witness.
BinaryDecomposition sylvester_decompose(const BinaryForm& f);
BinaryDecomposition decompose_with_witness(const BinaryForm& f,
                                           const BinaryForm& witness);

/// Up to `count` pairwise-distinct certified decompositions of f, sampled
/// deterministically from the degree-s apolar system. When the system is a
/// pencil the rational members are enumerated outright and batches with
/// different seeds slice the pool disjointly; in higher dimension members
/// are drawn by rejection sampling. For a form with a unique decomposition
/// the single decomposition is returned.
std::vector<BinaryDecomposition> decomposition_family(const BinaryForm& f,
                                                      std::size_t count,
                                                      std::uint64_t seed);

/// Contraction of f by the product of the linear forms vanishing at the
/// points of E: the projection from <nu_d(E)> restricted to the rational
/// normal curve. Requires d - #E >= 2; DegenerateProjection if f is killed.
BinaryForm project_from_nodes(const BinaryForm& f, const PointSet& e);

/// All points of P^1(F_p) in canonical order.
std::vector<ProjPoint> projective_line_points(const FieldSpec& field);

}  // namespace waring
