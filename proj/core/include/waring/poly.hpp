#pragma once

#include <map>
#include <string>
#include <vector>

#include "waring/field.hpp"

namespace waring {

/// Exponent vector of a degree-d monomial in r+1 variables: entries sum to d.
using ExponentVector = std::vector<int>;

/// Graded-lex order (degree first, then lex with x0 > x1 > ...), descending,
/// so x0^d comes first among degree-d monomials. This fixes the coordinate
/// order of the ambient projective space everywhere.
struct GrlexDesc {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// All exponent vectors of degree d in r+1 variables, in descending grlex
/// order. Size C(r+d, r).
std::vector<ExponentVector> monomials_of_degree(int r, int d);

long long binomial(int n, int k);

/// A nonzero homogeneous form of degree d in variables x0..xr with exact
/// coefficients. Zero coefficients are never stored.
class HomogeneousForm {
 public:
  HomogeneousForm(int r, int d, const FieldSpec& field)
      : r_(r), d_(d), field_(field) {}

  static HomogeneousForm monomial(int r, const ExponentVector& exps,
                                  const Scalar& coeff);

  int r() const { return r_; }
  int degree() const { return d_; }
  const FieldSpec& field() const { return field_; }
  const std::map<ExponentVector, Scalar, GrlexDesc>& terms() const {
    return terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const ExponentVector& exps) const;
  void set_coeff(const ExponentVector& exps, const Scalar& value);

  Scalar evaluate(const std::vector<Scalar>& coords) const;

  HomogeneousForm operator+(const HomogeneousForm& rhs) const;
  HomogeneousForm operator*(const HomogeneousForm& rhs) const;
  HomogeneousForm scaled(const Scalar& c) const;

  bool operator==(const HomogeneousForm& rhs) const;

  /// Canonical printing: terms in grlex order, `c*x0^2*x1` style, unit
  /// coefficients elided. parse_form(print()) reproduces the form.
  std::string to_string() const;

 private:
  int r_, d_;
  FieldSpec field_;
  std::map<ExponentVector, Scalar, GrlexDesc> terms_;
};

/// Parses the term grammar `c*x<i>^<e>*...` joined by `+`/`-`. Throws
/// ParseError, NotHomogeneous, or ZeroForm. The number of variables is
/// inferred as max index + 1 unless `expect_r` >= 0 pins it.
HomogeneousForm parse_form(const std::string& text, const FieldSpec& field,
                           int expect_r = -1);

}  // namespace waring
