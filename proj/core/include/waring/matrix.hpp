#pragma once

#include <optional>
#include <vector>

#include "waring/field.hpp"

namespace waring {

/// Dense matrix of exact scalars over a single field.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
      : rows_(rows), cols_(cols), field_(field),
        data_(rows * cols, Scalar::zero(field)) {}

  static Matrix identity(std::size_t n, const FieldSpec& field);
  /// Builds the matrix whose columns are the given vectors (all same length).
  static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols,
                             const FieldSpec& field);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          const FieldSpec& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix transposed() const;
  std::vector<Scalar> row(std::size_t i) const;
  std::vector<Scalar> column(std::size_t j) const;

  bool operator==(const Matrix& rhs) const;

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

/// Exact rank. Fraction-free (Bareiss) elimination over the rationals,
/// ordinary Gaussian elimination over a prime field.
std::size_t mat_rank(const Matrix& m);

/// Basis of the right null space, canonicalized (reduced echelon on the
/// basis, primitive integer vectors over the rationals). The count always
/// equals cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// One exact solution of M x = b, or nullopt if the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         const std::vector<Scalar>& b);

/// Basis of span(basis1) intersected with span(basis2).
std::vector<std::vector<Scalar>> subspace_intersect(
    const std::vector<std::vector<Scalar>>& basis1,
    const std::vector<std::vector<Scalar>>& basis2, const FieldSpec& field);

/// Canonical reduced row-echelon basis of the span of the given vectors.
/// Two vector lists span the same subspace iff their echelon bases are equal.
std::vector<std::vector<Scalar>> span_echelon_basis(
    const std::vector<std::vector<Scalar>>& vectors, const FieldSpec& field);

std::size_t span_rank(const std::vector<std::vector<Scalar>>& vectors,
                      const FieldSpec& field);

// Elementwise helpers on scalar vectors.
std::vector<Scalar> vec_add(const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b);
std::vector<Scalar> vec_scale(const Scalar& c, const std::vector<Scalar>& v);
bool vec_is_zero(const std::vector<Scalar>& v);

}  // namespace waring
