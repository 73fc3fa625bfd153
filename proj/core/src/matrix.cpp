#include "waring/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace waring {

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>>& cols,
                            const FieldSpec& field) {
  if (cols.empty()) return Matrix(0, 0, field);
  Matrix m(cols[0].size(), cols.size(), field);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows())
      fail(ErrorCode::DimensionMismatch, "ragged column list");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         const FieldSpec& field) {
  if (rows.empty()) return Matrix(0, 0, field);
  Matrix m(rows.size(), rows[0].size(), field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      fail(ErrorCode::DimensionMismatch, "ragged row list");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  std::vector<Scalar> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || !(field_ == rhs.field_))
    return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != rhs.data_[i]) return false;
  return true;
}

namespace {

// ---------------------------------------------------------------------------
// Prime-field backend: plain Gaussian elimination on raw representatives.
// ---------------------------------------------------------------------------

struct FpEchelon {
  std::vector<std::vector<std::uint64_t>> rows;  // reduced row echelon form
  std::vector<std::size_t> pivots;               // pivot column per rank row
};

FpEchelon fp_rref(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  FpEchelon out;
  if (m.empty()) return out;
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    std::uint64_t inv = fp::inv(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = fp::mul(m[r][j], inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = fp::sub(m[i][j], fp::mul(f, m[r][j], p), p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::vector<std::vector<std::uint64_t>> to_fp(const Matrix& m) {
  std::vector<std::vector<std::uint64_t>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = m.at(i, j).prime_value();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rational backend: Bareiss fraction-free elimination on integer rows
// (denominators cleared rowwise; row scaling changes neither rank nor the
// right null space).
// ---------------------------------------------------------------------------

struct IntEchelon {
  std::vector<std::vector<BigInt>> rows;  // upper echelon, integer entries
  std::vector<std::size_t> pivots;
};

std::vector<std::vector<BigInt>> to_cleared_int(const Matrix& m) {
  std::vector<std::vector<BigInt>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt& den =
          boost::multiprecision::denominator(m.at(i, j).rational_value());
      l = boost::multiprecision::lcm(l, den);
    }
    out[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigRat& q = m.at(i, j).rational_value();
      out[i][j] = boost::multiprecision::numerator(q) *
                  (l / boost::multiprecision::denominator(q));
    }
  }
  return out;
}

IntEchelon bareiss_echelon(std::vector<std::vector<BigInt>> m) {
  IntEchelon out;
  if (m.empty()) return out;
  std::size_t cols = m[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        // One-step fraction-free update; the division by the previous pivot
        // is exact (entries stay minors of the input).
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

// Back-substitution over the rationals from a Bareiss echelon. `rhs` holds
// values for the pivot rows; free columns are fixed by `fixed`.
std::vector<BigRat> back_substitute(const IntEchelon& ech, std::size_t cols,
                                    const std::vector<BigRat>& rhs,
                                    const std::vector<BigRat>& fixed) {
  std::vector<BigRat> x = fixed;
  x.resize(cols);
  for (std::size_t k = ech.pivots.size(); k-- > 0;) {
    std::size_t c = ech.pivots[k];
    BigRat acc = rhs[k];
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (ech.rows[k][j] != 0) acc -= BigRat(ech.rows[k][j]) * x[j];
    }
    x[c] = acc / BigRat(ech.rows[k][c]);
  }
  return x;
}

// Scales a rational vector to a primitive integer vector with positive
// leading entry; canonical representative of its line.
std::vector<Scalar> make_primitive(const std::vector<BigRat>& v) {
  BigInt l = 1;
  for (const BigRat& q : v)
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  std::vector<BigInt> w(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = boost::multiprecision::numerator(v[i]) *
           (l / boost::multiprecision::denominator(v[i]));
    g = boost::multiprecision::gcd(g, w[i]);
  }
  if (g == 0) g = 1;
  bool flip = false;
  for (const BigInt& c : w) {
    if (c != 0) {
      flip = c < 0;
      break;
    }
  }
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (BigInt& c : w) {
    BigInt d = c / g;
    out.push_back(Scalar::from_rational(BigRat(flip ? -d : d),
                                        FieldSpec::rational()));
  }
  return out;
}

}  // namespace

std::size_t mat_rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_prime())
    return fp_rref(to_fp(m), m.field().p()).pivots.size();
  return bareiss_echelon(to_cleared_int(m)).pivots.size();
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  const FieldSpec field = m.field();
  std::vector<std::vector<Scalar>> out;
  if (m.cols() == 0) return out;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Scalar> e(m.cols(), Scalar::zero(field));
      e[j] = Scalar::one(field);
      out.push_back(std::move(e));
    }
    return out;
  }
  if (field.is_prime()) {
    const std::uint64_t p = field.p();
    FpEchelon ech = fp_rref(to_fp(m), p);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : ech.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
      if (is_pivot[f]) continue;
      std::vector<Scalar> v(m.cols(), Scalar::zero(field));
      v[f] = Scalar::one(field);
      for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
        std::uint64_t c = ech.rows[k][f];
        if (c != 0)
          v[ech.pivots[k]] = Scalar::from_int(0, field) -
                             Scalar::from_rational(BigRat(c), field);
      }
      out.push_back(std::move(v));
    }
    return out;
  }
  IntEchelon ech = bareiss_echelon(to_cleared_int(m));
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRat> fixed(m.cols(), BigRat(0));
    fixed[f] = 1;
    std::vector<BigRat> rhs(ech.pivots.size(), BigRat(0));
    // Move the free column's contribution to the right-hand side.
    for (std::size_t k = 0; k < ech.pivots.size(); ++k)
      rhs[k] = -BigRat(ech.rows[k][f]);
    // Zero out the free columns other than f during substitution: they are
    // already zero in `fixed`, and back_substitute only fills pivots.
    std::vector<BigRat> x = fixed;
    for (std::size_t k = ech.pivots.size(); k-- > 0;) {
      std::size_t c = ech.pivots[k];
      BigRat acc = 0;
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        if (ech.rows[k][j] != 0) acc -= BigRat(ech.rows[k][j]) * x[j];
      x[c] = acc / BigRat(ech.rows[k][c]);
    }
    out.push_back(make_primitive(x));
  }
  return out;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         const std::vector<Scalar>& b) {
  if (b.size() != m.rows())
    fail(ErrorCode::DimensionMismatch, "solve: rhs length != rows");
  const FieldSpec field = m.field();
  const std::size_t n = m.cols();
  if (field.is_prime()) {
    const std::uint64_t p = field.p();
    auto rows = to_fp(m);
    for (std::size_t i = 0; i < m.rows(); ++i)
      rows[i].push_back(b[i].prime_value());
    FpEchelon ech = fp_rref(std::move(rows), p);
    std::vector<Scalar> x(n, Scalar::zero(field));
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
      if (ech.pivots[k] == n) return std::nullopt;  // pivot in the rhs column
      x[ech.pivots[k]] = Scalar::from_rational(BigRat(ech.rows[k][n]), field);
    }
    return x;
  }
  Matrix aug(m.rows(), n + 1, field);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n) = b[i];
  }
  IntEchelon ech = bareiss_echelon(to_cleared_int(aug));
  for (std::size_t c : ech.pivots)
    if (c == n) return std::nullopt;
  std::vector<BigRat> rhs(ech.pivots.size());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k)
    rhs[k] = BigRat(ech.rows[k][n]);
  // Truncate the rhs column before substituting.
  std::vector<BigRat> x(n, BigRat(0));
  for (std::size_t k = ech.pivots.size(); k-- > 0;) {
    std::size_t c = ech.pivots[k];
    BigRat acc = rhs[k];
    for (std::size_t j = c + 1; j < n; ++j)
      if (ech.rows[k][j] != 0) acc -= BigRat(ech.rows[k][j]) * x[j];
    x[c] = acc / BigRat(ech.rows[k][c]);
  }
  std::vector<Scalar> out;
  out.reserve(n);
  for (const BigRat& q : x) out.push_back(Scalar::from_rational(q, field));
  return out;
}

std::vector<std::vector<Scalar>> span_echelon_basis(
    const std::vector<std::vector<Scalar>>& vectors, const FieldSpec& field) {
  std::vector<std::vector<Scalar>> out;
  if (vectors.empty()) return out;
  Matrix m = Matrix::from_rows(vectors, field);
  if (field.is_prime()) {
    FpEchelon ech = fp_rref(to_fp(m), field.p());
    for (const auto& r : ech.rows) {
      std::vector<Scalar> row;
      row.reserve(r.size());
      for (std::uint64_t v : r)
        row.push_back(Scalar::from_rational(BigRat(v), field));
      out.push_back(std::move(row));
    }
    return out;
  }
  // Reduced echelon over the rationals: Bareiss forward pass, then full
  // rational reduction for a canonical basis.
  IntEchelon ech = bareiss_echelon(to_cleared_int(m));
  std::vector<std::vector<BigRat>> rows(ech.rows.size());
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    rows[i].assign(ech.rows[i].begin(), ech.rows[i].end());
    BigRat lead = rows[i][ech.pivots[i]];
    for (auto& e : rows[i]) e /= lead;
  }
  for (std::size_t i = ech.pivots.size(); i-- > 0;)
    for (std::size_t k = 0; k < i; ++k) {
      BigRat f = rows[k][ech.pivots[i]];
      if (f != 0)
        for (std::size_t j = 0; j < rows[k].size(); ++j)
          rows[k][j] -= f * rows[i][j];
    }
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    row.reserve(r.size());
    for (const BigRat& q : r) row.push_back(Scalar::from_rational(q, field));
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t span_rank(const std::vector<std::vector<Scalar>>& vectors,
                      const FieldSpec& field) {
  if (vectors.empty()) return 0;
  return mat_rank(Matrix::from_rows(vectors, field));
}

std::vector<std::vector<Scalar>> subspace_intersect(
    const std::vector<std::vector<Scalar>>& basis1,
    const std::vector<std::vector<Scalar>>& basis2, const FieldSpec& field) {
  if (basis1.empty() || basis2.empty()) return {};
  const std::size_t n = basis1[0].size();
  for (const auto& v : basis1)
    if (v.size() != n) fail(ErrorCode::DimensionMismatch, "ragged basis");
  for (const auto& v : basis2)
    if (v.size() != n) fail(ErrorCode::DimensionMismatch, "ragged basis");
  std::vector<std::vector<Scalar>> cols;
  cols.insert(cols.end(), basis1.begin(), basis1.end());
  cols.insert(cols.end(), basis2.begin(), basis2.end());
  Matrix m = Matrix::from_columns(cols, field);
  std::vector<std::vector<Scalar>> raw;
  for (const auto& k : kernel_basis(m)) {
    // kernel vector (alpha, beta) with U alpha + W beta = 0; U alpha lies in
    // both spans.
    std::vector<Scalar> v(n, Scalar::zero(field));
    for (std::size_t j = 0; j < basis1.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += k[j] * basis1[j][i];
    if (!vec_is_zero(v)) raw.push_back(std::move(v));
  }
  return span_echelon_basis(raw, field);
}

std::vector<Scalar> vec_add(const std::vector<Scalar>& a,
                            const std::vector<Scalar>& b) {
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch, "vector length mismatch");
  std::vector<Scalar> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

std::vector<Scalar> vec_scale(const Scalar& c, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(v);
  for (auto& e : out) e *= c;
  return out;
}

bool vec_is_zero(const std::vector<Scalar>& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

}  // namespace waring
