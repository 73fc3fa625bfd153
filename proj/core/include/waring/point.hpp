#pragma once

#include <vector>

#include "waring/field.hpp"

namespace waring {

/// A point of P^r with canonical coordinates: the first nonzero coordinate
/// equals 1, so equality of points is coordinate-wise equality.
class ProjPoint {
 public:
  ProjPoint() = default;

  /// Canonicalizes raw coordinates; throws AllZero on the zero vector.
  static ProjPoint normalize(const std::vector<Scalar>& raw);

  const std::vector<Scalar>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size() - 1; }  // ambient r
  const FieldSpec& field() const { return coords_.front().field(); }

  bool operator==(const ProjPoint& rhs) const { return coords_ == rhs.coords_; }
  bool operator!=(const ProjPoint& rhs) const { return !(*this == rhs); }

  /// Lexicographic order on canonical coordinates (total order on points).
  static int cmp(const ProjPoint& a, const ProjPoint& b);
  bool operator<(const ProjPoint& rhs) const { return cmp(*this, rhs) < 0; }

  std::string to_string() const;

 private:
  std::vector<Scalar> coords_;
};

/// An ordered set of distinct projective points, kept sorted in the canonical
/// order so that set equality is list equality.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<ProjPoint> points);

  const std::vector<ProjPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const ProjPoint& operator[](std::size_t i) const { return points_[i]; }

  bool contains(const ProjPoint& p) const;
  PointSet with(const ProjPoint& p) const;
  PointSet without(const ProjPoint& p) const;
  static PointSet union_of(const PointSet& a, const PointSet& b);
  static PointSet intersection(const PointSet& a, const PointSet& b);
  static PointSet difference(const PointSet& a, const PointSet& b);

  bool operator==(const PointSet& rhs) const { return points_ == rhs.points_; }
  bool operator!=(const PointSet& rhs) const { return !(*this == rhs); }
  bool operator<(const PointSet& rhs) const;

  std::string to_string() const;

 private:
  std::vector<ProjPoint> points_;
};

}  // namespace waring
