#pragma once

#include <optional>
#include <utility>

#include "waring/binary.hpp"
#include "waring/veronese.hpp"

namespace waring {

/// A projective line in P^r with the rational parametrization
/// phi(s:t) = s*b0 + t*b1. Lines compare equal iff they are the same
/// subspace (canonical echelon representation).
class Line {
 public:
  Line(const ProjPoint& a, const ProjPoint& b);

  const ProjPoint& base0() const { return b0_; }
  const ProjPoint& base1() const { return b1_; }
  const FieldSpec& field() const { return b0_.field(); }
  int ambient_r() const { return static_cast<int>(b0_.dim()); }

  ProjPoint at(const Scalar& s, const Scalar& t) const;
  ProjPoint at(const ProjPoint& param) const;
  bool contains(const ProjPoint& p) const;

  /// Parameter (s:t) with at(s,t) = p, as a canonical point of P^1.
  std::optional<ProjPoint> parameter_of(const ProjPoint& p) const;

  /// Columns M_0..M_d of the moment matrix of <nu_d(line)>:
  /// nu_d(at(s,t)) = sum_i s^(d-i) t^i M_i. The span of the columns is the
  /// span of the embedded rational normal curve.
  std::vector<AmbientVector> moment_basis(const VeroneseSpace& space) const;

  const std::vector<std::vector<Scalar>>& echelon() const { return echelon_; }
  bool operator==(const Line& rhs) const { return echelon_ == rhs.echelon_; }
  int cmp(const Line& rhs) const;
  bool operator<(const Line& rhs) const { return cmp(rhs) < 0; }

  /// Intersection point of two coplanar distinct lines, if any.
  static std::optional<ProjPoint> intersection(const Line& l1, const Line& l2);

 private:
  ProjPoint b0_, b1_;
  std::vector<std::vector<Scalar>> echelon_;
};

/// A reduced conic inside a plane of P^r: either smooth, carried with a
/// rational parametrization phi(s:t) = s^2 c0 + s t c1 + t^2 c2, or a pair
/// of distinct lines. Double lines are rejected.
class Conic {
 public:
  enum class Kind { Smooth, TwoLines };

  /// Smooth conic from an independent frame: the image of
  /// (s:t) -> s^2 c0 + s t c1 + t^2 c2.
  static Conic smooth_from_frame(const ProjPoint& c0, const ProjPoint& c1,
                                 const ProjPoint& c2);
  /// The unique conic through five points spanning a plane, if it exists, is
  /// unique, and is reduced. Smooth conics come back parametrized via
  /// stereographic projection from the first input point.
  static std::optional<Conic> fit_through(const std::vector<ProjPoint>& pts);
  static Conic two_lines(const Line& l1, const Line& l2);

  Kind kind() const { return kind_; }
  const FieldSpec& field() const { return field_; }

  bool contains(const ProjPoint& p) const;

  // Smooth-only interface.
  ProjPoint at(const Scalar& s, const Scalar& t) const;
  std::optional<ProjPoint> parameter_of(const ProjPoint& p) const;
  /// Moment basis of <nu_d(conic)>: 2d+1 columns with
  /// nu_d(at(s,t)) = sum_i s^(2d-i) t^i M_i.
  std::vector<AmbientVector> moment_basis(const VeroneseSpace& space) const;

  // TwoLines-only interface.
  const Line& line1() const;
  const Line& line2() const;
  /// The singular point L1 cap L2.
  const ProjPoint& node() const;

  /// Canonical key: plane echelon plus normalized plane equation.
  int cmp(const Conic& rhs) const;
  bool operator==(const Conic& rhs) const { return cmp(rhs) == 0; }
  bool operator<(const Conic& rhs) const { return cmp(rhs) < 0; }

 private:
  Conic() : field_(FieldSpec::rational()) {}

  Kind kind_ = Kind::Smooth;
  FieldSpec field_;
  // Plane data: canonical echelon basis (3 rows) and the degree-2 equation
  // in the coordinates attached to those rows.
  std::vector<std::vector<Scalar>> plane_echelon_;
  HomogeneousForm equation_{2, 2, FieldSpec::rational()};
  // Smooth: parametrization frame (ambient cone vectors).
  std::vector<std::vector<Scalar>> frame_;
  // TwoLines: components and node.
  std::optional<Line> l1_, l2_;
  ProjPoint node_;

  void derive_plane_and_equation();
};

/// Coordinates of p in the row space of a reduced echelon basis, or nullopt
/// if p is outside the subspace.
std::optional<std::vector<Scalar>> coords_in_echelon(
    const std::vector<std::vector<Scalar>>& echelon,
    const std::vector<Scalar>& v);

}  // namespace waring
