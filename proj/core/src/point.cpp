#include "waring/point.hpp"

#include <algorithm>
#include <sstream>

namespace waring {

ProjPoint ProjPoint::normalize(const std::vector<Scalar>& raw) {
  if (raw.empty()) fail(ErrorCode::InvalidArgument, "empty coordinate vector");
  std::size_t lead = raw.size();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!raw[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead == raw.size())
    fail(ErrorCode::AllZero, "projective point has all coordinates zero");
  ProjPoint p;
  Scalar inv = raw[lead].inverse();
  p.coords_.reserve(raw.size());
  for (const Scalar& c : raw) p.coords_.push_back(c * inv);
  return p;
}

int ProjPoint::cmp(const ProjPoint& a, const ProjPoint& b) {
  if (a.coords_.size() != b.coords_.size())
    fail(ErrorCode::DimensionMismatch, "comparing points of different spaces");
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    int c = Scalar::canonical_cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ":";
    os << coords_[i].to_string();
  }
  os << ")";
  return os.str();
}

PointSet::PointSet(std::vector<ProjPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const ProjPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::with(const ProjPoint& p) const {
  std::vector<ProjPoint> pts = points_;
  pts.push_back(p);
  return PointSet(std::move(pts));
}

PointSet PointSet::without(const ProjPoint& p) const {
  std::vector<ProjPoint> pts;
  pts.reserve(points_.size());
  for (const auto& q : points_)
    if (q != p) pts.push_back(q);
  return PointSet(std::move(pts));
}

PointSet PointSet::union_of(const PointSet& a, const PointSet& b) {
  std::vector<ProjPoint> pts = a.points_;
  pts.insert(pts.end(), b.points_.begin(), b.points_.end());
  return PointSet(std::move(pts));
}

PointSet PointSet::intersection(const PointSet& a, const PointSet& b) {
  std::vector<ProjPoint> pts;
  for (const auto& p : a.points_)
    if (b.contains(p)) pts.push_back(p);
  return PointSet(std::move(pts));
}

PointSet PointSet::difference(const PointSet& a, const PointSet& b) {
  std::vector<ProjPoint> pts;
  for (const auto& p : a.points_)
    if (!b.contains(p)) pts.push_back(p);
  return PointSet(std::move(pts));
}

bool PointSet::operator<(const PointSet& rhs) const {
  return std::lexicographical_compare(points_.begin(), points_.end(),
                                      rhs.points_.begin(), rhs.points_.end());
}

std::string PointSet::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) os << ", ";
    os << points_[i].to_string();
  }
  os << "}";
  return os.str();
}

}  // namespace waring
