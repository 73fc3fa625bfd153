#include "waring/builders.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "waring/cert.hpp"
#include "waring/rng.hpp"

namespace waring {

namespace {

Scalar random_scalar(Rng& rng, const FieldSpec& field, bool nonzero) {
  for (;;) {
    Scalar c = field.is_prime()
                   ? Scalar::from_int(
                         static_cast<long long>(rng.below(field.p())), field)
                   : Scalar::from_int(
                         static_cast<long long>(rng.below(41)) - 20, field);
    if (!nonzero || !c.is_zero()) return c;
  }
}

ProjPoint random_point(Rng& rng, int r, const FieldSpec& field) {
  for (;;) {
    std::vector<Scalar> coords;
    coords.reserve(r + 1);
    for (int i = 0; i <= r; ++i)
      coords.push_back(random_scalar(rng, field, false));
    try {
      return ProjPoint::normalize(coords);
    } catch (const Error&) {
      // all-zero draw; redraw
    }
  }
}

std::vector<Scalar> random_weights(Rng& rng, std::size_t n,
                                   const FieldSpec& field) {
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(random_scalar(rng, field, true));
  return out;
}

// Distinct parameter points of P^1, never (1:0) when exclude_base is set.
std::vector<ProjPoint> random_params(Rng& rng, std::size_t n,
                                     const FieldSpec& field,
                                     bool exclude_base) {
  PointSet seen;
  std::vector<ProjPoint> out;
  std::size_t guard = 0;
  while (out.size() < n) {
    if (++guard > 10000)
      fail(ErrorCode::InfeasibleParameters,
           "not enough distinct parameters over this field");
    Scalar s = Scalar::one(field);
    Scalar t = random_scalar(rng, field, exclude_base);
    // Occasionally take the point at infinity (0:1).
    if (!exclude_base && rng.below(16) == 0) {
      s = Scalar::zero(field);
      t = Scalar::one(field);
    }
    ProjPoint p = ProjPoint::normalize({s, t});
    if (seen.contains(p)) continue;
    seen = seen.with(p);
    out.push_back(p);
  }
  return out;
}

Decomposition assemble(const VeroneseSpace& space,
                       const std::vector<ProjPoint>& pts, Rng& rng,
                       const FieldSpec& field) {
  PointSet points(pts);
  if (points.size() != pts.size())
    fail(ErrorCode::InfeasibleParameters, "coincident sample points");
  auto weights = random_weights(rng, points.size(), field);
  return make_decomposition(space, points, weights);
}

bool independent_images(const Decomposition& dec) {
  return span_rank(veronese_images(dec.points, dec.space),
                   dec.target.front().field()) == dec.points.size();
}

}  // namespace

Decomposition build_case_a(int d, int r, int line_count, int off_count,
                           const FieldSpec& field, std::uint64_t seed) {
  const int threshold = (d + 3) / 2;  // ceil((d+2)/2)
  if (r < 2 || d < 3 || line_count < threshold || line_count > d + 1 ||
      off_count < 0 || 2 * (line_count + off_count) >= 3 * d)
    fail(ErrorCode::InfeasibleParameters,
         "case A needs ceil((d+2)/2) <= line_count <= d+1 and "
         "2(line_count+off_count) < 3d in r >= 2");
  VeroneseSpace space(r, d);
  for (std::uint64_t trial = 0; trial < 64; ++trial) {
    Rng rng(Rng(seed).split(trial).next());
    ProjPoint b0 = random_point(rng, r, field);
    ProjPoint b1 = random_point(rng, r, field);
    if (b0 == b1) continue;
    Line line(b0, b1);
    std::vector<ProjPoint> pts;
    bool clash = false;
    for (const auto& prm : random_params(rng, line_count, field, false))
      pts.push_back(line.at(prm));
    for (int i = 0; i < off_count; ++i) {
      ProjPoint q = random_point(rng, r, field);
      if (line.contains(q)) {
        clash = true;
        break;
      }
      pts.push_back(q);
    }
    if (clash) continue;
    try {
      Decomposition dec = assemble(space, pts, rng, field);
      if (!independent_images(dec)) continue;
      StructureReport rep = classify_decomposition(dec);
      if (rep.kind != StructureCase::A) continue;
      if (!rep.splice_analysis->family_infinite()) continue;
      return dec;
    } catch (const Error&) {
      continue;
    }
  }
  fail(ErrorCode::InfeasibleParameters,
       "no certified case A instance after 64 trials");
}

Decomposition build_case_b(int d, int r, int conic_count, int off_count,
                           const FieldSpec& field, std::uint64_t seed) {
  if (r < 2 || d < 4 || conic_count < d + 1 || conic_count > 2 * d + 1 ||
      off_count < 0 || 2 * (conic_count + off_count) >= 3 * d)
    fail(ErrorCode::InfeasibleParameters,
         "case B needs d+1 <= conic_count <= 2d+1 and "
         "2(conic_count+off_count) < 3d in r >= 2");
  VeroneseSpace space(r, d);
  for (std::uint64_t trial = 0; trial < 64; ++trial) {
    Rng rng(Rng(seed).split(0xb + trial).next());
    ProjPoint c0 = random_point(rng, r, field);
    ProjPoint c1 = random_point(rng, r, field);
    ProjPoint c2 = random_point(rng, r, field);
    if (span_rank({c0.coords(), c1.coords(), c2.coords()}, field) != 3)
      continue;
    Conic conic = Conic::smooth_from_frame(c0, c1, c2);
    std::vector<ProjPoint> pts;
    bool clash = false;
    for (const auto& prm : random_params(rng, conic_count, field, false))
      pts.push_back(conic.at(prm.coords()[0], prm.coords()[1]));
    for (int i = 0; i < off_count; ++i) {
      ProjPoint q = random_point(rng, r, field);
      if (conic.contains(q)) {
        clash = true;
        break;
      }
      pts.push_back(q);
    }
    if (clash) continue;
    try {
      Decomposition dec = assemble(space, pts, rng, field);
      if (!independent_images(dec)) continue;
      StructureReport rep = classify_decomposition(dec);
      if (rep.kind != StructureCase::B) continue;
      if (!rep.splice_analysis->family_infinite()) continue;
      return dec;
    } catch (const Error&) {
      continue;
    }
  }
  fail(ErrorCode::InfeasibleParameters,
       "no certified case B instance after 64 trials");
}

Decomposition build_case_c(int d, int r, const FieldSpec& field,
                           std::uint64_t seed) {
  if (d < 3 || d % 2 == 0 || r < 2)
    fail(ErrorCode::InfeasibleParameters, "case C needs odd d >= 3 and r >= 2");
  const int k = (d + 1) / 2;
  VeroneseSpace space(r, d);
  for (std::uint64_t trial = 0; trial < 64; ++trial) {
    Rng rng(Rng(seed).split(0xC + trial).next());
    ProjPoint node = random_point(rng, r, field);
    ProjPoint u1 = random_point(rng, r, field);
    ProjPoint u2 = random_point(rng, r, field);
    if (span_rank({node.coords(), u1.coords(), u2.coords()}, field) != 3)
      continue;
    Line l1(node, u1), l2(node, u2);
    std::vector<ProjPoint> pts;
    // Parameters (1:t), t != 0, keep the node (param (1:0)) off both lines.
    for (const auto& prm : random_params(rng, k, field, true))
      pts.push_back(l1.at(prm));
    for (const auto& prm : random_params(rng, k, field, true))
      pts.push_back(l2.at(prm));
    try {
      Decomposition dec = assemble(space, pts, rng, field);
      if (!independent_images(dec)) continue;
      StructureReport rep = classify_decomposition(dec);
      if (rep.kind != StructureCase::C) continue;
      return dec;
    } catch (const Error&) {
      continue;
    }
  }
  fail(ErrorCode::InfeasibleParameters,
       "no certified case C instance after 64 trials");
}

PlaneCubic find_rich_cubic(const FieldSpec& field, std::size_t min_points,
                           std::uint64_t seed) {
  if (!field.is_prime())
    fail(ErrorCode::InvalidArgument, "cubic search needs a prime field");
  const std::uint64_t p = field.p();
  if (p + 1 + 2 * static_cast<std::uint64_t>(std::sqrt(double(p))) + 1 <
      min_points)
    fail(ErrorCode::CurveTooSmall,
         "Hasse bound rules out enough rational points at this p");
  Rng rng(seed);
  const std::uint64_t offset = rng.below(p * p);
  for (std::uint64_t k = 0; k < p * p; ++k) {
    std::uint64_t code = (offset + k) % (p * p);
    std::uint64_t a = code % p, b = code / p;
    // Smoothness: 4a^3 + 27b^2 != 0.
    std::uint64_t disc =
        fp::add(fp::mul(4, fp::pow(a, 3, p), p),
                fp::mul(27, fp::mul(b, b, p), p), p);
    if (disc == 0) continue;
    // y^2 z = x^3 + a x z^2 + b z^3.
    std::vector<ProjPoint> pts;
    Scalar one = Scalar::one(field);
    pts.push_back(ProjPoint::normalize(
        {Scalar::zero(field), one, Scalar::zero(field)}));  // infinity
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t rhs = fp::add(fp::pow(x, 3, p),
                                  fp::add(fp::mul(a, x, p), b, p), p);
      std::uint64_t root;
      if (!fp::sqrt(rhs, p, root)) continue;
      pts.push_back(ProjPoint::normalize(
          {Scalar::from_int(static_cast<long long>(x), field),
           Scalar::from_int(static_cast<long long>(root), field), one}));
      if (root != 0)
        pts.push_back(ProjPoint::normalize(
            {Scalar::from_int(static_cast<long long>(x), field),
             Scalar::from_int(static_cast<long long>(p - root), field), one}));
    }
    if (pts.size() < min_points) continue;
    HomogeneousForm eq(2, 3, field);
    eq.set_coeff({0, 2, 1}, -one);                      // -y^2 z
    eq.set_coeff({3, 0, 0}, one);                       // x^3
    eq.set_coeff({1, 0, 2}, Scalar::from_rational(BigRat(a), field));
    eq.set_coeff({0, 0, 3}, Scalar::from_rational(BigRat(b), field));
    std::sort(pts.begin(), pts.end());
    return PlaneCubic{std::move(eq), std::move(pts)};
  }
  fail(ErrorCode::CurveTooSmall,
       "no smooth cubic with enough rational points over this field");
}

namespace {

// Chord-tangent group law on y^2 z = x^3 + a x z^2 + b z^3 over F_p, p > 3.
// Affine points are (x, y); `inf` marks the origin (0 : 1 : 0).
struct CubicPoint {
  bool inf = true;
  std::uint64_t x = 0, y = 0;
};

CubicPoint cubic_neg(const CubicPoint& p, std::uint64_t q) {
  if (p.inf) return p;
  return CubicPoint{false, p.x, p.y == 0 ? 0 : q - p.y};
}

CubicPoint cubic_add(const CubicPoint& p1, const CubicPoint& p2,
                     std::uint64_t a, std::uint64_t q) {
  if (p1.inf) return p2;
  if (p2.inf) return p1;
  if (p1.x == p2.x && fp::add(p1.y, p2.y, q) == 0) return CubicPoint{};
  std::uint64_t lam;
  if (p1.x == p2.x) {
    lam = fp::mul(fp::add(fp::mul(3, fp::mul(p1.x, p1.x, q), q), a, q),
                  fp::inv(fp::mul(2, p1.y, q), q), q);
  } else {
    lam = fp::mul(fp::sub(p2.y, p1.y, q),
                  fp::inv(fp::sub(p2.x, p1.x, q), q), q);
  }
  std::uint64_t x3 = fp::sub(fp::sub(fp::mul(lam, lam, q), p1.x, q), p2.x, q);
  std::uint64_t y3 = fp::sub(fp::mul(lam, fp::sub(p1.x, x3, q), q), p1.y, q);
  return CubicPoint{false, x3, y3};
}

CubicPoint to_cubic_point(const ProjPoint& p) {
  const auto& c = p.coords();
  if (c[2].is_zero()) return CubicPoint{};  // canonical (0 : 1 : 0)
  // Canonical points with x2 != 0 satisfy x2-normalized affine coords once
  // rescaled: divide by the last coordinate.
  Scalar z_inv = c[2].inverse();
  return CubicPoint{false, (c[0] * z_inv).prime_value(),
                    (c[1] * z_inv).prime_value()};
}

ProjPoint from_cubic_point(const CubicPoint& p, const FieldSpec& field) {
  if (p.inf)
    return ProjPoint::normalize(
        {Scalar::zero(field), Scalar::one(field), Scalar::zero(field)});
  return ProjPoint::normalize(
      {Scalar::from_int(static_cast<long long>(p.x), field),
       Scalar::from_int(static_cast<long long>(p.y), field),
       Scalar::one(field)});
}

}  // namespace

SharpnessInstance build_example_i1(int d, const FieldSpec& field,
                                   std::uint64_t seed) {
  if (d < 6 || d % 2 != 0)
    fail(ErrorCode::InfeasibleParameters,
         "the sharpness example needs even d >= 6");
  if (field.is_prime() && field.p() <= 3)
    fail(ErrorCode::InfeasibleParameters, "need p > 3 for the chord-tangent law");
  const std::size_t rank = static_cast<std::size_t>(3 * d / 2);
  const std::size_t divisor_size = static_cast<std::size_t>(3 * d);
  PlaneCubic cubic = find_rich_cubic(field, divisor_size + 1, seed);
  const std::uint64_t q = field.p();
  // Recover the Weierstrass coefficient a from the stored equation.
  const std::uint64_t a_coeff = cubic.equation.coeff({1, 0, 2}).prime_value();
  VeroneseSpace space(2, d);
  Rng rng(Rng(seed).split(0x31).next());

  OracleBudget budget;
  budget.max_subsets = 100000000ull;
  budget.max_points = 1000;

  // A general point of the secant boundary has exactly two decompositions,
  // and both must consist of rational curve points to be visible here. The
  // pair (A, B) is arranged directly: A u B is a hyperplane-class divisor of
  // the embedded curve (group-law sum zero), which forces the two spans to
  // meet; the meeting point is the instance.
  int retries = 0;
  std::vector<PointSet> hits;
  std::optional<Decomposition> first, second;
  for (; retries < 32; ++retries) {
    Rng draw = rng.split(retries);
    // 3d - 1 distinct points plus the group-law completion.
    std::vector<ProjPoint> chosen;
    PointSet seen;
    CubicPoint sum;  // identity
    while (chosen.size() + 1 < divisor_size) {
      const ProjPoint& cand = cubic.points[draw.below(cubic.points.size())];
      if (seen.contains(cand)) continue;
      seen = seen.with(cand);
      chosen.push_back(cand);
      sum = cubic_add(sum, to_cubic_point(cand), a_coeff, q);
    }
    ProjPoint last = from_cubic_point(cubic_neg(sum, q), field);
    if (seen.contains(last)) continue;
    chosen.push_back(last);

    // Split into A and B and demand independent images on both sides.
    std::vector<ProjPoint> a_pts(chosen.begin(), chosen.begin() + rank);
    std::vector<ProjPoint> b_pts(chosen.begin() + rank, chosen.end());
    PointSet a_set(a_pts), b_set(b_pts);
    if (a_set.size() != rank || b_set.size() != rank) continue;
    auto a_imgs = veronese_images(a_set, space);
    auto b_imgs = veronese_images(b_set, space);
    if (span_rank(a_imgs, field) != rank || span_rank(b_imgs, field) != rank)
      continue;
    auto meet = subspace_intersect(a_imgs, b_imgs, field);
    if (meet.size() != 1) continue;
    AmbientVector target = meet[0];
    auto wa = in_span(target, a_set, space);
    auto wb = in_span(target, b_set, space);
    if (!wa || !wb) continue;
    bool nz = true;
    for (const auto& c : *wa) nz = nz && !c.is_zero();
    for (const auto& c : *wb) nz = nz && !c.is_zero();
    if (!nz) continue;

    // Exhaustive in-curve census at the boundary cardinality.
    hits = enumerate_spanning_subsets(target, cubic.points,
                                      static_cast<int>(rank), space, budget,
                                      false, true, true);
    if (std::find(hits.begin(), hits.end(), a_set) == hits.end() ||
        std::find(hits.begin(), hits.end(), b_set) == hits.end())
      continue;  // should not happen; be safe
    first = Decomposition{space, target, a_set, *wa};
    second = Decomposition{space, target, b_set, *wb};
    if (hits.size() == 2) break;  // the generic count; otherwise resample
  }
  if (!first)
    fail(ErrorCode::SearchBudgetExceeded,
         "no hyperplane-class divisor produced a two-decomposition point");

  // In-curve minimality: no smaller curve subset spans P.
  bool minimal = true;
  for (int s = 1; s < static_cast<int>(rank) && minimal; ++s) {
    auto smaller = enumerate_spanning_subsets(first->target, cubic.points, s,
                                              space, budget, true, false, true);
    minimal = smaller.empty();
  }

  // Randomized off-curve probe: subsets mixing curve and off-curve points.
  std::vector<ProjPoint> ambient = projective_space_points(2, field);
  PointSet on_curve((std::vector<ProjPoint>(cubic.points)));
  std::vector<ProjPoint> off;
  for (const auto& pt : ambient)
    if (!on_curve.contains(pt)) off.push_back(pt);
  bool off_found = false;
  const std::size_t trials = 2000;
  Rng prng(Rng(seed).split(0x0f).next());
  for (std::size_t t = 0; t < trials && !off_found; ++t) {
    PointSet seen;
    std::vector<ProjPoint> sub;
    std::size_t off_count = 1 + prng.below(rank - 1);
    while (sub.size() < off_count) {
      const ProjPoint& cand = off[prng.below(off.size())];
      if (seen.contains(cand)) continue;
      seen = seen.with(cand);
      sub.push_back(cand);
    }
    while (sub.size() < rank) {
      const ProjPoint& cand = cubic.points[prng.below(cubic.points.size())];
      if (seen.contains(cand)) continue;
      seen = seen.with(cand);
      sub.push_back(cand);
    }
    PointSet set(sub);
    auto w = in_span(first->target, set, space);
    if (!w) continue;
    bool nz = true;
    for (const auto& c : *w) nz = nz && !c.is_zero();
    if (nz && span_rank(veronese_images(set, space), field) == set.size())
      off_found = true;
  }

  return SharpnessInstance{std::move(*first),
                           std::move(*second),
                           static_cast<int>(hits.size()),
                           retries,
                           cubic.points.size(),
                           cubic.equation,
                           minimal,
                           trials,
                           off_found};
}

}  // namespace waring
