#include <doctest.h>

#include "waring/rng.hpp"
#include "waring/veronese.hpp"

using namespace waring;

namespace {

ProjPoint qpt(std::initializer_list<long long> cs) {
  std::vector<Scalar> v;
  for (long long c : cs) v.push_back(Scalar::from_int(c, FieldSpec::rational()));
  return ProjPoint::normalize(v);
}

ProjPoint fpt(const FieldSpec& f, std::initializer_list<long long> cs) {
  std::vector<Scalar> v;
  for (long long c : cs) v.push_back(Scalar::from_int(c, f));
  return ProjPoint::normalize(v);
}

// Collinear points (1 : i : 2i) in P^2.
PointSet collinear(const FieldSpec& f, int count) {
  std::vector<ProjPoint> pts;
  for (int i = 0; i < count; ++i)
    pts.push_back(fpt(f, {1, i, 2 * i}));
  return PointSet(std::move(pts));
}

}  // namespace

TEST_CASE("veronese map on fixed points") {
  VeroneseSpace s12(1, 2);
  AmbientVector v = veronese_map(qpt({1, 1}), s12);
  CHECK(v.size() == 3);
  for (const auto& c : v) CHECK(c.to_string() == "1");

  VeroneseSpace s13(1, 3);
  AmbientVector w = veronese_map(qpt({1, 2}), s13);
  CHECK(w[0].to_string() == "1");
  CHECK(w[1].to_string() == "2");
  CHECK(w[2].to_string() == "4");
  CHECK(w[3].to_string() == "8");

  VeroneseSpace s22(2, 2);
  CHECK(s22.N() == 5);
  AmbientVector u = veronese_map(qpt({1, 0, 0}), s22);
  CHECK(u[0].to_string() == "1");
  for (int i = 1; i <= 5; ++i) CHECK(u[i].is_zero());
}

TEST_CASE("veronese map is injective on random canonical points") {
  FieldSpec f = FieldSpec::prime(101);
  VeroneseSpace space(2, 3);
  Rng rng(51);
  for (int rep = 0; rep < 40; ++rep) {
    ProjPoint a = fpt(f, {static_cast<long long>(rng.below(101)),
                          static_cast<long long>(rng.below(101)),
                          1 + static_cast<long long>(rng.below(100))});
    ProjPoint b = fpt(f, {static_cast<long long>(rng.below(101)),
                          static_cast<long long>(rng.below(101)),
                          1 + static_cast<long long>(rng.below(100))});
    AmbientVector va = veronese_map(a, space), vb = veronese_map(b, space);
    CHECK((a == b) == (va == vb));
  }
}

TEST_CASE("span dimension on and off the rational normal curve") {
  FieldSpec f = FieldSpec::prime(10007);
  VeroneseSpace space(2, 4);
  // Any <= d+1 collinear points are independent on the degree-d curve.
  CHECK(span_dim(collinear(f, 1), space) == 0);
  CHECK(span_dim(collinear(f, 5), space) == 4);
  // d+2 collinear points stay inside the d-dimensional curve span.
  CHECK(span_dim(collinear(f, 6), space) == 4);
}

TEST_CASE("hilbert defect on fixed configurations") {
  FieldSpec f = FieldSpec::prime(10007);
  CHECK(hilbert_defect(collinear(f, 4), 4) == 0);   // #Z <= t+1 on a line
  CHECK(hilbert_defect(collinear(f, 6), 4) == 1);   // d+2 collinear, degree d
  CHECK(hilbert_defect(collinear(f, 2), 1) == 0);
  CHECK(hilbert_defect(collinear(f, 2), 3) == 0);
}

TEST_CASE("collinear defect formula on random sizes") {
  FieldSpec f = FieldSpec::prime(101);
  Rng rng(61);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 1 + static_cast<int>(rng.below(10));
    int t = 1 + static_cast<int>(rng.below(6));
    int expect = std::max(0, n - (t + 1));
    CHECK(hilbert_defect(collinear(f, n), t) == expect);
  }
}

TEST_CASE("residual splits a set along a hypersurface") {
  FieldSpec q = FieldSpec::rational();
  Hypersurface line(parse_form("x2", q));
  PointSet z({qpt({1, 1, 0}), qpt({1, 2, 0}), qpt({1, 0, 3})});
  PointSet res = residual(z, line);
  REQUIRE(res.size() == 1);
  CHECK(res[0] == qpt({1, 0, 3}));

  PointSet on({qpt({1, 1, 0}), qpt({1, 2, 0})});
  CHECK(residual(on, line).empty());
  PointSet off({qpt({1, 0, 3}), qpt({0, 1, 5})});
  CHECK(residual(off, line) == off);
}

TEST_CASE("residual exact-sequence inequality in the collinear-computable case") {
  // h1(I_Z(t)) <= h1(I_{Res_D(Z)}(t-1)) + h1_on_line(Z cap D, t) where the
  // on-line defect for k points is max(0, k - (t+1)).
  FieldSpec f = FieldSpec::prime(101);
  Hypersurface d_line(parse_form("x2", f));
  Rng rng(71);
  for (int rep = 0; rep < 25; ++rep) {
    std::vector<ProjPoint> pts;
    int on = static_cast<int>(rng.below(9));
    int off = static_cast<int>(rng.below(4));
    for (int i = 0; i < on; ++i)
      pts.push_back(fpt(f, {1, static_cast<long long>(rng.below(101)), 0}));
    for (int i = 0; i < off; ++i)
      pts.push_back(fpt(f, {static_cast<long long>(rng.below(101)),
                            static_cast<long long>(rng.below(101)), 1}));
    PointSet z(pts);
    if (z.empty()) continue;
    int t = 2 + static_cast<int>(rng.below(4));
    PointSet on_d = PointSet::difference(z, residual(z, d_line));
    int lhs = hilbert_defect(z, t);
    int rhs_res = residual(z, d_line).empty()
                      ? 0
                      : hilbert_defect(residual(z, d_line), t - 1);
    int rhs_curve = std::max(0, static_cast<int>(on_d.size()) - (t + 1));
    CHECK(lhs <= rhs_res + rhs_curve);
  }
}

TEST_CASE("in_span returns exact weights or nothing") {
  FieldSpec q = FieldSpec::rational();
  VeroneseSpace space(1, 2);
  ProjPoint a = qpt({1, 1}), b = qpt({1, -1});

  SUBCASE("single point spans itself") {
    auto w = in_span(veronese_map(a, space), PointSet({a}), space);
    REQUIRE(w.has_value());
    CHECK((*w)[0].to_string() == "1");
  }

  SUBCASE("the (1,0,1) vector needs weights 1/2, 1/2") {
    AmbientVector p{Scalar::from_int(1, q), Scalar::zero(q),
                    Scalar::from_int(1, q)};
    auto w = in_span(p, PointSet({a, b}), space);
    REQUIRE(w.has_value());
    CHECK((*w)[0].to_string() == "1/2");
    CHECK((*w)[1].to_string() == "1/2");
  }

  SUBCASE("generic vectors are outside a 2-point span") {
    FieldSpec f = FieldSpec::prime(10007);
    VeroneseSpace s22(2, 2);
    Rng rng(81);
    PointSet two({fpt(f, {1, 2, 3}), fpt(f, {1, 5, 7})});
    int misses = 0;
    for (int rep = 0; rep < 10; ++rep) {
      AmbientVector p;
      for (int i = 0; i < 6; ++i)
        p.push_back(Scalar::from_int(static_cast<long long>(rng.below(10007)), f));
      auto w = in_span(p, two, s22);
      // Membership must agree with the rank test.
      auto imgs = veronese_images(two, s22);
      auto with_p = imgs;
      with_p.push_back(p);
      bool member = span_rank(with_p, f) == span_rank(imgs, f);
      CHECK(w.has_value() == member);
      if (!w) ++misses;
    }
    CHECK(misses == 10);
  }
}
