#include <doctest.h>

#include <set>

#include "waring/builders.hpp"
#include "waring/cert.hpp"
#include "waring/classify.hpp"
#include "waring/rng.hpp"

using namespace waring;

namespace {

const FieldSpec kF = FieldSpec::prime(10007);

ProjPoint fpt(const FieldSpec& f, std::initializer_list<long long> cs) {
  std::vector<Scalar> v;
  for (long long c : cs) v.push_back(Scalar::from_int(c, f));
  return ProjPoint::normalize(v);
}

}  // namespace

TEST_CASE("heavy line detection") {
  SUBCASE("five collinear points give one line carrying all five") {
    std::vector<ProjPoint> pts;
    for (long long i = 0; i < 5; ++i) pts.push_back(fpt(kF, {1, i, 3 * i}));
    auto found = find_heavy_line(PointSet(pts), 4);
    REQUIRE(found.size() == 1);
    CHECK(found[0].second.size() == 5);
    for (const auto& p : pts) CHECK(found[0].first.contains(p));
  }

  SUBCASE("random points in general position have no 3-point line") {
    Rng rng(161);
    std::vector<ProjPoint> pts;
    for (int i = 0; i < 7; ++i)
      pts.push_back(fpt(kF, {1, static_cast<long long>(rng.below(10007)),
                             static_cast<long long>(rng.below(10007))}));
    PointSet a(pts);
    REQUIRE(a.size() == 7);
    auto found = find_heavy_line(a, 3);
    // Independent exact collinearity scan over all triples.
    bool any_triple = false;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        for (std::size_t k = j + 1; k < a.size(); ++k)
          any_triple =
              any_triple ||
              span_rank({a[i].coords(), a[j].coords(), a[k].coords()}, kF) < 3;
    CHECK(found.empty() == !any_triple);
    CHECK(found.empty());
  }

  SUBCASE("two 3-point lines are both reported") {
    std::vector<ProjPoint> pts;
    for (long long i = 1; i <= 3; ++i) pts.push_back(fpt(kF, {1, i, 0}));
    for (long long i = 1; i <= 3; ++i) pts.push_back(fpt(kF, {1, 0, i}));
    auto found = find_heavy_line(PointSet(pts), 3);
    CHECK(found.size() == 2);
  }
}

TEST_CASE("heavy conic detection") {
  SUBCASE("d+2 points on a smooth conic are found at threshold d+1") {
    const int d = 4;
    Conic conic = Conic::smooth_from_frame(fpt(kF, {1, 0, 0}),
                                           fpt(kF, {0, 1, 0}),
                                           fpt(kF, {0, 0, 1}));
    std::vector<ProjPoint> pts;
    for (long long t = 1; t <= d + 2; ++t)
      pts.push_back(conic.at(Scalar::one(kF), Scalar::from_int(t, kF)));
    auto found = find_heavy_conic(PointSet(pts), d + 1);
    REQUIRE(!found.empty());
    bool hit = false;
    for (const auto& [c, on] : found)
      hit = hit || (c.kind() == Conic::Kind::Smooth && on.size() == pts.size());
    CHECK(hit);
  }

  SUBCASE("8 random points carry no 6-point conic") {
    Rng rng(171);
    std::vector<ProjPoint> pts;
    for (int i = 0; i < 8; ++i)
      pts.push_back(fpt(kF, {1, static_cast<long long>(rng.below(10007)),
                             static_cast<long long>(rng.below(10007))}));
    PointSet a(pts);
    REQUIRE(a.size() == 8);
    CHECK(find_heavy_conic(a, 6).empty());
  }

  SUBCASE("a reducible conic from two (d+1)/2-point lines, d = 5") {
    std::vector<ProjPoint> pts;
    for (long long i = 1; i <= 3; ++i) pts.push_back(fpt(kF, {1, i, 0}));
    for (long long i = 1; i <= 3; ++i) pts.push_back(fpt(kF, {1, 0, i}));
    auto found = find_heavy_conic(PointSet(pts), 6);
    bool two_lines = false;
    for (const auto& [c, on] : found)
      two_lines =
          two_lines || (c.kind() == Conic::Kind::TwoLines && on.size() == 6);
    CHECK(two_lines);
  }
}

TEST_CASE("splice point extraction") {
  const int d = 5;
  VeroneseSpace space(2, d);

  SUBCASE("a decomposition fully on the line splices to the target itself") {
    Rng rng(181);
    Line line(fpt(kF, {1, 2, 3}), fpt(kF, {1, 7, 11}));
    std::vector<ProjPoint> pts;
    for (long long i = 0; i < 4; ++i)
      pts.push_back(line.at(Scalar::one(kF), Scalar::from_int(2 * i + 1, kF)));
    PointSet a(pts);
    std::vector<Scalar> ws;
    for (std::size_t i = 0; i < a.size(); ++i)
      ws.push_back(
          Scalar::from_int(static_cast<long long>(1 + rng.below(100)), kF));
    Decomposition dec = make_decomposition(space, a, ws);
    BinaryForm spliced = splice_point(dec, a, line);
    // Push the binary form back through the moment basis: it must hit the
    // target projectively.
    auto moment = line.moment_basis(space);
    AmbientVector back(dec.target.size(), Scalar::zero(kF));
    for (std::size_t i = 0; i < moment.size(); ++i)
      for (std::size_t j = 0; j < back.size(); ++j)
        back[j] += spliced.coeff(static_cast<int>(i)) * moment[i][j];
    CHECK(span_rank({back, dec.target}, kF) == 1);
  }

  SUBCASE("the constructed case A instance splices to a rank-4 binary point") {
    Decomposition dec = build_case_a(d, 2, 4, 2, kF, 20);
    StructureReport rep = classify_decomposition(dec);
    REQUIRE(rep.kind == StructureCase::A);
    CHECK(rep.curve_points.size() == 4);
    CHECK(rep.off_curve.size() == 2);
    CHECK(rep.splice_analysis->rank == 4);
    // Grassmann arithmetic around the splice: <nu(A cap D)> has projective
    // dimension 3, <{P} u nu(F)> has dimension 2, and they meet in a point.
    std::vector<AmbientVector> u1 = veronese_images(rep.curve_points, space);
    std::vector<AmbientVector> u2{dec.target};
    for (const auto& img : veronese_images(rep.off_curve, space))
      u2.push_back(img);
    CHECK(span_rank(u1, kF) == 4);
    CHECK(span_rank(u2, kF) == 3);
    auto meet = span_intersect_sets(u1, u2, kF);
    CHECK(meet.size() == 1);
  }

  SUBCASE("an empty curve part raises EmptyIntersection") {
    Line line(fpt(kF, {1, 0, 0}), fpt(kF, {0, 1, 0}));
    std::vector<ProjPoint> pts{fpt(kF, {1, 3, 1}), fpt(kF, {1, 4, 2})};
    PointSet a(pts);
    Decomposition dec =
        make_decomposition(space, a, {Scalar::one(kF), Scalar::one(kF)});
    CHECK_THROWS_WITH_AS(splice_point(dec, PointSet(), line),
                         doctest::Contains("EmptyIntersection"), Error);
  }
}

TEST_CASE("classification of pinned instances") {
  SUBCASE("a single-point decomposition is unique") {
    VeroneseSpace space(2, 5);
    PointSet a({fpt(kF, {1, 2, 3})});
    Decomposition dec = make_decomposition(space, a, {Scalar::from_int(7, kF)});
    StructureReport rep = classify_decomposition(dec);
    CHECK(rep.kind == StructureCase::Unique);
  }

  SUBCASE("3+3 points on two meeting lines, d = 5, is case C") {
    Decomposition dec = build_case_c(5, 2, kF, 5);
    StructureReport rep = classify_decomposition(dec);
    REQUIRE(rep.kind == StructureCase::C);
    CHECK(rep.conic->kind() == Conic::Kind::TwoLines);
    CHECK(rep.curve_points.size() == 6);
    CHECK_FALSE(dec.points.contains(rep.conic->node()));
  }

  SUBCASE("out-of-regime inputs classify as unknown") {
    VeroneseSpace space(2, 4);
    Rng rng(191);
    std::vector<ProjPoint> pts;
    while (pts.size() < 6) {
      pts.push_back(fpt(kF, {1, static_cast<long long>(rng.below(10007)),
                             static_cast<long long>(rng.below(10007))}));
    }
    PointSet a(pts);
    REQUIRE(a.size() == 6);  // 2*6 >= 3*4
    std::vector<Scalar> ws(6, Scalar::one(kF));
    Decomposition dec = make_decomposition(space, a, ws);
    CHECK(classify_decomposition(dec).kind == StructureCase::Unknown);
  }
}

TEST_CASE("case A family generation") {
  Decomposition dec = build_case_a(5, 2, 4, 2, kF, 20);
  StructureReport rep = classify_decomposition(dec);
  REQUIRE(rep.kind == StructureCase::A);

  auto fam = generate_family(dec, rep, 20, 3);
  CHECK(fam.size() == 20);
  std::set<PointSet> seen;
  for (const auto& member : fam) {
    CHECK(member.points.size() == dec.points.size());
    CHECK(verify_decomposition(member).valid);
    // The off-curve part F is shared; the curve part stays on the line.
    CHECK(PointSet::intersection(member.points, rep.off_curve) ==
          rep.off_curve);
    PointSet curve_part = PointSet::difference(member.points, rep.off_curve);
    CHECK(curve_part.size() == rep.curve_points.size());
    for (const auto& p : curve_part.points()) CHECK(rep.line->contains(p));
    seen.insert(member.points);
  }
  CHECK(seen.size() == 20);

  SUBCASE("count = 0 gives an empty family") {
    CHECK(generate_family(dec, rep, 0, 1).empty());
  }

  SUBCASE("unique-case reports are rejected") {
    VeroneseSpace space(2, 5);
    Decomposition one = make_decomposition(
        space, PointSet({fpt(kF, {1, 2, 3})}), {Scalar::one(kF)});
    StructureReport urep = classify_decomposition(one);
    CHECK_THROWS_WITH_AS(generate_family(one, urep, 5, 1),
                         doctest::Contains("PreconditionFailed"), Error);
  }
}

TEST_CASE("case B family generation at d = 4") {
  Decomposition dec = build_case_b(4, 2, 5, 0, kF, 11);
  StructureReport rep = classify_decomposition(dec);
  REQUIRE(rep.kind == StructureCase::B);
  CHECK(rep.splice->degree() == 8);

  auto fam = generate_family(dec, rep, 10, 2);
  CHECK(fam.size() == 10);
  std::set<PointSet> seen;
  for (const auto& member : fam) {
    CHECK(member.points.size() == 5);
    CHECK(verify_decomposition(member).valid);
    for (const auto& p : member.points.points()) CHECK(rep.conic->contains(p));
    seen.insert(member.points);
  }
  CHECK(seen.size() == 10);
}

TEST_CASE("case C pencil family at d = 5") {
  Decomposition dec = build_case_c(5, 2, kF, 5);
  StructureReport rep = classify_decomposition(dec);
  REQUIRE(rep.kind == StructureCase::C);

  auto fam = case_c_family(dec, rep, 10, 4);
  CHECK(fam.size() == 10);
  std::set<PointSet> seen;
  for (const auto& member : fam) {
    CHECK(member.points.size() == 6);
    CHECK(verify_decomposition(member).valid);
    // Each member splits 3 + 3 across the two lines, avoiding the node.
    std::size_t on1 = 0, on2 = 0;
    for (const auto& p : member.points.points()) {
      if (rep.conic->line1().contains(p)) ++on1;
      if (rep.conic->line2().contains(p)) ++on2;
      CHECK_FALSE(p == rep.conic->node());
    }
    CHECK(on1 == 3);
    CHECK(on2 == 3);
    seen.insert(member.points);
  }
  CHECK(seen.size() == 10);

  SUBCASE("even degree reports FamilyEmpty") {
    Decomposition even = build_case_b(4, 2, 5, 0, kF, 11);
    CHECK_THROWS_WITH_AS(case_c_family(even, rep, 5, 1),
                         doctest::Contains("FamilyEmpty"), Error);
  }
}

TEST_CASE("uniqueness verdicts") {
  SUBCASE("rank-1 points are unique") {
    VeroneseSpace space(2, 5);
    Decomposition dec = make_decomposition(
        space, PointSet({fpt(kF, {1, 2, 3})}), {Scalar::from_int(3, kF)});
    CHECK(uniqueness_verdict(dec).kind == Verdict::Kind::Unique);
  }

  SUBCASE("case A instances are non-unique with certified witnesses") {
    Decomposition dec = build_case_a(5, 2, 4, 2, kF, 20);
    Verdict v = uniqueness_verdict(dec);
    REQUIRE(v.kind == Verdict::Kind::NonUnique);
    CHECK(v.witnesses.size() >= 2);
    for (const auto& w : v.witnesses) CHECK(verify_decomposition(w).valid);
  }

  SUBCASE("exact boundary size 3d/2 is out of regime") {
    VeroneseSpace space(2, 4);
    Rng rng(201);
    std::vector<ProjPoint> pts;
    while (pts.size() < 6)
      pts.push_back(fpt(kF, {1, static_cast<long long>(rng.below(10007)),
                             static_cast<long long>(rng.below(10007))}));
    PointSet a(pts);
    REQUIRE(a.size() == 6);
    std::vector<Scalar> ws(6, Scalar::from_int(2, kF));
    Decomposition dec = make_decomposition(space, a, ws);
    CHECK(uniqueness_verdict(dec).kind == Verdict::Kind::OutOfRegime);
  }
}

TEST_CASE("distinct same-target decompositions never classify as unique") {
  // Theorem-style forward check on system-generated pairs, plus the
  // union-defect obstruction.
  Decomposition dec = build_case_a(4, 2, 3, 2, kF, 23);
  StructureReport rep = classify_decomposition(dec);
  REQUIRE(rep.kind == StructureCase::A);
  auto fam = generate_family(dec, rep, 6, 9);
  REQUIRE(fam.size() >= 2);
  for (std::size_t i = 1; i < fam.size(); ++i) {
    if (fam[i].points == fam[0].points) continue;
    StructureReport ri = classify_decomposition(fam[i]);
    CHECK(ri.kind != StructureCase::Unique);
    CHECK(ri.kind != StructureCase::Unknown);
    CHECK(hilbert_defect(PointSet::union_of(fam[0].points, fam[i].points),
                         dec.degree()) > 0);
  }
}
