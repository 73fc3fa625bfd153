#include <doctest.h>

#include "waring/builders.hpp"
#include "waring/cert.hpp"

using namespace waring;

namespace {
const FieldSpec kF = FieldSpec::prime(10007);
}

TEST_CASE("case A builder") {
  SUBCASE("d=5: 4 on a line plus 2 off") {
    Decomposition dec = build_case_a(5, 2, 4, 2, kF, 1);
    CHECK(dec.points.size() == 6);
    CHECK(verify_decomposition(dec).valid);
    StructureReport rep = classify_decomposition(dec);
    CHECK(rep.kind == StructureCase::A);
    CHECK(rep.splice_analysis->family_infinite());
  }

  SUBCASE("d=4: 3 on a line plus 2 off") {
    Decomposition dec = build_case_a(4, 2, 3, 2, kF, 2);
    CHECK(dec.points.size() == 5);
    CHECK(classify_decomposition(dec).kind == StructureCase::A);
  }

  SUBCASE("a 2-point line is infeasible for d >= 3") {
    CHECK_THROWS_WITH_AS(build_case_a(5, 2, 2, 1, kF, 1),
                         doctest::Contains("InfeasibleParameters"), Error);
  }
}

TEST_CASE("case B builder") {
  SUBCASE("d=4: 5 points on a smooth conic") {
    Decomposition dec = build_case_b(4, 2, 5, 0, kF, 1);
    CHECK(dec.points.size() == 5);
    CHECK(verify_decomposition(dec).valid);
    CHECK(classify_decomposition(dec).kind == StructureCase::B);
  }

  SUBCASE("d=6 in P^3: 7 on a conic plus 1 off") {
    Decomposition dec = build_case_b(6, 3, 7, 1, kF, 3);
    CHECK(dec.points.size() == 8);
    CHECK(classify_decomposition(dec).kind == StructureCase::B);
  }

  SUBCASE("conic_count = d is infeasible") {
    CHECK_THROWS_WITH_AS(build_case_b(4, 2, 4, 0, kF, 1),
                         doctest::Contains("InfeasibleParameters"), Error);
  }
}

TEST_CASE("case C builder") {
  SUBCASE("d=5: a 3+3 split") {
    Decomposition dec = build_case_c(5, 2, kF, 1);
    CHECK(dec.points.size() == 6);
    StructureReport rep = classify_decomposition(dec);
    REQUIRE(rep.kind == StructureCase::C);
    auto fam = case_c_family(dec, rep, 3, 1);
    CHECK(fam.size() == 3);
  }

  SUBCASE("d=3: a 2+2 split") {
    Decomposition dec = build_case_c(3, 2, kF, 2);
    CHECK(dec.points.size() == 4);
    CHECK(classify_decomposition(dec).kind == StructureCase::C);
  }

  SUBCASE("even degree is infeasible") {
    CHECK_THROWS_WITH_AS(build_case_c(4, 2, kF, 1),
                         doctest::Contains("InfeasibleParameters"), Error);
  }
}

TEST_CASE("rich cubic search") {
  FieldSpec f13 = FieldSpec::prime(13);
  PlaneCubic cubic = find_rich_cubic(f13, 12, 7);
  CHECK(cubic.points.size() >= 12);
  for (const auto& p : cubic.points)
    CHECK(cubic.equation.evaluate(p.coords()).is_zero());

  // Hasse makes 12 points impossible over F_5.
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK_THROWS_WITH_AS(find_rich_cubic(f5, 12, 1),
                       doctest::Contains("CurveTooSmall"), Error);
}

TEST_CASE("sharpness instance at d = 6 over F_13") {
  FieldSpec f13 = FieldSpec::prime(13);
  SharpnessInstance inst = build_example_i1(6, f13, 4);

  CHECK(inst.first.points.size() == 9);
  CHECK(inst.second.points.size() == 9);
  CHECK_FALSE(inst.first.points == inst.second.points);
  CHECK(verify_decomposition(inst.first).valid);
  CHECK(verify_decomposition(inst.second).valid);
  CHECK(inst.in_curve_count >= 2);
  CHECK(inst.in_curve_minimal);
  CHECK_FALSE(inst.off_curve_witness_found);

  // Both sit on the curve.
  for (const auto& p : inst.first.points.points())
    CHECK(inst.cubic.evaluate(p.coords()).is_zero());
  for (const auto& p : inst.second.points.points())
    CHECK(inst.cubic.evaluate(p.coords()).is_zero());

  // The union defect obstruction applies to the pair.
  CHECK(lemma_v1_check(inst.first, inst.second).valid);

  // At the boundary the machinery must refuse.
  CHECK(uniqueness_verdict(inst.first).kind == Verdict::Kind::OutOfRegime);
  CHECK(uniqueness_verdict(inst.second).kind == Verdict::Kind::OutOfRegime);

  SUBCASE("the sharpness example needs even degree") {
    CHECK_THROWS_WITH_AS(build_example_i1(5, f13, 1),
                         doctest::Contains("InfeasibleParameters"), Error);
  }
}
