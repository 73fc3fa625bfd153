#include <doctest.h>

#include "waring/builders.hpp"
#include "waring/cert.hpp"
#include "waring/rng.hpp"

using namespace waring;

namespace {

const FieldSpec kF = FieldSpec::prime(10007);

ProjPoint p1pt(const FieldSpec& f, long long a, long long b) {
  return ProjPoint::normalize({Scalar::from_int(a, f), Scalar::from_int(b, f)});
}

// A valid rank-3 decomposition on the rational normal curve.
Decomposition binary_rank3(const FieldSpec& f) {
  VeroneseSpace space(1, 4);
  PointSet nodes({p1pt(f, 1, 1), p1pt(f, 1, 2), p1pt(f, 1, 3)});
  std::vector<Scalar> ws{Scalar::from_int(2, f), Scalar::from_int(5, f),
                         Scalar::from_int(1, f)};
  return make_decomposition(space, nodes, ws);
}

}  // namespace

TEST_CASE("verify_decomposition checks all three clauses") {
  SUBCASE("a valid decomposition passes") {
    Certificate cert = verify_decomposition(binary_rank3(kF));
    CHECK(cert.valid);
    CHECK(cert.checks.size() == 3);
  }

  SUBCASE("a zeroed weight fails the nonzero-weight clause") {
    Decomposition dec = binary_rank3(kF);
    dec.weights[1] = Scalar::zero(kF);
    Certificate cert = verify_decomposition(dec);
    CHECK_FALSE(cert.valid);
    CHECK_FALSE(cert.find("reconstruction")->pass);  // target moved too
    CHECK_FALSE(cert.find("weights_nonzero")->pass);
  }

  SUBCASE("d+2 collinear points fail independence") {
    const int d = 4;
    VeroneseSpace space(1, d);
    std::vector<ProjPoint> pts;
    for (long long i = 0; i <= d + 1; ++i) pts.push_back(p1pt(kF, 1, i));
    PointSet nodes(pts);
    std::vector<Scalar> ws(nodes.size(), Scalar::one(kF));
    Decomposition dec = make_decomposition(space, nodes, ws);
    Certificate cert = verify_decomposition(dec);
    CHECK_FALSE(cert.valid);
    CHECK(cert.find("reconstruction")->pass);
    CHECK_FALSE(cert.find("independence")->pass);
  }
}

TEST_CASE("lemma: two distinct decompositions force a positive union defect") {
  SUBCASE("two Sylvester decompositions of x y^2") {
    FieldSpec f101 = FieldSpec::prime(101);
    std::vector<Scalar> c(4, Scalar::zero(f101));
    c[2] = Scalar::one(f101);
    BinaryForm f(3, c);
    auto fam = decomposition_family(f, 2, 5);
    REQUIRE(fam.size() == 2);
    VeroneseSpace space(1, 3);
    Decomposition a{space, f.coeffs(), fam[0].nodes, fam[0].weights};
    Decomposition b{space, f.coeffs(), fam[1].nodes, fam[1].weights};
    Certificate cert = lemma_v1_check(a, b);
    CHECK(cert.valid);
    // 6 distinct points on P^1 in degree 3: defect is exactly 2.
    CHECK(hilbert_defect(PointSet::union_of(a.points, b.points), 3) == 2);
  }

  SUBCASE("equal decompositions are a precondition failure") {
    Decomposition dec = binary_rank3(kF);
    CHECK_THROWS_WITH_AS(lemma_v1_check(dec, dec),
                         doctest::Contains("PreconditionFailed"), Error);
  }

  SUBCASE("case A family members pairwise obstruct") {
    Decomposition dec = build_case_a(5, 2, 4, 2, kF, 20);
    StructureReport rep = classify_decomposition(dec);
    auto fam = generate_family(dec, rep, 3, 8);
    REQUIRE(fam.size() == 3);
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        Certificate cert = lemma_v1_check(fam[i], fam[j]);
        CHECK(cert.valid);
      }
  }
}

TEST_CASE("residual split certificate") {
  Decomposition dec = build_case_a(5, 2, 4, 2, kF, 20);
  StructureReport rep = classify_decomposition(dec);
  REQUIRE(rep.kind == StructureCase::A);
  auto fam = generate_family(dec, rep, 2, 31);
  REQUIRE(fam.size() == 2);

  // The heavy line as a degree-1 hypersurface of P^2.
  auto rows = std::vector<std::vector<Scalar>>{
      rep.line->base0().coords(), rep.line->base1().coords()};
  auto ker = kernel_basis(Matrix::from_rows(rows, kF));
  REQUIRE(ker.size() == 1);
  HomogeneousForm lf(2, 1, kF);
  for (int j = 0; j < 3; ++j) {
    ExponentVector e(3, 0);
    e[j] = 1;
    lf.set_coeff(e, ker[0][j]);
  }
  Hypersurface d_line(lf);

  SUBCASE("family members split along the heavy line with residual F") {
    Certificate cert = lemma_v2_split(fam[0], fam[1], d_line);
    CHECK(cert.valid);
    CHECK(residual(fam[0].points, d_line) == rep.off_curve);
    CHECK(residual(fam[1].points, d_line) == rep.off_curve);
  }

  SUBCASE("identical decompositions trivially agree off the divisor") {
    Certificate cert = lemma_v2_split(fam[0], fam[0], d_line);
    CHECK(cert.valid);
  }

  SUBCASE("a violated vanishing hypothesis is reported") {
    // Take D disjoint from the configuration so the full union must impose
    // independent conditions in degree d-1; make it fail by stacking d+2
    // collinear points off D.
    VeroneseSpace space(2, 5);
    std::vector<ProjPoint> pts;
    for (long long i = 0; i <= 6; ++i)
      pts.push_back(ProjPoint::normalize({Scalar::one(kF),
                                          Scalar::from_int(i, kF),
                                          Scalar::from_int(2, kF)}));
    PointSet a(pts);
    std::vector<Scalar> ws(a.size(), Scalar::one(kF));
    Decomposition heavy = make_decomposition(space, a, ws);
    Hypersurface far(parse_form("x2", kF));
    CHECK_THROWS_WITH_AS(lemma_v2_split(heavy, heavy, far),
                         doctest::Contains("HypothesisFailed"), Error);
  }
}

TEST_CASE("small-rank uniqueness probe") {
  SUBCASE("rank 2 in degree 5 over F_7 is unique") {
    FieldSpec f7 = FieldSpec::prime(7);
    VeroneseSpace space(1, 5);
    PointSet nodes({p1pt(f7, 1, 2), p1pt(f7, 1, 5)});
    Decomposition dec = make_decomposition(
        space, nodes, {Scalar::from_int(3, f7), Scalar::from_int(4, f7)});
    Certificate cert = bgl_uniqueness_probe(dec, OracleBudget{});
    CHECK(cert.valid);
  }

  SUBCASE("rank 2 in degree 4 over F_3, ambient plane") {
    FieldSpec f3 = FieldSpec::prime(3);
    VeroneseSpace space(2, 4);
    PointSet pts({ProjPoint::normalize({Scalar::one(f3), Scalar::one(f3),
                                        Scalar::from_int(2, f3)}),
                  ProjPoint::normalize({Scalar::one(f3), Scalar::from_int(2, f3),
                                        Scalar::one(f3)})});
    Decomposition dec = make_decomposition(
        space, pts, {Scalar::one(f3), Scalar::from_int(2, f3)});
    Certificate cert = bgl_uniqueness_probe(dec, OracleBudget{});
    CHECK(cert.valid);
  }

  SUBCASE("outside the small-rank regime the probe refuses") {
    Decomposition dec = binary_rank3(kF);  // 3 > (4+1)/2
    CHECK_THROWS_WITH_AS(bgl_uniqueness_probe(dec, OracleBudget{}),
                         doctest::Contains("PreconditionFailed"), Error);
  }
}
