#include <benchmark/benchmark.h>

#include "waring/builders.hpp"
#include "waring/oracle.hpp"
#include "waring/rng.hpp"

using namespace waring;

namespace {

Matrix random_matrix(std::size_t n, const FieldSpec& field, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = field.is_prime()
                       ? Scalar::from_int(
                             static_cast<long long>(rng.below(field.p())), field)
                       : Scalar::from_int(
                             static_cast<long long>(rng.below(201)) - 100, field);
  return m;
}

BinaryForm random_form(int d, const FieldSpec& field, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Scalar> c;
  for (int i = 0; i <= d; ++i)
    c.push_back(Scalar::from_int(
        static_cast<long long>(1 + rng.below(field.p() - 1)), field));
  return BinaryForm(d, std::move(c));
}

void BM_RankRationalBareiss(benchmark::State& state) {
  Matrix m = random_matrix(state.range(0), FieldSpec::rational(), 7);
  for (auto _ : state) benchmark::DoNotOptimize(mat_rank(m));
}
BENCHMARK(BM_RankRationalBareiss)->Arg(8)->Arg(16)->Arg(32);

void BM_RankPrimeField(benchmark::State& state) {
  Matrix m = random_matrix(state.range(0), FieldSpec::prime(10007), 7);
  for (auto _ : state) benchmark::DoNotOptimize(mat_rank(m));
}
BENCHMARK(BM_RankPrimeField)->Arg(8)->Arg(32)->Arg(64);

void BM_SylvesterAnalyze(benchmark::State& state) {
  FieldSpec f = FieldSpec::prime(10007);
  BinaryForm form = random_form(static_cast<int>(state.range(0)), f, 11);
  for (auto _ : state) benchmark::DoNotOptimize(sylvester_analyze(form).rank);
}
BENCHMARK(BM_SylvesterAnalyze)->Arg(4)->Arg(6)->Arg(8);

void BM_OracleBruteRank(benchmark::State& state) {
  FieldSpec f = FieldSpec::prime(101);
  BinaryForm form = random_form(static_cast<int>(state.range(0)), f, 13);
  VeroneseSpace space(1, form.degree());
  OracleBudget budget;
  budget.max_points = 200;
  budget.max_subsets = 400000000ull;
  budget.max_rank = form.degree() + 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_rank(form.coeffs(), space, f, budget));
}
BENCHMARK(BM_OracleBruteRank)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VeroneseSpanDim(benchmark::State& state) {
  FieldSpec f = FieldSpec::prime(10007);
  Rng rng(17);
  std::vector<ProjPoint> pts;
  while (pts.size() < 8)
    pts.push_back(ProjPoint::normalize(
        {Scalar::one(f),
         Scalar::from_int(static_cast<long long>(rng.below(10007)), f),
         Scalar::from_int(static_cast<long long>(rng.below(10007)), f)}));
  PointSet a(pts);
  VeroneseSpace space(2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(span_dim(a, space));
}
BENCHMARK(BM_VeroneseSpanDim);

void BM_CaseAFamily(benchmark::State& state) {
  FieldSpec f = FieldSpec::prime(10007);
  Decomposition dec = build_case_a(5, 2, 4, 2, f, 20);
  StructureReport rep = classify_decomposition(dec);
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_family(dec, rep, 10, ++seed).size());
}
BENCHMARK(BM_CaseAFamily)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
