#include <benchmark/benchmark.h>

#include "cycperm/autgroup.hpp"
#include "cycperm/group_expr.hpp"
#include "cycperm/random.hpp"
#include "cycperm/table.hpp"

using namespace cycperm;

namespace {

const FieldSpec kF2;

CyclicCodeSpec code_f2(std::size_t n, const char* gen) { return make_code(kF2, n, parse_poly_expr(gen, kF2)); }

CyclicCodeSpec row_code(const TableRow& row) { return make_code(kF2, row.n, parse_poly_expr(row.gen_expr, kF2)); }

std::vector<Permutation> row_claim(const TableRow& row) { return materialize(parse_group_expr(row.claim)); }

void BM_SchreierSims294(benchmark::State& state) {
  const auto gens = row_claim(find_row("R13a"));
  for (auto _ : state) benchmark::DoNotOptimize(group_from_generators(gens).order());
}
BENCHMARK(BM_SchreierSims294)->Unit(benchmark::kMillisecond);

void BM_Exhaustive(benchmark::State& state) {
  const auto code = state.range(0) == 10 ? code_f2(10, "x^4+x^3+x^2+x+1") : code_f2(12, "x^4+x^2+1");
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_per_group(code, 12, 1).order());
}
BENCHMARK(BM_Exhaustive)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Backtrack(benchmark::State& state) {
  const auto code = state.range(0) == 15 ? code_f2(15, "x^8+x^7+x^5+x^4+x^3+x+1") : row_code(find_row("R04a"));
  for (auto _ : state) benchmark::DoNotOptimize(backtrack_per_group(code).order());
}
BENCHMARK(BM_Backtrack)->Arg(15)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_Certify3844(benchmark::State& state) {
  const auto& row = find_row("R18");
  const auto code = row_code(row);
  const auto gens = row_claim(row);
  CertifyOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(certify_subgroup(code, gens, std::nullopt, opts).certified);
}
BENCHMARK(BM_Certify3844)->Unit(benchmark::kMillisecond);

void BM_RandomPermutationAction(benchmark::State& state) {
  const auto code = code_f2(255, "x^8+x^4+x^3+x^2+1");
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(preserves_code(code, random_permutation(255, rng)));
}
BENCHMARK(BM_RandomPermutationAction);

}  // namespace

BENCHMARK_MAIN();
