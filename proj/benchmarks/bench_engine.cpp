#include <benchmark/benchmark.h>

#include "nlh/freealg.hpp"
#include "nlh/hnn.hpp"
#include "nlh/io.hpp"
#include "nlh/lyndon.hpp"
#include "nlh/rewrite.hpp"

namespace {

const nlh::Alphabet xy({"x", "y"});
const nlh::Alphabet xyz({"x", "y", "z"});

void BM_EnumeratePlain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nlh::enumerate_ls_nwords(xy, state.range(0), false));
}
BENCHMARK(BM_EnumeratePlain)->DenseRange(8, 14, 2);

void BM_EnumerateNijenhuis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nlh::enumerate_ls_nwords(xyz, state.range(0), true));
}
BENCHMARK(BM_EnumerateNijenhuis)->DenseRange(4, 7);

void BM_JacobiRandom(benchmark::State& state) {
  auto p = nlh::parse_expr("[x,[x,y]] + N(y) - 2*[N(x),z]", xyz);
  auto q = nlh::parse_expr("[y,[y,z]] + x", xyz);
  auto r = nlh::parse_expr("[N(z),x] - y", xyz);
  for (auto _ : state) {
    auto j = nlh::bracket(p, nlh::bracket(q, r)) + nlh::bracket(q, nlh::bracket(r, p)) + nlh::bracket(r, nlh::bracket(p, q));
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_JacobiRandom);

nlh::RelationSet so3() {
  std::vector<nlh::Relation> rels;
  for (auto e : {"[x,y] - z", "[y,z] - x", "[x,z] + y"})
    rels.push_back({e, nlh::make_monic(nlh::parse_expr(e, xyz))});
  return nlh::RelationSet(rels);
}

void BM_GsbCheckLieTable(benchmark::State& state) {
  auto s = so3();
  for (auto _ : state) benchmark::DoNotOptimize(nlh::gsb_check(s, state.range(0)));
}
BENCHMARK(BM_GsbCheckLieTable)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_GsbCheckHeisenbergHnn(benchmark::State& state) {
  nlh::AlgebraSpec h;
  h.generators = {"x", "y", "z"};
  h.bracket[{0, 1}] = {0, 0, 1};
  h.nijenhuis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  h.subalgebra = {2};
  h.derivation[2] = {0, 0, 1};
  auto pres = nlh::build_relations(h);
  for (auto _ : state) benchmark::DoNotOptimize(nlh::hnn_gsb_check(pres, state.range(0)));
}
BENCHMARK(BM_GsbCheckHeisenbergHnn)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_ReduceDeep(benchmark::State& state) {
  auto s = so3();
  auto p = nlh::parse_expr("[x,[x,[x,[x,[y,z]]]]] + [[x,y],[y,[x,z]]]", xyz);
  for (auto _ : state) benchmark::DoNotOptimize(nlh::reduce(p, s));
}
BENCHMARK(BM_ReduceDeep);

}  // namespace

BENCHMARK_MAIN();
