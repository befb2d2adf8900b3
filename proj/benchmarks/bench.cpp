#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "kaestner/invariant.hpp"
#include "kaestner/moves.hpp"
#include "kaestner/search.hpp"

using namespace kaestner;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(KAESTNER_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const ParityBiquandle& structure() {
  static const ParityBiquandle pb =
      ParityBiquandle::from_tables(parse_structure(slurp("parity_biquandle3.txt")).parity_tables());
  return pb;
}

const KaestnerBracket& bracket() {
  static const KaestnerBracket kb =
      KaestnerBracket::from_tables(structure(), parse_bracket(slurp("bracket_z5.txt")).kaestner_tables());
  return kb;
}

GaussCode code_with(std::size_t crossings) {
  Rng rng(crossings);
  return random_code(rng, crossings);
}

void BM_Phi(benchmark::State& state) {
  const auto d = build_diagram(code_with(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(phi(d, bracket()));
}
BENCHMARK(BM_Phi)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_Colorings(benchmark::State& state) {
  const auto d = build_diagram(code_with(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(d, structure()));
}
BENCHMARK(BM_Colorings)->Arg(8)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMicrosecond);

void BM_VerifyKaestner(benchmark::State& state) {
  const auto t = parse_bracket(slurp("bracket_z5.txt")).kaestner_tables();
  for (auto _ : state) benchmark::DoNotOptimize(verify_kaestner_bracket(structure(), t));
}
BENCHMARK(BM_VerifyKaestner)->Unit(benchmark::kMicrosecond);

void BM_SearchOddOnly(benchmark::State& state) {
  SearchSpec spec{structure(), 5};
  spec.mode = SearchMode::OddOnly;
  spec.fixed_even = parse_bracket(slurp("bracket_z5.txt")).even_tables();
  for (auto _ : state) benchmark::DoNotOptimize(search_brackets(spec));
}
BENCHMARK(BM_SearchOddOnly)->Unit(benchmark::kMillisecond);

void BM_SearchFull(benchmark::State& state) {
  const ParityBiquandle one = ParityBiquandle::from_tables({{{1}}, {{1}}, {{1}}, {{1}}});
  const SearchSpec spec{one, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(search_brackets(spec));
}
BENCHMARK(BM_SearchFull)->Arg(5)->Arg(11)->Arg(31)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
