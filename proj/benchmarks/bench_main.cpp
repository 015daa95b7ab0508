#include <benchmark/benchmark.h>

#include "ccswb/corpus.hpp"
#include "ccswb/equivalence.hpp"
#include "ccswb/logic.hpp"
#include "ccswb/parser.hpp"
#include "ccswb/semantics.hpp"

namespace {

const ccswb::Model& model() {
  static const ccswb::Model m =
      ccswb::parse_model(ccswb::read_text_file(CCSWB_CORPUS_DIR "/bb84.ccs"));
  return m;
}

void BM_ParseModel(benchmark::State& state) {
  const std::string text = ccswb::read_text_file(CCSWB_CORPUS_DIR "/bb84.ccs");
  for (auto _ : state) benchmark::DoNotOptimize(ccswb::parse_model(text));
}
BENCHMARK(BM_ParseModel);

void BM_BuildLts(benchmark::State& state, const char* root) {
  for (auto _ : state) benchmark::DoNotOptimize(ccswb::build_lts(model(), root));
}
BENCHMARK_CAPTURE(BM_BuildLts, BB84, "BB84");
BENCHMARK_CAPTURE(BM_BuildLts, BB84p, "BB84p");

void BM_TraceEquivalent(benchmark::State& state, const char* root) {
  const ccswb::Lts lhs = ccswb::build_lts(model(), root);
  const ccswb::Lts spec = ccswb::build_lts(model(), "Spec");
  for (auto _ : state) benchmark::DoNotOptimize(ccswb::trace_equivalent(lhs, spec));
}
BENCHMARK_CAPTURE(BM_TraceEquivalent, BB84, "BB84");
BENCHMARK_CAPTURE(BM_TraceEquivalent, BB84p, "BB84p");

void BM_ModelCheck(benchmark::State& state) {
  const ccswb::Lts lts = ccswb::build_lts(model(), "BB84p");
  const ccswb::Formula f = ccswb::parse_formula("<<choose(0)>><<'keep(1)>>tt");
  const ccswb::Formula live = ccswb::parse_formula("max X . min Y . <<'keep(1)>>X || <<->>Y");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccswb::check(lts, f));
    benchmark::DoNotOptimize(ccswb::check(lts, live));
  }
}
BENCHMARK(BM_ModelCheck);

// n independent two-state cells in parallel; 2^n states plus the root constant.
void BM_BuildLtsScaling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::string text;
  std::string main = "Main = C0";
  for (int i = 0; i < n; ++i) {
    const std::string id = std::to_string(i);
    text += "C" + id + " = f" + id + " . 'g" + id + " . C" + id + "\n";
    if (i > 0) main += " | C" + id;
  }
  const ccswb::Model m = ccswb::parse_model(text + main + "\n");
  std::size_t states = 0;
  for (auto _ : state) states = ccswb::build_lts(m, "Main").state_count();
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_BuildLtsScaling)->DenseRange(2, 10, 2);

}  // namespace
BENCHMARK_MAIN();
