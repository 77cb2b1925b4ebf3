// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "hck/bicat.hpp"
#include "hck/bordism.hpp"
#include "hck/fpcat.hpp"
#include "hck/parallel.hpp"
#include "hck/simplicial.hpp"
#include "hck/whitehead.hpp"

using namespace hck;

namespace {

struct WordCase {
  fpcat::FinPresentation p = fpcat::tautological_presentation(fpcat::cyclic_group(6));
  fpcat::Path u = fpcat::make_path(p.graph(), {"1", "1", "1", "1"});
  fpcat::Path v = fpcat::make_path(p.graph(), {"2", "2"});
};

const WordCase& word_case() {
  static const WordCase w;
  return w;
}

const simplicial::TruncSSet& horn_case() {
  static const auto x = simplicial::nerve(fpcat::cyclic_group(8), 3);
  return x;
}

const std::vector<bicat::CorpusEntry>& duals_case() {
  static const auto corpus = bicat::bicategory_corpus();
  return corpus;
}

const bordism::SignSeq& forms_case() {
  static const auto s = bordism::parse_signs("+,-,+,-");
  return s;
}

void BM_word_problem(benchmark::State& st) {
  const auto& w = word_case();
  for (auto _ : st)
    benchmark::DoNotOptimize(st.range(0) ? fpcat::word_problem(w.p, w.u, w.v, 5)
                                         : fpcat::word_problem_serial(w.p, w.u, w.v, 5));
}

void BM_inner_horns(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(st.range(0) ? simplicial::inner_horn_fillers(horn_case(), 3)
                                         : simplicial::inner_horn_fillers_serial(horn_case(), 3));
}

void BM_right_duals(benchmark::State& st) {
  for (auto _ : st)
    for (const auto& e : duals_case())
      for (int f = 0; f < static_cast<int>(e.bicategory.n1()); ++f)
        benchmark::DoNotOptimize(st.range(0) ? bicat::find_right_duals(e.bicategory, f)
                                             : bicat::find_right_duals_serial(e.bicategory, f));
}

void BM_eckmann_hilton_sweep(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(st.range(0) ? bicat::eckmann_hilton_sweep(3) : bicat::eckmann_hilton_sweep_serial(3));
}

void BM_gamma_relations(benchmark::State& st) {
  const auto a = wh::parse_group("2,2,4");
  for (auto _ : st)
    benchmark::DoNotOptimize(st.range(0) ? wh::gamma_relations(a) : wh::gamma_relations_serial(a));
}

void BM_reachable_forms(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(
        st.range(0) ? bordism::reachable_forms(forms_case(), bordism::Calculus::Quotient, 6, 4)
                    : bordism::reachable_forms_serial(forms_case(), bordism::Calculus::Quotient, 6, 4));
}

void modes(benchmark::internal::Benchmark* b) {
  b->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_word_problem)->Apply(modes);
BENCHMARK(BM_inner_horns)->Apply(modes);
BENCHMARK(BM_right_duals)->Apply(modes);
BENCHMARK(BM_eckmann_hilton_sweep)->Apply(modes);
BENCHMARK(BM_gamma_relations)->Apply(modes);
BENCHMARK(BM_reachable_forms)->Apply(modes);

BENCHMARK_MAIN();
