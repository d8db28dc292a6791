#include <benchmark/benchmark.h>

#include "coxsig/iss.hpp"
#include "coxsig/repr.hpp"

using namespace coxsig;

static void BM_EnumerateGroup(benchmark::State& state, const char* spec) {
  CoxeterSystem sys = parse_type(spec);
  for (auto _ : state) {
    GroupTable t = enumerate_group(sys);
    benchmark::DoNotOptimize(t.order);
  }
}
BENCHMARK_CAPTURE(BM_EnumerateGroup, B3, "B3");
BENCHMARK_CAPTURE(BM_EnumerateGroup, H3, "H3");
BENCHMARK_CAPTURE(BM_EnumerateGroup, F4, "F4");

static void BM_ConjugacyClasses(benchmark::State& state, const char* spec) {
  CoxeterSystem sys = parse_type(spec);
  GroupTable t = enumerate_group(sys);
  for (auto _ : state) {
    ClassTable ct = conjugacy_classes(sys, t);
    benchmark::DoNotOptimize(ct.count());
  }
}
BENCHMARK_CAPTURE(BM_ConjugacyClasses, F4, "F4");

static void BM_SignatureVector(benchmark::State& state, const char* spec,
                               Signature alpha) {
  CoxeterSystem sys = parse_type(spec);
  GroupTable t = enumerate_group(sys);
  ClassTable ct = conjugacy_classes(sys, t);
  for (auto _ : state) {
    auto v = signature_vector(t, ct, alpha);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK_CAPTURE(BM_SignatureVector, H3_small, "H3", Signature{3, 6, 6});
BENCHMARK_CAPTURE(BM_SignatureVector, F4_tie, "F4", Signature{3, 3, 3, 1});
BENCHMARK_CAPTURE(BM_SignatureVector, H4_tie, "H4", Signature{6, 6, 3, 1});

static void BM_IssPipeline(benchmark::State& state, const char* spec) {
  CoxeterSystem sys = parse_type(spec);
  GroupTable t = enumerate_group(sys);
  ClassTable ct = conjugacy_classes(sys, t);
  for (auto _ : state) {
    IssReport rep = iss_for_system(sys, t, ct);
    benchmark::DoNotOptimize(rep.matrix);
  }
}
BENCHMARK_CAPTURE(BM_IssPipeline, H3, "H3");
BENCHMARK_CAPTURE(BM_IssPipeline, F4, "F4");

static void BM_YoungDPoly(benchmark::State& state, unsigned n) {
  for (auto _ : state) {
    PolyCatalog cat = sn_catalog(n);
    benchmark::DoNotOptimize(cat.entries);
  }
}
BENCHMARK_CAPTURE(BM_YoungDPoly, S4, 4u);
BENCHMARK_CAPTURE(BM_YoungDPoly, S5, 5u);

static void BM_ElementCharPoly(benchmark::State& state) {
  CoxeterSystem sys = parse_type("E8");
  Word w = parse_word("12314231454231456542345678");
  for (auto _ : state) {
    UniPoly p = element_char_poly(sys, w);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_ElementCharPoly);

BENCHMARK_MAIN();
