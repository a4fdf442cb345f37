#include <benchmark/benchmark.h>

#include "qheis/fieldcalc.hpp"
#include "qheis/latrep.hpp"
#include "qheis/ncalg.hpp"
#include "qheis/qfourier.hpp"
#include "qheis/qgroups.hpp"
#include "qheis/qspecial.hpp"
#include "qheis/rmatrix.hpp"

using namespace qheis;

static void BM_NormalOrder(benchmark::State& st) {
  auto sys = system_from_pairs(rtt_alphabet(2), interreduce(rtt_relations(r_gl(2))));
  NCPoly p = parse_ncpoly("d*c*b*a*d*c*b*a", sys.alphabet());
  for (auto _ : st) benchmark::DoNotOptimize(normal_order(p, sys));
}
BENCHMARK(BM_NormalOrder);

static void BM_PbwGl3(benchmark::State& st) {
  auto sys = system_from_pairs(rtt_alphabet(3), interreduce(rtt_relations(r_gl(3))));
  for (auto _ : st) benchmark::DoNotOptimize(pbw_overlap_check(sys));
}
BENCHMARK(BM_PbwGl3)->Unit(benchmark::kMillisecond);

static void BM_YbeGl(benchmark::State& st) {
  RMatrix r = r_gl(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(ybe_residual(r));
}
BENCHMARK(BM_YbeGl)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_So3Build(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(so3_build());
}
BENCHMARK(BM_So3Build)->Unit(benchmark::kMillisecond);

static void BM_TrigEvalLattice(benchmark::State& st) {
  long n = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(trig_eval_lattice(TrigKind::Cos, n, 1.1));
}
BENCHMARK(BM_TrigEvalLattice)->Arg(0)->Arg(40)->Arg(120);

static void BM_Nabla(benchmark::State& st) {
  FieldElem f;
  for (int m = -8; m <= 8; ++m) f += FieldElem::monomial(QScalar::t_pow(m), m);
  for (auto _ : st) benchmark::DoNotOptimize(nabla(f * f));
}
BENCHMARK(BM_Nabla);

static void BM_Gram(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(gram_check(TrigKind::Sin, {-3, 3}, {-60, 60}, 1.1));
}
BENCHMARK(BM_Gram)->Unit(benchmark::kMillisecond);

static void BM_BuildOpsNumeric(benchmark::State& st) {
  Window w;
  w.nmin = -60;
  w.nmax = 60;
  for (auto _ : st) benchmark::DoNotOptimize(build_ops(w, OpMode::Numeric, 1.1));
}
BENCHMARK(BM_BuildOpsNumeric)->Unit(benchmark::kMillisecond);

static void BM_Suq2Residuals(benchmark::State& st) {
  int tj = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(suq2_residuals(suq2_rep(tj, 1.5)));
}
BENCHMARK(BM_Suq2Residuals)->Arg(1)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
