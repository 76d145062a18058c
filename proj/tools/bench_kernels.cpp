#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "stx/cotruss.hpp"
#include "stx/points.hpp"
#include "stx/sweep.hpp"
#include "stx/truss_check.hpp"

// Times the tuple-sweep kernels on identity predicates over an interned
// 81-point table and cross-checks that every mode reports the same verdict.

using namespace stx;

namespace {

using Runner = std::function<SweepOutcome()>;

SweepOutcome timed(const char* kernel, const char* mode, std::uint64_t tuples,
                   const Runner& run, double* out_seconds = nullptr) {
  const auto t0 = std::chrono::steady_clock::now();
  const SweepOutcome got = run();
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out_seconds) *out_seconds = dt;
  std::printf("  %-22s %-9s %12llu tuples  %8.3f s  %10.1f Mtuples/s\n", kernel, mode,
              static_cast<unsigned long long>(tuples), dt,
              dt > 0 ? tuples / dt / 1e6 : 0.0);
  return got;
}

bool same(const SweepOutcome& a, const SweepOutcome& b) {
  return a.checked == b.checked && a.failures == b.failures && a.first_fail == b.first_fail;
}

}  // namespace

int main() {
  const Field f3 = Field::prime(3);
  const PresPtr P = share(builtin_presentation("poly_theta", f3));
  const TestAlgebra A{f3, 2};
  const OpTables T = build_tables(P, A, 10'000'000);
  const int n = T.n;
  std::printf("sweep kernel benchmark: %d interned points, %llu point evaluations to build\n", n,
              static_cast<unsigned long long>(T.point_evals));

  bool consistent = true;

  // arity 3: heap commutativity, [s,t,u] = [u,t,s]
  {
    auto pred = [&](const int* d) { return T.h(d[0], d[1], d[2]) == T.h(d[2], d[1], d[0]); };
    const std::uint64_t tuples = sat_pow(n, 3);
    std::printf("heap commutativity (arity 3)\n");
    double ref_s = 0, ser_s = 0, par_s = 0;
    const SweepOutcome ref =
        timed("sweep_full_reference", "-", tuples, [&] { return sweep_full_reference(n, 3, pred); },
              &ref_s);
    const SweepOutcome ser = timed(
        "sweep_full", "serial", tuples, [&] { return sweep_full(n, 3, pred, ExecMode::Serial); },
        &ser_s);
    const SweepOutcome par = timed(
        "sweep_full", "parallel", tuples,
        [&] { return sweep_full(n, 3, pred, ExecMode::Parallel); }, &par_s);
    consistent = consistent && same(ref, ser) && same(ref, par);
    std::printf("  agreement: %s; speedup vs reference: serial %.2fx, parallel %.2fx\n",
                same(ref, ser) && same(ref, par) ? "yes" : "NO", ref_s / ser_s, ref_s / par_s);
  }

  // arity 4: left distributivity, s[t,u,v] = [st, su, sv]
  {
    auto pred = [&](const int* d) {
      return T.m(d[0], T.h(d[1], d[2], d[3])) ==
             T.h(T.m(d[0], d[1]), T.m(d[0], d[2]), T.m(d[0], d[3]));
    };
    const std::uint64_t tuples = sat_pow(n, 4);
    std::printf("left distributivity (arity 4)\n");
    double ref_s = 0, ser_s = 0, par_s = 0;
    const SweepOutcome ref =
        timed("sweep_full_reference", "-", tuples, [&] { return sweep_full_reference(n, 4, pred); },
              &ref_s);
    const SweepOutcome ser = timed(
        "sweep_full", "serial", tuples, [&] { return sweep_full(n, 4, pred, ExecMode::Serial); },
        &ser_s);
    const SweepOutcome par = timed(
        "sweep_full", "parallel", tuples,
        [&] { return sweep_full(n, 4, pred, ExecMode::Parallel); }, &par_s);
    consistent = consistent && same(ref, ser) && same(ref, par);
    std::printf("  agreement: %s; speedup vs reference: serial %.2fx, parallel %.2fx\n",
                same(ref, ser) && same(ref, par) ? "yes" : "NO", ref_s / ser_s, ref_s / par_s);
  }

  // arity 9: the transposition identity, sampled from the seeded stream
  {
    auto pred = [&](const int* d) {
      const int lhs = T.h(T.h(d[0], d[1], d[2]), T.h(d[3], d[4], d[5]), T.h(d[6], d[7], d[8]));
      const int rhs = T.h(T.h(d[0], d[3], d[6]), T.h(d[1], d[4], d[7]), T.h(d[2], d[5], d[8]));
      return lhs == rhs;
    };
    const std::uint64_t samples = 2'000'000;
    std::printf("transposition (arity 9, sampled)\n");
    double ser_s = 0, par_s = 0;
    const SweepOutcome ser = timed(
        "sweep_sampled", "serial", samples,
        [&] { return sweep_sampled(n, 9, samples, 1, 5, pred, ExecMode::Serial); }, &ser_s);
    const SweepOutcome par = timed(
        "sweep_sampled", "parallel", samples,
        [&] { return sweep_sampled(n, 9, samples, 1, 5, pred, ExecMode::Parallel); }, &par_s);
    consistent = consistent && same(ser, par);
    std::printf("  agreement: %s; parallel speedup %.2fx\n", same(ser, par) ? "yes" : "NO",
                ser_s / par_s);
  }

  std::printf("all modes agree: %s\n", consistent ? "yes" : "NO");
  return consistent ? EXIT_SUCCESS : EXIT_FAILURE;
}
