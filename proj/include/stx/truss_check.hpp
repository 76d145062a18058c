#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stx/points.hpp"
#include "stx/sweep.hpp"

namespace stx {

// Interned point set with composition tables for the product and the heap.
struct OpTables {
  OpTables(PresPtr p, TestAlgebra a) : pres(std::move(p)), alg(std::move(a)) {}

  PresPtr pres;
  TestAlgebra alg;
  std::vector<Point> points;  // canonical order; table entries index into it
  int n = 0;
  std::vector<std::int32_t> mul;   // [s*n + t] = index of st
  std::vector<std::int32_t> heap;  // [(s*n + t)*n + u] = index of [s,t,u]
  std::int32_t unit = -1;          // -1 without a counit
  std::int32_t zero = -1;          // -1 without a cozero
  std::vector<std::int32_t> neg;   // brace negation; empty without a counit
  std::uint64_t point_evals = 0;

  std::int32_t m(int s, int t) const { return mul[static_cast<std::uint64_t>(s) * n + t]; }
  std::int32_t h(int s, int t, int u) const {
    return heap[(static_cast<std::uint64_t>(s) * n + t) * n + u];
  }
};

// Enumerates the points and fills both tables; the budget caps the number of
// point evaluations (n^2 + n^3) before any work is done.
OpTables build_tables(const PresPtr& P, const TestAlgebra& A, std::uint64_t budget);

struct IdentityResult {
  std::string name;
  int arity = 0;
  std::uint64_t domain = 0;  // point_count^arity, saturated
  std::uint64_t checked = 0;
  bool exhaustive = true;  // false: seeded sample of the domain
  std::uint64_t failures = 0;
  bool holds = true;
  bool skipped = false;
  std::string note;     // reason when skipped
  std::string witness;  // least failing tuple
};

struct TrussReport {
  std::string presentation;
  std::string algebra;
  std::string mode;  // "exhaustive" | "sampled"
  int point_count = 0;
  std::uint64_t point_evals = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityResult> identities;

  bool all_pass() const;
  const IdentityResult* find(const std::string& name) const;
};

struct SweepOptions {
  std::uint64_t budget = 10'000'000;     // point-evaluation cap
  std::uint64_t sweep_cap = 1ull << 32;  // largest tuple domain swept in full
  std::uint64_t sample_count = 1'000'000;
  std::uint64_t seed = 0;
  ExecMode mode = ExecMode::Parallel;
};

// Truss + semi-brace identity suite over the full point set (tables).
TrussReport check_truss_exhaustive(const PresPtr& P, const TestAlgebra& A, SweepOptions opts = {});

// Same identities over sampled points with direct evaluation (the only mode
// available over QQ); a pass is evidence, not proof, and the report says so.
TrussReport check_truss_sampled(const PresPtr& P, const TestAlgebra& A, std::uint64_t samples,
                                std::uint64_t seed, std::uint64_t budget = 10'000'000);

}  // namespace stx
