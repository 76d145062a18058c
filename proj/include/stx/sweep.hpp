#pragma once

#include <cstdint>
#include <limits>

namespace stx {

enum class ExecMode { Serial, Parallel };

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// n^k saturated at UINT64_MAX.
inline std::uint64_t sat_pow(std::uint64_t n, int k) {
  unsigned __int128 acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= n;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

struct SweepOutcome {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  // Exhaustive sweeps: least failing flat index (digits most-significant
  // first).  Sampled sweeps: least failing sample ordinal.
  std::uint64_t first_fail = std::numeric_limits<std::uint64_t>::max();
};

// digit j of sample i for a seeded, stateless tuple stream
inline int sampled_digit(std::uint64_t seed, std::uint64_t ordinal, std::uint64_t i, int j, int n) {
  std::uint64_t x = seed ^ ordinal * 0x517CC1B727220A95ull ^ i * 0x2545F4914F6CDD1Dull ^
                    static_cast<std::uint64_t>(j) * 0xD6E8FEB86659FD93ull;
  return static_cast<int>(splitmix64(x) % static_cast<std::uint64_t>(n));
}

// All n^k tuples in lexicographic order; check(d) gets k digits.  Domain must
// fit exactly in 64 bits (callers cap it well below that).
template <typename F>
SweepOutcome sweep_full(int n, int k, F&& check, ExecMode mode) {
  SweepOutcome out;
  const std::uint64_t per = sat_pow(n, k - 1);
  std::uint64_t failures = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  const bool par = mode == ExecMode::Parallel;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures) reduction(min : first) if (par)
  for (long long a = 0; a < n; ++a) {
    int d[12] = {};
    d[0] = static_cast<int>(a);
    for (std::uint64_t rest = 0; rest < per; ++rest) {
      if (!check(d)) {
        ++failures;
        std::uint64_t flat = static_cast<std::uint64_t>(a) * per + rest;
        if (flat < first) first = flat;
      }
      int j = k - 1;
      while (j >= 1 && ++d[j] == n) d[j--] = 0;
    }
  }
  out.checked = per * n;
  out.failures = failures;
  out.first_fail = first;
  return out;
}

// Reference sweep: one flat loop, digits re-derived by division every step.
// Kept deliberately naive; the tests hold sweep_full to its verdicts.
template <typename F>
SweepOutcome sweep_full_reference(int n, int k, F&& check) {
  SweepOutcome out;
  const std::uint64_t domain = sat_pow(n, k);
  for (std::uint64_t flat = 0; flat < domain; ++flat) {
    int d[12] = {};
    std::uint64_t x = flat;
    for (int j = k - 1; j >= 0; --j) {
      d[j] = static_cast<int>(x % n);
      x /= n;
    }
    if (!check(d)) {
      ++out.failures;
      if (out.first_fail == std::numeric_limits<std::uint64_t>::max()) out.first_fail = flat;
    }
  }
  out.checked = domain;
  return out;
}

// samples tuples from the seeded stream; first_fail is a sample ordinal.
template <typename F>
SweepOutcome sweep_sampled(int n, int k, std::uint64_t samples, std::uint64_t seed,
                           std::uint64_t ordinal, F&& check, ExecMode mode) {
  SweepOutcome out;
  std::uint64_t failures = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  const bool par = mode == ExecMode::Parallel;
#pragma omp parallel for schedule(static) reduction(+ : failures) reduction(min : first) if (par)
  for (long long i = 0; i < static_cast<long long>(samples); ++i) {
    int d[12] = {};
    for (int j = 0; j < k; ++j) d[j] = sampled_digit(seed, ordinal, i, j, n);
    if (!check(d)) {
      ++failures;
      if (static_cast<std::uint64_t>(i) < first) first = i;
    }
  }
  out.checked = samples;
  out.failures = failures;
  out.first_fail = first;
  return out;
}

}  // namespace stx
