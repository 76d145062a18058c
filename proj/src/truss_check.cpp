#include "stx/truss_check.hpp"

#include <utility>

namespace stx {

bool TrussReport::all_pass() const {
  for (const auto& r : identities)
    if (!r.skipped && !r.holds) return false;
  return true;
}

const IdentityResult* TrussReport::find(const std::string& name) const {
  for (const auto& r : identities)
    if (r.name == name) return &r;
  return nullptr;
}

OpTables build_tables(const PresPtr& P, const TestAlgebra& A, std::uint64_t budget) {
  const std::uint64_t n64 = point_count(P, A);
  const std::uint64_t c2 = sat_pow(n64, 2);
  const std::uint64_t c3 = sat_pow(n64, 3);
  const std::uint64_t cost =
      c3 > std::numeric_limits<std::uint64_t>::max() - c2 ? std::numeric_limits<std::uint64_t>::max()
                                                          : c2 + c3;
  if (cost > budget)
    throw BudgetError("product and heap tables over " + std::to_string(n64) + " points need " +
                      std::to_string(cost) + " point evaluations; budget is " +
                      std::to_string(budget));

  OpTables T(P, A);
  T.points = enumerate_points(P, A);
  T.n = static_cast<int>(T.points.size());
  const int n = T.n;
  const auto& pts = T.points;

  T.mul.assign(static_cast<std::uint64_t>(n) * n, -1);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      T.mul[static_cast<std::uint64_t>(s) * n + t] = point_index(pts, point_mul(pts[s], pts[t]));

  T.heap.assign(static_cast<std::uint64_t>(n) * n * n, -1);
  std::string defect;
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < n; ++s) {
    try {
      for (int t = 0; t < n; ++t)
        for (int u = 0; u < n; ++u)
          T.heap[(static_cast<std::uint64_t>(s) * n + t) * n + u] =
              point_index(pts, point_heap(pts[s], pts[t], pts[u]));
    } catch (const std::exception& ex) {
#pragma omp critical
      if (defect.empty()) defect = ex.what();
    }
  }
  if (!defect.empty()) throw InputError(defect);

  for (std::int32_t v : T.mul)
    if (v < 0) throw UsageError("product left the enumerated point set");
  for (std::int32_t v : T.heap)
    if (v < 0) throw UsageError("heap left the enumerated point set");

  T.point_evals = static_cast<std::uint64_t>(n) * n + static_cast<std::uint64_t>(n) * n * n;
  if (P->counit) {
    T.unit = point_index(pts, unit_point(P, A));
    ++T.point_evals;
    T.neg.resize(n);
    for (int t = 0; t < n; ++t) T.neg[t] = T.h(T.unit, t, T.unit);
  }
  if (P->cozero) {
    T.zero = point_index(pts, zero_point(P, A));
    ++T.point_evals;
  }
  return T;
}

namespace {

struct IdentitySpec {
  const char* name;
  int k;
  bool needs_unit;
  bool needs_zero;
};

constexpr IdentitySpec kIdentities[] = {
    {"heap-right-identity", 2, false, false},   // [a,b,b] = a
    {"heap-left-identity", 2, false, false},    // [b,b,a] = a
    {"heap-associativity", 5, false, false},    // [[a,b,c],d,e] = [a,b,[c,d,e]]
    {"heap-commutativity", 3, false, false},    // [a,b,c] = [c,b,a]
    {"para-associativity", 5, false, false},    // [[a,b,c],d,e] = [a,[d,c,b],e]
    {"transposition", 9, false, false},
    {"product-associativity", 3, false, false},
    {"distributivity-left", 4, false, false},   // s[a,b,c] = [sa,sb,sc]
    {"distributivity-right", 4, false, false},  // [a,b,c]s = [as,bs,cs]
    {"unit-law", 1, true, false},               // es = s = se
    {"absorber-law", 1, false, true},           // zs = z = sz
    {"semi-brace-left", 3, true, false},        // s(t +_e u) = st -_e s +_e su
    {"semi-brace-right", 3, true, false},       // (t +_e u)s = ts -_e s +_e us
};
constexpr int kIdentityCount = static_cast<int>(sizeof(kIdentities) / sizeof(kIdentities[0]));

std::string render_tuple(const std::vector<Point>& pts, const int* d, int k) {
  std::string out = "(";
  for (int j = 0; j < k; ++j) {
    if (j) out += ", ";
    out += pts[d[j]].to_string();
  }
  return out + ")";
}

template <typename F>
void run_table_identity(TrussReport& rep, const OpTables& T, int ordinal, const SweepOptions& opts,
                        F&& check) {
  const IdentitySpec& spec = kIdentities[ordinal];
  IdentityResult r;
  r.name = spec.name;
  r.arity = spec.k;
  if ((spec.needs_unit && T.unit < 0) || (spec.needs_zero && T.zero < 0)) {
    r.skipped = true;
    r.note = spec.needs_unit && T.unit < 0 ? "no counit" : "no cozero";
    rep.identities.push_back(std::move(r));
    return;
  }
  r.domain = sat_pow(T.n, spec.k);
  SweepOutcome sw;
  if (r.domain <= opts.sweep_cap) {
    sw = sweep_full(T.n, spec.k, check, opts.mode);
    r.exhaustive = true;
  } else {
    sw = sweep_sampled(T.n, spec.k, opts.sample_count, opts.seed, ordinal, check, opts.mode);
    r.exhaustive = false;
  }
  r.checked = sw.checked;
  r.failures = sw.failures;
  r.holds = sw.failures == 0;
  if (!r.holds) {
    int d[12] = {};
    if (r.exhaustive) {
      std::uint64_t x = sw.first_fail;
      for (int j = spec.k - 1; j >= 0; --j) {
        d[j] = static_cast<int>(x % T.n);
        x /= T.n;
      }
      r.witness = "tuple #" + std::to_string(sw.first_fail) + ": " +
                  render_tuple(T.points, d, spec.k);
    } else {
      for (int j = 0; j < spec.k; ++j)
        d[j] = sampled_digit(opts.seed, ordinal, sw.first_fail, j, T.n);
      r.witness = "sample #" + std::to_string(sw.first_fail) + ": " +
                  render_tuple(T.points, d, spec.k);
    }
  }
  rep.identities.push_back(std::move(r));
}

}  // namespace

TrussReport check_truss_exhaustive(const PresPtr& P, const TestAlgebra& A, SweepOptions opts) {
  OpTables T = build_tables(P, A, opts.budget);
  TrussReport rep;
  rep.presentation = P->name;
  rep.algebra = A.to_string();
  rep.mode = "exhaustive";
  rep.point_count = T.n;
  rep.point_evals = T.point_evals;
  rep.seed = opts.seed;

  const std::int32_t* mp = T.mul.data();
  const std::int32_t* hp = T.heap.data();
  const std::uint64_t n = T.n;
  auto M = [=](int s, int t) -> int { return mp[s * n + t]; };
  auto H = [=](int s, int t, int u) -> int { return hp[(s * n + t) * n + u]; };
  const int e = T.unit, z = T.zero;

  run_table_identity(rep, T, 0, opts, [=](const int* d) { return H(d[0], d[1], d[1]) == d[0]; });
  run_table_identity(rep, T, 1, opts, [=](const int* d) { return H(d[1], d[1], d[0]) == d[0]; });
  run_table_identity(rep, T, 2, opts, [=](const int* d) {
    return H(H(d[0], d[1], d[2]), d[3], d[4]) == H(d[0], d[1], H(d[2], d[3], d[4]));
  });
  run_table_identity(rep, T, 3, opts,
                     [=](const int* d) { return H(d[0], d[1], d[2]) == H(d[2], d[1], d[0]); });
  run_table_identity(rep, T, 4, opts, [=](const int* d) {
    return H(H(d[0], d[1], d[2]), d[3], d[4]) == H(d[0], H(d[3], d[2], d[1]), d[4]);
  });
  run_table_identity(rep, T, 5, opts, [=](const int* d) {
    return H(H(d[0], d[1], d[2]), H(d[3], d[4], d[5]), H(d[6], d[7], d[8])) ==
           H(H(d[0], d[3], d[6]), H(d[1], d[4], d[7]), H(d[2], d[5], d[8]));
  });
  run_table_identity(rep, T, 6, opts, [=](const int* d) {
    return M(M(d[0], d[1]), d[2]) == M(d[0], M(d[1], d[2]));
  });
  run_table_identity(rep, T, 7, opts, [=](const int* d) {
    return M(d[0], H(d[1], d[2], d[3])) == H(M(d[0], d[1]), M(d[0], d[2]), M(d[0], d[3]));
  });
  run_table_identity(rep, T, 8, opts, [=](const int* d) {
    return M(H(d[1], d[2], d[3]), d[0]) == H(M(d[1], d[0]), M(d[2], d[0]), M(d[3], d[0]));
  });
  run_table_identity(rep, T, 9, opts, [=](const int* d) {
    return M(e, d[0]) == d[0] && M(d[0], e) == d[0];
  });
  run_table_identity(rep, T, 10, opts, [=](const int* d) {
    return M(z, d[0]) == z && M(d[0], z) == z;
  });
  run_table_identity(rep, T, 11, opts, [=](const int* d) {
    return M(d[0], H(d[1], e, d[2])) == H(M(d[0], d[1]), d[0], M(d[0], d[2]));
  });
  run_table_identity(rep, T, 12, opts, [=](const int* d) {
    return M(H(d[1], e, d[2]), d[0]) == H(M(d[1], d[0]), d[0], M(d[2], d[0]));
  });
  return rep;
}

namespace {

// Both sides of each identity on concrete points; ordinals follow kIdentities.
std::vector<std::pair<Point, Point>> direct_sides(int ordinal, const std::vector<Point>& v,
                                                  const Point* e, const Point* z,
                                                  std::uint64_t& evals) {
  auto M = [&](const Point& a, const Point& b) {
    ++evals;
    return point_mul(a, b);
  };
  auto H = [&](const Point& a, const Point& b, const Point& c) {
    ++evals;
    return point_heap(a, b, c);
  };
  switch (ordinal) {
    case 0:
      return {{H(v[0], v[1], v[1]), v[0]}};
    case 1:
      return {{H(v[1], v[1], v[0]), v[0]}};
    case 2:
      return {{H(H(v[0], v[1], v[2]), v[3], v[4]), H(v[0], v[1], H(v[2], v[3], v[4]))}};
    case 3:
      return {{H(v[0], v[1], v[2]), H(v[2], v[1], v[0])}};
    case 4:
      return {{H(H(v[0], v[1], v[2]), v[3], v[4]), H(v[0], H(v[3], v[2], v[1]), v[4])}};
    case 5:
      return {{H(H(v[0], v[1], v[2]), H(v[3], v[4], v[5]), H(v[6], v[7], v[8])),
               H(H(v[0], v[3], v[6]), H(v[1], v[4], v[7]), H(v[2], v[5], v[8]))}};
    case 6:
      return {{M(M(v[0], v[1]), v[2]), M(v[0], M(v[1], v[2]))}};
    case 7:
      return {{M(v[0], H(v[1], v[2], v[3])), H(M(v[0], v[1]), M(v[0], v[2]), M(v[0], v[3]))}};
    case 8:
      return {{M(H(v[1], v[2], v[3]), v[0]), H(M(v[1], v[0]), M(v[2], v[0]), M(v[3], v[0]))}};
    case 9:
      return {{M(*e, v[0]), v[0]}, {M(v[0], *e), v[0]}};
    case 10:
      return {{M(*z, v[0]), *z}, {M(v[0], *z), *z}};
    case 11:
      return {{M(v[0], H(v[1], *e, v[2])), H(M(v[0], v[1]), v[0], M(v[0], v[2]))}};
    case 12:
      return {{M(H(v[1], *e, v[2]), v[0]), H(M(v[1], v[0]), v[0], M(v[2], v[0]))}};
  }
  throw UsageError("unknown identity ordinal");
}

}  // namespace

TrussReport check_truss_sampled(const PresPtr& P, const TestAlgebra& A, std::uint64_t samples,
                                std::uint64_t seed, std::uint64_t budget) {
  TrussReport rep;
  rep.presentation = P->name;
  rep.algebra = A.to_string();
  rep.mode = "sampled";
  rep.point_count = 0;
  rep.seed = seed;

  std::optional<Point> e, z;
  std::uint64_t evals = 0;
  if (P->counit) {
    e = unit_point(P, A);
    ++evals;
  }
  if (P->cozero) {
    z = zero_point(P, A);
    ++evals;
  }

  for (int ordinal = 0; ordinal < kIdentityCount; ++ordinal) {
    const IdentitySpec& spec = kIdentities[ordinal];
    IdentityResult r;
    r.name = spec.name;
    r.arity = spec.k;
    r.exhaustive = false;
    if ((spec.needs_unit && !e) || (spec.needs_zero && !z)) {
      r.skipped = true;
      r.note = spec.needs_unit && !e ? "no counit" : "no cozero";
      rep.identities.push_back(std::move(r));
      continue;
    }
    r.checked = samples;
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::mt19937_64 rng(splitmix64(seed ^ static_cast<std::uint64_t>(ordinal) *
                                                0x517CC1B727220A95ull ^
                                     i * 0x2545F4914F6CDD1Dull));
      std::vector<Point> v;
      v.reserve(spec.k);
      for (int j = 0; j < spec.k; ++j) v.push_back(sample_point(P, A, rng));
      evals += spec.k;
      auto sides = direct_sides(ordinal, v, e ? &*e : nullptr, z ? &*z : nullptr, evals);
      if (evals > budget)
        throw BudgetError("sampled identity checks exceeded the point-evaluation budget " +
                          std::to_string(budget));
      bool ok = true;
      for (const auto& [lhs, rhs] : sides) ok = ok && lhs == rhs;
      if (!ok) {
        ++r.failures;
        if (r.witness.empty()) {
          std::string tup = "(";
          for (int j = 0; j < spec.k; ++j) {
            if (j) tup += ", ";
            tup += v[j].to_string();
          }
          r.witness = "sample #" + std::to_string(i) + ": " + tup + ")";
        }
      }
    }
    r.holds = r.failures == 0;
    rep.identities.push_back(std::move(r));
  }
  rep.point_evals = evals;
  return rep;
}

}  // namespace stx
