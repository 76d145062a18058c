#include "stx/ybe.hpp"

#include <algorithm>

namespace stx {

namespace {

constexpr std::uint64_t kVerifySeed = 0x9bde8a6f3c15u;  // make_map sampling over QQ
constexpr std::uint64_t kVerifySamples = 64;
constexpr std::uint64_t kVerifyPairCap = 1u << 20;  // largest exhaustive pair sweep

std::string pair_witness(const Point& s, const Point& t) {
  return "s = " + s.to_string() + ", t = " + t.to_string();
}

// sigma_c respects the product at (s, t)?
bool multiplicative_at(const Point& s, const Point& t, const Scalar& c) {
  return scale_odd_images(point_mul(s, t), c) ==
         point_mul(scale_odd_images(s, c), scale_odd_images(t, c));
}

void verify_multiplicative(const PresPtr& P, const TestAlgebra& A, const Scalar& c) {
  std::string label = "sigma with factor " + c.to_string();
  auto refuse = [&](const Point& s, const Point& t) {
    throw MapRefusedError("NotMultiplicative", label + " does not respect the product on " +
                                                   P->name + "; " + pair_witness(s, t));
  };
  if (P->field.is_prime_field()) {
    auto pts = enumerate_points(P, A);
    std::uint64_t n = pts.size();
    if (n * n <= kVerifyPairCap) {
      for (const Point& s : pts)
        for (const Point& t : pts)
          if (!multiplicative_at(s, t, c)) refuse(s, t);
      return;
    }
    std::mt19937_64 rng(splitmix64(kVerifySeed));
    for (std::uint64_t i = 0; i < 4096; ++i) {
      const Point& s = pts[rng() % n];
      const Point& t = pts[rng() % n];
      if (!multiplicative_at(s, t, c)) refuse(s, t);
    }
    return;
  }
  std::mt19937_64 rng(splitmix64(kVerifySeed));
  for (std::uint64_t i = 0; i < kVerifySamples; ++i) {
    Point s = sample_point(P, A, rng);
    Point t = sample_point(P, A, rng);
    if (!multiplicative_at(s, t, c)) refuse(s, t);
  }
}

void verify_group_like(const PresPtr& P, const TestAlgebra& A) {
  Point e = unit_point(P, A);
  auto two_sided_inverse = [&](const Point& s) {
    Point inv = brace_neg(s);
    return point_mul(inv, s) == e && point_mul(s, inv) == e;
  };
  auto refuse = [&](const Point& s) {
    throw MapRefusedError("NotGroupLike", "brace negation is not a multiplicative inverse on " +
                                              P->name + "; s = " + s.to_string());
  };
  if (P->field.is_prime_field()) {
    for (const Point& s : enumerate_points(P, A))
      if (!two_sided_inverse(s)) refuse(s);
    return;
  }
  std::mt19937_64 rng(splitmix64(kVerifySeed + 1));
  for (std::uint64_t i = 0; i < kVerifySamples; ++i) {
    Point s = sample_point(P, A, rng);
    if (!two_sided_inverse(s)) refuse(s);
  }
}

struct ParsedKind {
  YBMap::Base base;
  bool negate = false;   // parity twist applied to both factors
  int scale_power = 0;   // power of q on the lambda factor (rho gets the inverse)
  bool needs_q = false;
};

std::string triple_witness(const Point& s, const Point& t, const Point& u) {
  return s.to_string() + ", " + t.to_string() + ", " + u.to_string();
}

}  // namespace

Point scale_odd_images(const Point& p, const Scalar& c) {
  if (c.is_one()) return p;
  const GeneratorSet& gens = *p.presentation()->gens;
  std::vector<GrassmannElement> imgs;
  for (int i = 0; i < gens.count(); ++i) {
    if (gens.gen(i).is_alias()) continue;
    imgs.push_back(gens.gen(i).odd ? p.image(i).scaled(c) : p.image(i));
  }
  return Point(p.presentation(), p.algebra(), std::move(imgs));
}

void YBMap::require_context(const Point& p) const {
  if (!p.presentation()->gens->same_as(*pres_->gens) || p.algebra() != alg_)
    throw UsageError("point does not live in the map's context");
}

Point YBMap::base_lambda(const Point& s, const Point& t) const {
  switch (base_) {
    case Base::Flip:
      return t;
    case Base::LeftAction: {
      Point e = unit_point(pres_, alg_);
      return point_heap(point_mul(s, t), point_mul(s, e), e);
    }
    case Base::InverseMap:
      return brace_neg(t);
  }
  throw UsageError("unreachable map base");
}

Point YBMap::base_rho(const Point& t, const Point& s) const {
  switch (base_) {
    case Base::Flip:
    case Base::LeftAction:
      return s;
    case Base::InverseMap:
      return brace_neg(s);
  }
  throw UsageError("unreachable map base");
}

Point YBMap::lambda(const Point& s, const Point& t) const {
  require_context(s);
  require_context(t);
  return scale_odd_images(base_lambda(s, t), c_lambda_);
}

Point YBMap::rho(const Point& t, const Point& s) const {
  require_context(t);
  require_context(s);
  return scale_odd_images(base_rho(t, s), c_rho_);
}

YBMap make_map(const std::string& kind, const PresPtr& P, const TestAlgebra& A,
               const std::optional<Scalar>& q) {
  if (A.field != P->field) throw UsageError("test algebra field differs from the presentation");
  if (!P->counit) throw MissingMapError("map catalogue needs a counit; " + P->name + " has none");

  auto parse_base = [](const std::string& name) -> ParsedKind {
    if (name == "flip") return {YBMap::Base::Flip, false, 0, false};
    if (name == "superflip") return {YBMap::Base::Flip, true, 0, false};
    if (name == "left-action") return {YBMap::Base::LeftAction, false, 0, false};
    if (name == "inverse-map") return {YBMap::Base::InverseMap, false, 0, false};
    if (name == "odd-scaling") return {YBMap::Base::Flip, false, 1, true};
    throw InputError("unknown map kind: " + name);
  };

  ParsedKind pk;
  if (kind.rfind("composed:", 0) == 0) {
    std::string rest = kind.substr(9);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw InputError("composed map kind needs an outer and an inner part: " + kind);
    std::string outer = rest.substr(0, colon), inner = rest.substr(colon + 1);
    pk = parse_base(inner);  // rejects nested composition
    if (outer == "parity") {
      pk.negate = !pk.negate;
    } else if (outer == "odd-scaling") {
      pk.scale_power += 1;
      pk.needs_q = true;
    } else {
      throw InputError("composed outer part must be parity or odd-scaling, got: " + outer);
    }
  } else {
    pk = parse_base(kind);
  }

  const Field& f = P->field;
  Scalar cl = Scalar::one(f), cr = Scalar::one(f);
  if (pk.needs_q) {
    if (!q) throw InputError("map kind " + kind + " needs a scaling factor q");
    if (q->is_zero()) throw InputError("scaling factor q must be invertible");
    for (int i = 0; i < pk.scale_power; ++i) {
      cl = cl * *q;
      cr = cr * q->inverse();
    }
  }
  if (pk.negate) {
    Scalar minus = Scalar::of(f, -1);
    cl = cl * minus;
    cr = cr * minus;
  }

  if (!cl.is_one()) verify_multiplicative(P, A, cl);
  if (!cr.is_one() && cr != cl) verify_multiplicative(P, A, cr);
  if (pk.base == YBMap::Base::InverseMap) verify_group_like(P, A);

  return YBMap(kind, P, A, pk.base, std::move(cl), std::move(cr), q);
}

bool YBReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const YBCheckItem& c) { return c.holds; });
}

const YBCheckItem* YBReport::find(const std::string& equation) const {
  for (const auto& c : checks)
    if (c.equation == equation) return &c;
  return nullptr;
}

MapTables build_map_tables(const YBMap& r, std::uint64_t budget) {
  MapTables T{build_tables(r.presentation(), r.algebra(), budget), {}, {}};
  OpTables& ops = T.ops;
  if (ops.unit < 0) throw MissingMapError("map tables need the unit point");
  const std::uint64_t n = ops.n;
  std::uint64_t extra = 2 * n * n;  // one evaluation per lambda / rho entry
  if (ops.point_evals + extra > budget)
    throw BudgetError("lambda and rho tables over " + std::to_string(n) + " points need " +
                      std::to_string(extra) + " more point evaluations; budget is " +
                      std::to_string(budget));
  T.L.resize(n * n);
  T.Rh.resize(n * n);
  for (std::uint64_t s = 0; s < n; ++s)
    for (std::uint64_t t = 0; t < n; ++t) {
      std::int32_t l = point_index(ops.points, r.lambda(ops.points[s], ops.points[t]));
      std::int32_t h = point_index(ops.points, r.rho(ops.points[t], ops.points[s]));
      if (l < 0 || h < 0) throw UsageError("map left the enumerated point set");
      T.L[s * n + t] = l;
      T.Rh[s * n + t] = h;
    }
  ops.point_evals += extra;
  return T;
}

namespace {

// One equation swept over index triples via the tables.
template <typename Check>
YBCheckItem sweep_equation(const std::string& equation, std::uint64_t n, const SweepOptions& opts,
                           const std::vector<Point>& pts, Check&& check) {
  YBCheckItem item;
  item.equation = equation;
  item.domain = sat_pow(n, 3);
  SweepOutcome out;
  if (item.domain <= opts.sweep_cap) {
    out = sweep_full(static_cast<int>(n), 3, check, opts.mode);
    item.exhaustive = true;
  } else {
    out = sweep_sampled(static_cast<int>(n), 3, opts.sample_count, opts.seed, 0, check, opts.mode);
    item.exhaustive = false;
  }
  item.checked = out.checked;
  item.failures = out.failures;
  item.holds = out.failures == 0;
  if (!item.holds) {
    int d[3];
    if (item.exhaustive) {
      std::uint64_t x = out.first_fail;
      for (int j = 2; j >= 0; --j) {
        d[j] = static_cast<int>(x % n);
        x /= n;
      }
      item.witness = "triple #" + std::to_string(out.first_fail) + ": (" +
                     triple_witness(pts[d[0]], pts[d[1]], pts[d[2]]) + ")";
    } else {
      for (int j = 0; j < 3; ++j)
        d[j] = sampled_digit(opts.seed, 0, out.first_fail, j, static_cast<int>(n));
      item.witness = "sample #" + std::to_string(out.first_fail) + ": (" +
                     triple_witness(pts[d[0]], pts[d[1]], pts[d[2]]) + ")";
    }
  }
  return item;
}

YBReport table_report_header(const YBMap& r, const MapTables& T, const SweepOptions& opts) {
  YBReport rep;
  rep.map_kind = r.kind();
  rep.presentation = r.presentation()->name;
  rep.algebra = r.algebra().to_string();
  rep.mode = "exhaustive";
  rep.point_count = T.ops.n;
  rep.point_evals = T.ops.point_evals;
  rep.seed = opts.seed;
  return rep;
}

// The six r-applications of the braid relation on index triples; left and
// right composites are returned slot by slot.
struct BraidSlots {
  std::int32_t l1, l2, l3, r1, r2, r3;
};

inline BraidSlots braid_slots(const std::int32_t* L, const std::int32_t* R, std::uint64_t n, int s,
                              int t, int u) {
  const std::uint64_t st = static_cast<std::uint64_t>(s) * n + t;
  std::int32_t a1 = L[st], b1 = R[st];  // r on slots 1,2
  const std::uint64_t b1u = static_cast<std::uint64_t>(b1) * n + u;
  std::int32_t b2 = L[b1u], c2 = R[b1u];  // r on slots 2,3
  const std::uint64_t a1b2 = static_cast<std::uint64_t>(a1) * n + b2;
  std::int32_t a3 = L[a1b2], b3 = R[a1b2];  // r on slots 1,2

  const std::uint64_t tu = static_cast<std::uint64_t>(t) * n + u;
  std::int32_t p1 = L[tu], q1 = R[tu];  // r on slots 2,3
  const std::uint64_t sp1 = static_cast<std::uint64_t>(s) * n + p1;
  std::int32_t s2 = L[sp1], r2 = R[sp1];  // r on slots 1,2
  const std::uint64_t r2q1 = static_cast<std::uint64_t>(r2) * n + q1;
  std::int32_t p3 = L[r2q1], q3 = R[r2q1];  // r on slots 2,3

  return {a3, b3, c2, s2, p3, q3};
}

}  // namespace

YBReport check_braid(const YBMap& r, const MapTables& T, SweepOptions opts) {
  YBReport rep = table_report_header(r, T, opts);
  const std::int32_t* L = T.L.data();
  const std::int32_t* R = T.Rh.data();
  const std::uint64_t n = T.ops.n;
  auto braid = [=](const int* d) {
    BraidSlots b = braid_slots(L, R, n, d[0], d[1], d[2]);
    return b.l1 == b.r1 && b.l2 == b.r2 && b.l3 == b.r3;
  };
  rep.checks.push_back(sweep_equation("braid", n, opts, T.ops.points, braid));
  if (!rep.checks.back().exhaustive) rep.mode = "sampled";
  return rep;
}

YBReport check_components(const YBMap& r, const MapTables& T, SweepOptions opts) {
  YBReport rep = table_report_header(r, T, opts);
  const std::int32_t* L = T.L.data();
  const std::int32_t* R = T.Rh.data();
  const std::uint64_t n = T.ops.n;

  auto yb1 = [=](const int* d) {
    const std::uint64_t s = d[0], t = d[1], u = d[2];
    return L[static_cast<std::uint64_t>(L[s * n + t]) * n + L[static_cast<std::uint64_t>(R[s * n + t]) * n + u]] ==
           L[s * n + L[t * n + u]];
  };
  auto yb2 = [=](const int* d) {
    const std::uint64_t s = d[0], t = d[1], u = d[2];
    return R[static_cast<std::uint64_t>(R[s * n + t]) * n + u] ==
           R[static_cast<std::uint64_t>(R[s * n + L[t * n + u]]) * n + R[t * n + u]];
  };
  auto yb3 = [=](const int* d) {
    const std::uint64_t s = d[0], t = d[1], u = d[2];
    return L[static_cast<std::uint64_t>(R[s * n + L[t * n + u]]) * n + R[t * n + u]] ==
           R[static_cast<std::uint64_t>(L[s * n + t]) * n + L[static_cast<std::uint64_t>(R[s * n + t]) * n + u]];
  };
  auto agreement = [=](const int* d) {
    BraidSlots b = braid_slots(L, R, n, d[0], d[1], d[2]);
    bool braid_here = b.l1 == b.r1 && b.l2 == b.r2 && b.l3 == b.r3;
    bool components_here = yb1(d) && yb2(d) && yb3(d);
    return braid_here == components_here;
  };

  rep.checks.push_back(sweep_equation("YB1", n, opts, T.ops.points, yb1));
  rep.checks.push_back(sweep_equation("YB2", n, opts, T.ops.points, yb2));
  rep.checks.push_back(sweep_equation("YB3", n, opts, T.ops.points, yb3));
  rep.checks.push_back(sweep_equation("agreement", n, opts, T.ops.points, agreement));
  for (const auto& c : rep.checks)
    if (!c.exhaustive) rep.mode = "sampled";
  return rep;
}

namespace {

// Direct sampled checking over QQ: fresh seeded triples, point-level
// evaluation.  The same triples are visited for every equation so the
// agreement row compares like with like.
YBReport sampled_report(const YBMap& r, const SweepOptions& opts, bool braid_only) {
  YBReport rep;
  rep.map_kind = r.kind();
  rep.presentation = r.presentation()->name;
  rep.algebra = r.algebra().to_string();
  rep.mode = "sampled";
  rep.point_count = 0;
  rep.seed = opts.seed;

  std::vector<YBCheckItem> items;
  auto add = [&](const std::string& eq) {
    YBCheckItem it;
    it.equation = eq;
    it.exhaustive = false;
    it.domain = 0;
    items.push_back(it);
  };
  if (braid_only) {
    add("braid");
  } else {
    add("YB1");
    add("YB2");
    add("YB3");
    add("agreement");
  }

  std::uint64_t evals = 0;
  auto guard = [&](std::uint64_t cost) {
    evals += cost;
    if (evals > opts.budget)
      throw BudgetError("sampled map checking exceeded the budget of " +
                        std::to_string(opts.budget) + " point evaluations");
  };

  const PresPtr& P = r.presentation();
  const TestAlgebra& A = r.algebra();
  for (std::uint64_t i = 0; i < opts.sample_count; ++i) {
    std::mt19937_64 rng(splitmix64(opts.seed ^ i * 0x517cc1b727220a95ull));
    Point s = sample_point(P, A, rng);
    Point t = sample_point(P, A, rng);
    Point u = sample_point(P, A, rng);
    guard(3);

    // left braid composite
    Point a1 = r.lambda(s, t), b1 = r.rho(t, s);
    Point b2 = r.lambda(b1, u), c2 = r.rho(u, b1);
    Point a3 = r.lambda(a1, b2), b3 = r.rho(b2, a1);
    // right braid composite
    Point p1 = r.lambda(t, u), q1 = r.rho(u, t);
    Point s2 = r.lambda(s, p1), r2 = r.rho(p1, s);
    Point p3 = r.lambda(r2, q1), q3 = r.rho(q1, r2);
    guard(12);

    bool braid_here = a3 == s2 && b3 == p3 && c2 == q3;
    bool yb1 = a3 == s2;
    bool yb2 = c2 == q3;
    bool yb3 = b3 == p3;

    for (YBCheckItem& it : items) {
      bool ok;
      if (it.equation == "braid") ok = braid_here;
      else if (it.equation == "YB1") ok = yb1;
      else if (it.equation == "YB2") ok = yb2;
      else if (it.equation == "YB3") ok = yb3;
      else ok = braid_here == (yb1 && yb2 && yb3);
      ++it.checked;
      if (!ok) {
        ++it.failures;
        if (it.holds) {
          it.holds = false;
          it.witness = "sample #" + std::to_string(i) + ": (" + triple_witness(s, t, u) + ")";
        }
      }
    }
  }
  rep.point_evals = evals;
  rep.checks = std::move(items);
  return rep;
}

}  // namespace

YBReport check_braid(const YBMap& r, SweepOptions opts) {
  if (r.presentation()->field.is_prime_field()) {
    MapTables T = build_map_tables(r, opts.budget);
    return check_braid(r, T, opts);
  }
  return sampled_report(r, opts, true);
}

YBReport check_components(const YBMap& r, SweepOptions opts) {
  if (r.presentation()->field.is_prime_field()) {
    MapTables T = build_map_tables(r, opts.budget);
    return check_components(r, T, opts);
  }
  return sampled_report(r, opts, false);
}

NondegReport check_nondegenerate(const YBMap& r, std::uint64_t budget) {
  if (!r.presentation()->field.is_prime_field())
    throw InfiniteBaseError("non-degeneracy needs a finite point set; the field is QQ");
  MapTables T = build_map_tables(r, budget);
  NondegReport rep;
  rep.map_kind = r.kind();
  rep.presentation = r.presentation()->name;
  rep.algebra = r.algebra().to_string();
  rep.point_count = T.ops.n;
  const std::uint64_t n = T.ops.n;
  std::vector<std::int32_t> seen(n);

  for (std::uint64_t s = 0; s < n && rep.left_nondegenerate; ++s) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::uint64_t t = 0; t < n; ++t) {
      std::int32_t v = T.L[s * n + t];
      if (seen[v] >= 0) {
        rep.left_nondegenerate = false;
        rep.left_witness = "lambda at s = " + T.ops.points[s].to_string() + " sends both t = " +
                           T.ops.points[seen[v]].to_string() + " and t = " +
                           T.ops.points[t].to_string() + " to " + T.ops.points[v].to_string();
        break;
      }
      seen[v] = static_cast<std::int32_t>(t);
    }
  }
  for (std::uint64_t t = 0; t < n && rep.right_nondegenerate; ++t) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::uint64_t s = 0; s < n; ++s) {
      std::int32_t v = T.Rh[s * n + t];
      if (seen[v] >= 0) {
        rep.right_nondegenerate = false;
        rep.right_witness = "rho at t = " + T.ops.points[t].to_string() + " sends both s = " +
                            T.ops.points[seen[v]].to_string() + " and s = " +
                            T.ops.points[s].to_string() + " to " + T.ops.points[v].to_string();
        break;
      }
      seen[v] = static_cast<std::int32_t>(s);
    }
  }
  return rep;
}

YBMap reduced_map(const YBMap& r) {
  return make_map(r.kind(), share(reduce(*r.presentation())), r.algebra(), r.q_);
}

}  // namespace stx
