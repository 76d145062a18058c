#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stx/truss_check.hpp"

namespace stx {

// A catalogued Yang-Baxter map r(s,t) = (lambda_s(t), rho_t(s)) on the point
// set of a presentation with a counit.  The catalogue is closed: five base
// kinds plus one level of composition with a parity or odd-scaling twist,
// written "composed:<outer>:<inner>".
//
// Every kind decomposes as a base rule followed by odd-image scalings of the
// two output slots (sigma_c on the first, sigma_{c'} on the second):
//   flip          = flip base, (1, 1)
//   superflip     = flip base, (-1, -1)
//   odd-scaling q = flip base, (q, q^-1)
//   left-action   = [st, se, e] / s base, (1, 1)
//   inverse-map   = brace_neg base, (1, 1)
//   composed:parity:K       = K's base, factors negated
//   composed:odd-scaling:K  = K's base, factors times (q, q^-1)
class YBMap {
 public:
  enum class Base { Flip, LeftAction, InverseMap };

  const std::string& kind() const { return kind_; }
  const PresPtr& presentation() const { return pres_; }
  const TestAlgebra& algebra() const { return alg_; }

  Point lambda(const Point& s, const Point& t) const;
  Point rho(const Point& t, const Point& s) const;  // subscript first: rho_t(s)

  const Scalar& lambda_factor() const { return c_lambda_; }
  const Scalar& rho_factor() const { return c_rho_; }

 private:
  friend YBMap make_map(const std::string&, const PresPtr&, const TestAlgebra&,
                        const std::optional<Scalar>&);
  friend YBMap reduced_map(const YBMap&);

  YBMap(std::string kind, PresPtr pres, TestAlgebra alg, Base base, Scalar cl, Scalar cr,
        std::optional<Scalar> q)
      : kind_(std::move(kind)),
        pres_(std::move(pres)),
        alg_(std::move(alg)),
        base_(base),
        c_lambda_(std::move(cl)),
        c_rho_(std::move(cr)),
        q_(std::move(q)) {}

  void require_context(const Point& p) const;
  Point base_lambda(const Point& s, const Point& t) const;
  Point base_rho(const Point& t, const Point& s) const;

  std::string kind_;
  PresPtr pres_;
  TestAlgebra alg_;
  Base base_;
  Scalar c_lambda_;
  Scalar c_rho_;
  std::optional<Scalar> q_;  // as supplied, so a reduced map can be rebuilt
};

// Scales the odd generator images of a point by c (sigma_c; c = -1 is the
// parity automorphism alpha).
Point scale_odd_images(const Point& p, const Scalar& c);

// Builds a catalogued map and verifies its preconditions on the point set:
// any odd-scaling factor must respect the product (exhaustively over a finite
// field, on seeded samples over QQ), and inverse-map needs brace negation to
// be a two-sided multiplicative inverse.
// Throws MissingMapError without a counit, InputError for an unknown kind or
// a non-invertible q, MapRefusedError("NotMultiplicative" | "NotGroupLike")
// with a witness when a verified precondition fails.
YBMap make_map(const std::string& kind, const PresPtr& P, const TestAlgebra& A,
               const std::optional<Scalar>& q = std::nullopt);

struct YBCheckItem {
  std::string equation;  // "braid" | "YB1" | "YB2" | "YB3" | "agreement"
  std::uint64_t domain = 0;
  std::uint64_t checked = 0;
  bool exhaustive = true;
  std::uint64_t failures = 0;
  bool holds = true;
  std::string witness;  // least failing triple
};

struct YBReport {
  std::string map_kind;
  std::string presentation;
  std::string algebra;
  std::string mode;  // "exhaustive" | "sampled"
  int point_count = 0;
  std::uint64_t point_evals = 0;
  std::uint64_t seed = 0;
  std::vector<YBCheckItem> checks;

  bool all_pass() const;
  const YBCheckItem* find(const std::string& equation) const;
};

// Interned lambda/rho on top of the product and heap tables.
// L[s*n + t] = index of lambda_s(t), Rh[s*n + t] = index of rho_t(s).
struct MapTables {
  OpTables ops;
  std::vector<std::int32_t> L;
  std::vector<std::int32_t> Rh;
};

MapTables build_map_tables(const YBMap& r, std::uint64_t budget = 10'000'000);

// Braid relation (r x 1)(1 x r)(r x 1) = (1 x r)(r x 1)(1 x r) on point
// triples; exhaustive via tables over a finite field, seeded samples over QQ.
YBReport check_braid(const YBMap& r, const MapTables& T, SweepOptions opts = {});
YBReport check_braid(const YBMap& r, SweepOptions opts = {});

// The three component equations plus an agreement row cross-validating that
// the braid relation holds exactly where YB1, YB2, YB3 all hold.  The same
// triples are visited as in check_braid (identical seeding).
YBReport check_components(const YBMap& r, const MapTables& T, SweepOptions opts = {});
YBReport check_components(const YBMap& r, SweepOptions opts = {});

struct NondegReport {
  std::string map_kind;
  std::string presentation;
  std::string algebra;
  int point_count = 0;
  bool left_nondegenerate = true;   // every lambda_s injective
  bool right_nondegenerate = true;  // every rho_t injective
  std::string left_witness;         // first collision, lexicographically least
  std::string right_witness;

  bool nondegenerate() const { return left_nondegenerate && right_nondegenerate; }
};

// Decides non-degeneracy by exhaustive injectivity checks; never assumed.
// Throws InfiniteBaseError over QQ.
NondegReport check_nondegenerate(const YBMap& r, std::uint64_t budget = 10'000'000);

// The same construction instantiated over reduce(P) (preconditions
// re-verified there).
YBMap reduced_map(const YBMap& r);

}  // namespace stx
