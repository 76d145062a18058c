#include <random>

#include "doctest.h"
#include "stx/cotruss.hpp"
#include "stx/ybe.hpp"

using namespace stx;

namespace {

PresPtr poly_pres(const Field& f) { return share(builtin_presentation("poly_theta", f)); }
PresPtr laurent_pres(const Field& f) { return share(builtin_presentation("laurent_theta", f)); }

}  // namespace

TEST_SUITE_BEGIN("ybe");

TEST_CASE("lambda and rho reproduce the catalogued formulas on the pair presentation") {
  Field f = Field::rationals();
  PresPtr P = poly_pres(f);
  TestAlgebra A{f, 2};
  GrassmannElement one = GrassmannElement::one(A);
  YBMap flip = make_map("flip", P, A);
  YBMap sflip = make_map("superflip", P, A);
  YBMap act = make_map("left-action", P, A);
  YBMap comp = make_map("composed:parity:left-action", P, A);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    Point s = sample_point(P, A, rng);
    Point t = sample_point(P, A, rng);
    const auto &x1 = s.image(0), &h1 = s.image(1);
    const auto &x2 = t.image(0), &h2 = t.image(1);

    CHECK(flip.lambda(s, t) == t);
    CHECK(flip.rho(t, s) == s);

    Point sf = sflip.lambda(s, t);
    CHECK(sf.image(0) == x2);
    CHECK(sf.image(1) == h2.negated());
    Point sr = sflip.rho(t, s);
    CHECK(sr.image(0) == x1);
    CHECK(sr.image(1) == h1.negated());

    Point al = act.lambda(s, t);
    CHECK(al.image(0) == x1 * x2 + h1 * h2 - x1 + one);
    CHECK(al.image(1) == x1 * h2 + h1 * x2 - h1);
    CHECK(act.rho(t, s) == s);
    CHECK(al == brace_add(brace_add(point_mul(s, t), brace_neg(point_mul(s, unit_point(P, A)))),
                          unit_point(P, A)));

    Point cl = comp.lambda(s, t);
    CHECK(cl.image(0) == x1 * x2 + h1 * h2 - x1 + one);
    CHECK(cl.image(1) == (x1 * h2 + h1 * x2 - h1).negated());
    Point cr = comp.rho(t, s);
    CHECK(cr.image(0) == x1);
    CHECK(cr.image(1) == h1.negated());
  }
}

TEST_CASE("inverse and scaling maps on the invertible presentation") {
  Field f = Field::rationals();
  PresPtr L = laurent_pres(f);
  TestAlgebra A{f, 2};
  YBMap inv = make_map("inverse-map", L, A);
  YBMap scal = make_map("odd-scaling", L, A, Scalar::of(f, 5));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    Point s = sample_point(L, A, rng);
    Point t = sample_point(L, A, rng);
    GrassmannElement x2i = t.image(0).inverse();
    Point il = inv.lambda(s, t);
    CHECK(il.image(0) == x2i);
    CHECK(il.image(2) == (x2i * x2i * t.image(2)).negated());
    CHECK(inv.rho(t, s) == brace_neg(s));

    Point sl = scal.lambda(s, t);
    CHECK(sl.image(0) == t.image(0));
    CHECK(sl.image(2) == t.image(2).scaled(Scalar::of(f, 5)));
    Point sp = scal.rho(t, s);
    CHECK(sp.image(0) == s.image(0));
    CHECK(sp.image(2) == s.image(2).scaled(Scalar::fraction(f, 1, 5)));
  }
}

TEST_CASE("map preconditions are verified, not assumed") {
  Field f = Field::rationals();
  PresPtr P = poly_pres(f);
  TestAlgebra A{f, 2};

  CotrussPresentation bare = *P;
  bare.counit.reset();
  CHECK_THROWS_AS(make_map("flip", share(std::move(bare)), A), MissingMapError);

  CHECK_THROWS_AS(make_map("twist", P, A), InputError);
  CHECK_THROWS_AS(make_map("composed:flip:parity", P, A), InputError);
  CHECK_THROWS_AS(make_map("composed:parity:composed:parity:flip", P, A), InputError);
  CHECK_THROWS_AS(make_map("odd-scaling", P, A), InputError);
  CHECK_THROWS_AS(make_map("odd-scaling", P, A, Scalar::zero(f)), InputError);

  // q^2 != 1 breaks multiplicativity on a presentation whose product pairs
  // two odd slots; the constructor finds a sampled witness over QQ
  CHECK_THROWS_AS(make_map("odd-scaling", P, A, Scalar::of(f, 2)), MapRefusedError);
  try {
    make_map("odd-scaling", P, A, Scalar::of(f, 2));
  } catch (const MapRefusedError& e) {
    CHECK(e.code == "NotMultiplicative");
  }
  // q = -1 is the parity twist and always multiplicative
  YBMap ok = make_map("odd-scaling", P, A, Scalar::of(f, -1));
  CHECK(ok.lambda_factor() == Scalar::of(f, -1));

  // the pair presentation has non-invertible points, so inversion is refused
  try {
    make_map("inverse-map", P, A);
    FAIL("inverse-map on a non-group-like presentation was accepted");
  } catch (const MapRefusedError& e) {
    CHECK(e.code == "NotGroupLike");
  }
  Field f2 = Field::prime(2);
  try {
    make_map("inverse-map", poly_pres(f2), TestAlgebra{f2, 1});
    FAIL("inverse-map on a non-group-like presentation was accepted");
  } catch (const MapRefusedError& e) {
    CHECK(e.code == "NotGroupLike");
  }

  // the same scaling is fine when the point set cannot see a paired-odd term:
  // with one Grassmann direction, theta-theta products vanish
  Field f5 = Field::prime(5);
  YBMap small = make_map("odd-scaling", poly_pres(f5), TestAlgebra{f5, 1}, Scalar::of(f5, 2));
  CHECK(small.kind() == "odd-scaling");

  // 2 squares to 1 mod 3, so the scaling is multiplicative everywhere
  Field f3 = Field::prime(3);
  YBMap q3 = make_map("odd-scaling", poly_pres(f3), TestAlgebra{f3, 2}, Scalar::of(f3, 2));
  CHECK(q3.rho_factor() == Scalar::of(f3, 2));  // 2^-1 = 2 mod 3
}

TEST_CASE("braid and components pass for the involutive catalogue") {
  Field f2 = Field::prime(2);
  PresPtr P = poly_pres(f2);
  TestAlgebra A{f2, 1};
  for (const char* kind : {"flip", "superflip"}) {
    YBMap r = make_map(kind, P, A);
    MapTables T = build_map_tables(r);
    YBReport braid = check_braid(r, T);
    CHECK(braid.all_pass());
    CHECK(braid.mode == "exhaustive");
    CHECK(braid.point_count == 4);
    CHECK(braid.checks.size() == 1);
    CHECK(braid.checks[0].domain == 64);
    CHECK(braid.checks[0].checked == 64);
    YBReport comp = check_components(r, T);
    CHECK(comp.all_pass());
    CHECK(comp.checks.size() == 4);
    const YBCheckItem* agree = comp.find("agreement");
    REQUIRE(agree != nullptr);
    CHECK(agree->failures == 0);
    NondegReport nd = check_nondegenerate(r);
    CHECK(nd.nondegenerate());
  }

  Field f3 = Field::prime(3);
  PresPtr L = laurent_pres(f3);
  TestAlgebra AL{f3, 1};
  for (const char* kind : {"inverse-map", "odd-scaling"}) {
    std::optional<Scalar> q;
    if (std::string(kind) == "odd-scaling") q = Scalar::of(f3, 2);
    YBMap r = make_map(kind, L, AL, q);
    MapTables T = build_map_tables(r);
    CHECK(check_braid(r, T).all_pass());
    CHECK(check_components(r, T).all_pass());
    CHECK(check_nondegenerate(r).nondegenerate());
  }
}

TEST_CASE("the left-action map violates the braid relation beyond characteristic two scalars") {
  // on scalar points over F_3 the first composite differs from the second by
  // s(s-1)(t-1)(u-1) in the leading slot; the least witness is s=2, t=0, u=0
  Field f3 = Field::prime(3);
  PresPtr P = poly_pres(f3);
  YBMap r = make_map("left-action", P, TestAlgebra{f3, 0});
  MapTables T = build_map_tables(r);
  REQUIRE(T.ops.n == 3);
  YBReport braid = check_braid(r, T);
  CHECK(!braid.all_pass());
  const YBCheckItem& b = braid.checks[0];
  CHECK(b.failures == 4);  // s = 2, t and u in {0, 2}
  CHECK(b.witness.substr(0, 10) == "triple #18");
  bool witness_names_s2 = b.witness.find("x -> 2") != std::string::npos;
  CHECK(witness_names_s2);

  YBReport comp = check_components(r, T);
  const YBCheckItem* yb1 = comp.find("YB1");
  const YBCheckItem* yb2 = comp.find("YB2");
  const YBCheckItem* yb3 = comp.find("YB3");
  const YBCheckItem* agree = comp.find("agreement");
  REQUIRE(yb1 != nullptr);
  CHECK(!yb1->holds);
  CHECK(yb1->failures == 4);
  CHECK(yb1->witness == b.witness);  // rho is the identity, so only YB1 can break
  CHECK(yb2->holds);
  CHECK(yb3->holds);
  CHECK(agree->holds);  // braid fails exactly where a component fails

  // the nilpotent sector breaks it even over F_2: (s - s^2)(u - e) picks up
  // a theta term
  Field f2 = Field::prime(2);
  PresPtr P2 = poly_pres(f2);
  YBMap r2 = make_map("left-action", P2, TestAlgebra{f2, 1});
  MapTables T2 = build_map_tables(r2);
  YBReport braid2 = check_braid(r2, T2);
  CHECK(!braid2.all_pass());
  YBReport comp2 = check_components(r2, T2);
  CHECK(!comp2.find("YB1")->holds);
  CHECK(comp2.find("agreement")->holds);
  // but scalar points alone are fixed by squaring in characteristic two
  YBMap flat = make_map("left-action", P2, TestAlgebra{f2, 0});
  CHECK(check_braid(flat).all_pass());

  // composing with the parity twist does not repair the defect
  YBMap twisted = make_map("composed:parity:left-action", P, TestAlgebra{f3, 0});
  YBReport tb = check_braid(twisted);
  CHECK(!tb.all_pass());
  CHECK(tb.checks[0].failures == 4);

  // the left-action rho is the identity, hence right non-degenerate; lambda
  // collapses at points whose x-image is not invertible
  NondegReport nd = check_nondegenerate(r2);
  CHECK(!nd.left_nondegenerate);
  CHECK(nd.right_nondegenerate);
  bool witness_mentions_lambda = nd.left_witness.find("lambda") != std::string::npos;
  CHECK(witness_mentions_lambda);
}

TEST_CASE("sampled checks over the rationals") {
  Field f = Field::rationals();
  PresPtr P = poly_pres(f);
  PresPtr L = laurent_pres(f);
  TestAlgebra A{f, 2};
  SweepOptions opts;
  opts.sample_count = 40;
  opts.seed = 7;

  for (const char* kind : {"flip", "superflip"}) {
    YBReport rep = check_braid(make_map(kind, P, A), opts);
    CHECK(rep.mode == "sampled");
    CHECK(rep.all_pass());
    CHECK(rep.checks[0].checked == 40);
    CHECK(check_components(make_map(kind, P, A), opts).all_pass());
  }
  CHECK(check_braid(make_map("inverse-map", L, A), opts).all_pass());
  CHECK(check_braid(make_map("odd-scaling", L, A, Scalar::of(f, 3)), opts).all_pass());

  YBReport bad = check_braid(make_map("left-action", P, A), opts);
  CHECK(!bad.all_pass());
  CHECK(bad.checks[0].failures > 0);
  CHECK(bad.checks[0].witness.substr(0, 8) == "sample #");
  YBReport badc = check_components(make_map("left-action", P, A), opts);
  CHECK(!badc.find("YB1")->holds);
  CHECK(badc.find("agreement")->holds);
  CHECK(badc.find("YB1")->witness == bad.checks[0].witness);  // same seeded triples

  CHECK_THROWS_AS(check_nondegenerate(make_map("flip", P, A)), InfiniteBaseError);
}

TEST_CASE("reduced maps collapse to the classical flip") {
  Field f3 = Field::prime(3);
  TestAlgebra A{f3, 1};
  YBMap sflip = make_map("superflip", poly_pres(f3), A);
  YBMap red = reduced_map(sflip);
  CHECK(red.kind() == "superflip");
  CHECK(red.presentation()->gens->count() == 1);  // theta is gone
  MapTables TR = build_map_tables(red);
  MapTables TF = build_map_tables(make_map("flip", red.presentation(), A));
  CHECK(TR.ops.n == 3);
  CHECK(TR.L == TF.L);
  CHECK(TR.Rh == TF.Rh);
  CHECK(check_braid(red, TR).all_pass());

  YBMap scal = reduced_map(make_map("odd-scaling", laurent_pres(f3), A, Scalar::of(f3, 2)));
  MapTables TS = build_map_tables(scal);
  MapTables TSF = build_map_tables(make_map("flip", scal.presentation(), A));
  CHECK(TS.L == TSF.L);
  CHECK(TS.Rh == TSF.Rh);
}

TEST_CASE("table budgets count lambda and rho fills") {
  Field f2 = Field::prime(2);
  PresPtr P = poly_pres(f2);
  TestAlgebra A{f2, 0};  // two points
  YBMap r = make_map("flip", P, A);
  MapTables T = build_map_tables(r, 30);
  CHECK(T.ops.point_evals == 2 * 2 + 2 * 2 * 2 + 2 + 2 * 2 * 2);  // tables, units, maps
  CHECK_THROWS_AS(build_map_tables(r, 15), BudgetError);
  CHECK_THROWS_AS(build_map_tables(r, 5), BudgetError);  // already too small for base tables
}

TEST_SUITE_END();
