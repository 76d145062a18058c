#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "stx/stx_format.hpp"

using namespace stx;

namespace {

ParseError capture_parse_error(const std::string& text) {
  try {
    parse_stx(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "unreachable");
}

const char* kLaurentText =
    "; Laurent pair with one odd line\n"
    "scalar QQ\n"
    "gen x even invertible xinv\n"
    "gen theta odd\n"
    "\n"
    "delta2\n"
    "  x -> x # x        ; group-like part\n"
    "  theta -> x # theta + theta # x\n"
    "delta3\n"
    "  x -> x*x^-1*x # x^-1 # x\n"
    "  theta -> x # x^-1 # theta - x # x^-2*theta # x + theta # x^-1 # x\n"
    "counit\n"
    "  x -> 1\n"
    "  theta -> 0\n";

}  // namespace

TEST_SUITE("format") {

TEST_CASE("render then parse is the identity on every builtin") {
  for (const std::string& name : builtin_names()) {
    for (const Field& f : {Field::rationals(), Field::prime(3)}) {
      CAPTURE(name);
      CAPTURE(f.to_string());
      CotrussPresentation P = builtin_presentation(name, f);
      std::string text = render_stx(P);
      CotrussPresentation Q = parse_stx(text, name);
      CHECK(presentations_equal(P, Q));
      CHECK(render_stx(Q) == text);  // rendering is a fixed point
    }
  }
}

TEST_CASE("rendered polynomial presentation carries the expected lines") {
  std::string text = render_stx(builtin_presentation("poly_theta", Field::rationals()));
  CHECK(text.rfind("scalar QQ\n", 0) == 0);
  CHECK(text.find("gen x even\n") != std::string::npos);
  CHECK(text.find("gen theta odd\n") != std::string::npos);
  CHECK(text.find("  x -> x # x + theta # theta\n") != std::string::npos);
  CHECK(text.find("  theta -> x # theta + theta # x\n") != std::string::npos);
  CHECK(text.find("  x -> x # 1 # 1 - 1 # x # 1 + 1 # 1 # x\n") != std::string::npos);
  CHECK(text.find("counit\n") != std::string::npos);
  CHECK(text.find("cozero\n") != std::string::npos);

  std::string laurent = render_stx(builtin_presentation("laurent_theta", Field::rationals()));
  CHECK(laurent.find("gen x even invertible xinv\n") != std::string::npos);
  CHECK(laurent.find("x^-2*theta") != std::string::npos);  // negative exponents survive
  CHECK(laurent.find("cozero") == std::string::npos);
}

TEST_CASE("hand-written file with comments, exponents and aliases") {
  CotrussPresentation P = parse_stx(kLaurentText, "by-hand");
  CHECK(P.name == "by-hand");
  CHECK(presentations_equal(P, builtin_presentation("laurent_theta", Field::rationals())));

  // x*x^-1*x collapsed to x, and ^-1 routed through the alias slot
  GeneratorSetPtr g = P.gens;
  int xi = g->index_of("x"), vi = g->index_of("xinv");
  REQUIRE(xi >= 0);
  REQUIRE(vi >= 0);
  CHECK(g->gen(vi).inverse_of == xi);
  Field f = P.field;
  SuperPoly x = SuperPoly::of_generator(g, f, xi);
  SuperPoly xinv = SuperPoly::of_generator(g, f, vi);
  CHECK(P.delta3.image(xi) == TensorElement::pure({x, xinv, x}));
}

TEST_CASE("coefficients: integers, fractions, and the leading-slot shorthand") {
  std::string text =
      "scalar QQ\n"
      "gen x even\n"
      "gen theta odd\n"
      "delta2\n"
      "  x -> 2 # x - 1/2*x # 1 + x # x\n"
      "  theta -> -3*x # theta\n"
      "delta3\n"
      "  x -> x # 1 # 1\n"
      "  theta -> theta # 1 # 1\n";
  CotrussPresentation P = parse_stx(text);
  GeneratorSetPtr g = P.gens;
  Field f = P.field;
  SuperPoly x = SuperPoly::of_generator(g, f, 0);
  SuperPoly th = SuperPoly::of_generator(g, f, 1);
  SuperPoly one = SuperPoly::unit(g, f);
  TensorElement want = TensorElement::pure({one.scaled(Scalar::of(f, 2)), x}) -
                       TensorElement::pure({x.scaled(Scalar::fraction(f, 1, 2)), one}) +
                       TensorElement::pure({x, x});
  CHECK(P.delta2.image(0) == want);
  CHECK(P.delta2.image(1) == TensorElement::pure({x.scaled(Scalar::of(f, -3)), th}));
  // the same elements survive a render/parse cycle
  CHECK(presentations_equal(P, parse_stx(render_stx(P))));
}

TEST_CASE("positioned errors") {
  auto check_error = [](const std::string& text, int line, const std::string& needle) {
    CAPTURE(needle);
    ParseError e = capture_parse_error(text);
    CHECK(e.line == line);
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  };

  SUBCASE("odd generators cannot be invertible") {
    check_error("scalar QQ\ngen theta odd invertible ti\n", 2, "odd generators cannot be invertible");
  }
  SUBCASE("arity mismatch is positioned at the image line") {
    std::string text =
        "scalar QQ\ngen x even\ndelta2\n  x -> x # x\ndelta3\n  x -> x # x\n";
    check_error(text, 6, "expected 3 tensor factors, got 2");
  }
  SUBCASE("unknown generator in an expression") {
    check_error("scalar QQ\ngen x even\ndelta2\n  x -> x # y\n", 4, "unknown generator: y");
  }
  SUBCASE("negative exponent needs an invertible generator") {
    check_error("scalar QQ\ngen x even\ndelta2\n  x -> x^-1 # x\n", 4, "not invertible");
  }
  SUBCASE("alias images are derived, not declared") {
    check_error("scalar QQ\ngen x even invertible xinv\ndelta2\n  xinv -> x # x\n", 4, "derived");
  }
  SUBCASE("missing image is reported at the block header") {
    check_error("scalar QQ\ngen x even\ngen theta odd\ndelta2\n  x -> x # x\ndelta3\n  x -> x # 1 # 1\n  theta -> theta # 1 # 1\n",
                4, "missing the image of theta");
  }
  SUBCASE("duplicate image") {
    check_error("scalar QQ\ngen x even\ndelta2\n  x -> x # x\n  x -> x # x\n", 5, "duplicate image");
  }
  SUBCASE("duplicate block") {
    check_error("scalar QQ\ngen x even\ndelta2\n  x -> x # x\ndelta2\n", 5, "duplicate block");
  }
  SUBCASE("image line outside any block") {
    check_error("scalar QQ\ngen x even\nx -> x\n", 3, "outside any block");
  }
  SUBCASE("scalar declared twice") {
    check_error("scalar QQ\nscalar QQ\n", 2, "duplicate scalar");
  }
  SUBCASE("modulus must be prime") {
    check_error("scalar FP 4\n", 1, "not prime");
  }
  SUBCASE("block before the scalar declaration") {
    check_error("delta2\n", 1, "scalar field must be declared");
  }
  SUBCASE("generators after a block began") {
    check_error("scalar QQ\ngen x even\ndelta2\n  x -> x # x\ngen y even\n", 5, "must precede");
  }
  SUBCASE("missing delta blocks") {
    check_error("scalar QQ\ngen x even\n", 3, "missing delta2");
    check_error("scalar QQ\ngen x even\ndelta2\n  x -> x # x\n", 5, "missing delta3");
  }
  SUBCASE("unrecognized line") {
    check_error("scalar QQ\nbogus stuff\n", 2, "unrecognized line");
  }
  SUBCASE("well-definedness failures carry the block's line") {
    // even generator sent to an odd tensor term
    std::string text = "scalar QQ\ngen x even\ngen theta odd\ndelta2\n  x -> x # theta\n  theta -> x # theta\ndelta3\n  x -> x # 1 # 1\n  theta -> theta # 1 # 1\n";
    check_error(text, 4, "not well defined");
  }
  SUBCASE("counit expressions live in the scalars") {
    std::string text =
        "scalar QQ\ngen x even\ndelta2\n  x -> x # x\ndelta3\n  x -> x # 1 # 1\ncounit\n  x -> x\n";
    check_error(text, 8, "unknown generator: x");
  }
}

TEST_CASE("file parsing names the presentation by its stem") {
  std::string path = "/tmp/format_case.stx";
  {
    std::ofstream out(path);
    out << kLaurentText;
  }
  CotrussPresentation P = parse_stx_file(path);
  CHECK(P.name == "format_case");
  CHECK(presentations_equal(P, builtin_presentation("laurent_theta", Field::rationals())));
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_stx_file(path), InputError);
}

TEST_CASE("morphism blocks") {
  Field f = Field::prime(3);
  CotrussPresentation P = builtin_presentation("poly_theta", f);
  GeneratorSetPtr g = P.gens;

  GenHom id = parse_morphism("map\n  x -> x\n  theta -> theta\n", g, g, f);
  GenHom want = GenHom::identity(g, f);
  for (int i = 0; i < g->count(); ++i) CHECK(id.image(i) == want.image(i));

  GenHom flip = parse_morphism("; sign on the odd line\nmap\n  x -> x\n  theta -> -theta\n", g, g, f);
  SuperPoly th = SuperPoly::of_generator(g, f, g->index_of("theta"));
  CHECK(flip.image(g->index_of("theta")) == TensorElement::pure({th.negated()}));

  CHECK_THROWS_WITH_AS(parse_morphism("map\n  x -> x\n", g, g, f),
                       doctest::Contains("missing the image of theta"), ParseError);
  CHECK_THROWS_WITH_AS(parse_morphism("  x -> x\n", g, g, f),
                       doctest::Contains("unrecognized line"), ParseError);
  CHECK_THROWS_WITH_AS(parse_morphism("map\n  x -> theta\n  theta -> x\n", g, g, f),
                       doctest::Contains("not well defined"), ParseError);
  CHECK_THROWS_WITH_AS(parse_morphism("map\n  x -> x # x\n  theta -> theta\n", g, g, f),
                       doctest::Contains("expected 1 tensor factors"), ParseError);
}

TEST_CASE("structural equality ignores names but nothing else") {
  Field q = Field::rationals();
  CotrussPresentation P = builtin_presentation("poly_theta", q);

  CotrussPresentation renamed = parse_stx(render_stx(P), "anything-else");
  CHECK(presentations_equal(P, renamed));

  CHECK_FALSE(presentations_equal(P, builtin_presentation("poly_theta", Field::prime(3))));
  CHECK_FALSE(presentations_equal(P, builtin_presentation("laurent_theta", q)));
  CHECK_FALSE(presentations_equal(P, reduce(P)));

  CotrussPresentation stripped = P;
  stripped.cozero.reset();
  CHECK_FALSE(presentations_equal(P, stripped));

  CotrussPresentation flipped = single_sign_mutations(P)[0].second;
  CHECK_FALSE(presentations_equal(P, flipped));
}

}  // TEST_SUITE
