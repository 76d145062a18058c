#include <memory>

#include "stx/cotruss.hpp"
#include "stx/errors.hpp"

namespace stx {

namespace {

CotrussPresentation make_trivial(const Field& f) {
  GeneratorSetPtr g = empty_generators();
  GeneratorSetPtr k = empty_generators();
  GenHom d2(g, g, f, 2, {});
  GenHom d3(g, g, f, 3, {});
  GenHom eps(g, k, f, 1, {});
  GenHom zero(g, k, f, 1, {});
  return CotrussPresentation{"trivial", g, f, std::move(d2), std::move(d3), std::move(eps),
                             std::move(zero)};
}

CotrussPresentation make_poly_theta(const Field& f) {
  auto gs = std::make_shared<GeneratorSet>();
  gs->add_even("x");
  gs->add_odd("theta");
  GeneratorSetPtr g = gs;
  SuperPoly x = SuperPoly::of_generator(g, f, 0);
  SuperPoly th = SuperPoly::of_generator(g, f, 1);
  SuperPoly one = SuperPoly::unit(g, f);

  std::vector<TensorElement> d2{
      TensorElement::pure({x, x}) + TensorElement::pure({th, th}),
      TensorElement::pure({x, th}) + TensorElement::pure({th, x})};
  std::vector<TensorElement> d3{
      TensorElement::pure({x, one, one}) - TensorElement::pure({one, x, one}) +
          TensorElement::pure({one, one, x}),
      TensorElement::pure({th, one, one}) - TensorElement::pure({one, th, one}) +
          TensorElement::pure({one, one, th})};

  GeneratorSetPtr k = empty_generators();
  std::vector<TensorElement> eps{TensorElement::unit(k, f, 1), TensorElement::zero(k, f, 1)};
  std::vector<TensorElement> zero{TensorElement::zero(k, f, 1), TensorElement::zero(k, f, 1)};
  return CotrussPresentation{"poly_theta",
                             g,
                             f,
                             GenHom(g, g, f, 2, std::move(d2)),
                             GenHom(g, g, f, 3, std::move(d3)),
                             GenHom(g, k, f, 1, std::move(eps)),
                             GenHom(g, k, f, 1, std::move(zero))};
}

struct LaurentParts {
  GeneratorSetPtr g;
  SuperPoly x, xinv, th, one;
  GenHom delta2;
  GenHom counit;
};

LaurentParts laurent_parts(const Field& f) {
  auto gs = std::make_shared<GeneratorSet>();
  gs->add_invertible("x", "xinv");
  gs->add_odd("theta");
  GeneratorSetPtr g = gs;
  SuperPoly x = SuperPoly::of_generator(g, f, 0);
  SuperPoly xinv = SuperPoly::of_generator(g, f, 1);
  SuperPoly th = SuperPoly::of_generator(g, f, 2);
  SuperPoly one = SuperPoly::unit(g, f);

  std::vector<TensorElement> d2{TensorElement::pure({x, x}), TensorElement::zero(g, f, 2),
                                TensorElement::pure({x, th}) + TensorElement::pure({th, x})};
  GeneratorSetPtr k = empty_generators();
  std::vector<TensorElement> eps{TensorElement::unit(k, f, 1), TensorElement::zero(k, f, 1),
                                 TensorElement::zero(k, f, 1)};
  return LaurentParts{g,
                      x,
                      xinv,
                      th,
                      one,
                      GenHom(g, g, f, 2, std::move(d2)),
                      GenHom(g, k, f, 1, std::move(eps))};
}

CotrussPresentation make_laurent_theta(const Field& f) {
  LaurentParts lp = laurent_parts(f);
  std::vector<TensorElement> d3{
      TensorElement::pure({lp.x, lp.xinv, lp.x}), TensorElement::zero(lp.g, f, 3),
      TensorElement::pure({lp.x, lp.xinv, lp.th}) -
          TensorElement::pure({lp.x, lp.xinv * lp.xinv * lp.th, lp.x}) +
          TensorElement::pure({lp.th, lp.xinv, lp.x})};
  return CotrussPresentation{"laurent_theta", lp.g,
                             f,  std::move(lp.delta2),
                             GenHom(lp.g, lp.g, f, 3, std::move(d3)),
                             std::move(lp.counit),
                             std::nullopt};
}

CotrussPresentation make_laurent_theta_via_hopf(const Field& f) {
  LaurentParts lp = laurent_parts(f);
  std::vector<TensorElement> anti{
      TensorElement::pure({lp.xinv}), TensorElement::zero(lp.g, f, 1),
      TensorElement::pure({lp.xinv * lp.xinv * lp.th}).negated()};
  GenHom S(lp.g, lp.g, f, 1, std::move(anti));
  return trussify_hopf("laurent_theta_via_hopf", lp.g, f, lp.delta2, S, lp.counit);
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"trivial", "poly_theta", "laurent_theta", "laurent_theta_via_hopf"};
}

CotrussPresentation builtin_presentation(const std::string& name, const Field& field) {
  if (name == "trivial") return make_trivial(field);
  if (name == "poly_theta") return make_poly_theta(field);
  if (name == "laurent_theta") return make_laurent_theta(field);
  if (name == "laurent_theta_via_hopf") return make_laurent_theta_via_hopf(field);
  throw InputError("unknown builtin presentation: " + name);
}

std::vector<std::pair<std::string, CotrussPresentation>> single_sign_mutations(
    const CotrussPresentation& P) {
  std::vector<std::pair<std::string, CotrussPresentation>> out;
  for (int which = 2; which <= 3; ++which) {
    const GenHom& hom = which == 2 ? P.delta2 : P.delta3;
    for (int g = 0; g < P.gens->count(); ++g) {
      if (P.gens->gen(g).is_alias()) continue;
      const TensorElement& image = hom.image(g);
      for (const auto& [mono, coeff] : image.terms()) {
        TensorElement flipped(P.gens, P.field, hom.arity());
        for (const auto& [m2, c2] : image.terms())
          flipped.add_term(m2, m2 == mono ? c2.negated() : c2);
        std::vector<TensorElement> images;
        images.reserve(P.gens->count());
        for (int h = 0; h < P.gens->count(); ++h)
          images.push_back(h == g ? flipped : hom.image(h));
        GenHom mutated(P.gens, P.gens, P.field, hom.arity(), std::move(images));

        TensorElement term_only(P.gens, P.field, hom.arity());
        term_only.add_term(mono, coeff);
        std::string label = "delta" + std::to_string(which) + "(" + P.gens->gen(g).name +
                            "): sign of " + term_only.to_string() + " flipped";
        CotrussPresentation Q{P.name, P.gens, P.field,
                              which == 2 ? mutated : P.delta2,
                              which == 3 ? mutated : P.delta3, P.counit, P.cozero};
        out.emplace_back(std::move(label), std::move(Q));
      }
    }
  }
  return out;
}

}  // namespace stx
