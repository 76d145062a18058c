#include "stx/cotruss.hpp"

#include <random>

#include "stx/errors.hpp"

namespace stx {

namespace {

enum class Law {
  TernaryCoassoc,   // (1,1,D3)D3 = (D3,1,1)D3
  RightCollapse,    // (1,m)D3 = g # 1
  LeftCollapse,     // (m,1)D3 = 1 # g
  OuterSymmetry,    // D3 = sigma13 D3
  BinaryCoassoc,    // (D2,1)D2 = (1,D2)D2
  LeftInterleave,   // (1,D3)D2 = m135 (D2,D2,D2) D3
  RightInterleave,  // (D3,1)D2 = m246 (D2,D2,D2) D3
  CounitLeft,
  CounitRight,
  CozeroLeft,
  CozeroRight,
};

const char* law_name(Law l) {
  switch (l) {
    case Law::TernaryCoassoc: return "Con1";
    case Law::RightCollapse: return "Con2";
    case Law::LeftCollapse: return "Con3";
    case Law::OuterSymmetry: return "Con4";
    case Law::BinaryCoassoc: return "Con5";
    case Law::LeftInterleave: return "Con6";
    case Law::RightInterleave: return "Con7";
    case Law::CounitLeft: return "counit-left";
    case Law::CounitRight: return "counit-right";
    case Law::CozeroLeft: return "cozero-left";
    case Law::CozeroRight: return "cozero-right";
  }
  return "?";
}

std::pair<TensorElement, TensorElement> law_sides(const CotrussPresentation& P, const GenHom& id,
                                                  Law law, const SuperPoly& p,
                                                  bool sigma13_graded) {
  const GenHom& d2 = P.delta2;
  const GenHom& d3 = P.delta3;
  switch (law) {
    case Law::TernaryCoassoc: {
      TensorElement t = d3.apply_poly(p);
      return {apply_factorwise(t, {&id, &id, &d3}), apply_factorwise(t, {&d3, &id, &id})};
    }
    case Law::RightCollapse:
      return {collapse_adjacent(d3.apply_poly(p), 1, 2),
              TensorElement::pure({p, SuperPoly::unit(p.gens(), p.field())})};
    case Law::LeftCollapse:
      return {collapse_adjacent(d3.apply_poly(p), 0, 2),
              TensorElement::pure({SuperPoly::unit(p.gens(), p.field()), p})};
    case Law::OuterSymmetry: {
      TensorElement t = d3.apply_poly(p);
      return {t, koszul_permute(t, {2, 1, 0}, sigma13_graded)};
    }
    case Law::BinaryCoassoc: {
      TensorElement t = d2.apply_poly(p);
      return {apply_factorwise(t, {&d2, &id}), apply_factorwise(t, {&id, &d2})};
    }
    case Law::LeftInterleave:
      return {apply_factorwise(d2.apply_poly(p), {&id, &d3}),
              interleave_mul_135(apply_factorwise(d3.apply_poly(p), {&d2, &d2, &d2}))};
    case Law::RightInterleave:
      return {apply_factorwise(d2.apply_poly(p), {&d3, &id}),
              interleave_mul_246(apply_factorwise(d3.apply_poly(p), {&d2, &d2, &d2}))};
    case Law::CounitLeft:
      return {apply_scalar_slot(d2.apply_poly(p), *P.counit, 0), TensorElement::pure({p})};
    case Law::CounitRight:
      return {apply_scalar_slot(d2.apply_poly(p), *P.counit, 1), TensorElement::pure({p})};
    case Law::CozeroLeft:
      return {apply_scalar_slot(d2.apply_poly(p), *P.cozero, 0),
              TensorElement::pure({SuperPoly::constant(p.gens(), P.cozero->eval_scalar(p))})};
    case Law::CozeroRight:
      return {apply_scalar_slot(d2.apply_poly(p), *P.cozero, 1),
              TensorElement::pure({SuperPoly::constant(p.gens(), P.cozero->eval_scalar(p))})};
  }
  throw UsageError("unknown law");
}

std::vector<SuperPoly> probe_elements(const CotrussPresentation& P, const CheckOptions& opts,
                                      std::vector<std::string>& labels) {
  std::vector<SuperPoly> elems;
  for (int g = 0; g < P.gens->count(); ++g) {
    elems.push_back(SuperPoly::of_generator(P.gens, P.field, g));
    labels.push_back(P.gens->gen(g).name);
  }
  if (opts.random_products > 0) {
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
    for (int k = 0; k < opts.random_products; ++k) {
      SuperPoly p = SuperPoly::zero(P.gens, P.field);
      int terms = 1 + static_cast<int>(rng() % 2);
      for (int t = 0; t < terms; ++t) {
        std::int64_t c = static_cast<std::int64_t>(rng() % 5) - 2;
        SuperPoly m = SuperPoly::constant(P.gens, Scalar::of(P.field, c == 0 ? 1 : c));
        int deg = static_cast<int>(rng() % 4);
        for (int d = 0; d < deg && P.gens->count() > 0; ++d)
          m = m * SuperPoly::of_generator(P.gens, P.field,
                                          static_cast<int>(rng() % P.gens->count()));
        p = p + m;
      }
      elems.push_back(p);
      labels.push_back(p.to_string());
    }
  }
  return elems;
}

}  // namespace

CheckReport check_axioms(const CotrussPresentation& P, const CheckOptions& opts) {
  CheckReport report;
  for (const auto& v : P.delta2.violations()) report.violations.push_back("delta2: " + v);
  for (const auto& v : P.delta3.violations()) report.violations.push_back("delta3: " + v);
  if (P.counit)
    for (const auto& v : P.counit->violations()) report.violations.push_back("counit: " + v);
  if (P.cozero)
    for (const auto& v : P.cozero->violations()) report.violations.push_back("cozero: " + v);

  // ill-defined maps cannot be applied; report the problems and stop
  if (!report.violations.empty()) return report;

  std::vector<Law> laws{Law::TernaryCoassoc, Law::RightCollapse, Law::LeftCollapse,
                        Law::OuterSymmetry,  Law::BinaryCoassoc, Law::LeftInterleave,
                        Law::RightInterleave};
  if (P.counit) {
    laws.push_back(Law::CounitLeft);
    laws.push_back(Law::CounitRight);
  }
  if (P.cozero) {
    laws.push_back(Law::CozeroLeft);
    laws.push_back(Law::CozeroRight);
  }

  std::vector<std::string> labels;
  std::vector<SuperPoly> elems = probe_elements(P, opts, labels);
  GenHom id = GenHom::identity(P.gens, P.field);

  struct Cell {
    bool holds = true;
    std::string lhs, rhs;
  };
  const int ne = static_cast<int>(elems.size());
  const int nl = static_cast<int>(laws.size());
  std::vector<Cell> cells(static_cast<size_t>(ne) * nl);

  // grid of independent (law, element) tasks
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int li = 0; li < nl; ++li) {
    for (int ei = 0; ei < ne; ++ei) {
      auto [lhs, rhs] = law_sides(P, id, laws[li], elems[ei], opts.sigma13_graded);
      Cell& cell = cells[static_cast<size_t>(li) * ne + ei];
      if (!(lhs == rhs)) {
        cell.holds = false;
        cell.lhs = lhs.to_string();
        cell.rhs = rhs.to_string();
      }
    }
  }

  for (int li = 0; li < nl; ++li) {
    CheckItem item;
    item.name = law_name(laws[li]);
    for (int ei = 0; ei < ne; ++ei) {
      const Cell& cell = cells[static_cast<size_t>(li) * ne + ei];
      if (!cell.holds) {
        item.holds = false;
        item.witness = labels[ei];
        item.lhs = cell.lhs;
        item.rhs = cell.rhs;
        break;
      }
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

namespace {

// Drop terms with odd factors and rebuild over the even generator set.
TensorElement project_even(const TensorElement& t, const GeneratorSetPtr& even_gens) {
  TensorElement r(even_gens, t.field(), t.arity());
  for (const auto& [m, c] : t.terms()) {
    bool has_odd = false;
    for (const auto& f : m.factors)
      if (!f.odd_support.empty()) {
        has_odd = true;
        break;
      }
    if (has_odd) continue;
    TensorMonomial pm;
    pm.factors.reserve(m.factors.size());
    for (const auto& f : m.factors) {
      SuperMonomial g = SuperMonomial::unit(*even_gens);
      g.even_exponents = f.even_exponents;  // even slots are preserved 1:1
      pm.factors.push_back(std::move(g));
    }
    r.add_term(pm, c);
  }
  return r;
}

GenHom project_hom(const GenHom& h, const GeneratorSetPtr& old_gens,
                   const GeneratorSetPtr& even_gens, const GeneratorSetPtr& target,
                   const Field& f) {
  std::vector<TensorElement> images;
  images.reserve(even_gens->count());
  for (int g = 0; g < even_gens->count(); ++g) {
    int old_idx = old_gens->index_of(even_gens->gen(g).name);
    TensorElement im = h.image(old_idx);
    images.push_back(target->count() == 0 ? im : project_even(im, even_gens));
  }
  return GenHom(even_gens, target, f, h.arity(), std::move(images));
}

}  // namespace

CotrussPresentation reduce(const CotrussPresentation& P) {
  auto even = std::make_shared<GeneratorSet>();
  for (int g = 0; g < P.gens->count(); ++g) {
    const Generator& gen = P.gens->gen(g);
    if (gen.odd || gen.is_alias()) continue;
    if (gen.invertible())
      even->add_invertible(gen.name, P.gens->gen(gen.inverse_alias).name);
    else
      even->add_even(gen.name);
  }
  GeneratorSetPtr eg = even;
  GenHom d2 = project_hom(P.delta2, P.gens, eg, eg, P.field);
  GenHom d3 = project_hom(P.delta3, P.gens, eg, eg, P.field);
  std::optional<GenHom> cu, cz;
  if (P.counit) cu = project_hom(*P.counit, P.gens, eg, P.counit->target(), P.field);
  if (P.cozero) cz = project_hom(*P.cozero, P.gens, eg, P.cozero->target(), P.field);
  return CotrussPresentation{P.name + "_red", eg, P.field, std::move(d2), std::move(d3),
                             std::move(cu), std::move(cz)};
}

CotrussPresentation trussify_hopf(const std::string& name, const GeneratorSetPtr& gens,
                                  const Field& field, const GenHom& delta, const GenHom& antipode,
                                  const GenHom& counit, bool bracket_left) {
  if (delta.arity() != 2 || antipode.arity() != 1)
    throw UsageError("expected arity-2 comultiplication and arity-1 antipode");
  GenHom id = GenHom::identity(gens, field);
  for (int g = 0; g < gens->count(); ++g) {
    SuperPoly pg = SuperPoly::of_generator(gens, field, g);
    TensorElement t = delta.apply_poly(pg);
    if (!(apply_factorwise(t, {&delta, &id}) == apply_factorwise(t, {&id, &delta})))
      throw InputError("comultiplication is not coassociative at " + gens->gen(g).name);
  }
  std::vector<TensorElement> images;
  images.reserve(gens->count());
  for (int g = 0; g < gens->count(); ++g) {
    SuperPoly pg = SuperPoly::of_generator(gens, field, g);
    TensorElement two = delta.apply_poly(pg);
    TensorElement three = bracket_left ? apply_factorwise(two, {&delta, &id})
                                       : apply_factorwise(two, {&id, &delta});
    images.push_back(apply_factorwise(three, {&id, &antipode, &id}));
  }
  GenHom d3(gens, gens, field, 3, std::move(images));
  return CotrussPresentation{name, gens, field, delta, std::move(d3), counit, std::nullopt};
}

CheckReport check_morphism(const GenHom& phi, const CotrussPresentation& P,
                           const CotrussPresentation& Q) {
  if (!phi.source()->same_as(*P.gens) || !phi.target()->same_as(*Q.gens) ||
      phi.field() != P.field || P.field != Q.field || phi.arity() != 1)
    throw UsageError("morphism shape mismatch");
  CheckReport report;
  for (const auto& v : phi.violations()) report.violations.push_back("map: " + v);

  struct Task {
    std::string name;
    bool scalar = false;
  };
  std::vector<Task> tasks{{"delta2-intertwine", false}, {"delta3-intertwine", false}};
  if (P.counit && Q.counit) tasks.push_back({"counit-compat", true});
  if (P.cozero && Q.cozero) tasks.push_back({"cozero-compat", true});

  for (const auto& task : tasks) {
    CheckItem item;
    item.name = task.name;
    for (int g = 0; g < P.gens->count() && item.holds; ++g) {
      SuperPoly pg = SuperPoly::of_generator(P.gens, P.field, g);
      if (task.name == "delta2-intertwine") {
        TensorElement lhs = Q.delta2.apply_poly(phi.apply_poly(pg).as_poly());
        TensorElement rhs = apply_factorwise(P.delta2.apply_poly(pg), {&phi, &phi});
        if (!(lhs == rhs)) {
          item.holds = false;
          item.witness = P.gens->gen(g).name;
          item.lhs = lhs.to_string();
          item.rhs = rhs.to_string();
        }
      } else if (task.name == "delta3-intertwine") {
        TensorElement lhs = Q.delta3.apply_poly(phi.apply_poly(pg).as_poly());
        TensorElement rhs = apply_factorwise(P.delta3.apply_poly(pg), {&phi, &phi, &phi});
        if (!(lhs == rhs)) {
          item.holds = false;
          item.witness = P.gens->gen(g).name;
          item.lhs = lhs.to_string();
          item.rhs = rhs.to_string();
        }
      } else {
        const GenHom& pm = task.name == "counit-compat" ? *P.counit : *P.cozero;
        const GenHom& qm = task.name == "counit-compat" ? *Q.counit : *Q.cozero;
        Scalar lhs = qm.eval_scalar(phi.apply_poly(pg).as_poly());
        Scalar rhs = pm.eval_scalar(pg);
        if (lhs != rhs) {
          item.holds = false;
          item.witness = P.gens->gen(g).name;
          item.lhs = lhs.to_string();
          item.rhs = rhs.to_string();
        }
      }
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace stx
