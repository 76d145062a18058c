#include "stx/hom.hpp"

#include "stx/errors.hpp"

namespace stx {

TensorElement invert_unit_tensor(const TensorElement& t) {
  if (t.terms().size() != 1) throw NotInvertibleError("not a one-term tensor");
  const auto& [m, c] = *t.terms().begin();
  TensorMonomial inv;
  inv.factors.reserve(m.factors.size());
  for (const auto& f : m.factors) {
    if (!f.odd_support.empty()) throw NotInvertibleError("odd factor is not invertible");
    SuperMonomial g = f;
    for (size_t s = 0; s < g.even_exponents.size(); ++s) {
      if (g.even_exponents[s] != 0 && !t.gens()->slot_invertible(s))
        throw NotInvertibleError("factor involves a non-invertible generator");
      g.even_exponents[s] = -g.even_exponents[s];
    }
    inv.factors.push_back(std::move(g));
  }
  TensorElement r(t.gens(), t.field(), t.arity());
  r.add_term(inv, c.inverse());
  if (!(tensor_mul(t, r) == TensorElement::unit(t.gens(), t.field(), t.arity())))
    throw UsageError("unit tensor inversion failed verification");
  return r;
}

GenHom::GenHom(GeneratorSetPtr src, GeneratorSetPtr dst, Field field, int arity,
               std::vector<TensorElement> images)
    : src_(std::move(src)), dst_(std::move(dst)), field_(std::move(field)), arity_(arity),
      images_(std::move(images)) {
  if (images_.size() != static_cast<size_t>(src_->count()))
    throw UsageError("one image per generator required");
  for (const auto& im : images_)
    if (!im.gens()->same_as(*dst_) || im.field() != field_ || im.arity() != arity_)
      throw UsageError("image shape mismatch");
  for (int g = 0; g < src_->count(); ++g) {
    const Generator& gen = src_->gen(g);
    if (gen.is_alias()) continue;
    int want = gen.odd ? 1 : 0;
    for (const auto& [m, c] : images_[g].terms()) {
      if (m.total_parity() != want) {
        violations_.push_back("image of " + gen.name + " must be " +
                              (gen.odd ? std::string("odd") : std::string("even")) +
                              "-homogeneous");
        break;
      }
    }
    if (gen.invertible()) {
      try {
        images_[gen.inverse_alias] = invert_unit_tensor(images_[g]);
      } catch (const NotInvertibleError&) {
        violations_.push_back("image of invertible generator " + gen.name +
                              " is not invertible");
        images_[gen.inverse_alias] = TensorElement::zero(dst_, field_, arity_);
      }
    }
  }
}

GenHom GenHom::identity(const GeneratorSetPtr& g, const Field& f) {
  std::vector<TensorElement> images;
  images.reserve(g->count());
  for (int i = 0; i < g->count(); ++i)
    images.push_back(TensorElement::pure({SuperPoly::of_generator(g, f, i)}));
  return GenHom(g, g, f, 1, std::move(images));
}

const TensorElement& GenHom::image(int gen_idx) const {
  if (gen_idx < 0 || gen_idx >= static_cast<int>(images_.size()))
    throw UsageError("generator index out of range");
  return images_[gen_idx];
}

TensorElement GenHom::apply_monomial(const SuperMonomial& m) const {
  TensorElement acc = TensorElement::unit(dst_, field_, arity_);
  for (size_t slot = 0; slot < m.even_exponents.size(); ++slot) {
    int e = m.even_exponents[slot];
    if (e == 0) continue;
    int primary = src_->slot_gen(static_cast<int>(slot));
    int idx = primary;
    if (e < 0) {
      idx = src_->gen(primary).inverse_alias;
      if (idx < 0) throw UsageError("negative exponent on non-invertible generator");
      // a genuine inverse image is a unit, never zero
      if (images_[idx].is_zero())
        throw NotInvertibleError("image of " + src_->gen(primary).name + " is not invertible");
      e = -e;
    }
    for (int k = 0; k < e; ++k) acc = tensor_mul(acc, images_[idx]);
  }
  for (int pos : m.odd_support)
    acc = tensor_mul(acc, images_[src_->odd_gen(pos)]);
  return acc;
}

TensorElement GenHom::apply_poly(const SuperPoly& p) const {
  if (!p.gens()->same_as(*src_) || p.field() != field_) throw UsageError("hom domain mismatch");
  TensorElement r = TensorElement::zero(dst_, field_, arity_);
  for (const auto& [m, c] : p.terms()) r = r + apply_monomial(m).scaled(c);
  return r;
}

Scalar GenHom::eval_scalar(const SuperPoly& p) const {
  if (dst_->count() != 0 || arity_ != 1) throw UsageError("eval_scalar needs a scalar-valued map");
  TensorElement t = apply_poly(p);
  if (t.is_zero()) return Scalar::zero(field_);
  return t.terms().begin()->second;
}

TensorElement apply_factorwise(const TensorElement& t, const std::vector<const GenHom*>& homs) {
  if (homs.size() != static_cast<size_t>(t.arity())) throw UsageError("one hom per slot required");
  int out_arity = 0;
  for (const GenHom* h : homs) {
    if (!h->source()->same_as(*t.gens()) || h->field() != t.field())
      throw UsageError("hom domain mismatch");
    out_arity += h->arity();
  }
  TensorElement r = TensorElement::zero(homs[0]->target(), t.field(), out_arity);
  for (const auto& [m, c] : t.terms()) {
    TensorElement acc = homs[0]->apply_monomial(m.factors[0]);
    for (size_t i = 1; i < homs.size(); ++i)
      acc = tensor_concat(acc, homs[i]->apply_monomial(m.factors[i]));
    r = r + acc.scaled(c);
  }
  return r;
}

TensorElement apply_scalar_slot(const TensorElement& t, const GenHom& counit_like, int slot) {
  if (t.arity() < 2) throw UsageError("need at least two slots");
  if (slot < 0 || slot >= t.arity()) throw UsageError("slot out of range");
  TensorElement r = TensorElement::zero(t.gens(), t.field(), t.arity() - 1);
  for (const auto& [m, c] : t.terms()) {
    SuperPoly f = SuperPoly::zero(t.gens(), t.field());
    f.add_term(m.factors[slot], Scalar::one(t.field()));
    Scalar val = counit_like.eval_scalar(f);
    if (val.is_zero()) continue;
    TensorMonomial om;
    om.factors.reserve(t.arity() - 1);
    for (int i = 0; i < t.arity(); ++i)
      if (i != slot) om.factors.push_back(m.factors[i]);
    r.add_term(om, c * val);
  }
  return r;
}

GenHom compose(const GenHom& h2, const GenHom& h1) {
  if (h1.arity() != 1) throw UsageError("inner map must land in one slot");
  if (!h1.target()->same_as(*h2.source()) || h1.field() != h2.field())
    throw UsageError("composition shape mismatch");
  std::vector<TensorElement> images;
  images.reserve(h1.source()->count());
  for (int g = 0; g < h1.source()->count(); ++g)
    images.push_back(h2.apply_poly(h1.image(g).as_poly()));
  return GenHom(h1.source(), h2.target(), h1.field(), h2.arity(), std::move(images));
}

}  // namespace stx
