#include "stx/poly.hpp"

#include <sstream>

namespace stx {

SuperMonomial SuperMonomial::unit(const GeneratorSet& gens) {
  SuperMonomial m;
  m.even_exponents.assign(gens.even_slots(), 0);
  return m;
}

SuperMonomial SuperMonomial::of_generator(const GeneratorSet& gens, int gen_index) {
  SuperMonomial m = unit(gens);
  const Generator& g = gens.gen(gen_index);
  if (g.odd) {
    m.odd_support.push_back(gens.odd_pos_of(gen_index));
  } else {
    m.even_exponents[gens.slot_of(gen_index)] = g.is_alias() ? -1 : 1;
  }
  return m;
}

bool SuperMonomial::is_unit() const {
  for (int e : even_exponents)
    if (e != 0) return false;
  return odd_support.empty();
}

std::optional<std::pair<SuperMonomial, int>> SuperMonomial::mul(const SuperMonomial& a,
                                                                const SuperMonomial& b) {
  SuperMonomial out;
  out.even_exponents.resize(a.even_exponents.size());
  for (size_t i = 0; i < a.even_exponents.size(); ++i)
    out.even_exponents[i] = a.even_exponents[i] + b.even_exponents[i];

  // Merge ascending odd supports, counting crossings of b-factors past
  // larger a-factors; a repeated factor kills the term.
  out.odd_support.reserve(a.odd_support.size() + b.odd_support.size());
  size_t ia = 0, ib = 0;
  long crossings = 0;
  while (ia < a.odd_support.size() && ib < b.odd_support.size()) {
    if (a.odd_support[ia] == b.odd_support[ib]) return std::nullopt;
    if (a.odd_support[ia] < b.odd_support[ib]) {
      out.odd_support.push_back(a.odd_support[ia++]);
    } else {
      crossings += static_cast<long>(a.odd_support.size() - ia);
      out.odd_support.push_back(b.odd_support[ib++]);
    }
  }
  while (ia < a.odd_support.size()) out.odd_support.push_back(a.odd_support[ia++]);
  while (ib < b.odd_support.size()) out.odd_support.push_back(b.odd_support[ib++]);
  return std::make_pair(std::move(out), crossings % 2 == 0 ? 1 : -1);
}

std::string SuperMonomial::to_string(const GeneratorSet& gens) const {
  std::ostringstream os;
  bool first = true;
  for (size_t slot = 0; slot < even_exponents.size(); ++slot) {
    int e = even_exponents[slot];
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    os << gens.gen(gens.slot_gen(static_cast<int>(slot))).name;
    if (e != 1) os << "^" << e;
  }
  for (int pos : odd_support) {
    if (!first) os << "*";
    first = false;
    os << gens.gen(gens.odd_gen(pos)).name;
  }
  if (first) return "1";
  return os.str();
}

bool MonomialOrder::operator()(const SuperMonomial& a, const SuperMonomial& b) const {
  // higher exponent vector renders first
  for (size_t i = 0; i < a.even_exponents.size(); ++i) {
    if (a.even_exponents[i] != b.even_exponents[i]) return a.even_exponents[i] > b.even_exponents[i];
  }
  return a.odd_support < b.odd_support;
}

SuperPoly SuperPoly::unit(GeneratorSetPtr gens, Field field) {
  SuperPoly p(gens, field);
  p.add_term(SuperMonomial::unit(*gens), Scalar::one(field));
  return p;
}

SuperPoly SuperPoly::of_generator(GeneratorSetPtr gens, Field field, int gen_index) {
  SuperPoly p(gens, field);
  p.add_term(SuperMonomial::of_generator(*gens, gen_index), Scalar::one(field));
  return p;
}

SuperPoly SuperPoly::constant(GeneratorSetPtr gens, const Scalar& c) {
  SuperPoly p(gens, c.field());
  p.add_term(SuperMonomial::unit(*gens), c);
  return p;
}

bool SuperPoly::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second.is_one();
}

void SuperPoly::add_term(const SuperMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  Scalar s = it->second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

void SuperPoly::require_compatible(const SuperPoly& o) const {
  if (field_ != o.field_) throw UsageError("polynomial field mismatch");
  if (gens_.get() != o.gens_.get() && !gens_->same_as(*o.gens_))
    throw UsageError("polynomial generator-set mismatch");
}

SuperPoly SuperPoly::operator+(const SuperPoly& o) const {
  require_compatible(o);
  SuperPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

SuperPoly SuperPoly::operator-(const SuperPoly& o) const {
  require_compatible(o);
  SuperPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c.negated());
  return out;
}

SuperPoly SuperPoly::operator*(const SuperPoly& o) const {
  require_compatible(o);
  SuperPoly out(gens_, field_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      auto prod = SuperMonomial::mul(ma, mb);
      if (!prod) continue;
      Scalar c = ca * cb;
      if (prod->second < 0) c = c.negated();
      out.add_term(prod->first, c);
    }
  }
  return out;
}

SuperPoly SuperPoly::negated() const {
  SuperPoly out(gens_, field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.negated());
  return out;
}

SuperPoly SuperPoly::scaled(const Scalar& s) const {
  SuperPoly out(gens_, field_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.add_term(m, c * s);
  return out;
}

bool SuperPoly::operator==(const SuperPoly& o) const {
  require_compatible(o);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  }
  return true;
}

std::pair<SuperPoly, SuperPoly> SuperPoly::parity_split() const {
  SuperPoly even(gens_, field_), odd(gens_, field_);
  for (const auto& [m, c] : terms_) (m.odd_parity() ? odd : even).terms_.emplace(m, c);
  return {even, odd};
}

int SuperPoly::homogeneous_parity() const {
  if (terms_.empty()) return 0;
  bool odd = terms_.begin()->first.odd_parity();
  for (const auto& [m, c] : terms_)
    if (m.odd_parity() != odd) return -1;
  return odd ? 1 : 0;
}

std::string SuperPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c.leading_minus();
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mag = c.magnitude_string();
    std::string ms = m.to_string(*gens_);
    if (ms == "1")
      os << mag;
    else if (mag == "1")
      os << ms;
    else
      os << mag << "*" << ms;
  }
  return os.str();
}

SuperPoly pow(const SuperPoly& base, int exponent) {
  if (exponent < 0) throw UsageError("pow: negative exponent on polynomial");
  SuperPoly acc = SuperPoly::unit(base.gens(), base.field());
  for (int i = 0; i < exponent; ++i) acc = acc * base;
  return acc;
}

}  // namespace stx
