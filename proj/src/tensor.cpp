#include "stx/tensor.hpp"

#include <sstream>

#include "stx/errors.hpp"

namespace stx {

TensorMonomial TensorMonomial::unit(const GeneratorSetPtr& gens, int arity) {
  TensorMonomial m;
  m.factors.assign(arity, SuperMonomial::unit(*gens));
  return m;
}

int TensorMonomial::total_parity() const {
  int p = 0;
  for (const auto& f : factors) p ^= f.odd_parity();
  return p;
}

std::string TensorMonomial::to_string(const GeneratorSet& gens) const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " # ";
    s += factors[i].to_string(gens);
  }
  return s;
}

bool TensorOrder::operator()(const TensorMonomial& a, const TensorMonomial& b) const {
  MonomialOrder lt;
  for (size_t i = 0; i < a.factors.size() && i < b.factors.size(); ++i) {
    if (lt(a.factors[i], b.factors[i])) return true;
    if (lt(b.factors[i], a.factors[i])) return false;
  }
  return a.factors.size() < b.factors.size();
}

TensorElement::TensorElement(GeneratorSetPtr gens, Field field, int arity)
    : gens_(std::move(gens)), field_(std::move(field)), arity_(arity) {
  if (arity < 1) throw UsageError("tensor arity must be positive");
}

TensorElement TensorElement::zero(const GeneratorSetPtr& g, const Field& f, int arity) {
  return TensorElement(g, f, arity);
}

TensorElement TensorElement::unit(const GeneratorSetPtr& g, const Field& f, int arity) {
  TensorElement t(g, f, arity);
  t.add_term(TensorMonomial::unit(g, arity), Scalar::one(f));
  return t;
}

TensorElement TensorElement::pure(const std::vector<SuperPoly>& slots) {
  if (slots.empty()) throw UsageError("pure tensor needs at least one slot");
  TensorElement t(slots[0].gens(), slots[0].field(), static_cast<int>(slots.size()));
  std::vector<TensorMonomial> partial{TensorMonomial{}};
  std::vector<Scalar> coeff{Scalar::one(t.field_)};
  for (const auto& p : slots) {
    std::vector<TensorMonomial> next_m;
    std::vector<Scalar> next_c;
    for (size_t k = 0; k < partial.size(); ++k) {
      for (const auto& [m, c] : p.terms()) {
        TensorMonomial ext = partial[k];
        ext.factors.push_back(m);
        next_m.push_back(std::move(ext));
        next_c.push_back(coeff[k] * c);
      }
    }
    partial = std::move(next_m);
    coeff = std::move(next_c);
  }
  for (size_t k = 0; k < partial.size(); ++k) t.add_term(partial[k], coeff[k]);
  return t;
}

void TensorElement::add_term(const TensorMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(m.factors.size()) != arity_) throw UsageError("tensor arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

static void require_shape(const TensorElement& a, const TensorElement& b) {
  if (!a.gens()->same_as(*b.gens()) || a.field() != b.field() || a.arity() != b.arity())
    throw UsageError("tensor shape mismatch");
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  require_shape(*this, o);
  TensorElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  require_shape(*this, o);
  TensorElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c.negated());
  return r;
}

TensorElement TensorElement::negated() const {
  TensorElement r(gens_, field_, arity_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.negated());
  return r;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
  TensorElement r(gens_, field_, arity_);
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) {
    Scalar p = co * c;
    if (!p.is_zero()) r.terms_.emplace(m, p);
  }
  return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
  if (!gens_->same_as(*o.gens_) || field_ != o.field_ || arity_ != o.arity_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (!(a->first == b->first) || a->second != b->second) return false;
  return true;
}

SuperPoly TensorElement::as_poly() const {
  if (arity_ != 1) throw UsageError("as_poly requires arity 1");
  SuperPoly p = SuperPoly::zero(gens_, field_);
  for (const auto& [m, c] : terms_) p.add_term(m.factors[0], c);
  return p;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c.leading_minus()) os << "-";
    } else {
      os << (c.leading_minus() ? " - " : " + ");
    }
    std::string mag = c.magnitude_string();
    std::string body = m.to_string(*gens_);
    bool unit_first = m.factors[0].is_unit();
    if (mag != "1") {
      if (unit_first) {
        // replace the leading "1" slot with the coefficient
        os << mag << body.substr(1);
      } else {
        os << mag << "*" << body;
      }
    } else {
      os << body;
    }
    first = false;
  }
  return os.str();
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  require_shape(a, b);
  TensorElement r(a.gens(), a.field(), a.arity());
  int n = a.arity();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int cross = 0;  // b_i moves left past a_j for i < j
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cross += mb.slot_parity(i) * ma.slot_parity(j);
      int sgn = (cross & 1) ? -1 : 1;
      TensorMonomial prod;
      prod.factors.reserve(n);
      bool dead = false;
      for (int i = 0; i < n && !dead; ++i) {
        auto fi = SuperMonomial::mul(ma.factors[i], mb.factors[i]);
        if (!fi) {
          dead = true;
          break;
        }
        sgn *= fi->second;
        prod.factors.push_back(std::move(fi->first));
      }
      if (dead) continue;
      Scalar c = ca * cb;
      if (sgn < 0) c = c.negated();
      r.add_term(prod, c);
    }
  }
  return r;
}

TensorElement tensor_concat(const TensorElement& a, const TensorElement& b) {
  if (!a.gens()->same_as(*b.gens()) || a.field() != b.field())
    throw UsageError("tensor shape mismatch");
  TensorElement r(a.gens(), a.field(), a.arity() + b.arity());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      TensorMonomial m = ma;
      m.factors.insert(m.factors.end(), mb.factors.begin(), mb.factors.end());
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

TensorElement koszul_permute(const TensorElement& t, const std::vector<int>& out_from,
                             bool graded) {
  if (static_cast<int>(out_from.size()) != t.arity()) throw UsageError("permutation arity mismatch");
  TensorElement r(t.gens(), t.field(), t.arity());
  int n = t.arity();
  for (const auto& [m, c] : t.terms()) {
    int cross = 0;
    if (graded) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (out_from[i] > out_from[j]) cross += m.slot_parity(out_from[i]) * m.slot_parity(out_from[j]);
    }
    TensorMonomial pm;
    pm.factors.reserve(n);
    for (int k = 0; k < n; ++k) pm.factors.push_back(m.factors[out_from[k]]);
    r.add_term(pm, (cross & 1) ? c.negated() : c);
  }
  return r;
}

TensorElement collapse_adjacent(const TensorElement& t, int start, int len) {
  if (start < 0 || len < 1 || start + len > t.arity()) throw UsageError("collapse range out of bounds");
  TensorElement r(t.gens(), t.field(), t.arity() - len + 1);
  for (const auto& [m, c] : t.terms()) {
    SuperMonomial prod = m.factors[start];
    int sgn = 1;
    bool dead = false;
    for (int i = 1; i < len; ++i) {
      auto nx = SuperMonomial::mul(prod, m.factors[start + i]);
      if (!nx) {
        dead = true;
        break;
      }
      prod = std::move(nx->first);
      sgn *= nx->second;
    }
    if (dead) continue;
    TensorMonomial om;
    om.factors.reserve(r.arity());
    for (int i = 0; i < start; ++i) om.factors.push_back(m.factors[i]);
    om.factors.push_back(std::move(prod));
    for (int i = start + len; i < t.arity(); ++i) om.factors.push_back(m.factors[i]);
    r.add_term(om, sgn < 0 ? c.negated() : c);
  }
  return r;
}

namespace {

// c * x1x3x5 with parities taken before multiplying; shared by both interleavings.
struct Interleaved {
  SuperMonomial odd135;
  int sign;
  bool dead;
};

Interleaved fuse135(const TensorMonomial& m) {
  int p2 = m.slot_parity(1), p3 = m.slot_parity(2), p4 = m.slot_parity(3), p5 = m.slot_parity(4);
  int eps = p2 * p3 + p5 * p4 + p5 * p2;
  int sgn = (eps & 1) ? -1 : 1;
  SuperMonomial prod = m.factors[0];
  for (int i : {2, 4}) {
    auto nx = SuperMonomial::mul(prod, m.factors[i]);
    if (!nx) return {SuperMonomial{}, 0, true};
    prod = std::move(nx->first);
    sgn *= nx->second;
  }
  return {std::move(prod), sgn, false};
}

}  // namespace

TensorElement interleave_mul_135(const TensorElement& t6) {
  if (t6.arity() != 6) throw UsageError("expected a 6-fold tensor");
  TensorElement r(t6.gens(), t6.field(), 4);
  for (const auto& [m, c] : t6.terms()) {
    Interleaved f = fuse135(m);
    if (f.dead) continue;
    TensorMonomial om;
    om.factors = {std::move(f.odd135), m.factors[1], m.factors[3], m.factors[5]};
    r.add_term(om, f.sign < 0 ? c.negated() : c);
  }
  return r;
}

TensorElement interleave_mul_246(const TensorElement& t6) {
  if (t6.arity() != 6) throw UsageError("expected a 6-fold tensor");
  TensorElement r(t6.gens(), t6.field(), 4);
  for (const auto& [m, c] : t6.terms()) {
    int p2 = m.slot_parity(1), p3 = m.slot_parity(2), p4 = m.slot_parity(3), p5 = m.slot_parity(4);
    int eps = p2 * p3 + p5 * p4 + p5 * p2;
    int sgn = (eps & 1) ? -1 : 1;
    SuperMonomial prod = m.factors[1];
    bool dead = false;
    for (int i : {3, 5}) {
      auto nx = SuperMonomial::mul(prod, m.factors[i]);
      if (!nx) {
        dead = true;
        break;
      }
      prod = std::move(nx->first);
      sgn *= nx->second;
    }
    if (dead) continue;
    TensorMonomial om;
    om.factors = {m.factors[0], m.factors[2], m.factors[4], std::move(prod)};
    r.add_term(om, sgn < 0 ? c.negated() : c);
  }
  return r;
}

}  // namespace stx
