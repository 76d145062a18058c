#include "stx/grassmann.hpp"

#include <bit>
#include <sstream>

#include "stx/errors.hpp"

namespace stx {

std::string TestAlgebra::to_string() const {
  return "Lambda_" + std::to_string(odd_dim) + "(" + field.to_string() + ")";
}

GrassmannElement GrassmannElement::one(const TestAlgebra& a) {
  return constant(a, Scalar::one(a.field));
}

GrassmannElement GrassmannElement::constant(const TestAlgebra& a, const Scalar& c) {
  GrassmannElement e(a);
  e.add_term(0, c);
  return e;
}

GrassmannElement GrassmannElement::xi(const TestAlgebra& a, int i) {
  if (i < 1 || i > a.odd_dim) throw UsageError("xi index out of range");
  GrassmannElement e(a);
  e.add_term(1ull << (i - 1), Scalar::one(a.field));
  return e;
}

bool GrassmannElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

void GrassmannElement::add_term(std::uint64_t mask, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
  if (alg_ != o.alg_) throw UsageError("test algebra mismatch");
  GrassmannElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
  if (alg_ != o.alg_) throw UsageError("test algebra mismatch");
  GrassmannElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c.negated());
  return r;
}

int mask_merge_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) throw UsageError("mask_merge_sign: overlapping masks");
  // Each bit of b crosses the bits of a above it.
  int crossings = 0;
  std::uint64_t rest = b;
  while (rest) {
    int bit = std::countr_zero(rest);
    rest &= rest - 1;
    crossings += std::popcount(a >> (bit + 1));
  }
  return (crossings & 1) ? -1 : 1;
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
  if (alg_ != o.alg_) throw UsageError("test algebra mismatch");
  GrassmannElement r(alg_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      if (ma & mb) continue;  // repeated xi annihilates
      Scalar c = ca * cb;
      if (mask_merge_sign(ma, mb) < 0) c = c.negated();
      r.add_term(ma | mb, c);
    }
  }
  return r;
}

GrassmannElement GrassmannElement::negated() const {
  GrassmannElement r(alg_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.negated());
  return r;
}

GrassmannElement GrassmannElement::scaled(const Scalar& c) const {
  GrassmannElement r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) {
    Scalar p = co * c;
    if (!p.is_zero()) r.terms_.emplace(m, p);
  }
  return r;
}

GrassmannElement GrassmannElement::inverse() const {
  Scalar b = body();
  if (b.is_zero()) throw NotInvertibleError("element has zero scalar part");
  Scalar binv = b.inverse();
  // a = b(1 + u) with u nilpotent: a^{-1} = b^{-1} sum_k (-u)^k.
  GrassmannElement u = scaled(binv);
  u.terms_.erase(0);
  GrassmannElement acc = one(alg_);
  GrassmannElement pw = one(alg_);
  for (int k = 1; k <= alg_.odd_dim && !pw.is_zero(); ++k) {
    pw = pw * u.negated();
    acc = acc + pw;
  }
  GrassmannElement r = acc.scaled(binv);
  if (!((*this) * r).is_one()) throw UsageError("inverse verification failed");
  return r;
}

bool GrassmannElement::operator==(const GrassmannElement& o) const {
  return alg_ == o.alg_ && terms_ == o.terms_;
}

int GrassmannElement::cmp(const GrassmannElement& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    int c = a->second.cmp(b->second);
    if (c != 0) return c;
  }
  if (a != terms_.end()) return 1;
  if (b != o.terms_.end()) return -1;
  return 0;
}

Scalar GrassmannElement::body() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Scalar::zero(alg_.field) : it->second;
}

int GrassmannElement::homogeneous_parity() const {
  int parity = -2;
  for (const auto& [m, c] : terms_) {
    int p = std::popcount(m) & 1;
    if (parity == -2) parity = p;
    else if (parity != p) return -1;
  }
  return parity == -2 ? 0 : parity;
}

std::string GrassmannElement::to_string() const {
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
    std::string factors;
    std::uint64_t rest = m;
    while (rest) {
      int bit = std::countr_zero(rest);
      rest &= rest - 1;
      if (!factors.empty()) factors += "*";
      factors += "xi" + std::to_string(bit + 1);
    }
    if (factors.empty()) {
      os << mag;
    } else if (mag == "1") {
      os << factors;
    } else {
      os << mag << "*" << factors;
    }
    first = false;
  }
  return os.str();
}

std::vector<std::uint64_t> even_basis_masks(int odd_dim) {
  std::vector<std::uint64_t> r;
  for (std::uint64_t m = 0; m < (1ull << odd_dim); ++m)
    if ((std::popcount(m) & 1) == 0) r.push_back(m);
  return r;
}

std::vector<std::uint64_t> odd_basis_masks(int odd_dim) {
  std::vector<std::uint64_t> r;
  for (std::uint64_t m = 0; m < (1ull << odd_dim); ++m)
    if (std::popcount(m) & 1) r.push_back(m);
  return r;
}

std::uint64_t span_count(const TestAlgebra& a, size_t basis_size) {
  if (a.field.kind() != FieldKind::Prime) throw UsageError("span_count needs a finite field");
  std::uint64_t n = 1;
  for (size_t i = 0; i < basis_size; ++i) {
    if (n > UINT64_MAX / a.field.modulus()) throw UsageError("span_count overflow");
    n *= a.field.modulus();
  }
  return n;
}

std::vector<GrassmannElement> enumerate_span(const TestAlgebra& a,
                                             const std::vector<std::uint64_t>& basis) {
  if (a.field.kind() != FieldKind::Prime) throw UsageError("enumerate_span needs a finite field");
  std::uint64_t p = a.field.modulus();
  std::uint64_t total = span_count(a, basis.size());
  std::vector<GrassmannElement> out;
  out.reserve(total);
  std::vector<std::uint64_t> digits(basis.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    GrassmannElement e(a);
    for (size_t i = 0; i < basis.size(); ++i)
      if (digits[i]) e.add_term(basis[i], Scalar::of(a.field, static_cast<std::int64_t>(digits[i])));
    out.push_back(std::move(e));
    for (size_t i = 0; i < basis.size(); ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace stx
