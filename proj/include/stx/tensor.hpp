#pragma once

#include <map>
#include <string>
#include <vector>

#include "stx/poly.hpp"

namespace stx {

// One term of an n-fold tensor power: a monomial in each slot.
struct TensorMonomial {
  std::vector<SuperMonomial> factors;

  static TensorMonomial unit(const GeneratorSetPtr& gens, int arity);
  int slot_parity(size_t i) const { return factors[i].odd_parity(); }
  int total_parity() const;
  bool operator==(const TensorMonomial& o) const { return factors == o.factors; }
  std::string to_string(const GeneratorSet& gens) const;
};

struct TensorOrder {
  bool operator()(const TensorMonomial& a, const TensorMonomial& b) const;
};

// Element of A^{tensor arity} with canonical term order.
class TensorElement {
 public:
  using Terms = std::map<TensorMonomial, Scalar, TensorOrder>;

  TensorElement(GeneratorSetPtr gens, Field field, int arity);
  static TensorElement zero(const GeneratorSetPtr& g, const Field& f, int arity);
  static TensorElement unit(const GeneratorSetPtr& g, const Field& f, int arity);
  // a_1 tensor ... tensor a_n, expanded distributively (no signs arise).
  static TensorElement pure(const std::vector<SuperPoly>& slots);

  const GeneratorSetPtr& gens() const { return gens_; }
  const Field& field() const { return field_; }
  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TensorMonomial& m, const Scalar& c);

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement negated() const;
  TensorElement scaled(const Scalar& c) const;
  bool operator==(const TensorElement& o) const;
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

  // Slot asPoly: the element must be arity 1.
  SuperPoly as_poly() const;

  std::string to_string() const;

 private:
  GeneratorSetPtr gens_;
  Field field_;
  int arity_;
  Terms terms_;
};

// Componentwise product with the sign rule
// (a1#..#an)(b1#..#bn) = (-1)^{sum_{i<j} |b_i||a_j|} a1b1 # .. # anbn.
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

// Concatenation (a1#..#am) tensor (b1#..#bn); no factors cross, no sign.
TensorElement tensor_concat(const TensorElement& a, const TensorElement& b);

// Reorder factors: output slot k receives input factor out_from[k] (0-based).
// graded = true inserts the sign (-1)^{|a||b|} per transposed odd pair.
TensorElement koszul_permute(const TensorElement& t, const std::vector<int>& out_from, bool graded);

// Multiply len adjacent slots [start, start+len) into one.
TensorElement collapse_adjacent(const TensorElement& t, int start, int len);

// x1#..#x6 -> (-1)^eps (x1x3x5) # x2 # x4 # x6,  eps = |x2||x3| + |x5||x4| + |x5||x2|.
TensorElement interleave_mul_135(const TensorElement& t6);
// x1#..#x6 -> (-1)^eps x1 # x3 # x5 # (x2x4x6), same eps.
TensorElement interleave_mul_246(const TensorElement& t6);

}  // namespace stx
