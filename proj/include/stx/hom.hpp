#pragma once

#include <string>
#include <vector>

#include "stx/tensor.hpp"

namespace stx {

// Parity-preserving algebra map A -> B^{tensor arity}, given on generators.
// Alias (inverse) generators get their images computed from the primary's.
class GenHom {
 public:
  GenHom(GeneratorSetPtr src, GeneratorSetPtr dst, Field field, int arity,
         std::vector<TensorElement> images);
  static GenHom identity(const GeneratorSetPtr& g, const Field& f);

  const GeneratorSetPtr& source() const { return src_; }
  const GeneratorSetPtr& target() const { return dst_; }
  const Field& field() const { return field_; }
  int arity() const { return arity_; }
  const TensorElement& image(int gen_idx) const;

  // Well-definedness problems: parity violations, non-invertible images of
  // invertible generators.  Empty means the map extends to the algebra.
  const std::vector<std::string>& violations() const { return violations_; }

  TensorElement apply_monomial(const SuperMonomial& m) const;
  TensorElement apply_poly(const SuperPoly& p) const;
  // For maps into the scalars (empty target generator set, arity 1).
  Scalar eval_scalar(const SuperPoly& p) const;

 private:
  GeneratorSetPtr src_, dst_;
  Field field_;
  int arity_;
  std::vector<TensorElement> images_;
  std::vector<std::string> violations_;
};

// Apply hom_i to slot i; requires one hom per slot.  All homs are even maps,
// so no Koszul signs arise between slots.
TensorElement apply_factorwise(const TensorElement& t, const std::vector<const GenHom*>& homs);

// Scalar-map slot application: replace slot with eval and keep the rest.
TensorElement apply_scalar_slot(const TensorElement& t, const GenHom& counit_like, int slot);

// h2 after h1 (h1 must have arity 1 and target = h2's source).
GenHom compose(const GenHom& h2, const GenHom& h1);

// Inverse of a one-term tensor whose factors are invertible even monomials.
TensorElement invert_unit_tensor(const TensorElement& t);

}  // namespace stx
