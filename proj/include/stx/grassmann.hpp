#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stx/scalar.hpp"

namespace stx {

// Test algebra Lambda_n(K): Grassmann algebra on n odd generators xi1..xin.
struct TestAlgebra {
  Field field;
  int odd_dim = 0;

  bool operator==(const TestAlgebra& o) const { return field == o.field && odd_dim == o.odd_dim; }
  bool operator!=(const TestAlgebra& o) const { return !(*this == o); }
  std::string to_string() const;  // "Lambda_2(FP 3)"

  // Dimension of the even (resp. odd) part as a K-vector space.
  std::uint64_t even_dim() const { return odd_dim == 0 ? 1 : 1ull << (odd_dim - 1); }
  std::uint64_t odd_part_dim() const { return odd_dim == 0 ? 0 : 1ull << (odd_dim - 1); }
};

// Element of Lambda_n(K), stored as subset-mask -> nonzero coefficient.
// Bit i of a mask stands for xi_{i+1}; factors are kept in ascending order.
class GrassmannElement {
 public:
  using Terms = std::map<std::uint64_t, Scalar>;

  explicit GrassmannElement(TestAlgebra alg) : alg_(std::move(alg)) {}
  static GrassmannElement zero(const TestAlgebra& a) { return GrassmannElement(a); }
  static GrassmannElement one(const TestAlgebra& a);
  static GrassmannElement constant(const TestAlgebra& a, const Scalar& c);
  static GrassmannElement xi(const TestAlgebra& a, int i);  // 1-based

  const TestAlgebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  void add_term(std::uint64_t mask, const Scalar& c);

  GrassmannElement operator+(const GrassmannElement& o) const;
  GrassmannElement operator-(const GrassmannElement& o) const;
  GrassmannElement operator*(const GrassmannElement& o) const;
  GrassmannElement negated() const;
  GrassmannElement scaled(const Scalar& c) const;
  // Multiplicative inverse; exists iff the scalar part is invertible.
  GrassmannElement inverse() const;

  bool operator==(const GrassmannElement& o) const;
  bool operator!=(const GrassmannElement& o) const { return !(*this == o); }
  int cmp(const GrassmannElement& o) const;  // canonical total order

  Scalar body() const;  // coefficient of the empty mask
  // 0 = even-homogeneous (includes zero), 1 = odd-homogeneous, -1 = mixed.
  int homogeneous_parity() const;

  std::string to_string() const;

 private:
  TestAlgebra alg_;
  Terms terms_;
};

// Sign of reordering xi_A * xi_B into ascending order; masks must be disjoint.
int mask_merge_sign(std::uint64_t a, std::uint64_t b);

// Basis masks of the even/odd part, ascending by mask value.
std::vector<std::uint64_t> even_basis_masks(int odd_dim);
std::vector<std::uint64_t> odd_basis_masks(int odd_dim);

// All elements spanned by the given basis masks, in the deterministic
// counter order (first mask = least significant digit).  Prime fields only.
std::vector<GrassmannElement> enumerate_span(const TestAlgebra& a,
                                             const std::vector<std::uint64_t>& basis);
std::uint64_t span_count(const TestAlgebra& a, size_t basis_size);  // |F|^basis_size

}  // namespace stx
