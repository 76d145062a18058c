#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stx/generators.hpp"
#include "stx/scalar.hpp"

namespace stx {

// Normal-form monomial: exponents for the even generator slots (negative only
// on invertible slots) and a strictly ascending list of odd generator
// positions.  A product of two odd factors with a common position is zero.
struct SuperMonomial {
  std::vector<int> even_exponents;
  std::vector<int> odd_support;

  static SuperMonomial unit(const GeneratorSet& gens);
  static SuperMonomial of_generator(const GeneratorSet& gens, int gen_index);

  bool is_unit() const;
  bool odd_parity() const { return odd_support.size() % 2 != 0; }

  // Product with the Koszul sign from interleaving odd factors;
  // nullopt when a repeated odd factor annihilates the product.
  static std::optional<std::pair<SuperMonomial, int>> mul(const SuperMonomial& a,
                                                          const SuperMonomial& b);

  bool operator==(const SuperMonomial& o) const {
    return even_exponents == o.even_exponents && odd_support == o.odd_support;
  }
  std::string to_string(const GeneratorSet& gens) const;
};

// Canonical term order: higher even exponent vectors first (lexicographic by
// slot), then odd supports ascending lexicographically.
struct MonomialOrder {
  bool operator()(const SuperMonomial& a, const SuperMonomial& b) const;
};

// Element of the free supercommutative algebra on a GeneratorSet, as a
// canonically ordered terms map with nonzero coefficients.
class SuperPoly {
 public:
  using Terms = std::map<SuperMonomial, Scalar, MonomialOrder>;

  SuperPoly(GeneratorSetPtr gens, Field field) : gens_(std::move(gens)), field_(field) {}
  static SuperPoly zero(GeneratorSetPtr gens, Field field) { return SuperPoly(std::move(gens), field); }
  static SuperPoly unit(GeneratorSetPtr gens, Field field);
  static SuperPoly of_generator(GeneratorSetPtr gens, Field field, int gen_index);
  static SuperPoly constant(GeneratorSetPtr gens, const Scalar& c);

  const GeneratorSetPtr& gens() const { return gens_; }
  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;

  void add_term(const SuperMonomial& m, const Scalar& c);

  SuperPoly operator+(const SuperPoly& o) const;
  SuperPoly operator-(const SuperPoly& o) const;
  SuperPoly operator*(const SuperPoly& o) const;
  SuperPoly negated() const;
  SuperPoly scaled(const Scalar& c) const;

  bool operator==(const SuperPoly& o) const;
  bool operator!=(const SuperPoly& o) const { return !(*this == o); }

  // (even part, odd part)
  std::pair<SuperPoly, SuperPoly> parity_split() const;
  // 0 = even-homogeneous (includes zero), 1 = odd-homogeneous, -1 = mixed.
  int homogeneous_parity() const;

  std::string to_string() const;

 private:
  void require_compatible(const SuperPoly& o) const;
  GeneratorSetPtr gens_;
  Field field_;
  Terms terms_;
};

SuperPoly pow(const SuperPoly& base, int exponent);  // exponent >= 0

}  // namespace stx
