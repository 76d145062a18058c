#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stx/errors.hpp"

namespace stx {

struct Generator {
  std::string name;
  bool odd = false;
  int inverse_of = -1;     // >= 0: this is the Laurent alias of gens[inverse_of]
  int inverse_alias = -1;  // >= 0: index of this generator's declared inverse alias
  bool is_alias() const { return inverse_of >= 0; }
  bool invertible() const { return inverse_alias >= 0 || inverse_of >= 0; }
};

// Ordered list of named generators of a free supercommutative algebra.
// Even generators may carry a declared inverse alias; the alias shares the
// primary generator's exponent slot with negated exponents.
class GeneratorSet {
 public:
  int add_even(const std::string& name);
  int add_odd(const std::string& name);
  // Returns (primary index, alias index).
  std::pair<int, int> add_invertible(const std::string& name, const std::string& inverse_name);

  int count() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_[i]; }
  int index_of(const std::string& name) const;  // -1 when absent

  // Exponent slots: one per primary even generator, in declaration order.
  int even_slots() const { return static_cast<int>(slot_gen_.size()); }
  int slot_of(int gen_index) const { return even_slot_[gen_index]; }  // alias maps to partner's slot
  int slot_gen(int slot) const { return slot_gen_[slot]; }
  bool slot_invertible(int slot) const { return gens_[slot_gen_[slot]].invertible(); }

  // Odd generators in declaration order.
  int odd_count() const { return static_cast<int>(odd_gens_.size()); }
  int odd_gen(int pos) const { return odd_gens_[pos]; }
  int odd_pos_of(int gen_index) const { return odd_pos_[gen_index]; }

  bool same_as(const GeneratorSet& o) const;

 private:
  int add(Generator g);
  std::vector<Generator> gens_;
  std::vector<int> even_slot_;  // gen index -> slot, -1 for odd
  std::vector<int> slot_gen_;   // slot -> primary gen index
  std::vector<int> odd_pos_;    // gen index -> odd position, -1 for even
  std::vector<int> odd_gens_;   // odd position -> gen index
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

GeneratorSetPtr empty_generators();

}  // namespace stx
