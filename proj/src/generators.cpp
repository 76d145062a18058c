#include "stx/generators.hpp"

namespace stx {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

int GeneratorSet::add(Generator g) {
  if (!valid_name(g.name)) throw InputError("invalid generator name: '" + g.name + "'");
  if (index_of(g.name) >= 0) throw InputError("duplicate generator name: '" + g.name + "'");
  int idx = count();
  gens_.push_back(std::move(g));
  even_slot_.push_back(-1);
  odd_pos_.push_back(-1);
  return idx;
}

int GeneratorSet::add_even(const std::string& name) {
  int idx = add(Generator{name});
  even_slot_[idx] = even_slots();
  slot_gen_.push_back(idx);
  return idx;
}

int GeneratorSet::add_odd(const std::string& name) {
  int idx = add(Generator{name, /*odd=*/true});
  odd_pos_[idx] = odd_count();
  odd_gens_.push_back(idx);
  return idx;
}

std::pair<int, int> GeneratorSet::add_invertible(const std::string& name,
                                                 const std::string& inverse_name) {
  int primary = add_even(name);
  int alias = add(Generator{inverse_name});
  gens_[primary].inverse_alias = alias;
  gens_[alias].inverse_of = primary;
  even_slot_[alias] = even_slot_[primary];
  return {primary, alias};
}

int GeneratorSet::index_of(const std::string& name) const {
  for (int i = 0; i < count(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

bool GeneratorSet::same_as(const GeneratorSet& o) const {
  if (count() != o.count()) return false;
  for (int i = 0; i < count(); ++i) {
    const Generator &a = gens_[i], &b = o.gens_[i];
    if (a.name != b.name || a.odd != b.odd || a.inverse_of != b.inverse_of ||
        a.inverse_alias != b.inverse_alias)
      return false;
  }
  return true;
}

GeneratorSetPtr empty_generators() { return std::make_shared<GeneratorSet>(); }

}  // namespace stx
