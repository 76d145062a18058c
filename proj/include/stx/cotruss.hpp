#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stx/hom.hpp"

namespace stx {

// Supercommutative presentation with binary and ternary comultiplications,
// plus optional scalar maps giving the unit and absorber at points.
struct CotrussPresentation {
  std::string name;
  GeneratorSetPtr gens;
  Field field;
  GenHom delta2;  // arity 2 endomorphism data
  GenHom delta3;  // arity 3
  std::optional<GenHom> counit;
  std::optional<GenHom> cozero;
};

struct CheckItem {
  std::string name;
  bool holds = true;
  std::string witness;  // element the sides disagree on
  std::string lhs, rhs;  // normal forms when failed
};

struct CheckReport {
  std::vector<std::string> violations;  // well-definedness problems
  std::vector<CheckItem> items;
  bool all_pass() const {
    if (!violations.empty()) return false;
    for (const auto& it : items)
      if (!it.holds) return false;
    return true;
  }
};

struct CheckOptions {
  bool sigma13_graded = true;  // ternary symmetry uses the graded swap
  int random_products = 0;     // extra random degree<=3 elements per axiom
  std::uint64_t seed = 0;
};

// Verify the seven comultiplication laws (and the scalar-map laws when those
// maps are present) on every generator, reporting witnesses for failures.
CheckReport check_axioms(const CotrussPresentation& P, const CheckOptions& opts = {});

// Project out the odd generators; images keep only terms with no odd factor.
CotrussPresentation reduce(const CotrussPresentation& P);

// Build the ternary comultiplication (1 # S # 1) ∘ (Δ # 1) ∘ Δ from Hopf data.
// bracket_left=false uses (1 # Δ) ∘ Δ instead; coassociativity makes them agree.
CotrussPresentation trussify_hopf(const std::string& name, const GeneratorSetPtr& gens,
                                  const Field& field, const GenHom& delta, const GenHom& antipode,
                                  const GenHom& counit, bool bracket_left = true);

// Intertwining of phi with both comultiplications (and scalar maps when both
// presentations carry them), verified on the generators of P.
CheckReport check_morphism(const GenHom& phi, const CotrussPresentation& P,
                           const CotrussPresentation& Q);

// Built-in presentations over the given field.
CotrussPresentation builtin_presentation(const std::string& name, const Field& field);
std::vector<std::string> builtin_names();

// All presentations obtained by flipping the sign of one image term of one
// generator in delta2 or delta3, labeled by what was flipped.
std::vector<std::pair<std::string, CotrussPresentation>> single_sign_mutations(
    const CotrussPresentation& P);

}  // namespace stx
