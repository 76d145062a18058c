#pragma once

#include <string>

#include "stx/cotruss.hpp"

namespace stx {

// Parses the line-oriented presentation grammar:
//   scalar QQ | FP <p>
//   gen <name> even [invertible <invname>] | gen <name> odd
//   delta2 / delta3 / counit / cozero block headers, followed by
//   <gen> -> <expr> image lines; an <expr> is a +/- separated sum of terms,
//   each a '#'-separated list of tensor factors (one per block slot), each
//   factor a '*'-separated product of integers, fractions a/b, and
//   generators with optional integer exponents.  ';' starts a comment.
// Well-definedness of every block is checked before returning; all problems
// are raised as ParseError with a 1-based line and column.
CotrussPresentation parse_stx(const std::string& text, const std::string& name = "anonymous");

// Reads a file and parses it; the presentation is named by the file stem.
CotrussPresentation parse_stx_file(const std::string& path);

// One generator-image block in the same expression grammar:
//   map
//     <gen> -> <expr over the target's generators, no '#'>
// Source generators missing an image line are an error.
GenHom parse_morphism(const std::string& text, const GeneratorSetPtr& source,
                      const GeneratorSetPtr& target, const Field& field);
GenHom parse_morphism_file(const std::string& path, const GeneratorSetPtr& source,
                           const GeneratorSetPtr& target, const Field& field);

// Serializes a presentation so that parse_stx(render_stx(P)) is structurally
// equal to P.
std::string render_stx(const CotrussPresentation& P);

// Structural equality: fields, generator list (names, parities, inverse
// pairings), and all block images in normal form.  Names are ignored.
bool presentations_equal(const CotrussPresentation& a, const CotrussPresentation& b);

}  // namespace stx
