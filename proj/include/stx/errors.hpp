#pragma once

#include <stdexcept>
#include <string>

namespace stx {

// Problems with user-supplied input (files, flags, presentation data).
// The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure with a source position.  line/col are 1-based.
class ParseError : public InputError {
 public:
  ParseError(int line, int col, const std::string& msg)
      : InputError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Element has no inverse in its algebra (zero denominator, nilpotent body, ...).
class NotInvertibleError : public InputError {
 public:
  explicit NotInvertibleError(const std::string& msg) : InputError(msg) {}
};

// Work limit exceeded (point enumeration, table building).
class BudgetError : public InputError {
 public:
  explicit BudgetError(const std::string& msg) : InputError(msg) {}
};

// A required optional structure map (counit / cozero) is absent.
class MissingMapError : public InputError {
 public:
  explicit MissingMapError(const std::string& msg) : InputError(msg) {}
};

// Point enumeration requested over an infinite scalar field.
class InfiniteBaseError : public InputError {
 public:
  explicit InfiniteBaseError(const std::string& msg) : InputError(msg) {}
};

// Map-catalogue constructor refused the requested map on this input.
// The CLI reports the reason and exits 1 (a verified negative, not a usage error).
class MapRefusedError : public std::runtime_error {
 public:
  MapRefusedError(std::string reason_code, const std::string& msg)
      : std::runtime_error(msg), code(std::move(reason_code)) {}
  std::string code;  // "NotMultiplicative" | "NotGroupLike"
};

// Violations of internal API contracts (mismatched ambients, bad arity).
class UsageError : public std::logic_error {
 public:
  explicit UsageError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace stx
