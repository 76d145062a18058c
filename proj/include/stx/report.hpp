#pragma once

#include <string>

#include "json.hpp"
#include "stx/cotruss.hpp"
#include "stx/truss_check.hpp"
#include "stx/ybe.hpp"

namespace stx {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// 64-bit FNV-1a of the raw bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

// Machine forms.  Keys are emitted sorted, every field is always present, and
// nothing time-dependent is included, so identical runs serialize identically.
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const TrussReport& r);
nlohmann::json to_json(const YBReport& r);
nlohmann::json to_json(const NondegReport& r);

// Human forms: one aligned verdict line per check, indented witness lines on
// failures.  No header or timing; the caller owns the envelope.
std::string render_text(const CheckReport& r);
std::string render_text(const TrussReport& r);
std::string render_text(const YBReport& r);
std::string render_text(const NondegReport& r);

}  // namespace stx
