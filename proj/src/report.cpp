#include "stx/report.hpp"

#include <cstdio>
#include <sstream>

namespace stx {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckItem& it : r.items)
    checks.push_back({{"name", it.name},
                      {"holds", it.holds},
                      {"witness", it.witness},
                      {"lhs", it.lhs},
                      {"rhs", it.rhs}});
  return {{"violations", r.violations}, {"checks", checks}, {"all_pass", r.all_pass()}};
}

nlohmann::json to_json(const TrussReport& r) {
  nlohmann::json ids = nlohmann::json::array();
  for (const IdentityResult& it : r.identities)
    ids.push_back({{"name", it.name},
                   {"arity", it.arity},
                   {"domain", it.domain},
                   {"checked", it.checked},
                   {"exhaustive", it.exhaustive},
                   {"failures", it.failures},
                   {"holds", it.holds},
                   {"skipped", it.skipped},
                   {"note", it.note},
                   {"witness", it.witness}});
  return {{"presentation", r.presentation}, {"algebra", r.algebra},
          {"mode", r.mode},                 {"point_count", r.point_count},
          {"point_evals", r.point_evals},   {"seed", r.seed},
          {"identities", ids},              {"all_pass", r.all_pass()}};
}

nlohmann::json to_json(const YBReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const YBCheckItem& it : r.checks)
    checks.push_back({{"equation", it.equation},
                      {"domain", it.domain},
                      {"checked", it.checked},
                      {"exhaustive", it.exhaustive},
                      {"failures", it.failures},
                      {"holds", it.holds},
                      {"witness", it.witness}});
  return {{"map_kind", r.map_kind},       {"presentation", r.presentation},
          {"algebra", r.algebra},         {"mode", r.mode},
          {"point_count", r.point_count}, {"point_evals", r.point_evals},
          {"seed", r.seed},               {"checks", checks},
          {"all_pass", r.all_pass()}};
}

nlohmann::json to_json(const NondegReport& r) {
  return {{"map_kind", r.map_kind},
          {"presentation", r.presentation},
          {"algebra", r.algebra},
          {"point_count", r.point_count},
          {"left_nondegenerate", r.left_nondegenerate},
          {"right_nondegenerate", r.right_nondegenerate},
          {"left_witness", r.left_witness},
          {"right_witness", r.right_witness},
          {"nondegenerate", r.nondegenerate()}};
}

namespace {

void verdict_line(std::ostringstream& os, const std::string& name, const std::string& verdict,
                  const std::string& tail) {
  os << "  " << name;
  for (size_t i = name.size(); i < 24; ++i) os << ' ';
  os << ' ' << verdict;
  if (!tail.empty()) os << "  " << tail;
  os << '\n';
}

std::string count_tail(std::uint64_t checked, std::uint64_t domain, bool exhaustive,
                       std::uint64_t failures) {
  std::ostringstream t;
  if (exhaustive)
    t << checked << " tuples";
  else if (domain == 0)  // infinite point set
    t << checked << " tuples (sampled)";
  else
    t << checked << " of " << domain << " tuples (sampled)";
  if (failures) t << ", " << failures << " fail";
  return t.str();
}

}  // namespace

std::string render_text(const CheckReport& r) {
  std::ostringstream os;
  for (const std::string& v : r.violations) os << "  violation: " << v << '\n';
  for (const CheckItem& it : r.items) {
    verdict_line(os, it.name, it.holds ? "ok" : "FAIL", "");
    if (!it.holds) {
      os << "      witness: " << it.witness << '\n';
      os << "      lhs: " << it.lhs << '\n';
      os << "      rhs: " << it.rhs << '\n';
    }
  }
  return os.str();
}

std::string render_text(const TrussReport& r) {
  std::ostringstream os;
  os << "  presentation " << r.presentation << " over " << r.algebra << ": ";
  if (r.point_count > 0) os << r.point_count << " points, ";
  os << r.point_evals << " point evaluations, mode " << r.mode;
  if (r.mode == "sampled") os << " (seed " << r.seed << ")";
  os << '\n';
  for (const IdentityResult& it : r.identities) {
    if (it.skipped) {
      verdict_line(os, it.name, "skip", it.note);
      continue;
    }
    verdict_line(os, it.name, it.holds ? "ok" : "FAIL",
                 count_tail(it.checked, it.domain, it.exhaustive, it.failures));
    if (!it.holds) os << "      witness: " << it.witness << '\n';
  }
  return os.str();
}

std::string render_text(const YBReport& r) {
  std::ostringstream os;
  os << "  map " << r.map_kind << " on " << r.presentation << " over " << r.algebra << ": ";
  if (r.point_count > 0) os << r.point_count << " points, ";
  os << r.point_evals << " point evaluations, mode " << r.mode;
  if (r.mode == "sampled") os << " (seed " << r.seed << ")";
  os << '\n';
  for (const YBCheckItem& it : r.checks) {
    verdict_line(os, it.equation, it.holds ? "ok" : "FAIL",
                 count_tail(it.checked, it.domain, it.exhaustive, it.failures));
    if (!it.holds) os << "      witness: " << it.witness << '\n';
  }
  return os.str();
}

std::string render_text(const NondegReport& r) {
  std::ostringstream os;
  verdict_line(os, "left-nondegenerate", r.left_nondegenerate ? "yes" : "no", "");
  if (!r.left_nondegenerate) os << "      " << r.left_witness << '\n';
  verdict_line(os, "right-nondegenerate", r.right_nondegenerate ? "yes" : "no", "");
  if (!r.right_nondegenerate) os << "      " << r.right_witness << '\n';
  return os.str();
}

}  // namespace stx
