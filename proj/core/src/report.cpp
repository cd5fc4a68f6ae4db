#include "quiverlab/report.hpp"

#include <sstream>

#include <json.hpp>

namespace quiverlab {

Check Check::passed(std::string name, std::string expected, std::string actual,
                    std::string witness) {
  return Check{std::move(name), Status::pass, std::move(expected), std::move(actual),
               std::move(witness)};
}

Check Check::failed(std::string name, std::string expected, std::string actual,
                    std::string witness) {
  return Check{std::move(name), Status::fail, std::move(expected), std::move(actual),
               std::move(witness)};
}

Check Check::of(std::string name, bool ok, std::string expected, std::string actual,
                std::string witness) {
  return Check{std::move(name), ok ? Status::pass : Status::fail, std::move(expected),
               std::move(actual), std::move(witness)};
}

Check Check::skip(std::string name, std::string why) {
  return Check{std::move(name), Status::skipped, "", "", std::move(why)};
}

const char* to_string(Check::Status s) {
  switch (s) {
    case Check::Status::pass: return "pass";
    case Check::Status::fail: return "fail";
    case Check::Status::skipped: return "skipped";
  }
  return "?";
}

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (c.status == Check::Status::fail) return false;
  return true;
}

bool Report::has_skipped() const {
  for (const auto& c : checks)
    if (c.status == Check::Status::skipped) return true;
  return false;
}

int Report::exit_code(bool strict) const {
  if (!all_passed()) return 1;
  if (strict && has_skipped()) return 1;
  return 0;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = tool;
  j["version"] = version;
  j["command"] = command;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = to_string(c.status);
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["checks"].push_back(std::move(jc));
  }
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << tool << " " << version << ": " << command << "\n";
  for (const auto& c : checks) {
    os << "  [" << to_string(c.status) << "] " << c.name;
    if (c.status == Check::Status::skipped) {
      if (!c.witness.empty()) os << " (" << c.witness << ")";
    } else {
      if (c.expected.empty())
        os << ": " << c.actual;  // informational entry, nothing to compare
      else
        os << ": expected " << c.expected << ", got " << c.actual;
      if (!c.witness.empty()) os << " [" << c.witness << "]";
    }
    os << "\n";
  }
  os << (all_passed() ? "OK" : "FAILED") << " (" << checks.size() << " checks, " << elapsed_ms
     << " ms)\n";
  return os.str();
}

}  // namespace quiverlab
