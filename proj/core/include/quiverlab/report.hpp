#ifndef QUIVERLAB_REPORT_HPP
#define QUIVERLAB_REPORT_HPP

#include <string>
#include <vector>

namespace quiverlab {

inline constexpr const char* kVersion = "0.1.0";

// One named check inside a report. `expected`/`actual` are preformatted
// strings so callers can render dimensions, counts or labels uniformly;
// `witness` optionally pins down the object behind a verdict (a dimension
// vector, a matrix, a sample point).
struct Check {
  enum class Status { pass, fail, skipped };

  std::string name;
  Status status = Status::pass;
  std::string expected;
  std::string actual;
  std::string witness;

  static Check passed(std::string name, std::string expected, std::string actual,
                      std::string witness = "");
  static Check failed(std::string name, std::string expected, std::string actual,
                      std::string witness = "");
  static Check of(std::string name, bool ok, std::string expected, std::string actual,
                  std::string witness = "");
  static Check skip(std::string name, std::string why);
};

const char* to_string(Check::Status s);

struct Report {
  std::string tool = "quiverlab";
  std::string version;
  std::string command;
  std::vector<Check> checks;
  long long elapsed_ms = 0;

  void add(Check c) { checks.push_back(std::move(c)); }
  bool all_passed() const;   // no fail entries
  bool has_skipped() const;

  // 0 all pass (skips allowed unless strict), 1 any failure or, under
  // strict, any skip
  int exit_code(bool strict = false) const;

  std::string to_json() const;  // stable key order, 2-space indent
  std::string to_text() const;  // one line per check
};

}  // namespace quiverlab

#endif
