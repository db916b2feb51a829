// Itemized pass/fail/skip reports.  Checks never throw on mathematical
// failure; a violated identity becomes a "fail" item with a witness string.

#ifndef BURNSIDE_REPORT_HPP
#define BURNSIDE_REPORT_HPP

#include <string>
#include <vector>

namespace burnside {

struct CheckItem {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
};

struct CheckReport {
  std::string subject;
  std::vector<CheckItem> items;

  void add(const std::string& name, const std::string& status, const std::string& detail = "") {
    items.push_back({name, status, detail});
  }
  void add_pass(const std::string& name, const std::string& detail = "") { add(name, "pass", detail); }
  void add_fail(const std::string& name, const std::string& detail = "") { add(name, "fail", detail); }
  void add_skip(const std::string& name, const std::string& detail = "") { add(name, "skip", detail); }

  bool has_fail() const {
    for (const auto& it : items)
      if (it.status == "fail") return true;
    return false;
  }
  bool has_skip() const {
    for (const auto& it : items)
      if (it.status == "skip") return true;
    return false;
  }
  // No failures (skips are allowed but must carry a reason).
  bool ok() const { return !has_fail(); }
  // All items passed outright.
  bool all_passed() const { return !has_fail() && !has_skip(); }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }

  std::string summary() const {
    std::string s;
    for (const auto& it : items) {
      s += it.status;
      s += "  ";
      s += it.name;
      if (!it.detail.empty()) {
        s += "  (";
        s += it.detail;
        s += ")";
      }
      s += "\n";
    }
    return s;
  }
};

}  // namespace burnside

#endif  // BURNSIDE_REPORT_HPP
