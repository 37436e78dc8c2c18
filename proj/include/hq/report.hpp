#pragma once
// Structured verification reports: one entry per checked law, with a witness
// string on failure. Used by every verifier in the library.
#include <map>
#include <string>
#include <vector>

namespace hq {

struct Check {
  std::string id;
  bool pass = true;
  std::string witness;  // empty on pass
};

struct Report {
  std::vector<Check> checks;
  std::map<int, int> dims;  // degree -> dimension, when applicable

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(const std::string& id, bool pass, const std::string& witness = "") {
    checks.push_back({id, pass, pass ? "" : witness});
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks) checks.push_back({prefix + c.id, c.pass, c.witness});
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.id + (c.witness.empty() ? "" : (": " + c.witness));
    return "";
  }
};

}  // namespace hq
