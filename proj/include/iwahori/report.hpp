#pragma once

#include <string>
#include <vector>

namespace iwahori {

/// Pass/fail count for one family of identities, with the first few
/// failing witnesses kept for diagnostics.
struct Tally {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> witnesses;

  void record(bool ok, const std::string& witness) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness);
    }
  }
  bool ok() const { return failed == 0 && passed > 0; }

  static constexpr std::size_t kMaxWitnesses = 5;
};

struct SuiteReport {
  std::string suite;
  std::vector<Tally> tallies;

  bool ok() const {
    for (const auto& t : tallies) {
      if (!t.ok()) return false;
    }
    return !tallies.empty();
  }
  const Tally* find(const std::string& name) const {
    for (const auto& t : tallies) {
      if (t.name == name) return &t;
    }
    return nullptr;
  }
  Tally& tally(const std::string& name) {
    for (auto& t : tallies) {
      if (t.name == name) return t;
    }
    return tallies.emplace_back(Tally{name, 0, 0, {}});
  }
};

}  // namespace iwahori
