#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace laysem {

// One verified law.  FAIL entries always carry a witness; PASS entries may
// carry an informational note in the same slot (diagnoses).
struct CheckEntry {
  std::string law;
  bool pass = true;
  std::optional<std::string> witness;
  std::uint64_t examined = 0;
};

class CheckReport {
 public:
  void add_pass(const std::string& law, std::uint64_t examined,
                const std::optional<std::string>& note = std::nullopt);
  void add_fail(const std::string& law, const std::string& witness,
                std::uint64_t examined);
  void merge(const CheckReport& other);

  bool all_pass() const;
  bool passed(const std::string& law) const;
  const CheckEntry* find(const std::string& law) const;
  const std::vector<CheckEntry>& entries() const { return entries_; }

  // One "CHECK <law> PASS|FAIL [witness: ...] [n=<count>]" line per entry,
  // sorted by law name so output is stable regardless of execution order.
  std::string to_text() const;

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace laysem
