#include "laysem/report.hpp"

#include <algorithm>
#include <sstream>

namespace laysem {

void CheckReport::add_pass(const std::string& law, std::uint64_t examined,
                           const std::optional<std::string>& note) {
  entries_.push_back({law, true, note, examined});
}

void CheckReport::add_fail(const std::string& law, const std::string& witness,
                           std::uint64_t examined) {
  entries_.push_back({law, false, witness, examined});
}

void CheckReport::merge(const CheckReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool CheckReport::all_pass() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const CheckEntry& e) { return e.pass; });
}

const CheckEntry* CheckReport::find(const std::string& law) const {
  for (const auto& e : entries_)
    if (e.law == law) return &e;
  return nullptr;
}

bool CheckReport::passed(const std::string& law) const {
  const CheckEntry* e = find(law);
  return e != nullptr && e->pass;
}

std::string CheckReport::to_text() const {
  std::vector<CheckEntry> sorted = entries_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckEntry& a, const CheckEntry& b) { return a.law < b.law; });
  std::ostringstream out;
  for (const auto& e : sorted) {
    out << "CHECK " << e.law << ' ' << (e.pass ? "PASS" : "FAIL");
    if (e.witness) out << " [witness: " << *e.witness << ']';
    if (e.examined > 0) out << " [n=" << e.examined << ']';
    out << '\n';
  }
  return out.str();
}

}  // namespace laysem
