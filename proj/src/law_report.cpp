#include "qlab/law_report.hpp"

#include <algorithm>
#include <sstream>

namespace qlab {

LawResult& LawReport::entry(std::string_view law) {
  // Reports hold a few dozen laws at most; linear lookup keeps insertion order.
  for (auto it = results_.rbegin(); it != results_.rend(); ++it) {
    if (it->law == law) return *it;
  }
  results_.push_back(LawResult{std::string(law), true, 0, {}});
  return results_.back();
}

void LawReport::merge(const LawReport& other, std::string_view prefix) {
  for (const auto& r : other.results_) {
    LawResult& mine = entry(std::string(prefix) + r.law);
    mine.checked += r.checked;
    if (!r.passed && mine.passed) {
      mine.passed = false;
      mine.counterexample = r.counterexample;
    }
  }
}

const LawResult* LawReport::find(std::string_view law) const {
  auto it = std::find_if(results_.begin(), results_.end(),
                         [&](const LawResult& r) { return r.law == law; });
  return it == results_.end() ? nullptr : &*it;
}

std::size_t LawReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(results_.begin(), results_.end(), [](const LawResult& r) { return !r.passed; }));
}

std::string LawReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results_) {
    os << (r.passed ? "PASS " : "FAIL ") << r.law << " (" << r.checked << " checked)";
    if (!r.passed && !r.counterexample.empty()) os << " counterexample: " << r.counterexample;
    os << '\n';
  }
  os << "failures: " << failures() << '\n';
  return os.str();
}

}  // namespace qlab
