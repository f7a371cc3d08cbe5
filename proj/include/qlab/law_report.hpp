#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qlab {

struct LawResult {
  std::string law;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;  // first failing instance, empty when passed
};

/// Outcome of an exhaustive or sampled identity check. Laws keep the order in
/// which they were first recorded.
class LawReport {
 public:
  /// Records one instance of `law`. The witness callback is only invoked for
  /// the first failure of each law.
  template <class Witness>
  void record(std::string_view law, bool ok, Witness&& witness) {
    LawResult& r = entry(law);
    ++r.checked;
    if (!ok && r.passed) {
      r.passed = false;
      r.counterexample = witness();
    }
  }
  void record(std::string_view law, bool ok) {
    record(law, ok, [] { return std::string(); });
  }

  /// Index-based variant for hot loops: declare once, record many times.
  std::size_t declare(std::string_view law) {
    entry(law);
    for (std::size_t i = 0; i < results_.size(); ++i) {
      if (results_[i].law == law) return i;
    }
    return results_.size() - 1;
  }
  template <class Witness>
  void record(std::size_t id, bool ok, Witness&& witness) {
    LawResult& r = results_[id];
    ++r.checked;
    if (!ok && r.passed) {
      r.passed = false;
      r.counterexample = witness();
    }
  }

  void merge(const LawReport& other, std::string_view prefix = {});

  const std::vector<LawResult>& results() const noexcept { return results_; }
  const LawResult* find(std::string_view law) const;
  std::size_t failures() const noexcept;
  bool all_passed() const noexcept { return failures() == 0; }
  std::string to_text() const;

 private:
  LawResult& entry(std::string_view law);
  std::vector<LawResult> results_;
};

}  // namespace qlab
