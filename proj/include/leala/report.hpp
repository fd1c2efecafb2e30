#pragma once

#include <string>
#include <vector>

namespace leala {

enum class Verdict { pass, fail, inconclusive_at_window };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive-at-window";
  }
}

/// Machine-readable result of one checker run. A fail always carries at
/// least one witness; notes carry coverage caveats (e.g. how many triples
/// escaped the window).
struct CheckReport {
  std::string check_name;
  Verdict verdict = Verdict::pass;
  std::vector<std::string> witnesses;
  std::string window;
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }

  void fail_with(std::string witness) {
    verdict = Verdict::fail;
    witnesses.push_back(std::move(witness));
  }
};

} // namespace leala
