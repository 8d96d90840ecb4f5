#pragma once

#include <string>
#include <vector>

namespace mfx {

/// Outcome of a bounded check: pass/fail, the first failure, and one line per
/// individual test performed.
struct Report {
  bool ok = true;
  std::string failure;
  std::vector<std::string> lines;

  void note(std::string line) { lines.push_back(std::move(line)); }
  void fail(std::string what) {
    if (ok) failure = what;
    ok = false;
    lines.push_back("FAIL " + std::move(what));
  }
  /// Records a check and returns its outcome.
  bool expect(bool cond, const std::string& what) {
    if (cond)
      note("ok " + what);
    else
      fail(what);
    return cond;
  }
  void absorb(const Report& other, const std::string& prefix = "") {
    for (const auto& l : other.lines) lines.push_back(prefix + l);
    if (!other.ok && ok) {
      ok = false;
      failure = prefix + other.failure;
    }
  }
  explicit operator bool() const { return ok; }
};

}  // namespace mfx
